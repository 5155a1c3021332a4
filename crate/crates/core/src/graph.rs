//! Weighted graphs whose shortest-path distances define a metric.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::metric::Metric;
use crate::rational::{is_nonneg, Rational};

/// Vertex label: which agent or item sits on the vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Agent(usize),
    Item(usize),
}

/// Undirected graph with nonnegative rational edge weights. Every vertex
/// carries exactly one agent or item label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize, Rational)>,
}

impl WeightedGraph {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        WeightedGraph {
            vertices,
            edges: Vec::new(),
        }
    }

    /// Graph on `n` agents followed by `n` items, so vertex ids coincide
    /// with metric point indices.
    pub fn with_points(n: usize) -> Self {
        let vertices = (0..n)
            .map(Vertex::Agent)
            .chain((0..n).map(Vertex::Item))
            .collect();
        WeightedGraph::new(vertices)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: Rational) -> Result<()> {
        if u >= self.vertices.len() || v >= self.vertices.len() {
            return Err(invalid(format!("edge ({u},{v}) names a missing vertex")));
        }
        if !is_nonneg(&w) {
            return Err(invalid(format!("edge ({u},{v}) has a negative weight")));
        }
        self.edges.push((u, v, w));
        Ok(())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, Rational)] {
        &self.edges
    }

    /// Vertex id carrying `label`, if any.
    pub fn find(&self, label: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&v| v == label)
    }
}

/// Exact all-pairs shortest-path distances, arranged as a metric over the
/// labelled agents and items.
///
/// Labels must cover `Agent(0..n)` and `Item(0..n)` exactly once each.
pub fn metric_from_graph(g: &WeightedGraph) -> Result<Metric> {
    let size = g.vertices().len();
    if size == 0 || size % 2 != 0 {
        return Err(invalid("graph must carry n agents and n items"));
    }
    let n = size / 2;
    // point index of each vertex
    let mut point = vec![usize::MAX; size];
    let mut seen = vec![false; size];
    for (v, label) in g.vertices().iter().enumerate() {
        let p = match *label {
            Vertex::Agent(i) if i < n => i,
            Vertex::Item(j) if j < n => n + j,
            other => return Err(invalid(format!("label {other:?} out of range"))),
        };
        if core::mem::replace(&mut seen[p], true) {
            return Err(invalid(format!("label {label:?} used twice")));
        }
        point[v] = p;
    }

    let mut dist: Vec<Option<Rational>> = vec![None; size * size];
    for p in 0..size {
        dist[p * size + p] = Some(Rational::zero());
    }
    for (u, v, w) in g.edges() {
        let (a, b) = (point[*u], point[*v]);
        for (x, y) in [(a, b), (b, a)] {
            let slot = &mut dist[x * size + y];
            if slot.as_ref().map_or(true, |cur| w < cur) {
                *slot = Some(w.clone());
            }
        }
    }
    // Floyd-Warshall
    for k in 0..size {
        for x in 0..size {
            let Some(dxk) = dist[x * size + k].clone() else {
                continue;
            };
            for y in 0..size {
                let Some(dky) = &dist[k * size + y] else {
                    continue;
                };
                let via = &dxk + dky;
                let slot = &mut dist[x * size + y];
                if slot.as_ref().map_or(true, |cur| via < *cur) {
                    *slot = Some(via);
                }
            }
        }
    }
    let flat = dist
        .into_iter()
        .enumerate()
        .map(|(idx, d)| {
            d.ok_or_else(|| {
                Error::UnboundedDistance(format!(
                    "points {} and {} are disconnected",
                    idx / size,
                    idx % size
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Metric::from_flat_unchecked(n, flat))
}
