//! The binary-tree instance behind the logarithmic lower bound, its
//! per-agent adversarial metrics, and the "unlucky agent" walks.
//!
//! Layout for `k`: `2^k` agents sit on the leaves, left to right; the `2^k`
//! items sit on the internal vertices numbered by in-order traversal, with the
//! root (which has a single child) last. An edge leaving a parent at depth
//! `t` has weight `2^(k-t)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::fractional::FractionalMatching;
use crate::graph::{metric_from_graph, Vertex, WeightedGraph};
use crate::instance::{prefs_from_metric, Instance};
use crate::matching::Matching;
use crate::metric::Metric;
use crate::rational::{pow2, Rational};

/// Largest supported depth; `2^k` agents need exhaustive-size metrics.
pub const MAX_TREE_K: u32 = 10;

#[derive(Debug, Clone)]
pub struct TreeInstance {
    k: u32,
    graph: WeightedGraph,
    metric: Metric,
    instance: Instance,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<Vertex>>,
}

/// Either the agents marked unlucky (integral walk) or the crossing weight
/// charged at each level (fractional walk).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unlucky {
    Agents(Vec<usize>),
    Weights(Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdversaryWalkResult {
    /// The leaf agent whose adversarial metric hurts the matching.
    pub chosen_agent: usize,
    pub unlucky: Unlucky,
}

/// Builds the tree instance for `k >= 1` (so `n = 2^k`).
pub fn tree_instance(k: u32) -> Result<TreeInstance> {
    if k == 0 || k > MAX_TREE_K {
        return Err(invalid(format!("tree depth k must lie in 1..={MAX_TREE_K}")));
    }
    let n = 1usize << k;
    let root = n - 1;
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut graph = WeightedGraph::with_points(n);

    let top = (1usize << (k - 1)) - 1;
    children[root].push(Vertex::Item(top));
    parent[top] = Some(root);
    graph.add_edge(n + root, n + top, pow2(k))?;

    // in-order position v = item + 1; its height is the number of trailing zeros
    for item in 0..n - 1 {
        let v = item + 1;
        let h = v.trailing_zeros();
        let weight = pow2(h);
        let kids = if h == 0 {
            [Vertex::Agent(v - 1), Vertex::Agent(v)]
        } else {
            let step = 1usize << (h - 1);
            [Vertex::Item(v - step - 1), Vertex::Item(v + step - 1)]
        };
        for kid in kids {
            let point = match kid {
                Vertex::Agent(a) => a,
                Vertex::Item(b) => {
                    parent[b] = Some(item);
                    n + b
                }
            };
            graph.add_edge(n + item, point, weight.clone())?;
        }
        children[item] = kids.to_vec();
    }

    let metric = metric_from_graph(&graph)?;
    let instance = prefs_from_metric(&metric);
    Ok(TreeInstance {
        k,
        graph,
        metric,
        instance,
        parent,
        children,
    })
}

impl TreeInstance {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        1 << self.k
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn root(&self) -> usize {
        self.n() - 1
    }

    /// The root's only child, where the walks start.
    pub fn top(&self) -> usize {
        (1 << (self.k - 1)) - 1
    }

    pub fn parent(&self, item: usize) -> Option<usize> {
        self.parent[item]
    }

    pub fn children(&self, item: usize) -> &[Vertex] {
        &self.children[item]
    }

    /// Item on which agent `a` hangs.
    pub fn leaf_parent(&self, agent: usize) -> usize {
        agent & !1
    }

    /// Items and agents in the subtree rooted at `item` (including `item`).
    pub fn span(&self, item: usize) -> (Range<usize>, Range<usize>) {
        if item == self.root() {
            return (0..self.n(), 0..self.n());
        }
        let v = item + 1;
        let h = v.trailing_zeros();
        let half = 1usize << h;
        ((v - half + 1) - 1..(v + half - 1), (v - half)..(v + half))
    }

    /// The `k + 1` items on the path from agent `a` to the root.
    pub fn path_to_root(&self, agent: usize) -> Vec<usize> {
        let mut path = vec![self.leaf_parent(agent)];
        while let Some(p) = self.parent[*path.last().unwrap()] {
            path.push(p);
        }
        path
    }

    /// For every non-root vertex `v` with parent `u`, the agents below `v`
    /// rank every item below `v` ahead of `u`, and `u` ahead of every other
    /// item.
    pub fn subtree_preferences_hold(&self) -> bool {
        let inst = &self.instance;
        let check = |items_below: Range<usize>, agents_below: Range<usize>, u: usize| {
            agents_below.clone().all(|a| {
                let ru = inst.rank(a, u);
                (0..self.n()).all(|b| {
                    if items_below.contains(&b) {
                        inst.rank(a, b) < ru
                    } else if b == u {
                        true
                    } else {
                        inst.rank(a, b) > ru
                    }
                })
            })
        };
        (0..self.n()).all(|u| {
            self.children[u].iter().all(|&child| match child {
                Vertex::Agent(a) => check(0..0, a..a + 1, u),
                Vertex::Item(v) => {
                    let (items, agents) = self.span(v);
                    check(items, agents, u)
                }
            })
        })
    }
}

/// The adversarial metric attached to agent `agent`: the tree edges among the
/// items on its root path are removed, `agent` is joined to each of those
/// items by a weight-1 edge, and every other edge gets weight 0.
pub fn tree_adversary_metric(t: &TreeInstance, agent: usize) -> Result<Metric> {
    let n = t.n();
    if agent >= n {
        return Err(invalid(format!("agent {agent} out of range for n = {n}")));
    }
    let path = t.path_to_root(agent);
    let on_path = |item: usize| path.contains(&item);
    let mut g = WeightedGraph::with_points(n);
    for (u, v, _) in t.graph().edges() {
        let (u, v) = (*u, *v);
        let item_of = |p: usize| (p >= n).then(|| p - n);
        let both_on_path = matches!((item_of(u), item_of(v)), (Some(a), Some(b)) if on_path(a) && on_path(b));
        let own_leaf_edge = u == agent || v == agent;
        if !both_on_path && !own_leaf_edge {
            g.add_edge(u, v, Rational::zero())?;
        }
    }
    for &item in &path {
        g.add_edge(agent, n + item, Rational::one())?;
    }
    metric_from_graph(&g)
}

fn require_tree_size(t: &TreeInstance, size: usize) -> Result<()> {
    if size != t.n() {
        return Err(invalid(format!(
            "matching has {size} agents, tree has {}",
            t.n()
        )));
    }
    Ok(())
}

/// Deterministic walk: at each internal vertex some agent below it is
/// matched outside it (the subtree has one more agent than item); the
/// lowest-indexed such agent is marked unlucky and the walk moves into the
/// other child's subtree. The leaf reached is the chosen agent.
pub fn unlucky_walk(t: &TreeInstance, m: &Matching) -> Result<AdversaryWalkResult> {
    require_tree_size(t, m.n())?;
    if !m.is_perfect() {
        return Err(invalid("unlucky_walk needs a perfect matching"));
    }
    let mut unlucky = Vec::with_capacity(t.k() as usize);
    let mut current = Vertex::Item(t.top());
    while let Vertex::Item(u) = current {
        let (items, agents) = t.span(u);
        let leaving = agents
            .clone()
            .find(|&a| !items.contains(&m.get(a).expect("perfect")))
            .expect("a subtree with one surplus agent always sends one out");
        unlucky.push(leaving);
        let [left, right] = [t.children(u)[0], t.children(u)[1]];
        current = if contains_agent(t, left, leaving) {
            right
        } else {
            left
        };
    }
    let Vertex::Agent(chosen_agent) = current else {
        unreachable!()
    };
    Ok(AdversaryWalkResult {
        chosen_agent,
        unlucky: Unlucky::Agents(unlucky),
    })
}

/// Fractional walk: the mass leaving each visited subtree is at least 1; the
/// child contributing the larger share is charged and the walk moves into
/// the other child. On an exact tie it moves left.
pub fn unlucky_walk_fractional(
    t: &TreeInstance,
    p: &FractionalMatching,
) -> Result<AdversaryWalkResult> {
    require_tree_size(t, p.n())?;
    p.require_doubly_stochastic()?;
    let mut charged = Vec::with_capacity(t.k() as usize);
    let mut current = Vertex::Item(t.top());
    while let Vertex::Item(u) = current {
        let (items, _) = t.span(u);
        let leaving = |child: Vertex| -> Rational {
            agents_below(t, child)
                .flat_map(|a| (0..t.n()).map(move |b| (a, b)))
                .filter(|(_, b)| !items.contains(b))
                .map(|(a, b)| p.get(a, b).clone())
                .sum()
        };
        let [left, right] = [t.children(u)[0], t.children(u)[1]];
        let (wl, wr) = (leaving(left), leaving(right));
        if wl > wr {
            charged.push(wl);
            current = right;
        } else {
            charged.push(wr);
            current = left;
        }
    }
    let Vertex::Agent(chosen_agent) = current else {
        unreachable!()
    };
    Ok(AdversaryWalkResult {
        chosen_agent,
        unlucky: Unlucky::Weights(charged),
    })
}

fn agents_below(t: &TreeInstance, v: Vertex) -> Range<usize> {
    match v {
        Vertex::Agent(a) => a..a + 1,
        Vertex::Item(b) => t.span(b).1,
    }
}

fn contains_agent(t: &TreeInstance, v: Vertex, agent: usize) -> bool {
    agents_below(t, v).contains(&agent)
}
