//! Thinness of a perfect matching against a fractional matching: the
//! largest ratio, over vertex cuts `(S, S̄)` of the `2n` points, of matching
//! edges crossing the cut to fractional weight crossing it.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};
use crate::fractional::FractionalMatching;
use crate::matching::Matching;
use crate::rational::{Extended, Rational};

/// Largest number of points for which all cuts are enumerated.
pub const CUT_POINTS_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinnessReport {
    pub beta: Extended,
    /// `witness_cut[x]` marks the points of `S`.
    pub witness_cut: Vec<bool>,
    /// Matching edges across the witness cut.
    pub crossing: usize,
    /// Fractional weight across the witness cut.
    pub weight: Rational,
}

/// Matching edges and fractional weight across the cut `in_cut`.
pub fn cut_values(p: &FractionalMatching, m: &Matching, in_cut: &[bool]) -> Result<(usize, Rational)> {
    let n = p.n();
    if m.n() != n || in_cut.len() != 2 * n {
        return Err(invalid("cut, matching and fractional matching disagree on n"));
    }
    let crosses = |i: usize, j: usize| in_cut[i] != in_cut[n + j];
    let crossing = m.pairs().filter(|&(i, j)| crosses(i, j)).count();
    let weight = p.support().filter(|&(i, j)| crosses(i, j)).map(|(i, j)| p.get(i, j)).sum();
    Ok((crossing, weight))
}

/// `crossing / weight` at one cut; `None` when both vanish.
pub fn cut_ratio(p: &FractionalMatching, m: &Matching, in_cut: &[bool]) -> Result<Option<Extended>> {
    let (c, w) = cut_values(p, m, in_cut)?;
    Ok(Extended::ratio(&Rational::from_integer(c.into()), &w))
}

/// Best cut found so far: `(crossing, scaled weight, mask)`.
#[derive(Clone, Copy)]
struct Best {
    c: u64,
    w: u128,
    mask: u64,
}

/// Whether `c1 / w1 > c2 / w2`, with `k / 0 = inf` for `k > 0`.
fn beats(c1: u64, w1: u128, c2: u64, w2: u128) -> bool {
    (c1 as u128) * w2 > (c2 as u128) * w1
}

/// Enumerates every cut of `points` with the last point on the far side, by
/// Gray code. `adj[x]` lists `(neighbour, scaled p-weight, is matching
/// edge)` for edges inside `points`; `local[x]` is the position of point `x`
/// in `points`. Returns the maximal ratio cut, ties going to the smallest
/// mask.
fn scan(points: &[usize], local: &[usize], adj: &[Vec<(usize, u128, bool)>]) -> Option<Best> {
    let k = points.len();
    if k < 2 {
        return None;
    }
    let free = k - 1;
    let mut side = vec![false; k];
    let (mut c, mut w) = (0u64, 0u128);
    let mut mask = 0u64;
    let mut best: Option<Best> = None;
    for step in 1u64..(1u64 << free) {
        let bit = step.trailing_zeros() as usize;
        let x = points[bit];
        side[bit] = !side[bit];
        mask ^= 1 << bit;
        for &(y, wt, is_m) in &adj[x] {
            let now_crossing = side[bit] != side[local[y]];
            if now_crossing {
                w += wt;
                c += u64::from(is_m);
            } else {
                w -= wt;
                c -= u64::from(is_m);
            }
        }
        if c == 0 {
            continue;
        }
        best = match best {
            None => Some(Best { c, w, mask }),
            Some(b) => {
                let better = beats(c, w, b.c, b.w) || (!beats(b.c, b.w, c, w) && mask < b.mask);
                Some(if better { Best { c, w, mask } } else { b })
            }
        };
    }
    best
}

/// `p` scaled to integers over a common denominator `l`.
fn scaled_weights(p: &FractionalMatching) -> Result<(Vec<u128>, BigInt)> {
    let n = p.n();
    let l = p.support().fold(BigInt::one(), |a, (i, j)| a.lcm(p.get(i, j).denom()));
    let mut out = vec![0u128; n * n];
    let mut total = BigInt::zero();
    for (i, j) in p.support() {
        let v = p.get(i, j);
        let s = v.numer() * (&l / v.denom());
        total += &s;
        out[i * n + j] = s.to_u128().unwrap_or(u128::MAX);
    }
    if total.to_u64().is_none() {
        return Err(invalid("fractional weights too fine-grained for exact cut enumeration"));
    }
    Ok((out, l))
}

fn report(n: usize, points: &[usize], best: Best, l: &BigInt) -> ThinnessReport {
    let mut witness_cut = vec![false; 2 * n];
    for (bit, &x) in points.iter().enumerate() {
        if best.mask >> bit & 1 == 1 {
            witness_cut[x] = true;
        }
    }
    let weight = Rational::new(BigInt::from(best.w), l.clone());
    let beta = Extended::ratio(&Rational::from_integer(best.c.into()), &weight).expect("crossing > 0");
    ThinnessReport {
        beta,
        witness_cut,
        crossing: best.c as usize,
        weight,
    }
}

/// Groups of points connected through `supp(p)`, each sorted, ordered by
/// smallest point.
fn components(p: &FractionalMatching) -> Vec<Vec<usize>> {
    let n = p.n();
    let mut comp = vec![usize::MAX; 2 * n];
    let mut out = Vec::new();
    for start in 0..2 * n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        let mut stack = vec![start];
        let mut members = Vec::new();
        while let Some(x) = stack.pop() {
            members.push(x);
            let nbrs: Vec<usize> = if x < n {
                (0..n).filter(|&j| !p.get(x, j).is_zero()).map(|j| n + j).collect()
            } else {
                (0..n).filter(|&i| !p.get(i, x - n).is_zero()).collect()
            };
            for y in nbrs {
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// The exact maximum cut ratio and a cut attaining it.
///
/// When every matching edge lies in `supp(p)`, a cut splitting several
/// components of `supp(p)` never beats the best of its parts, so only cuts
/// splitting one component are scanned; otherwise all `2^(2n-1)` cuts are.
/// Either way the scan is limited to 24 points at a time.
pub fn thinness(p: &FractionalMatching, m: &Matching) -> Result<ThinnessReport> {
    let n = p.n();
    if m.n() != n || !m.is_perfect() {
        return Err(invalid("thinness needs a perfect matching of the same size"));
    }
    let (wts, l) = scaled_weights(p)?;
    let mut adj: Vec<Vec<(usize, u128, bool)>> = vec![Vec::new(); 2 * n];
    for i in 0..n {
        for j in 0..n {
            let w = wts[i * n + j];
            let is_m = m.get(i) == Some(j);
            if w > 0 || is_m {
                adj[i].push((n + j, w, is_m));
                adj[n + j].push((i, w, is_m));
            }
        }
    }
    let within_support = m.pairs().all(|(i, j)| wts[i * n + j] > 0);
    let groups = if within_support {
        components(p)
    } else {
        vec![(0..2 * n).collect()]
    };
    let mut local = vec![0usize; 2 * n];
    let mut best: Option<(usize, Best)> = None;
    for (g, pts) in groups.iter().enumerate() {
        if pts.len() > CUT_POINTS_CAP {
            return Err(Error::AboveCap {
                what: "thinness cut enumeration",
                size: pts.len(),
                cap: CUT_POINTS_CAP,
                hint: if within_support {
                    "a component of the fractional support is too large"
                } else {
                    "put the matching inside supp(p) to scan components separately"
                },
            });
        }
        for (pos, &x) in pts.iter().enumerate() {
            local[x] = pos;
        }
        if let Some(b) = scan(pts, &local, &adj) {
            let better = match best {
                None => true,
                Some((_, cur)) => beats(b.c, b.w, cur.c, cur.w),
            };
            if better {
                best = Some((g, b));
            }
        }
    }
    let (g, b) = best.expect("a perfect matching crosses some cut");
    Ok(report(n, &groups[g], b, &l))
}
