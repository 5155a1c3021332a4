use crate::error::{invalid, Error, Result};
use crate::fractional::FractionalMatching;
use crate::matching::Matching;
use crate::perm::permutations;
use crate::rational::{Extended, Rational};

use super::cuts::thinness;

/// Largest `n` for the `n!`-matching search.
pub const THIN_SEARCH_CAP: usize = 5;

/// The lexicographically first perfect matching (as `perm[agent] = item`)
/// whose thinness against `p` is at most `beta`.
pub fn thin_search(p: &FractionalMatching, beta: &Rational) -> Result<Option<Matching>> {
    let n = p.n();
    if n > THIN_SEARCH_CAP {
        return Err(Error::AboveCap {
            what: "thin search",
            size: n,
            cap: THIN_SEARCH_CAP,
            hint: "check candidate matchings with `thinness` directly",
        });
    }
    if n == 0 {
        return Err(invalid("thin search needs n >= 1"));
    }
    let bound = Extended::Finite(beta.clone());
    for perm in permutations(n) {
        let m = Matching::from_permutation(&perm)?;
        if thinness(p, &m)?.beta <= bound {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn indicator_finds_itself() {
        let m = Matching::from_permutation(&[1, 2, 0]).unwrap();
        let p = FractionalMatching::indicator(&m);
        assert_eq!(thin_search(&p, &int(1)).unwrap(), Some(m));
    }

    #[test]
    fn four_cycle() {
        let p = FractionalMatching::uniform(2);
        let m = thin_search(&p, &int(2)).unwrap().unwrap();
        assert_eq!(m.as_permutation().unwrap(), alloc::vec![0, 1]);
        assert_eq!(thin_search(&p, &frac(3, 2)).unwrap(), None);
    }

    #[test]
    fn refuses_above_cap() {
        assert!(matches!(
            thin_search(&FractionalMatching::uniform(6), &int(2)),
            Err(Error::AboveCap { .. })
        ));
    }
}
