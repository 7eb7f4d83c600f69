//! Positive real roots, the fundamental cone, and classification of vectors.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::vector::IntVector;
use crate::weyl::Cartan;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootClass {
    RealPositive,
    RealNegative,
    Imaginary,
    NotARoot,
}

/// Positive real roots found within a height bound.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RootSet {
    /// Lexicographically sorted.
    pub roots: BTreeSet<IntVector>,
    /// True when the orbit closed without hitting the height bound, i.e. the
    /// set is all of `Φ⁺`.
    pub complete: bool,
}

/// Orbit of the simple roots under the simple reflections, restricted to
/// positive vectors of height ≤ `height_bound`.
///
/// Reflecting a positive root other than `e_i` by `s_i` keeps it positive, so
/// the search only ever discards `−e_i` and vectors above the bound.
pub fn positive_real_roots(q: &Quiver, height_bound: usize) -> Result<RootSet> {
    let cartan = Cartan::of(q);
    let bound = BigInt::from(height_bound);
    let mut roots = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 1..=q.n() {
        let e = q.simple_root(i);
        if height_bound >= 1 && roots.insert(e.clone()) {
            queue.push_back(e);
        }
    }
    let mut complete = height_bound >= 1 || q.n() == 0;
    while let Some(root) = queue.pop_front() {
        for i in 1..=q.n() {
            let image = cartan.reflect(i, &root);
            if !image.is_positive() {
                continue;
            }
            if image.height() > bound {
                complete = false;
                continue;
            }
            if roots.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    Ok(RootSet { roots, complete })
}

/// Membership in the cone `M`: nonzero, nonnegative, connected support, and
/// `(α, e_i) ≤ 0` for every vertex.
pub fn in_fundamental_cone(q: &Quiver, alpha: &IntVector) -> Result<bool> {
    alpha.check_len(q.n())?;
    if alpha.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !alpha.is_nonnegative() {
        return Ok(false);
    }
    let cartan = Cartan::of(q);
    let pairings_ok = (1..=q.n()).all(|i| !cartan.pair_simple(i, alpha).is_positive());
    Ok(pairings_ok && q.has_connected_support(alpha))
}

/// Classifies `alpha` by height-decreasing minimisation: while some
/// `(α, e_i) > 0`, replace `α` by `s_i α`. The walk ends at a simple root
/// (real), at a vector of the fundamental cone (imaginary), or at a vector
/// that no root can reduce to. At most `search_bound` reflections are tried.
///
/// Negative vectors are classified through their negation. Imaginary roots
/// are the orbit `W·M`, which lies in the positive cone, so the negative of
/// an imaginary root reports `NotARoot`.
pub fn classify_vector(q: &Quiver, alpha: &IntVector, search_bound: usize) -> Result<RootClass> {
    alpha.check_len(q.n())?;
    if alpha.is_zero() {
        return Ok(RootClass::NotARoot);
    }
    if alpha.is_negative() {
        return Ok(match classify_positive(q, &-alpha, search_bound)? {
            RootClass::RealPositive => RootClass::RealNegative,
            _ => RootClass::NotARoot,
        });
    }
    if !alpha.is_positive() {
        return Ok(RootClass::NotARoot);
    }
    classify_positive(q, alpha, search_bound)
}

fn classify_positive(q: &Quiver, alpha: &IntVector, search_bound: usize) -> Result<RootClass> {
    let cartan = Cartan::of(q);
    let mut v = alpha.clone();
    for _ in 0..=search_bound {
        if v.as_simple().is_some() {
            return Ok(RootClass::RealPositive);
        }
        let raising = (1..=q.n()).find(|&i| cartan.pair_simple(i, &v).is_positive());
        match raising {
            None => {
                return Ok(if q.has_connected_support(&v) {
                    RootClass::Imaginary
                } else {
                    RootClass::NotARoot
                });
            }
            Some(i) => {
                let next = cartan.reflect(i, &v);
                // s_i keeps every positive root other than e_i positive
                if !next.is_positive() {
                    return Ok(RootClass::NotARoot);
                }
                v = next;
            }
        }
    }
    Err(Error::Inconclusive(search_bound))
}

/// Default search bound: the height of the vector, which always suffices
/// since each step lowers the height by at least one.
pub fn default_search_bound(alpha: &IntVector) -> usize {
    alpha.height().abs().to_usize().unwrap_or(usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> IntVector {
        IntVector::from_i64s(c)
    }

    fn kronecker() -> Quiver {
        Quiver::new(2, &[(1, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn type_a_roots_are_intervals() {
        let set = positive_real_roots(&Quiver::linear_a(3), 10).unwrap();
        assert!(set.complete);
        let expected: BTreeSet<_> = [
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [0, 1, 1],
            [1, 1, 1],
        ]
        .iter()
        .map(|c| v(c))
        .collect();
        assert_eq!(set.roots, expected);
        assert_eq!(positive_real_roots(&Quiver::discrete(1), 5).unwrap().roots.len(), 1);
    }

    #[test]
    fn d4_has_twelve_positive_roots() {
        let d4 = Quiver::new(4, &[(1, 2), (3, 2), (4, 2)]).unwrap();
        let set = positive_real_roots(&d4, 100).unwrap();
        assert!(set.complete);
        assert_eq!(set.roots.len(), 12);
        assert!(set.roots.contains(&v(&[1, 2, 1, 1])));
    }

    #[test]
    fn wild_orbits_are_cut_by_height() {
        let set = positive_real_roots(&kronecker(), 7).unwrap();
        assert!(!set.complete);
        // (k+1, k) and (k, k+1) up to height 7
        assert_eq!(set.roots.len(), 8);
        assert!(set.roots.contains(&v(&[3, 4])));
    }

    #[test]
    fn fundamental_cone_examples() {
        assert!(in_fundamental_cone(&kronecker(), &v(&[1, 1])).unwrap());
        assert!(!in_fundamental_cone(&Quiver::linear_a(2), &v(&[1, 1])).unwrap());
        assert!(!in_fundamental_cone(&Quiver::linear_a(3), &v(&[1, 0, 1])).unwrap());
        assert_eq!(in_fundamental_cone(&kronecker(), &v(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn classification_examples() {
        let a2 = Quiver::linear_a(2);
        assert_eq!(classify_vector(&a2, &v(&[1, 1]), 10).unwrap(), RootClass::RealPositive);
        assert_eq!(classify_vector(&a2, &v(&[-1, -1]), 10).unwrap(), RootClass::RealNegative);
        assert_eq!(classify_vector(&a2, &v(&[2, 0]), 10).unwrap(), RootClass::NotARoot);
        assert_eq!(classify_vector(&a2, &v(&[1, -1]), 10).unwrap(), RootClass::NotARoot);
        assert_eq!(classify_vector(&kronecker(), &v(&[1, 1]), 10).unwrap(), RootClass::Imaginary);
        assert_eq!(classify_vector(&kronecker(), &v(&[3, 3]), 10).unwrap(), RootClass::Imaginary);
        assert_eq!(classify_vector(&kronecker(), &v(&[3, 2]), 10).unwrap(), RootClass::RealPositive);
        assert_eq!(classify_vector(&kronecker(), &v(&[-2, -2]), 10).unwrap(), RootClass::NotARoot);
    }

    #[test]
    fn small_search_bound_is_inconclusive() {
        let kr = kronecker();
        assert_eq!(classify_vector(&kr, &v(&[5, 4]), 2), Err(Error::Inconclusive(2)));
        assert_eq!(classify_vector(&kr, &v(&[5, 4]), 9).unwrap(), RootClass::RealPositive);
    }
}
