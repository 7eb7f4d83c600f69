//! Indecomposable representations of Dynkin quivers and Krull–Schmidt
//! decomposition by Hom dimensions.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::FieldSpec;
use super::hom::{hom_basis, hom_dim};
use super::reflect::reflect_minus;
use super::rep::{Morphism, Representation};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::roots::{classify_vector, default_search_bound, positive_real_roots, RootClass};
use crate::vector::IntVector;
use crate::weyl::simple_reflection;

pub const DEFAULT_INDEC_DIM_GUARD: usize = 12;
pub const DEFAULT_END_GUARD: u128 = 1 << 20;

/// True iff `End(V)` has no idempotent other than `0` and `1`. Enumerates
/// the whole endomorphism ring, so `V` must have total dimension at most
/// `dim_guard` and `p^{dim End}` at most `end_guard`.
pub fn is_indecomposable(v: &Representation, dim_guard: usize, end_guard: u128) -> Result<bool> {
    if v.is_zero() {
        return Ok(false);
    }
    if v.total_dim() > dim_guard {
        return Err(Error::ResourceLimit {
            what: "total dimension",
            value: v.total_dim() as u128,
            limit: dim_guard as u128,
        });
    }
    let end = hom_basis(v, v)?.basis;
    let p = v.field().p();
    let size = (p as u128).checked_pow(end.len() as u32).unwrap_or(u128::MAX);
    if size > end_guard {
        return Err(Error::ResourceLimit { what: "endomorphism ring size", value: size, limit: end_guard });
    }
    if end.len() == 1 {
        return Ok(true);
    }
    let id = Morphism::identity(v);
    let mut coeffs = vec![0u32; end.len()];
    loop {
        if let Some(k) = coeffs.iter().rposition(|&c| c != 0) {
            let mut e = end[k].scale(coeffs[k]);
            for (m, &c) in end.iter().zip(&coeffs).take(k) {
                if c != 0 {
                    e = e.add(&m.scale(c))?;
                }
            }
            if e.comps() != id.comps() && e.then(&e)?.comps() == e.comps() {
                return Ok(false);
            }
        }
        if !next(&mut coeffs, p) {
            return Ok(true);
        }
    }
}

fn next(values: &mut [u32], p: u32) -> bool {
    for x in values.iter_mut().rev() {
        *x += 1;
        if *x < p {
            return true;
        }
        *x = 0;
    }
    false
}

fn require_dynkin(q: &Quiver) -> Result<()> {
    if q.dynkin_type().is_dynkin() {
        Ok(())
    } else {
        Err(Error::UnsupportedScope(format!("quiver of type {} is not Dynkin", q.dynkin_type())))
    }
}

type State = (IntVector, Quiver);

/// The indecomposable with dimension vector `α`, built as
/// `R^-_{i_1} ⋯ R^-_{i_k}(S_j)` where `s_{i_k} ⋯ s_{i_1} α = e_j` along a
/// sequence of sinks.
pub fn indec_of_real_root(q: &Quiver, field: FieldSpec, alpha: &IntVector) -> Result<Representation> {
    require_dynkin(q)?;
    alpha.check_len(q.n())?;
    if classify_vector(q, alpha, default_search_bound(alpha))? != RootClass::RealPositive {
        return Err(Error::NotARealRoot(alpha.to_string()));
    }
    // BFS over (vector, orientation); parent links recover the sink sequence
    let start = (alpha.clone(), q.clone());
    let mut parent: HashMap<State, Option<(State, usize)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    let mut goal = None;
    while let Some(state) = queue.pop_front() {
        if state.0.as_simple().is_some() {
            goal = Some(state);
            break;
        }
        for i in state.1.sinks() {
            let next_v = simple_reflection(&state.1, i, &state.0)?;
            if !next_v.is_positive() {
                continue;
            }
            let next_state = (next_v, state.1.mutate_at(i)?);
            if !parent.contains_key(&next_state) {
                parent.insert(next_state.clone(), Some((state.clone(), i)));
                queue.push_back(next_state);
            }
        }
    }
    let goal = goal.ok_or_else(|| Error::Invariant(format!("no sink sequence reduces {alpha}")))?;
    let j = goal.0.as_simple().expect("goal is simple");
    let mut rep = Representation::simple(&goal.1, field, j)?;
    let mut cursor = goal;
    while let Some(Some((prev, i))) = parent.get(&cursor).cloned() {
        rep = reflect_minus(&rep, i)?;
        cursor = prev;
    }
    if rep.quiver() != q || &rep.dim_vector() != alpha {
        return Err(Error::Invariant(format!("reflection path for {alpha} ended elsewhere")));
    }
    Ok(rep)
}

/// All indecomposables of a Dynkin quiver, one per positive root, with the
/// matrix of `dim Hom` between them.
#[derive(Clone, Debug)]
pub struct IndecCatalog {
    quiver: Quiver,
    field: FieldSpec,
    entries: Vec<(IntVector, Representation)>,
    hom: Vec<Vec<usize>>,
}

impl IndecCatalog {
    pub fn new(q: &Quiver, field: FieldSpec) -> Result<Self> {
        require_dynkin(q)?;
        let roots = positive_real_roots(q, usize::MAX)?;
        let entries = roots
            .roots
            .iter()
            .map(|r| Ok((r.clone(), indec_of_real_root(q, field, r)?)))
            .collect::<Result<Vec<_>>>()?;
        let hom = entries
            .iter()
            .map(|(_, a)| entries.iter().map(|(_, b)| hom_dim(a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(IndecCatalog { quiver: q.clone(), field, entries, hom })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(root, M_root)` sorted by root.
    pub fn entries(&self) -> &[(IntVector, Representation)] {
        &self.entries
    }

    pub fn get(&self, root: &IntVector) -> Option<&Representation> {
        self.entries.iter().find(|(r, _)| r == root).map(|(_, m)| m)
    }

    /// `hom_matrix()[k][l] = dim Hom(M_k, M_l)`.
    pub fn hom_matrix(&self) -> &[Vec<usize>] {
        &self.hom
    }

    /// Multiplicities `m` with `V ≅ ⊕ M_k^{m_k}`, from
    /// `dim Hom(M_k, V) = Σ_l dim Hom(M_k, M_l) m_l`.
    pub fn decompose(&self, v: &Representation) -> Result<Vec<(IntVector, usize)>> {
        if v.quiver() != &self.quiver {
            return Err(Error::QuiverMismatch);
        }
        self.field.check_same(v.field())?;
        let rhs = self
            .entries
            .iter()
            .map(|(_, m)| hom_dim(m, v))
            .collect::<Result<Vec<_>>>()?;
        let m = solve_rational(&self.hom, &rhs)?;
        let mut out = Vec::new();
        let mut total = IntVector::zeros(self.quiver.n());
        for ((root, _), x) in self.entries.iter().zip(m) {
            if !x.is_integer() || x.is_negative() {
                return Err(Error::Invariant(format!("non-integral multiplicity {x} at {root}")));
            }
            let k = x.to_integer();
            if !k.is_zero() {
                total = &total + &root.scaled(&k);
                out.push((root.clone(), k.to_usize().expect("small multiplicity")));
            }
        }
        if total != v.dim_vector() {
            return Err(Error::Invariant("multiplicities do not add up to the dimension vector".into()));
        }
        Ok(out)
    }
}

/// Multiset of indecomposable summands of `V`, as `(root, multiplicity)`.
pub fn decompose(v: &Representation) -> Result<Vec<(IntVector, usize)>> {
    IndecCatalog::new(v.quiver(), v.field())?.decompose(v)
}

fn solve_rational(a: &[Vec<usize>], b: &[usize]) -> Result<Vec<BigRational>> {
    let n = b.len();
    let q = |x: usize| BigRational::from_integer(BigInt::from(x));
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| row.iter().map(|&x| q(x)).chain(std::iter::once(q(rhs))).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Invariant("singular Hom matrix".into()))?;
        m.swap(col, pivot);
        let inv = BigRational::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x = &*x - &factor * p;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linrep::field::Matrix;

    fn f2() -> FieldSpec {
        FieldSpec::new(2).unwrap()
    }

    #[test]
    fn gabriel_counts() {
        let cases = [
            (Quiver::linear_a(1), 1),
            (Quiver::linear_a(2), 3),
            (Quiver::new(3, &[(1, 2), (3, 2)]).unwrap(), 6),
            (Quiver::linear_a(4), 10),
            (Quiver::new(4, &[(1, 2), (3, 2), (4, 2)]).unwrap(), 12),
        ];
        for (q, count) in cases {
            let cat = IndecCatalog::new(&q, f2()).unwrap();
            assert_eq!(cat.len(), count);
            for (root, m) in cat.entries() {
                assert_eq!(&m.dim_vector(), root);
                assert!(is_indecomposable(m, DEFAULT_INDEC_DIM_GUARD, DEFAULT_END_GUARD).unwrap());
            }
        }
    }

    #[test]
    fn decomposable_detected() {
        let q = Quiver::linear_a(2);
        let s1 = Representation::simple(&q, f2(), 1).unwrap();
        let s2 = Representation::simple(&q, f2(), 2).unwrap();
        let v = s1.direct_sum(&s2).unwrap();
        assert!(!is_indecomposable(&v, 12, 1 << 20).unwrap());
        assert!(!is_indecomposable(&Representation::zero(&q, f2()), 12, 1 << 20).unwrap());
    }

    #[test]
    fn decompose_sum() {
        let q = Quiver::linear_a(2);
        let p = Representation::new(&q, f2(), vec![1, 1], vec![Matrix::identity(f2(), 1)]).unwrap();
        let s2 = Representation::simple(&q, f2(), 2).unwrap();
        let v = p.direct_sum(&s2).unwrap().direct_sum(&s2).unwrap();
        let parts = decompose(&v).unwrap();
        assert_eq!(
            parts,
            vec![(IntVector::from_i64s(&[0, 1]), 2), (IntVector::from_i64s(&[1, 1]), 1)]
        );
    }

    #[test]
    fn non_dynkin_and_non_root_rejected() {
        let k = Quiver::new(2, &[(1, 2), (1, 2)]).unwrap();
        assert!(matches!(
            indec_of_real_root(&k, f2(), &IntVector::from_i64s(&[1, 1])),
            Err(Error::UnsupportedScope(_))
        ));
        let q = Quiver::linear_a(3);
        assert!(matches!(
            indec_of_real_root(&q, f2(), &IntVector::from_i64s(&[1, 0, 1])),
            Err(Error::NotARealRoot(_))
        ));
    }
}
