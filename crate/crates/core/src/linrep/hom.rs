//! Hom and Ext¹ between representations of an acyclic quiver.
//!
//! Both come from one linear map
//!
//! ```text
//!   δ : ⊕_i Hom(V_i, W_i) → ⊕_{a:i→j} Hom(V_i, W_j),   (f_i) ↦ (W_a f_i − f_j V_a)_a
//! ```
//!
//! whose kernel is `Hom(V, W)` and whose cokernel is `Ext¹(V, W)` for a path
//! algebra. Unknowns are laid out vertex by vertex, each block row-major.

use super::field::{Cokernel, FieldSpec, Matrix};
use super::rep::{Morphism, Representation};
use crate::error::Result;

/// Basis of `Hom(V, W)`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<Morphism>,
}

impl HomSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Offsets of the per-vertex blocks in the domain of `δ`.
fn domain_offsets(v: &Representation, w: &Representation) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(v.dims().len() + 1);
    let mut acc = 0;
    offsets.push(0);
    for (dv, dw) in v.dims().iter().zip(w.dims()) {
        acc += dv * dw;
        offsets.push(acc);
    }
    offsets
}

/// Offsets of the per-arrow blocks in the codomain of `δ`.
fn codomain_offsets(v: &Representation, w: &Representation) -> Vec<usize> {
    let mut offsets = vec![0];
    let mut acc = 0;
    for a in v.quiver().arrows() {
        acc += w.dim_at(a.target) * v.dim_at(a.source);
        offsets.push(acc);
    }
    offsets
}

/// Matrix of `δ` for the pair `(V, W)`.
pub(crate) fn presentation(v: &Representation, w: &Representation) -> Result<Matrix> {
    v.check_compatible(w)?;
    let f = v.field();
    let dom = domain_offsets(v, w);
    let cod = codomain_offsets(v, w);
    let mut delta = Matrix::zeros(f, *cod.last().unwrap(), *dom.last().unwrap());
    for (id, a) in v.quiver().arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (dvi, dwi) = (v.dim_at(i), w.dim_at(i));
        let (dvj, dwj) = (v.dim_at(j), w.dim_at(j));
        let (wa, va) = (w.map(id), v.map(id));
        // equation entry (r, c): r < dim W_j, c < dim V_i
        for r in 0..dwj {
            for c in 0..dvi {
                let row = cod[id] + r * dvi + c;
                // + W_a[r,k] · f_i[k,c]
                for k in 0..dwi {
                    let x = wa.get(r, k);
                    if x != 0 {
                        let col = dom[i - 1] + k * dvi + c;
                        delta.set(row, col, f.add(delta.get(row, col), x));
                    }
                }
                // − f_j[r,k] · V_a[k,c]
                for k in 0..dvj {
                    let x = va.get(k, c);
                    if x != 0 {
                        let col = dom[j - 1] + r * dvj + k;
                        delta.set(row, col, f.sub(delta.get(row, col), x));
                    }
                }
            }
        }
    }
    Ok(delta)
}

/// Morphism whose components are read from a flat vector laid out like the
/// domain of `δ`.
fn morphism_from_flat(v: &Representation, w: &Representation, flat: &[u32]) -> Morphism {
    let f: FieldSpec = v.field();
    let dom = domain_offsets(v, w);
    let comps = (0..v.dims().len())
        .map(|k| {
            let (rows, cols) = (w.dims()[k], v.dims()[k]);
            let mut m = Matrix::zeros(f, rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    m.set(r, c, flat[dom[k] + r * cols + c]);
                }
            }
            m
        })
        .collect();
    Morphism::new_unchecked(v, w, comps)
}

/// Kernel basis of `δ`, in column-reduced echelon order.
pub fn hom_basis(v: &Representation, w: &Representation) -> Result<HomSpace> {
    let delta = presentation(v, w)?;
    let kernel = delta.kernel();
    let basis = (0..kernel.cols())
        .map(|c| morphism_from_flat(v, w, &kernel.column(c)))
        .collect();
    Ok(HomSpace { basis })
}

pub fn hom_dim(v: &Representation, w: &Representation) -> Result<usize> {
    let delta = presentation(v, w)?;
    Ok(delta.cols() - delta.rank())
}

/// `dim coker δ`.
pub fn ext1_dim(v: &Representation, w: &Representation) -> Result<usize> {
    let delta = presentation(v, w)?;
    Ok(delta.rows() - delta.rank())
}

/// Cokernel of `δ` with complement coordinates, plus the arrow offsets of its
/// ambient space. Coset representatives for `Ext¹(V, W)` are the vectors
/// supported on the complement coordinates.
pub(crate) fn ext_presentation(v: &Representation, w: &Representation) -> Result<(Cokernel, Vec<usize>)> {
    let delta = presentation(v, w)?;
    Ok((Cokernel::of(&delta), codomain_offsets(v, w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn f2() -> FieldSpec {
        FieldSpec::new(2).unwrap()
    }

    #[test]
    fn simples() {
        let q = Quiver::linear_a(3);
        for i in 1..=3 {
            let si = Representation::simple(&q, f2(), i).unwrap();
            assert_eq!(hom_basis(&si, &si).unwrap().dimension(), 1);
            assert_eq!(ext1_dim(&si, &si).unwrap(), 0);
            for j in (1..=3).filter(|&j| j != i) {
                let sj = Representation::simple(&q, f2(), j).unwrap();
                assert_eq!(hom_dim(&si, &sj).unwrap(), 0);
            }
        }
    }

    #[test]
    fn kronecker_ext_between_simples() {
        let q = Quiver::new(2, &[(1, 2), (1, 2)]).unwrap();
        let s1 = Representation::simple(&q, f2(), 1).unwrap();
        let s2 = Representation::simple(&q, f2(), 2).unwrap();
        assert_eq!(ext1_dim(&s1, &s2).unwrap(), 2);
        assert_eq!(ext1_dim(&s2, &s1).unwrap(), 0);
    }

    #[test]
    fn projective_of_a2() {
        let q = Quiver::new(2, &[(1, 2)]).unwrap();
        let p = Representation::new(&q, f2(), vec![1, 1], vec![Matrix::identity(f2(), 1)]).unwrap();
        let s2 = Representation::simple(&q, f2(), 2).unwrap();
        assert_eq!(hom_dim(&s2, &p).unwrap(), 1);
        assert_eq!(hom_dim(&p, &s2).unwrap(), 0);
        let basis = hom_basis(&s2, &p).unwrap();
        assert_eq!(basis.basis[0].comp(2).get(0, 0), 1);
    }

    #[test]
    fn hom_basis_elements_commute() {
        let q = Quiver::new(3, &[(1, 2), (3, 2)]).unwrap();
        let id = Matrix::identity(f2(), 1);
        let v = Representation::new(&q, f2(), vec![1, 1, 1], vec![id.clone(), id]).unwrap();
        let hom = hom_basis(&v, &v).unwrap();
        assert_eq!(hom.dimension(), 1);
        for m in &hom.basis {
            assert!(Morphism::new(m.source(), m.target(), m.comps().to_vec()).is_ok());
        }
    }
}
