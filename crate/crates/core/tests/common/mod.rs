//! Random representations and morphisms shared by the integration tests.
#![allow(dead_code)]

use quiverc_core::linrep::{hom_basis, FieldSpec, Matrix, Morphism, Representation};
use quiverc_core::Quiver;
use rand::Rng;

pub fn field(p: u32) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

pub fn kronecker() -> Quiver {
    Quiver::new(2, &[(1, 2), (1, 2)]).unwrap()
}

pub fn d4_centre_sink() -> Quiver {
    Quiver::new(4, &[(1, 2), (3, 2), (4, 2)]).unwrap()
}

pub fn random_matrix<R: Rng>(rng: &mut R, f: FieldSpec, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(f, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, rng.gen_range(0..f.p()));
        }
    }
    m
}

/// Uniform dimensions in `0..=max_dim` and uniform matrices.
pub fn random_rep<R: Rng>(rng: &mut R, q: &Quiver, f: FieldSpec, max_dim: usize) -> Representation {
    let dims: Vec<usize> = (0..q.n()).map(|_| rng.gen_range(0..=max_dim)).collect();
    let mats = q
        .arrows()
        .iter()
        .map(|a| random_matrix(rng, f, dims[a.target - 1], dims[a.source - 1]))
        .collect();
    Representation::new(q, f, dims, mats).unwrap()
}

/// Uniform element of `Hom(V, W)`.
pub fn random_morphism<R: Rng>(rng: &mut R, v: &Representation, w: &Representation) -> Morphism {
    let basis = hom_basis(v, w).unwrap().basis;
    let mut f = Morphism::zero(v, w).unwrap();
    for b in &basis {
        f = f.add(&b.scale(rng.gen_range(0..v.field().p()))).unwrap();
    }
    f
}
