//! BGP reflection functors `R_i^+` (at a sink) and `R_i^-` (at a source).
//!
//! An isolated vertex is accepted by both: the direct sum over incident
//! arrows is then empty, so the vertex space becomes zero.

use super::field::{Cokernel, Matrix};
use super::rep::{Morphism, Representation};
use crate::error::{Error, Result};
use crate::quiver::{Quiver, VertexKind};

fn expect_kind(q: &Quiver, i: usize, wanted: VertexKind) -> Result<()> {
    let kind = q.vertex_kind(i)?;
    if kind == wanted || kind == VertexKind::Isolated {
        Ok(())
    } else {
        Err(Error::WrongVertexKind { vertex: i, kind: kind.name(), expected: wanted.name() })
    }
}

/// `⊕_{a:j→i} V_j → V_i` as one `dim V_i × Σ dim V_j` matrix, summands in
/// arrow-id order.
fn sum_map_into(v: &Representation, incoming: &[usize]) -> Matrix {
    let parts: Vec<&Matrix> = incoming.iter().map(|&a| v.map(a)).collect();
    let target = v.quiver().arrow(incoming.first().copied().unwrap_or(0)).target;
    let rows = if incoming.is_empty() { 0 } else { v.dim_at(target) };
    Matrix::hstack(v.field(), rows, &parts)
}

/// Column-reduced echelon kernel of the sum map at sink `i`.
fn kernel_at_sink(v: &Representation, i: usize) -> (Vec<usize>, Matrix) {
    let incoming = v.quiver().incoming(i);
    let map = if incoming.is_empty() {
        Matrix::zeros(v.field(), v.dim_at(i), 0)
    } else {
        sum_map_into(v, &incoming)
    };
    (incoming, map.kernel())
}

/// `R_i^+(V)` on `μ_i(Q)`. The new space at `i` is the kernel of
/// `⊕_{a:j→i} V_j → V_i`; each reversed arrow carries the component of the
/// kernel inclusion into its summand.
pub fn reflect_plus(v: &Representation, i: usize) -> Result<Representation> {
    let q = v.quiver();
    expect_kind(q, i, VertexKind::Sink)?;
    let (incoming, kernel) = kernel_at_sink(v, i);
    let mut dims = v.dims().to_vec();
    dims[i - 1] = kernel.cols();
    let mut mats = v.maps().to_vec();
    let mut row = 0;
    for &a in &incoming {
        let d = v.dim_at(q.arrow(a).source);
        mats[a] = kernel.block(row, row + d, 0, kernel.cols());
        row += d;
    }
    Representation::new(&q.mutate_at(i)?, v.field(), dims, mats)
}

/// `R_i^+(f)`: unchanged away from `i`; at `i`, the map between kernels
/// induced by `⊕ f_j`.
pub fn reflect_plus_mor(f: &Morphism, i: usize) -> Result<Morphism> {
    let (v, w) = (f.source(), f.target());
    let q = v.quiver();
    expect_kind(q, i, VertexKind::Sink)?;
    let source = reflect_plus(v, i)?;
    let target = reflect_plus(w, i)?;
    let (incoming, kv) = kernel_at_sink(v, i);
    let (_, kw) = kernel_at_sink(w, i);
    let parts: Vec<&Matrix> = incoming.iter().map(|&a| f.comp(q.arrow(a).source)).collect();
    let sum = Matrix::block_diagonal(v.field(), &parts);
    let image = sum.mul(&kv);
    let at_i = kw
        .solve(&image)
        .ok_or_else(|| Error::Invariant("image of kernel escapes target kernel".into()))?;
    let mut comps = f.comps().to_vec();
    comps[i - 1] = at_i;
    Morphism::new(&source, &target, comps)
}

/// `V_i → ⊕_{a:i→j} V_j` at source `i`, summands in arrow-id order.
fn cokernel_at_source(v: &Representation, i: usize) -> (Vec<usize>, Matrix, Cokernel) {
    let outgoing = v.quiver().outgoing(i);
    let parts: Vec<&Matrix> = outgoing.iter().map(|&a| v.map(a)).collect();
    let map = Matrix::vstack(v.field(), v.dim_at(i), &parts);
    let coker = Cokernel::of(&map);
    (outgoing, map, coker)
}

/// `R_i^-(V)` on `μ_i(Q)`. The new space at `i` is the cokernel of
/// `V_i → ⊕_{a:i→j} V_j`, presented on the echelon complement basis; each
/// reversed arrow carries the restriction of the quotient map.
pub fn reflect_minus(v: &Representation, i: usize) -> Result<Representation> {
    let q = v.quiver();
    expect_kind(q, i, VertexKind::Source)?;
    let (outgoing, _, coker) = cokernel_at_source(v, i);
    let projection = coker.projection();
    let mut dims = v.dims().to_vec();
    dims[i - 1] = coker.dim();
    let mut mats = v.maps().to_vec();
    let mut col = 0;
    for &a in &outgoing {
        let d = v.dim_at(q.arrow(a).target);
        mats[a] = projection.block(0, coker.dim(), col, col + d);
        col += d;
    }
    Representation::new(&q.mutate_at(i)?, v.field(), dims, mats)
}

/// `R_i^-(f)`: at `i`, the map between cokernels induced by `⊕ f_j`.
pub fn reflect_minus_mor(f: &Morphism, i: usize) -> Result<Morphism> {
    let (v, w) = (f.source(), f.target());
    let q = v.quiver();
    expect_kind(q, i, VertexKind::Source)?;
    let source = reflect_minus(v, i)?;
    let target = reflect_minus(w, i)?;
    let (outgoing, _, cv) = cokernel_at_source(v, i);
    let (_, _, cw) = cokernel_at_source(w, i);
    let parts: Vec<&Matrix> = outgoing.iter().map(|&a| f.comp(q.arrow(a).target)).collect();
    let sum = Matrix::block_diagonal(v.field(), &parts);
    // lift cokernel coordinates of V along the complement basis
    let mut lift = Matrix::zeros(v.field(), cv.ambient, cv.dim());
    for (k, &c) in cv.complement.iter().enumerate() {
        lift.set(c, k, 1);
    }
    let at_i = cw.projection().mul(&sum).mul(&lift);
    let mut comps = f.comps().to_vec();
    comps[i - 1] = at_i;
    Morphism::new(&source, &target, comps)
}

/// `R_i^- R_i^+ V`: the summands of `V` not isomorphic to `S_i`.
pub fn strip_simple_summands(v: &Representation, i: usize) -> Result<Representation> {
    expect_kind(v.quiver(), i, VertexKind::Sink)?;
    reflect_minus(&reflect_plus(v, i)?, i)
}

/// Number of `S_i` summands of `V` at a sink `i`: the cokernel dimension of
/// `⊕_{a:j→i} V_j → V_i`.
pub fn simple_multiplicity_at_sink(v: &Representation, i: usize) -> Result<usize> {
    expect_kind(v.quiver(), i, VertexKind::Sink)?;
    let incoming = v.quiver().incoming(i);
    let rank = if incoming.is_empty() { 0 } else { sum_map_into(v, &incoming).rank() };
    Ok(v.dim_at(i) - rank)
}

/// Number of `S_i` summands of `V` at a source `i`: the kernel dimension of
/// `V_i → ⊕_{a:i→j} V_j`.
pub fn simple_multiplicity_at_source(v: &Representation, i: usize) -> Result<usize> {
    expect_kind(v.quiver(), i, VertexKind::Source)?;
    let (_, map, _) = cokernel_at_source(v, i);
    Ok(v.dim_at(i) - map.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linrep::field::FieldSpec;

    fn f2() -> FieldSpec {
        FieldSpec::new(2).unwrap()
    }

    fn one() -> Matrix {
        Matrix::identity(f2(), 1)
    }

    fn a3_sink() -> Quiver {
        Quiver::new(3, &[(1, 2), (3, 2)]).unwrap()
    }

    /// Interval module on 1 → 2 ← 3 with identity maps.
    fn interval(dims: [usize; 3]) -> Representation {
        let q = a3_sink();
        let mats = q
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = (dims[a.target - 1], dims[a.source - 1]);
                if r == 1 && c == 1 {
                    one()
                } else {
                    Matrix::zeros(f2(), r, c)
                }
            })
            .collect();
        Representation::new(&q, f2(), dims.to_vec(), mats).unwrap()
    }

    #[test]
    fn a3_examples() {
        assert_eq!(reflect_plus(&interval([1, 1, 0]), 2).unwrap().dims(), &[1, 0, 0]);
        assert_eq!(reflect_plus(&interval([1, 1, 1]), 2).unwrap().dims(), &[1, 1, 1]);
        assert!(reflect_plus(&interval([0, 1, 0]), 2).unwrap().is_zero());
        let back = reflect_minus(&reflect_plus(&interval([1, 1, 0]), 2).unwrap(), 2).unwrap();
        assert_eq!(back.dims(), &[1, 1, 0]);
        assert_eq!(back.quiver(), &a3_sink());
    }

    #[test]
    fn minus_kills_simple_at_source() {
        let q = a3_sink().mutate_at(2).unwrap();
        let s2 = Representation::simple(&q, f2(), 2).unwrap();
        assert!(reflect_minus(&s2, 2).unwrap().is_zero());
    }

    #[test]
    fn wrong_vertex_kind() {
        let v = interval([1, 1, 1]);
        assert!(matches!(reflect_plus(&v, 1), Err(Error::WrongVertexKind { vertex: 1, .. })));
        assert!(matches!(reflect_minus(&v, 2), Err(Error::WrongVertexKind { vertex: 2, .. })));
    }

    #[test]
    fn isolated_vertex_becomes_zero() {
        let q = Quiver::new(3, &[(1, 2)]).unwrap();
        let s3 = Representation::simple(&q, f2(), 3).unwrap();
        assert!(reflect_plus(&s3, 3).unwrap().is_zero());
        assert!(reflect_minus(&s3, 3).unwrap().is_zero());
    }

    #[test]
    fn functor_on_identity_and_zero() {
        let v = interval([1, 1, 1]);
        let id = Morphism::identity(&v);
        let rid = reflect_plus_mor(&id, 2).unwrap();
        assert_eq!(rid, Morphism::identity(&reflect_plus(&v, 2).unwrap()));
        let zero = Morphism::zero(&v, &v).unwrap();
        assert!(reflect_plus_mor(&zero, 2).unwrap().is_zero());
    }

    #[test]
    fn inclusion_of_simple_into_projective() {
        // 2 → 1 with sink 1: P = (k ← k), S1 ⊂ P at vertex 1
        let q = Quiver::new(2, &[(2, 1)]).unwrap();
        let p = Representation::new(&q, f2(), vec![1, 1], vec![one()]).unwrap();
        let s1 = Representation::simple(&q, f2(), 1).unwrap();
        let inc = Morphism::new(&s1, &p, vec![one(), Matrix::zeros(f2(), 1, 0)]).unwrap();
        let r = reflect_plus_mor(&inc, 1).unwrap();
        // R1+(S1) = 0 and R1+(P) = S2' of dimension (0,1): the image is zero
        assert!(r.source().is_zero());
        assert_eq!(r.target().dims(), &[0, 1]);
        assert!(r.is_zero());
        // the quotient P → S2 goes to the identity on S2'
        let s2 = Representation::simple(&q, f2(), 2).unwrap();
        let quot = Morphism::new(&p, &s2, vec![Matrix::zeros(f2(), 0, 1), one()]).unwrap();
        let rq = reflect_plus_mor(&quot, 1).unwrap();
        assert_eq!(rq.source().dims(), &[0, 1]);
        assert_eq!(rq.target().dims(), &[1, 1]);
        assert_eq!((rq.comp(1).rows(), rq.comp(1).cols()), (1, 0));
        assert_eq!(rq.comp(2).get(0, 0), 1);
    }

    #[test]
    fn simple_multiplicities() {
        let v = interval([0, 1, 0]).direct_sum(&interval([1, 1, 0])).unwrap();
        assert_eq!(simple_multiplicity_at_sink(&v, 2).unwrap(), 1);
        let stripped = strip_simple_summands(&v, 2).unwrap();
        assert_eq!(stripped.dims(), &[1, 1, 0]);
    }
}
