use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::field::{FieldSpec, Matrix};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::vector::IntVector;

/// A representation over `F_p`: a space `F_p^{dims[i]}` at each vertex and a
/// `dims[target] × dims[source]` matrix per arrow, indexed by arrow id.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    quiver: Quiver,
    field: FieldSpec,
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

impl Representation {
    pub fn new(quiver: &Quiver, field: FieldSpec, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.n() {
            return Err(Error::DimensionMismatch { expected: quiver.n(), found: dims.len() });
        }
        if mats.len() != quiver.arrows().len() {
            return Err(Error::Shape(format!(
                "{} matrices for {} arrows",
                mats.len(),
                quiver.arrows().len()
            )));
        }
        for (id, (a, m)) in quiver.arrows().iter().zip(&mats).enumerate() {
            let want = (dims[a.target - 1], dims[a.source - 1]);
            if (m.rows(), m.cols()) != want {
                return Err(Error::Shape(format!(
                    "arrow {id} ({}->{}) needs {}x{}, got {}x{}",
                    a.source,
                    a.target,
                    want.0,
                    want.1,
                    m.rows(),
                    m.cols()
                )));
            }
            field.check_same(m.field())?;
        }
        Ok(Representation { quiver: quiver.clone(), field, dims, mats })
    }

    pub fn zero(quiver: &Quiver, field: FieldSpec) -> Self {
        Self::with_dims_zero_maps(quiver, field, vec![0; quiver.n()])
    }

    /// All arrow maps zero.
    pub fn with_dims_zero_maps(quiver: &Quiver, field: FieldSpec, dims: Vec<usize>) -> Self {
        let mats = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(field, dims[a.target - 1], dims[a.source - 1]))
            .collect();
        Representation { quiver: quiver.clone(), field, dims, mats }
    }

    /// The simple representation `S_i`.
    pub fn simple(quiver: &Quiver, field: FieldSpec, i: usize) -> Result<Self> {
        quiver.check_vertex(i)?;
        let mut dims = vec![0; quiver.n()];
        dims[i - 1] = 1;
        Ok(Self::with_dims_zero_maps(quiver, field, dims))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Dimension at vertex `i` (1-indexed).
    pub fn dim_at(&self, i: usize) -> usize {
        self.dims[i - 1]
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.mats[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn dim_vector(&self) -> IntVector {
        IntVector::from(self.dims.as_slice())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub(crate) fn check_compatible(&self, other: &Representation) -> Result<()> {
        if self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        self.field.check_same(other.field)
    }

    /// `self ⊕ other`, with `self` in the leading coordinates at each vertex.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.check_compatible(other)?;
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| Matrix::block_diagonal(self.field, &[a, b]))
            .collect();
        Ok(Representation { quiver: self.quiver.clone(), field: self.field, dims, mats })
    }

    /// Change of basis: `P_i` invertible at each vertex, giving maps
    /// `P_j · V_a · P_i⁻¹`.
    pub fn conjugate(&self, bases: &[Matrix]) -> Result<Representation> {
        let inverses: Vec<Matrix> = bases
            .iter()
            .map(|p| p.inverse().ok_or_else(|| Error::Shape("change of basis is singular".into())))
            .collect::<Result<_>>()?;
        let mats = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.mats)
            .map(|(a, m)| bases[a.target - 1].mul(m).mul(&inverses[a.source - 1]))
            .collect();
        Representation::new(&self.quiver, self.field, self.dims.clone(), mats)
    }

    pub fn to_json(&self) -> RepresentationJson {
        RepresentationJson {
            field: self.field.p(),
            dims: self.dims.clone(),
            mats: self
                .mats
                .iter()
                .enumerate()
                .map(|(id, m)| {
                    let rows = m.to_rows().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect();
                    (id.to_string(), rows)
                })
                .collect(),
        }
    }

    pub fn from_json(quiver: &Quiver, json: &RepresentationJson) -> Result<Self> {
        let field = FieldSpec::new(json.field)?;
        if json.dims.len() != quiver.n() {
            return Err(Error::DimensionMismatch { expected: quiver.n(), found: json.dims.len() });
        }
        for key in json.mats.keys() {
            let ok = key.parse::<usize>().map(|id| id < quiver.arrows().len()).unwrap_or(false);
            if !ok {
                return Err(Error::Parse(format!("unknown arrow id {key:?}")));
            }
        }
        let mats = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, a)| {
                let (rows, cols) = (json.dims[a.target - 1], json.dims[a.source - 1]);
                match json.mats.get(&id.to_string()) {
                    None if rows == 0 || cols == 0 => Ok(Matrix::zeros(field, rows, cols)),
                    None => Err(Error::Parse(format!("missing matrix for arrow {id}"))),
                    Some(entries) if rows == 0 && entries.is_empty() => Ok(Matrix::zeros(field, 0, cols)),
                    Some(entries) if cols == 0 && entries.is_empty() => Ok(Matrix::zeros(field, rows, 0)),
                    Some(entries) => Matrix::from_rows(field, rows, cols, entries)
                        .map_err(|e| Error::Shape(format!("arrow {id}: {e}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(quiver, field, json.dims.clone(), mats)
    }
}

/// File format for representations; matrices are row-major, keyed by arrow id.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub field: u32,
    pub dims: Vec<usize>,
    pub mats: BTreeMap<String, Vec<Vec<i64>>>,
}

/// A morphism `f: V → W`, one matrix `dim W_i × dim V_i` per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    comps: Vec<Matrix>,
}

impl Morphism {
    /// Checks shapes and every commuting square `W_a f_i = f_j V_a`.
    pub fn new(source: &Representation, target: &Representation, comps: Vec<Matrix>) -> Result<Self> {
        source.check_compatible(target)?;
        let q = source.quiver();
        if comps.len() != q.n() {
            return Err(Error::DimensionMismatch { expected: q.n(), found: comps.len() });
        }
        for (k, m) in comps.iter().enumerate() {
            if (m.rows(), m.cols()) != (target.dims[k], source.dims[k]) {
                return Err(Error::Shape(format!("component at vertex {}", k + 1)));
            }
        }
        for (id, a) in q.arrows().iter().enumerate() {
            let lhs = target.map(id).mul(&comps[a.source - 1]);
            let rhs = comps[a.target - 1].mul(source.map(id));
            if lhs != rhs {
                return Err(Error::Shape(format!("square at arrow {id} does not commute")));
            }
        }
        Ok(Morphism { source: source.clone(), target: target.clone(), comps })
    }

    pub(crate) fn new_unchecked(source: &Representation, target: &Representation, comps: Vec<Matrix>) -> Self {
        debug_assert!(Morphism::new(source, target, comps.clone()).is_ok());
        Morphism { source: source.clone(), target: target.clone(), comps }
    }

    pub fn identity(v: &Representation) -> Self {
        let comps = v.dims.iter().map(|&d| Matrix::identity(v.field, d)).collect();
        Morphism { source: v.clone(), target: v.clone(), comps }
    }

    pub fn zero(v: &Representation, w: &Representation) -> Result<Self> {
        v.check_compatible(w)?;
        let comps = v
            .dims
            .iter()
            .zip(&w.dims)
            .map(|(&dv, &dw)| Matrix::zeros(v.field, dw, dv))
            .collect();
        Ok(Morphism { source: v.clone(), target: w.clone(), comps })
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    /// Component at vertex `i` (1-indexed).
    pub fn comp(&self, i: usize) -> &Matrix {
        &self.comps[i - 1]
    }

    pub fn comps(&self) -> &[Matrix] {
        &self.comps
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        if self.target != other.source {
            return Err(Error::Shape("morphisms are not composable".into()));
        }
        let comps = self.comps.iter().zip(&other.comps).map(|(f, g)| g.mul(f)).collect();
        Ok(Morphism { source: self.source.clone(), target: other.target.clone(), comps })
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Shape("morphisms have different endpoints".into()));
        }
        let comps = self.comps.iter().zip(&other.comps).map(|(f, g)| f.add(g)).collect();
        Ok(Morphism { source: self.source.clone(), target: self.target.clone(), comps })
    }

    pub fn scale(&self, k: u32) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            comps: self.comps.iter().map(|m| m.scale(k)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(Matrix::is_injective)
    }

    /// Concatenated row-major entries of all components.
    pub fn flatten(&self) -> Vec<u32> {
        self.comps.iter().flat_map(|m| m.entries().iter().copied()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::new(2).unwrap()
    }

    #[test]
    fn shape_validation() {
        let q = Quiver::new(2, &[(1, 2)]).unwrap();
        let bad = Matrix::zeros(f2(), 1, 2);
        assert!(matches!(
            Representation::new(&q, f2(), vec![1, 1], vec![bad]),
            Err(Error::Shape(_))
        ));
        let ok = Matrix::identity(f2(), 1);
        assert!(Representation::new(&q, f2(), vec![1, 1], vec![ok]).is_ok());
    }

    #[test]
    fn json_format() {
        let q = Quiver::new(3, &[(1, 2), (3, 2)]).unwrap();
        let json: RepresentationJson =
            serde_json::from_str(r#"{"field": 2, "dims": [1,1,0], "mats": {"0": [[1]], "1": []}}"#).unwrap();
        let v = Representation::from_json(&q, &json).unwrap();
        assert_eq!(v.dims(), &[1, 1, 0]);
        assert_eq!(v.map(0).get(0, 0), 1);
        // empty matrices are written with their row count
        assert_eq!(
            serde_json::to_string(&v.to_json()).unwrap(),
            r#"{"field":2,"dims":[1,1,0],"mats":{"0":[[1]],"1":[[]]}}"#
        );
        assert_eq!(Representation::from_json(&q, &v.to_json()).unwrap(), v);
        let missing: RepresentationJson =
            serde_json::from_str(r#"{"field": 2, "dims": [1,1,0], "mats": {}}"#).unwrap();
        assert!(Representation::from_json(&q, &missing).is_err());
        let bad_field: RepresentationJson =
            serde_json::from_str(r#"{"field": 4, "dims": [1,1,0], "mats": {}}"#).unwrap();
        assert_eq!(Representation::from_json(&q, &bad_field), Err(Error::UnsupportedField(4)));
    }

    #[test]
    fn morphism_squares_checked() {
        let q = Quiver::new(2, &[(1, 2)]).unwrap();
        let p = Representation::new(&q, f2(), vec![1, 1], vec![Matrix::identity(f2(), 1)]).unwrap();
        let s2 = Representation::simple(&q, f2(), 2).unwrap();
        // S2 -> P at vertex 2 commutes; P -> S2 at vertex 2 does not
        let inc = vec![Matrix::zeros(f2(), 1, 0), Matrix::identity(f2(), 1)];
        assert!(Morphism::new(&s2, &p, inc).is_ok());
        let proj = vec![Matrix::zeros(f2(), 0, 1), Matrix::identity(f2(), 1)];
        assert!(Morphism::new(&p, &s2, proj).is_err());
    }
}
