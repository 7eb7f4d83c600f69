//! Torsion-free classes of a Dynkin quiver stored as sets of indecomposable
//! dimension vectors, the map `w ↦ F(w)` from sortable elements, its inverse,
//! and a brute-force oracle.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linrep::subreps::{DEFAULT_EXT_GUARD, DEFAULT_SUBREP_GUARD};
use crate::linrep::{enumerate_extensions, enumerate_subreps, FieldSpec, IndecCatalog};
use crate::quiver::Quiver;
use crate::roots::{classify_vector, default_search_bound, RootClass};
use crate::vector::IntVector;
use crate::weyl::sortable::coxeter_order;
use crate::weyl::{enumerate_c_sortable, is_c_sortable, simple_reflection, LengthBound, WeylElement, Word};

/// Largest number of indecomposables `enumerate_tfc` accepts.
pub const DEFAULT_TFC_GUARD: usize = 12;

/// A full additive subcategory, recorded by the dimension vectors of its
/// indecomposables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorsionFreeClass {
    quiver: Quiver,
    field: FieldSpec,
    roots: BTreeSet<IntVector>,
}

impl TorsionFreeClass {
    /// Checks that every member is a positive real root of `q`.
    pub fn new(q: &Quiver, field: FieldSpec, roots: impl IntoIterator<Item = IntVector>) -> Result<Self> {
        let roots: BTreeSet<IntVector> = roots.into_iter().collect();
        for r in &roots {
            r.check_len(q.n())?;
            if classify_vector(q, r, default_search_bound(r))? != RootClass::RealPositive {
                return Err(Error::NotARealRoot(r.to_string()));
            }
        }
        Ok(TorsionFreeClass { quiver: q.clone(), field, roots })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn roots(&self) -> &BTreeSet<IntVector> {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, root: &IntVector) -> bool {
        self.roots.contains(root)
    }

    pub fn to_json(&self) -> TorsionFreeClassJson {
        TorsionFreeClassJson { quiver: self.quiver.clone(), roots: self.roots.iter().cloned().collect() }
    }

    pub fn from_json(json: &TorsionFreeClassJson, field: FieldSpec) -> Result<Self> {
        TorsionFreeClass::new(&json.quiver, field, json.roots.iter().cloned())
    }

    /// `add{…}` with indecomposables named as in [`indec_name`].
    pub fn describe(&self) -> String {
        if self.roots.is_empty() {
            return "0".to_string();
        }
        let names: Vec<String> = self.roots.iter().map(|r| indec_name(&self.quiver, r)).collect();
        format!("add {}", names.join(", "))
    }
}

/// `{"quiver": …, "roots": [[1,0],[1,1]]}`
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TorsionFreeClassJson {
    pub quiver: Quiver,
    pub roots: Vec<IntVector>,
}

/// Number of paths from `i` to `j`, computed on an acyclic quiver.
fn path_counts_from(q: &Quiver, i: usize) -> IntVector {
    let mut counts = q.zero_vector();
    counts.set(i, One::one());
    // vertices reachable from i are visited in topological order
    let order = topological_order(q);
    for &v in &order {
        let c = counts.at(v).clone();
        if c.is_zero() {
            continue;
        }
        for a in q.outgoing(v) {
            let t = q.arrow(a).target;
            let sum = counts.at(t) + &c;
            counts.set(t, sum);
        }
    }
    counts
}

fn topological_order(q: &Quiver) -> Vec<usize> {
    let mut indegree: Vec<usize> = (0..=q.n()).map(|i| if i == 0 { 0 } else { q.incoming(i).len() }).collect();
    let mut ready: Vec<usize> = (1..=q.n()).filter(|&i| indegree[i] == 0).rev().collect();
    let mut order = Vec::with_capacity(q.n());
    while let Some(v) = ready.pop() {
        order.push(v);
        for a in q.outgoing(v) {
            let t = q.arrow(a).target;
            indegree[t] -= 1;
            if indegree[t] == 0 {
                ready.push(t);
            }
        }
    }
    order
}

/// `S_i` for a simple, `P_i` or `I_i` for an indecomposable projective or
/// injective, and the dimension vector otherwise.
pub fn indec_name(q: &Quiver, root: &IntVector) -> String {
    if let Some(i) = root.as_simple() {
        return format!("S{i}");
    }
    for i in 1..=q.n() {
        if &path_counts_from(q, i) == root {
            return format!("P{i}");
        }
    }
    let reversed = Quiver::new(q.n(), &q.arrows().iter().map(|a| (a.target, a.source)).collect::<Vec<_>>())
        .expect("reversing arrows keeps a quiver acyclic");
    for i in 1..=q.n() {
        if &path_counts_from(&reversed, i) == root {
            return format!("I{i}");
        }
    }
    root.to_string()
}

/// `F(w)`: the indecomposables whose dimension vectors are the inversions of
/// `w`.
pub fn tfc_of_sortable(q: &Quiver, field: FieldSpec, w: &WeylElement) -> Result<TorsionFreeClass> {
    if !is_c_sortable(q, w)? {
        return Err(Error::NotSortable);
    }
    let roots = w.inversion_set().as_set();
    if roots.len() != w.length() {
        return Err(Error::Invariant("inversion set size differs from length".into()));
    }
    TorsionFreeClass::new(q, field, roots)
}

/// Inverse of [`tfc_of_sortable`]. Let `i` be the first letter of the
/// Coxeter element of the current orientation. If `S_i ∉ F`, then `F` lives
/// on the quiver with `i` deleted. Otherwise `w = s_i w'`, where `w'`
/// corresponds to `{s_i α : α ∈ F, α ≠ e_i}` on `μ_i(Q)`. With `check`
/// set, `F` first goes through the oracle.
pub fn sortable_of_tfc(f: &TorsionFreeClass, check: bool) -> Result<WeylElement> {
    let q = f.quiver();
    if check && !is_torsion_free_class(f)? {
        return Err(Error::NotTorsionFree);
    }
    let mut orientation = q.clone();
    let mut active = vec![true; q.n() + 1];
    active[0] = false;
    let mut current: BTreeSet<IntVector> = f.roots().clone();
    let mut letters = Vec::new();
    while !current.is_empty() {
        let Some(&i) = coxeter_order(&orientation, &active).first() else {
            return Err(Error::Invariant("class outlived every vertex".into()));
        };
        let e_i = q.simple_root(i);
        if current.contains(&e_i) {
            let before = current.len();
            current = current
                .iter()
                .filter(|r| **r != e_i)
                .map(|r| simple_reflection(q, i, r))
                .collect::<Result<_>>()?;
            if current.len() + 1 != before || current.iter().any(|r| !r.is_positive()) {
                return Err(Error::Invariant(format!("reflecting at {i} left the positive roots")));
            }
            letters.push(i);
            orientation = orientation.mutate_at(i)?;
        } else {
            if current.iter().any(|r| !r.at(i).is_zero()) {
                return Err(Error::Invariant(format!("class without S{i} is supported at {i}")));
            }
            orientation = orientation.delete_vertex(i)?;
            active[i] = false;
        }
    }
    let w = WeylElement::from_word(q, &Word(letters.clone()))?;
    if w.length() != letters.len() {
        return Err(Error::Invariant("reconstructed word is not reduced".into()));
    }
    Ok(w)
}

/// Closure requirements of each indecomposable, precomputed once per quiver
/// and field: which indecomposables occur as summands of its subreps, and of
/// middle terms of extensions between each ordered pair.
#[derive(Clone, Debug)]
pub struct TorsionOracle {
    catalog: IndecCatalog,
    index: BTreeMap<IntVector, usize>,
    subrep_requirements: Vec<u64>,
    /// `[x][z]`: summands of middle terms `Y` in `0 → M_x → Y → M_z → 0`.
    extension_requirements: Vec<Vec<u64>>,
}

impl TorsionOracle {
    pub fn new(q: &Quiver, field: FieldSpec) -> Result<Self> {
        let catalog = IndecCatalog::new(q, field)?;
        if catalog.len() > 64 {
            return Err(Error::ResourceLimit { what: "indecomposables", value: catalog.len() as u128, limit: 64 });
        }
        let index: BTreeMap<IntVector, usize> =
            catalog.entries().iter().enumerate().map(|(k, (r, _))| (r.clone(), k)).collect();
        let mask_of = |parts: Vec<(IntVector, usize)>| -> u64 {
            parts.iter().fold(0, |m, (r, _)| m | (1u64 << index[r]))
        };
        let mut subrep_requirements = Vec::with_capacity(catalog.len());
        for (_, m) in catalog.entries() {
            let mut mask = 0;
            for sub in enumerate_subreps(m, DEFAULT_SUBREP_GUARD)? {
                mask |= mask_of(catalog.decompose(&sub.rep)?);
            }
            subrep_requirements.push(mask);
        }
        let mut extension_requirements = vec![vec![0u64; catalog.len()]; catalog.len()];
        for (x, (_, mx)) in catalog.entries().iter().enumerate() {
            for (z, (_, mz)) in catalog.entries().iter().enumerate() {
                let mut mask = 0;
                for y in enumerate_extensions(mz, mx, DEFAULT_EXT_GUARD)? {
                    mask |= mask_of(catalog.decompose(&y)?);
                }
                extension_requirements[x][z] = mask;
            }
        }
        Ok(TorsionOracle { catalog, index, subrep_requirements, extension_requirements })
    }

    pub fn catalog(&self) -> &IndecCatalog {
        &self.catalog
    }

    fn mask(&self, f: &TorsionFreeClass) -> Result<u64> {
        if f.quiver() != self.catalog.quiver() {
            return Err(Error::QuiverMismatch);
        }
        f.field().check_same(self.catalog.field())?;
        f.roots().iter().try_fold(0u64, |m, r| {
            self.index.get(r).map(|&k| m | (1 << k)).ok_or_else(|| Error::NotARealRoot(r.to_string()))
        })
    }

    fn roots_of(&self, mask: u64) -> BTreeSet<IntVector> {
        self.catalog
            .entries()
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, (r, _))| r.clone())
            .collect()
    }

    fn subrep_closed(&self, mask: u64) -> bool {
        members(mask).all(|k| self.subrep_requirements[k] & !mask == 0)
    }

    fn extension_closed(&self, mask: u64) -> bool {
        members(mask).all(|x| members(mask).all(|z| self.extension_requirements[x][z] & !mask == 0))
    }

    pub fn accepts(&self, f: &TorsionFreeClass) -> Result<bool> {
        let mask = self.mask(f)?;
        Ok(self.subrep_closed(mask) && self.extension_closed(mask))
    }

    /// Every subset of the indecomposables that passes both legs, sorted by
    /// size and then by root list.
    pub fn enumerate(&self, guard: usize) -> Result<Vec<TorsionFreeClass>> {
        let n = self.catalog.len();
        if n > guard {
            return Err(Error::ResourceLimit { what: "indecomposables", value: n as u128, limit: guard as u128 });
        }
        let q = self.catalog.quiver();
        let field = self.catalog.field();
        let mut classes: Vec<TorsionFreeClass> = (0..1u64 << n)
            .filter(|&m| self.subrep_closed(m) && self.extension_closed(m))
            .map(|m| TorsionFreeClass { quiver: q.clone(), field, roots: self.roots_of(m) })
            .collect();
        classes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.roots.cmp(&b.roots)));
        Ok(classes)
    }
}

fn members(mask: u64) -> impl Iterator<Item = usize> + Clone {
    (0..64).filter(move |k| mask >> k & 1 == 1)
}

/// Oracle check: closed under subrepresentations of indecomposables and
/// under extensions between indecomposables.
pub fn is_torsion_free_class(f: &TorsionFreeClass) -> Result<bool> {
    TorsionOracle::new(f.quiver(), f.field())?.accepts(f)
}

pub fn enumerate_tfc(q: &Quiver, field: FieldSpec) -> Result<Vec<TorsionFreeClass>> {
    TorsionOracle::new(q, field)?.enumerate(DEFAULT_TFC_GUARD)
}

/// One sortable element and its class.
#[derive(Clone, Debug, Serialize)]
pub struct BijectionRow {
    pub word: Word,
    pub roots: Vec<IntVector>,
    pub class: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub quiver: Quiver,
    pub field: FieldSpec,
    pub sortable_count: usize,
    pub tfc_count: usize,
    pub counts_match: bool,
    pub injective: bool,
    pub lands_in_tfc: bool,
    pub round_trip_sortable: bool,
    pub round_trip_tfc: bool,
    pub rows: Vec<BijectionRow>,
    /// Errors hit along the way; any entry fails the report.
    pub gaps: Vec<String>,
    pub pass: bool,
}

impl BijectionReport {
    /// Two columns, `w` and `F(w)`.
    pub fn table(&self) -> String {
        let width = self.rows.iter().map(|r| r.word.to_string().len()).max().unwrap_or(1).max(1);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  F(w)", "w");
        for row in &self.rows {
            let _ = writeln!(out, "{:<width$}  {}", row.word.to_string(), row.class);
        }
        let _ = writeln!(
            out,
            "sortable: {}  torsion-free: {}  pass: {}",
            self.sortable_count, self.tfc_count, self.pass
        );
        out
    }
}

/// Checks that `F` is a bijection from sortable elements onto the classes
/// found by the oracle, and that [`sortable_of_tfc`] inverts it.
pub fn verify_bijection(q: &Quiver, field: FieldSpec) -> Result<BijectionReport> {
    let mut gaps = Vec::new();
    let sortables = enumerate_c_sortable(q, LengthBound::Unbounded)?;
    let classes = match enumerate_tfc(q, field) {
        Ok(c) => c,
        Err(e) => {
            gaps.push(format!("enumerate_tfc: {e}"));
            Vec::new()
        }
    };
    let class_set: BTreeSet<BTreeSet<IntVector>> = classes.iter().map(|c| c.roots.clone()).collect();
    let mut rows = Vec::with_capacity(sortables.len());
    let mut images = BTreeSet::new();
    let mut lands_in_tfc = true;
    let mut round_trip_sortable = true;
    for w in &sortables {
        match tfc_of_sortable(q, field, w) {
            Ok(f) => {
                lands_in_tfc &= class_set.contains(&f.roots);
                match sortable_of_tfc(&f, false) {
                    Ok(back) => round_trip_sortable &= &back == w,
                    Err(e) => {
                        round_trip_sortable = false;
                        gaps.push(format!("sortable_of_tfc({}): {e}", w.word()));
                    }
                }
                rows.push(BijectionRow {
                    word: w.word().clone(),
                    roots: f.roots.iter().cloned().collect(),
                    class: f.describe(),
                });
                images.insert(f.roots);
            }
            Err(e) => gaps.push(format!("tfc_of_sortable({}): {e}", w.word())),
        }
    }
    let injective = images.len() == sortables.len();
    let mut round_trip_tfc = true;
    for f in &classes {
        let back = sortable_of_tfc(f, false).and_then(|w| tfc_of_sortable(q, field, &w));
        match back {
            Ok(g) => round_trip_tfc &= g.roots == f.roots,
            Err(e) => {
                round_trip_tfc = false;
                gaps.push(format!("class {}: {e}", f.describe()));
            }
        }
    }
    let counts_match = sortables.len() == classes.len();
    let pass = counts_match && injective && lands_in_tfc && round_trip_sortable && round_trip_tfc && gaps.is_empty();
    Ok(BijectionReport {
        quiver: q.clone(),
        field,
        sortable_count: sortables.len(),
        tfc_count: classes.len(),
        counts_match,
        injective,
        lands_in_tfc,
        round_trip_sortable,
        round_trip_tfc,
        rows,
        gaps,
        pass,
    })
}
