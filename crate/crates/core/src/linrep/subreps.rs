//! Exhaustive enumeration of subrepresentations and of extensions over a
//! small prime field.

use super::field::{FieldSpec, Matrix};
use super::hom::ext_presentation;
use super::rep::{Morphism, Representation};
use crate::error::{Error, Result};

pub const DEFAULT_SUBREP_GUARD: u128 = 1_000_000;
pub const DEFAULT_EXT_GUARD: usize = 6;

/// A subrepresentation with its inclusion `U ↪ V`.
#[derive(Clone, Debug)]
pub struct Subrep {
    pub rep: Representation,
    pub inclusion: Morphism,
}

/// Number of subspaces of `F_p^d` (sum of Gaussian binomials).
pub fn subspace_count(p: u32, d: usize) -> u128 {
    let p = p as u128;
    let mut total: u128 = 0;
    for k in 0..=d {
        // [d choose k]_p = Π_{t<k} (p^{d-t} - 1) / (p^{t+1} - 1)
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for t in 0..k {
            num = num.saturating_mul(p.saturating_pow((d - t) as u32) - 1);
            den = den.saturating_mul(p.saturating_pow((t + 1) as u32) - 1);
        }
        total = total.saturating_add(num / den);
    }
    total
}

/// Every subspace of `F_p^d`, each as a `d × k` matrix whose columns are the
/// rows of its reduced row echelon form. Ordered by dimension, then pivot
/// set, then free entries.
pub fn subspaces(field: FieldSpec, d: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for k in 0..=d {
        for pivots in combinations(d, k) {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pv = pivots.clone();
                    ((pivots[r] + 1)..d).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let mut values = vec![0u32; free.len()];
            loop {
                let mut m = Matrix::zeros(field, k, d);
                for (r, &pc) in pivots.iter().enumerate() {
                    m.set(r, pc, 1);
                }
                for (&(r, c), &x) in free.iter().zip(&values) {
                    m.set(r, c, x);
                }
                out.push(m.transpose());
                if !increment(&mut values, field.p()) {
                    break;
                }
            }
        }
    }
    out
}

fn combinations(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..d {
            cur.push(c);
            go(c + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, d, k, &mut Vec::new(), &mut out);
    out
}

/// Odometer over `F_p^len`; false once it wraps around.
fn increment(values: &mut [u32], p: u32) -> bool {
    for x in values.iter_mut().rev() {
        *x += 1;
        if *x < p {
            return true;
        }
        *x = 0;
    }
    false
}

fn check_small_field(field: FieldSpec) -> Result<()> {
    if field.p() > 3 {
        return Err(Error::UnsupportedScope(format!(
            "exhaustive enumeration is limited to F_2 and F_3, got F_{}",
            field.p()
        )));
    }
    Ok(())
}

/// All subrepresentations of `V`: tuples of subspaces `U_i ⊆ V_i` with
/// `V_a(U_i) ⊆ U_j` for each arrow `a: i → j`. The product of the subspace
/// counts over the vertices must not exceed `guard`.
pub fn enumerate_subreps(v: &Representation, guard: u128) -> Result<std::vec::IntoIter<Subrep>> {
    let field = v.field();
    check_small_field(field)?;
    let total = v
        .dims()
        .iter()
        .fold(1u128, |acc, &d| acc.saturating_mul(subspace_count(field.p(), d)));
    if total > guard {
        return Err(Error::ResourceLimit { what: "subspace tuples", value: total, limit: guard });
    }
    let choices: Vec<Vec<Matrix>> = v.dims().iter().map(|&d| subspaces(field, d)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(v.dims().len());
    search_subreps(v, &choices, &mut chosen, &mut out)?;
    Ok(out.into_iter())
}

fn search_subreps(
    v: &Representation,
    choices: &[Vec<Matrix>],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Subrep>,
) -> Result<()> {
    let q = v.quiver();
    let vertex = chosen.len() + 1;
    if vertex > q.n() {
        out.push(build_subrep(v, choices, chosen)?);
        return Ok(());
    }
    for k in 0..choices[vertex - 1].len() {
        chosen.push(k);
        let closed = q.arrows().iter().enumerate().all(|(id, a)| {
            if a.source.max(a.target) != vertex {
                return true;
            }
            let bi = &choices[a.source - 1][chosen[a.source - 1]];
            let bj = &choices[a.target - 1][chosen[a.target - 1]];
            bj.solve(&v.map(id).mul(bi)).is_some()
        });
        if closed {
            search_subreps(v, choices, chosen, out)?;
        }
        chosen.pop();
    }
    Ok(())
}

fn build_subrep(v: &Representation, choices: &[Vec<Matrix>], chosen: &[usize]) -> Result<Subrep> {
    let q = v.quiver();
    let bases: Vec<&Matrix> = chosen.iter().enumerate().map(|(k, &c)| &choices[k][c]).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
    let mats = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(id, a)| {
            let bi = bases[a.source - 1];
            let bj = bases[a.target - 1];
            bj.solve(&v.map(id).mul(bi))
                .ok_or_else(|| Error::Invariant("subrepresentation not closed".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let rep = Representation::new(q, v.field(), dims, mats)?;
    let inclusion = Morphism::new(&rep, v, bases.into_iter().cloned().collect())?;
    Ok(Subrep { rep, inclusion })
}

/// Middle terms `Y` of the extensions `0 → X → Y → Z → 0`, one per class in
/// `Ext¹(Z, X)`. `Y_i = X_i ⊕ Z_i` and `Y_a = [[X_a, ψ_a], [0, Z_a]]` with
/// `ψ` ranging over the complement coordinates of the Ext presentation. The
/// split extension comes first.
pub fn enumerate_extensions(
    z: &Representation,
    x: &Representation,
    guard: usize,
) -> Result<std::vec::IntoIter<Representation>> {
    check_small_field(z.field())?;
    let (coker, offsets) = ext_presentation(z, x)?;
    let e = coker.dim();
    if e > guard {
        return Err(Error::ResourceLimit { what: "Ext^1 dimension", value: e as u128, limit: guard as u128 });
    }
    let field = z.field();
    let q = z.quiver();
    let dims: Vec<usize> = x.dims().iter().zip(z.dims()).map(|(a, b)| a + b).collect();
    let mut coefficients = vec![0u32; e];
    let mut out = Vec::new();
    loop {
        let mut flat = vec![0u32; coker.ambient];
        for (&c, &k) in coker.complement.iter().zip(&coefficients) {
            flat[c] = k;
        }
        let mats = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, a)| {
                let (i, j) = (a.source, a.target);
                let (xi, xj, zi, zj) = (x.dim_at(i), x.dim_at(j), z.dim_at(i), z.dim_at(j));
                let mut psi = Matrix::zeros(field, xj, zi);
                for r in 0..xj {
                    for c in 0..zi {
                        psi.set(r, c, flat[offsets[id] + r * zi + c]);
                    }
                }
                let mut y = Matrix::zeros(field, xj + zj, xi + zi);
                y.put(0, 0, x.map(id));
                y.put(0, xi, &psi);
                y.put(xj, xi, z.map(id));
                y
            })
            .collect();
        out.push(Representation::new(q, field, dims.clone(), mats)?);
        if !increment(&mut coefficients, field.p()) {
            break;
        }
    }
    Ok(out.into_iter())
}
