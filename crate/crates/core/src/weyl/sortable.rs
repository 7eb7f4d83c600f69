//! Coxeter elements of acyclic orientations and c-sortable elements.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use super::{Cartan, WeylElement, Word};
use crate::error::{Error, Result};
use crate::quiver::{Quiver, UnderlyingGraph};
use crate::roots::positive_real_roots;
use crate::vector::IntMatrix;

/// A word using every generator exactly once.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct CoxeterElement {
    word: Word,
}

impl CoxeterElement {
    pub fn new(n: usize, word: Word) -> Result<Self> {
        word.check_range(n)?;
        let distinct: BTreeSet<usize> = word.letters().iter().copied().collect();
        if word.len() != n || distinct.len() != n {
            return Err(Error::MalformedCoxeter(format!(
                "{:?} must use each of 1..={n} exactly once",
                word.letters()
            )));
        }
        Ok(CoxeterElement { word })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn first(&self) -> Option<usize> {
        self.word.letters().first().copied()
    }
}

/// Linear order on the active vertices in which `s_i` precedes `s_j` whenever
/// there is an arrow `j → i`: targets before sources, smallest index first
/// among the available vertices.
pub(crate) fn coxeter_order(q: &Quiver, active: &[bool]) -> Vec<usize> {
    let n = q.n();
    // pending[i] = arrows i → k with k not yet placed
    let mut pending = vec![0usize; n + 1];
    for a in q.arrows() {
        if active[a.source] && active[a.target] {
            pending[a.source] += 1;
        }
    }
    let mut ready: BTreeSet<usize> = (1..=n).filter(|&i| active[i] && pending[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(i) = ready.pop_first() {
        order.push(i);
        for a in q.arrows() {
            if a.target == i && active[a.source] {
                pending[a.source] -= 1;
                if pending[a.source] == 0 {
                    ready.insert(a.source);
                }
            }
        }
    }
    order
}

/// `c_Q`: sinks first, ties broken by smallest vertex.
pub fn coxeter_of_quiver(q: &Quiver) -> CoxeterElement {
    let active = vec![true; q.n() + 1];
    CoxeterElement { word: Word(coxeter_order(q, &active)) }
}

/// Orient every edge `{i, j}` towards whichever of `i`, `j` comes first in `c`.
pub fn quiver_of_coxeter(graph: &UnderlyingGraph, c: &CoxeterElement) -> Result<Quiver> {
    let mut position = vec![0usize; graph.n + 1];
    for (k, &i) in c.word().letters().iter().enumerate() {
        position[i] = k;
    }
    if c.word().len() != graph.n {
        return Err(Error::MalformedCoxeter("length differs from vertex count".into()));
    }
    let arrows: Vec<(usize, usize)> = graph
        .edges
        .iter()
        .map(|&(a, b)| if position[a] < position[b] { (b, a) } else { (a, b) })
        .collect();
    Quiver::new(graph.n, &arrows)
}

/// Decides `c_Q`-sortability by the recursion on the first letter `s_i` of
/// `c`: without a left descent at `i` the element must live in the parabolic
/// subgroup avoiding `s_i` and is tested there; with one, `s_i w` is tested
/// against the rotated Coxeter element `c_{μ_i(Q)}`.
pub fn is_c_sortable(q: &Quiver, w: &WeylElement) -> Result<bool> {
    if !w.belongs_to(q) {
        return Err(Error::QuiverMismatch);
    }
    let mut orientation = q.clone();
    let mut active = vec![true; q.n() + 1];
    active[0] = false;
    let mut w = w.clone();
    loop {
        if w.is_identity() {
            return Ok(true);
        }
        let Some(&i) = coxeter_order(&orientation, &active).first() else {
            return Ok(false);
        };
        if w.left_descent(i)? {
            w = w.left_multiply(i)?;
            orientation = orientation.mutate_at(i)?;
        } else {
            if !w.avoids_generator(i) {
                return Ok(false);
            }
            orientation = orientation.delete_vertex(i)?;
            active[i] = false;
        }
    }
}

/// Upper bound on the length of enumerated sortable elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LengthBound {
    Finite(usize),
    /// Everything; only accepted for Dynkin quivers, where `W` is finite.
    Unbounded,
}

/// All c-sortable elements up to the length bound, ordered by length and
/// then by sorting word.
///
/// Candidates are the words `c_{J1} c_{J2} … c_{Jk}` with
/// `J1 ⊇ J2 ⊇ … ⊇ Jk ≠ ∅`, grown depth first; a branch is cut as soon as
/// its word stops being reduced or exceeds the bound.
pub fn enumerate_c_sortable(q: &Quiver, bound: LengthBound) -> Result<Vec<WeylElement>> {
    let max_len = match bound {
        LengthBound::Finite(b) => b,
        LengthBound::Unbounded => {
            if !q.dynkin_type().is_dynkin() {
                return Err(Error::UnsupportedScope(
                    "unbounded sortable enumeration needs a Dynkin quiver".into(),
                ));
            }
            // longest element has one inversion per positive root
            positive_real_roots(q, usize::MAX)?.roots.len()
        }
    };
    if q.n() > 63 {
        return Err(Error::UnsupportedScope("at most 63 vertices".into()));
    }
    let c = coxeter_of_quiver(q);
    let cartan = Arc::new(Cartan::of(q));
    let mut found: HashMap<IntMatrix, Word> = HashMap::new();
    found.insert(IntMatrix::identity(q.n()), Word::empty());
    let full: u64 = if q.n() == 0 { 0 } else { u64::MAX >> (64 - q.n()) };
    let mut search = SortableSearch { cartan: &cartan, c: c.word().letters(), max_len, found };
    search.extend(full, &IntMatrix::identity(q.n()), &mut Vec::new());

    let mut out: Vec<WeylElement> = search
        .found
        .into_iter()
        .map(|(matrix, word)| WeylElement { cartan: cartan.clone(), word, matrix })
        .collect();
    out.sort_by(|a, b| (a.length(), a.word()).cmp(&(b.length(), b.word())));
    Ok(out)
}

struct SortableSearch<'a> {
    cartan: &'a Cartan,
    c: &'a [usize],
    max_len: usize,
    found: HashMap<IntMatrix, Word>,
}

impl SortableSearch<'_> {
    fn extend(&mut self, allowed: u64, prefix: &IntMatrix, word: &mut Vec<usize>) {
        // nonempty submasks of `allowed`, largest first
        let mut sub = allowed;
        while sub != 0 {
            self.try_block(sub, prefix, word);
            sub = (sub - 1) & allowed;
        }
    }

    fn try_block(&mut self, block: u64, prefix: &IntMatrix, word: &mut Vec<usize>) {
        let start = word.len();
        let mut matrix = prefix.clone();
        let mut ok = true;
        for &i in self.c {
            if block & (1 << (i - 1)) == 0 {
                continue;
            }
            if word.len() >= self.max_len || !matrix.column(i).is_positive() {
                ok = false;
                break;
            }
            word.push(i);
            matrix = self.cartan.right_multiply(&matrix, i);
        }
        if ok {
            self.found
                .entry(matrix.clone())
                .and_modify(|w| {
                    if word.as_slice() < w.letters() {
                        *w = Word(word.clone());
                    }
                })
                .or_insert_with(|| Word(word.clone()));
            self.extend(block, &matrix, word);
        }
        word.truncate(start);
    }
}
