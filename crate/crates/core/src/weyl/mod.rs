//! The Weyl group of a quiver acting on ℤⁿ.
//!
//! Elements are stored as a reduced word together with the integer matrix of
//! their action on the root lattice. The geometric representation is
//! faithful, so two elements are equal exactly when their matrices are.
//! Reducedness is tested by the negative-root criterion: a word
//! `s_{i1}…s_{ir}` is reduced iff every prefix-reflected simple root
//! `s_{i1}…s_{i(k-1)} e_{ik}` is positive.

pub(crate) mod sortable;

pub use sortable::{
    coxeter_of_quiver, enumerate_c_sortable, is_c_sortable, quiver_of_coxeter, CoxeterElement,
    LengthBound,
};

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::vector::{IntMatrix, IntVector};

/// A finite sequence of generator indices (1-indexed); not necessarily reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i == 0 || i > n) {
            Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n }),
            None => Ok(()),
        }
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// Parses `"3,2,1"`; the empty string is the empty word.
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad letter {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for i in &self.0 {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// Gram matrix of the symmetric form on simple roots. Only the unoriented
/// graph matters, so every orientation of a quiver shares one Weyl group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cartan {
    n: usize,
    entries: Vec<i64>,
}

impl Cartan {
    pub fn of(q: &Quiver) -> Self {
        let n = q.n();
        let entries = q.cartan_matrix().into_iter().flatten().collect();
        Cartan { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(e_i, e_j)`, 1-indexed.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// `(e_i, v)`.
    pub fn pair_simple(&self, i: usize, v: &IntVector) -> BigInt {
        (1..=self.n)
            .filter(|&j| self.entry(i, j) != 0)
            .map(|j| v.at(j) * self.entry(i, j))
            .sum()
    }

    /// `s_i(v) = v − (e_i, v)·e_i`.
    pub fn reflect(&self, i: usize, v: &IntVector) -> IntVector {
        let mut out = v.clone();
        let shift = self.pair_simple(i, v);
        let new = v.at(i) - shift;
        out.set(i, new);
        out
    }

    /// Matrix of `M·s_i`, computed column-wise from `M`.
    fn right_multiply(&self, m: &IntMatrix, i: usize) -> IntMatrix {
        let n = self.n;
        let mut out = m.clone();
        for j in 1..=n {
            let c = self.entry(i, j);
            if c == 0 {
                continue;
            }
            for r in 0..n {
                let delta = m.get(r, i - 1) * c;
                *out.get_mut(r, j - 1) -= delta;
            }
        }
        out
    }

    /// Matrix of `s_{i1}…s_{ir}`.
    pub fn matrix_of(&self, word: &Word) -> IntMatrix {
        word.letters()
            .iter()
            .fold(IntMatrix::identity(self.n), |m, &i| self.right_multiply(&m, i))
    }
}

/// Result of walking a word and reflecting simple roots by its prefixes.
enum Scan {
    /// All prefix roots positive: the word is reduced.
    Reduced { roots: Vec<IntVector>, matrix: IntMatrix },
    /// Prefix root at `position` is negative; it equals minus the root at
    /// `partner`, so deleting both letters gives the same element.
    Negative { position: usize, partner: usize },
}

fn scan(cartan: &Cartan, word: &Word) -> Result<Scan> {
    word.check_range(cartan.n())?;
    let mut prefix = IntMatrix::identity(cartan.n());
    let mut roots: Vec<IntVector> = Vec::with_capacity(word.len());
    for (k, &i) in word.letters().iter().enumerate() {
        let root = prefix.column(i);
        if root.is_negative() {
            let target = -&root;
            let partner = roots.iter().position(|r| *r == target).ok_or_else(|| {
                Error::Invariant(format!("negative prefix root {root} has no partner"))
            })?;
            return Ok(Scan::Negative { position: k, partner });
        }
        if !root.is_positive() {
            return Err(Error::Invariant(format!("prefix root {root} is not sign-coherent")));
        }
        roots.push(root);
        prefix = cartan.right_multiply(&prefix, i);
    }
    Ok(Scan::Reduced { roots, matrix: prefix })
}

fn reduce_with(cartan: &Cartan, word: &Word) -> Result<(Word, Vec<IntVector>, IntMatrix)> {
    let mut letters = word.clone();
    loop {
        match scan(cartan, &letters)? {
            Scan::Reduced { roots, matrix } => return Ok((letters, roots, matrix)),
            Scan::Negative { position, partner } => {
                letters.0.remove(position);
                letters.0.remove(partner);
            }
        }
    }
}

/// An element of `W`: reduced word plus action matrix.
#[derive(Clone, Debug)]
pub struct WeylElement {
    cartan: Arc<Cartan>,
    word: Word,
    matrix: IntMatrix,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WeylElement {
    pub fn identity(q: &Quiver) -> Self {
        Self::identity_for(Arc::new(Cartan::of(q)))
    }

    fn identity_for(cartan: Arc<Cartan>) -> Self {
        let matrix = IntMatrix::identity(cartan.n());
        WeylElement { cartan, word: Word::empty(), matrix }
    }

    /// Element represented by an arbitrary word; the stored word is reduced.
    pub fn from_word(q: &Quiver, word: &Word) -> Result<Self> {
        Self::from_word_for(Arc::new(Cartan::of(q)), word)
    }

    fn from_word_for(cartan: Arc<Cartan>, word: &Word) -> Result<Self> {
        let (word, _, matrix) = reduce_with(&cartan, word)?;
        Ok(WeylElement { cartan, word, matrix })
    }

    pub fn simple(q: &Quiver, i: usize) -> Result<Self> {
        Self::from_word(q, &Word(vec![i]))
    }

    /// Element with the same Weyl group as `self` given by `word`.
    pub fn sibling(&self, word: &Word) -> Result<Self> {
        Self::from_word_for(self.cartan.clone(), word)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn cartan(&self) -> &Cartan {
        &self.cartan
    }

    pub fn n(&self) -> usize {
        self.cartan.n()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, v: &IntVector) -> Result<IntVector> {
        v.check_len(self.n())?;
        Ok(self.matrix.apply(v))
    }

    /// Whether this element belongs to the Weyl group of `q`.
    pub fn belongs_to(&self, q: &Quiver) -> bool {
        *self.cartan == Cartan::of(q)
    }

    fn same_group(&self, other: &WeylElement) -> Result<()> {
        if Arc::ptr_eq(&self.cartan, &other.cartan) || self.cartan == other.cartan {
            Ok(())
        } else {
            Err(Error::QuiverMismatch)
        }
    }

    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        self.same_group(other)?;
        let (word, _, matrix) = reduce_with(&self.cartan, &self.word.concat(&other.word))?;
        debug_assert_eq!(matrix, self.matrix.mul(&other.matrix));
        Ok(WeylElement { cartan: self.cartan.clone(), word, matrix })
    }

    pub fn invert(&self) -> WeylElement {
        let word = self.word.reversed();
        let matrix = self.cartan.matrix_of(&word);
        WeylElement { cartan: self.cartan.clone(), word, matrix }
    }

    /// `s_i · self`.
    pub fn left_multiply(&self, i: usize) -> Result<WeylElement> {
        self.sibling(&Word(vec![i]).concat(&self.word))
    }

    /// Inversion set read off the stored reduced word.
    pub fn inversion_set(&self) -> InversionSet {
        match scan(&self.cartan, &self.word) {
            Ok(Scan::Reduced { roots, .. }) => InversionSet { roots },
            _ => unreachable!("stored word is reduced"),
        }
    }

    /// `ℓ(s_i w) < ℓ(w)`, decided by the sign of `w⁻¹(e_i)`.
    pub fn left_descent(&self, i: usize) -> Result<bool> {
        if i == 0 || i > self.n() {
            return Err(Error::VertexOutOfRange { vertex: i, n: self.n() });
        }
        let mut v = IntVector::unit(self.n(), i);
        for &letter in self.word.letters() {
            v = self.cartan.reflect(letter, &v);
        }
        if v.is_negative() {
            Ok(true)
        } else if v.is_positive() {
            Ok(false)
        } else {
            Err(Error::Invariant(format!("w^-1(e_{i}) = {v} is not sign-coherent")))
        }
    }

    /// Membership in the parabolic subgroup generated by all `s_j`, `j ≠ i`:
    /// no inversion has a nonzero `i`-coordinate.
    pub fn avoids_generator(&self, i: usize) -> bool {
        self.inversion_set().roots.iter().all(|r| r.at(i).is_zero())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            word: &'a Word,
            matrix: &'a IntMatrix,
        }
        Repr { word: &self.word, matrix: &self.matrix }.serialize(s)
    }
}

/// Inversion set in the order induced by a reduced word.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct InversionSet {
    pub roots: Vec<IntVector>,
}

impl InversionSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn as_set(&self) -> BTreeSet<IntVector> {
        self.roots.iter().cloned().collect()
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        self.roots.contains(v)
    }
}

/// `s_i(v) = v − (e_i, v)·e_i`.
pub fn simple_reflection(q: &Quiver, i: usize, v: &IntVector) -> Result<IntVector> {
    q.check_vertex(i)?;
    v.check_len(q.n())?;
    Ok(Cartan::of(q).reflect(i, v))
}

/// `t_β(v) = v − 2(β,v)/(β,β)·β`, provided the result is integral.
pub fn reflect_by_root(q: &Quiver, beta: &IntVector, v: &IntVector) -> Result<IntVector> {
    let bb = q.sym_form(beta, beta)?;
    if bb.is_zero() {
        return Err(Error::SingularRoot);
    }
    let bv: BigInt = q.sym_form(beta, v)? * 2;
    let (k, rem) = bv.div_rem(&bb);
    if !rem.is_zero() {
        return Err(Error::NonIntegral);
    }
    Ok(v - &beta.scaled(&k))
}

/// Ordered inversion set of a reduced word; non-reduced words are rejected.
pub fn inversion_set(q: &Quiver, word: &Word) -> Result<InversionSet> {
    match scan(&Cartan::of(q), word)? {
        Scan::Reduced { roots, .. } => Ok(InversionSet { roots }),
        Scan::Negative { .. } => Err(Error::NonReducedWord(word.0.clone())),
    }
}

pub fn is_reduced(q: &Quiver, word: &Word) -> Result<bool> {
    match scan(&Cartan::of(q), word)? {
        Scan::Reduced { roots, .. } => {
            let distinct: HashSet<&IntVector> = roots.iter().collect();
            Ok(distinct.len() == roots.len())
        }
        Scan::Negative { .. } => Ok(false),
    }
}

/// Deletes letter pairs flagged by negative prefix roots until the word is
/// reduced. Reduced input is returned unchanged.
pub fn reduce_word(q: &Quiver, word: &Word) -> Result<Word> {
    reduce_with(&Cartan::of(q), word).map(|(w, _, _)| w)
}

pub fn left_descent(i: usize, w: &WeylElement) -> Result<bool> {
    w.left_descent(i)
}

/// Breadth-first enumeration of group elements of length ≤ `max_length`,
/// stopping with an error after `limit` elements. Ordered by length, then by
/// discovery.
pub fn elements_up_to_length(q: &Quiver, max_length: usize, limit: usize) -> Result<Vec<WeylElement>> {
    let cartan = Arc::new(Cartan::of(q));
    let id = WeylElement::identity_for(cartan.clone());
    let mut seen: HashSet<IntMatrix> = HashSet::from([id.matrix.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        if w.length() >= max_length {
            continue;
        }
        for i in 1..=q.n() {
            let next = w.word.concat(&Word(vec![i]));
            let matrix = cartan.right_multiply(&w.matrix, i);
            if seen.insert(matrix.clone()) {
                let word = reduce_with(&cartan, &next)?.0;
                let elem = WeylElement { cartan: cartan.clone(), word, matrix };
                if elem.length() <= w.length() {
                    continue;
                }
                out.push(elem.clone());
                if out.len() > limit {
                    return Err(Error::ResourceLimit {
                        what: "group elements",
                        value: out.len() as u128,
                        limit: limit as u128,
                    });
                }
                queue.push_back(elem);
            }
        }
    }
    Ok(out)
}
