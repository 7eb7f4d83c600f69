//! Exact integer vectors and square matrices over ℤ.
//!
//! Coordinates are arbitrary precision so Weyl group orbits stay exact on
//! wild quivers, where root heights grow without bound.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of ℤⁿ. Vertex `i` (1-indexed) lives at coordinate `i - 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn zeros(n: usize) -> Self {
        IntVector(vec![BigInt::zero(); n])
    }

    /// The simple root `e_i`, with `i` 1-indexed.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i - 1] = BigInt::one();
        v
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        IntVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_coords(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    /// Coordinate at vertex `i` (1-indexed).
    pub fn at(&self, i: usize) -> &BigInt {
        &self.0[i - 1]
    }

    pub fn set(&mut self, i: usize, value: BigInt) {
        self.0[i - 1] = value;
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: n, found: self.len() })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_nonpositive(&self) -> bool {
        self.0.iter().all(|c| !c.is_positive())
    }

    /// Nonzero with all coordinates ≥ 0.
    pub fn is_positive(&self) -> bool {
        self.is_nonnegative() && !self.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.is_nonpositive() && !self.is_zero()
    }

    /// Coordinate sum.
    pub fn height(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Vertices (1-indexed) with a nonzero coordinate.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// If this is `e_i`, return `i`.
    pub fn as_simple(&self) -> Option<usize> {
        let support = self.support();
        match support[..] {
            [i] if self.0[i - 1].is_one() => Some(i),
            _ => None,
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        IntVector(self.0.iter().map(|c| c * k).collect())
    }

    /// Small-coordinate view; `None` if any coordinate overflows `i64`.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Non-negative small-coordinate view, used for dimension vectors.
    pub fn to_dims(&self) -> Option<Vec<usize>> {
        self.0.iter().map(ToPrimitive::to_usize).collect()
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector::from_i64s(&v)
    }
}

impl From<&[usize]> for IntVector {
    fn from(v: &[usize]) -> Self {
        IntVector(v.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.len(), rhs.len());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.len(), rhs.len());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn serialize_bigint<S: Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match c.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&c.to_string()),
    }
}

struct Coord<'a>(&'a BigInt);

impl Serialize for Coord<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigint(self.0, s)
    }
}

/// Integers serialize as JSON numbers while they fit in `i64`, otherwise as
/// decimal strings.
impl Serialize for IntVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for c in &self.0 {
            seq.serialize_element(&Coord(c))?;
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoord {
    Int(i64),
    Str(String),
}

impl<'de> Deserialize<'de> for IntVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<RawCoord> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|c| match c {
                RawCoord::Int(x) => Ok(BigInt::from(x)),
                RawCoord::Str(s) => s.parse::<BigInt>().map_err(de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(IntVector)
    }
}

/// Square integer matrix acting on column vectors; column `j` is the image of
/// `e_{j+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigInt::zero(); n * n];
        for k in 0..n {
            data[k * n + k] = BigInt::one();
        }
        IntMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n);
                r.iter().map(|&x| BigInt::from(x))
            })
            .collect();
        IntMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at zero-indexed `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.data[row * self.n + col]
    }

    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut BigInt {
        &mut self.data[row * self.n + col]
    }

    /// Image of `e_j` (1-indexed).
    pub fn column(&self, j: usize) -> IntVector {
        IntVector((0..self.n).map(|r| self.get(r, j - 1).clone()).collect())
    }

    pub fn apply(&self, v: &IntVector) -> IntVector {
        assert_eq!(v.len(), self.n);
        IntVector(
            (0..self.n)
                .map(|r| (0..self.n).map(|c| self.get(r, c) * v.at(c + 1)).sum())
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut data = vec![BigInt::zero(); n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * rhs.get(k, c);
                }
            }
        }
        IntMatrix { n, data }
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    pub fn rows(&self) -> Vec<IntVector> {
        (0..self.n)
            .map(|r| IntVector(self.data[r * self.n..(r + 1) * self.n].to_vec()))
            .collect()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}
