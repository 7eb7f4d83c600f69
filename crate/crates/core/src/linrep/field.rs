//! Dense matrices over a small prime field `F_p`.
//!
//! Echelon forms are fully reduced so that kernel, image and complement
//! bases come out the same on every run.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Characteristic of the ground field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec(u32);

impl FieldSpec {
    pub const SUPPORTED: [u32; 3] = [2, 3, 5];

    pub fn new(p: u32) -> Result<Self> {
        if Self::SUPPORTED.contains(&p) {
            Ok(FieldSpec(p))
        } else {
            Err(Error::UnsupportedField(p))
        }
    }

    pub fn p(self) -> u32 {
        self.0
    }

    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.0
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.0 - b) % self.0
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.0
    }

    pub fn neg(self, a: u32) -> u32 {
        (self.0 - a) % self.0
    }

    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.0), "inverse of zero");
        // a^(p-2) by repeated multiplication; p ≤ 5
        (0..self.0 - 2).fold(1, |acc, _| self.mul(acc, a))
    }

    pub(crate) fn check_same(self, other: FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.0, other.0))
        }
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        FieldSpec::new(p)
    }
}

impl From<FieldSpec> for u32 {
    fn from(f: FieldSpec) -> u32 {
        f.0
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for k in 0..n {
            m.set(k, k, 1);
        }
        m
    }

    /// Entries are reduced mod p; every row must have length `cols`.
    pub fn from_rows(field: FieldSpec, rows: usize, cols: usize, entries: &[Vec<i64>]) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape(format!(
                "expected {rows}x{cols}, got {} rows of lengths {:?}",
                entries.len(),
                entries.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        let data = entries.iter().flatten().map(|&x| field.reduce(x)).collect();
        Ok(Matrix { field, rows, cols, data })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x % field.p());
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u32) {
        self.data[r * self.cols + c] = x;
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn row(&self, r: usize) -> Vec<u32> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let idx = r * rhs.cols + c;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, rhs.get(k, c)));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, k: u32) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, k)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, r1 - r0, c1 - c0);
        for r in r0..r1 {
            for c in c0..c1 {
                out.set(r - r0, c - c0, self.get(r, c));
            }
        }
        out
    }

    /// Write `m` with its top-left corner at `(r0, c0)`.
    pub fn put(&mut self, r0: usize, c0: usize, m: &Matrix) {
        for r in 0..m.rows {
            for c in 0..m.cols {
                self.set(r0 + r, c0 + c, m.get(r, c));
            }
        }
    }

    pub fn hstack(field: FieldSpec, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            out.put(0, c0, m);
            c0 += m.cols;
        }
        out
    }

    pub fn vstack(field: FieldSpec, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            out.put(r0, 0, m);
            r0 += m.rows;
        }
        out
    }

    pub fn block_diagonal(field: FieldSpec, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.put(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Reduced row echelon form. Zero rows are dropped, so the result has
    /// `rank` rows.
    pub fn rref(&self) -> Echelon {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = f.inv(m.get(row, col));
            for c in 0..m.cols {
                let x = f.mul(m.get(row, c), inv);
                m.set(row, c, x);
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == row || factor == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let x = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                    m.set(r, c, x);
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        let matrix = m.block(0, rank, 0, m.cols);
        Echelon { matrix, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space as the columns of a `cols × nullity` matrix.
    /// One basis vector per free column, with a 1 in that column; this is the
    /// column-reduced echelon basis of the kernel.
    pub fn kernel(&self) -> Matrix {
        let f = self.field;
        let Echelon { matrix: e, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, f.neg(e.get(r, fc)));
            }
        }
        k
    }

    /// Solve `self · X = rhs`. `None` when inconsistent; when the solution is
    /// not unique, free variables are set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let aug = Matrix::hstack(self.field, self.rows, &[self, rhs]);
        let Echelon { matrix: e, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, e.get(r, self.cols + c));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols || self.rank() != self.rows {
            return None;
        }
        self.solve(&Matrix::identity(self.field, self.rows))
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    /// Row-major integer rows, for serialization.
    pub fn to_json_rows(&self) -> Vec<Vec<u32>> {
        self.to_rows()
    }
}

/// Presentation of a cokernel `F^m / im(A)`: the image is spanned by the rows
/// of `image_rref`, and the standard basis vectors at the non-pivot
/// coordinates form a complement.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub ambient: usize,
    pub image_rref: Matrix,
    pub pivots: Vec<usize>,
    pub complement: Vec<usize>,
}

impl Cokernel {
    /// Cokernel of the linear map with matrix `a` (`m × k`, acting on columns).
    pub fn of(a: &Matrix) -> Cokernel {
        let ambient = a.rows();
        let Echelon { matrix, pivots } = a.transpose().rref();
        let complement = (0..ambient).filter(|c| !pivots.contains(c)).collect();
        Cokernel { ambient, image_rref: matrix, pivots, complement }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// Coordinates of `v + im(A)` in the complement basis.
    pub fn project(&self, v: &[u32]) -> Vec<u32> {
        let f = self.image_rref.field();
        let mut v = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let factor = v[pc];
            if factor == 0 {
                continue;
            }
            for (c, x) in v.iter_mut().enumerate() {
                *x = f.sub(*x, f.mul(factor, self.image_rref.get(r, c)));
            }
        }
        self.complement.iter().map(|&c| v[c]).collect()
    }

    /// The quotient map as a `dim × ambient` matrix.
    pub fn projection(&self) -> Matrix {
        let f = self.image_rref.field();
        let columns: Vec<Vec<u32>> = (0..self.ambient)
            .map(|k| {
                let mut e = vec![0; self.ambient];
                e[k] = 1;
                self.project(&e)
            })
            .collect();
        Matrix::from_columns(f, self.dim(), &columns)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}
