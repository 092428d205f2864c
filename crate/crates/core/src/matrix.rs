use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::CoefficientRing;

/// A dense matrix over one of the supported coefficient rings, stored in
/// row-major order with every entry in canonical form.
///
/// The arithmetic operators panic on shape or ring mismatch, like the
/// operators of most matrix libraries; use [`ExactMatrix::checked_mul`]
/// where the shapes come from user input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    ring: CoefficientRing,
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zeros(ring: &CoefficientRing, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(ring: &CoefficientRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    pub fn scalar(ring: &CoefficientRing, n: usize, c: &BigRational) -> Self {
        let c = ring.normalize(c).expect("scalar must lie in the ring");
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    /// Builds a matrix from entries that are already known to lie in the
    /// ring; they are brought into canonical form.
    pub fn from_fn(
        ring: &CoefficientRing,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let x = f(i, j);
                entries.push(ring.normalize(&x).expect("entry must lie in the ring"));
            }
        }
        ExactMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn from_entries(
        ring: &CoefficientRing,
        rows: usize,
        cols: usize,
        entries: Vec<BigRational>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let entries = entries
            .iter()
            .map(|x| ring.normalize(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    /// Convenience constructor from small integer rows.
    pub fn from_i64_rows(ring: &CoefficientRing, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(ring, r, c, |i, j| BigRational::from_integer(rows[i][j].into()))
    }

    pub fn column_vector(ring: &CoefficientRing, values: &[i64]) -> Self {
        Self::from_fn(ring, values.len(), 1, |i, _| {
            BigRational::from_integer(values[i].into())
        })
    }

    pub fn diagonal(ring: &CoefficientRing, values: &[BigRational]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(ring, n, n);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * n + i] = ring.normalize(v).expect("entry must lie in the ring");
        }
        m
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        let v = self
            .ring
            .normalize(&value)
            .expect("entry must lie in the ring");
        self.entries[i * self.cols + j] = v;
    }

    pub fn set_i64(&mut self, i: usize, j: usize, value: i64) {
        self.entries[i * self.cols + j] = self.ring.from_i64(value);
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        *x == self.ring.one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let c = self.ring.normalize(c).expect("scalar must lie in the ring");
        ExactMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| self.ring.mul(x, &c)).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn_unchecked(&self.ring, rows.len(), cols.len(), |i, j| {
            self.get(r0 + i, c0 + j).clone()
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn_unchecked(&self.ring, idx.len(), self.cols, |i, j| {
            self.get(idx[i], j).clone()
        })
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn_unchecked(&self.ring, self.rows, idx.len(), |i, j| {
            self.get(i, idx[j]).clone()
        })
    }

    pub fn column(&self, j: usize) -> Self {
        self.select_cols(&[j])
    }

    /// Horizontal concatenation. All blocks must share a row count; an
    /// empty slice is not allowed.
    pub fn hstack(blocks: &[&ExactMatrix]) -> Self {
        let ring = &blocks[0].ring;
        let rows = blocks[0].rows;
        assert!(blocks.iter().all(|b| b.rows == rows && &b.ring == ring), "hstack shape");
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(ring, rows, cols);
        let mut offset = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    out.entries[i * cols + offset + j] = b.get(i, j).clone();
                }
            }
            offset += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&ExactMatrix]) -> Self {
        let ring = &blocks[0].ring;
        let cols = blocks[0].cols;
        assert!(blocks.iter().all(|b| b.cols == cols && &b.ring == ring), "vstack shape");
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for b in blocks {
            entries.extend(b.entries.iter().cloned());
        }
        ExactMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn block_diag(ring: &CoefficientRing, blocks: &[&ExactMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(ring, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Overwrites the block starting at `(r0, c0)` with `block`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &ExactMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.entries[(r0 + i) * self.cols + c0 + j] = block.get(i, j).clone();
            }
        }
    }

    /// Kronecker product `a ⊗ b`; row index `i*b.rows + k`.
    pub fn kron(a: &ExactMatrix, b: &ExactMatrix) -> Self {
        assert_eq!(a.ring, b.ring, "kron ring mismatch");
        let ring = &a.ring;
        let rows = a.rows * b.rows;
        let cols = a.cols * b.cols;
        let mut out = Self::zeros(ring, rows, cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                let x = a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let y = b.get(k, l);
                        if y.is_zero() {
                            continue;
                        }
                        out.entries[(i * b.rows + k) * cols + j * b.cols + l] = ring.mul(x, y);
                    }
                }
            }
        }
        out
    }

    /// Column-major vectorisation, so that `vec(A X B) = (Bᵀ ⊗ A) vec(X)`.
    pub fn vectorize(&self) -> Self {
        Self::from_fn_unchecked(&self.ring, self.rows * self.cols, 1, |k, _| {
            self.get(k % self.rows, k / self.rows).clone()
        })
    }

    /// Inverse of [`ExactMatrix::vectorize`] applied to column `col` of `v`.
    pub fn unvectorize(v: &ExactMatrix, col: usize, rows: usize, cols: usize) -> Self {
        assert_eq!(v.rows, rows * cols, "unvectorize shape");
        Self::from_fn_unchecked(&v.ring, rows, cols, |i, j| v.get(j * rows + i, col).clone())
    }

    /// Maps every entry into another ring.
    pub fn change_ring(&self, ring: &CoefficientRing) -> Result<Self> {
        Self::from_entries(ring, self.rows, self.cols, self.entries.clone())
    }

    pub fn checked_mul(&self, other: &ExactMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(self.mul_inner(other))
    }

    fn mul_inner(&self, other: &ExactMatrix) -> Self {
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let ring = &self.ring;
        if ring.is_localized() {
            let mut out = Self::zeros(ring, n, m);
            for i in 0..n {
                for l in 0..k {
                    let a = self.get(i, l);
                    if a.is_zero() {
                        continue;
                    }
                    for j in 0..m {
                        let b = other.get(l, j);
                        if b.is_zero() {
                            continue;
                        }
                        let e = &mut out.entries[i * m + j];
                        *e = &*e + a * b;
                    }
                }
            }
            return out;
        }
        let mut acc = vec![BigInt::zero(); n * m];
        for i in 0..n {
            for l in 0..k {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                let a = a.numer();
                for j in 0..m {
                    let b = other.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc[i * m + j] += a * b.numer();
                }
            }
        }
        ExactMatrix {
            ring: ring.clone(),
            rows: n,
            cols: m,
            entries: acc.iter().map(|x| ring.from_bigint(x)).collect(),
        }
    }

    /// Determinant by fraction-free elimination over the rationals, mapped
    /// into the ring. For Z/m this is the determinant of the residue lift.
    pub fn determinant(&self) -> BigRational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = BigRational::from_integer(1.into());
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return BigRational::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pivot = a[c][c].clone();
            det *= &pivot;
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] / &pivot;
                for j in c..n {
                    let t = &f * &a[c][j];
                    a[r][j] -= t;
                }
            }
        }
        self.ring.normalize(&det).unwrap_or(det)
    }

    fn from_fn_unchecked(
        ring: &CoefficientRing,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    fn zip_with(&self, other: &ExactMatrix, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        assert_eq!(self.shape(), other.shape(), "shape mismatch");
        assert_eq!(self.ring, other.ring, "ring mismatch");
        ExactMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        assert_eq!(self.ring, rhs.ring, "matrix product ring mismatch");
        self.mul_inner(rhs)
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;

    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        let ring = self.ring.clone();
        self.zip_with(rhs, |a, b| ring.add(a, b))
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;

    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        let ring = self.ring.clone();
        self.zip_with(rhs, |a, b| ring.sub(a, b))
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;

    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| self.ring.neg(x)).collect(),
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_and_vec_identity() {
        let z = CoefficientRing::Integers;
        let a = ExactMatrix::from_i64_rows(&z, &[&[1, 2], &[3, 4]]);
        let x = ExactMatrix::from_i64_rows(&z, &[&[0, 5, 1], &[-1, 2, 7]]);
        let b = ExactMatrix::from_i64_rows(&z, &[&[2, 0], &[1, 1], &[0, 3]]);
        let lhs = (&(&a * &x) * &b).vectorize();
        let rhs = &ExactMatrix::kron(&b.transpose(), &a) * &x.vectorize();
        assert_eq!(lhs, rhs);
        assert_eq!(ExactMatrix::unvectorize(&x.vectorize(), 0, 2, 3), x);
    }

    #[test]
    fn residue_arithmetic_stays_canonical() {
        let z4 = CoefficientRing::IntegersMod(4);
        let a = ExactMatrix::from_i64_rows(&z4, &[&[3, -1]]);
        assert_eq!(a.get(0, 1), &BigRational::from_integer(3.into()));
        let sq = &a.transpose() * &a;
        assert_eq!(sq.get(0, 0), &BigRational::from_integer(1.into()));
        assert_eq!((-&a).get(0, 0), &BigRational::from_integer(1.into()));
    }

    #[test]
    fn determinant_small() {
        let z = CoefficientRing::Integers;
        let a = ExactMatrix::from_i64_rows(&z, &[&[2, 4], &[6, 8]]);
        assert_eq!(a.determinant(), BigRational::from_integer((-8).into()));
    }
}
