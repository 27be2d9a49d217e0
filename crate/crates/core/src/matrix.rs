//! Dense matrices over the integers with exact arithmetic.
//!
//! Everything here is arbitrary precision: determinants are computed by the
//! fraction-free Bareiss recurrence, inverses only for unit triangular
//! matrices (where they stay integral), and the Smith normal form keeps the
//! full transformation pair so quotient structure and lattice membership can
//! be read off.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Build from row slices of machine integers. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMat::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*v));
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntMat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IntMat {
        IntMat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        IntMat::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += self.at(i, k) * rhs.at(k, j);
            }
            acc
        })
    }

    pub fn add(&self, rhs: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        IntMat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }

    pub fn neg(&self) -> IntMat {
        IntMat::from_fn(self.rows, self.cols, |i, j| -self.at(i, j))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j { self.at(i, j).is_one() } else { self.at(i, j).is_zero() }
                })
            })
    }

    pub fn is_unit_upper_triangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.at(i, i).is_one() && (0..i).all(|j| self.at(i, j).is_zero())
            })
    }

    /// Determinant by the fraction-free Bareiss recurrence.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut prev = BigInt::one();
        let mut sign = 1i32;
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.at(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    m.set(i, j, num / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.at(k, k).clone();
        }
        let det = m.at(n - 1, n - 1).clone();
        if sign < 0 { -det } else { det }
    }

    /// Determinants of the leading principal k-by-k blocks, k = 1..=n.
    pub fn leading_principal_minors(&self) -> Vec<BigInt> {
        assert!(self.is_square());
        (1..=self.rows)
            .map(|k| IntMat::from_fn(k, k, |i, j| self.at(i, j).clone()).determinant())
            .collect()
    }

    /// Exact inverse of a unit upper triangular matrix by back substitution.
    pub fn inverse_unit_upper_triangular(&self) -> Result<IntMat, Error> {
        if !self.is_unit_upper_triangular() {
            return Err(Error::NotUnitTriangular);
        }
        let n = self.rows;
        let mut inv = IntMat::identity(n);
        for i in (0..n).rev() {
            for j in i + 1..n {
                let mut acc = BigInt::zero();
                for k in i + 1..=j {
                    acc += self.at(i, k) * inv.at(k, j);
                }
                inv.set(i, j, -acc);
            }
        }
        Ok(inv)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.at(r, j).clone();
            self.set(r, j, v);
        }
    }

    /// row[dst] += k * row[src]
    pub(crate) fn add_scaled_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = self.at(dst, j) + k * self.at(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += k * col[src]
    pub(crate) fn add_scaled_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = self.at(i, dst) + k * self.at(i, src);
            self.set(i, dst, v);
        }
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of `M^k = I` search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixOrder {
    Finite(u64),
    ExceedsBound,
}

/// Least k >= 1 with `m^k = I`, or `ExceedsBound` if none up to `bound`.
pub fn matrix_order(m: &IntMat, bound: u64) -> MatrixOrder {
    assert!(m.is_square());
    let mut acc = m.clone();
    let mut k = 1u64;
    while k <= bound {
        if acc.is_identity() {
            return MatrixOrder::Finite(k);
        }
        acc = acc.mul(m);
        k += 1;
    }
    MatrixOrder::ExceedsBound
}

/// Smith normal form `diag = left * a * right` with unimodular transforms.
pub struct SmithNormalForm {
    pub left: IntMat,
    pub diag: IntMat,
    pub right: IntMat,
}

impl SmithNormalForm {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn diagonal_entries(&self) -> Vec<BigInt> {
        let n = self.diag.rows().min(self.diag.cols());
        (0..n)
            .map(|i| self.diag.at(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }
}

/// Smith normal form over the integers.
///
/// The returned diagonal is nonnegative with each entry dividing the next.
pub fn smith_normal_form(a: &IntMat) -> SmithNormalForm {
    let (rows, cols) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut left = IntMat::identity(rows);
    let mut right = IntMat::identity(cols);
    let bound = rows.min(cols);
    let mut k = 0;
    while k < bound {
        // Pivot: the minimal-magnitude nonzero entry of the trailing block.
        let pivot = min_nonzero(&s, k);
        let (pi, pj) = match pivot {
            Some(idx) => idx,
            None => break,
        };
        s.swap_rows(k, pi);
        left.swap_rows(k, pi);
        s.swap_cols(k, pj);
        right.swap_cols(k, pj);
        if s.at(k, k).is_negative() {
            s.negate_row(k);
            left.negate_row(k);
        }

        // Clear the pivot column and row; floor division leaves remainders in
        // [0, pivot), so any leftover becomes a strictly smaller pivot on the
        // next pass.
        let mut dirty = false;
        for i in k + 1..rows {
            if !s.at(i, k).is_zero() {
                let q = -s.at(i, k).div_floor(s.at(k, k));
                s.add_scaled_row(i, k, &q);
                left.add_scaled_row(i, k, &q);
                if !s.at(i, k).is_zero() {
                    dirty = true;
                }
            }
        }
        for j in k + 1..cols {
            if !s.at(k, j).is_zero() {
                let q = -s.at(k, j).div_floor(s.at(k, k));
                s.add_scaled_col(j, k, &q);
                right.add_scaled_col(j, k, &q);
                if !s.at(k, j).is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }

        // Divisibility: fold any non-divisible trailing entry into row k and
        // loop again.
        let offender = (k + 1..rows)
            .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !s.at(i, j).mod_floor(s.at(k, k)).is_zero());
        if let Some((i, _)) = offender {
            s.add_scaled_row(k, i, &BigInt::one());
            left.add_scaled_row(k, i, &BigInt::one());
            continue;
        }
        k += 1;
    }
    SmithNormalForm { left, diag: s, right }
}

fn min_nonzero(m: &IntMat, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            let v = m.at(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m.at(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}
