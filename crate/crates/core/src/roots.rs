//! Enumeration of the roots of a positive definite symmetric form: all
//! integer vectors with `v^T C v = 2`, searched inside a coordinate box.
//!
//! The search walks coordinates from the last to the first and prunes with
//! the exact LDL^T split of the form, so only a thin tree around the true
//! roots is visited; the result is identical to scanning the whole box. If
//! any root touches the box boundary the enumeration refuses to certify
//! completeness and reports an error instead of a silently truncated set.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Error;
use crate::matrix::IntMat;

/// The even-norm vectors of the form, sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSet {
    pub vectors: Vec<Vec<i64>>,
}

impl RootSet {
    pub fn count(&self) -> usize {
        self.vectors.len()
    }
}

/// All integer vectors `v` with `v^T C v = 2` and `|v_i| <= box_bound`.
///
/// Rejects non-symmetric and non-positive-definite input (the latter by the
/// leading-principal-minor test), and fails when a root touches the box
/// boundary, which would leave completeness uncertified.
pub fn enumerate_roots(c: &IntMat, box_bound: i64) -> Result<RootSet, Error> {
    #[cfg(feature = "parallel")]
    {
        enumerate_roots_par(c, box_bound)
    }
    #[cfg(not(feature = "parallel"))]
    {
        enumerate_roots_seq(c, box_bound)
    }
}

pub fn enumerate_roots_seq(c: &IntMat, box_bound: i64) -> Result<RootSet, Error> {
    let search = RootSearch::new(c, box_bound)?;
    let n = search.dim;
    let mut vectors = Vec::new();
    let mut v = vec![0i64; n];
    search.descend(n, &BigRational::zero(), &mut v, &mut vectors);
    search.finish(vectors)
}

#[cfg(feature = "parallel")]
pub fn enumerate_roots_par(c: &IntMat, box_bound: i64) -> Result<RootSet, Error> {
    let search = RootSearch::new(c, box_bound)?;
    let n = search.dim;
    if n == 0 {
        return search.finish(Vec::new());
    }
    // Split on the last coordinate; each branch explores its own subtree.
    let vectors: Vec<Vec<i64>> = (-box_bound..=box_bound)
        .into_par_iter()
        .map(|last| {
            let mut v = vec![0i64; n];
            v[n - 1] = last;
            let partial = search.diag[n - 1].clone()
                * square(&search.shifted_component(n - 1, &v));
            let mut found = Vec::new();
            if partial <= search.target() {
                search.descend(n - 1, &partial, &mut v, &mut found);
            }
            found
        })
        .reduce(Vec::new, |mut acc, mut chunk| {
            acc.append(&mut chunk);
            acc
        });
    search.finish(vectors)
}

struct RootSearch {
    dim: usize,
    box_bound: i64,
    /// Unit lower triangular factor L of C = L D L^T.
    lower: Vec<Vec<BigRational>>,
    /// Positive diagonal D.
    diag: Vec<BigRational>,
}

impl RootSearch {
    fn new(c: &IntMat, box_bound: i64) -> Result<Self, Error> {
        if !c.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let minors = c.leading_principal_minors();
        if let Some(bad) = minors.iter().position(|m| !m.is_positive()) {
            return Err(Error::IndefiniteForm { minor: bad + 1 });
        }
        let n = c.rows();
        let mut lower = vec![vec![BigRational::zero(); n]; n];
        let mut diag = vec![BigRational::zero(); n];
        for j in 0..n {
            let mut d = BigRational::from(c.at(j, j).clone());
            for k in 0..j {
                d -= square(&lower[j][k]) * &diag[k];
            }
            diag[j] = d;
            lower[j][j] = BigRational::from(BigInt::from(1));
            for i in j + 1..n {
                let mut v = BigRational::from(c.at(i, j).clone());
                for k in 0..j {
                    v -= &lower[i][k] * &lower[j][k] * &diag[k];
                }
                lower[i][j] = v / &diag[j];
            }
        }
        Ok(RootSearch { dim: n, box_bound, lower, diag })
    }

    fn target(&self) -> BigRational {
        BigRational::from(BigInt::from(2))
    }

    /// The split coordinate `w_i = v_i + sum_{j > i} L_{ji} v_j`.
    fn shifted_component(&self, i: usize, v: &[i64]) -> BigRational {
        let mut w = BigRational::from(BigInt::from(v[i]));
        for j in i + 1..self.dim {
            if v[j] != 0 {
                w += &self.lower[j][i] * BigRational::from(BigInt::from(v[j]));
            }
        }
        w
    }

    /// Assign coordinates `i-1, i-2, ..., 0` given the partial quadratic
    /// value of the already-fixed suffix.
    fn descend(&self, i: usize, partial: &BigRational, v: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == 0 {
            if *partial == self.target() {
                out.push(v.clone());
            }
            return;
        }
        let i = i - 1;
        let mut offset = BigRational::zero();
        for j in i + 1..self.dim {
            if v[j] != 0 {
                offset += &self.lower[j][i] * BigRational::from(BigInt::from(v[j]));
            }
        }
        // Candidates v_i cluster around -offset, where the quadratic term is
        // minimal; walk outward in both directions until the term alone
        // exceeds the budget. Starting from the nearest integer (clamped into
        // the box) keeps both walks monotone, so the early break is sound.
        let center = (-&offset).round().to_integer();
        let center = center
            .max(BigInt::from(-self.box_bound))
            .min(BigInt::from(self.box_bound));
        let center = i64::try_from(&center).expect("clamped into i64 range");
        for direction in [1i64, -1i64] {
            let mut t = if direction == 1 { center } else { center - 1 };
            while t.abs() <= self.box_bound {
                let w = BigRational::from(BigInt::from(t)) + &offset;
                let total = partial + &self.diag[i] * square(&w);
                if total > self.target() {
                    break;
                }
                v[i] = t;
                self.descend(i, &total, v, out);
                t += direction;
            }
        }
        v[i] = 0;
    }

    fn finish(&self, mut vectors: Vec<Vec<i64>>) -> Result<RootSet, Error> {
        vectors.sort();
        if let Some(touching) = vectors
            .iter()
            .find(|v| v.iter().any(|&x| x.abs() == self.box_bound))
        {
            return Err(Error::BoxTooSmall { root: touching.clone() });
        }
        Ok(RootSet { vectors })
    }
}

fn square(x: &BigRational) -> BigRational {
    x * x
}
