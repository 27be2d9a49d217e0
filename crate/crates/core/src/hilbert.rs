//! Graded dimension counts and truncated Hilbert series.
//!
//! The monomial count of a degree with normal form `(l0, l1, l2, l)` is the
//! number of exponent triples `a_s = l_s + p_s * b_s` with `b0 + b1 + b2 = l`,
//! i.e. `binomial(l + 2, 2)` for `l >= 0` and zero otherwise. Dimensions in
//! the hypersurface quotient follow from the multiplication-by-f exact
//! sequence: `dim R_x = m(x) - m(x - c)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::grading::{Degree, GradingGroup};

/// Number of monomials of the given degree in the free polynomial ring.
pub fn monomial_count(g: &GradingGroup, degree: &Degree) -> BigInt {
    let normal = g.normalize(degree);
    let l = &normal.hub;
    if l.is_negative() {
        return BigInt::zero();
    }
    (l + 1) * (l + 2) / 2
}

/// Dimension of the graded piece of the hypersurface quotient:
/// `m(x) - m(x - c)`.
pub fn graded_dim(g: &GradingGroup, degree: &Degree) -> BigInt {
    let shifted = degree.minus(&Degree::hub_generator());
    monomial_count(g, degree) - monomial_count(g, &shifted)
}

/// Truncated Hilbert series of the invariant subalgebra whose n-th piece is
/// the quotient in degree `-n * omega`, for `n = 0..=max_degree`.
pub fn hilbert_coefficients(g: &GradingGroup, max_degree: u64) -> Vec<BigInt> {
    #[cfg(feature = "parallel")]
    {
        hilbert_coefficients_par(g, max_degree)
    }
    #[cfg(not(feature = "parallel"))]
    {
        hilbert_coefficients_seq(g, max_degree)
    }
}

pub fn hilbert_coefficients_seq(g: &GradingGroup, max_degree: u64) -> Vec<BigInt> {
    let minus_omega = g.dualizing_element().negated();
    (0..=max_degree)
        .map(|n| graded_dim(g, &minus_omega.scaled(&BigInt::from(n))))
        .collect()
}

#[cfg(feature = "parallel")]
pub fn hilbert_coefficients_par(g: &GradingGroup, max_degree: u64) -> Vec<BigInt> {
    let minus_omega = g.dualizing_element().negated();
    (0..=max_degree)
        .into_par_iter()
        .map(|n| graded_dim(g, &minus_omega.scaled(&BigInt::from(n))))
        .collect()
}

/// Truncated expansion of `(1 - t^e) / ((1-t^d1)(1-t^d2)(1-t^d3))` by exact
/// integer convolution, coefficients `0..=max_degree`.
pub fn closed_form_series(degrees: [u64; 3], relation_degree: u64, max_degree: u64) -> Vec<BigInt> {
    assert!(degrees.iter().all(|&d| d >= 1), "generator degrees must be >= 1");
    assert!(relation_degree >= 1, "relation degree must be >= 1");
    let n = max_degree as usize;
    let mut series = vec![BigInt::zero(); n + 1];
    series[0] = BigInt::one();
    // Multiply by each geometric factor 1/(1 - t^d).
    for d in degrees {
        let d = d as usize;
        for i in d..=n {
            let prev = series[i - d].clone();
            series[i] += prev;
        }
    }
    // Multiply by the numerator 1 - t^e.
    apply_one_minus_power(&mut series, relation_degree);
    series
}

/// In-place multiplication of a truncated series by `1 - t^k`.
pub fn apply_one_minus_power(series: &mut [BigInt], k: u64) {
    let k = k as usize;
    if k == 0 {
        for c in series.iter_mut() {
            *c = BigInt::zero();
        }
        return;
    }
    for i in (k..series.len()).rev() {
        let prev = series[i - k].clone();
        series[i] -= prev;
    }
}
