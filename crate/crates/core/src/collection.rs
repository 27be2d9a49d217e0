//! The ordered collection of twisted structure sheaves on a weighted
//! projective line, its morphism-space dimensions, and the Euler matrix.
//!
//! Twists are degree elements; morphism dimensions reduce to graded
//! dimensions of the coordinate ring. First extensions are computed through
//! the dualizing shift, which is exact at the level of dimensions and avoids
//! any resolution machinery. Higher extensions vanish on these curves and are
//! not represented.

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::grading::{Degree, GradingGroup};
use crate::hilbert::graded_dim;
use crate::matrix::IntMat;
use crate::report::VerificationReport;

/// An ordered list of twisting degrees `O(t_0), ..., O(t_n)`.
///
/// Arbitrary twist lists are accepted so that failing configurations can be
/// constructed in tests; the canonical one comes from [`build_collection`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExceptionalCollection {
    twists: Vec<Degree>,
}

impl ExceptionalCollection {
    /// Wrap user-supplied twists, normalizing each.
    pub fn from_twists(g: &GradingGroup, twists: Vec<Degree>) -> Self {
        ExceptionalCollection { twists: twists.iter().map(|t| g.normalize(t)).collect() }
    }

    pub fn twists(&self) -> &[Degree] {
        &self.twists
    }

    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }
}

/// The canonical collection: the zero twist, then `k * x_s` for each arm `s`
/// and `1 <= k < p_s`, then the hub degree `c`. Weight-one arms contribute
/// no twists. With `include_unit = false` the leading zero twist is dropped,
/// leaving the part that generates the singularity lattice.
pub fn build_collection(g: &GradingGroup, include_unit: bool) -> ExceptionalCollection {
    let mut twists = Vec::new();
    if include_unit {
        twists.push(Degree::zero());
    }
    for s in 0..3 {
        for k in 1..g.weights().weight(s) {
            twists.push(Degree::arm_generator(s).scaled(&BigInt::from(k)));
        }
    }
    twists.push(Degree::hub_generator());
    ExceptionalCollection { twists }
}

/// Dimension of the morphism space `O(a) -> O(b)`: the graded dimension at
/// `b - a`.
pub fn hom_dim(g: &GradingGroup, a: &Degree, b: &Degree) -> BigInt {
    graded_dim(g, &b.minus(a))
}

/// Dimension of the first extension space, via the dualizing shift:
/// the graded dimension at `a - b + omega`.
pub fn ext1_dim(g: &GradingGroup, a: &Degree, b: &Degree) -> BigInt {
    graded_dim(g, &a.minus(b).plus(&g.dualizing_element()))
}

enum Violation {
    Endo(usize, BigInt),
    Backward(usize, usize, BigInt),
    Ext(usize, usize, BigInt),
}

fn pair_violation(g: &GradingGroup, twists: &[Degree], i: usize, j: usize) -> Option<Violation> {
    if i == j {
        let d = hom_dim(g, &twists[i], &twists[i]);
        if !d.is_one() {
            return Some(Violation::Endo(i, d));
        }
    } else if i > j {
        let d = hom_dim(g, &twists[i], &twists[j]);
        if !d.is_zero() {
            return Some(Violation::Backward(i, j, d));
        }
    }
    let e = ext1_dim(g, &twists[i], &twists[j]);
    if !e.is_zero() {
        return Some(Violation::Ext(i, j, e));
    }
    None
}

fn violation_report(twists: &[Degree], v: Violation) -> VerificationReport {
    let name = "strong-exceptional";
    match v {
        Violation::Endo(i, d) => VerificationReport::fail(
            name,
            format!("hom(E_{i}, E_{i}) = {d}, expected 1 (twist \"{}\")", twists[i].wire()),
        ),
        Violation::Backward(i, j, d) => VerificationReport::fail(
            name,
            format!(
                "hom(E_{i}, E_{j}) = {d}, expected 0 for i > j (twists \"{}\" -> \"{}\")",
                twists[i].wire(),
                twists[j].wire()
            ),
        ),
        Violation::Ext(i, j, e) => VerificationReport::fail(
            name,
            format!(
                "ext1(E_{i}, E_{j}) = {e}, expected 0 (twists \"{}\" -> \"{}\")",
                twists[i].wire(),
                twists[j].wire()
            ),
        ),
    }
}

/// Check that the collection is strong exceptional: unit endomorphism
/// spaces, no backward morphisms, and no first extensions anywhere.
/// Fullness is not checked.
pub fn check_strong_exceptional(
    g: &GradingGroup,
    coll: &ExceptionalCollection,
) -> VerificationReport {
    #[cfg(feature = "parallel")]
    {
        check_strong_exceptional_par(g, coll)
    }
    #[cfg(not(feature = "parallel"))]
    {
        check_strong_exceptional_seq(g, coll)
    }
}

pub fn check_strong_exceptional_seq(
    g: &GradingGroup,
    coll: &ExceptionalCollection,
) -> VerificationReport {
    let twists = coll.twists();
    let n = twists.len();
    for i in 0..n {
        for j in 0..n {
            if let Some(v) = pair_violation(g, twists, i, j) {
                return violation_report(twists, v);
            }
        }
    }
    VerificationReport::pass("strong-exceptional")
}

#[cfg(feature = "parallel")]
pub fn check_strong_exceptional_par(
    g: &GradingGroup,
    coll: &ExceptionalCollection,
) -> VerificationReport {
    let twists = coll.twists();
    let n = twists.len();
    // find_first keeps the same row-major witness as the sequential scan.
    let first = (0..n * n)
        .into_par_iter()
        .filter_map(|k| pair_violation(g, twists, k / n, k % n))
        .find_first(|_| true);
    match first {
        Some(v) => violation_report(twists, v),
        None => VerificationReport::pass("strong-exceptional"),
    }
}

/// The Euler matrix of the collection: `hom_dim - ext1_dim` entrywise.
pub fn euler_matrix(g: &GradingGroup, coll: &ExceptionalCollection) -> IntMat {
    let twists = coll.twists();
    IntMat::from_fn(twists.len(), twists.len(), |i, j| {
        hom_dim(g, &twists[i], &twists[j]) - ext1_dim(g, &twists[i], &twists[j])
    })
}
