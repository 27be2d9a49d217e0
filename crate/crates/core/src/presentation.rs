//! The classification of finite star weights and the presentation table of
//! the associated invariant subalgebras, with mechanical verification of
//! every cell: generator degrees, relation membership, Hilbert series match,
//! and the Gorenstein parameter.
//!
//! Classification names are derived from the star vertex count. The label
//! printed in the classical table is carried verbatim alongside (its A- and
//! D-subscripts disagree with the vertex count); labels are reporting data
//! only and never enter a computation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::fmt;

use crate::collection::{build_collection, check_strong_exceptional};
use crate::error::Error;
use crate::grading::{GradingGroup, WeightSequence};
use crate::hilbert::{apply_one_minus_power, closed_form_series, hilbert_coefficients};
use crate::lattice::compare_lattices;
use crate::poly::{format_polynomial, monomial_degree, reduce, GradedPolynomial};
use crate::report::VerificationReport;

/// Simply laced type, subscripted by the star vertex count.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AdeType {
    A(u64),
    D(u64),
    E6,
    E7,
    E8,
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(n) => write!(f, "A{n}"),
            AdeType::D(n) => write!(f, "D{n}"),
            AdeType::E6 => write!(f, "E6"),
            AdeType::E7 => write!(f, "E7"),
            AdeType::E8 => write!(f, "E8"),
        }
    }
}

/// Classification outcome for a weight triple; weights are treated as
/// unordered.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Classification {
    pub dynkin: bool,
    pub vertex_count: u64,
    /// Star type by vertex count, present exactly for Dynkin weights.
    pub type_by_vertex_count: Option<AdeType>,
    /// First-column label of the matching presentation row, verbatim.
    pub paper_label: Option<&'static str>,
    /// The label's subscript instantiated at these weights. May disagree
    /// with the vertex count; recorded, not interpreted.
    pub paper_subscript: Option<u64>,
}

/// Classify a weight triple: Dynkin iff `1/p0 + 1/p1 + 1/p2 > 1`, in which
/// case the star with arm lengths `p_s - 1` is a simply laced diagram named
/// by its vertex count.
pub fn classify(p: &WeightSequence) -> Classification {
    let n = p.vertex_count();
    if !p.is_dynkin() {
        return Classification {
            dynkin: false,
            vertex_count: n,
            type_by_vertex_count: None,
            paper_label: None,
            paper_subscript: None,
        };
    }
    let (sorted, _) = p.sorted_with_permutation();
    let (ty, label, subscript) = match sorted {
        [1, q1, q2] => (AdeType::A(n), "A_{p+q}", q1 + q2),
        [2, 2, m] => {
            let label = if m % 2 == 0 { "D_{2l-2}" } else { "D_{2l-1}" };
            (AdeType::D(n), label, m - 2)
        }
        [2, 3, 3] => (AdeType::E6, "E_6", 6),
        [2, 3, 4] => (AdeType::E7, "E_7", 7),
        [2, 3, 5] => (AdeType::E8, "E_8", 8),
        _ => unreachable!("every Dynkin triple matches a row"),
    };
    Classification {
        dynkin: true,
        vertex_count: n,
        type_by_vertex_count: Some(ty),
        paper_label: Some(label),
        paper_subscript: Some(subscript),
    }
}

/// One row of the presentation table, instantiated at concrete weights.
///
/// `generators` are polynomials in the ring coordinates; `relation` is a
/// polynomial in three abstract variables standing for the generators, with
/// `z_degrees` their integer degrees and `relation_z_degree` the degree of
/// the relation in that grading.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PresentationRow {
    pub paper_label: &'static str,
    pub weights: WeightSequence,
    pub generators: [GradedPolynomial; 3],
    pub z_degrees: [u64; 3],
    pub relation: GradedPolynomial,
    pub relation_z_degree: u64,
    /// Advisory markers, e.g. the smallest-parameter D-row instantiation.
    pub flags: Vec<String>,
}

/// Marker set on D rows at the smallest parameter, where the table cells do
/// not instantiate unambiguously.
pub const FLAG_D_ROW_SMALLEST_PARAMETER: &str = "d-row-smallest-parameter";

/// Monomial in the ring coordinates, with template variable indices mapped
/// through the sorting permutation.
fn template_monomial(perm: &[usize; 3], factors: &[(usize, u64)]) -> GradedPolynomial {
    let mut exponents = [0u64; 3];
    for &(var, exp) in factors {
        exponents[perm[var]] += exp;
    }
    GradedPolynomial::monomial(exponents, BigRational::one())
}

fn relation_from_terms(terms: &[([u64; 3], i64)]) -> GradedPolynomial {
    let mut rel = GradedPolynomial::zero();
    for &(e, c) in terms {
        rel.add_term(e, BigRational::from(BigInt::from(c)));
    }
    rel
}

/// The presentation row for Dynkin weights. Weights may come in any order;
/// the row is instantiated through the sorting permutation, which is
/// harmless because the defining equation is symmetric under simultaneous
/// permutation of coordinates and weights.
pub fn table_row(p: &WeightSequence) -> Result<PresentationRow, Error> {
    if !p.is_dynkin() {
        return Err(Error::NoTableRow(p.weights()));
    }
    let (sorted, perm) = p.sorted_with_permutation();
    let mut flags = Vec::new();
    let (label, generators, z_degrees, relation) = match sorted {
        [1, q1, q2] => {
            let total = q1 + q2;
            (
                "A_{p+q}",
                [
                    template_monomial(&perm, &[(1, 1), (2, 1)]),
                    template_monomial(&perm, &[(2, total)]),
                    template_monomial(&perm, &[(1, total)]),
                ],
                [1, q1, q2],
                relation_from_terms(&[([total, 0, 0], 1), ([0, 1, 1], -1)]),
            )
        }
        [2, 2, m] if m % 2 == 0 => {
            let l = m / 2;
            if l == 1 {
                flags.push(FLAG_D_ROW_SMALLEST_PARAMETER.to_string());
            }
            (
                "D_{2l-2}",
                [
                    template_monomial(&perm, &[(2, 2)]),
                    template_monomial(&perm, &[(0, 2)]),
                    template_monomial(&perm, &[(0, 1), (1, 1), (2, 1)]),
                ],
                [2, m, m + 1],
                relation_from_terms(&[([0, 0, 2], 1), ([1, 2, 0], 1), ([l + 1, 1, 0], 1)]),
            )
        }
        [2, 2, m] => {
            let l = (m - 1) / 2;
            if l == 1 {
                flags.push(FLAG_D_ROW_SMALLEST_PARAMETER.to_string());
            }
            (
                "D_{2l-1}",
                [
                    template_monomial(&perm, &[(2, 2)]),
                    template_monomial(&perm, &[(0, 1), (1, 1)]),
                    template_monomial(&perm, &[(0, 2), (2, 1)]),
                ],
                [2, m, m + 1],
                relation_from_terms(&[([0, 0, 2], 1), ([1, 2, 0], 1), ([l + 1, 0, 1], 1)]),
            )
        }
        [2, 3, 3] => (
            "E_6",
            [
                template_monomial(&perm, &[(0, 1)]),
                template_monomial(&perm, &[(1, 1), (2, 1)]),
                template_monomial(&perm, &[(1, 3)]),
            ],
            [3, 4, 6],
            relation_from_terms(&[([0, 0, 2], 1), ([0, 3, 0], 1), ([2, 0, 1], 1)]),
        ),
        [2, 3, 4] => (
            "E_7",
            [
                template_monomial(&perm, &[(1, 1)]),
                template_monomial(&perm, &[(2, 2)]),
                template_monomial(&perm, &[(0, 1), (2, 1)]),
            ],
            [4, 6, 9],
            relation_from_terms(&[([0, 0, 2], 1), ([0, 3, 0], 1), ([3, 1, 0], 1)]),
        ),
        [2, 3, 5] => (
            "E_8",
            [
                template_monomial(&perm, &[(2, 1)]),
                template_monomial(&perm, &[(1, 1)]),
                template_monomial(&perm, &[(0, 1)]),
            ],
            [6, 10, 15],
            relation_from_terms(&[([0, 0, 2], 1), ([0, 3, 0], 1), ([5, 0, 0], 1)]),
        ),
        _ => unreachable!("every Dynkin triple matches a row"),
    };
    let relation_z_degree = relation
        .terms()
        .map(|(e, _)| e[0] * z_degrees[0] + e[1] * z_degrees[1] + e[2] * z_degrees[2])
        .max()
        .expect("relation has terms");
    Ok(PresentationRow {
        paper_label: label,
        weights: *p,
        generators,
        z_degrees,
        relation,
        relation_z_degree,
        flags,
    })
}

/// Check that a generator of stated integer degree `d` is homogeneous of the
/// degree that the grading of the invariant subalgebra demands: `-d * omega`.
pub fn check_generator_degrees(g: &GradingGroup, row: &PresentationRow) -> VerificationReport {
    let name = "generator-degrees";
    let omega = g.dualizing_element();
    for (i, generator) in row.generators.iter().enumerate() {
        let d = row.z_degrees[i];
        let expected = g.linear_combine(&[(BigInt::from(-(d as i64)), omega.clone())]);
        for (e, _) in generator.terms() {
            let actual = monomial_degree(g, *e);
            if actual != expected {
                return VerificationReport::fail(
                    name,
                    format!(
                        "generator {i} ({}) has degree \"{}\" but integer degree {d} requires \"{}\"",
                        format_polynomial(generator),
                        actual.wire(),
                        expected.wire()
                    ),
                );
            }
        }
    }
    VerificationReport::pass(name)
}

/// Substitute the generators into the relation and reduce modulo the
/// defining equation; membership holds exactly when the remainder vanishes.
/// The cofactor is reported as a witness on success.
pub fn check_relation_membership(g: &GradingGroup, row: &PresentationRow) -> VerificationReport {
    let name = "relation-membership";
    let substituted = substitute_generators(row);
    let reduction = reduce(g.weights(), &substituted);
    if reduction.remainder.is_zero() {
        VerificationReport::pass_with(
            name,
            format!("cofactor = {}", format_polynomial(&reduction.cofactor)),
        )
    } else {
        VerificationReport::fail(
            name,
            format!("remainder = {}", format_polynomial(&reduction.remainder)),
        )
    }
}

/// The relation with the generators substituted for its three variables.
pub fn substitute_generators(row: &PresentationRow) -> GradedPolynomial {
    let mut out = GradedPolynomial::zero();
    for (e, c) in row.relation.terms() {
        let mut term = GradedPolynomial::constant(c.clone());
        for (var, gen) in row.generators.iter().enumerate() {
            if e[var] > 0 {
                term = term.times(&gen.pow(e[var]));
            }
        }
        out = out.plus(&term);
    }
    out
}

/// Compare the Hilbert series of the invariant subalgebra against the closed
/// form determined by the row's degrees. The truncation is raised to at
/// least `relation degree + sum of generator degrees`, and the match is also
/// cross-multiplied so that a truncation below the relation degree can never
/// produce a spurious pass.
pub fn check_hilbert_match(
    g: &GradingGroup,
    row: &PresentationRow,
    max_degree: u64,
) -> VerificationReport {
    let name = "hilbert-match";
    let degrees = row.z_degrees;
    let e = row.relation_z_degree;
    let n = max_degree.max(e + degrees.iter().sum::<u64>());
    let actual = hilbert_coefficients(g, n);
    let expected = closed_form_series(degrees, e, n);
    if let Some(i) = (0..=n as usize).find(|&i| actual[i] != expected[i]) {
        return VerificationReport::fail(
            name,
            format!(
                "coefficient {i}: subalgebra has {} but the closed form gives {}",
                actual[i], expected[i]
            ),
        );
    }
    // Cross-multiply: series * prod(1 - t^d) must equal 1 - t^e exactly.
    let mut product = actual;
    for d in degrees {
        apply_one_minus_power(&mut product, d);
    }
    let mut numerator = vec![BigInt::from(0); n as usize + 1];
    numerator[0] = BigInt::one();
    numerator[e as usize] -= 1;
    if let Some(i) = (0..=n as usize).find(|&i| product[i] != numerator[i]) {
        return VerificationReport::fail(
            name,
            format!("cross-multiplied series differs from 1 - t^{e} at index {i}"),
        );
    }
    VerificationReport::pass_with(name, format!("coefficients agree up to degree {n}"))
}

/// The Gorenstein parameter of the row: sum of generator degrees minus the
/// relation degree. Expected to be 1 on every table row.
pub fn gorenstein_parameter(row: &PresentationRow) -> BigInt {
    let sum: u64 = row.z_degrees.iter().sum();
    BigInt::from(sum) - BigInt::from(row.relation_z_degree)
}

fn check_gorenstein(row: &PresentationRow) -> VerificationReport {
    let name = "gorenstein-parameter";
    let value = gorenstein_parameter(row);
    if value == BigInt::one() {
        VerificationReport::pass_with(name, "parameter 1")
    } else {
        VerificationReport::fail(name, format!("parameter {value}, expected 1"))
    }
}

/// A deliberate defect injected into a presentation row, for negative
/// controls.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Tamper {
    /// Bump the first generator's integer degree.
    WrongDegree,
    /// Flip the sign of the relation's leading stored term.
    WrongSign,
    /// Bump an exponent in the relation's leading stored term.
    WrongExponent,
}

impl Tamper {
    pub fn parse(s: &str) -> Option<Tamper> {
        match s {
            "wrong-degree" => Some(Tamper::WrongDegree),
            "wrong-sign" => Some(Tamper::WrongSign),
            "wrong-exponent" => Some(Tamper::WrongExponent),
            _ => None,
        }
    }

    pub fn wire(&self) -> &'static str {
        match self {
            Tamper::WrongDegree => "wrong-degree",
            Tamper::WrongSign => "wrong-sign",
            Tamper::WrongExponent => "wrong-exponent",
        }
    }
}

/// Apply the tamper to a row.
pub fn tamper_row(row: &mut PresentationRow, tamper: Tamper) {
    match tamper {
        Tamper::WrongDegree => {
            row.z_degrees[0] += 1;
        }
        Tamper::WrongSign => {
            let (&e, c) = row.relation.terms().next().expect("relation has terms");
            let flipped = -c.clone() * BigRational::from(BigInt::from(2));
            row.relation.add_term(e, flipped);
        }
        Tamper::WrongExponent => {
            let (&e, c) = row.relation.terms().next().expect("relation has terms");
            let c = c.clone();
            let var = (0..3).find(|&v| e[v] > 0).unwrap_or(0);
            let mut bumped = e;
            bumped[var] += 1;
            row.relation.add_term(e, -c.clone());
            row.relation.add_term(bumped, c);
        }
    }
}

/// Aggregated verification of a weight triple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FullReport {
    pub weights: [u64; 3],
    pub classification: Classification,
    /// Advisory row markers (not checks), e.g. the smallest-parameter D row.
    pub flags: Vec<String>,
    pub checks: Vec<VerificationReport>,
}

impl FullReport {
    pub fn overall_pass(&self) -> bool {
        !self.checks.iter().any(|c| c.failed())
    }
}

/// Run every applicable check. Non-Dynkin weights run only the
/// weight-independent ones; the rest are reported as not applicable.
pub fn verify_all(p: &WeightSequence, max_degree: u64) -> FullReport {
    verify_all_with(p, max_degree, None)
}

/// As [`verify_all`], optionally tampering the presentation row first.
pub fn verify_all_with(p: &WeightSequence, max_degree: u64, tamper: Option<Tamper>) -> FullReport {
    let classification = classify(p);
    let g = GradingGroup::new(*p);
    let mut checks = Vec::new();
    let mut flags = Vec::new();

    // Holds for every weight triple, Dynkin or not.
    checks.push(check_strong_exceptional(&g, &build_collection(&g, true)));

    if classification.dynkin {
        let mut row = table_row(p).expect("dynkin weights have a table row");
        if let Some(t) = tamper {
            tamper_row(&mut row, t);
        }
        flags.extend(row.flags.iter().cloned());
        checks.push(check_generator_degrees(&g, &row));
        checks.push(check_relation_membership(&g, &row));
        checks.push(check_hilbert_match(&g, &row, max_degree));
        checks.push(check_gorenstein(&row));
    } else {
        let reason = format!("weights {} are not of finite star type", p);
        for name in
            ["generator-degrees", "relation-membership", "hilbert-match", "gorenstein-parameter"]
        {
            checks.push(VerificationReport::not_applicable(name, reason.clone()));
        }
    }

    checks.push(compare_lattices(&g));

    FullReport { weights: p.weights(), classification, flags, checks }
}
