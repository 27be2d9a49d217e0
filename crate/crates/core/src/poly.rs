//! Exact polynomials in the homogeneous coordinates `x0, x1, x2` and
//! reduction modulo the defining equation `x0^p0 + x1^p1 + x2^p2`.
//!
//! Coefficients are exact rationals. Division uses the weighted
//! reverse-lexicographic order with `x0 > x1 > x2`, where exponents are
//! weighted so that the three terms of the defining equation tie; the
//! reverse-lexicographic tie break then makes `x0^p0` the leading term. For a
//! principal ideal the remainder is independent of the reduction strategy, so
//! outputs are reproducible bit for bit.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::grading::{Degree, GradingGroup, WeightSequence};

/// Exponent triple of a monomial in `x0, x1, x2`.
pub type Exponents = [u64; 3];

/// Sparse polynomial with exact rational coefficients.
///
/// Invariant: no zero coefficient is stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedPolynomial {
    terms: BTreeMap<Exponents, BigRational>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        GradedPolynomial::default()
    }

    pub fn one() -> Self {
        GradedPolynomial::monomial([0, 0, 0], BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        GradedPolynomial::monomial([0, 0, 0], c)
    }

    pub fn monomial(exponents: Exponents, coefficient: BigRational) -> Self {
        let mut p = GradedPolynomial::zero();
        p.add_term(exponents, coefficient);
        p
    }

    /// The variable `x_s`.
    pub fn variable(s: usize) -> Self {
        let mut e = [0u64; 3];
        e[s] = 1;
        GradedPolynomial::monomial(e, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &Exponents) -> BigRational {
        self.terms.get(exponents).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exponents: Exponents, coefficient: BigRational) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(BigRational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn plus(&self, other: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &GradedPolynomial) -> GradedPolynomial {
        self.plus(&other.negated())
    }

    pub fn negated(&self) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (e, c) in self.terms() {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn scaled(&self, k: &BigRational) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (e, c) in self.terms() {
            out.add_term(*e, c * k);
        }
        out
    }

    pub fn times(&self, other: &GradedPolynomial) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u64) -> GradedPolynomial {
        let mut out = GradedPolynomial::one();
        for _ in 0..n {
            out = out.times(self);
        }
        out
    }
}

/// The defining equation `x0^p0 + x1^p1 + x2^p2`.
pub fn defining_equation(p: &WeightSequence) -> GradedPolynomial {
    let mut f = GradedPolynomial::zero();
    for s in 0..3 {
        let mut e = [0u64; 3];
        e[s] = p.weight(s);
        f.add_term(e, BigRational::one());
    }
    f
}

/// Degree of a monomial given by signed exponents; rejects negatives.
pub fn degree_of_monomial(g: &GradingGroup, exponents: [i64; 3]) -> Result<Degree, Error> {
    for e in exponents {
        if e < 0 {
            return Err(Error::InvalidExponent(e));
        }
    }
    Ok(monomial_degree(g, exponents.map(|e| e as u64)))
}

/// Degree of the monomial `x0^e0 * x1^e1 * x2^e2`, normalized.
pub fn monomial_degree(g: &GradingGroup, exponents: Exponents) -> Degree {
    let raw = Degree {
        arms: [
            BigInt::from(exponents[0]),
            BigInt::from(exponents[1]),
            BigInt::from(exponents[2]),
        ],
        hub: BigInt::zero(),
    };
    g.normalize(&raw)
}

/// Shared normalized degree of all monomials, if the polynomial is
/// homogeneous and nonzero.
pub fn homogeneous_degree(g: &GradingGroup, poly: &GradedPolynomial) -> Option<Degree> {
    let mut degree: Option<Degree> = None;
    for (e, _) in poly.terms() {
        let d = monomial_degree(g, *e);
        match &degree {
            None => degree = Some(d),
            Some(prev) if *prev == d => {}
            Some(_) => return None,
        }
    }
    degree
}

/// Exponents weighted by `P/p_s` with `P = p0*p1*p2`, so that the terms of
/// the defining equation share one weighted degree.
fn weighted_degree(p: &WeightSequence, e: &Exponents) -> BigUint {
    let [p0, p1, p2] = p.weights().map(BigUint::from);
    BigUint::from(e[0]) * &p1 * &p2
        + BigUint::from(e[1]) * &p0 * &p2
        + BigUint::from(e[2]) * &p0 * &p1
}

/// Weighted reverse-lexicographic comparison with `x0 > x1 > x2`.
pub fn monomial_order(p: &WeightSequence, a: &Exponents, b: &Exponents) -> Ordering {
    match weighted_degree(p, a).cmp(&weighted_degree(p, b)) {
        Ordering::Equal => {}
        other => return other,
    }
    // Reverse lex: larger means the last nonzero exponent difference is
    // negative.
    for s in (0..3).rev() {
        let d = (a[s] as i128) - (b[s] as i128);
        if d != 0 {
            return if d < 0 { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

/// Outcome of division by the defining equation: `poly = cofactor * f + remainder`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reduction {
    pub remainder: GradedPolynomial,
    pub cofactor: GradedPolynomial,
}

/// Divide by the defining equation of the weights.
///
/// No monomial of the remainder is divisible by the leading term `x0^p0`;
/// the remainder vanishes exactly when the input lies in the principal ideal.
pub fn reduce(p: &WeightSequence, poly: &GradedPolynomial) -> Reduction {
    let p0 = p.weight(0);
    let f = defining_equation(p);
    let mut remainder = poly.clone();
    let mut cofactor = GradedPolynomial::zero();
    loop {
        let target = remainder
            .terms()
            .filter(|(e, _)| e[0] >= p0)
            .max_by(|(ea, _), (eb, _)| monomial_order(p, ea, eb))
            .map(|(e, c)| (*e, c.clone()));
        let (e, c) = match target {
            Some(t) => t,
            None => break,
        };
        let quotient = GradedPolynomial::monomial([e[0] - p0, e[1], e[2]], c);
        remainder = remainder.minus(&quotient.times(&f));
        cofactor = cofactor.plus(&quotient);
    }
    Reduction { remainder, cofactor }
}

/// Parse the textual polynomial format: a signed sum of terms
/// `coef*x0^a*x1^b*x2^c` where `*` and `^` are mandatory, the coefficient is
/// optional when it is 1, and whitespace is ignored. Coefficients may be
/// rationals `n/d`.
pub fn parse_polynomial(input: &str) -> Result<GradedPolynomial, Error> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let chars: Vec<char> = compact.chars().collect();
    let mut pos = 0usize;
    let mut poly = GradedPolynomial::zero();
    let mut first = true;
    while pos < chars.len() {
        let mut negative = false;
        match chars[pos] {
            '+' => pos += 1,
            '-' => {
                negative = true;
                pos += 1;
            }
            _ if first => {}
            c => return Err(Error::Parse(format!("expected '+' or '-', found {c:?}"))),
        }
        first = false;
        let (exponents, coefficient) = parse_term(&chars, &mut pos)?;
        let signed = if negative { -coefficient } else { coefficient };
        poly.add_term(exponents, signed);
    }
    Ok(poly)
}

fn parse_term(chars: &[char], pos: &mut usize) -> Result<(Exponents, BigRational), Error> {
    let mut coefficient = BigRational::one();
    let mut exponents = [0u64; 3];
    if *pos < chars.len() && chars[*pos].is_ascii_digit() {
        coefficient = parse_rational(chars, pos)?;
        if *pos < chars.len() && chars[*pos] == '*' {
            *pos += 1;
        } else {
            return Ok((exponents, coefficient));
        }
    }
    loop {
        if *pos >= chars.len() || chars[*pos] != 'x' {
            return Err(Error::Parse(format!(
                "expected variable at position {} ('x0', 'x1' or 'x2')",
                *pos
            )));
        }
        *pos += 1;
        let var = match chars.get(*pos) {
            Some('0') => 0usize,
            Some('1') => 1,
            Some('2') => 2,
            other => {
                return Err(Error::Parse(format!("expected variable index 0..2, found {other:?}")))
            }
        };
        *pos += 1;
        if chars.get(*pos) != Some(&'^') {
            return Err(Error::Parse("exponent marker '^' is mandatory".into()));
        }
        *pos += 1;
        let exp = parse_uint(chars, pos)?;
        let exp: u64 = exp
            .try_into()
            .map_err(|_| Error::Parse("exponent too large".into()))?;
        exponents[var] += exp;
        if *pos < chars.len() && chars[*pos] == '*' {
            *pos += 1;
        } else {
            break;
        }
    }
    Ok((exponents, coefficient))
}

fn parse_uint(chars: &[char], pos: &mut usize) -> Result<BigUint, Error> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::Parse(format!("expected a number at position {start}")));
    }
    let digits: String = chars[start..*pos].iter().collect();
    digits
        .parse()
        .map_err(|_| Error::Parse(format!("invalid number {digits:?}")))
}

fn parse_rational(chars: &[char], pos: &mut usize) -> Result<BigRational, Error> {
    let numerator = parse_uint(chars, pos)?;
    let mut denominator = BigUint::one();
    if chars.get(*pos) == Some(&'/') {
        *pos += 1;
        denominator = parse_uint(chars, pos)?;
        if denominator.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
    }
    Ok(BigRational::new(BigInt::from(numerator), BigInt::from(denominator)))
}

/// Canonical textual form, inverse to [`parse_polynomial`]. Terms are printed
/// in descending exponent order.
pub fn format_polynomial(poly: &GradedPolynomial) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in poly.terms.iter().rev().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let magnitude = c.abs();
        let vars: Vec<String> = (0..3).filter(|&s| e[s] > 0).map(|s| format!("x{}^{}", s, e[s])).collect();
        if vars.is_empty() {
            out.push_str(&format_rational(&magnitude));
        } else if magnitude.is_one() {
            out.push_str(&vars.join("*"));
        } else {
            out.push_str(&format_rational(&magnitude));
            out.push('*');
            out.push_str(&vars.join("*"));
        }
    }
    out
}

fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
