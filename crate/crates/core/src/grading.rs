//! The rank-one abelian grading group of a weight triple.
//!
//! For weights `(p0, p1, p2)` the group is generated by the three arm degrees
//! `x0, x1, x2` and the hub degree `c`, subject to `p_s * x_s = c`. Every
//! element has a unique normal form `l0*x0 + l1*x1 + l2*x2 + l*c` with
//! `0 <= l_s < p_s`; the hub coefficient `l` is unconstrained. All arithmetic
//! is arbitrary precision.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::matrix::{smith_normal_form, IntMat};

/// A triple of positive integer weights.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WeightSequence([u64; 3]);

impl WeightSequence {
    pub fn new(p0: i64, p1: i64, p2: i64) -> Result<Self, Error> {
        for w in [p0, p1, p2] {
            if w < 1 {
                return Err(Error::InvalidWeight(w));
            }
        }
        Ok(WeightSequence([p0 as u64, p1 as u64, p2 as u64]))
    }

    pub fn weights(&self) -> [u64; 3] {
        self.0
    }

    pub fn weight(&self, arm: usize) -> u64 {
        self.0[arm]
    }

    /// Exact test of `1/p0 + 1/p1 + 1/p2 > 1`.
    pub fn is_dynkin(&self) -> bool {
        let [p0, p1, p2] = self.0.map(u128::from);
        p1 * p2 + p0 * p2 + p0 * p1 > p0 * p1 * p2
    }

    /// Number of vertices of the star quiver: `p0 + p1 + p2 - 2`.
    pub fn vertex_count(&self) -> u64 {
        self.0[0] + self.0[1] + self.0[2] - 2
    }

    /// Weights in ascending order together with the permutation that realizes
    /// it: `sorted[i] = weights[perm[i]]`.
    pub fn sorted_with_permutation(&self) -> ([u64; 3], [usize; 3]) {
        let mut idx = [0usize, 1, 2];
        idx.sort_by_key(|&i| (self.0[i], i));
        (idx.map(|i| self.0[i]), idx)
    }
}

impl fmt::Display for WeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// An element of the grading group, written on the four generators:
/// `arms[0]*x0 + arms[1]*x1 + arms[2]*x2 + hub*c`.
///
/// The same type carries raw and normalized representatives; all public
/// operations of [`GradingGroup`] return normal forms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Degree {
    pub arms: [BigInt; 3],
    pub hub: BigInt,
}

impl Degree {
    pub fn zero() -> Self {
        Degree { arms: [BigInt::zero(), BigInt::zero(), BigInt::zero()], hub: BigInt::zero() }
    }

    pub fn from_i64(a0: i64, a1: i64, a2: i64, m: i64) -> Self {
        Degree {
            arms: [BigInt::from(a0), BigInt::from(a1), BigInt::from(a2)],
            hub: BigInt::from(m),
        }
    }

    /// The arm generator `x_s`.
    pub fn arm_generator(s: usize) -> Self {
        let mut d = Degree::zero();
        d.arms[s] = BigInt::one();
        d
    }

    /// The hub generator `c`.
    pub fn hub_generator() -> Self {
        let mut d = Degree::zero();
        d.hub = BigInt::one();
        d
    }

    pub fn is_zero(&self) -> bool {
        self.arms.iter().all(Zero::is_zero) && self.hub.is_zero()
    }

    /// Componentwise sum of the raw representatives.
    pub fn plus(&self, other: &Degree) -> Degree {
        Degree {
            arms: [
                &self.arms[0] + &other.arms[0],
                &self.arms[1] + &other.arms[1],
                &self.arms[2] + &other.arms[2],
            ],
            hub: &self.hub + &other.hub,
        }
    }

    pub fn minus(&self, other: &Degree) -> Degree {
        self.plus(&other.negated())
    }

    pub fn negated(&self) -> Degree {
        Degree {
            arms: [-&self.arms[0], -&self.arms[1], -&self.arms[2]],
            hub: -&self.hub,
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Degree {
        Degree {
            arms: [k * &self.arms[0], k * &self.arms[1], k * &self.arms[2]],
            hub: k * &self.hub,
        }
    }

    /// Parse the wire format `"a0 a1 a2 m"`.
    pub fn parse_wire(s: &str) -> Result<Degree, Error> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "degree must be four integers \"a0 a1 a2 m\", got {s:?}"
            )));
        }
        let mut vals = Vec::with_capacity(4);
        for part in parts {
            let v: BigInt = part
                .parse()
                .map_err(|_| Error::Parse(format!("invalid integer {part:?} in degree")))?;
            vals.push(v);
        }
        let hub = vals.pop().unwrap();
        let a2 = vals.pop().unwrap();
        let a1 = vals.pop().unwrap();
        let a0 = vals.pop().unwrap();
        Ok(Degree { arms: [a0, a1, a2], hub })
    }

    /// Wire format: four space-separated integers `a0 a1 a2 m`.
    pub fn wire(&self) -> String {
        format!("{} {} {} {}", self.arms[0], self.arms[1], self.arms[2], self.hub)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.wire())
    }
}

/// Rank and torsion of the grading group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupStructure {
    pub rank: usize,
    /// Invariant factors > 1, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
}

/// The grading group of a weight triple, with precomputed Smith data.
///
/// Values are immutable and every operation is pure.
pub struct GradingGroup {
    weights: WeightSequence,
    structure: GroupStructure,
    /// Left transform and diagonal of the Smith normal form of the transposed
    /// relation matrix; used for the lattice membership test.
    membership_left: IntMat,
    membership_diag: Vec<BigInt>,
    dualizing: Degree,
}

impl GradingGroup {
    pub fn new(weights: WeightSequence) -> Self {
        let relations = relation_matrix(&weights);
        let snf = smith_normal_form(&relations);
        let nonzero = snf.diagonal_entries();
        let structure = GroupStructure {
            rank: 4 - nonzero.len(),
            invariant_factors: nonzero.into_iter().filter(|d| !d.is_one()).collect(),
        };
        let snf_t = smith_normal_form(&relations.transpose());
        let membership_diag = snf_t.diagonal_entries();
        debug_assert_eq!(membership_diag.len(), 3);
        let mut group = GradingGroup {
            weights,
            structure,
            membership_left: snf_t.left,
            membership_diag,
            dualizing: Degree::zero(),
        };
        group.dualizing = group.normalize(&Degree::from_i64(-1, -1, -1, 1));
        group
    }

    pub fn for_weights(p0: i64, p1: i64, p2: i64) -> Result<Self, Error> {
        Ok(GradingGroup::new(WeightSequence::new(p0, p1, p2)?))
    }

    pub fn weights(&self) -> &WeightSequence {
        &self.weights
    }

    /// The unique representative with arm coefficients in `[0, p_s)`.
    ///
    /// Carries move through the relations: `l_s = a_s mod p_s` and the floor
    /// quotients are absorbed into the hub coefficient.
    pub fn normalize(&self, d: &Degree) -> Degree {
        let mut arms = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        let mut hub = d.hub.clone();
        for s in 0..3 {
            let p = BigInt::from(self.weights.weight(s));
            let (carry, residue) = d.arms[s].div_mod_floor(&p);
            arms[s] = residue;
            hub += carry;
        }
        Degree { arms, hub }
    }

    /// Normalized value of `sum coefficient * element`.
    pub fn linear_combine(&self, terms: &[(BigInt, Degree)]) -> Degree {
        let mut acc = Degree::zero();
        for (k, d) in terms {
            acc = acc.plus(&d.scaled(k));
        }
        self.normalize(&acc)
    }

    pub fn structure(&self) -> &GroupStructure {
        &self.structure
    }

    /// Normal form of `c - x0 - x1 - x2`.
    pub fn dualizing_element(&self) -> Degree {
        self.dualizing.clone()
    }

    /// Whether the raw tuple lies in the relation lattice, decided through
    /// the Smith transform of the transposed relation matrix. This route is
    /// independent of the carry arithmetic in [`GradingGroup::normalize`].
    pub fn relation_lattice_contains(&self, d: &Degree) -> bool {
        let u = IntMat::from_fn(4, 1, |i, _| match i {
            0..=2 => d.arms[i].clone(),
            _ => d.hub.clone(),
        });
        let w = self.membership_left.mul(&u);
        for i in 0..3 {
            if !w.at(i, 0).mod_floor(&self.membership_diag[i]).is_zero() {
                return false;
            }
        }
        w.at(3, 0).is_zero()
    }

    pub fn degrees_equal(&self, a: &Degree, b: &Degree) -> bool {
        self.normalize(a) == self.normalize(b)
    }
}

/// The relation rows `p_s * x_s - c` as a 3x4 integer matrix over the
/// generator basis `(x0, x1, x2, c)`.
fn relation_matrix(weights: &WeightSequence) -> IntMat {
    let mut m = IntMat::zeros(3, 4);
    for s in 0..3 {
        m.set(s, s, BigInt::from(weights.weight(s)));
        m.set(s, 3, BigInt::from(-1));
    }
    m
}
