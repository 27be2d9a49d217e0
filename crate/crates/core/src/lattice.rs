//! Lattice-level comparison between the sheaf side and the quiver side:
//! symmetrized forms, the Coxeter transformation, and root counts.
//!
//! The Euler matrix of the collection is the Gram matrix of the Euler form in
//! the twist basis, which for these quivers is the path-count matrix. Its
//! inverse rewrites the form in the simple/root basis, where the
//! symmetrization is exactly the graph Cartan matrix `2I - adjacency`; the
//! plain symmetrization `E + E^T` is only congruent to it. The comparison
//! below therefore symmetrizes after the base change.

use num_bigint::BigInt;

use crate::collection::{build_collection, ext1_dim, euler_matrix, hom_dim};
use crate::error::Error;
use crate::grading::GradingGroup;
use crate::matrix::{matrix_order, IntMat, MatrixOrder};
use crate::quiver::{build_quiver, cartan_from_quiver, path_count};
use crate::report::VerificationReport;
use crate::roots::enumerate_roots;

/// Default Coxeter-order search bound; generous next to the values that
/// finite types can attain, so it only guards misuse on infinite types.
pub const DEFAULT_ORDER_BOUND: u64 = 10_000;

/// Default root search box; coordinates of finite-type roots in the simple
/// basis never exceed 6.
pub const DEFAULT_BOX_BOUND: i64 = 8;

/// Symmetrized Euler form in the simple basis: `E^{-1} + E^{-T}` for a unit
/// upper triangular Euler matrix. Agrees entrywise with the graph Cartan
/// matrix of the quiver.
pub fn cartan_from_euler(e: &IntMat) -> Result<IntMat, Error> {
    let inv = e.inverse_unit_upper_triangular()?;
    Ok(inv.add(&inv.transpose()))
}

/// Coxeter transformation `-E^{-T} E` of a unit upper triangular Euler
/// matrix; satisfies `Phi^T E Phi = E`.
pub fn coxeter_matrix(e: &IntMat) -> Result<IntMat, Error> {
    let inv = e.inverse_unit_upper_triangular()?;
    Ok(inv.transpose().mul(e).neg())
}

/// The full lattice comparison for Dynkin weights. Passes when
/// (i) the symmetrized Euler form equals the quiver Cartan matrix entrywise,
/// (ii) morphism dimensions equal path counts on every vertex pair,
/// (iii) first extensions vanish on every pair, and
/// (iv) the Coxeter transformation has finite order with
///      `root count = vertex count * order`.
pub fn compare_lattices(g: &GradingGroup) -> VerificationReport {
    compare_lattices_with(g, DEFAULT_ORDER_BOUND, DEFAULT_BOX_BOUND)
}

pub fn compare_lattices_with(
    g: &GradingGroup,
    order_bound: u64,
    box_bound: i64,
) -> VerificationReport {
    let name = "lattice-comparison";
    if !g.weights().is_dynkin() {
        return VerificationReport::not_applicable(
            name,
            format!("weights {} are not of finite star type", g.weights()),
        );
    }
    let coll = build_collection(g, false);
    let twists = coll.twists();
    let e = euler_matrix(g, &coll);
    let quiver = build_quiver(g);

    // (i) Cartan agreement.
    let from_euler = match cartan_from_euler(&e) {
        Ok(m) => m,
        Err(err) => return VerificationReport::fail(name, format!("euler matrix: {err}")),
    };
    let from_quiver = cartan_from_quiver(&quiver);
    if from_euler != from_quiver {
        let n = twists.len();
        let (i, j) = (0..n * n)
            .map(|k| (k / n, k % n))
            .find(|&(i, j)| from_euler.at(i, j) != from_quiver.at(i, j))
            .expect("some entry differs");
        return VerificationReport::fail(
            name,
            format!(
                "cartan mismatch at ({i}, {j}): {} from the collection vs {} from the quiver",
                from_euler.at(i, j),
                from_quiver.at(i, j)
            ),
        );
    }

    // (ii) morphism dimensions are path counts; (iii) no first extensions.
    for i in 0..twists.len() {
        for j in 0..twists.len() {
            let hom = hom_dim(g, &twists[i], &twists[j]);
            let paths = path_count(&quiver, i, j).expect("indices in range");
            if hom != paths {
                return VerificationReport::fail(
                    name,
                    format!("hom(E_{i}, E_{j}) = {hom} but the quiver has {paths} paths"),
                );
            }
            let ext = ext1_dim(g, &twists[i], &twists[j]);
            if ext != BigInt::from(0) {
                return VerificationReport::fail(
                    name,
                    format!("ext1(E_{i}, E_{j}) = {ext}, expected 0"),
                );
            }
        }
    }

    // (iv) finite Coxeter order and the root-count identity.
    let phi = match coxeter_matrix(&e) {
        Ok(m) => m,
        Err(err) => return VerificationReport::fail(name, format!("euler matrix: {err}")),
    };
    let order = match matrix_order(&phi, order_bound) {
        MatrixOrder::Finite(k) => k,
        MatrixOrder::ExceedsBound => {
            return VerificationReport::fail(
                name,
                format!("coxeter transformation has no order up to {order_bound}"),
            )
        }
    };
    let roots = match enumerate_roots(&from_quiver, box_bound) {
        Ok(r) => r,
        Err(err) => return VerificationReport::fail(name, format!("root enumeration: {err}")),
    };
    let vertices = twists.len() as u64;
    if roots.count() as u64 != vertices * order {
        return VerificationReport::fail(
            name,
            format!(
                "{} roots, expected vertex count {vertices} times coxeter order {order}",
                roots.count()
            ),
        );
    }
    VerificationReport::pass_with(name, format!("order {order}, roots {}", roots.count()))
}
