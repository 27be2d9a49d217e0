//! Exact computational backbone for star-weighted graded rings: the rank-one
//! grading group of a weight triple, graded dimensions of the hypersurface
//! coordinate ring, the presentation table of the associated invariant
//! subalgebras, the collection of twisted sheaves with its Euler matrix, and
//! the lattice data (Cartan matrices, Coxeter transformations, root counts)
//! that ties the sheaf side to the star quiver.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals, no
//! floating point anywhere. With the default `parallel` feature the heavier
//! scans (root enumeration, collection checks, series coefficients) run on
//! rayon; disabling the feature selects sequential fallbacks with identical
//! output.

pub mod collection;
pub mod error;
pub mod grading;
pub mod hilbert;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod presentation;
pub mod quiver;
pub mod report;
pub mod roots;

pub use collection::{
    build_collection, check_strong_exceptional, euler_matrix, ext1_dim, hom_dim,
    ExceptionalCollection,
};
pub use error::Error;
pub use grading::{Degree, GradingGroup, GroupStructure, WeightSequence};
pub use hilbert::{closed_form_series, graded_dim, hilbert_coefficients, monomial_count};
pub use lattice::{cartan_from_euler, compare_lattices, coxeter_matrix};
pub use matrix::{matrix_order, smith_normal_form, IntMat, MatrixOrder};
pub use poly::{
    defining_equation, degree_of_monomial, format_polynomial, parse_polynomial, reduce,
    GradedPolynomial, Reduction,
};
pub use presentation::{
    classify, gorenstein_parameter, table_row, verify_all, verify_all_with, AdeType,
    Classification, FullReport, PresentationRow, Tamper,
};
pub use quiver::{build_quiver, cartan_from_quiver, path_count, to_dot, Quiver};
pub use report::{CheckOutcome, VerificationReport};
pub use roots::{enumerate_roots, RootSet};
