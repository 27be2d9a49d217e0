//! Command execution: every command renders a single document (JSON, or DOT
//! for the quiver) and an exit code. Exit 0 on success, 1 when a
//! verification check fails or a computation must be refused, 2 is reserved
//! for usage errors upstream.

use num_bigint::BigInt;

use wpl_core::collection::{build_collection, euler_matrix};
use wpl_core::grading::GradingGroup;
use wpl_core::hilbert::{graded_dim, hilbert_coefficients, monomial_count};
use wpl_core::lattice::{cartan_from_euler, coxeter_matrix, DEFAULT_ORDER_BOUND};
use wpl_core::matrix::{matrix_order, IntMat, MatrixOrder};
use wpl_core::poly::{format_polynomial, reduce};
use wpl_core::presentation::{classify, table_row, verify_all_with, Classification};
use wpl_core::quiver::{build_quiver, cartan_from_quiver, to_dot};
use wpl_core::report::CheckOutcome;
use wpl_core::roots::enumerate_roots;

use crate::args::{Command, CommandKind, OutputFormat};
use crate::json::Json;

const SCHEMA_VERSION: i64 = 1;

/// Execute a parsed command; returns the exit code and the output document.
pub fn run(cmd: &Command) -> (i32, String) {
    let g = GradingGroup::new(cmd.weights);
    match &cmd.kind {
        CommandKind::Classify => {
            let c = classify(g.weights());
            let mut fields = header(&g);
            push_classification(&mut fields, &c);
            (0, Json::Object(fields).render())
        }
        CommandKind::Group => {
            let s = g.structure();
            let mut fields = header(&g);
            fields.push(("rank".into(), Json::int(s.rank as i64)));
            fields.push((
                "invariant_factors".into(),
                Json::Array(s.invariant_factors.iter().map(|d| Json::Int(d.clone())).collect()),
            ));
            fields.push(("dualizing_element".into(), Json::str(g.dualizing_element().wire())));
            (0, Json::Object(fields).render())
        }
        CommandKind::Dim { degree } => {
            let mut fields = header(&g);
            fields.push(("degree".into(), Json::str(degree.wire())));
            fields.push(("normal_form".into(), Json::str(g.normalize(degree).wire())));
            fields.push(("monomial_count".into(), Json::Int(monomial_count(&g, degree))));
            fields.push(("graded_dim".into(), Json::Int(graded_dim(&g, degree))));
            (0, Json::Object(fields).render())
        }
        CommandKind::Reduce { poly } => {
            let reduction = reduce(g.weights(), poly);
            let mut fields = header(&g);
            fields.push(("input".into(), Json::str(format_polynomial(poly))));
            fields.push(("remainder".into(), Json::str(format_polynomial(&reduction.remainder))));
            fields.push(("cofactor".into(), Json::str(format_polynomial(&reduction.cofactor))));
            fields.push(("in_ideal".into(), Json::Bool(reduction.remainder.is_zero())));
            (0, Json::Object(fields).render())
        }
        CommandKind::Hilbert { max } => {
            let mut fields = header(&g);
            fields.push(("max".into(), Json::int(*max as i64)));
            match table_row(g.weights()) {
                Ok(row) => {
                    fields.push((
                        "generator_degrees".into(),
                        Json::Array(
                            row.z_degrees.iter().map(|d| Json::int(*d as i64)).collect(),
                        ),
                    ));
                    fields
                        .push(("relation_degree".into(), Json::int(row.relation_z_degree as i64)));
                }
                Err(_) => {
                    fields.push(("generator_degrees".into(), Json::Null));
                    fields.push(("relation_degree".into(), Json::Null));
                }
            }
            let coefficients = hilbert_coefficients(&g, *max);
            fields.push((
                "coefficients".into(),
                Json::Array(coefficients.into_iter().map(Json::Int).collect()),
            ));
            (0, Json::Object(fields).render())
        }
        CommandKind::Verify { max, tamper } => {
            let report = verify_all_with(g.weights(), *max, *tamper);
            let mut fields = header(&g);
            push_classification(&mut fields, &report.classification);
            if let Some(t) = tamper {
                fields.push(("tamper".into(), Json::str(t.wire())));
            }
            fields.push((
                "flags".into(),
                Json::Array(report.flags.iter().map(Json::str).collect()),
            ));
            fields.push((
                "checks".into(),
                Json::Array(
                    report
                        .checks
                        .iter()
                        .map(|c| {
                            Json::Object(vec![
                                ("name".into(), Json::str(&c.name)),
                                (
                                    "pass".into(),
                                    match c.outcome {
                                        CheckOutcome::Pass => Json::Bool(true),
                                        CheckOutcome::Fail => Json::Bool(false),
                                        CheckOutcome::NotApplicable => Json::Null,
                                    },
                                ),
                                (
                                    "witness".into(),
                                    c.witness.as_ref().map_or(Json::Null, Json::str),
                                ),
                            ])
                        })
                        .collect(),
                ),
            ));
            let all_pass = report.overall_pass();
            fields.push(("all_pass".into(), Json::Bool(all_pass)));
            (if all_pass { 0 } else { 1 }, Json::Object(fields).render())
        }
        CommandKind::Collection { drop_unit } => {
            let coll = build_collection(&g, !drop_unit);
            let mut fields = header(&g);
            fields.push(("include_e0".into(), Json::Bool(!drop_unit)));
            fields.push(("length".into(), Json::int(coll.len() as i64)));
            fields.push((
                "twists".into(),
                Json::Array(coll.twists().iter().map(|t| Json::str(t.wire())).collect()),
            ));
            (0, Json::Object(fields).render())
        }
        CommandKind::Euler { drop_unit } => {
            let coll = build_collection(&g, !drop_unit);
            let e = euler_matrix(&g, &coll);
            let mut fields = header(&g);
            fields.push(("include_e0".into(), Json::Bool(!drop_unit)));
            fields.push(("size".into(), Json::int(e.rows() as i64)));
            fields.push(("matrix".into(), matrix_json(&e)));
            (0, Json::Object(fields).render())
        }
        CommandKind::Quiver { format } => {
            let quiver = build_quiver(&g);
            match format {
                OutputFormat::Dot => (0, to_dot(&quiver)),
                OutputFormat::Json => {
                    let mut fields = header(&g);
                    fields.push((
                        "vertices".into(),
                        Json::Array(
                            quiver.vertices.iter().map(|v| Json::str(v.wire())).collect(),
                        ),
                    ));
                    fields.push((
                        "arrows".into(),
                        Json::Array(
                            quiver
                                .arrows
                                .iter()
                                .map(|a| {
                                    Json::Object(vec![
                                        ("source".into(), Json::int(a.source as i64)),
                                        ("target".into(), Json::int(a.target as i64)),
                                        ("label".into(), Json::str(format!("x{}", a.label))),
                                    ])
                                })
                                .collect(),
                        ),
                    ));
                    (0, Json::Object(fields).render())
                }
            }
        }
        CommandKind::Cartan => {
            let from_quiver = cartan_from_quiver(&build_quiver(&g));
            let e = euler_matrix(&g, &build_collection(&g, false));
            let from_euler = cartan_from_euler(&e).expect("collection matrix is unit triangular");
            let mut fields = header(&g);
            fields.push(("from_quiver".into(), matrix_json(&from_quiver)));
            fields.push(("from_euler".into(), matrix_json(&from_euler)));
            fields.push(("agree".into(), Json::Bool(from_quiver == from_euler)));
            (0, Json::Object(fields).render())
        }
        CommandKind::Coxeter => {
            let e = euler_matrix(&g, &build_collection(&g, false));
            let phi = coxeter_matrix(&e).expect("collection matrix is unit triangular");
            let mut fields = header(&g);
            fields.push(("matrix".into(), matrix_json(&phi)));
            match matrix_order(&phi, DEFAULT_ORDER_BOUND) {
                MatrixOrder::Finite(k) => {
                    fields.push(("order".into(), Json::int(k as i64)));
                }
                MatrixOrder::ExceedsBound => {
                    fields.push(("order".into(), Json::Null));
                    fields.push(("order_bound".into(), Json::int(DEFAULT_ORDER_BOUND as i64)));
                }
            }
            (0, Json::Object(fields).render())
        }
        CommandKind::Roots { box_bound } => {
            let cartan = cartan_from_quiver(&build_quiver(&g));
            let mut fields = header(&g);
            fields.push(("box".into(), Json::int(*box_bound)));
            match enumerate_roots(&cartan, *box_bound) {
                Ok(roots) => {
                    fields.push(("count".into(), Json::int(roots.count() as i64)));
                    fields.push((
                        "roots".into(),
                        Json::Array(
                            roots
                                .vectors
                                .iter()
                                .map(|v| {
                                    Json::Array(v.iter().map(|x| Json::int(*x)).collect())
                                })
                                .collect(),
                        ),
                    ));
                    (0, Json::Object(fields).render())
                }
                Err(err) => {
                    fields.push((
                        "error".into(),
                        Json::str(match err {
                            wpl_core::Error::IndefiniteForm { .. } => "indefinite-form",
                            wpl_core::Error::BoxTooSmall { .. } => "box-too-small",
                            _ => "error",
                        }),
                    ));
                    fields.push(("detail".into(), Json::str(err.to_string())));
                    (1, Json::Object(fields).render())
                }
            }
        }
    }
}

fn header(g: &GradingGroup) -> Vec<(String, Json)> {
    vec![
        ("schema_version".into(), Json::int(SCHEMA_VERSION)),
        (
            "weights".into(),
            Json::Array(
                g.weights().weights().iter().map(|w| Json::int(*w as i64)).collect(),
            ),
        ),
    ]
}

fn push_classification(fields: &mut Vec<(String, Json)>, c: &Classification) {
    fields.push(("dynkin".into(), Json::Bool(c.dynkin)));
    fields.push(("vertex_count".into(), Json::int(c.vertex_count as i64)));
    fields.push((
        "type_by_vertex_count".into(),
        c.type_by_vertex_count.map_or(Json::Null, |t| Json::str(t.to_string())),
    ));
    fields.push((
        "paper_label".into(),
        c.paper_label.map_or(Json::Null, Json::str),
    ));
    fields.push((
        "paper_subscript".into(),
        c.paper_subscript.map_or(Json::Null, |s| Json::int(s as i64)),
    ));
}

fn matrix_json(m: &IntMat) -> Json {
    Json::Array(
        (0..m.rows())
            .map(|i| {
                Json::Array((0..m.cols()).map(|j| Json::Int(BigInt::from(m.at(i, j).clone()))).collect())
            })
            .collect(),
    )
}
