//! Command-line parsing. Every command takes the three weights as
//! positional arguments; flags are command specific and unknown or
//! misapplied flags are usage errors.

use std::fmt;

use wpl_core::grading::{Degree, WeightSequence};
use wpl_core::poly::{parse_polynomial, GradedPolynomial};
use wpl_core::presentation::Tamper;

pub const DEFAULT_MAX_DEGREE: u64 = 500;
pub const DEFAULT_BOX_BOUND: i64 = 8;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Json,
    Dot,
}

#[derive(Clone, PartialEq, Debug)]
pub enum CommandKind {
    Classify,
    Group,
    Dim { degree: Degree },
    Reduce { poly: GradedPolynomial },
    Hilbert { max: u64 },
    Verify { max: u64, tamper: Option<Tamper> },
    Collection { drop_unit: bool },
    Euler { drop_unit: bool },
    Quiver { format: OutputFormat },
    Cartan,
    Coxeter,
    Roots { box_bound: i64 },
}

#[derive(Clone, PartialEq, Debug)]
pub struct Command {
    pub weights: WeightSequence,
    pub kind: CommandKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub const USAGE: &str = "usage: wpl <command> <p0> <p1> <p2> [flags]

commands:
  classify    star type of the weights
  group       rank, torsion and dualizing element of the grading group
  dim         --degree \"a0 a1 a2 m\": monomial count and graded dimension
  reduce      --poly \"...\": remainder and cofactor modulo the defining equation
  hilbert     [--max N] truncated Hilbert series of the invariant subalgebra
  verify      [--max N] [--tamper wrong-degree|wrong-sign|wrong-exponent]
              run every check; exit 1 when any check fails
  collection  [--drop-e0] the twist degrees of the canonical collection
  euler       [--drop-e0] Euler matrix of the collection
  quiver      [--format json|dot] the star quiver
  cartan      Cartan matrix from the quiver and from the Euler matrix
  coxeter     Coxeter transformation and its order
  roots       [--box B] roots of the Cartan form

The degree wire format is four integers \"a0 a1 a2 m\" meaning
a0*x0 + a1*x1 + a2*x2 + m*c.";

#[derive(Default)]
struct RawFlags {
    degree: Option<String>,
    poly: Option<String>,
    max: Option<String>,
    box_bound: Option<String>,
    format: Option<String>,
    tamper: Option<String>,
    drop_unit: bool,
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// Parse the argument vector (without the program name).
pub fn parse_args(args: &[String]) -> Result<Command, UsageError> {
    if args.is_empty() {
        return Err(usage("missing command"));
    }
    let name = args[0].as_str();
    if args.len() < 4 {
        return Err(usage(format!("command {name:?} needs three weights")));
    }
    let mut weights = [0i64; 3];
    for (slot, raw) in weights.iter_mut().zip(&args[1..4]) {
        *slot = raw
            .parse()
            .map_err(|_| usage(format!("weight {raw:?} is not an integer")))?;
    }
    let weights = WeightSequence::new(weights[0], weights[1], weights[2])
        .map_err(|e| usage(e.to_string()))?;

    let mut flags = RawFlags::default();
    let mut i = 4;
    while i < args.len() {
        let flag = args[i].as_str();
        let mut take_value = |field: &mut Option<String>| -> Result<(), UsageError> {
            i += 1;
            match args.get(i) {
                Some(v) => {
                    if field.replace(v.clone()).is_some() {
                        return Err(usage(format!("flag {flag} given twice")));
                    }
                    Ok(())
                }
                None => Err(usage(format!("flag {flag} needs a value"))),
            }
        };
        match flag {
            "--degree" => take_value(&mut flags.degree)?,
            "--poly" => take_value(&mut flags.poly)?,
            "--max" => take_value(&mut flags.max)?,
            "--box" => take_value(&mut flags.box_bound)?,
            "--format" => take_value(&mut flags.format)?,
            "--tamper" => take_value(&mut flags.tamper)?,
            "--drop-e0" => flags.drop_unit = true,
            other => return Err(usage(format!("unknown flag {other:?}"))),
        }
        i += 1;
    }

    let kind = build_kind(name, &flags)?;
    reject_unused(name, &kind, &flags)?;
    Ok(Command { weights, kind })
}

fn build_kind(name: &str, flags: &RawFlags) -> Result<CommandKind, UsageError> {
    let parse_max = || -> Result<u64, UsageError> {
        match &flags.max {
            None => Ok(DEFAULT_MAX_DEGREE),
            Some(raw) => raw
                .parse()
                .map_err(|_| usage(format!("--max {raw:?} is not a nonnegative integer"))),
        }
    };
    match name {
        "classify" => Ok(CommandKind::Classify),
        "group" => Ok(CommandKind::Group),
        "dim" => {
            let raw = flags.degree.as_ref().ok_or_else(|| usage("dim needs --degree"))?;
            let degree = Degree::parse_wire(raw).map_err(|e| usage(e.to_string()))?;
            Ok(CommandKind::Dim { degree })
        }
        "reduce" => {
            let raw = flags.poly.as_ref().ok_or_else(|| usage("reduce needs --poly"))?;
            let poly = parse_polynomial(raw).map_err(|e| usage(e.to_string()))?;
            Ok(CommandKind::Reduce { poly })
        }
        "hilbert" => Ok(CommandKind::Hilbert { max: parse_max()? }),
        "verify" => {
            let tamper = match &flags.tamper {
                None => None,
                Some(raw) => Some(
                    Tamper::parse(raw)
                        .ok_or_else(|| usage(format!("unknown tamper kind {raw:?}")))?,
                ),
            };
            Ok(CommandKind::Verify { max: parse_max()?, tamper })
        }
        "collection" => Ok(CommandKind::Collection { drop_unit: flags.drop_unit }),
        "euler" => Ok(CommandKind::Euler { drop_unit: flags.drop_unit }),
        "quiver" => {
            let format = match flags.format.as_deref() {
                None | Some("json") => OutputFormat::Json,
                Some("dot") => OutputFormat::Dot,
                Some(other) => return Err(usage(format!("unknown format {other:?}"))),
            };
            Ok(CommandKind::Quiver { format })
        }
        "cartan" => Ok(CommandKind::Cartan),
        "coxeter" => Ok(CommandKind::Coxeter),
        "roots" => {
            let box_bound = match &flags.box_bound {
                None => DEFAULT_BOX_BOUND,
                Some(raw) => {
                    let b: i64 = raw
                        .parse()
                        .map_err(|_| usage(format!("--box {raw:?} is not an integer")))?;
                    if b < 1 {
                        return Err(usage("--box must be at least 1"));
                    }
                    b
                }
            };
            Ok(CommandKind::Roots { box_bound })
        }
        other => Err(usage(format!("unknown command {other:?}"))),
    }
}

fn reject_unused(name: &str, kind: &CommandKind, flags: &RawFlags) -> Result<(), UsageError> {
    let complain =
        |flag: &str| -> Result<(), UsageError> { Err(usage(format!("{name} does not take {flag}"))) };
    if flags.degree.is_some() && !matches!(kind, CommandKind::Dim { .. }) {
        return complain("--degree");
    }
    if flags.poly.is_some() && !matches!(kind, CommandKind::Reduce { .. }) {
        return complain("--poly");
    }
    if flags.max.is_some()
        && !matches!(kind, CommandKind::Hilbert { .. } | CommandKind::Verify { .. })
    {
        return complain("--max");
    }
    if flags.box_bound.is_some() && !matches!(kind, CommandKind::Roots { .. }) {
        return complain("--box");
    }
    if flags.format.is_some() && !matches!(kind, CommandKind::Quiver { .. }) {
        return complain("--format");
    }
    if flags.tamper.is_some() && !matches!(kind, CommandKind::Verify { .. }) {
        return complain("--tamper");
    }
    if flags.drop_unit
        && !matches!(kind, CommandKind::Collection { .. } | CommandKind::Euler { .. })
    {
        return complain("--drop-e0");
    }
    Ok(())
}
