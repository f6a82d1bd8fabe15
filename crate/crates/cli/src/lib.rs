//! The `polycenter` command-line tool.
//!
//! Exit codes are stable: see [`exit`].

pub mod document;
pub mod record;
pub mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use polycenter::catalog::{lookup, medoid, medoid_function};
use polycenter::characterize::{characterize, Tolerances};
use polycenter::dsl::{admit, parse, ParseError, ParsedCenter};
use polycenter::optim::{
    chebyshev_center, check_minimal_center, geometric_median, MinimalCenterKind, MEDIAN_MAX_ITER, MEDIAN_TOL,
};
use polycenter::sample::{random_convex_polygon, seeded, Sampler};
use polycenter::{normalize, verify_axioms, CenterFunction, Domain, Error, Point2, Polygon};
use serde_json::{json, Value};

use crate::document::{Geometry, PolygonDocument, SchemaError};
use crate::record::{CenterRecord, Precision};

pub mod exit {
    pub const OK: i32 = 0;
    /// Unreadable file, schema violation, bad flag or expression syntax.
    pub const INPUT: i32 = 2;
    /// Polygon outside a center's domain, ties, infeasible distances,
    /// failed axiom checks.
    pub const DOMAIN: i32 = 3;
    /// Coordinate map undefined (all zero) or weights summing to zero.
    pub const UNDEFINED: i32 = 4;
    pub const NO_CONVERGENCE: i32 = 5;
}

/// Seed used when an expression is checked before evaluation.
pub const ADMIT_SEED: u64 = 0;
/// A minimal-center candidate passes when its mismatch, relative to the
/// polygon diameter, stays below this.
pub const MINIMAL_CENTER_TOL: f64 = 1e-6;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Schema { path: PathBuf, source: SchemaError },
    #[error("expression: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

pub fn core_exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidPolygon(_) | Error::InvalidMatrix(_) => exit::INPUT,
        Error::AllZero | Error::ZeroSum => exit::UNDEFINED,
        Error::NoConvergence { .. } => exit::NO_CONVERGENCE,
        _ => exit::DOMAIN,
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => core_exit_code(e),
            _ => exit::INPUT,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "polycenter", version, about = "Centers of polygons")]
pub struct Cli {
    /// Significant digits for every printed number.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u16).range(1..=17))]
    pub precision: u16,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Selection {
    /// Comma-separated names: centroid, perimeter, lamina, medoid,
    /// circumcenter, median, chebyshev.
    #[arg(long, value_delimiter = ',')]
    pub name: Vec<String>,
    /// A length-based center function, e.g. "d(n,1) + d(1,2)".
    #[arg(long)]
    pub expr: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coordinates, weights and point of one or more centers.
    Center {
        file: PathBuf,
        #[command(flatten)]
        selection: Selection,
        /// Iteration cap for the geometric median.
        #[arg(long, default_value_t = MEDIAN_MAX_ITER)]
        max_iter: usize,
    },
    /// Projective coordinates only.
    Coords {
        file: PathBuf,
        #[command(flatten)]
        selection: Selection,
    },
    /// Check the center-function axioms on seeded random n-gons.
    CheckAxioms {
        #[command(flatten)]
        selection: Selection,
        /// Vertex count of the sampled polygons.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Seed for the ChaCha sampler.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Regularity predicates and center-coincidence tests.
    Characterize {
        file: PathBuf,
        /// Coincidence tolerance.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Vertices from a distance-matrix document.
    Reconstruct { file: PathBuf },
    /// SVG of the outline with labelled center markers.
    Plot {
        file: PathBuf,
        /// Comma-separated center names to mark.
        #[arg(long, value_delimiter = ',')]
        centers: Vec<String>,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Iteration cap for the geometric median.
        #[arg(long, default_value_t = MEDIAN_MAX_ITER)]
        max_iter: usize,
    },
}

enum Target {
    Named(String),
    Expr(ParsedCenter),
}

impl Target {
    fn label(&self) -> &str {
        match self {
            Target::Named(s) => s,
            Target::Expr(pc) => &pc.source,
        }
    }
}

const IMPLICIT: [&str; 2] = ["median", "chebyshev"];

fn targets(sel: &Selection) -> Result<Vec<Target>, CliError> {
    if let Some(src) = &sel.expr {
        return Ok(vec![Target::Expr(parse(src)?)]);
    }
    names_to_targets(&sel.name)
}

fn names_to_targets(names: &[String]) -> Result<Vec<Target>, CliError> {
    if names.is_empty() {
        return Err(CliError::Usage("no center names given".into()));
    }
    names
        .iter()
        .map(|n| {
            if lookup(n).is_some() || IMPLICIT.contains(&n.as_str()) {
                Ok(Target::Named(n.clone()))
            } else {
                Err(CliError::Usage(format!("unknown center `{n}`")))
            }
        })
        .collect()
}

fn load(path: &Path) -> Result<PolygonDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })?;
    PolygonDocument::parse(&text).map_err(|source| CliError::Schema {
        path: path.into(),
        source,
    })
}

fn function_for(t: &Target, n: usize) -> Result<CenterFunction, Error> {
    match t {
        Target::Named(name) if IMPLICIT.contains(&name.as_str()) => Err(Error::DomainViolation {
            name: name.clone(),
            reason: "an optimization-defined center has no coordinate map".into(),
        }),
        Target::Named(name) => Ok(lookup(name).expect("validated name").function),
        Target::Expr(pc) => Ok(admit(pc, n, ADMIT_SEED)?.function.into()),
    }
}

fn function_record(name: &str, f: &CenterFunction, p: &Polygon) -> CenterRecord {
    let coords = match f.coordinate_map(p) {
        Ok(c) => c,
        Err(e) => return CenterRecord::failed(name, e),
    };
    let raw = coords.coords().to_vec();
    match normalize(&coords) {
        Ok(w) => CenterRecord {
            name: name.into(),
            coords: Some(raw),
            weights: Some(w.weights().to_vec()),
            outcome: Ok(w.combine(p)),
        },
        Err(e) => CenterRecord {
            name: name.into(),
            coords: Some(raw),
            weights: None,
            outcome: Err(e),
        },
    }
}

fn center_record(t: &Target, p: &Polygon, max_iter: usize) -> CenterRecord {
    let name = t.label();
    match name {
        "median" if matches!(t, Target::Named(_)) => match geometric_median(p, MEDIAN_TOL, max_iter) {
            Ok(m) => CenterRecord {
                name: name.into(),
                coords: None,
                weights: None,
                outcome: Ok(m.point),
            },
            Err(e) => CenterRecord::failed(name, e),
        },
        "chebyshev" if matches!(t, Target::Named(_)) => match chebyshev_center(p) {
            Ok(c) => CenterRecord {
                name: name.into(),
                coords: None,
                weights: None,
                outcome: Ok(c.center),
            },
            Err(e) => CenterRecord::failed(name, e),
        },
        // a tie leaves the medoid undefined even though the weights exist
        "medoid" if matches!(t, Target::Named(_)) => match medoid(p) {
            Ok(_) => function_record(name, &medoid_function().into(), p),
            Err(e) => CenterRecord::failed(name, e),
        },
        _ => match function_for(t, p.len()) {
            Ok(f) => function_record(name, &f, p),
            Err(e) => CenterRecord::failed(name, e),
        },
    }
}

/// Reports failing records on `err`; returns the exit code of the first.
fn report_failures(records: &[CenterRecord], err: &mut dyn Write) -> i32 {
    let mut code = exit::OK;
    for r in records {
        if let Err(e) = &r.outcome {
            let _ = writeln!(err, "error: {}: {e}", r.name);
            if code == exit::OK {
                code = core_exit_code(e);
            }
        }
    }
    code
}

fn print_json(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(v).expect("json values serialize");
    writeln!(out, "{text}").map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn sampler_for(domain: Domain, n: usize) -> Sampler {
    match domain.kind {
        polycenter::framework::DomainKind::Convex => Sampler::Convex { n },
        _ => Sampler::Generic { n },
    }
}

fn check_axioms(t: &Target, n: usize, trials: usize, seed: u64, prec: Precision) -> Result<(Value, bool), CliError> {
    if n < 3 {
        return Err(CliError::Usage(format!("--n must be at least 3, got {n}")));
    }
    if let Target::Named(name) = t {
        if IMPLICIT.contains(&name.as_str()) {
            let kind = if name == "median" {
                MinimalCenterKind::GeometricMedian
            } else {
                MinimalCenterKind::Chebyshev
            };
            let p = random_convex_polygon(&mut seeded(seed), n);
            let candidate = match kind {
                MinimalCenterKind::GeometricMedian => geometric_median(&p, MEDIAN_TOL, MEDIAN_MAX_ITER)?.point,
                MinimalCenterKind::Chebyshev => chebyshev_center(&p)?.center,
            };
            let score = check_minimal_center(kind, &p, candidate, trials, seed)?;
            let ok = score <= MINIMAL_CENTER_TOL;
            let v = json!({
                "name": name, "n": n, "trials": trials, "seed": seed,
                "equivariant": ok, "max_mismatch": prec.num(score), "polygon": prec.polygon(&p),
            });
            return Ok((v, ok));
        }
    }
    let f: CenterFunction = match t {
        Target::Named(name) => lookup(name).expect("validated name").function,
        Target::Expr(pc) => {
            if !pc.accepts(n) {
                return Err(Error::DomainViolation {
                    name: pc.source.clone(),
                    reason: format!("expression is not defined for n = {n}"),
                }
                .into());
            }
            pc.to_function().into()
        }
    };
    let report = verify_axioms(&f, sampler_for(f.domain(), n), trials, seed)?;
    let witness = match &report.witness {
        Some((axiom, w)) => json!({ "property": axiom.to_string(), "vertices": prec.polygon(w) }),
        None => Value::Null,
    };
    let v = json!({
        "name": t.label(), "n": n, "trials": report.trials, "seed": seed,
        "relabel_ok": report.relabel_ok, "motion_ok": report.motion_ok, "homogeneity_ok": report.homogeneity_ok,
        "estimated_degree": report.estimated_degree.map_or(Value::Null, |d| prec.num(d)),
        "max_violation": prec.num(report.max_violation),
        "witness": witness,
    });
    Ok((v, report.all_ok()))
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let prec = Precision(cli.precision as usize);
    match &cli.command {
        Command::Center {
            file,
            selection,
            max_iter,
        } => {
            let ts = targets(selection)?;
            let doc = load(file)?;
            let p = doc.polygon()?;
            let records: Vec<CenterRecord> = ts.iter().map(|t| center_record(t, &p, *max_iter)).collect();
            let v =
                json!({ "polygon": doc.name, "centers": records.iter().map(|r| r.to_value(prec)).collect::<Vec<_>>() });
            print_json(out, &v)?;
            Ok(report_failures(&records, err))
        }
        Command::Coords { file, selection } => {
            let ts = targets(selection)?;
            let doc = load(file)?;
            let p = doc.polygon()?;
            let mut records = Vec::new();
            let mut rows = Vec::new();
            for t in &ts {
                let res = function_for(t, p.len()).and_then(|f| f.coordinate_map(&p));
                let (coords, error) = match &res {
                    Ok(c) => (prec.nums(c.coords()), Value::Null),
                    Err(e) => (Value::Null, Value::String(e.to_string())),
                };
                rows.push(json!({ "name": t.label(), "coords": coords, "error": error }));
                if let Err(e) = res {
                    records.push(CenterRecord::failed(t.label(), e));
                }
            }
            print_json(out, &json!({ "polygon": doc.name, "coords": rows }))?;
            Ok(report_failures(&records, err))
        }
        Command::CheckAxioms {
            selection,
            n,
            trials,
            seed,
        } => {
            let ts = targets(selection)?;
            let mut reports = Vec::new();
            let mut failed = Vec::new();
            for t in &ts {
                let (v, ok) = check_axioms(t, *n, *trials, *seed, prec)?;
                if !ok {
                    failed.push(t.label().to_string());
                }
                reports.push(v);
            }
            print_json(out, &Value::Array(reports))?;
            for name in &failed {
                let _ = writeln!(err, "error: {name}: axiom check failed");
            }
            Ok(if failed.is_empty() { exit::OK } else { exit::DOMAIN })
        }
        Command::Characterize { file, tol } => {
            let doc = load(file)?;
            let p = doc.polygon()?;
            let mut tols = Tolerances::default();
            if let Some(t) = *tol {
                if !(t.is_finite() && t >= 0.0) {
                    return Err(CliError::Usage(format!("--tol must be a non-negative number, got {t}")));
                }
                tols.coincidence = t;
            }
            let r = characterize(&p, tols)?;
            let v = json!({
                "polygon": doc.name, "n": p.len(),
                "convex": r.convex, "nondegenerate": r.nondegenerate,
                "equiangular": r.equiangular, "equilateral": r.equilateral, "regular": r.regular,
                "f1_coincident": r.f1_coincident, "f2_coincident": r.f2_coincident, "f3_coincident": r.f3_coincident,
                "consistent": r.consistent_with_theorems, "inconsistencies": r.inconsistencies,
            });
            print_json(out, &v)?;
            Ok(exit::OK)
        }
        Command::Reconstruct { file } => {
            let doc = load(file)?;
            if !matches!(doc.geometry, Geometry::Distances(_)) {
                return Err(CliError::Usage(format!(
                    "{}: reconstruct needs a `distances` document",
                    file.display()
                )));
            }
            let p = doc.polygon()?.map(|v| Point2::new(prec.round(v.x), prec.round(v.y)));
            let text = PolygonDocument::from_polygon(doc.name, p).write();
            out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            })?;
            Ok(exit::OK)
        }
        Command::Plot {
            file,
            centers,
            output,
            max_iter,
        } => {
            let ts = if centers.is_empty() {
                Vec::new()
            } else {
                names_to_targets(centers)?
            };
            let doc = load(file)?;
            let p = doc.polygon()?;
            let records: Vec<CenterRecord> = ts.iter().map(|t| center_record(t, &p, *max_iter)).collect();
            let code = report_failures(&records, err);
            if code != exit::OK {
                return Ok(code);
            }
            let markers: Vec<(String, Point2)> = records
                .iter()
                .map(|r| (r.name.clone(), *r.outcome.as_ref().expect("checked")))
                .collect();
            let text = svg::render(&p, &markers);
            match output {
                Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?,
                None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })?,
            }
            Ok(exit::OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_for_core_errors() {
        assert_eq!(core_exit_code(&Error::AllZero), exit::UNDEFINED);
        assert_eq!(core_exit_code(&Error::ZeroSum), exit::UNDEFINED);
        assert_eq!(core_exit_code(&Error::Tie { vertices: vec![1, 2] }), exit::DOMAIN);
        assert_eq!(
            core_exit_code(&Error::InfeasibleDistances { residual: 1.0 }),
            exit::DOMAIN
        );
        assert_eq!(
            core_exit_code(&Error::NoConvergence {
                iterations: 1,
                residual: 1.0,
                best: Point2::ORIGIN
            }),
            exit::NO_CONVERGENCE
        );
        assert_eq!(core_exit_code(&Error::InvalidPolygon("x".into())), exit::INPUT);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
