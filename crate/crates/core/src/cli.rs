//! Command-line front end. `run` is the whole program behind `main`, taking
//! argument and stream handles so tests can drive it in-process.
//!
//! Exit codes: 0 success (including an unbounded LP), 1 empty polyhedron,
//! 2 no vertex, 3 input not full-dimensional, 4 parse/input/usage errors,
//! 5 internal invariant violations.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::lp::{maximize_with_progress, LpResult};
use crate::model::VrRep;
use crate::numerics::{Rat, Scalar, TolerancePolicy, F64};
use crate::oracle::{oracle_facets, oracle_rays, oracle_vertices};
use crate::transforms::{h_to_vr_with_progress, vr_to_h, HToVrOutcome};
use crate::vertex_search::{SearchProgress, VertexSearchConfig};
use crate::{io, Error};

#[derive(Parser, Debug)]
#[command(
    name = "polylrs",
    version,
    about = "Vertex/ray enumeration, facet recovery, and LP for pointed polyhedra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert an inequality file (hrep) to vertices and rays (vrep).
    Htovr {
        #[command(flatten)]
        common: CommonArgs,
        /// Also write the `pairs` section of (origin | direction) lines.
        #[arg(long)]
        with_origins: bool,
    },
    /// Convert a generator file (vrep) to a facet system (hrep).
    Vrtoh {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Maximize an objective over an inequality file.
    Lp {
        #[command(flatten)]
        common: CommonArgs,
        /// Objective coefficients, whitespace-separated, one per coordinate.
        #[arg(long)]
        objective: String,
    },
    /// Run a brute-force reference oracle (small instances only).
    Oracle {
        /// Which oracle to run.
        #[arg(value_enum)]
        kind: OracleKind,
        /// Input file: hrep for vertices/rays, vrep for facets.
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Input file.
    file: PathBuf,
    /// Arithmetic mode.
    #[arg(long, value_enum, default_value_t = Mode::Rational)]
    mode: Mode,
    /// Seed for the randomized vertex-probe phase (falls back to the
    /// POLYLRS_SEED environment variable, then 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Skip the randomized probes and scan row subsets deterministically.
    #[arg(long)]
    deterministic: bool,
    /// Zero-snap threshold; float mode only.
    #[arg(long, allow_negative_numbers = true)]
    tol_zero: Option<f64>,
    /// Feasibility slack; float mode only.
    #[arg(long, allow_negative_numbers = true)]
    tol_feas: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Rational,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Vertices,
    Rays,
    Facets,
}

/// Runs the tool on the given arguments, writing to the given streams, and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    4
                }
            };
        }
    };
    match cli.command {
        Command::Htovr {
            common,
            with_origins,
        } => match build_policy(&common) {
            Ok(policy) => run_htovr(&common, with_origins, policy, out, err),
            Err(msg) => usage_fail(&msg, err),
        },
        Command::Vrtoh { common } => match build_policy(&common) {
            Ok(policy) => run_vrtoh(&common, policy, out, err),
            Err(msg) => usage_fail(&msg, err),
        },
        Command::Lp { common, objective } => match build_policy(&common) {
            Ok(policy) => run_lp(&common, &objective, policy, out, err),
            Err(msg) => usage_fail(&msg, err),
        },
        Command::Oracle { kind, file } => run_oracle(kind, &file, out, err),
    }
}

enum PolicyChoice {
    Rational(TolerancePolicy<Rat>),
    Float(TolerancePolicy<F64>),
}

fn build_policy(common: &CommonArgs) -> Result<PolicyChoice, String> {
    match common.mode {
        Mode::Rational => {
            if common.tol_zero.is_some() || common.tol_feas.is_some() {
                return Err("tolerance flags require --mode float".into());
            }
            Ok(PolicyChoice::Rational(TolerancePolicy::exact()))
        }
        Mode::Float => {
            let defaults = TolerancePolicy::float_defaults();
            let pick = |flag: Option<f64>, fallback: &F64, name: &str| -> Result<F64, String> {
                match flag {
                    None => Ok(*fallback),
                    Some(v) if v.is_finite() && v >= 0.0 => Ok(F64::new(v)),
                    Some(v) => Err(format!(
                        "{name} must be a finite nonnegative number, got {v}"
                    )),
                }
            };
            let zero = pick(common.tol_zero, defaults.zero_snap(), "--tol-zero")?;
            let feas = pick(common.tol_feas, defaults.feas_slack(), "--tol-feas")?;
            Ok(PolicyChoice::Float(TolerancePolicy::new(zero, feas)))
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, String> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("POLYLRS_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| format!("POLYLRS_SEED must be an unsigned integer, got `{text}`")),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(format!("POLYLRS_SEED is not readable: {e}")),
    }
}

fn search_config(common: &CommonArgs) -> Result<VertexSearchConfig, String> {
    Ok(VertexSearchConfig {
        rng_seed: resolve_seed(common.seed)?,
        deterministic_only: common.deterministic,
        ..VertexSearchConfig::default()
    })
}

fn read_input(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::DuplicateVertex { .. }
        | Error::EmptyInput
        | Error::ZeroRay
        | Error::ZeroInequality => 4,
        Error::NotFullDimensional => 3,
        Error::NoVertex => 2,
        Error::EmptyPolyhedron => 1,
        Error::SingularBlock
        | Error::ZeroPivotElement { .. }
        | Error::NonUniqueLexMin
        | Error::InvariantViolation(_) => 5,
    }
}

fn fail(e: &Error, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "{e}");
    exit_code_for(e)
}

fn usage_fail(msg: &str, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "{msg}");
    4
}

fn progress_reporter<'a>(err: &'a mut dyn Write) -> impl FnMut(SearchProgress) + 'a {
    |p| {
        let _ = match p {
            SearchProgress::SystematicScanStarted => {
                writeln!(err, "Systematic vertex search begins. This may take time.")
            }
            SearchProgress::VertexFound => writeln!(err, "vertex found"),
        };
    }
}

fn run_htovr(
    common: &CommonArgs,
    with_origins: bool,
    policy: PolicyChoice,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    fn body<S: Scalar>(
        common: &CommonArgs,
        with_origins: bool,
        policy: TolerancePolicy<S>,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> i32 {
        let text = match read_input(&common.file) {
            Ok(t) => t,
            Err(msg) => return usage_fail(&msg, err),
        };
        let p = match io::parse_hrep::<S>(&text) {
            Ok(p) => p,
            Err(e) => return fail(&e, err),
        };
        let cfg = match search_config(common) {
            Ok(c) => c,
            Err(msg) => return usage_fail(&msg, err),
        };
        let outcome = {
            let mut progress = progress_reporter(err);
            h_to_vr_with_progress(&p, &cfg, policy, &mut progress)
        };
        match outcome {
            Ok(HToVrOutcome::Representation(rep)) => {
                let _ = out.write_all(io::serialize_vrep(&rep, with_origins).as_bytes());
                0
            }
            Ok(HToVrOutcome::NoVertex) => fail(&Error::NoVertex, err),
            Ok(HToVrOutcome::Empty) => fail(&Error::EmptyPolyhedron, err),
            Err(e) => fail(&e, err),
        }
    }
    match policy {
        PolicyChoice::Rational(p) => body::<Rat>(common, with_origins, p, out, err),
        PolicyChoice::Float(p) => body::<F64>(common, with_origins, p, out, err),
    }
}

fn run_vrtoh(
    common: &CommonArgs,
    policy: PolicyChoice,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    fn body<S: Scalar>(
        common: &CommonArgs,
        policy: TolerancePolicy<S>,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> i32 {
        let text = match read_input(&common.file) {
            Ok(t) => t,
            Err(msg) => return usage_fail(&msg, err),
        };
        let vr = match io::parse_vrep::<S>(&text) {
            Ok(v) => v,
            Err(e) => return fail(&e, err),
        };
        let cfg = match search_config(common) {
            Ok(c) => c,
            Err(msg) => return usage_fail(&msg, err),
        };
        match vr_to_h(&vr.vertices, &vr.rays, &cfg, policy) {
            Ok(h) => {
                let _ = out.write_all(io::serialize_hrep(&h).as_bytes());
                0
            }
            Err(e) => fail(&e, err),
        }
    }
    match policy {
        PolicyChoice::Rational(p) => body::<Rat>(common, p, out, err),
        PolicyChoice::Float(p) => body::<F64>(common, p, out, err),
    }
}

fn run_lp(
    common: &CommonArgs,
    objective: &str,
    policy: PolicyChoice,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    fn body<S: Scalar>(
        common: &CommonArgs,
        objective: &str,
        policy: TolerancePolicy<S>,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> i32 {
        let text = match read_input(&common.file) {
            Ok(t) => t,
            Err(msg) => return usage_fail(&msg, err),
        };
        let p = match io::parse_hrep::<S>(&text) {
            Ok(p) => p,
            Err(e) => return fail(&e, err),
        };
        let mut c = Vec::new();
        for tok in objective.split_whitespace() {
            match S::parse_number(tok) {
                Ok(v) => c.push(v),
                Err(msg) => return usage_fail(&format!("bad objective: {msg}"), err),
            }
        }
        if c.len() != p.d() {
            return usage_fail(
                &format!("objective needs {} coefficients, got {}", p.d(), c.len()),
                err,
            );
        }
        let cfg = match search_config(common) {
            Ok(c) => c,
            Err(msg) => return usage_fail(&msg, err),
        };
        let result = {
            let mut progress = progress_reporter(err);
            maximize_with_progress(&c, &p, &cfg, policy, &mut progress)
        };
        match result {
            Ok(LpResult::Optimal { x, value }) => {
                let coords: Vec<String> = x.iter().map(Scalar::render).collect();
                let _ = writeln!(out, "optimal");
                let _ = writeln!(out, "x: {}", coords.join(" "));
                let _ = writeln!(out, "max: {}", value.render());
                0
            }
            Ok(LpResult::Unbounded) => {
                let _ = writeln!(err, "The problem is unbounded");
                let _ = writeln!(out, "unbounded");
                0
            }
            Err(e) => fail(&e, err),
        }
    }
    match policy {
        PolicyChoice::Rational(p) => body::<Rat>(common, objective, p, out, err),
        PolicyChoice::Float(p) => body::<F64>(common, objective, p, out, err),
    }
}

const ORACLE_LIMIT_MSG: &str = "oracle inputs are limited to 12 rows/generators and dimension 4";

fn run_oracle(kind: OracleKind, file: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match read_input(file) {
        Ok(t) => t,
        Err(msg) => return usage_fail(&msg, err),
    };
    match kind {
        OracleKind::Vertices | OracleKind::Rays => {
            let p = match io::parse_hrep::<Rat>(&text) {
                Ok(p) => p,
                Err(e) => return fail(&e, err),
            };
            if p.m() > 12 || p.d() > 4 {
                return usage_fail(ORACLE_LIMIT_MSG, err);
            }
            let items = match kind {
                OracleKind::Vertices => oracle_vertices(&p),
                _ => oracle_rays(&p),
            };
            for item in items {
                let coords: Vec<String> = item.iter().map(Scalar::render).collect();
                let _ = writeln!(out, "{}", coords.join(" "));
            }
            0
        }
        OracleKind::Facets => {
            let vr: VrRep<Rat> = match io::parse_vrep(&text) {
                Ok(v) => v,
                Err(e) => return fail(&e, err),
            };
            if vr.vertices.is_empty() {
                return fail(&Error::EmptyInput, err);
            }
            let d = vr.vertices[0].len();
            if vr.vertices.len() + vr.rays.len() > 12 || d > 4 {
                return usage_fail(ORACLE_LIMIT_MSG, err);
            }
            for (h, beta) in oracle_facets(&vr.vertices, &vr.rays) {
                let mut parts: Vec<String> = h.iter().map(Scalar::render).collect();
                parts.push(beta.render());
                let _ = writeln!(out, "{}", parts.join(" "));
            }
            0
        }
    }
}
