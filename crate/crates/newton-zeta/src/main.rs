//! Command-line front door for the zeta-function pipelines.
//!
//! Results go to standard output, diagnostics to standard error. Exit codes:
//! 0 success, 2 bad input (parse or schema), 3 internal integrality failure,
//! 4 route mismatch in `powerdenom` (which would signal a bug, never data).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use newton_zeta::engine::{self, integral_weight, FaceReport, SubsetReport};
use newton_zeta::linalg::Int;
use newton_zeta::{
    mixed_volume, mixed_volume_oracle, parse_polynomial, EngineError, LatticePolytope,
    LocalZetaStratum, NewtonDiagram, NewtonPair, ResolutionStratum, StrataFile, VariableMap,
    ZetaFactorization, ZetaPair,
};

#[derive(Parser)]
#[command(
    name = "newton-zeta",
    version,
    about = "Monodromy zeta-functions of meromorphic germs from Newton diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Zeta-functions of P/Q from the Newton diagrams of numerator and denominator.
    Pair {
        /// Numerator polynomial, e.g. "x^3 - x*y".
        #[arg(long)]
        num: String,
        /// Denominator polynomial.
        #[arg(long)]
        den: String,
        /// Comma-separated variable names; the order fixes the coordinates.
        #[arg(long)]
        vars: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Include the per-subset covector tables.
        #[arg(long)]
        trace: bool,
    },
    /// Zeta-functions of P/axis^d via the reduced face walk, cross-checked
    /// against the Newton-pair route.
    Powerdenom {
        /// Numerator polynomial.
        #[arg(long)]
        num: String,
        /// Denominator exponent d >= 1.
        #[arg(long)]
        degree: u64,
        /// Name of the distinguished variable.
        #[arg(long)]
        axis: String,
        /// Comma-separated variable names; inferred from the numerator (in
        /// order of first appearance, axis appended if missing) when omitted.
        #[arg(long)]
        vars: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        trace: bool,
    },
    /// A'Campo product from a resolution strata file
    /// {"strata":[{"k":..,"l":..,"chi":..},..]}.
    Acampo {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Partial-resolution product from a local-zeta strata file
    /// {"strata":[{"zeta0":..,"zetaInf":..,"chi":..},..]}.
    Partial {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Mixed volume of a polytope tuple {"bodies":[[[..],..],..]}, printed
    /// next to its inclusion-exclusion oracle value.
    Mixvol {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

enum CliError {
    Input(String),
    Internal(String),
    RouteMismatch(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
            CliError::RouteMismatch(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Internal(m) | CliError::RouteMismatch(m) => m,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::RouteMismatch { .. } => CliError::RouteMismatch(e.to_string()),
            EngineError::Geometry(_) => CliError::Input(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

#[derive(Serialize)]
struct ResultDoc {
    zeta0: ZetaFactorization,
    #[serde(rename = "zetaInf")]
    zeta_inf: ZetaFactorization,
    assumptions: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<serde_json::Value>,
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Pair {
            num,
            den,
            vars,
            json,
            trace,
        } => {
            let vars = parse_vars(&vars)?;
            let p = parse_polynomial(&num, &vars)
                .map_err(|e| CliError::Input(format!("numerator: {e}")))?;
            let q = parse_polynomial(&den, &vars)
                .map_err(|e| CliError::Input(format!("denominator: {e}")))?;
            let pair =
                NewtonPair::from_supports(p, q).map_err(|e| CliError::Input(e.to_string()))?;
            let (result, reports) = engine::newton_pair_report(&pair)?;
            let trace_value = trace.then(|| subset_trace_json(&reports)).transpose()?;
            if json {
                print_json(&ResultDoc {
                    zeta0: result.zeta0.clone(),
                    zeta_inf: result.zeta_inf.clone(),
                    assumptions: vec!["newton-nondegenerate"],
                    trace: trace_value,
                });
            } else {
                if trace {
                    print_subset_trace(&reports, &vars)?;
                }
                print_pair(&result);
            }
            Ok(())
        }
        Command::Powerdenom {
            num,
            degree,
            axis,
            vars,
            json,
            trace,
        } => {
            if degree == 0 {
                return Err(CliError::Input("degree must be at least 1".into()));
            }
            let vars = match vars {
                Some(v) => parse_vars(&v)?,
                None => infer_vars(&num, &axis)?,
            };
            let Some(axis_index) = vars.index_of(&axis) else {
                return Err(CliError::Input(format!(
                    "axis variable `{axis}` is not among the variables"
                )));
            };
            let p = parse_polynomial(&num, &vars)
                .map_err(|e| CliError::Input(format!("numerator: {e}")))?;
            let gamma = NewtonDiagram::new(p);
            let (result, reports) = engine::power_denominator_report(&gamma, degree, axis_index)?;
            // The reduced walk must agree with the Newton-pair route.
            let checked = engine::zeta_power_denominator_checked(&gamma, degree, axis_index)?;
            debug_assert_eq!(checked, result);
            let trace_value = trace.then(|| face_trace_json(&reports)).transpose()?;
            if json {
                print_json(&ResultDoc {
                    zeta0: result.zeta0.clone(),
                    zeta_inf: result.zeta_inf.clone(),
                    assumptions: vec!["newton-nondegenerate"],
                    trace: trace_value,
                });
            } else {
                if trace {
                    print_face_trace(&reports, &vars)?;
                }
                print_pair(&result);
            }
            Ok(())
        }
        Command::Acampo { file, json } => {
            let data: StrataFile<ResolutionStratum> = read_json(&file)?;
            let result = engine::zeta_acampo_pair(&data.strata);
            emit_pair(&result, json, Vec::new());
            Ok(())
        }
        Command::Partial { file, json } => {
            let data: StrataFile<LocalZetaStratum> = read_json(&file)?;
            let result = engine::zeta_partial_resolution(&data.strata);
            emit_pair(&result, json, Vec::new());
            Ok(())
        }
        Command::Mixvol { file, json } => {
            let data: MixvolFile = read_json(&file)?;
            if data.bodies.is_empty() {
                return Err(CliError::Input("at least one body is required".into()));
            }
            let dim = data.bodies[0]
                .first()
                .map(|p| p.len())
                .ok_or_else(|| CliError::Input("bodies must be non-empty point lists".into()))?;
            let polytopes: Vec<LatticePolytope> = data
                .bodies
                .iter()
                .map(|pts| {
                    LatticePolytope::new(
                        dim,
                        pts.iter()
                            .map(|p| p.iter().map(|&c| Int::from(c)).collect()),
                    )
                    .map_err(|e| CliError::Input(e.to_string()))
                })
                .collect::<Result<_, _>>()?;
            let refs: Vec<&LatticePolytope> = polytopes.iter().collect();
            let value = mixed_volume(&refs).map_err(|e| CliError::Input(e.to_string()))?;
            let oracle = mixed_volume_oracle(&refs).map_err(|e| CliError::Input(e.to_string()))?;
            if json {
                print_json(&serde_json::json!({
                    "mixedVolume": format_rat(&value),
                    "oracle": format_rat(&oracle),
                }));
            } else {
                println!("{} (oracle: {})", format_rat(&value), format_rat(&oracle));
            }
            Ok(())
        }
    }
}

fn parse_vars(arg: &str) -> Result<VariableMap, CliError> {
    let names: Vec<&str> = arg.split(',').map(str::trim).collect();
    VariableMap::new(names).map_err(|e| CliError::Input(e.to_string()))
}

/// First-appearance scan of identifiers in the numerator; the distinguished
/// axis is appended when the numerator never mentions it. Safe because the
/// axis is named and the result is invariant under permuting the rest.
fn infer_vars(text: &str, axis: &str) -> Result<VariableMap, CliError> {
    let mut names: Vec<String> = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let name = &text[start..i];
            if !names.iter().any(|n| n == name) {
                names.push(name.to_string());
            }
        } else {
            i += 1;
        }
    }
    if !names.iter().any(|n| n == axis) {
        names.push(axis.to_string());
    }
    VariableMap::new(names).map_err(|e| CliError::Input(e.to_string()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[derive(serde::Deserialize)]
struct MixvolFile {
    bodies: Vec<Vec<Vec<i64>>>,
}

fn print_pair(pair: &ZetaPair) {
    println!("zeta0 = {}", pair.zeta0);
    println!("zetaInf = {}", pair.zeta_inf);
}

fn emit_pair(pair: &ZetaPair, json: bool, assumptions: Vec<&'static str>) {
    if json {
        print_json(&ResultDoc {
            zeta0: pair.zeta0.clone(),
            zeta_inf: pair.zeta_inf.clone(),
            assumptions,
            trace: None,
        });
    } else {
        print_pair(pair);
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serialization cannot fail")
    );
}

fn format_rat(r: &newton_zeta::linalg::Rat) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn small(x: &Int) -> Result<i64, CliError> {
    i64::try_from(x).map_err(|_| CliError::Internal("trace value exceeds i64".into()))
}

fn subset_label(indices: &[usize], vars: &VariableMap) -> String {
    let names: Vec<&str> = indices.iter().map(|&i| vars.names()[i].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

fn covector_label(v: &[Int], indices: &[usize]) -> String {
    let entries: Vec<String> = indices.iter().map(|&i| v[i].to_string()).collect();
    format!("({})", entries.join(","))
}

fn side_of(m1: &Int, m2: &Int) -> &'static str {
    match m1.cmp(m2) {
        std::cmp::Ordering::Greater => "zero",
        std::cmp::Ordering::Less => "infinity",
        std::cmp::Ordering::Equal => "none",
    }
}

fn print_subset_trace(reports: &[SubsetReport], vars: &VariableMap) -> Result<(), CliError> {
    for report in reports {
        let label = subset_label(report.subset.indices(), vars);
        if !report.present {
            println!("subset {label}: a restriction is absent, contributes 1");
            continue;
        }
        if report.covectors.is_empty() {
            println!("subset {label}: no essential covectors");
            continue;
        }
        println!("subset {label}:");
        for c in &report.covectors {
            let weight = integral_weight(&c.covector, report.subset.len(), &c.v_a)?;
            println!(
                "  a={}  m1={}  m2={}  weight={}  side={}",
                covector_label(&c.covector, report.subset.indices()),
                c.m1,
                c.m2,
                weight,
                side_of(&c.m1, &c.m2),
            );
        }
    }
    Ok(())
}

fn subset_trace_json(reports: &[SubsetReport]) -> Result<serde_json::Value, CliError> {
    let mut out = Vec::new();
    for report in reports {
        let mut covectors = Vec::new();
        for c in &report.covectors {
            let weight = integral_weight(&c.covector, report.subset.len(), &c.v_a)?;
            covectors.push(serde_json::json!({
                "a": c.covector.iter().map(small).collect::<Result<Vec<_>, _>>()?,
                "m1": small(&c.m1)?,
                "m2": small(&c.m2)?,
                "weight": small(&weight)?,
                "side": side_of(&c.m1, &c.m2),
            }));
        }
        out.push(serde_json::json!({
            "subset": report.subset.indices(),
            "present": report.present,
            "covectors": covectors,
        }));
    }
    Ok(serde_json::Value::Array(out))
}

fn print_face_trace(reports: &[FaceReport], vars: &VariableMap) -> Result<(), CliError> {
    for report in reports {
        let label = subset_label(report.subset.indices(), vars);
        if !report.present {
            println!("subset {label}: restriction absent, contributes 1");
            continue;
        }
        if report.faces.is_empty() {
            println!("subset {label}: no compact faces of full dimension");
            continue;
        }
        println!("subset {label}:");
        for f in &report.faces {
            println!(
                "  a={}  m={}  d*a0={}  weight={}  side={}",
                covector_label(&f.covector, report.subset.indices()),
                f.m,
                f.d_a0,
                f.weight,
                side_of(&f.m, &f.d_a0),
            );
        }
    }
    Ok(())
}

fn face_trace_json(reports: &[FaceReport]) -> Result<serde_json::Value, CliError> {
    let mut out = Vec::new();
    for report in reports {
        let mut faces = Vec::new();
        for f in &report.faces {
            faces.push(serde_json::json!({
                "a": f.covector.iter().map(small).collect::<Result<Vec<_>, _>>()?,
                "m": small(&f.m)?,
                "dA0": small(&f.d_a0)?,
                "weight": small(&f.weight)?,
                "side": side_of(&f.m, &f.d_a0),
            }));
        }
        out.push(serde_json::json!({
            "subset": report.subset.indices(),
            "present": report.present,
            "faces": faces,
        }));
    }
    Ok(serde_json::Value::Array(out))
}
