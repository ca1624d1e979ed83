//! Command-line surface: iteration-parameter computation, spectrum dumps,
//! solver runs and benchmark tables, all emitted as CSV/JSON/markdown
//! artifacts.
//!
//! Exit codes: 0 success, 1 i/o failure, 2 invalid spectrum region,
//! 3 no solver converged, 4 configuration error.

mod artifacts;
mod config;
mod run;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gci_core::geometry::{
    convex_hull, optimal_circle, segment_optimal_circle, EnclosingCircle, SpectrumRegion,
};
use gci_core::schedule::schedule_for_region;
use gci_core::spectral::{containment_check, dense_eigenvalues, eigenvalues_csv, low_frequency_region};
use gci_core::vsie::VsieOperator;
use serde::Serialize;

use artifacts::{bench_csv, bench_table_markdown, to_json, write_file};
use config::{
    parse_complex, parse_points, BenchExperiment, ProfileConfig, RegionConfig, SolveExperiment,
    SpectrumExperiment,
};
use run::{map_core, run_case, BenchRow};

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Region(String),
    AllFailed(String),
    Config(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Region(_) => 2,
            CliError::AllFailed(_) => 3,
            CliError::Config(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Region(m) => write!(f, "invalid spectrum region: {m}"),
            CliError::AllFailed(m) => write!(f, "no solver converged: {m}"),
            CliError::Config(m) => write!(f, "configuration error: {m}"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "gci",
    about = "Stationary iteration methods with optimal complex parameters, benchmarked on volume-integral-equation scattering problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute optimal iteration parameters for a spectrum region.
    Params(ParamsArgs),
    /// Assemble a problem, compute its eigenvalues and containment report.
    Spectrum(RunArgs),
    /// Run the configured solvers on one problem.
    Solve(RunArgs),
    /// Run a benchmark matrix of cases x solvers.
    Bench(RunArgs),
}

#[derive(Args)]
struct ParamsArgs {
    /// Spectrum on a segment: "re,im:re,im".
    #[arg(long)]
    segment: Option<String>,
    /// Spectrum in a circle: "re,im:radius".
    #[arg(long)]
    circle: Option<String>,
    /// Spectrum in a triangle: "re,im:re,im:re,im".
    #[arg(long)]
    triangle: Option<String>,
    /// Spectrum point cloud: "re,im;re,im;...".
    #[arg(long)]
    points: Option<String>,
    /// Layer length (number of parameters).
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Directory for params.json (stdout only when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    /// JSON configuration file; built-in defaults when absent.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory for artifacts.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Override: cells per axis.
    #[arg(long)]
    n_cells: Option<usize>,
    /// Override: relative residual target.
    #[arg(long)]
    tol: Option<f64>,
    /// Override: matvec budget.
    #[arg(long)]
    max_matvecs: Option<usize>,
    /// Override: body radius in wavelengths.
    #[arg(long)]
    radius: Option<f64>,
    /// Override: homogeneous-ball permittivity "re,im".
    #[arg(long)]
    ball_eps: Option<String>,
    /// Override: containment band (spectrum command).
    #[arg(long)]
    band: Option<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Params(args) => cmd_params(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load_config<T: serde::de::DeserializeOwned + Default>(
    path: &Option<PathBuf>,
) -> Result<T, CliError> {
    match path {
        None => Ok(T::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Io(e.to_string()))?;
            serde_json::from_str(&text).map_err(|e| CliError::Config(e.to_string()))
        }
    }
}

// ---------------------------------------------------------------- params

#[derive(Serialize)]
struct ParamsRequest {
    region: RegionConfig,
    n: usize,
}

#[derive(Serialize)]
struct TauEntry {
    tau: [f64; 2],
    mu: [f64; 2],
}

#[derive(Serialize)]
struct ParamsArtifact {
    config: ParamsRequest,
    mu0: [f64; 2],
    radius: f64,
    alpha0: f64,
    rho0: f64,
    provenance: String,
    rho_bound: Option<f64>,
    schedule: Vec<TauEntry>,
}

fn params_region(args: &ParamsArgs) -> Result<SpectrumRegion, CliError> {
    let picked = [
        args.segment.is_some(),
        args.circle.is_some(),
        args.triangle.is_some(),
        args.points.is_some(),
    ]
    .iter()
    .filter(|&&x| x)
    .count();
    if picked != 1 {
        return Err(CliError::Config(
            "exactly one of --segment, --circle, --triangle, --points is required".into(),
        ));
    }
    if let Some(text) = &args.segment {
        let pts = parse_points(text, ':')?;
        if pts.len() != 2 {
            return Err(CliError::Config("segment needs two points".into()));
        }
        return Ok(SpectrumRegion::Segment { a: pts[0], b: pts[1] });
    }
    if let Some(text) = &args.circle {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 2 {
            return Err(CliError::Config("circle spec is 're,im:radius'".into()));
        }
        let center = parse_complex(parts[0])?;
        let radius: f64 = parts[1]
            .trim()
            .parse()
            .map_err(|_| CliError::Config("bad circle radius".into()))?;
        return Ok(SpectrumRegion::Circle { center, radius });
    }
    if let Some(text) = &args.triangle {
        let pts = parse_points(text, ':')?;
        if pts.len() != 3 {
            return Err(CliError::Config("triangle needs three points".into()));
        }
        return Ok(SpectrumRegion::Triangle {
            vertices: [pts[0], pts[1], pts[2]],
        });
    }
    let pts = parse_points(args.points.as_ref().unwrap(), ';')?;
    Ok(SpectrumRegion::Polygon { vertices: pts })
}

/// Enclosing circle of a region: directly for circles, via the optimal-circle
/// search for everything else.
fn region_circle(region: &SpectrumRegion) -> Result<EnclosingCircle, CliError> {
    match region {
        SpectrumRegion::Point(p) => EnclosingCircle::new(*p, 0.0).map_err(map_core),
        SpectrumRegion::Segment { a, b } => segment_optimal_circle(*a, *b).map_err(map_core),
        SpectrumRegion::Circle { center, radius } => {
            EnclosingCircle::new(*center, *radius).map_err(map_core)
        }
        SpectrumRegion::Triangle { vertices } => {
            let hull = convex_hull(&vertices[..]).map_err(map_core)?;
            optimal_circle(&hull).map_err(map_core)
        }
        SpectrumRegion::Rectangle { .. } => Err(CliError::Config(
            "rectangle regions are not supported by params".into(),
        )),
        SpectrumRegion::Polygon { vertices } => {
            let hull = convex_hull(vertices).map_err(map_core)?;
            optimal_circle(&hull).map_err(map_core)
        }
    }
}

fn cmd_params(args: ParamsArgs) -> Result<(), CliError> {
    let region = params_region(&args)?;
    if args.n == 0 || args.n > config::MAX_GCI_LAYER {
        return Err(CliError::Config(format!(
            "layer length must be in 1..={}",
            config::MAX_GCI_LAYER
        )));
    }
    let circle = region_circle(&region)?;
    let schedule = schedule_for_region(&region, args.n).map_err(map_core)?;
    let artifact = ParamsArtifact {
        config: ParamsRequest {
            region: RegionConfig::from_region(&region),
            n: args.n,
        },
        mu0: [circle.center.re, circle.center.im],
        radius: circle.radius,
        alpha0: circle.alpha0,
        rho0: circle.rho0,
        provenance: format!("{:?}", schedule.provenance),
        rho_bound: schedule.rho_bound,
        schedule: schedule
            .taus
            .iter()
            .zip(&schedule.mus)
            .map(|(t, m)| TauEntry {
                tau: [t.re, t.im],
                mu: [m.re, m.im],
            })
            .collect(),
    };
    let body = to_json(&artifact);
    print!("{body}");
    if let Some(dir) = &args.out {
        write_file(dir, "params.json", &body)?;
    }
    Ok(())
}

// -------------------------------------------------------------- spectrum

#[derive(Serialize)]
struct SpectrumArtifact {
    config: SpectrumExperiment,
    region: RegionConfig,
    band: f64,
    n_eigenvalues: usize,
    containment_fraction: f64,
    n_outliers: usize,
    outliers: Vec<[f64; 2]>,
}

fn apply_problem_overrides(
    problem: &mut config::ProblemConfig,
    args: &RunArgs,
) -> Result<(), CliError> {
    if let Some(n) = args.n_cells {
        problem.n_cells = n;
    }
    if let Some(r) = args.radius {
        problem.radius_wavelengths = r;
    }
    if let Some(text) = &args.ball_eps {
        let eps = parse_complex(text)?;
        problem.profile = ProfileConfig::HomogeneousBall {
            eps: [eps.re, eps.im],
        };
    }
    Ok(())
}

fn cmd_spectrum(args: RunArgs) -> Result<(), CliError> {
    let mut exp: SpectrumExperiment = load_config(&args.config)?;
    apply_problem_overrides(&mut exp.problem, &args)?;
    if let Some(b) = args.band {
        exp.band = Some(b);
    }
    exp.validate()?;

    let profile = exp.problem.profile.to_profile(exp.problem.radius_wavelengths);
    let op = VsieOperator::new(&profile, exp.problem.n_cells, exp.problem.k0).map_err(map_core)?;
    let eigs = dense_eigenvalues(&op.dense()).map_err(map_core)?;

    let region = match &exp.region {
        Some(r) => r.to_region(),
        None => {
            let poly = low_frequency_region(&profile).map_err(map_core)?;
            SpectrumRegion::from_polygon(&poly)
        }
    };
    let band = exp.band.unwrap_or(exp.band_factor * region.diameter());
    let report = containment_check(&eigs, &region, band);

    write_file(&args.out, "spectrum.csv", &eigenvalues_csv(&eigs))?;
    let artifact = SpectrumArtifact {
        region: RegionConfig::from_region(&region),
        band,
        n_eigenvalues: report.eigenvalues.len(),
        containment_fraction: report.containment_fraction,
        n_outliers: report.outliers.len(),
        outliers: report.outliers.iter().map(|z| [z.re, z.im]).collect(),
        config: exp,
    };
    write_file(&args.out, "report.json", &to_json(&artifact))?;
    println!(
        "{} eigenvalues, containment {:.4} (band {:.6}), {} outliers",
        artifact.n_eigenvalues, artifact.containment_fraction, band, artifact.n_outliers
    );
    Ok(())
}

// ----------------------------------------------------------- solve/bench

#[derive(Serialize)]
struct SolveArtifact {
    config: SolveExperiment,
    region: RegionConfig,
    rows: Vec<BenchRow>,
}

fn print_rows(rows: &[BenchRow]) {
    for row in rows {
        let status = if row.converged { "ok" } else { "FAILED" };
        println!(
            "{:<28} {:<12} L={:<7} delta={:.3e} {}",
            row.case, row.solver, row.l, row.delta, status
        );
    }
}

fn cmd_solve(args: RunArgs) -> Result<(), CliError> {
    let mut exp: SolveExperiment = load_config(&args.config)?;
    apply_problem_overrides(&mut exp.problem, &args)?;
    if let Some(t) = args.tol {
        exp.tol = t;
    }
    if let Some(m) = args.max_matvecs {
        exp.max_matvecs = m;
    }

    let outcome = run_case("problem", &exp)?;
    print_rows(&outcome.rows);
    write_file(&args.out, "bench.csv", &bench_csv(&outcome.rows))?;
    let artifact = SolveArtifact {
        config: exp,
        region: RegionConfig::from_region(&outcome.region),
        rows: outcome.rows,
    };
    write_file(&args.out, "report.json", &to_json(&artifact))?;
    if artifact.rows.iter().all(|r| !r.converged) {
        return Err(CliError::AllFailed("every configured solver failed".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct BenchArtifact {
    config: BenchExperiment,
    rows: Vec<BenchRow>,
}

fn cmd_bench(args: RunArgs) -> Result<(), CliError> {
    let mut exp: BenchExperiment = load_config(&args.config)?;
    if let Some(n) = args.n_cells {
        exp.n_cells = n;
    }
    if let Some(t) = args.tol {
        exp.tol = t;
    }
    if let Some(m) = args.max_matvecs {
        exp.max_matvecs = m;
    }
    exp.validate()?;

    let mut rows: Vec<BenchRow> = Vec::new();
    for case in &exp.cases {
        let sub = exp.solve_experiment(case);
        match run_case(&case.label, &sub) {
            Ok(outcome) => rows.extend(outcome.rows),
            Err(e) => {
                // Partial results: the failed cell is recorded per solver and
                // the remaining cases still run.
                for solver in &exp.solvers {
                    rows.push(BenchRow {
                        case: case.label.clone(),
                        solver: solver.label(),
                        n: solver.n(),
                        l: 0,
                        converged: false,
                        delta: f64::NAN,
                        rho_bound: None,
                        wall_time: 0.0,
                        t_a_est: 0.0,
                        t_0_est: 0.0,
                        m_iter_est: 0.0,
                        t_est: 0.0,
                        failure: Some(e.to_string()),
                    });
                }
            }
        }
    }

    print_rows(&rows);
    let case_labels: Vec<String> = exp.cases.iter().map(|c| c.label.clone()).collect();
    let solver_labels: Vec<String> = exp.solvers.iter().map(|s| s.label()).collect();
    write_file(&args.out, "bench.csv", &bench_csv(&rows))?;
    write_file(
        &args.out,
        "table.md",
        &bench_table_markdown(&exp, &case_labels, &solver_labels, &rows),
    )?;
    let artifact = BenchArtifact { config: exp, rows };
    write_file(&args.out, "report.json", &to_json(&artifact))?;
    if artifact.rows.iter().all(|r| !r.converged) {
        return Err(CliError::AllFailed("every benchmark cell failed".into()));
    }
    Ok(())
}
