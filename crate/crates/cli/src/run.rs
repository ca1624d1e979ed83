//! Shared solve pipeline: operator construction, region derivation,
//! schedule selection, and per-solver execution.

use gci_core::geometry::SpectrumRegion;
use gci_core::schedule::schedule_for_region;
use gci_core::solver::{gci_solve, gmres_solve, LinearOperator, SolveConfig, SolveReport};
use gci_core::spectral::low_frequency_region;
use gci_core::vsie::{incident_plane_wave, VsieOperator};
use gci_core::C64;
use serde::Serialize;

use crate::config::{SolveExperiment, SolverConfig};
use crate::CliError;

/// One solver outcome within a case.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub case: String,
    pub solver: String,
    pub n: usize,
    /// Matvec count.
    pub l: usize,
    pub converged: bool,
    /// True relative residual of the returned solution.
    pub delta: f64,
    /// Predicted per-layer contraction, when the schedule provides one.
    pub rho_bound: Option<f64>,
    pub wall_time: f64,
    pub t_a_est: f64,
    pub t_0_est: f64,
    pub m_iter_est: f64,
    /// Total cost estimate `L (T_A + T_0) + T_M`.
    pub t_est: f64,
    pub failure: Option<String>,
}

/// Outcome of running one problem against a solver list.
pub struct CaseOutcome {
    pub rows: Vec<BenchRow>,
    pub region: SpectrumRegion,
}

fn true_residual(op: &dyn LinearOperator, f: &[C64], u: &[C64]) -> f64 {
    let mut au = vec![C64::new(0.0, 0.0); f.len()];
    op.apply(u, &mut au);
    let num: f64 = f
        .iter()
        .zip(&au)
        .map(|(fi, ai)| (fi - ai).norm_sqr())
        .sum::<f64>()
        .sqrt();
    let den: f64 = f.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

pub fn is_region_error(e: &gci_core::Error) -> bool {
    matches!(
        e,
        gci_core::Error::OriginInsideHull
            | gci_core::Error::OriginOnSegment
            | gci_core::Error::DegenerateSegment
            | gci_core::Error::InvalidSegment
            | gci_core::Error::InvalidTriangle(_)
            | gci_core::Error::NoValidCircle
            | gci_core::Error::InvalidPoints(_)
            | gci_core::Error::ZeroMu
    )
}

pub fn map_core(e: gci_core::Error) -> CliError {
    if is_region_error(&e) {
        CliError::Region(e.to_string())
    } else {
        CliError::Config(e.to_string())
    }
}

/// Spectrum region used for schedule derivation: the explicit override when
/// given (taken literally), otherwise the low-frequency prediction dilated
/// by the safety margin.
pub fn solver_region(exp: &SolveExperiment) -> Result<SpectrumRegion, CliError> {
    if let Some(region) = &exp.region {
        return Ok(region.to_region());
    }
    let profile = exp
        .problem
        .profile
        .to_profile(exp.problem.radius_wavelengths);
    let poly = low_frequency_region(&profile).map_err(map_core)?;
    Ok(SpectrumRegion::from_polygon(&poly).inflate_about_one(1.0 + exp.region_margin))
}

/// Builds the operator and plane-wave source, derives the region and runs
/// every configured solver. Per-solver failures are recorded in their rows;
/// the run continues.
pub fn run_case(label: &str, exp: &SolveExperiment) -> Result<CaseOutcome, CliError> {
    exp.validate()?;
    let profile = exp
        .problem
        .profile
        .to_profile(exp.problem.radius_wavelengths);
    let op = VsieOperator::new(&profile, exp.problem.n_cells, exp.problem.k0)
        .map_err(map_core)?;
    let rhs = incident_plane_wave(op.grid(), exp.problem.k0, [0.0, 0.0, 1.0], [1.0, 0.0, 0.0])
        .map_err(map_core)?;
    let region = solver_region(exp)?;
    let cfg = SolveConfig {
        tol: exp.tol,
        max_matvecs: exp.max_matvecs,
        initial_guess: None,
    };

    let mut rows = Vec::with_capacity(exp.solvers.len());
    for solver in &exp.solvers {
        let row = run_solver(label, solver, &op, &rhs, &region, &cfg);
        rows.push(row);
    }
    Ok(CaseOutcome { rows, region })
}

fn run_solver(
    label: &str,
    solver: &SolverConfig,
    op: &VsieOperator,
    rhs: &[C64],
    region: &SpectrumRegion,
    cfg: &SolveConfig,
) -> BenchRow {
    let mut rho_bound = None;
    let outcome: Result<SolveReport, gci_core::Error> = match solver {
        SolverConfig::Gsi => schedule_for_region(region, 1).and_then(|schedule| {
            rho_bound = schedule.rho_bound;
            gci_solve(op, rhs, &schedule, cfg)
        }),
        SolverConfig::Gci { n } => schedule_for_region(region, *n).and_then(|schedule| {
            rho_bound = schedule.rho_bound;
            gci_solve(op, rhs, &schedule, cfg)
        }),
        SolverConfig::Gmres { n } => gmres_solve(op, rhs, *n, cfg),
    };

    match outcome {
        Ok(report) => {
            let delta = true_residual(op, rhs, &report.solution);
            let t_m_est = 2.0 * report.cost_model.t_a_est;
            BenchRow {
                case: label.to_string(),
                solver: solver.label(),
                n: solver.n(),
                l: report.matvecs,
                converged: report.converged,
                delta,
                rho_bound,
                wall_time: report.wall_time,
                t_a_est: report.cost_model.t_a_est,
                t_0_est: report.cost_model.t_0_est,
                m_iter_est: report.cost_model.m_iter_est,
                t_est: report.matvecs as f64
                    * (report.cost_model.t_a_est + report.cost_model.t_0_est)
                    + t_m_est,
                failure: report.failure,
            }
        }
        Err(e) => BenchRow {
            case: label.to_string(),
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
        },
    }
}
