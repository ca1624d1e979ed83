//! Iterative solvers over a matrix-free linear operator.
//!
//! All drivers count matrix-vector products: `L` in the reports below is the
//! number of operator applications, the dominant cost at scale. Stationary
//! drivers (one-parameter and layered Chebyshev-type iteration) keep a fixed
//! number of length-`dim` vectors; restarted GMRES additionally holds the
//! Krylov basis of its restart dimension.

use std::time::Instant;

use ndarray::Array2;

use crate::error::Error;
use crate::linalg::{axpy, dot, norm};
use crate::schedule::{IterationSchedule, Provenance};
use crate::C64;

/// Residual growth beyond which a stationary iteration is declared divergent.
const DIVERGENCE_LIMIT: f64 = 1e8;

/// A linear operator exposing its action on a complex vector.
///
/// `apply` must be deterministic, linear to floating-point accuracy, and safe
/// to call concurrently from multiple threads on one operator value.
pub trait LinearOperator {
    fn dim(&self) -> usize;
    /// y = A x.
    fn apply(&self, x: &[C64], y: &mut [C64]);
    /// Estimated arithmetic operations per matvec, for cost-model reporting.
    /// Defaults to the dense count `8 dim^2`.
    fn apply_cost_estimate(&self) -> f64 {
        let n = self.dim() as f64;
        8.0 * n * n
    }
}

/// Dense operator over a row-major complex matrix.
#[derive(Debug, Clone)]
pub struct DenseOperator {
    matrix: Array2<C64>,
}

impl DenseOperator {
    pub fn new(matrix: Array2<C64>) -> Result<Self, Error> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::NonSquare);
        }
        Ok(DenseOperator { matrix })
    }

    pub fn matrix(&self) -> &Array2<C64> {
        &self.matrix
    }
}

impl LinearOperator for DenseOperator {
    fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    fn apply(&self, x: &[C64], y: &mut [C64]) {
        for (yi, row) in y.iter_mut().zip(self.matrix.rows()) {
            let mut acc = C64::new(0.0, 0.0);
            for (aij, xj) in row.iter().zip(x) {
                acc += aij * xj;
            }
            *yi = acc;
        }
    }
}

/// Stopping control shared by all solvers.
#[derive(Debug, Clone)]
pub struct SolveConfig {
    /// Relative residual target.
    pub tol: f64,
    /// Matvec budget.
    pub max_matvecs: usize,
    /// Starting iterate; zero when absent.
    pub initial_guess: Option<Vec<C64>>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            tol: 1e-5,
            max_matvecs: 10_000,
            initial_guess: None,
        }
    }
}

/// Arithmetic and memory estimates of a solve, in the cost model
/// `T ~ L (T_A + T_0) + T_M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostModel {
    /// Estimated operations per matvec.
    pub t_a_est: f64,
    /// Estimated per-iteration operations besides the matvec.
    pub t_0_est: f64,
    /// Iteration workspace, in complex numbers.
    pub m_iter_est: f64,
}

/// Outcome of an iterative solve.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub solution: Vec<C64>,
    /// Matvec count.
    pub matvecs: usize,
    /// Relative residuals; entry 0 is the starting residual. GMRES interior
    /// entries are the least-squares estimates, exact at restart boundaries.
    pub residual_history: Vec<f64>,
    pub converged: bool,
    /// Reason iteration stopped without converging.
    pub failure: Option<String>,
    pub wall_time: f64,
    pub cost_model: CostModel,
}

impl SolveReport {
    pub fn final_residual(&self) -> f64 {
        *self.residual_history.last().unwrap_or(&f64::NAN)
    }
}

fn check_dims(op: &dyn LinearOperator, f: &[C64], cfg: &SolveConfig) -> Result<(), Error> {
    if f.len() != op.dim() {
        return Err(Error::DimensionMismatch {
            expected: op.dim(),
            got: f.len(),
        });
    }
    if let Some(u0) = &cfg.initial_guess {
        if u0.len() != op.dim() {
            return Err(Error::DimensionMismatch {
                expected: op.dim(),
                got: u0.len(),
            });
        }
    }
    if !(cfg.tol > 0.0) || cfg.max_matvecs == 0 {
        return Err(Error::InvalidRange(
            "tol must be positive and max_matvecs >= 1".into(),
        ));
    }
    Ok(())
}

fn trivial_report(dim: usize, cost: CostModel, started: Instant) -> SolveReport {
    SolveReport {
        solution: vec![C64::new(0.0, 0.0); dim],
        matvecs: 0,
        residual_history: vec![0.0],
        converged: true,
        failure: None,
        wall_time: started.elapsed().as_secs_f64(),
        cost_model: cost,
    }
}

/// One-parameter stationary iteration `u <- u - (1/mu)(A u - f)`.
pub fn gsi_solve(
    op: &dyn LinearOperator,
    f: &[C64],
    mu: C64,
    cfg: &SolveConfig,
) -> Result<SolveReport, Error> {
    if mu.norm() == 0.0 || !mu.re.is_finite() || !mu.im.is_finite() {
        return Err(Error::ZeroMu);
    }
    let schedule = IterationSchedule::from_mus(vec![mu], Provenance::Gsi, None)?;
    gci_solve(op, f, &schedule, cfg)
}

/// Layered stationary iteration: within a layer,
/// `u <- u - tau_{m+1} (A u - f)`, the layer end seeding the next layer.
/// Convergence is checked after every matvec, so iteration may stop
/// mid-layer.
pub fn gci_solve(
    op: &dyn LinearOperator,
    f: &[C64],
    schedule: &IterationSchedule,
    cfg: &SolveConfig,
) -> Result<SolveReport, Error> {
    check_dims(op, f, cfg)?;
    let started = Instant::now();
    let dim = op.dim();
    let cost = CostModel {
        t_a_est: op.apply_cost_estimate(),
        t_0_est: 14.0 * dim as f64,
        m_iter_est: 3.0 * dim as f64,
    };
    let f_norm = norm(f);
    if f_norm == 0.0 {
        return Ok(trivial_report(dim, cost, started));
    }

    let mut u = cfg
        .initial_guess
        .clone()
        .unwrap_or_else(|| vec![C64::new(0.0, 0.0); dim]);
    let mut work = vec![C64::new(0.0, 0.0); dim];
    let mut residual = vec![C64::new(0.0, 0.0); dim];
    let mut matvecs = 0usize;

    // r = f - A u; the zero starting iterate needs no matvec.
    if cfg.initial_guess.is_some() {
        op.apply(&u, &mut work);
        matvecs += 1;
        for i in 0..dim {
            residual[i] = f[i] - work[i];
        }
    } else {
        residual.copy_from_slice(f);
    }

    let mut delta = norm(&residual) / f_norm;
    let mut history = vec![delta];
    let mut converged = delta <= cfg.tol;
    let mut failure = None;
    let mut slot = 0usize;

    while !converged && matvecs < cfg.max_matvecs {
        let tau = schedule.taus[slot % schedule.n()];
        slot += 1;
        axpy(&mut u, tau, &residual);
        op.apply(&u, &mut work);
        matvecs += 1;
        for i in 0..dim {
            residual[i] = f[i] - work[i];
        }
        delta = norm(&residual) / f_norm;
        history.push(delta);
        if !delta.is_finite() || delta > DIVERGENCE_LIMIT {
            failure = Some(format!("diverged: relative residual {delta:.3e}"));
            break;
        }
        if delta <= cfg.tol {
            converged = true;
        }
    }
    if !converged && failure.is_none() {
        failure = Some(format!(
            "matvec budget {} exhausted at residual {delta:.3e}",
            cfg.max_matvecs
        ));
    }

    Ok(SolveReport {
        solution: u,
        matvecs,
        residual_history: history,
        converged,
        failure,
        wall_time: started.elapsed().as_secs_f64(),
        cost_model: cost,
    })
}

/// Complex Givens rotation zeroing `b` against `a`:
/// `[c s; -conj(s) c] [a; b] = [r; 0]` with real `c`.
fn givens(a: C64, b: C64) -> (f64, C64, C64) {
    let an = a.norm();
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, C64::new(0.0, 0.0), a);
    }
    if an == 0.0 {
        return (0.0, b.conj() / bn, C64::new(bn, 0.0));
    }
    let r = (an * an + bn * bn).sqrt();
    let alpha = a / an;
    let c = an / r;
    let s = alpha * b.conj() / r;
    (c, s, alpha * r)
}

/// Restarted GMRES with modified Gram-Schmidt Arnoldi and Givens-rotation
/// least squares. A second orthogonalization pass runs when the first one
/// cancels most of the vector. A vanishing Arnoldi norm means the Krylov
/// space became invariant and the exact solution is reached.
pub fn gmres_solve(
    op: &dyn LinearOperator,
    f: &[C64],
    restart: usize,
    cfg: &SolveConfig,
) -> Result<SolveReport, Error> {
    if restart == 0 {
        return Err(Error::InvalidRange("restart must be >= 1".into()));
    }
    check_dims(op, f, cfg)?;
    let started = Instant::now();
    let dim = op.dim();
    let m = restart.min(dim);
    let cost = CostModel {
        t_a_est: op.apply_cost_estimate(),
        t_0_est: 8.0 * (m as f64) * dim as f64,
        m_iter_est: (m as f64 + 2.0) * dim as f64,
    };
    let f_norm = norm(f);
    if f_norm == 0.0 {
        return Ok(trivial_report(dim, cost, started));
    }

    let mut x = cfg
        .initial_guess
        .clone()
        .unwrap_or_else(|| vec![C64::new(0.0, 0.0); dim]);
    let mut work = vec![C64::new(0.0, 0.0); dim];
    let mut matvecs = 0usize;
    let mut history: Vec<f64> = Vec::new();
    let mut first_cycle = true;

    loop {
        // Cycle-start residual; exact by construction.
        let mut r = vec![C64::new(0.0, 0.0); dim];
        if first_cycle && cfg.initial_guess.is_none() {
            r.copy_from_slice(f);
        } else {
            op.apply(&x, &mut work);
            matvecs += 1;
            for i in 0..dim {
                r[i] = f[i] - work[i];
            }
        }
        first_cycle = false;
        let beta = norm(&r);
        let delta = beta / f_norm;
        history.push(delta);
        if delta <= cfg.tol {
            return Ok(SolveReport {
                solution: x,
                matvecs,
                residual_history: history,
                converged: true,
                failure: None,
                wall_time: started.elapsed().as_secs_f64(),
                cost_model: cost,
            });
        }
        if matvecs >= cfg.max_matvecs {
            return Ok(SolveReport {
                solution: x,
                matvecs,
                residual_history: history,
                converged: false,
                failure: Some(format!(
                    "matvec budget {} exhausted at residual {delta:.3e}",
                    cfg.max_matvecs
                )),
                wall_time: started.elapsed().as_secs_f64(),
                cost_model: cost,
            });
        }

        let mut basis: Vec<Vec<C64>> = Vec::with_capacity(m + 1);
        let inv_beta = C64::new(1.0 / beta, 0.0);
        basis.push(r.iter().map(|&ri| ri * inv_beta).collect());

        let mut h_cols: Vec<Vec<C64>> = Vec::with_capacity(m);
        let mut cs: Vec<f64> = Vec::with_capacity(m);
        let mut sn: Vec<C64> = Vec::with_capacity(m);
        let mut g = vec![C64::new(0.0, 0.0); m + 1];
        g[0] = C64::new(beta, 0.0);

        let mut steps = 0usize;
        let mut inner_converged = false;
        let mut breakdown = false;

        for j in 0..m {
            if matvecs >= cfg.max_matvecs {
                break;
            }
            op.apply(&basis[j], &mut work);
            matvecs += 1;
            let mut w = work.clone();
            let w_norm_in = norm(&w);

            let mut col = vec![C64::new(0.0, 0.0); j + 2];
            for (i, vi) in basis.iter().enumerate() {
                let hij = dot(vi, &w);
                col[i] = hij;
                axpy(&mut w, -hij, vi);
            }
            // Re-orthogonalize once when cancellation ate the vector.
            if norm(&w) < 1e-8 * w_norm_in {
                for (i, vi) in basis.iter().enumerate() {
                    let corr = dot(vi, &w);
                    col[i] += corr;
                    axpy(&mut w, -corr, vi);
                }
            }
            let h_next = norm(&w);
            col[j + 1] = C64::new(h_next, 0.0);

            // Rotate the new column through the accumulated Givens set.
            for i in 0..j {
                let t = C64::new(cs[i], 0.0) * col[i] + sn[i] * col[i + 1];
                col[i + 1] = -sn[i].conj() * col[i] + C64::new(cs[i], 0.0) * col[i + 1];
                col[i] = t;
            }
            let (c, s, rr) = givens(col[j], col[j + 1]);
            cs.push(c);
            sn.push(s);
            col[j] = rr;
            col[j + 1] = C64::new(0.0, 0.0);
            let t = C64::new(c, 0.0) * g[j] + s * g[j + 1];
            g[j + 1] = -s.conj() * g[j] + C64::new(c, 0.0) * g[j + 1];
            g[j] = t;
            h_cols.push(col);
            steps = j + 1;

            let delta_est = g[j + 1].norm() / f_norm;
            history.push(delta_est);
            if h_next <= 1e-14 * w_norm_in.max(f64::MIN_POSITIVE) {
                breakdown = true;
                inner_converged = true;
                break;
            }
            let inv = C64::new(1.0 / h_next, 0.0);
            basis.push(w.iter().map(|&wi| wi * inv).collect());
            if delta_est <= cfg.tol {
                inner_converged = true;
                break;
            }
        }

        if steps > 0 {
            // Back-substitute the triangular system and update the iterate.
            let mut y = vec![C64::new(0.0, 0.0); steps];
            for i in (0..steps).rev() {
                let mut sum = g[i];
                for k in i + 1..steps {
                    sum -= h_cols[k][i] * y[k];
                }
                y[i] = sum / h_cols[i][i];
            }
            for (k, yk) in y.iter().enumerate() {
                axpy(&mut x, *yk, &basis[k]);
            }
        }

        if inner_converged {
            let delta = history.last().copied().unwrap_or(f64::NAN);
            return Ok(SolveReport {
                solution: x,
                matvecs,
                residual_history: history,
                converged: delta <= cfg.tol || breakdown,
                failure: None,
                wall_time: started.elapsed().as_secs_f64(),
                cost_model: cost,
            });
        }
        if matvecs >= cfg.max_matvecs {
            let delta = history.last().copied().unwrap_or(f64::NAN);
            return Ok(SolveReport {
                solution: x,
                matvecs,
                residual_history: history,
                converged: false,
                failure: Some(format!(
                    "matvec budget {} exhausted at residual {delta:.3e}",
                    cfg.max_matvecs
                )),
                wall_time: started.elapsed().as_secs_f64(),
                cost_model: cost,
            });
        }
    }
}
