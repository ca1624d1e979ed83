//! Artifact rendering: CSV bodies, markdown tables, JSON reports.
//!
//! Numeric CSV and markdown cells use 17 significant digits so regressions
//! diff exactly; wall-time columns are confined to JSON reports and the
//! markdown table, keeping CSV bodies byte-reproducible across runs.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::run::BenchRow;
use crate::CliError;

/// 17-significant-digit rendering used in CSV and markdown artifacts.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_file(dir: &Path, name: &str, body: &str) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(e.to_string()))?;
    fs::write(dir.join(name), body).map_err(|e| CliError::Io(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable artifact");
    text.push('\n');
    text
}

/// `bench.csv` body: fixed header, no timing columns.
pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("case,solver,n,L,converged,delta,rho_bound\n");
    for row in rows {
        let rho = row.rho_bound.map(fmt17).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.case,
            row.solver,
            row.n,
            row.l,
            row.converged,
            fmt17(row.delta),
            rho
        ));
    }
    out
}

/// `table.md`: the iteration-count grid plus cost-model columns and the
/// resolved configuration for provenance.
pub fn bench_table_markdown<T: Serialize>(
    config: &T,
    case_labels: &[String],
    solver_labels: &[String],
    rows: &[BenchRow],
) -> String {
    let cell = |case: &str, solver: &str| -> Option<&BenchRow> {
        rows.iter().find(|r| r.case == case && r.solver == solver)
    };

    let mut out = String::from("# Solver comparison\n\n");
    out.push_str("Iteration count L (matrix-vector products) per case and solver; `!` marks runs that did not converge.\n\n");

    out.push_str("| case |");
    for s in solver_labels {
        out.push_str(&format!(" {s} |"));
    }
    out.push('\n');
    out.push_str("|---|");
    for _ in solver_labels {
        out.push_str("---|");
    }
    out.push('\n');
    for case in case_labels {
        out.push_str(&format!("| {case} |"));
        for s in solver_labels {
            match cell(case, s) {
                Some(r) if r.converged => out.push_str(&format!(" L={} |", r.l)),
                Some(r) => out.push_str(&format!(" L={} (!) |", r.l)),
                None => out.push_str(" - |"),
            }
        }
        out.push('\n');
    }

    out.push_str("\n## Cost model\n\n");
    out.push_str(
        "Estimates per solver: T ~ L (T_A + T_0) + T_M operations and iteration workspace M_ITER in complex numbers (worst case over cases).\n\n",
    );
    out.push_str("| solver | max L | T est (worst case) | M_ITER |\n|---|---|---|---|\n");
    for s in solver_labels {
        let of_solver: Vec<&BenchRow> = rows.iter().filter(|r| &r.solver == s).collect();
        let max_l = of_solver.iter().map(|r| r.l).max().unwrap_or(0);
        let max_t = of_solver.iter().map(|r| r.t_est).fold(0.0, f64::max);
        let m_iter = of_solver.iter().map(|r| r.m_iter_est).fold(0.0, f64::max);
        out.push_str(&format!(
            "| {s} | {max_l} | {} | {} |\n",
            fmt17(max_t),
            fmt17(m_iter)
        ));
    }

    out.push_str("\n## Resolved configuration\n\n```json\n");
    out.push_str(&to_json(config));
    out.push_str("```\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_has_fixed_header_and_blank_rho_for_missing_bound() {
        let rows = vec![BenchRow {
            case: "c".into(),
            solver: "GMRES n=10".into(),
            n: 10,
            l: 7,
            converged: true,
            delta: 1e-6,
            rho_bound: None,
            wall_time: 0.1,
            t_a_est: 1.0,
            t_0_est: 1.0,
            m_iter_est: 1.0,
            t_est: 16.0,
            failure: None,
        }];
        let text = bench_csv(&rows);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("case,solver,n,L,converged,delta,rho_bound"));
        assert!(lines.next().unwrap().ends_with(','));
    }
}
