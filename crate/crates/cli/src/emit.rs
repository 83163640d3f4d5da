//! Report rendering: JSON (full precision), plain text (display-rounded),
//! and CSV series files.
//!
//! All three renderings are deterministic functions of the report. CSV
//! numbers carry 17 significant digits in scientific notation — enough to
//! reconstruct every `f64` bit for bit — with `.` as the decimal
//! separator, `,` as the field separator, and LF line endings, independent
//! of locale.

use std::io;
use std::path::{Path, PathBuf};

use qrcs_core::crossover::RuntimeSeries;
use qrcs_core::precision::PrecisionRegime;

use crate::report::{ArtifactResult, DbSample, Report, SweepSeries};

// ── number formatting ───────────────────────────────────────────────────

/// Full-precision CSV cell: 17 significant digits, scientific notation.
fn csv_num(v: f64) -> String {
    format!("{v:.16e}")
}

/// Display rounding for text output: four significant digits.
fn eng(v: f64) -> String {
    format!("{v:.3e}")
}

/// Two significant digits, plain decimal — the granularity the published
/// accuracy table uses for its dB column.
fn sig2(v: f64) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    let exponent = v.abs().log10().floor() as i32;
    let decimals = usize::try_from((1 - exponent).max(0)).expect("nonnegative");
    format!("{v:.decimals$}")
}

/// The published table prints the range column as `<0.01` below one
/// hundredth of a percent and with two decimals elsewhere.
fn range_cell(pct: f64) -> String {
    if pct < 0.01 {
        "<0.01".to_owned()
    } else {
        format!("{pct:.2}")
    }
}

/// Wall-clock quantities read best in plain decimal when small.
fn human(v: f64) -> String {
    if (0.01..1e5).contains(&v.abs()) {
        format!("{v:.2}")
    } else {
        eng(v)
    }
}

// ── whole-report renderings ─────────────────────────────────────────────

/// The full-precision JSON rendering.
#[must_use]
pub fn to_json(report: &Report) -> String {
    let mut json =
        serde_json::to_string_pretty(report).expect("reports always serialize");
    json.push('\n');
    json
}

/// The display-rounded plain-text rendering. `suppress_caveats` drops the
/// trailing caveat block (text only — JSON always carries caveats).
#[must_use]
pub fn to_text(report: &Report, suppress_caveats: bool) -> String {
    let mut out = String::new();
    let p = &report.scenario.cost_params;
    out.push_str(&format!("scenario: {}\n", report.name));
    out.push_str(&format!("tool: qrcs {}\n", report.tool_version));
    out.push_str(&format!(
        "parameters: N = {}, d = {}, kappa = {}, epsilon = {}, C_CG = {}, C_CJS = {}\n",
        eng(p.n()),
        report.effective.effective_d,
        eng(report.effective.effective_kappa),
        eng(p.epsilon()),
        eng(p.c_cg()),
        eng(p.c_cjs()),
    ));
    if let Some(t) = report.scenario.topology {
        out.push_str(&format!(
            "topology: {} (m = {}) -> effective d = {} (requested {})\n",
            t.kind, t.m, report.effective.effective_d, report.effective.requested_d
        ));
    }
    if report.scenario.kappa_law.is_some() {
        out.push_str(&format!(
            "kappa law -> effective kappa = {} (requested {})\n",
            eng(report.effective.effective_kappa),
            eng(report.effective.requested_kappa)
        ));
    }

    for result in &report.results {
        out.push('\n');
        render_artifact(&mut out, result);
    }

    if !report.errors.is_empty() {
        out.push_str("\nfailed artifacts:\n");
        for e in &report.errors {
            out.push_str(&format!("  {}: {}\n", e.artifact, e.error));
        }
    }

    if !suppress_caveats && !report.caveats.is_empty() {
        out.push_str("\ncaveats:\n");
        for caveat in &report.caveats {
            out.push_str(&format!("  - {caveat}\n"));
        }
    }
    out
}

fn render_artifact(out: &mut String, result: &ArtifactResult) {
    out.push_str(&format!("[{}]\n", result.kind()));
    match result {
        ArtifactResult::Crossover { result } => {
            out.push_str(&format!("  x = {}\n", eng(result.x.x)));
            out.push_str(&format!("  regime: {}\n", result.regime));
            match result.n_star_exact {
                Some(n_star) => {
                    out.push_str(&format!("  N* (exact)           = {}\n", eng(n_star)));
                }
                None => out.push_str("  N* (exact)           = none (quantum dominates)\n"),
            }
            out.push_str(&format!(
                "  N* (log approx)      = {}\n",
                eng(result.n_star_log_approx)
            ));
            out.push_str(&format!(
                "  N* (coarse, -1/x)    = {}\n",
                eng(result.n_star_coarse)
            ));
        }
        ArtifactResult::Curves { series } => render_series(out, series),
        ArtifactResult::Estimate {
            variant,
            anchor_denominator,
            fitted_prefactor,
            prefactor_wall_clock,
            extrapolated_steps,
            wall_clock,
            hamiltonian,
            improvements,
            ..
        } => {
            out.push_str(&format!("  model variant: {variant}\n"));
            out.push_str(&format!("  anchor denominator  = {}\n", eng(*anchor_denominator)));
            out.push_str(&format!("  fitted prefactor    = {}\n", eng(*fitted_prefactor)));
            out.push_str(&format!(
                "  prefactor alone     = {} s = {} years\n",
                eng(prefactor_wall_clock.seconds),
                human(prefactor_wall_clock.years)
            ));
            out.push_str(&format!("  extrapolated steps  = {}\n", eng(*extrapolated_steps)));
            out.push_str(&format!(
                "  wall clock          = {} s = {} years = {} universe ages\n",
                eng(wall_clock.seconds),
                eng(wall_clock.years),
                eng(wall_clock.universe_ages)
            ));
            out.push_str(&format!(
                "  sequential calls    = {} x {} steps/call = {} steps\n",
                eng(hamiltonian.subroutine_calls),
                eng(hamiltonian.per_call_time_steps),
                eng(hamiltonian.total_sequential_steps)
            ));
            out.push_str(&format!(
                "  oracle queries      = {} (circuit = {} steps each)\n",
                eng(hamiltonian.matrix_oracle_queries),
                eng(hamiltonian.oracle_circuit_steps)
            ));
            for improvement in improvements {
                out.push_str(&format!(
                    "  improved by {} orders -> {} steps = {} universe ages\n",
                    human(improvement.orders_of_magnitude),
                    eng(improvement.steps),
                    human(improvement.wall_clock.universe_ages)
                ));
            }
        }
        ArtifactResult::Sparsity {
            topology,
            edges,
            report,
            total_nonzeros,
        } => {
            out.push_str(&format!("  topology: {} (m = {})\n", topology.kind, topology.m));
            out.push_str(&format!("  edges = {edges}\n"));
            out.push_str(&format!("  sparsity parameter d = {}\n", report.d));
            out.push_str(&format!("  boundary minimum     = {}\n", report.boundary_min));
            let histogram = report
                .per_edge_counts
                .iter()
                .map(|(count, edges)| format!("{count} x{edges}"))
                .collect::<Vec<_>>()
                .join(", ");
            out.push_str(&format!("  per-edge counts: {histogram}\n"));
            out.push_str(&format!("  total nonzeros: {total_nonzeros}\n"));
        }
        ArtifactResult::PrecisionTable {
            convention, rows, ..
        } => {
            out.push_str(&format!("  convention: {convention}\n"));
            out.push_str("  epsilon   delta (dB)   range error (%)   use case\n");
            for row in rows {
                out.push_str(&format!(
                    "  {:<8}  {:<11}  {:<16}  {}\n",
                    format!("{:.0e}", row.epsilon),
                    sig2(row.delta_db),
                    range_cell(row.range_error_pct),
                    row.use_case
                ));
            }
        }
        ArtifactResult::PrecisionSweep { points, series } => {
            for point in points {
                let exact = match point.crossover.n_star_exact {
                    Some(n) => eng(n),
                    None => "none".to_owned(),
                };
                out.push_str(&format!(
                    "  epsilon = {:>7}: N* = {exact} (log approx {})\n",
                    format!("{:.0e}", point.epsilon),
                    eng(point.crossover.n_star_log_approx)
                ));
            }
            if let Some(first) = series.first() {
                out.push_str(&format!(
                    "  curves: {} series x {} points over [{}, {}] (loglog)\n",
                    series.len(),
                    first.curves.n_values.len(),
                    eng(first.curves.n_values[0]),
                    eng(*first.curves.n_values.last().expect("series are nonempty"))
                ));
            }
        }
    }
}

fn render_series(out: &mut String, series: &RuntimeSeries<f64>) {
    let first = *series.n_values.first().expect("series are nonempty");
    let last = *series.n_values.last().expect("series are nonempty");
    out.push_str(&format!(
        "  {} points over [{}, {}] ({})\n",
        series.n_values.len(),
        eng(first),
        eng(last),
        series.scale
    ));
    out.push_str(&format!(
        "  t_cg : {} -> {}\n",
        eng(series.t_cg[0]),
        eng(*series.t_cg.last().expect("series are nonempty"))
    ));
    out.push_str(&format!(
        "  t_cjs: {} -> {}\n",
        eng(series.t_cjs[0]),
        eng(*series.t_cjs.last().expect("series are nonempty"))
    ));
    let crossings = series
        .t_cg
        .iter()
        .zip(&series.t_cjs)
        .zip(series.t_cg.iter().zip(&series.t_cjs).skip(1))
        .filter(|((cg0, cjs0), (cg1, cjs1))| {
            ((*cg0 - **cjs0) < 0.0) != ((*cg1 - **cjs1) < 0.0)
        })
        .count();
    out.push_str(&format!("  sign changes of (t_cg - t_cjs) on the grid: {crossings}\n"));
}

// ── CSV series ──────────────────────────────────────────────────────────

/// `N,t_cg,t_cjs` rows for a runtime-curve series.
#[must_use]
pub fn curves_csv(series: &RuntimeSeries<f64>) -> String {
    let mut out = String::from("N,t_cg,t_cjs\n");
    for i in 0..series.n_values.len() {
        out.push_str(&format!(
            "{},{},{}\n",
            csv_num(series.n_values[i]),
            csv_num(series.t_cg[i]),
            csv_num(series.t_cjs[i])
        ));
    }
    out
}

/// `epsilon,delta_db,range_error_pct,use_case` rows for the accuracy
/// table.
#[must_use]
pub fn precision_table_csv(rows: &[PrecisionRegime<f64>]) -> String {
    let mut out = String::from("epsilon,delta_db,range_error_pct,use_case\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            csv_num(row.epsilon),
            csv_num(row.delta_db),
            csv_num(row.range_error_pct),
            row.use_case
        ));
    }
    out
}

/// `epsilon,delta_db` rows for the dB curve.
#[must_use]
pub fn precision_db_csv(samples: &[DbSample]) -> String {
    let mut out = String::from("epsilon,delta_db\n");
    for sample in samples {
        out.push_str(&format!(
            "{},{}\n",
            csv_num(sample.epsilon),
            csv_num(sample.delta_db)
        ));
    }
    out
}

/// Long-format `epsilon,algorithm,N,t` rows for the precision sweep: per
/// tolerance, the classical curve then the quantum curve.
#[must_use]
pub fn precision_sweep_csv(series: &[SweepSeries]) -> String {
    let mut out = String::from("epsilon,algorithm,N,t\n");
    for entry in series {
        for (algorithm, values) in [("cg", &entry.curves.t_cg), ("cjs", &entry.curves.t_cjs)] {
            for (n, t) in entry.curves.n_values.iter().zip(values) {
                out.push_str(&format!(
                    "{},{algorithm},{},{}\n",
                    csv_num(entry.epsilon),
                    csv_num(*n),
                    csv_num(*t)
                ));
            }
        }
    }
    out
}

/// `count,edges` rows for the per-edge coupling histogram.
#[must_use]
pub fn sparsity_csv(report: &qrcs_core::mesh::SparsityReport) -> String {
    let mut out = String::from("count,edges\n");
    for (count, edges) in &report.per_edge_counts {
        out.push_str(&format!("{count},{edges}\n"));
    }
    out
}

/// The CSV files a report's series artifacts produce, as
/// `(file name, content)` pairs in result order. Scalar-only artifacts
/// (crossover, estimate) produce none.
#[must_use]
pub fn csv_files(report: &Report) -> Vec<(String, String)> {
    let mut files = Vec::new();
    for result in &report.results {
        match result {
            ArtifactResult::Curves { series } => {
                files.push(("curves.csv".to_owned(), curves_csv(series)));
            }
            ArtifactResult::PrecisionTable {
                rows, db_series, ..
            } => {
                files.push(("precision_table.csv".to_owned(), precision_table_csv(rows)));
                files.push(("precision_db.csv".to_owned(), precision_db_csv(db_series)));
            }
            ArtifactResult::PrecisionSweep { series, .. } => {
                files.push(("precision_sweep.csv".to_owned(), precision_sweep_csv(series)));
            }
            ArtifactResult::Sparsity { report, .. } => {
                files.push(("sparsity.csv".to_owned(), sparsity_csv(report)));
            }
            ArtifactResult::Crossover { .. } | ArtifactResult::Estimate { .. } => {}
        }
    }
    files
}

/// Writes the report's CSV files into `dir` (created if missing) and
/// returns the paths written.
pub fn write_csv_files(report: &Report, dir: &Path) -> io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (name, content) in csv_files(report) {
        let path = dir.join(name);
        std::fs::write(&path, content)?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::run_scenario;
    use crate::scenario::{ArtifactKind, Scenario};
    use qrcs_core::mesh::{MeshTopology, TopologyKind};

    fn full_report() -> Report {
        let mut s = Scenario::at_reference_point("emit-test");
        s.outputs = ArtifactKind::ALL.to_vec();
        s.topology = Some(MeshTopology {
            kind: TopologyKind::Square2D,
            m: 6,
        });
        run_scenario(&s).unwrap()
    }

    #[test]
    fn csv_cells_carry_seventeen_significant_digits() {
        assert_eq!(csv_num(1.0), "1.0000000000000000e0");
        assert_eq!(csv_num(3.32e8), "3.3200000000000000e8");
        // 17 significant digits expose the binary representation honestly.
        assert_eq!(csv_num(-3.914e-9), "-3.9140000000000003e-9");
        // Round-trip: the printed form recovers the exact bits.
        let v = 0.1f64 + 0.2;
        assert_eq!(csv_num(v).parse::<f64>().unwrap(), v);
    }

    #[test]
    fn two_significant_figure_display_matches_published_style() {
        assert_eq!(sig2(0.00043431619), "0.00043");
        assert_eq!(sig2(0.0043451177), "0.0043");
        assert_eq!(sig2(0.043648054), "0.044");
        assert_eq!(sig2(0.45757490), "0.46");
        assert_eq!(range_cell(0.0025001562), "<0.01");
        assert_eq!(range_cell(0.025015636), "0.03");
        assert_eq!(range_cell(0.25157431), "0.25");
        assert_eq!(range_cell(2.6690096), "2.67");
    }

    #[test]
    fn csv_headers_match_the_interface_contract() {
        let report = full_report();
        let files = csv_files(&report);
        let header = |name: &str| {
            let content = &files.iter().find(|(n, _)| n == name).unwrap().1;
            content.lines().next().unwrap().to_owned()
        };
        assert_eq!(header("curves.csv"), "N,t_cg,t_cjs");
        assert_eq!(
            header("precision_table.csv"),
            "epsilon,delta_db,range_error_pct,use_case"
        );
        assert_eq!(header("precision_db.csv"), "epsilon,delta_db");
        assert_eq!(header("precision_sweep.csv"), "epsilon,algorithm,N,t");
        assert_eq!(header("sparsity.csv"), "count,edges");
    }

    #[test]
    fn csv_uses_lf_only_and_no_stray_separators() {
        let report = full_report();
        for (name, content) in csv_files(&report) {
            assert!(!content.contains('\r'), "{name} has CR");
            assert!(content.ends_with('\n'), "{name} missing trailing LF");
            let columns = content.lines().next().unwrap().split(',').count();
            for line in content.lines() {
                assert_eq!(line.split(',').count(), columns, "{name}: ragged row {line}");
            }
        }
    }

    #[test]
    fn text_report_rounds_for_display() {
        let report = full_report();
        let text = to_text(&report, false);
        assert!(text.contains("scenario: emit-test"));
        assert!(text.contains("[crossover]"));
        assert!(text.contains("5.741e9"), "crossover size missing:\n{text}");
        assert!(text.contains("caveats:"));
        // The table prints at published granularity.
        assert!(text.contains("<0.01"));
        assert!(text.contains("0.25"));
        assert!(text.contains("Operational research"));
    }

    #[test]
    fn caveat_suppression_only_affects_text() {
        let report = full_report();
        let with = to_text(&report, false);
        let without = to_text(&report, true);
        assert!(with.contains("caveats:"));
        assert!(!without.contains("caveats:"));
        assert!(to_json(&report).contains("caveats"));
    }

    #[test]
    fn json_rendering_is_byte_identical_across_calls() {
        let report = full_report();
        assert_eq!(to_json(&report), to_json(&report));
        let again = full_report();
        assert_eq!(to_json(&report), to_json(&again));
    }

    #[test]
    fn sweep_csv_orders_rows_tolerance_then_algorithm_then_size() {
        let report = full_report();
        let files = csv_files(&report);
        let sweep = &files.iter().find(|(n, _)| n == "precision_sweep.csv").unwrap().1;
        let rows: Vec<Vec<&str>> = sweep.lines().skip(1).map(|l| l.split(',').collect()).collect();
        // Default sweep: three tolerances, two algorithms, 100 points.
        assert_eq!(rows.len(), 3 * 2 * 100);
        assert_eq!(rows[0][1], "cg");
        assert_eq!(rows[100][1], "cjs");
        let first_eps: f64 = rows[0][0].parse().unwrap();
        assert_eq!(first_eps, 1e-3);
    }
}
