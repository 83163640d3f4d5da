//! Report assembly: runs a scenario's artifacts in order and collects
//! their results, caveats, and failures into one serializable record.
//!
//! Reports are fully deterministic: the same scenario always yields the
//! same report, byte for byte once serialized. Artifact failures never
//! abort the run — they are collected per artifact so one bad request
//! cannot hide the others' results.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use qrcs_core::caveats::Caveat;
use qrcs_core::cost::ModelVariant;
use qrcs_core::crossover::{crossover_exact, runtime_curves, CrossoverResult, RuntimeSeries, Scale};
use qrcs_core::error::{Error, Result};
use qrcs_core::mesh::{edge_count, row_nonzero_counts, MeshTopology, SparsityReport};
use qrcs_core::precision::{
    crossover_vs_precision, delta_db, regime_table, DbConvention, PrecisionRegime,
    PrecisionSweepPoint,
};
use qrcs_core::resource::{
    anchor_denominator, extrapolate, fit_prefactor, hamiltonian_accounting, improvement_scenario,
    wall_clock, AnchorEstimate, HamiltonianAccounting, HamiltonianCalibration, ImprovementScenario,
    WallClock,
};

use crate::scenario::{resolve, ArtifactKind, Resolved, Scenario};

/// One sample of the additive-dB error curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DbSample {
    /// Solver tolerance.
    pub epsilon: f64,
    /// Worst-side additive error in dB.
    pub delta_db: f64,
}

/// Runtime curves for one tolerance of the precision sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSeries {
    /// The tolerance the curves were sampled at.
    pub epsilon: f64,
    /// Matched classical and quantum samples, log-log grid.
    pub curves: RuntimeSeries<f64>,
}

/// The result of one artifact, tagged by its token.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "artifact", rename_all = "snake_case")]
pub enum ArtifactResult {
    /// Crossover parameter, regime, and crossover sizes.
    Crossover {
        /// The full crossover solution at the effective parameters.
        result: CrossoverResult<f64>,
    },
    /// Runtime curve samples.
    Curves {
        /// Matched samples on the scenario's curve grid.
        series: RuntimeSeries<f64>,
    },
    /// The anchored resource estimate.
    Estimate {
        /// Which runtime model the extrapolation used.
        variant: ModelVariant,
        /// The published end-to-end data point the fit rests on.
        anchor: AnchorEstimate<f64>,
        /// Bare model value `κ·d⁷·ε⁻²·ln N` at the anchor point.
        anchor_denominator: f64,
        /// Fitted quantum prefactor (anchor steps over denominator).
        fitted_prefactor: f64,
        /// The prefactor alone expressed as sequential runtime.
        prefactor_wall_clock: WallClock<f64>,
        /// Model steps at the scenario's effective parameters.
        extrapolated_steps: f64,
        /// Those steps on human time scales.
        wall_clock: WallClock<f64>,
        /// Sequential-call structure at the effective κ and ε.
        hamiltonian: HamiltonianAccounting<f64>,
        /// One entry per requested orders-of-magnitude improvement.
        improvements: Vec<ImprovementScenario<f64>>,
    },
    /// Mesh sparsity analysis.
    Sparsity {
        /// The mesh family and resolution analyzed.
        topology: MeshTopology,
        /// Edge count from the closed form (equals the built mesh's).
        edges: u64,
        /// Sparsity parameter and per-edge count histogram.
        report: SparsityReport,
        /// Total nonzeros of the symbolic system matrix.
        total_nonzeros: u64,
    },
    /// The accuracy-requirement table.
    PrecisionTable {
        /// Which dB convention the table uses.
        convention: DbConvention,
        /// The four computed rows.
        rows: Vec<PrecisionRegime<f64>>,
        /// Densely sampled dB curve over the table's tolerance range.
        db_series: Vec<DbSample>,
    },
    /// The precision-vs-crossover sweep.
    PrecisionSweep {
        /// Crossover solution per swept tolerance, in input order.
        points: Vec<PrecisionSweepPoint<f64>>,
        /// Runtime curves per swept tolerance, log-log grid.
        series: Vec<SweepSeries>,
    },
}

impl ArtifactResult {
    /// The token of the artifact this result belongs to.
    #[must_use]
    pub fn kind(&self) -> ArtifactKind {
        match self {
            ArtifactResult::Crossover { .. } => ArtifactKind::Crossover,
            ArtifactResult::Curves { .. } => ArtifactKind::Curves,
            ArtifactResult::Estimate { .. } => ArtifactKind::Estimate,
            ArtifactResult::Sparsity { .. } => ArtifactKind::Sparsity,
            ArtifactResult::PrecisionTable { .. } => ArtifactKind::PrecisionTable,
            ArtifactResult::PrecisionSweep { .. } => ArtifactKind::PrecisionSweep,
        }
    }
}

/// A failed artifact: its token and the error it failed with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArtifactError {
    /// Token of the artifact that failed.
    pub artifact: String,
    /// The failure, with the offending field or domain named.
    pub error: String,
}

/// Requested versus effective parameters, recorded whenever a derivation
/// step (mesh topology, κ scaling law) may have replaced an input value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EffectiveParams {
    /// Sparsity parameter from the scenario file.
    pub requested_d: u32,
    /// Sparsity parameter actually used (mesh-derived when a topology is
    /// present).
    pub effective_d: u32,
    /// Condition number from the scenario file.
    pub requested_kappa: f64,
    /// Condition number actually used (law-derived when a law is present).
    pub effective_kappa: f64,
}

/// A complete analysis report: the scenario echo, effective parameters,
/// per-artifact results in request order, caveats, and failures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Scenario name.
    pub name: String,
    /// Version of the tool that produced the report.
    pub tool_version: String,
    /// The scenario exactly as executed (defaults filled in).
    pub scenario: Scenario,
    /// Requested versus effective parameter values.
    pub effective: EffectiveParams,
    /// Artifact results, in the order the scenario requested them.
    pub results: Vec<ArtifactResult>,
    /// Honesty annotations for the artifacts present, deduplicated, in
    /// fixed order.
    pub caveats: Vec<String>,
    /// Artifacts that failed, with their errors.
    pub errors: Vec<ArtifactError>,
}

/// The fixed caveat set each artifact carries.
#[must_use]
pub fn caveats_for(kind: ArtifactKind) -> &'static [Caveat] {
    match kind {
        ArtifactKind::Crossover | ArtifactKind::Curves => {
            &[Caveat::CoarseApproximationDiscrepancy]
        }
        ArtifactKind::Estimate => &[
            Caveat::SinglePointFit,
            Caveat::NoErrorCorrectionOverhead,
            Caveat::SubroutineCallNarrative,
        ],
        ArtifactKind::Sparsity => &[],
        ArtifactKind::PrecisionTable | ArtifactKind::PrecisionSweep => {
            &[Caveat::DbConventionMismatch]
        }
    }
}

/// Runs every artifact the scenario requests and assembles the report.
///
/// Scenario-level problems (invalid parameters, an unbuildable mesh, a bad
/// scaling law) fail the whole run; problems inside a single artifact are
/// recorded in `errors` and leave the other artifacts untouched.
pub fn run_scenario(scenario: &Scenario) -> Result<Report> {
    let resolved = resolve(scenario)?;

    let mut results = Vec::new();
    let mut errors = Vec::new();
    let mut caveats = BTreeSet::new();
    for &kind in &scenario.outputs {
        match produce(kind, scenario, &resolved) {
            Ok(result) => {
                caveats.extend(caveats_for(kind).iter().copied());
                results.push(result);
            }
            Err(error) => errors.push(ArtifactError {
                artifact: kind.token().to_owned(),
                error: error.to_string(),
            }),
        }
    }

    Ok(Report {
        name: scenario.name.clone(),
        tool_version: env!("CARGO_PKG_VERSION").to_owned(),
        scenario: scenario.clone(),
        effective: EffectiveParams {
            requested_d: resolved.requested_d,
            effective_d: resolved.params.d(),
            requested_kappa: resolved.requested_kappa,
            effective_kappa: resolved.params.kappa(),
        },
        results,
        caveats: caveats.into_iter().map(|c| c.text().to_owned()).collect(),
        errors,
    })
}

fn produce(kind: ArtifactKind, scenario: &Scenario, resolved: &Resolved) -> Result<ArtifactResult> {
    match kind {
        ArtifactKind::Crossover => Ok(ArtifactResult::Crossover {
            result: crossover_exact(&resolved.params)?,
        }),
        ArtifactKind::Curves => {
            let c = scenario.curves;
            Ok(ArtifactResult::Curves {
                series: runtime_curves(&resolved.params, c.n_min, c.n_max, c.points, c.scale)?,
            })
        }
        ArtifactKind::Estimate => produce_estimate(scenario, resolved),
        ArtifactKind::Sparsity => produce_sparsity(scenario, resolved),
        ArtifactKind::PrecisionTable => Ok(ArtifactResult::PrecisionTable {
            convention: DbConvention::default(),
            rows: regime_table::<f64>(),
            db_series: db_series()?,
        }),
        ArtifactKind::PrecisionSweep => produce_precision_sweep(scenario, resolved),
    }
}

fn produce_estimate(scenario: &Scenario, resolved: &Resolved) -> Result<ArtifactResult> {
    let anchor = AnchorEstimate::scherer();
    let denominator = anchor_denominator(&anchor)?;
    let fitted = fit_prefactor(&anchor)?;
    let steps = extrapolate(fitted, &resolved.params, scenario.variant)?;
    let hw = &scenario.hardware;
    let improvements = scenario
        .improvement_orders
        .iter()
        .map(|&orders| improvement_scenario(steps, orders, hw))
        .collect::<Result<Vec<_>>>()?;
    Ok(ArtifactResult::Estimate {
        variant: scenario.variant,
        anchor,
        anchor_denominator: denominator,
        fitted_prefactor: fitted,
        prefactor_wall_clock: wall_clock(fitted, hw)?,
        extrapolated_steps: steps,
        wall_clock: wall_clock(steps, hw)?,
        hamiltonian: hamiltonian_accounting(&resolved.params, &HamiltonianCalibration::default())?,
        improvements,
    })
}

fn produce_sparsity(scenario: &Scenario, resolved: &Resolved) -> Result<ArtifactResult> {
    let topology = scenario.topology.ok_or_else(|| {
        Error::invalid(
            "topology",
            "the sparsity artifact needs a mesh topology (set `topology` in the scenario \
             or pass --topology and --mesh-size)",
        )
    })?;
    let mesh = resolved
        .mesh
        .as_ref()
        .expect("resolution builds the mesh whenever a topology is present");
    let report = resolved
        .sparsity
        .clone()
        .expect("resolution analyzes the mesh whenever a topology is present");
    Ok(ArtifactResult::Sparsity {
        topology,
        edges: edge_count(topology),
        report,
        total_nonzeros: row_nonzero_counts(mesh)?.total_nonzeros,
    })
}

fn produce_precision_sweep(scenario: &Scenario, resolved: &Resolved) -> Result<ArtifactResult> {
    let ratio = resolved.params.c_cg() / resolved.params.c_cjs();
    let points = crossover_vs_precision(resolved.params.d(), &scenario.sweep.epsilons, ratio)?;
    let s = &scenario.sweep;
    let series = s
        .epsilons
        .iter()
        .map(|&epsilon| {
            Ok(SweepSeries {
                epsilon,
                curves: runtime_curves(
                    &resolved.params.with_epsilon(epsilon)?,
                    s.n_min,
                    s.n_max,
                    s.points,
                    Scale::LogLog,
                )?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ArtifactResult::PrecisionSweep { points, series })
}

/// Densely sampled worst-side dB curve over the table's tolerance range
/// `[1e-4, 1e-1]`, ten points per decade.
fn db_series() -> Result<Vec<DbSample>> {
    (0..=30)
        .map(|i| {
            let epsilon = 10f64.powf(-4.0 + f64::from(i) / 10.0);
            Ok(DbSample {
                epsilon,
                delta_db: delta_db(epsilon, DbConvention::default())?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qrcs_core::mesh::TopologyKind;

    fn scenario_with(outputs: Vec<ArtifactKind>) -> Scenario {
        let mut s = Scenario::at_reference_point("test");
        s.outputs = outputs;
        s
    }

    #[test]
    fn results_preserve_request_order() {
        let mut s = scenario_with(vec![
            ArtifactKind::Estimate,
            ArtifactKind::Crossover,
            ArtifactKind::PrecisionTable,
        ]);
        s.topology = Some(MeshTopology {
            kind: TopologyKind::Square2D,
            m: 6,
        });
        let report = run_scenario(&s).unwrap();
        assert!(report.errors.is_empty());
        let kinds: Vec<ArtifactKind> = report.results.iter().map(ArtifactResult::kind).collect();
        assert_eq!(
            kinds,
            vec![
                ArtifactKind::Estimate,
                ArtifactKind::Crossover,
                ArtifactKind::PrecisionTable
            ]
        );
    }

    #[test]
    fn sparsity_without_topology_is_a_collected_error_not_an_abort() {
        let s = scenario_with(vec![ArtifactKind::Sparsity, ArtifactKind::Crossover]);
        let report = run_scenario(&s).unwrap();
        assert_eq!(report.results.len(), 1);
        assert_eq!(report.errors.len(), 1);
        assert_eq!(report.errors[0].artifact, "sparsity");
        assert!(report.errors[0].error.contains("topology"));
    }

    #[test]
    fn mesh_derived_d_feeds_the_cost_models() {
        let mut s = scenario_with(vec![ArtifactKind::Crossover]);
        s.topology = Some(MeshTopology {
            kind: TopologyKind::Triangular2D,
            m: 6,
        });
        let report = run_scenario(&s).unwrap();
        assert_eq!(report.effective.requested_d, 7);
        assert_eq!(report.effective.effective_d, 5);
        let ArtifactResult::Crossover { result } = &report.results[0] else {
            panic!("expected a crossover result");
        };
        // d = 5 moves the crossover parameter by (7/5)⁶ relative to d = 7.
        let d7 = crossover_exact(&resolve(&scenario_with(vec![ArtifactKind::Crossover])).unwrap().params)
            .unwrap();
        let shift = (result.x.x / d7.x.x - (7.0f64 / 5.0).powi(6)).abs();
        assert!(shift < 1e-12, "shift {shift}");
    }

    #[test]
    fn caveats_are_deduplicated_and_ordered() {
        let s = scenario_with(vec![
            ArtifactKind::PrecisionSweep,
            ArtifactKind::Crossover,
            ArtifactKind::Curves,
            ArtifactKind::PrecisionTable,
        ]);
        let report = run_scenario(&s).unwrap();
        assert_eq!(
            report.caveats,
            vec![
                Caveat::CoarseApproximationDiscrepancy.text().to_owned(),
                Caveat::DbConventionMismatch.text().to_owned(),
            ]
        );
    }

    #[test]
    fn estimate_reproduces_the_anchor_at_the_reference_point() {
        let report = run_scenario(&scenario_with(vec![ArtifactKind::Estimate])).unwrap();
        let ArtifactResult::Estimate {
            fitted_prefactor,
            extrapolated_steps,
            wall_clock,
            hamiltonian,
            improvements,
            ..
        } = &report.results[0]
        else {
            panic!("expected an estimate result");
        };
        assert!((fitted_prefactor / 1.11394e14 - 1.0).abs() < 1e-4);
        assert!((extrapolated_steps / 1.8e29 - 1.0).abs() < 1e-12);
        assert!((wall_clock.years / 1.42596e17 - 1.0).abs() < 1e-4);
        assert!((hamiltonian.total_sequential_steps / 3e17 - 1.0).abs() < 1e-12);
        assert_eq!(improvements.len(), 1);
        assert!((improvements[0].wall_clock.universe_ages / 103.330 - 1.0).abs() < 1e-4);
    }

    #[test]
    fn sweep_points_follow_the_requested_epsilon_order() {
        let mut s = scenario_with(vec![ArtifactKind::PrecisionSweep]);
        s.sweep.epsilons = vec![1e-1, 1e-3, 1e-2];
        let report = run_scenario(&s).unwrap();
        let ArtifactResult::PrecisionSweep { points, series } = &report.results[0] else {
            panic!("expected a sweep result");
        };
        let eps: Vec<f64> = points.iter().map(|p| p.epsilon).collect();
        assert_eq!(eps, vec![1e-1, 1e-3, 1e-2]);
        let series_eps: Vec<f64> = series.iter().map(|s| s.epsilon).collect();
        assert_eq!(series_eps, vec![1e-1, 1e-3, 1e-2]);
    }

    #[test]
    fn reports_serialize_identically_across_runs() {
        let mut s = scenario_with(ArtifactKind::ALL.to_vec());
        s.topology = Some(MeshTopology {
            kind: TopologyKind::Square2D,
            m: 6,
        });
        let a = serde_json::to_string_pretty(&run_scenario(&s).unwrap()).unwrap();
        let b = serde_json::to_string_pretty(&run_scenario(&s).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn report_json_round_trips() {
        let mut s = scenario_with(vec![ArtifactKind::Crossover, ArtifactKind::PrecisionTable]);
        s.topology = Some(MeshTopology {
            kind: TopologyKind::Cubic3D,
            m: 4,
        });
        let report = run_scenario(&s).unwrap();
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
