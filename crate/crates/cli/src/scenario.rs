//! Scenario definitions: the one input format every subcommand reduces to.
//!
//! A scenario names a parameter point, optionally derives the sparsity
//! parameter from a concrete mesh and the condition number from a scaling
//! law, and lists which artifacts to produce. Scenarios deserialize from
//! JSON; command-line flags override individual fields afterwards.

use serde::{Deserialize, Serialize};

use qrcs_core::cost::{kappa_scaling, CostParams, KappaScalingLaw, ModelVariant};
use qrcs_core::crossover::Scale;
use qrcs_core::error::{Error, Result};
use qrcs_core::mesh::{build_mesh, sparsity_parameter, Mesh, MeshTopology, SparsityReport};
use qrcs_core::resource::HardwareProfile;

/// The artifacts a scenario can request, in their canonical token form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArtifactKind {
    /// Crossover parameter, regime, and the three crossover sizes.
    Crossover,
    /// Matched runtime curve samples over a problem-size grid.
    Curves,
    /// Prefactor fit, extrapolation, wall clock, and call accounting.
    Estimate,
    /// Mesh construction and sparsity-parameter analysis.
    Sparsity,
    /// The four-row accuracy-requirement table plus the dB curve.
    PrecisionTable,
    /// Crossover sizes and runtime curves across a tolerance sweep.
    PrecisionSweep,
}

impl ArtifactKind {
    /// Every artifact, in canonical order.
    pub const ALL: [ArtifactKind; 6] = [
        ArtifactKind::Crossover,
        ArtifactKind::Curves,
        ArtifactKind::Estimate,
        ArtifactKind::Sparsity,
        ArtifactKind::PrecisionTable,
        ArtifactKind::PrecisionSweep,
    ];

    /// The serialized token, also used to key results and name CSV files.
    #[must_use]
    pub const fn token(self) -> &'static str {
        match self {
            ArtifactKind::Crossover => "crossover",
            ArtifactKind::Curves => "curves",
            ArtifactKind::Estimate => "estimate",
            ArtifactKind::Sparsity => "sparsity",
            ArtifactKind::PrecisionTable => "precision_table",
            ArtifactKind::PrecisionSweep => "precision_sweep",
        }
    }
}

impl core::fmt::Display for ArtifactKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.token())
    }
}

impl core::str::FromStr for ArtifactKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ArtifactKind::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| {
                Error::invalid(
                    "outputs",
                    format!(
                        "unknown artifact `{s}`; expected one of {}",
                        ArtifactKind::ALL.map(|k| k.token()).join(", ")
                    ),
                )
            })
    }
}

/// Sampling grid for the `curves` artifact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CurvesSpec {
    /// Smallest problem size sampled (default 1e6).
    pub n_min: f64,
    /// Largest problem size sampled (default 1e10).
    pub n_max: f64,
    /// Number of grid points (default 100).
    pub points: usize,
    /// Grid layout (default linear).
    pub scale: Scale,
}

impl Default for CurvesSpec {
    fn default() -> Self {
        CurvesSpec {
            n_min: 1e6,
            n_max: 1e10,
            points: 100,
            scale: Scale::Linear,
        }
    }
}

/// Tolerance sweep for the `precision_sweep` artifact. Its runtime curves
/// are always sampled log-log, the layout the sweep is plotted in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepSpec {
    /// Tolerances to sweep, kept in the order given (default 1e-3, 1e-2,
    /// 1e-1).
    pub epsilons: Vec<f64>,
    /// Smallest problem size sampled (default 1e6).
    pub n_min: f64,
    /// Largest problem size sampled (default 1e13, wide enough to contain
    /// the crossovers of all default tolerances).
    pub n_max: f64,
    /// Number of grid points per tolerance (default 100).
    pub points: usize,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            epsilons: vec![1e-3, 1e-2, 1e-1],
            n_min: 1e6,
            n_max: 1e13,
            points: 100,
        }
    }
}

/// A complete analysis request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    /// Display name, echoed into the report.
    pub name: String,
    /// The parameter point the cost models are evaluated at.
    pub cost_params: CostParams<f64>,
    /// When present, the condition number is recomputed from this law at
    /// the scenario's problem size, overriding `cost_params.kappa`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa_law: Option<KappaScalingLaw<f64>>,
    /// When present, the sparsity parameter of this mesh overrides
    /// `cost_params.d`; the report records both values.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub topology: Option<MeshTopology>,
    /// Wall-clock conversion constants.
    #[serde(default)]
    pub hardware: HardwareProfile<f64>,
    /// Which runtime model the estimate artifact extrapolates with.
    #[serde(default = "default_variant")]
    pub variant: ModelVariant,
    /// Orders-of-magnitude improvements the estimate artifact explores.
    #[serde(default = "default_improvement_orders")]
    pub improvement_orders: Vec<f64>,
    /// Sampling grid for the curves artifact.
    #[serde(default)]
    pub curves: CurvesSpec,
    /// Tolerance sweep for the precision-sweep artifact.
    #[serde(default)]
    pub sweep: SweepSpec,
    /// Artifacts to produce, executed in the order listed.
    pub outputs: Vec<ArtifactKind>,
}

fn default_variant() -> ModelVariant {
    ModelVariant::Cjs
}

fn default_improvement_orders() -> Vec<f64> {
    vec![5.0]
}

/// The published reference point: the anchor problem's size, condition
/// number, sparsity, and tolerance, with unit prefactors.
#[must_use]
pub fn default_cost_params() -> CostParams<f64> {
    CostParams::new(3.32e8, 7, 1e4, 1e-2, 1.0, 1.0).expect("reference parameters are valid")
}

impl Scenario {
    /// A scenario at the reference point with no artifacts selected.
    #[must_use]
    pub fn at_reference_point(name: &str) -> Self {
        Scenario {
            name: name.to_owned(),
            cost_params: default_cost_params(),
            kappa_law: None,
            topology: None,
            hardware: HardwareProfile::default(),
            variant: default_variant(),
            improvement_orders: default_improvement_orders(),
            curves: CurvesSpec::default(),
            sweep: SweepSpec::default(),
            outputs: Vec::new(),
        }
    }

    /// Structural checks that deserialization alone cannot express.
    pub fn validate(&self) -> Result<()> {
        if self.outputs.is_empty() {
            return Err(Error::invalid("outputs", "at least one artifact must be requested"));
        }
        if let Some(law) = &self.kappa_law {
            law.validate()?;
        }
        self.hardware.validate()?;
        if self.sweep.epsilons.is_empty() {
            return Err(Error::invalid("sweep.epsilons", "tolerance sweep must not be empty"));
        }
        Ok(())
    }
}

/// The scenario's parameter point after applying the mesh-derived
/// sparsity parameter and the condition-number scaling law.
#[derive(Debug, Clone)]
pub struct Resolved {
    /// Cost parameters with effective `d` and κ substituted.
    pub params: CostParams<f64>,
    /// `d` as given in the scenario file.
    pub requested_d: u32,
    /// κ as given in the scenario file.
    pub requested_kappa: f64,
    /// The constructed mesh, when a topology was given.
    pub mesh: Option<Mesh>,
    /// Its sparsity analysis, when a topology was given.
    pub sparsity: Option<SparsityReport>,
}

/// Applies the scenario's derivation steps, producing the parameter point
/// the artifacts actually evaluate.
pub fn resolve(scenario: &Scenario) -> Result<Resolved> {
    scenario.validate()?;
    let mut params = scenario.cost_params;
    let requested_d = params.d();
    let requested_kappa = params.kappa();

    let (mesh, sparsity) = match scenario.topology {
        Some(topology) => {
            let mesh = build_mesh(topology)?;
            let report = sparsity_parameter(&mesh)?;
            params = params.with_d(u32::try_from(report.d).map_err(|_| {
                Error::invalid("topology", format!("sparsity parameter {} exceeds u32", report.d))
            })?)?;
            (Some(mesh), Some(report))
        }
        None => (None, None),
    };

    if let Some(law) = &scenario.kappa_law {
        params = params.with_kappa(kappa_scaling(law, params.n())?)?;
    }

    Ok(Resolved {
        params,
        requested_d,
        requested_kappa,
        mesh,
        sparsity,
    })
}
