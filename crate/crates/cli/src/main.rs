//! `qrcs` — feasibility analysis for quantum linear-system solvers
//! against classical conjugate gradient on sparse mesh problems.
//!
//! Every subcommand builds a [`Scenario`], runs it, and renders the
//! resulting report as text (default) or JSON (`--json`); artifacts with
//! tabular series additionally write CSV files under `--out DIR`.
//!
//! Exit codes: 0 when every requested artifact succeeded, 1 when at least
//! one artifact failed (the report still carries the others), 2 when the
//! scenario itself could not be loaded or resolved.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use qrcs_cli::emit;
use qrcs_cli::report::run_scenario;
use qrcs_cli::scenario::{ArtifactKind, Scenario};
use qrcs_core::cost::ModelVariant;
use qrcs_core::crossover::Scale;
use qrcs_core::mesh::{MeshTopology, TopologyKind};

#[derive(Parser)]
#[command(
    name = "qrcs",
    version,
    about = "Quantum vs classical runtime feasibility analysis for sparse linear systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Locate the runtime crossover at one parameter point.
    Crossover {
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Sample both runtime curves over a problem-size grid.
    Curves {
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Fit the published anchor and extrapolate steps and wall clock.
    Estimate {
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Build a mesh and derive its sparsity parameter.
    Sparsity {
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Produce the accuracy-requirement table and a tolerance sweep.
    Precision {
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Run a scenario file requesting several artifacts at once.
    Scenario {
        /// Path to a scenario JSON file.
        file: PathBuf,
        #[command(flatten)]
        output: OutputFlags,
    },
}

/// Overrides applied on top of the reference parameter point.
#[derive(Args)]
struct ParamFlags {
    /// Problem size (number of unknowns).
    #[arg(long)]
    n: Option<f64>,
    /// Sparsity parameter: nonzeros per matrix row.
    #[arg(long)]
    d: Option<u32>,
    /// Condition number.
    #[arg(long)]
    kappa: Option<f64>,
    /// Target relative accuracy.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Classical per-iteration prefactor.
    #[arg(long = "c-cg")]
    c_cg: Option<f64>,
    /// Quantum per-run prefactor.
    #[arg(long = "c-cjs")]
    c_cjs: Option<f64>,
    /// Mesh family to derive the sparsity parameter from
    /// (square2d, triangular2d, cubic3d, tet-six-per-cube3d,
    /// tet-five-per-cube3d). Requires --mesh-size.
    #[arg(long)]
    topology: Option<TopologyKind>,
    /// Mesh vertices per side, paired with --topology.
    #[arg(long)]
    mesh_size: Option<usize>,
    /// Runtime model the estimate extrapolates with
    /// (cg, cjs, cjs-corrected, cjs-cks).
    #[arg(long)]
    variant: Option<ModelVariant>,
    /// Improvement scenarios as comma-separated orders of magnitude.
    #[arg(long, value_delimiter = ',')]
    orders: Option<Vec<f64>>,
    /// Tolerances for the precision sweep, comma-separated.
    #[arg(long, value_delimiter = ',')]
    sweep_epsilons: Option<Vec<f64>>,
    /// Smallest problem size on sampling grids.
    #[arg(long)]
    n_min: Option<f64>,
    /// Largest problem size on sampling grids.
    #[arg(long)]
    n_max: Option<f64>,
    /// Number of grid points.
    #[arg(long)]
    points: Option<usize>,
    /// Grid layout for the curves artifact (linear or loglog).
    #[arg(long)]
    scale: Option<Scale>,
    /// Scenario name recorded in the report.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct OutputFlags {
    /// Emit the full-precision JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Directory to write CSV series files into.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

/// Builds the scenario for a single-artifact subcommand: the reference
/// point, the requested outputs, then the flag overrides.
fn wrapper_scenario(
    name: &str,
    outputs: &[ArtifactKind],
    flags: &ParamFlags,
) -> anyhow::Result<Scenario> {
    let mut scenario = Scenario::at_reference_point(name);
    scenario.outputs = outputs.to_vec();
    apply_flags(scenario, flags)
}

fn apply_flags(mut scenario: Scenario, flags: &ParamFlags) -> anyhow::Result<Scenario> {
    let mut p = scenario.cost_params;
    if let Some(n) = flags.n {
        p = p.with_n(n)?;
    }
    if let Some(d) = flags.d {
        p = p.with_d(d)?;
    }
    if let Some(kappa) = flags.kappa {
        p = p.with_kappa(kappa)?;
    }
    if let Some(epsilon) = flags.epsilon {
        p = p.with_epsilon(epsilon)?;
    }
    if let Some(c_cg) = flags.c_cg {
        p = p.with_c_cg(c_cg)?;
    }
    if let Some(c_cjs) = flags.c_cjs {
        p = p.with_c_cjs(c_cjs)?;
    }
    scenario.cost_params = p;

    match (flags.topology, flags.mesh_size) {
        (Some(kind), Some(m)) => scenario.topology = Some(MeshTopology { kind, m }),
        (Some(kind), None) => match scenario.topology {
            Some(existing) => scenario.topology = Some(MeshTopology { kind, m: existing.m }),
            None => anyhow::bail!("--topology requires --mesh-size"),
        },
        (None, Some(m)) => match scenario.topology {
            Some(existing) => {
                scenario.topology = Some(MeshTopology {
                    kind: existing.kind,
                    m,
                });
            }
            None => anyhow::bail!("--mesh-size requires --topology"),
        },
        (None, None) => {}
    }

    if let Some(variant) = flags.variant {
        scenario.variant = variant;
    }
    if let Some(orders) = &flags.orders {
        scenario.improvement_orders = orders.clone();
    }
    if let Some(epsilons) = &flags.sweep_epsilons {
        scenario.sweep.epsilons = epsilons.clone();
    }
    if let Some(n_min) = flags.n_min {
        scenario.curves.n_min = n_min;
        scenario.sweep.n_min = n_min;
    }
    if let Some(n_max) = flags.n_max {
        scenario.curves.n_max = n_max;
        scenario.sweep.n_max = n_max;
    }
    if let Some(points) = flags.points {
        scenario.curves.points = points;
        scenario.sweep.points = points;
    }
    if let Some(scale) = flags.scale {
        scenario.curves.scale = scale;
    }
    if let Some(name) = &flags.name {
        scenario.name = name.clone();
    }
    Ok(scenario)
}

fn load_scenario(path: &Path) -> anyhow::Result<Scenario> {
    let content = std::fs::read_to_string(path)
        .with_context(|| format!("reading scenario file {}", path.display()))?;
    let scenario: Scenario = serde_json::from_str(&content)
        .with_context(|| format!("parsing scenario file {}", path.display()))?;
    Ok(scenario)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let (scenario, output) = match cli.command {
        Command::Crossover { params, output } => (
            wrapper_scenario("crossover", &[ArtifactKind::Crossover], &params)?,
            output,
        ),
        Command::Curves { params, output } => (
            wrapper_scenario("curves", &[ArtifactKind::Curves], &params)?,
            output,
        ),
        Command::Estimate { params, output } => (
            wrapper_scenario("estimate", &[ArtifactKind::Estimate], &params)?,
            output,
        ),
        Command::Sparsity { params, output } => (
            wrapper_scenario("sparsity", &[ArtifactKind::Sparsity], &params)?,
            output,
        ),
        Command::Precision { params, output } => (
            wrapper_scenario(
                "precision",
                &[ArtifactKind::PrecisionTable, ArtifactKind::PrecisionSweep],
                &params,
            )?,
            output,
        ),
        Command::Scenario { file, output } => (load_scenario(&file)?, output),
    };

    let report = run_scenario(&scenario)?;
    for error in &report.errors {
        eprintln!("artifact {} failed: {}", error.artifact, error.error);
    }

    if output.json {
        print!("{}", emit::to_json(&report));
    } else {
        let suppress = std::env::var("QRCS_NO_CAVEATS").is_ok_and(|v| v == "1");
        print!("{}", emit::to_text(&report, suppress));
    }

    if let Some(dir) = &output.out {
        let written = emit::write_csv_files(&report, dir)
            .with_context(|| format!("writing CSV files under {}", dir.display()))?;
        for path in written {
            eprintln!("wrote {}", path.display());
        }
    }

    Ok(if report.errors.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(2)
        }
    }
}
