use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use spinquandle::embeddings::*;
use spinquandle::groups::{FiniteGroup, OrthogonalGroup, Su2};
use spinquandle::numerics::{SampleUnit, DEFAULT_TOLERANCE};
use spinquandle::quandle::{
    check_axioms, core_table, ConjQuandle, FiniteQuandle, ProjectiveQuandle, SphereQuandle, TwistedConjQuandle,
};
use spinquandle::verify::*;
use spinquandle::Rational;

#[derive(Parser)]
#[command(about = "Run verification checks on quandles, embeddings and diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the structured report to this path.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Absolute tolerance for float-mode checks.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
}

#[derive(clap::Args)]
struct Sampling {
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Use exact rational arithmetic instead of f64.
    #[arg(long)]
    exact: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the quandle axioms.
    Axioms {
        #[arg(long, value_enum, required_unless_present = "table")]
        quandle: Option<QuandleKind>,
        /// Check a finite quandle table read from this file instead.
        #[arg(long, conflicts_with = "quandle")]
        table: Option<PathBuf>,
        #[command(flatten)]
        run: Sampling,
    },
    /// Check that a map is an injective quandle homomorphism.
    Embedding {
        #[arg(long, value_enum)]
        map: MapKind,
        #[command(flatten)]
        run: Sampling,
    },
    /// Check a commutative diagram.
    Diagram {
        #[arg(long, value_enum)]
        which: DiagramKind,
        #[command(flatten)]
        run: Sampling,
    },
    /// Check the kernel of the covering SU(2) x SU(2) -> SO(4).
    KernelP4 {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QuandleKind {
    Sphere,
    Projective,
    CoreZk,
    ConjO2,
    TwistedSo2,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapKind {
    Iota1,
    Inn,
    #[value(name = "i-n")]
    IN,
    IotaN,
    #[value(name = "fB")]
    FB,
    #[value(name = "fA")]
    FA,
    #[value(name = "I1")]
    I1,
    #[value(name = "I2")]
    I2,
    Iota3,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramKind {
    #[value(name = "6.3")]
    Six3,
    #[value(name = "7.2")]
    Seven2,
    CoveringSquare,
    LiftedAction,
}

fn axioms<S: SampleUnit>(kind: QuandleKind, run: &Sampling, tol: f64) -> anyhow::Result<VerificationReport> {
    let (s, seed) = (run.samples, run.seed);
    Ok(match kind {
        QuandleKind::Sphere => check_axioms(&SphereQuandle::<S>::new(run.n), s, seed, tol),
        QuandleKind::Projective => check_axioms(&ProjectiveQuandle::<S>::new(run.n, tol), s, seed, tol),
        QuandleKind::CoreZk => {
            if run.n == 0 {
                bail!("core-zk needs --n >= 1");
            }
            check_axioms(&core_table(&FiniteGroup::cyclic(run.n)), s, seed, tol)
        }
        QuandleKind::ConjO2 => check_axioms(&ConjQuandle { group: OrthogonalGroup::<S>::orthogonal(2) }, s, seed, tol),
        QuandleKind::TwistedSo2 => {
            let (group, psi) = so2_with_inversion::<S>();
            check_axioms(&TwistedConjQuandle { group, psi }, s, seed, tol)
        }
    })
}

fn embedding<S: SampleUnit>(kind: MapKind, run: &Sampling, tol: f64) -> anyhow::Result<Vec<VerificationReport>> {
    let (n, s, seed) = (run.n, run.samples, run.seed);
    macro_rules! both {
        ($f:expr) => {{
            let f = $f;
            vec![check_hom(&f, s, seed, tol), check_injective(&f, s, seed, tol)]
        }};
    }
    if n == 0 {
        bail!("--n must be at least 1");
    }
    Ok(match kind {
        MapKind::Iota1 => both!(iota_1_map::<S>()),
        MapKind::Inn => both!(inn_embedding::<S>(n)),
        MapKind::IN => both!(i_n_map::<S>(n, tol)),
        MapKind::IotaN => both!(iota_n_map::<S>(n, tol)),
        MapKind::FB => both!(f_b_map(Su2::<S>::new())),
        MapKind::FA => {
            let (group, psi) = so2_with_inversion::<S>();
            both!(f_a_map(group, psi))
        }
        MapKind::I1 => both!(script_i1_map::<S>()),
        MapKind::I2 => both!(script_i2_map::<S>(tol)),
        MapKind::Iota3 => both!(iota_3_map::<S>(tol)),
    })
}

fn diagram<S: SampleUnit>(kind: DiagramKind, run: &Sampling, tol: f64) -> anyhow::Result<VerificationReport> {
    let (n, s, seed) = (run.n, run.samples, run.seed);
    Ok(match kind {
        DiagramKind::Six3 => check_diagram_63::<S>(s, seed, tol),
        DiagramKind::Seven2 => check_diagram_72::<S>(s, seed, tol),
        DiagramKind::CoveringSquare => check_covering_square::<S>(n, s, seed, tol)?,
        DiagramKind::LiftedAction => check_lifted_action::<S>(n, s, seed, tol)?,
    })
}

fn run(cli: &Cli) -> anyhow::Result<Vec<VerificationReport>> {
    let tol = cli.tolerance;
    if !(tol >= 0.0) {
        bail!("--tolerance must be non-negative");
    }
    Ok(match &cli.command {
        Command::Axioms { table: Some(path), run, .. } => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let q = FiniteQuandle::parse(&text)?.with_name(path.display().to_string());
            vec![check_axioms(&q, run.samples, run.seed, 0.0)]
        }
        Command::Axioms { quandle: Some(kind), run, .. } if run.exact => vec![axioms::<Rational>(*kind, run, 0.0)?],
        Command::Axioms { quandle: Some(kind), run, .. } => vec![axioms::<f64>(*kind, run, tol)?],
        Command::Axioms { .. } => bail!("either --quandle or --table is required"),
        Command::Embedding { map, run } if run.exact => embedding::<Rational>(*map, run, 0.0)?,
        Command::Embedding { map, run } => embedding::<f64>(*map, run, tol)?,
        Command::Diagram { which, run } if run.exact => vec![diagram::<Rational>(*which, run, 0.0)?],
        Command::Diagram { which, run } => vec![diagram::<f64>(*which, run, tol)?],
        Command::KernelP4 { samples, seed } => vec![check_kernel_p4(*samples, *seed)],
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli).and_then(|reports| spinquandle_cli::finish(reports, cli.report.as_deref()));
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
