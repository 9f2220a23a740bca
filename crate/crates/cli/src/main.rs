use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dialgebra::commands;
use dialgebra::expansion::GroupAlgebraOp;
use dialgebra::experiments::{run_experiment, ExperimentConfig, EXPERIMENTS};
use dialgebra::field::{FieldTag, PrimeField};
use dialgebra::report::Report;
use dialgebra::varieties::{builtin, OpsSpec, VarietySpec};
use dialgebra::Error;

/// Number of worker threads; unset means one per core.
const THREADS_VAR: &str = "DIALGEBRA_THREADS";

#[derive(Parser)]
#[command(
    name = "dialgebra",
    version,
    about = "Polynomial identities of operations in free dialgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true)]
    degree: Option<usize>,
    #[arg(long, global = true, default_value_t = PrimeField::DEFAULT_MODULUS)]
    modulus: u32,
    #[arg(long, global = true, value_enum, default_value_t = FieldKind::Prime)]
    field: FieldKind,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Operations file, or the name of a built-in set of operations.
    #[arg(long, global = true)]
    ops: Option<String>,
    /// Variety file, or the name of a built-in variety.
    #[arg(long, global = true)]
    variety: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldKind {
    Prime,
    Rational,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Expansion matrix of the monomials of one degree.
    Expand,
    /// Basis of the identities of one degree.
    Identities,
    /// Module generators of the identities, seeded by the variety if given.
    Generators,
    /// KP lifts of the identities of a one-operation variety.
    Kp,
    /// BSO lifts of an operation.
    Bso {
        #[arg(long)]
        omega: String,
    },
    /// Compare KP lifts with the identities of the BSO operations.
    Conjecture {
        #[arg(long)]
        omega: String,
    },
    /// Check the variety's identities for the operations.
    Verify {
        /// Work modulo this variety's identities (binary-product operations only).
        #[arg(long)]
        modulo: Option<String>,
    },
    /// Run a built-in experiment and check its expected numbers.
    Reproduce {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(EXPERIMENTS))]
        name: String,
    },
}

fn load_ops(arg: Option<&str>) -> Result<OpsSpec, Error> {
    let arg = arg.ok_or_else(|| Error::Malformed("--ops is required".into()))?;
    if Path::new(arg).is_file() {
        let text =
            std::fs::read_to_string(arg).map_err(|e| Error::Malformed(format!("{arg}: {e}")))?;
        OpsSpec::parse(&text)
    } else {
        OpsSpec::from_builtin(arg)
    }
}

fn load_variety(arg: &str) -> Result<VarietySpec, Error> {
    if Path::new(arg).is_file() {
        let text =
            std::fs::read_to_string(arg).map_err(|e| Error::Malformed(format!("{arg}: {e}")))?;
        VarietySpec::parse(&text)
    } else {
        builtin(arg)
    }
}

fn need_degree(d: Option<usize>) -> Result<usize, Error> {
    d.ok_or_else(|| Error::Malformed("--degree is required".into()))
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let field = match cli.field {
        FieldKind::Prime => FieldTag::Prime(cli.modulus),
        FieldKind::Rational => FieldTag::Rational,
    };
    let variety = cli.variety.as_deref().map(load_variety).transpose()?;
    let need_variety = || {
        variety
            .as_ref()
            .ok_or_else(|| Error::Malformed("--variety is required".into()))
    };
    match &cli.command {
        Command::Expand => commands::expand(
            field,
            &load_ops(cli.ops.as_deref())?,
            need_degree(cli.degree)?,
        ),
        Command::Identities => commands::identities(
            field,
            &load_ops(cli.ops.as_deref())?,
            need_degree(cli.degree)?,
        ),
        Command::Generators => {
            let seeds = variety.as_ref().map(VarietySpec::polys).unwrap_or_default();
            commands::generators(
                field,
                &load_ops(cli.ops.as_deref())?,
                need_degree(cli.degree)?,
                &seeds,
            )
        }
        Command::Kp => commands::kp(need_variety()?),
        Command::Bso { omega } => commands::bso_command(&GroupAlgebraOp::parse(omega)?),
        Command::Conjecture { omega } => commands::conjecture(
            field,
            &GroupAlgebraOp::parse(omega)?,
            need_degree(cli.degree)?,
        ),
        Command::Verify { modulo } => {
            let modulo = modulo.as_deref().map(load_variety).transpose()?;
            commands::verify(
                field,
                need_variety()?,
                &load_ops(cli.ops.as_deref())?,
                modulo.as_ref(),
            )
        }
        Command::Reproduce { name } => {
            let cfg = ExperimentConfig {
                field,
                seed: cli.seed,
                ..ExperimentConfig::default()
            };
            run_experiment(name, &cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var(THREADS_VAR)
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match run(&cli) {
        Ok(report) => {
            let text = match cli.output {
                Output::Json => report.to_json() + "\n",
                Output::Tsv => report.to_tsv(),
            };
            if std::io::stdout().lock().write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                for c in report.failed_checks() {
                    eprintln!(
                        "check failed: {}: expected {}, got {}",
                        c.name, c.expected, c.actual
                    );
                }
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Unknown(_) | Error::Malformed(_) | Error::Parse { .. } => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}
