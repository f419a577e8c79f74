use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use arraybeam_cli::config::{parse_config, ScaleFlag, UnitsFlag, Workflow};
use arraybeam_cli::error::CliError;
use arraybeam_cli::workflows;

/// Phased-array simulation toolkit: far-field sweeps, phase optimization,
/// gain patterns and deployment verification.
///
/// Exit codes: 0 success, 2 config parse error, 3 validation error,
/// 4 degenerate geometry, 5 i/o failure, 1 other.
#[derive(Parser)]
#[command(name = "arraybeam", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map the receiver intensity over the (k1, k2) phase parameters.
    Sweep(CommonArgs),
    /// Compute the in-phase (maximum-intensity) phase set for the receiver.
    Optimize(CommonArgs),
    /// Sample the directional gain pattern on a circle around the array.
    Pattern(CommonArgs),
    /// Check a perturbed deployment against the nominal phase design.
    Verify(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Configuration document (TOML; see docs/config.md).
    #[arg(long)]
    config: PathBuf,
    /// Output directory (overrides `out_dir` from the config).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Heatmap scale (overrides `scale` from the config).
    #[arg(long, value_enum)]
    scale: Option<ScaleArg>,
    /// Output units (overrides `units` from the config).
    #[arg(long, value_enum)]
    units: Option<UnitsArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Linear,
    Log10,
}

#[derive(Clone, Copy, ValueEnum)]
enum UnitsArg {
    Af,
    Si,
}

fn run(workflow: Workflow, args: &CommonArgs) -> Result<Vec<PathBuf>, CliError> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| CliError::io(args.config.clone(), e))?;
    let mut config = parse_config(&text, Some(workflow))?;
    if let Some(out) = &args.out {
        config.out_dir = out.clone();
    }
    if let Some(scale) = args.scale {
        config.scale = match scale {
            ScaleArg::Linear => ScaleFlag::Linear,
            ScaleArg::Log10 => ScaleFlag::Log10,
        };
    }
    if let Some(units) = args.units {
        config.units = match units {
            UnitsArg::Af => UnitsFlag::ArrayFactor,
            UnitsArg::Si => UnitsFlag::Si,
        };
    }
    workflows::run(&config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (workflow, args) = match &cli.command {
        Command::Sweep(a) => (Workflow::Sweep, a),
        Command::Optimize(a) => (Workflow::Optimize, a),
        Command::Pattern(a) => (Workflow::Pattern, a),
        Command::Verify(a) => (Workflow::Verify, a),
    };
    match run(workflow, args) {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
