//! `mstt check|eval|extract <file>`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mstt::{commands, CliError, Options, TheoryChoice};

#[derive(Parser)]
#[command(name = "mstt", version, about = "Type-check, evaluate and extract multimode programs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the type of every def.
    Check(Common),
    /// Print the value of a def at a stage or object.
    Eval(Common),
    /// Print the host value of a def at the trivial mode.
    Extract(Common),
}

#[derive(Args)]
struct Common {
    file: PathBuf,
    #[arg(long = "mode-theory", value_enum, default_value = "g")]
    mode_theory: TheoryChoice,
    /// Def to evaluate or extract; defaults to the last one.
    #[arg(long)]
    name: Option<String>,
    /// Stage for defs at the mode of time steps.
    #[arg(long)]
    stage: Option<u32>,
    /// Object (left, right or relation) for defs at the relational mode.
    #[arg(long)]
    object: Option<String>,
    /// Number of stream elements to print.
    #[arg(long)]
    take: Option<u64>,
}

fn run(cli: Cli) -> Result<String, (String, CliError)> {
    let (common, which) = match cli.command {
        Command::Check(c) => (c, 0),
        Command::Eval(c) => (c, 1),
        Command::Extract(c) => (c, 2),
    };
    let src = std::fs::read_to_string(&common.file).map_err(|source| {
        let path = common.file.display().to_string();
        (String::new(), CliError::Io { path, source })
    })?;
    let inst = common.mode_theory.instantiation();
    let opts = Options { name: common.name, stage: common.stage, object: common.object, take: common.take };
    let mut out = String::new();
    let r = match which {
        0 => commands::check(&inst, &src, &mut out),
        1 => commands::eval(&inst, &src, &opts, &mut out),
        _ => commands::extract(&inst, &src, &opts, &mut out),
    };
    match r {
        Ok(()) => Ok(out),
        Err(e) => Err((out, e)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::FAILURE } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, e)) => {
            print!("{out}");
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
