mod commands;
mod repl;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qheis_core::interface::Style;
use qheis_core::verify::{run_suite, Selection, DEFAULT_K};

use commands::{Failure, Outcome};

/// Exact normal forms, confluence checks and verification for q-deformed
/// Heisenberg algebras.
#[derive(Parser, Debug)]
#[command(name = "qheis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// Catalog id (see `families`) or path to a presentation file.
    #[arg(long)]
    algebra: String,
    /// Family parameter, repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of an expression.
    Normalize {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        expr: String,
        /// Print every rule application.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value = "plain", value_parser = ["plain", "latex", "json"])]
        format: String,
    },
    /// Normal form of the commutator [a, b].
    Commutator {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value = "plain", value_parser = ["plain", "latex", "json"])]
        format: String,
    },
    /// Run the verification corpus.
    Verify {
        /// `all`, a family id, or comma-separated case ids.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<std::path::PathBuf>,
        /// Highest power checked by the power identities.
        #[arg(long, default_value_t = DEFAULT_K)]
        k: u32,
    },
    /// Resolve all critical pairs up to a bounded overlap length.
    Confluence {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 6)]
        max_overlap: usize,
    },
    /// Twist and derivation table for an Ore tower.
    Ore {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Generators in adjunction order, comma separated.
        #[arg(long)]
        tower: String,
    },
    /// List the catalog families and their parameters.
    Families,
    /// Interactive session.
    Repl {
        #[arg(long, default_value = "classical")]
        algebra: String,
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
}

fn style(s: &str) -> Style {
    s.parse().unwrap_or_default()
}

fn with_algebra(
    args: &AlgebraArgs,
    f: impl FnOnce(&qheis_core::Presentation) -> Outcome,
) -> Outcome {
    let params = commands::parse_params(&args.params)?;
    f(&commands::load_algebra(&args.algebra, &params)?)
}

fn verify(suite: &str, report: Option<&std::path::Path>, k: u32) -> Outcome {
    let rep = run_suite(&Selection::parse(suite), k)?;
    if let Some(path) = report {
        std::fs::write(path, rep.to_json() + "\n")
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let table = rep.to_table();
    if rep.all_expected() {
        Ok(table)
    } else {
        Err(Failure::Verification(table))
    }
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Normalize {
            algebra,
            expr,
            trace,
            format,
        } => with_algebra(&algebra, |p| commands::normalize(p, &expr, trace, style(&format))),
        Command::Commutator {
            algebra,
            a,
            b,
            format,
        } => with_algebra(&algebra, |p| commands::commutator(p, &a, &b, style(&format))),
        Command::Verify { suite, report, k } => verify(&suite, report.as_deref(), k),
        Command::Confluence {
            algebra,
            max_overlap,
        } => with_algebra(&algebra, |p| commands::confluence(p, max_overlap)),
        Command::Ore { algebra, tower } => with_algebra(&algebra, |p| commands::ore(p, &tower)),
        Command::Families => Ok(commands::families()),
        Command::Repl { algebra, params } => {
            let params = commands::parse_params(&params)?;
            repl::run(&algebra, params)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Verification(out) => print!("{out}"),
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Engine(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
