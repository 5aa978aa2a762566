//! `hashfam`: construct, verify and tabulate hash families.
//!
//! Exit codes: 0 on success, 1 when a checked property fails (a one-line
//! witness is printed), 2 on usage or input errors.

mod commands;
mod recipes;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "hashfam",
    version,
    about = "Perfect and distributing hash families"
)]
struct Cli {
    /// Worker threads for verification (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family (or covering array) from a recipe.
    Construct(recipes::ConstructArgs),
    /// Check a family, covering or covering array.
    Verify(commands::VerifyArgs),
    /// Run the cheap necessary conditions on a family.
    Bounds(commands::BoundsArgs),
    /// Column replacement: family + covering array(s) -> covering array.
    ComposeCa(commands::ComposeArgs),
    /// Maintain the best-known parameter table.
    Tables(commands::TablesArgs),
}

/// Result of a command that ran to completion.
pub enum Outcome {
    Success,
    Violation,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not errors
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Construct(args) => recipes::run(args),
        Command::Verify(args) => commands::verify(args),
        Command::Bounds(args) => commands::bounds(args),
        Command::ComposeCa(args) => commands::compose_ca(args),
        Command::Tables(args) => commands::tables(args),
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
