use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use bibracket::runner::{run_file, Command, RunError, RunOptions};
use bibracket::specfile::SpecError;

/// Exact-arithmetic checker for graded double brackets.
///
/// Reads a spec file describing an algebra with a bibracket table (and
/// optionally Hopf data, a moment element, a reduction target, or a Lie
/// algebra) and verifies the relevant axioms over the rationals.
///
/// Exit codes: 0 all checks passed, 1 some check failed, 2 the spec
/// could not be read or is missing a required section.
#[derive(Parser)]
#[command(name = "bibracket", version, about, max_term_width = 80)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Spec file to check
    spec: PathBuf,

    /// Sweep words up to this length
    #[arg(long, default_value_t = 4)]
    maxlen: usize,

    /// Seed for the randomized sweeps
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Emit the report as JSON instead of text
    #[arg(long)]
    json: bool,

    /// Matrix size for representation checks
    #[arg(long = "N", default_value_t = 2)]
    n: usize,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Check the bibracket axioms (degree, antisymmetry, Leibniz,
    /// tribracket, associated bracket)
    CheckBibracket(CommonArgs),
    /// Check the induced bracket on representation algebras
    CheckRepalg(CommonArgs),
    /// Check the Hopf axioms, the scalar form, and reducibility
    CheckHopf(CommonArgs),
    /// Check the moment element identities
    CheckMoment(CommonArgs),
    /// Compute the reduced bracket table and check it
    Reduce(CommonArgs),
    /// Check a graded Lie algebra: PBW rewriting and its
    /// representation presentation
    CheckLie(CommonArgs),
    /// Run every check the spec has sections for
    All(CommonArgs),
}

impl CliCommand {
    fn split(&self) -> (Command, &CommonArgs) {
        match self {
            CliCommand::CheckBibracket(a) => (Command::CheckBibracket, a),
            CliCommand::CheckRepalg(a) => (Command::CheckRepalg, a),
            CliCommand::CheckHopf(a) => (Command::CheckHopf, a),
            CliCommand::CheckMoment(a) => (Command::CheckMoment, a),
            CliCommand::Reduce(a) => (Command::Reduce, a),
            CliCommand::CheckLie(a) => (Command::CheckLie, a),
            CliCommand::All(a) => (Command::All, a),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, args) = cli.command.split();
    let opts = RunOptions {
        maxlen: args.maxlen,
        seed: args.seed,
        n: args.n,
    };
    let start = Instant::now();
    match run_file(&args.spec, cmd, &opts) {
        Ok(report) => {
            if args.json {
                println!("{}", report.to_json());
            } else {
                println!("{}", report.render_text(start.elapsed()));
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let what = match &e {
                RunError::Spec(SpecError::Io { .. }) => "cannot read spec",
                RunError::Spec(_) => "bad spec",
                RunError::Model(_) => "model error",
            };
            eprintln!("bibracket: {what}: {e}");
            ExitCode::from(2)
        }
    }
}
