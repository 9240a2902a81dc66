use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use trunkit::suite::Suite;
use trunkit_cli::commands::{self, Mode, Output, SourcesArgs, TruncateArgs, VerifyArgs};
use trunkit_cli::CliError;

/// Generalized truncations of multigraphs.
///
/// Exact searches refuse inputs above their caps. Set TRUNKIT_CAP_OVERRIDE
/// (e.g. `hamilton=60,canonical=20` or `unlimited`) to raise them; searches
/// may then run long.
#[derive(Parser)]
#[command(name = "trunkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Complete,
    Paths,
    Matching,
    Tree,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Source,
    Conn,
    Euler,
    Ham,
    Hamdecomp,
    Color,
    Planar,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Build a truncation of the graph in INPUT and print it as a truncation file.
    Truncate {
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Constituent edge probability for --mode random.
        #[arg(long)]
        density: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Also write a DOT drawing to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List the sources of the graph in INPUT as JSON.
    Sources {
        input: PathBuf,
        /// Only sources that are graphs (no parallel edges).
        #[arg(long)]
        graph_only: bool,
        /// Also list the coarsenings of each source.
        #[arg(long)]
        coarsen: bool,
    },
    /// Run a verification suite and print the reports as JSON.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Comma separated catalog names; the whole catalog by default.
        #[arg(long, value_delimiter = ',')]
        catalog: Vec<String>,
        #[arg(long, default_value_t = 5)]
        seeds: u64,
        /// Check one truncation file instead of the catalog.
        #[arg(long)]
        truncation: Option<PathBuf>,
    },
    /// Print a truncation file as Graphviz DOT.
    ExportDot { input: PathBuf },
    /// List the catalog, or print one catalog graph as a graph file.
    Catalog { name: Option<String> },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Truncate {
            input,
            mode,
            density,
            seed,
            dot,
        } => commands::truncate(&TruncateArgs {
            input,
            mode: match mode {
                ModeArg::Complete => Mode::Complete,
                ModeArg::Paths => Mode::Paths,
                ModeArg::Matching => Mode::Matching,
                ModeArg::Tree => Mode::Tree,
                ModeArg::Random => Mode::Random,
            },
            density,
            seed,
            dot,
        }),
        Command::Sources {
            input,
            graph_only,
            coarsen,
        } => commands::sources(&SourcesArgs {
            input,
            graph_only,
            coarsen,
        }),
        Command::Verify {
            suite,
            catalog,
            seeds,
            truncation,
        } => commands::verify(&VerifyArgs {
            suite: match suite {
                SuiteArg::Source => Suite::Source,
                SuiteArg::Conn => Suite::Conn,
                SuiteArg::Euler => Suite::Euler,
                SuiteArg::Ham => Suite::Ham,
                SuiteArg::Hamdecomp => Suite::HamDecomp,
                SuiteArg::Color => Suite::Color,
                SuiteArg::Planar => Suite::Planar,
                SuiteArg::All => Suite::All,
            },
            catalog,
            seeds,
            truncation,
        }),
        Command::ExportDot { input } => commands::export_dot(&input),
        Command::Catalog { name } => commands::catalog(name.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            let _ = std::io::stderr().write_all(out.stderr.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
