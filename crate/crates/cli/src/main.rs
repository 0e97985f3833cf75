use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lcd_cli::{cmd_classify, cmd_covers, cmd_dmax, cmd_table, cmd_we, ClassifyArgs, CliError, Sink, EXIT_MISMATCH};
use lcd_core::Strategy;

/// Binary LCD codes: largest minimum weights, constructions and classification.
#[derive(Parser)]
#[command(name = "lcd", version)]
struct Cli {
    /// Worker threads for classification (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    /// Grow parity-check matrices column by column.
    Columns,
    /// Enumerate sorted rows of A in (I_k | A).
    Rows,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Columns => Strategy::ColumnAugmentation,
            StrategyArg::Rows => Strategy::OrderedRows,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print d(n, k) and where it comes from.
    Dmax {
        n: usize,
        k: usize,
        /// Also classify the optimal codes and print them.
        #[arg(long)]
        classify: bool,
        #[arg(long, value_enum, default_value = "columns")]
        strategy: StrategyArg,
    },
    /// Classify LCD [n, k, >= d] codes (d defaults to d(n, k)).
    Classify {
        n: usize,
        k: usize,
        d: Option<usize>,
        #[arg(long, value_enum, default_value = "columns")]
        strategy: StrategyArg,
        /// Write the codes to FILE instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the table of (d(n, k), N) for 2 <= k < n <= nmax.
    Table {
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        /// Mark each cell against the published values; exit 2 on mismatch.
        #[arg(long)]
        compare: bool,
        #[arg(long, value_enum, default_value = "columns")]
        strategy: StrategyArg,
    },
    /// Count disordered k-covers of an m-set.
    Covers {
        m: usize,
        k: usize,
        /// Also export the cover code of every cover.
        #[arg(long)]
        emit_codes: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Weight enumerator and LCD test for a generator matrix.
    We {
        /// A file with one row per line, or the rows themselves.
        #[arg(required = true, value_name = "FILE|ROWS")]
        input: Vec<String>,
    },
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<ExitCode, CliError> {
    let mut err = io::stderr();
    match cli.command {
        Command::Dmax { n, k, classify, strategy } => cmd_dmax(out, n, k, classify, strategy.into())?,
        Command::Classify { n, k, d, strategy, out: file, json } => {
            let args = ClassifyArgs { n, k, d, strategy: strategy.into(), json, sink: Sink::new(file) };
            cmd_classify(out, &mut err, &args)?
        }
        Command::Table { nmax, compare, strategy } => {
            if !cmd_table(out, nmax, compare, strategy.into())? {
                return Ok(ExitCode::from(EXIT_MISMATCH as u8));
            }
        }
        Command::Covers { m, k, emit_codes, json, out: file } => {
            cmd_covers(out, m, k, emit_codes, json, &Sink::new(file))?
        }
        Command::We { input } => cmd_we(out, &input)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap uses 2 for usage errors; 2 is reserved for table mismatches
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if cli.jobs == Some(0) {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(1);
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let stdout = io::stdout();
    let result = pool.install(|| run(cli, &mut stdout.lock()));
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
