use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use multistar::enumerate::DEFAULT_BUDGET;
use multistar::Error;

mod commands;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_SAMPLES: u64 = 100_000;
pub const INTERVAL_SCAN_LIMIT: usize = 40;
pub const CONJECTURE_SCAN_LIMIT: usize = 64;

#[derive(Parser, Debug)]
#[command(
    name = "multistar",
    version,
    about = "Face statistics of random orientable embeddings"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact face distribution of a multistar, e.g. `--partition "5 4^3 2^2"`.
    Exact {
        #[arg(long)]
        partition: String,
    },
    /// Work with a multigraph read from an edge-list file.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Scan partitions or graph families and stream CSV rows.
    Scan {
        #[arg(value_enum)]
        kind: ScanKind,
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
        /// Samples per row (conjecture scan only).
        #[arg(long, default_value_t = 2_000)]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum GraphAction {
    /// Monte Carlo estimate of the expected face count.
    Sample {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Exact face distribution by enumerating every rotation system.
    Brute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Degree-based upper bounds and an optional cycle-family lower bound.
    Bounds {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "order-file")]
        order_file: Option<PathBuf>,
        #[arg(long = "cycles-file")]
        cycles_file: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanKind {
    Interval,
    Conjecture,
}

/// Everything that determines a run's output.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub format: Format,
    pub partition: Option<String>,
    pub input: Option<String>,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
    pub max_n: Option<usize>,
    pub order_file: Option<String>,
    pub cycles_file: Option<String>,
}

impl RunConfig {
    fn new(command: &str, format: Format) -> Self {
        RunConfig {
            command: command.to_string(),
            format,
            partition: None,
            input: None,
            samples: None,
            seed: None,
            budget: None,
            max_n: None,
            order_file: None,
            cycles_file: None,
        }
    }
}

fn path_string(p: &std::path::Path) -> String {
    p.display().to_string()
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_) | Error::InvalidGraph(_) => 2,
        Error::BudgetExceeded { .. } | Error::ScanLimit { .. } => 3,
        Error::Disconnected { .. } | Error::Precondition(_) | Error::OutOfRange(_) => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = match cli.command {
        Command::Exact { partition } => {
            let mut config = RunConfig::new("exact", format);
            config.partition = Some(partition.clone());
            commands::exact(&config, &partition)
        }
        Command::Graph { action } => match action {
            GraphAction::Sample {
                input,
                samples,
                seed,
            } => {
                let mut config = RunConfig::new("graph sample", format);
                config.input = Some(path_string(&input));
                config.samples = Some(samples);
                config.seed = Some(seed);
                commands::sample(&config, &input, samples, seed)
            }
            GraphAction::Brute { input, budget } => {
                let mut config = RunConfig::new("graph brute", format);
                config.input = Some(path_string(&input));
                config.budget = Some(budget);
                commands::brute(&config, &input, budget)
            }
            GraphAction::Bounds {
                input,
                order_file,
                cycles_file,
            } => {
                let mut config = RunConfig::new("graph bounds", format);
                config.input = Some(path_string(&input));
                config.order_file = order_file.as_deref().map(path_string);
                config.cycles_file = cycles_file.as_deref().map(path_string);
                commands::bounds(
                    &config,
                    &input,
                    order_file.as_deref(),
                    cycles_file.as_deref(),
                )
            }
        },
        Command::Scan {
            kind,
            max_n,
            samples,
            seed,
        } => {
            let mut config = RunConfig::new(
                match kind {
                    ScanKind::Interval => "scan interval",
                    ScanKind::Conjecture => "scan conjecture",
                },
                format,
            );
            config.max_n = Some(max_n);
            match kind {
                ScanKind::Interval => commands::scan_interval(&config, max_n),
                ScanKind::Conjecture => {
                    config.samples = Some(samples);
                    config.seed = Some(seed);
                    commands::scan_conjecture(&config, max_n, samples, seed)
                }
            }
        }
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
