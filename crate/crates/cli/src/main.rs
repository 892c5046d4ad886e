//! `demazure`: crystals, Keys, Demazure crystals, cores and multisegments from the
//! command line.
//!
//! Exit status is 0 on success, 2 when a yes/no question is answered "no" and 1 on
//! any error.

mod commands;
mod job;
mod view;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::job::Family;
use crate::view::Realization;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] demazure_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("key methods disagree: {0}")]
    Disagreement(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KeyMethod {
    Dilatation,
    Reduction,
    Specialized,
    /// Run every available method and require agreement.
    Crosscheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    #[value(name = "ascii-abacus")]
    Abacus,
    #[value(name = "pretty-tableau")]
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MembershipMethod {
    Lists,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SegmentAction {
    Embed,
    Aperiodic,
    Member,
    AnyCharge,
    Demazure,
    RoundTrip,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RealizationArg {
    Uglov,
    Kleshchev,
}

#[derive(Parser)]
#[command(name = "demazure", version, about = "Crystals, Keys and Demazure crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Cartan type: A:n, C:n, A~:e or A~:inf.
    #[arg(long = "type", default_value = "A~:inf")]
    family: String,
    /// Highest weight coefficients on the fundamental weights.
    #[arg(long)]
    weight: Option<String>,
    /// Multicharge s = (s_1,...,s_l).
    #[arg(long)]
    charges: Option<String>,
    /// Weyl word, letters separated by commas; `e` is the empty word.
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    rank_bound: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, value_enum, default_value = "uglov")]
    realization: RealizationArg,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

impl Common {
    fn family(&self) -> Result<Family, CliError> {
        Family::parse(&self.family)
    }

    fn view(&self) -> Result<view::AnyView, CliError> {
        let r = match self.realization {
            RealizationArg::Uglov => Realization::Uglov,
            RealizationArg::Kleshchev => Realization::Kleshchev,
        };
        view::build(self.family()?, self.weight.as_deref(), self.charges.as_deref(), r, self.rank_bound)
    }

    fn charges(&self) -> Result<Option<Vec<i64>>, CliError> {
        self.charges.as_deref().map(|s| job::int_list(s, "charges")).transpose()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate the crystal graph of the highest weight.
    Crystal {
        #[command(flatten)]
        common: Common,
    },
    /// Left and right Keys of one vertex or of every vertex.
    Key {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "all")]
        vertex: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "dilatation")]
        method: KeyMethod,
    },
    /// Enumerate a Demazure crystal, or test membership of --vertex.
    Demazure {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Test, list or order (e,s)-cores.
    Core {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        vertex: Option<String>,
        #[arg(long)]
        lattice: bool,
        /// Level one Key with its Bruhat steps.
        #[arg(long)]
        key: bool,
    },
    /// Multisegment embedding and orbit membership.
    Multisegment {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        action: SegmentAction,
        #[arg(long)]
        multisegment: Option<String>,
        #[arg(long)]
        vertex: Option<String>,
        #[arg(long)]
        level: Option<usize>,
        #[arg(long, value_enum, default_value = "exact")]
        method: MembershipMethod,
    },
}

fn run(cmd: Command) -> Result<(commands::Output, Option<PathBuf>), CliError> {
    let (out, common) = match cmd {
        Command::Crystal { common } => {
            let v = common.view()?;
            (on_view!(&v, x => commands::crystal(x, common.rank_bound, common.format))?, common)
        }
        Command::Key { common, vertex, all, method } => {
            let v = common.view()?;
            let out = on_view!(&v, x => commands::key(
                x, vertex.as_deref(), all, method, common.rank_bound, common.format
            ))?;
            (out, common)
        }
        Command::Demazure { common, vertex } => {
            let v = common.view()?;
            let w = job::word(common.word.as_deref())?;
            (on_view!(&v, x => commands::demazure(x, &w, vertex.as_deref(), common.format))?, common)
        }
        Command::Core { common, vertex, lattice, key } => {
            let out = commands::core(
                common.family()?,
                &common.charges()?.unwrap_or_default(),
                vertex.as_deref(),
                lattice,
                key,
                common.rank_bound,
                common.format,
            )?;
            (out, common)
        }
        Command::Multisegment { common, action, multisegment, vertex, level, method } => {
            let out = commands::multisegment(commands::SegmentJob {
                family: common.family()?,
                action,
                charges: common.charges()?,
                multisegment: multisegment.as_deref(),
                vertex: vertex.as_deref(),
                level,
                word: common.word.as_deref(),
                method,
                rank_bound: common.rank_bound,
            })?;
            (out, common)
        }
    };
    Ok((out, common.output))
}

fn configure_threads() {
    if let Some(n) = std::env::var("DEMAZURE_THREADS").ok().and_then(|s| s.parse().ok()) {
        // Only fails if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, path)) => {
            let written = match path {
                Some(p) => std::fs::write(p, &out.text),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {}", CliError::from(e));
                return ExitCode::from(1);
            }
            if out.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
