//! `rainbow`: construct, verify and search rainbow cycles in flip graphs.
//!
//! Exit status: 0 success or found, 1 a check rejected its input,
//! 10 proven none, 11 parity refusal, 12 budget ran out, 64 and up for
//! usage, data, internal and I/O errors.

mod commands;
mod output;
mod repro;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rainbow_core::Error;

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Rainbow cycles in flip graphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Print JSON instead of text.
    #[arg(long, global = true, conflicts_with = "dot")]
    pub json: bool,
    /// Print Graphviz DOT of the cycle.
    #[arg(long, global = true)]
    pub dot: bool,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
    /// Cap on search nodes.
    #[arg(long, global = true)]
    pub budget_nodes: Option<u64>,
    /// Cap on search wall-clock time.
    #[arg(long, global = true)]
    pub budget_seconds: Option<f64>,
    /// Point-set file: one `x y` integer pair per line, `#` comments.
    #[arg(long, global = true)]
    pub points: Option<PathBuf>,
}

impl Global {
    pub fn time_budget(&self) -> Option<Duration> {
        self.budget_seconds.map(Duration::from_secs_f64)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Triangulations of a convex polygon.
    Triang {
        #[command(subcommand)]
        action: TriangCmd,
    },
    /// Plane spanning trees of a point set.
    Trees {
        #[command(subcommand)]
        action: TreesCmd,
    },
    /// Non-crossing perfect matchings.
    Match {
        #[command(subcommand)]
        action: MatchCmd,
    },
    /// Permutations under transpositions.
    Perm {
        #[command(subcommand)]
        action: PermCmd,
    },
    /// k-subsets under element exchange.
    Comb {
        #[command(subcommand)]
        action: CombCmd,
    },
    /// Re-check a cycle file independently of how it was made.
    Verify {
        /// Cycle JSON, or `-` for stdin.
        file: PathBuf,
    },
    /// Exhaustive search for an r-rainbow cycle in any family.
    Search(SearchArgs),
    /// Run every acceptance check and write one manifest per criterion.
    Repro {
        /// Directory for the manifests.
        #[arg(long, default_value = "manifests")]
        out: PathBuf,
        /// Skip the long m = 10 matching proof.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum TriangCmd {
    Rainbow {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
        r: u32,
        /// Run the r = 2 star-to-star walk below n = 7 too.
        #[arg(long)]
        experimental: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum TreesCmd {
    Rainbow {
        #[arg(long)]
        r: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum MatchCmd {
    /// Structure of the centered-flip graph H_m.
    Hm {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        components: bool,
        #[arg(long)]
        classes: bool,
        #[arg(long)]
        check_narayana: bool,
    },
    /// The explicit cycles for (2,1), (4,1), (6,2) and (8,2).
    Rainbow {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: usize,
    },
    /// Exhaustive search; r = 1 goes component by component through H_m.
    Search {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Time budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PermCmd {
    Rainbow {
        #[arg(long)]
        n: u32,
        /// Start permutation, as `2,1,3,4` or `2134`.
        #[arg(long)]
        start: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CombCmd {
    Rainbow {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// All rainbow sequences for n = 2l + 1.
    Enumerate {
        #[arg(long)]
        ell: u32,
    },
    /// Edge-disjoint cycles from rainbow sequences.
    Disjoint {
        #[arg(long)]
        ell: u32,
        /// Largest pairwise edge-disjoint family instead of one pair.
        #[arg(long)]
        max: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Triangulation,
    Tree,
    Matching,
    Permutation,
    Subset,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Polygon size, ground set size or number of points.
    #[arg(long)]
    pub n: Option<u32>,
    /// Matching size.
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
}

/// Exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Rejected = 1,
    NoneFound = 10,
    Parity = 11,
    Inconclusive = 12,
    Usage = 64,
    Data = 65,
    Internal = 70,
    Io = 74,
}

/// A failure carrying its exit status.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn new(status: Status, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }

    pub fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        Failure::new(Status::Io, format!("{}: {e}", path.display()))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parity(_) => Status::Parity,
            Error::InvalidParameter(_) | Error::Unsupported(_) => Status::Usage,
            Error::IllegalFlip(_) | Error::Construction(_) => Status::Internal,
            _ => Status::Data,
        };
        Failure::new(status, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Status::Usage as u8 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(f) => {
            eprintln!("rainbow: {}", f.message);
            ExitCode::from(f.status as u8)
        }
    }
}
