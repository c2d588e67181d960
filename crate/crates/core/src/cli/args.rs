use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ascpat",
    version,
    about = "Pattern avoidance in ascent sequences: counts, distributions, bijections and checks"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Jsonl,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads for prefix-split counting.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,
    /// Wall-clock budget; enumeration stops cleanly and reports partial
    /// results once it is spent.
    #[arg(long, global = true, default_value_t = 300)]
    pub budget_seconds: u64,
    /// Largest length accepted without refusal.
    #[arg(long, global = true, default_value_t = 16)]
    pub max_n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count avoiders for each length in a range.
    Count(CountArgs),
    /// List the members of a set, lexicographically.
    List(ListArgs),
    /// Histogram of one or more statistics.
    Dist(DistArgs),
    /// Apply a bijection (or its inverse) to one input.
    Bijection(BijectionArgs),
    /// Group patterns by their avoidance sequences.
    Wilf(WilfArgs),
    /// Recompute the reference counting table and diff it against the
    /// embedded values.
    Table(TableArgs),
    /// Check the conjectures numerically.
    Conjectures(ConjecturesArgs),
}

/// Which set to enumerate. Without a pattern this is all ascent sequences;
/// patterns after the first are applied as filters.
#[derive(Debug, Args)]
pub struct SetArgs {
    /// Pattern as a digit string, e.g. 0102. Repeatable.
    #[arg(long = "pattern", value_name = "DIGITS")]
    pub patterns: Vec<String>,
    /// Test the pattern on the modified form of each ascent sequence.
    #[arg(long)]
    pub modified: bool,
    /// Enumerate permutations avoiding the pattern instead.
    #[arg(long, conflicts_with = "modified")]
    pub perm: bool,
    /// Start from restricted ascent sequences.
    #[arg(long, conflicts_with_all = ["modified", "perm"])]
    pub restricted: bool,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub set: SetArgs,
    /// A length or an inclusive range `a..b`.
    #[arg(long, value_parser = parse_range)]
    pub n: (usize, usize),
}

#[derive(Debug, Args)]
pub struct ListArgs {
    #[command(flatten)]
    pub set: SetArgs,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[command(flatten)]
    pub set: SetArgs,
    #[arg(long)]
    pub n: usize,
    /// Statistics, comma separated: asc, des, lrmax, lrmin, rlmax, rlmin,
    /// zeros, fwd.
    #[arg(long, value_delimiter = ',', default_value = "asc")]
    pub stats: Vec<String>,
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    /// Map name, e.g. seq101-to-perm312, phi, modify.
    #[arg(long)]
    pub name: String,
    #[arg(long, allow_hyphen_values = true)]
    pub input: String,
    /// Apply the inverse map.
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Debug, Args)]
pub struct WilfArgs {
    /// Patterns to classify; defaults to every pattern up to --max-len.
    #[arg(long = "pattern", value_name = "DIGITS")]
    pub patterns: Vec<String>,
    #[arg(long, default_value_t = 4)]
    pub max_len: usize,
    #[arg(long, default_value_t = 9)]
    pub nmax: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 10)]
    pub nmax: usize,
}

#[derive(Debug, Args)]
pub struct ConjecturesArgs {
    /// Conjecture ids: bi-021, 0012, 210, 0123, 0021-wilf, 0021-count,
    /// modi. Defaults to all.
    #[arg(long = "id")]
    pub ids: Vec<String>,
    /// Overrides each conjecture's default length.
    #[arg(long)]
    pub nmax: Option<usize>,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("{t:?} is not a length"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if a == 0 || a > b {
        return Err(format!("{s:?} is not a range a..b with 1 <= a <= b"));
    }
    Ok((a, b))
}
