use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "floorq",
    version,
    about = "Query and survey the a-floor quotient orders"
)]
pub struct Cli {
    /// Output format (default: plain, or csv for `survey`).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test whether d ≼_a n (exit 0 if true, 1 if false).
    Check(CheckArgs),
    /// List the elements of the interval Q_a[d, n].
    Interval(IntervalArgs),
    /// Print the set of all a with d ≼_a n.
    Scaling(PairArgs),
    /// Print the generators, Frobenius number and genus of M_a(d).
    Semigroup(SemigroupArgs),
    /// Count the a-floor multiples of d up to x.
    Sigma(SigmaArgs),
    /// Print the Möbius value μ_a(d, n).
    Moebius(MoebiusArgs),
    /// Emit per-n interval sizes and stabilization thresholds.
    Survey(SurveyArgs),
    /// Compare the average of |Q_a[1, n]| over n <= x with (4/3)√(x/a).
    Average(AverageArgs),
    /// Print the small/medium/large heuristic counts for Q_a[1, n].
    Heuristic(HeuristicArgs),
}

#[derive(Debug, Args)]
pub struct Triple {
    #[arg(short = 'a', value_parser = positive)]
    pub a: u64,
    #[arg(short = 'd', value_parser = positive)]
    pub d: u64,
    #[arg(short = 'n', value_parser = positive)]
    pub n: u64,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub triple: Triple,
    /// Also print every characterization and the cutting lengths.
    #[arg(long)]
    pub explain: bool,
}

#[derive(Debug, Args)]
pub struct IntervalArgs {
    #[command(flatten)]
    pub triple: Triple,
    /// Also print every related pair e ≼_a f with e < f.
    #[arg(long)]
    pub relations: bool,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(short = 'd', value_parser = positive)]
    pub d: u64,
    #[arg(short = 'n', value_parser = positive)]
    pub n: u64,
}

#[derive(Debug, Args)]
pub struct SemigroupArgs {
    #[arg(short = 'a', value_parser = positive)]
    pub a: u64,
    #[arg(short = 'd', value_parser = positive)]
    pub d: u64,
}

#[derive(Debug, Args)]
pub struct SigmaArgs {
    #[arg(short = 'a', value_parser = positive)]
    pub a: u64,
    #[arg(short = 'd', value_parser = positive)]
    pub d: u64,
    #[arg(short = 'x', value_parser = natural)]
    pub x: u64,
}

#[derive(Debug, Args)]
pub struct MoebiusArgs {
    #[command(flatten)]
    pub triple: Triple,
    /// Print μ_a(d, e) for every e in Q_a[d, n].
    #[arg(long)]
    pub table: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColumnGroup {
    Sizes,
    Thresholds,
    Ratios,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    #[arg(short = 'a', value_parser = positive, default_value = "1")]
    pub a: u64,
    /// Largest n to survey.
    #[arg(short = 'N', value_parser = positive)]
    pub n_max: u64,
    /// Column groups, comma separated (default: sizes).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub columns: Vec<ColumnGroup>,
    /// Shorthand for `--columns thresholds`.
    #[arg(long)]
    pub thresholds: bool,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, value_parser = positive)]
    pub jobs: Option<u64>,
}

#[derive(Debug, Args)]
pub struct AverageArgs {
    #[arg(short = 'a', value_parser = positive)]
    pub a: u64,
    #[arg(short = 'x', value_parser = positive)]
    pub x: u64,
    #[arg(long, value_parser = positive)]
    pub jobs: Option<u64>,
}

#[derive(Debug, Args)]
pub struct HeuristicArgs {
    #[arg(short = 'a', value_parser = positive)]
    pub a: u64,
    #[arg(short = 'n', value_parser = positive)]
    pub n: u64,
    /// Also run this many trials of the random-residue model.
    #[arg(long, value_parser = positive)]
    pub simulate: Option<u64>,
    #[arg(long, value_parser = natural, default_value = "0")]
    pub seed: u64,
}

/// Parses a non-negative integer written with ASCII digits only.
pub fn natural(s: &str) -> Result<u64, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not a non-negative integer"));
    }
    s.parse()
        .map_err(|_| format!("`{s}` does not fit in a 64-bit unsigned integer"))
}

pub fn positive(s: &str) -> Result<u64, String> {
    match natural(s)? {
        0 => Err("must be a positive integer".to_string()),
        v => Ok(v),
    }
}
