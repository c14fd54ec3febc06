use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rrcensus::Rank;

#[derive(Debug, Parser)]
#[command(name = "rrcensus", version, about = "Leading terms, embedding census and Rogers-Ramanujan type identities for C_n^(1)")]
pub struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, env = "RRCENSUS_THREADS", value_parser = parse_threads)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weyl dimensions of L(2θ), L(3θ), L(3θ-α*) and their sum.
    Dims(DimsArgs),
    /// Cell patterns of the quadratic leading terms.
    LeadingTerms(LeadingTermsArgs),
    /// Σ N(π) over length three partitions of degree m.
    Census(CensusArgs),
    /// Coefficient-wise check of the product, congruence and difference-condition sides.
    VerifyRr(VerifyArgs),
}

impl Command {
    pub fn out(&self) -> Option<&PathBuf> {
        match self {
            Command::Dims(a) => a.out.as_ref(),
            Command::LeadingTerms(a) => a.out.as_ref(),
            Command::Census(a) => a.out.as_ref(),
            Command::VerifyRr(a) => a.out.as_ref(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[arg(long, value_parser = parse_rank)]
    pub n: Rank,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LeadingTermsArgs {
    #[arg(long, value_parser = parse_rank)]
    pub n: Rank,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("degree").required(true).args(["m", "m_range"])))]
pub struct CensusArgs {
    #[arg(long, value_parser = parse_rank)]
    pub n: Rank,
    /// Degree m <= -3.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_degree)]
    pub m: Option<i32>,
    /// Inclusive range A..B of degrees, all <= -3.
    #[arg(long = "m-range", allow_hyphen_values = true, value_parser = parse_degree_range)]
    pub m_range: Option<RangeInclusive<i32>>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl CensusArgs {
    /// Degrees to run, from the highest down.
    pub fn degrees(&self) -> impl Iterator<Item = i32> {
        let range = match (&self.m, &self.m_range) {
            (Some(m), _) => *m..=*m,
            (None, Some(r)) => r.clone(),
            (None, None) => unreachable!("clap requires --m or --m-range"),
        };
        range.rev()
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_rank)]
    pub n: Rank,
    /// Truncation order N_max >= 1.
    #[arg(long, default_value_t = 40, value_parser = parse_max)]
    pub max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_rank(s: &str) -> Result<Rank, String> {
    let n: u32 = s.parse().map_err(|_| format!("`{s}` is not a rank"))?;
    Rank::new(n).map_err(|e| e.to_string())
}

fn parse_degree(s: &str) -> Result<i32, String> {
    let m: i32 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if m > -3 {
        return Err(format!("degree must be at most -3, got {m}"));
    }
    Ok(m)
}

fn parse_degree_range(s: &str) -> Result<RangeInclusive<i32>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("`{s}` is not a range A..B"))?;
    let (a, b) = (parse_degree(a)?, parse_degree(b)?);
    Ok(a.min(b)..=a.max(b))
}

fn parse_max(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("`{s}` is not a truncation order"))?;
    if n < 1 {
        return Err("truncation order must be at least 1".into());
    }
    Ok(n)
}

fn parse_threads(s: &str) -> Result<usize, String> {
    let w: usize = s.parse().map_err(|_| format!("`{s}` is not a thread count"))?;
    if w < 1 {
        return Err("thread count must be at least 1".into());
    }
    Ok(w)
}
