use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invq_core::arith::rational::parse_rational;
use invq_core::arith::Rational;

#[derive(Parser, Debug)]
#[command(name = "invq", version, about = "Exact verification of determinant identities and maximal-eigenvalue bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Inclusive range `A..B` of the size parameter n.
    #[arg(long, global = true, value_parser = parse_range)]
    pub range: Option<Range>,
    /// Enclosure width as `P/Q`, a decimal or an exponent form such as `1e-12`.
    #[arg(long, global = true, default_value = "1e-12", value_parser = parse_tol)]
    pub tol: Rational,
    /// Fractional bits of the fixed-point reals.
    #[arg(long, global = true, default_value_t = 128, value_parser = clap::value_parser!(u32).range(64..=65536))]
    pub bits: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; output order does not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=1024))]
    pub jobs: u32,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Check determinant and polynomial identities exactly.
    Verify {
        #[arg(value_enum)]
        identity: IdentitySet,
    },
    /// Bounds m(n) <= lambda_n <= f1(n) and lambda_n <= M(n) with certified enclosures.
    Bounds,
    /// Every root of F_n, as `n,root,parity` records.
    Figure,
    /// Limit diagnostics; takes explicit sizes or `--range`.
    Asymptotics { ns: Vec<u64> },
    /// Boundary determinants and the largest eigenvalue mu_n.
    Boundary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentitySet {
    Thm31,
    Corollary,
    Inverse,
    Cauchy,
    Recurrence,
    Boundary,
    Legendre,
    Kronecker,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub start: u64,
    pub end: u64,
}

impl Range {
    pub fn new(start: u64, end: u64) -> Self {
        Range { start, end }
    }

    pub fn iter(self) -> impl Iterator<Item = u64> {
        self.start..=self.end
    }

    pub fn within(self, lo: u64, hi: Option<u64>) -> bool {
        self.start >= lo && hi.is_none_or(|h| self.end <= h)
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let start: u64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
        let end: u64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
        if start > end {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(Range { start, end })
    }
}

fn parse_range(s: &str) -> Result<Range, String> {
    s.parse()
}

fn parse_tol(s: &str) -> Result<Rational, String> {
    let t = parse_rational(s).ok_or_else(|| format!("not a rational number: {s:?}"))?;
    if t <= Rational::from_integer(0.into()) {
        return Err("tolerance must be positive".into());
    }
    Ok(t)
}
