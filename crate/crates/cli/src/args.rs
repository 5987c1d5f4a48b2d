use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug, Serialize)]
#[command(name = "ddl", version, about = "Weighted distribution functions of n/sigma(n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub run: RunFlags,
}

#[derive(Args, Debug, Serialize)]
pub struct RunFlags {
    /// Output format (tables default to csv, everything else to json).
    #[arg(long = "out", global = true, value_enum)]
    pub format: Option<Format>,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Integers per sieve segment.
    #[arg(long, global = true, default_value_t = 1 << 22)]
    pub segment_size: usize,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Df,
    Dtilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassMode {
    Omega,
    Coprime,
}

/// A catalog function plus optional modifiers.
#[derive(Args, Debug, Serialize, Clone)]
pub struct FuncArgs {
    /// Catalog id, e.g. `tau`, `lambda:a=1,q=3`.
    #[arg(long = "f")]
    pub f: String,

    /// Multiply by (n/sigma(n))^k.
    #[arg(long)]
    pub twist: Option<u32>,

    /// Restrict to n whose prime factors all exceed y.
    #[arg(long = "coprime-y")]
    pub coprime_y: Option<f64>,

    /// With --coprime-y, also weight by sigma(n)/n.
    #[arg(long, requires = "coprime_y")]
    pub sigma_weight: bool,
}

#[derive(Subcommand, Debug, Serialize)]
pub enum Command {
    /// List the catalog of multiplicative functions.
    Catalog,
    /// Build (or reuse) a cached sigma table.
    SieveCache {
        #[arg(long, value_parser = parse_count)]
        x: u64,
        /// Cache directory (default: $DDL_CACHE_DIR).
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Sieve estimate of D_f(u) or its S(f;x)-normalized variant.
    Estimate {
        #[command(flatten)]
        func: FuncArgs,
        #[arg(long, value_parser = parse_count)]
        x: u64,
        #[arg(long, value_enum, default_value = "df")]
        mode: Mode,
        /// `default`, `half`, `uniform:N`, or `list:u1,u2,...`.
        #[arg(long, default_value = "default")]
        grid: String,
        /// Also write a gnuplot script next to --output.
        #[arg(long)]
        gnuplot: bool,
    },
    /// Lattice-point version for the sum of two squares.
    Lattice {
        #[arg(long = "R", value_parser = parse_count)]
        r: u64,
        #[arg(long, default_value = "default")]
        grid: String,
        #[arg(long)]
        gnuplot: bool,
    },
    /// Qualifying integers split by Omega(n) mod q or by coprime class mod q.
    Equidist {
        #[arg(long, value_enum)]
        mode: ClassMode,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        u: String,
        #[arg(long, value_parser = parse_count)]
        x: u64,
    },
    /// Tent-smoothed estimate with the sharp values at both ramp ends.
    Smoothed {
        #[command(flatten)]
        func: FuncArgs,
        #[arg(long, value_parser = parse_count)]
        x: u64,
        #[arg(long)]
        u: String,
        #[arg(long)]
        m: u64,
    },
    /// Both sides of the 1/n partial-summation identity.
    PsumCheck {
        #[command(flatten)]
        func: FuncArgs,
        #[arg(long, value_parser = parse_count)]
        x: u64,
        #[arg(long)]
        u: String,
    },
    /// Euler products, Wirsing, psi and prime-sum diagnostics.
    Analytic {
        #[command(subcommand)]
        op: AnalyticOp,
    },
    /// Invert psi to the distribution function of log(n/sigma(n)).
    Invert {
        #[command(flatten)]
        func: FuncArgs,
        #[arg(long = "P", value_parser = parse_count, default_value = "1000000")]
        p: u64,
        #[arg(long = "T", default_value_t = 200.0)]
        t: f64,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        /// `grid:<grid spec>` (log of thresholds), `linspace:a,b,n` or `list:...`.
        #[arg(long, default_value = "grid:default")]
        points: String,
        #[arg(long = "J")]
        j: Option<u32>,
        #[arg(long)]
        gnuplot: bool,
    },
    /// Sup distance between the sieve curve and the inverted curve.
    Compare {
        #[command(flatten)]
        func: FuncArgs,
        #[arg(long, value_parser = parse_count)]
        x: u64,
        #[arg(long = "P", value_parser = parse_count, default_value = "1000000")]
        p: u64,
        #[arg(long = "T", default_value_t = 200.0)]
        t: f64,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        #[arg(long, default_value = "default")]
        grid: String,
        #[arg(long = "J")]
        j: Option<u32>,
    },
}

#[derive(Subcommand, Debug, Serialize)]
pub enum AnalyticOp {
    /// Truncated mean-value Euler product.
    Mean {
        #[command(flatten)]
        func: FuncArgs,
        #[arg(long = "P", value_parser = parse_count)]
        p: u64,
    },
    /// Wirsing asymptotic for sum_{n<=x} f(n).
    Wirsing {
        #[command(flatten)]
        func: FuncArgs,
        #[arg(long, value_parser = parse_count)]
        x: u64,
        /// Defaults to x.
        #[arg(long = "P", value_parser = parse_count)]
        p: Option<u64>,
    },
    /// Characteristic-function product on a t grid.
    Psi {
        #[command(flatten)]
        func: FuncArgs,
        /// `linspace:a,b,n` or `list:t1,t2,...`.
        #[arg(long)]
        t: String,
        #[arg(long = "P", value_parser = parse_count)]
        p: u64,
        #[arg(long = "J")]
        j: Option<u32>,
        #[arg(long)]
        gnuplot: bool,
    },
    /// Prime sums behind kappa.
    Kappa {
        #[command(flatten)]
        func: FuncArgs,
        #[arg(long, value_parser = parse_count)]
        x: u64,
    },
    /// Partial sum of the Halasz series at beta.
    Halasz {
        #[command(flatten)]
        func: FuncArgs,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long = "P", value_parser = parse_count)]
        p: u64,
    },
    /// Sum over p <= P of 1 - (largest local atom).
    Jumps {
        #[command(flatten)]
        func: FuncArgs,
        #[arg(long = "P", value_parser = parse_count)]
        p: u64,
    },
    /// Greedy squarefree m with v < m/sigma(m) <= u.
    Witness {
        #[command(flatten)]
        func: FuncArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        u: String,
        #[arg(long = "p-cap", value_parser = parse_count, default_value = "1000000")]
        p_cap: u64,
    },
}

/// Accepts `1000`, `10^6` and `1e7`.
pub fn parse_count(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let bad = || format!("`{s}` is not a nonnegative integer (forms: 1000, 10^6, 1e7)");
    if let Some((b, e)) = s.split_once('^') {
        let b: u64 = b.parse().map_err(|_| bad())?;
        let e: u32 = e.parse().map_err(|_| bad())?;
        return b.checked_pow(e).ok_or_else(|| format!("`{s}` overflows u64"));
    }
    if let Some((m, e)) = s.split_once(['e', 'E']) {
        let m: u64 = m.parse().map_err(|_| bad())?;
        let e: u32 = e.parse().map_err(|_| bad())?;
        return 10u64.checked_pow(e).and_then(|p| p.checked_mul(m)).ok_or_else(|| format!("`{s}` overflows u64"));
    }
    s.parse().map_err(|_| bad())
}
