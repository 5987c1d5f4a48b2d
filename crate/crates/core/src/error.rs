use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown catalog function `{0}`")]
    UnknownFunction(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("{n} is outside the sieved range [{lo}, {hi}]")]
    OutOfSegment { n: u64, lo: u64, hi: u64 },

    #[error("base primes only reach {have}, need {need}")]
    InsufficientBasePrimes { have: u64, need: u64 },

    #[error("`{0}` requires a nonnegative function")]
    NotNonnegative(String),

    #[error("`{0}` requires a function with values in the unit disc")]
    NotUnitDisc(String),

    #[error("`{0}` fails the mean-value product hypotheses")]
    HypothesisFailed(String),

    #[error("`{0}` has no declared density kappa")]
    MissingKappa(String),

    #[error("partial sum S(f;x) vanishes for x = {0}")]
    ZeroNormalizer(u64),

    #[error("local series for `{id}` at p = {p} does not converge")]
    DivergentLocalSeries { id: String, p: u64 },

    #[error("sigma table covers [1, {have}] but {need} is required")]
    SigmaTableTooSmall { have: u64, need: u64 },

    #[error("t grid too sparse: {0}")]
    GridTooSparse(String),

    #[error("truncation T = {t} exceeds the profile range {max}")]
    TruncationBeyondProfile { t: f64, max: f64 },

    #[error("the two curves have no common evaluation points")]
    DisjointSupports,

    #[error("no witness below the prime cap {0}; increase the cap")]
    WitnessNotFound(u64),

    #[error("cache file: {0}")]
    CacheFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn param(name: &str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name: name.to_string(), reason: reason.into() }
    }

    /// Overflow and size refusals, as opposed to malformed input.
    pub fn is_resource_refusal(&self) -> bool {
        matches!(self, Error::Overflow(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
