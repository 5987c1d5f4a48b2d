//! Segmented sieve: exact σ, smallest prime factor and Ω tables, plus the
//! streaming fold that carries every `Σ_{n<=x}` in the crate.

mod cache;
mod exact;
mod fold;
mod segment;

pub use cache::{
    cache_file_name, decode_header, encode_header, read_sigma_cache, write_sigma_cache, CACHE_DIR_ENV,
    CACHE_HEADER_LEN, CACHE_MAGIC, CACHE_VERSION,
};
pub use exact::ExactSum;
pub use fold::{fold_over_range, CountVisitor, FoldOptions, RangeVisitor, SieveItem, SumVisitor, DEFAULT_SEGMENT_SIZE};
pub use segment::{build_segment, BasePrimes, Factorization, SieveSegment, SigmaTable, MAX_SIEVE_BOUND};
