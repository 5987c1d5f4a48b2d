//! Sieve-based distribution functions of `n/σ(n)` and related tallies.

mod charfn;
mod equidist;
mod estimate;
mod grid;
mod lattice;
mod psum;
mod smoothed;

pub use charfn::{empirical_charfn, EmpiricalCharFn};
pub use equidist::{equidist_tally, EquidistMode, EquidistTally};
pub use estimate::{estimate_df, estimate_dtilde, Normalization, WeightedCdfEstimate};
pub use grid::{parse_rational, qualifies, ThresholdGrid};
pub use lattice::lattice_two_squares;
pub use psum::{partial_summation_check, PartialSummationCheck};
pub use smoothed::{smoothed_estimate, SmoothedEstimate};
