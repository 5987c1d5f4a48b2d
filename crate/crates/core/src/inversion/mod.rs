//! Numerical inversion of `ψ` and distances between distribution functions.

mod compare;
mod gil_pelaez;

pub use compare::{sup_distance, CdfSamples, SupDistance, EMPIRICAL_BUDGET};
pub use gil_pelaez::{
    invert, invert_with_slack, isotonic, InvertedCdf, DEFAULT_SLACK, DEFAULT_STEP, DEFAULT_TRUNCATION,
};
