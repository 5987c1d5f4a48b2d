//! Euler products, the Wirsing asymptotic, the characteristic-function
//! product `ψ(t)` and prime-sum diagnostics.

mod charfn;
mod diagnostics;
mod local;
mod product;
mod tail;
mod witness;

pub use charfn::{linspace, psi, CharFnProfile};
pub use diagnostics::{continuity_diagnostic, halasz_series, mertens_kappa, KappaDiagnostic};
pub use local::{default_cutoff, local_factors, LocalFactors};
pub use product::{mean_value_product, wirsing_prediction, EulerProductValue};
pub use tail::{prime_square_tail, CHARFN_TAIL_CONSTANT, TAIL_MODEL_P0};
pub use witness::{greedy_witness, Witness};
