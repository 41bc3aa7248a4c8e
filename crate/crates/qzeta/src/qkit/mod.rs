//! q-Pochhammer symbols, Gaussian binomials and multinomials, basic
//! hypergeometric series, the classical transformation suite and Bailey pairs.

mod bailey;
mod binom;
mod classical;
mod phi;
mod poch;

pub use bailey::{ag_pair, all_pairs, bailey_check, dbr_pair, trivial_pair, BaileyPair};
pub use binom::{binomial, qbinom, qmultinom, qmultinom_at_root, QAlg};
pub use classical::{classical_points, classical_ref, classical_suite, verify_classical, ClassicalParams, CLASSICAL_IDS};
pub use phi::{phi_eval, phi_lser, PhiSeriesSpec};
pub use poch::{poch_inf, poch_inf_inv, poch_inv_series, poch_poly, poch_series, poch_val, Length, PochhammerSpec, QMono};
