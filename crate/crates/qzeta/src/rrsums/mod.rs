//! Rogers-Ramanujan type multisums: the finite Andrews-Gordon and Bressoud
//! families with their deformations, the `X` and `V` multisums, the master
//! polynomial, and the identity registry.

mod finite;
mod index;
mod infinite;
mod keys;
mod master;
mod registry;
mod series;

pub use finite::{ag_dagger, ag_finite, br_finite, single_sum, x_closed, x_multisum, BrVariant, SingleVariant};
pub use index::{chains, compositions, decreasing, rs_pairs};
pub use series::{
    neg_depth, to_order, trans2_lhs, trans2_rhs, v_expression, v_multisum, v_rec, x_closed_scaled, x_exp2,
    x_exp2_companion_sum, x_exp2_sum, x_multisum_series, x_new, x_rec,
};
pub use infinite::{
    ag_infinite_product, ag_infinite_sum, br_infinite_product, br_infinite_sum, count_gap2, count_parts_pm1_mod5,
};
pub use master::{
    cy_zh, cy_zh_rank_one, is_integral, master_poly, master_rational, master_reflected, root_closed_form, sieve_sides,
};
pub use keys::{a_indep_key, induction_key, remark_one_fold, x1_key, z1z2_full};
pub use registry::{check_identity, default_instances, rrsums_suite, sieve_instances, Instance, RunSettings, IDENTITIES};
