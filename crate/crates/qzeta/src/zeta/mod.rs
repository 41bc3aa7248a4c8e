//! Quot and finitized Coh zeta functions of the three quadratic orders of
//! conductor depth `m`, in the variables `z = q^{-1}` and `t = q^{-s}`.
//!
//! Every `s`-shift is a monomial substitution on `t`: `s -> s + n` is
//! `t -> t z^n`, `s -> n - s` is `t -> t^{-1} z^n`, and `s -> rs` is `t -> t^r`.

mod checks;
mod coh;
mod nu;
mod table;
mod tseries;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use checks::{
    bridge_check, coh_stabilization, fine_reflection, geo_reflection, hilb_quot_rank1, interpolation_check, main_chain,
    nu_cyclic_sieving, ramified_rank_rule, s0_normalization, shift_consistency, split_check, zeta_suite,
    Stabilization,
};
pub use coh::{coh_t_series, coh_zeta_finitized, solomon_zeta, split_multisum, x_bridge, zeta_new_multisum};
pub use nu::{
    nu_order, nu_order_display, nu_order_master, nu_order_partition, nu_tilde, nu_tilde_display, nu_tilde_master,
    nu_tilde_partition, q_to_z,
};
pub use table::{NuKind, ZetaTable};
pub use tseries::TSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Ramified,
    Split,
    Inert,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::Ramified, OrderKind::Split, OrderKind::Inert];

    /// `0, 1, -1`: the sign in front of `t` in the master polynomial.
    pub fn epsilon(self) -> i64 {
        match self {
            OrderKind::Ramified => 0,
            OrderKind::Split => 1,
            OrderKind::Inert => -1,
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Ramified => "ramified",
            OrderKind::Split => "split",
            OrderKind::Inert => "inert",
        })
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "ramified" => Ok(OrderKind::Ramified),
            "split" => Ok(OrderKind::Split),
            "inert" => Ok(OrderKind::Inert),
            _ => Err(Error::Config(format!("unknown order '{}' (ramified, split, inert)", s))),
        }
    }
}

/// A quadratic order: its type and the depth `m >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrderId {
    pub kind: OrderKind,
    pub m: usize,
}

impl OrderId {
    pub fn new(kind: OrderKind, m: usize) -> Self {
        assert!(m >= 1, "order depth must be at least 1");
        OrderId { kind, m }
    }

    pub fn epsilon(&self) -> i64 {
        self.kind.epsilon()
    }

    /// Length of the normalization over the order: `m` in all three cases.
    pub fn delta(&self) -> usize {
        self.m
    }
}

impl fmt::Display for OrderId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(m={})", self.kind, self.m)
    }
}
