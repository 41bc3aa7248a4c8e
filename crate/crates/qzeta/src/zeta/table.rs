use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::tseries::{z_pow, TSeries};
use super::{coh_t_series, nu_order, nu_tilde, OrderId, OrderKind};
use crate::error::{Error, Result};
use crate::exact::{parse_rat, rat_strings, LaurentPoly, Var};

/// Which function a coefficient table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NuKind {
    /// The finitized Coh zeta function, a `t`-series.
    Coh,
    /// `nu` of `R^n`, a polynomial.
    Nu,
    /// `nu` of the normalization `R~^n`, a polynomial.
    NuTilde,
}

impl fmt::Display for NuKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NuKind::Coh => "coh",
            NuKind::Nu => "nu",
            NuKind::NuTilde => "nu-tilde",
        })
    }
}

impl FromStr for NuKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coh" => Ok(NuKind::Coh),
            "nu" => Ok(NuKind::Nu),
            "nu-tilde" => Ok(NuKind::NuTilde),
            _ => Err(Error::Config(format!("unknown zeta kind '{}' (coh, nu, nu-tilde)", s))),
        }
    }
}

/// Rows `[t_deg, [[z_exp, num, den], ...]]`, rationals as decimal strings.
pub type Row = (u32, Vec<(i32, String, String)>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaTable {
    pub order: OrderKind,
    pub m: usize,
    pub n: i64,
    pub kind: NuKind,
    /// Highest `t`-degree kept for series; `None` for polynomials.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub truncated_after: Option<u32>,
    pub coefficients: Vec<Row>,
}

fn row(k: u32, p: &LaurentPoly) -> Row {
    let mut entries: Vec<(i32, String, String)> = p
        .terms()
        .map(|(m, c)| {
            let (num, den) = rat_strings(c);
            (m.exp(Var::Z), num, den)
        })
        .collect();
    entries.sort_by_key(|e| e.0);
    (k, entries)
}

impl ZetaTable {
    pub fn compute(order: OrderId, n: i64, kind: NuKind, deg: u32) -> Result<Self> {
        let polys: Vec<LaurentPoly> = match kind {
            NuKind::Coh => coh_t_series(order, n, deg as usize)?.coeffs,
            NuKind::Nu => TSeries::from_poly(&nu_order(order, n)?, (2 * order.m as i64 * n) as usize)?.coeffs,
            NuKind::NuTilde => TSeries::from_poly(&nu_tilde(order, n)?, (order.m as i64 * n) as usize)?.coeffs,
        };
        let coefficients = polys
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, p)| row(k as u32, p))
            .collect();
        Ok(ZetaTable {
            order: order.kind,
            m: order.m,
            n,
            kind,
            truncated_after: (kind == NuKind::Coh).then_some(deg),
            coefficients,
        })
    }

    /// The `t`-coefficients as Laurent polynomials in `z`.
    pub fn polys(&self) -> Result<Vec<(u32, LaurentPoly)>> {
        let mut out = Vec::new();
        for (k, entries) in &self.coefficients {
            let mut p = LaurentPoly::zero();
            for (e, num, den) in entries {
                let c = parse_rat(num, den).ok_or_else(|| Error::Config(format!("bad rational {}/{}", num, den)))?;
                p.add_term(z_pow(*e), c);
            }
            out.push((*k, p));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Config(format!("table JSON: {}", e)))
    }

    /// One line per nonzero coefficient: `order,m,n,kind,t_deg,z_exp,num,den`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["order", "m", "n", "kind", "t_deg", "z_exp", "num", "den"]).expect("in-memory write");
        for (k, entries) in &self.coefficients {
            for (e, num, den) in entries {
                w.write_record([
                    self.order.to_string(),
                    self.m.to_string(),
                    self.n.to_string(),
                    self.kind.to_string(),
                    k.to_string(),
                    e.to_string(),
                    num.clone(),
                    den.clone(),
                ])
                .expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn from_csv(s: &str, truncated_after: Option<u32>) -> Result<Self> {
        let mut r = csv::Reader::from_reader(s.as_bytes());
        let mut head: Option<(OrderKind, usize, i64, NuKind)> = None;
        let mut rows: Vec<Row> = Vec::new();
        let bad = |e: String| Error::Config(format!("table CSV: {}", e));
        for rec in r.records() {
            let rec = rec.map_err(|e| bad(e.to_string()))?;
            let f = |i: usize| rec.get(i).ok_or_else(|| bad(format!("short record {:?}", rec)));
            let h = (
                f(0)?.parse::<OrderKind>()?,
                f(1)?.parse::<usize>().map_err(|e| bad(e.to_string()))?,
                f(2)?.parse::<i64>().map_err(|e| bad(e.to_string()))?,
                f(3)?.parse::<NuKind>()?,
            );
            if *head.get_or_insert(h) != h {
                return Err(bad("mixed tables in one file".into()));
            }
            let k: u32 = f(4)?.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?;
            let e: i32 = f(5)?.parse().map_err(|e: std::num::ParseIntError| bad(e.to_string()))?;
            let entry = (e, f(6)?.to_string(), f(7)?.to_string());
            match rows.last_mut() {
                Some((last, v)) if *last == k => v.push(entry),
                _ => rows.push((k, vec![entry])),
            }
        }
        let (order, m, n, kind) = head.ok_or_else(|| bad("empty table".into()))?;
        Ok(ZetaTable { order, m, n, kind, truncated_after, coefficients: rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_tilde_inert_table() {
        let t = ZetaTable::compute(OrderId::new(OrderKind::Inert, 1), 1, NuKind::NuTilde, 0).unwrap();
        assert_eq!(t.coefficients[0], (0, vec![(0, "1".into(), "1".into())]));
        assert_eq!(t.coefficients[1], (1, vec![(-1, "1".into(), "1".into()), (0, "1".into(), "1".into())]));
    }

    #[test]
    fn round_trips() {
        let t = ZetaTable::compute(OrderId::new(OrderKind::Split, 2), 2, NuKind::Coh, 6).unwrap();
        assert_eq!(ZetaTable::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(ZetaTable::from_csv(&t.to_csv(), Some(6)).unwrap(), t);
        let e = ZetaTable::compute(OrderId::new(OrderKind::Inert, 1), 0, NuKind::Coh, 5).unwrap();
        assert_eq!(e.coefficients, vec![(0, vec![(0, "1".into(), "1".into())])]);
    }
}
