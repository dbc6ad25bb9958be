//! Arithmetic obstructions: torsion of the Brauer class, degrees on curves,
//! and the Brauer group of moduli of bundles.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tensorstate::SubsystemType;

/// Where a declared period comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    /// The symbol `(u, v)_m` over the generic point, of exact period `m`.
    GenericSymbol { m: u64 },
    /// `(u, a)_p ⊗ (v, b)_p`, of period dividing `p`.
    TensorOfPSymbols { p: u64 },
    Declared,
}

/// A Brauer class known only through its period.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BrauerClassModel {
    period: u64,
    label: String,
    provenance: Provenance,
}

impl BrauerClassModel {
    pub fn new(period: u64, label: impl Into<String>, provenance: Provenance) -> Result<Self> {
        if period == 0 {
            return Err(Error::Precondition("period must be positive".into()));
        }
        match provenance {
            Provenance::GenericSymbol { m } if period != m => {
                return Err(Error::Precondition(format!(
                    "a generic degree-{m} symbol has period {m}, not {period}"
                )))
            }
            Provenance::TensorOfPSymbols { p } if p % period != 0 => {
                return Err(Error::Precondition(format!(
                    "a tensor of degree-{p} symbols has period dividing {p}, not {period}"
                )))
            }
            _ => {}
        }
        Ok(BrauerClassModel {
            period,
            label: label.into(),
            provenance,
        })
    }

    pub fn generic_symbol(m: u64) -> Result<Self> {
        Self::new(m, format!("(u,v)_{m}"), Provenance::GenericSymbol { m })
    }

    pub fn tensor_of_p_symbols(p: u64) -> Result<Self> {
        Self::new(p, format!("(u,a)_{p} ⊗ (v,b)_{p}"), Provenance::TensorOfPSymbols { p })
    }

    pub fn declared(period: u64, label: impl Into<String>) -> Result<Self> {
        Self::new(period, label, Provenance::Declared)
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
}

/// `per(β) | lcm(d)`. Necessary for a `d`-subsystem structure, not sufficient.
pub fn torsion_admissible(beta: &BrauerClassModel, d: &SubsystemType) -> bool {
    d.lcm().is_multiple_of(beta.period())
}

/// What the torsion test can and cannot conclude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TorsionVerdict {
    Obstructed,
    NotObstructedByTorsion,
}

impl TorsionVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            TorsionVerdict::Obstructed => "obstructed",
            TorsionVerdict::NotObstructedByTorsion => "not obstructed by torsion",
        }
    }
}

pub fn torsion_verdict(beta: &BrauerClassModel, d: &SubsystemType) -> TorsionVerdict {
    if torsion_admissible(beta, d) {
        TorsionVerdict::NotObstructedByTorsion
    } else {
        TorsionVerdict::Obstructed
    }
}

/// `deg ℙ(V) ≡ 0 (mod gcd(d_A, d_B))`: true when the degree does not rule out
/// a `(d_A, d_B)` structure on a curve.
pub fn curve_degree_obstruction(deg: i64, d_a: u64, d_b: u64) -> bool {
    let g = d_a.gcd(&d_b) as i64;
    g == 0 || deg.rem_euclid(g) == 0
}

/// Order of the cyclic Brauer group of moduli of stable rank-`r` bundles of
/// degree `deg`: `gcd(r, deg)`.
pub fn moduli_brauer_order(r: u64, deg: i64) -> Result<u64> {
    if r < 2 {
        return Err(Error::Precondition(format!("rank must be at least 2, got {r}")));
    }
    Ok(r.gcd(&deg.unsigned_abs()))
}
