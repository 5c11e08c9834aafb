//! Betti numbers `b_{2k}(M(d, χ))` for `k <= d`.
//!
//! For `k <= d - 2` they are the stable Hilbert-scheme values
//! `b_{2k}(Hilb^n(P^2))` with `n = d(d-3)/2 - χ_0`; at `k = d - 1` and `k = d`
//! the values drop by 3 and 12. The table depends on `χ` only through the
//! coprimality condition.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::hilb::{hilb_poincare, HilbCache};
use crate::motivic::correction_polynomial;
use crate::tautgen::check_degree;
use crate::{Error, Result};

/// Representative of `χ mod d` in `[-2d, -d-1]` and the matching
/// Hilbert-scheme index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalizedChi {
    pub chi0: i64,
    pub n: usize,
}

pub fn chi_normalize(d: i64, chi: i64) -> Result<NormalizedChi> {
    if d <= 0 {
        return Err(Error::Domain(format!("d must be positive, got {d}")));
    }
    if d.gcd(&chi) != 1 {
        return Err(Error::Domain(format!(
            "gcd(d, chi) = gcd({d}, {chi}) must be 1"
        )));
    }
    let chi0 = -2 * d + chi.rem_euclid(d);
    let n = d * (d - 3) / 2 - chi0;
    Ok(NormalizedChi {
        chi0,
        n: n as usize,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BettiSource {
    Goettsche,
    CorrectedMinus3,
    CorrectedMinus12,
}

impl BettiSource {
    pub fn as_str(self) -> &'static str {
        match self {
            BettiSource::Goettsche => "goettsche",
            BettiSource::CorrectedMinus3 => "corrected_minus3",
            BettiSource::CorrectedMinus12 => "corrected_minus12",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub k: usize,
    #[serde(with = "crate::emit::decimal")]
    pub b2k: BigInt,
    pub source: BettiSource,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub d: i64,
    pub chi: i64,
    pub chi0: i64,
    pub n: usize,
    pub rows: Vec<BettiRow>,
    /// The corrected rows come from the top-degree congruence, moved to
    /// degrees `d - 1` and `d` by Poincaré duality.
    pub duality_applied: bool,
}

impl BettiTable {
    pub fn b2k(&self, k: usize) -> Option<&BigInt> {
        self.rows.get(k).map(|r| &r.b2k)
    }

    pub fn values(&self) -> Vec<BigInt> {
        self.rows.iter().map(|r| r.b2k.clone()).collect()
    }

    /// Real dimension over two: `dim M(d, χ) = d^2 + 1`.
    pub fn dimension(&self) -> i64 {
        self.d * self.d + 1
    }
}

pub fn m_betti_table(d: i64, chi: i64, cache: &HilbCache) -> Result<BettiTable> {
    if d < 5 {
        return Err(Error::UnsupportedRange(format!(
            "Betti tables are available for d >= 5, got {d}"
        )));
    }
    let NormalizedChi { chi0, n } = chi_normalize(d, chi)?;
    let hilb = hilb_poincare(n, cache)?;
    let du = d as usize;
    let rows = (0..=du)
        .map(|k| {
            let (source, drop) = match k {
                _ if k + 1 == du => (BettiSource::CorrectedMinus3, 3),
                _ if k == du => (BettiSource::CorrectedMinus12, 12),
                _ => (BettiSource::Goettsche, 0),
            };
            BettiRow {
                k,
                b2k: hilb.betti(k) - drop,
                source,
            }
        })
        .collect();
    Ok(BettiTable {
        d,
        chi,
        chi0,
        n,
        rows,
        duality_applied: true,
    })
}

/// `b_{2(d-1)}` and `b_{2d}` read from the top-degree congruence instead of
/// the table: the coefficients of `P_v(L^(d-1) [Hilb^n]) - P_v(correction)`
/// in `z`-degrees `2(d^2 - d + 2)` and `2(d^2 - d + 1)`, with
/// `n = d(d-1)/2 + 1`, mapped back by duality.
pub fn betti_from_congruence(d: i64, cache: &HilbCache) -> Result<[BigInt; 2]> {
    check_degree(d)?;
    let n = (d * (d - 1) / 2 + 1) as usize;
    let hilb = hilb_poincare(n, cache)?;
    let shifted = hilb.poly().shift(2 * (d as usize - 1));
    let top = &shifted - &correction_polynomial(d, cache)?;
    let dim = (d * d + 1) as usize;
    let at = |k: usize| top.coeff(2 * (dim - k));
    Ok([at(d as usize - 1), at(d as usize)])
}
