//! Dense polynomials and truncated power series with arbitrary-precision
//! integer coefficients.
//!
//! Truncation is exclusive: a series with cap `c` knows the coefficients of
//! `z^0 .. z^(c-1)` and nothing else. Every product is schoolbook; the series
//! that occur here never exceed a few hundred terms. Most of them are supported
//! on even exponents only, which a sparse layout could exploit later.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A polynomial in one variable, stored as `coeffs[i]` = coefficient of `x^i`.
///
/// Trailing zeros are always stripped, so the zero polynomial is the empty
/// vector and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * x^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial (−∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `x^exp`; zero beyond the degree.
    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    /// Drops every term of exponent `>= cap`.
    pub fn truncated(&self, cap: usize) -> Self {
        let len = self.coeffs.len().min(cap);
        Self::from_coeffs(self.coeffs[..len].to_vec())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `x -> x^k` (`k >= 1`).
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitute_power needs k >= 1");
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); deg * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Schoolbook product, keeping only exponents below `cap` when given.
    pub fn mul_truncated(&self, other: &IntPoly, cap: Option<usize>) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = cap.map_or(full, |c| c.min(full));
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn pow(&self, exp: u32) -> IntPoly {
        (0..exp).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder or would need non-integer coefficients.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let lead = divisor.leading_coeff()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for q in (0..quot.len()).rev() {
            let top = &rem[q + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[q + j] -= &c * b;
            }
            quot[q] = c;
        }
        rem.iter()
            .all(Zero::is_zero)
            .then(|| IntPoly::from_coeffs(quot))
    }

    /// `coeff(i) == coeff(deg - i)` for all `i`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        self.mul_truncated(rhs, None)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// A power series in `z` known modulo `z^cap`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    poly: IntPoly,
    cap: usize,
}

impl TruncatedSeries {
    pub fn new(poly: IntPoly, cap: usize) -> Self {
        Self {
            poly: poly.truncated(cap),
            cap,
        }
    }

    pub fn zero(cap: usize) -> Self {
        Self::new(IntPoly::zero(), cap)
    }

    pub fn one(cap: usize) -> Self {
        Self::new(IntPoly::one(), cap)
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn into_poly(self) -> IntPoly {
        self.poly
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Exact coefficient of `z^exp`. Asking at or above the cap is an error,
    /// since the coefficient there is unknown rather than zero.
    pub fn coeff(&self, exp: usize) -> Result<BigInt> {
        if exp >= self.cap {
            return Err(Error::OutOfWindow {
                exponent: exp,
                cap: self.cap,
            });
        }
        Ok(self.poly.coeff(exp))
    }

    fn check_cap(&self, other: &Self) -> Result<()> {
        if self.cap != other.cap {
            return Err(Error::CapMismatch {
                left: self.cap.to_string(),
                right: other.cap.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        Ok(Self::new(&self.poly + &other.poly, self.cap))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        Ok(Self::new(&self.poly - &other.poly, self.cap))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        Ok(Self {
            poly: self.poly.mul_truncated(&other.poly, Some(self.cap)),
            cap: self.cap,
        })
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn inverse(&self) -> Result<Self> {
        if self.cap == 0 {
            return Ok(self.clone());
        }
        let c0 = self.poly.coeff(0);
        if !c0.abs().is_one() {
            return Err(Error::NonUnit(c0));
        }
        let a = &self.poly.coeffs;
        let mut inv: Vec<BigInt> = Vec::with_capacity(self.cap);
        inv.push(c0.clone());
        for n in 1..self.cap {
            let mut acc = BigInt::zero();
            for i in 1..=n.min(a.len().saturating_sub(1)) {
                if !a[i].is_zero() {
                    acc += &a[i] * &inv[n - i];
                }
            }
            // c0 is its own inverse
            inv.push(-(acc * &c0));
        }
        Ok(Self::new(IntPoly::from_coeffs(inv), self.cap))
    }

    /// Multiplies by `1 / (1 - z^deg)` in place of a full product.
    pub fn mul_geometric(&self, deg: usize) -> Self {
        assert!(deg >= 1, "mul_geometric needs deg >= 1");
        let mut buf = dense(&self.poly, self.cap);
        for e in deg..self.cap {
            let (lo, hi) = buf.split_at_mut(e);
            hi[0] += &lo[e - deg];
        }
        Self::new(IntPoly::from_coeffs(buf), self.cap)
    }

    /// Re-truncates to a smaller (or equal) window.
    pub fn retruncate(&self, cap: usize) -> Result<Self> {
        if cap > self.cap {
            return Err(Error::OutOfWindow {
                exponent: cap - 1,
                cap: self.cap,
            });
        }
        Ok(Self::new(self.poly.clone(), cap))
    }
}

fn dense(p: &IntPoly, len: usize) -> Vec<BigInt> {
    let mut buf = p.coeffs().to_vec();
    buf.resize(len, BigInt::zero());
    buf
}

/// Truncated product of two series sharing a cap.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.mul(b)
}

/// Inverse of a series with unit constant term.
pub fn series_inverse(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.inverse()
}

/// `1 / (1 - z^deg)` modulo `z^cap`.
pub fn geometric(deg: i64, cap: usize) -> Result<TruncatedSeries> {
    if deg <= 0 {
        return Err(Error::Domain(format!(
            "geometric factor needs a positive degree, got {deg}"
        )));
    }
    Ok(TruncatedSeries::one(cap).mul_geometric(deg as usize))
}

/// A power series in `t` and `z`, known modulo `t^tcap` and `z^zcap`.
///
/// Row `i` holds the coefficient of `t^i` as a polynomial in `z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BivariateSeries {
    rows: Vec<IntPoly>,
    zcap: usize,
}

impl BivariateSeries {
    pub fn zero(tcap: usize, zcap: usize) -> Self {
        Self {
            rows: vec![IntPoly::zero(); tcap],
            zcap,
        }
    }

    pub fn one(tcap: usize, zcap: usize) -> Self {
        Self::from_terms(tcap, zcap, &[(0, 0, 1)])
    }

    /// Sum of `c * t^texp * z^zexp`; terms outside the window are dropped.
    pub fn from_terms(tcap: usize, zcap: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut out = Self::zero(tcap, zcap);
        for &(t, z, c) in terms {
            if t < tcap && z < zcap {
                out.rows[t] = &out.rows[t] + &IntPoly::monomial(c, z);
            }
        }
        out
    }

    pub fn tcap(&self) -> usize {
        self.rows.len()
    }

    pub fn zcap(&self) -> usize {
        self.zcap
    }

    /// Coefficient of `t^texp` as a polynomial in `z`.
    pub fn row(&self, texp: usize) -> Result<&IntPoly> {
        self.rows.get(texp).ok_or(Error::OutOfWindow {
            exponent: texp,
            cap: self.tcap(),
        })
    }

    /// Coefficient of `t^texp z^zexp`.
    pub fn coeff(&self, texp: usize, zexp: usize) -> Result<BigInt> {
        let row = self.row(texp)?;
        if zexp >= self.zcap {
            return Err(Error::OutOfWindow {
                exponent: zexp,
                cap: self.zcap,
            });
        }
        Ok(row.coeff(zexp))
    }

    fn check_caps(&self, other: &Self) -> Result<()> {
        if self.tcap() != other.tcap() || self.zcap != other.zcap {
            return Err(Error::CapMismatch {
                left: format!("({}, {})", self.tcap(), self.zcap),
                right: format!("({}, {})", other.tcap(), other.zcap),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        Ok(Self {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a + b)
                .collect(),
            zcap: self.zcap,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let tcap = self.tcap();
        let mut rows = vec![IntPoly::zero(); tcap];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate().take(tcap - i) {
                let prod = a.mul_truncated(b, Some(self.zcap));
                rows[i + j] = &rows[i + j] + &prod;
            }
        }
        Ok(Self {
            rows,
            zcap: self.zcap,
        })
    }

    /// Multiplies by `1 / (1 - z^zexp t^texp)` with a linear-time sweep.
    /// The monomial must be non-constant.
    pub fn mul_geometric(&self, zexp: usize, texp: usize) -> Self {
        assert!(zexp + texp > 0, "geometric factor of a constant monomial");
        let tcap = self.tcap();
        let mut buf: Vec<Vec<BigInt>> = self.rows.iter().map(|r| dense(r, self.zcap)).collect();
        for t in texp..tcap {
            for z in zexp..self.zcap {
                let src = buf[t - texp][z - zexp].clone();
                if !src.is_zero() {
                    buf[t][z] += src;
                }
            }
        }
        Self {
            rows: buf.into_iter().map(IntPoly::from_coeffs).collect(),
            zcap: self.zcap,
        }
    }
}

/// Truncated product of two bivariate series sharing both caps.
pub fn bivar_mul(a: &BivariateSeries, b: &BivariateSeries) -> Result<BivariateSeries> {
    a.mul(b)
}
