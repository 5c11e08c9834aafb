//! The minimal tautological generator system of `A^*(M(d, χ))` and the
//! monomial counts it produces.
//!
//! The generators are
//! `c_0(2), c_2(0)` and `c_k(0), c_{k-1}(1), c_{k-2}(2)` for `3 <= k <= d-1`,
//! where `c_k(j)` lives in codimension `k + j - 1`. So two generators sit in
//! degree 1 and three in each degree `2..=d-2`, for `3d - 7` in total.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::betti::m_betti_table;
use crate::bigseries::TruncatedSeries;
use crate::hilb::HilbCache;
use crate::{Error, Result};

/// The tautological class `c_k(j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Generator {
    pub k: u32,
    pub j: u32,
}

impl Generator {
    pub fn degree(&self) -> u32 {
        self.k + self.j - 1
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c_{}({})", self.k, self.j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSystem {
    d: i64,
    generators: Vec<Generator>,
    degrees: BTreeMap<u32, u32>,
}

impl GeneratorSystem {
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    /// Degree → multiplicity.
    pub fn degrees(&self) -> &BTreeMap<u32, u32> {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

pub(crate) fn check_degree(d: i64) -> Result<()> {
    if d < 5 {
        return Err(Error::Domain(format!("d must be at least 5, got {d}")));
    }
    Ok(())
}

pub fn generator_system(d: i64) -> Result<GeneratorSystem> {
    check_degree(d)?;
    let mut generators = vec![Generator { k: 0, j: 2 }, Generator { k: 2, j: 0 }];
    for k in 3..d as u32 {
        generators.extend([
            Generator { k, j: 0 },
            Generator { k: k - 1, j: 1 },
            Generator { k: k - 2, j: 2 },
        ]);
    }
    let mut degrees = BTreeMap::new();
    for g in &generators {
        *degrees.entry(g.degree()).or_insert(0) += 1;
    }
    Ok(GeneratorSystem {
        d,
        generators,
        degrees,
    })
}

/// `prod_{g} 1 / (1 - z^(2 deg g))` modulo `z^cap`: the coefficient of
/// `z^(2i)` counts monomials of degree `i` in the generators.
pub fn monomial_series(d: i64, cap: usize) -> Result<TruncatedSeries> {
    let system = generator_system(d)?;
    Ok(system
        .generators()
        .iter()
        .fold(TruncatedSeries::one(cap), |acc, g| {
            acc.mul_geometric(2 * g.degree() as usize)
        }))
}

/// Counts monomials of weighted degree `i` by choosing an exponent for each
/// generator in turn. No generating functions involved.
pub fn monomial_count_bruteforce(degrees: &BTreeMap<u32, u32>, i: usize) -> BigInt {
    fn descend(gens: &[usize], remaining: usize) -> u64 {
        match gens.split_first() {
            None => u64::from(remaining == 0),
            Some((&deg, rest)) => (0..=remaining / deg)
                .map(|e| descend(rest, remaining - e * deg))
                .sum(),
        }
    }
    let gens: Vec<usize> = degrees
        .iter()
        .flat_map(|(&deg, &mult)| std::iter::repeat_n(deg as usize, mult as usize))
        .collect();
    BigInt::from(descend(&gens, i))
}

/// `a_{2i}`: the number of degree-`i` monomials in the generators.
pub fn a_coeff(d: i64, i: usize) -> Result<BigInt> {
    monomial_series(d, 2 * i + 1)?.coeff(2 * i)
}

/// Number of independent relations among the generators in degree `i`,
/// `a_{2i} - b_{2i}(M(d, χ))`. Only `i <= d` is known.
pub fn relation_count(d: i64, chi: i64, i: usize, cache: &HilbCache) -> Result<BigInt> {
    let table = m_betti_table(d, chi, cache)?;
    let b = table.b2k(i).ok_or_else(|| {
        Error::UnsupportedRange(format!(
            "relation counts are known only for i <= d = {d}, got {i}"
        ))
    })?;
    Ok(a_coeff(d, i)? - b)
}
