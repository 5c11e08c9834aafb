//! Deterministic JSON and CSV rendering of tables and reports.
//!
//! JSON field order follows struct order, lines end in `\n`, and every
//! computed integer is written as a decimal string so that width never
//! becomes a problem.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::betti::{chi_normalize, m_betti_table, BettiTable};
use crate::hilb::{hilb_poincare, stable_betti, HilbCache};
use crate::motivic::VerificationReport;
use crate::tautgen::{a_coeff, generator_system, monomial_count_bruteforce};
use crate::{Error, Result};

/// `#[serde(with = "decimal")]` for a `BigInt` stored as a decimal string.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A polynomial as its coefficient list of decimal strings, index = exponent.
pub mod decimal_poly {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::bigseries::IntPoly;

    pub fn serialize<S: Serializer>(p: &IntPoly, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(p.coeffs().iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntPoly, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Domain(format!(
                "unknown format {other:?}, expected json or csv"
            ))),
        }
    }
}

/// Anything the CLI prints.
pub trait Report: Serialize {
    fn csv_header(&self) -> &'static str;
    fn csv_rows(&self) -> Vec<String>;
}

pub fn render(report: &impl Report, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_string_pretty(report)?;
            out.push('\n');
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::new();
            writeln!(out, "{}", report.csv_header()).unwrap();
            for row in report.csv_rows() {
                writeln!(out, "{row}").unwrap();
            }
            Ok(out)
        }
    }
}

/// Writes to `destination`, or stdout when `None`.
pub fn emit(report: &impl Report, format: Format, destination: Option<&Path>) -> Result<()> {
    let text = render(report, format)?;
    match destination {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Error::io("<stdout>", e)),
    }
}

impl Report for BettiTable {
    fn csv_header(&self) -> &'static str {
        "k,b2k,source"
    }

    fn csv_rows(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| format!("{},{},{}", r.k, r.b2k, r.source.as_str()))
            .collect()
    }
}

impl Report for VerificationReport {
    fn csv_header(&self) -> &'static str {
        "name,pass,bound"
    }

    fn csv_rows(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| format!("{},{},{}", c.name, c.pass, c.bound))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbReport {
    pub n: usize,
    /// Coefficients of the Poincaré polynomial, index = `z`-exponent.
    #[serde(with = "decimal_poly")]
    pub poincare: crate::bigseries::IntPoly,
}

pub fn hilb_report(n: usize, cache: &HilbCache) -> Result<HilbReport> {
    Ok(HilbReport {
        n,
        poincare: hilb_poincare(n, cache)?.poly().clone(),
    })
}

impl Report for HilbReport {
    fn csv_header(&self) -> &'static str {
        "i,b_i"
    }

    fn csv_rows(&self) -> Vec<String> {
        self.poincare
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{i},{c}"))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableRow {
    pub s: usize,
    #[serde(with = "decimal")]
    pub b2s: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableReport {
    pub smax: usize,
    pub rows: Vec<StableRow>,
}

pub fn stable_report(smax: usize) -> StableReport {
    StableReport {
        smax,
        rows: (0..=smax)
            .map(|s| StableRow {
                s,
                b2s: stable_betti(s),
            })
            .collect(),
    }
}

impl Report for StableReport {
    fn csv_header(&self) -> &'static str {
        "s,b2s"
    }

    fn csv_rows(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| format!("{},{}", r.s, r.b2s))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    pub k: u32,
    pub j: u32,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRow {
    pub i: usize,
    #[serde(with = "decimal")]
    pub a2i: BigInt,
    #[serde(with = "decimal")]
    pub bruteforce: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GensReport {
    pub d: i64,
    pub total: usize,
    pub generators: Vec<GeneratorEntry>,
    pub monomials: Vec<MonomialRow>,
}

/// The generator system and `a_{2i}` for `i <= d`, each count given by both
/// the product route and direct enumeration.
pub fn gens_report(d: i64) -> Result<GensReport> {
    let system = generator_system(d)?;
    let generators = system
        .generators()
        .iter()
        .map(|g| GeneratorEntry {
            name: g.to_string(),
            k: g.k,
            j: g.j,
            degree: g.degree(),
        })
        .collect();
    let monomials = (0..=d as usize)
        .map(|i| {
            Ok(MonomialRow {
                i,
                a2i: a_coeff(d, i)?,
                bruteforce: monomial_count_bruteforce(system.degrees(), i),
            })
        })
        .collect::<Result<_>>()?;
    Ok(GensReport {
        d,
        total: system.len(),
        generators,
        monomials,
    })
}

impl Report for GensReport {
    fn csv_header(&self) -> &'static str {
        "i,a2i,bruteforce"
    }

    fn csv_rows(&self) -> Vec<String> {
        self.monomials
            .iter()
            .map(|r| format!("{},{},{}", r.i, r.a2i, r.bruteforce))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationRow {
    pub i: usize,
    #[serde(with = "decimal")]
    pub a2i: BigInt,
    #[serde(with = "decimal")]
    pub b2i: BigInt,
    #[serde(with = "decimal")]
    pub relations: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub d: i64,
    pub chi: i64,
    pub chi0: i64,
    pub n: usize,
    pub rows: Vec<RelationRow>,
}

/// Relation counts `a_{2i} - b_{2i}(M(d, χ))` for `i = 0..=d`.
pub fn relation_report(d: i64, chi: i64, cache: &HilbCache) -> Result<RelationReport> {
    let table = m_betti_table(d, chi, cache)?;
    let norm = chi_normalize(d, chi)?;
    let rows = table
        .rows
        .iter()
        .map(|r| {
            let a2i = a_coeff(d, r.k)?;
            Ok(RelationRow {
                i: r.k,
                relations: &a2i - &r.b2k,
                a2i,
                b2i: r.b2k.clone(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(RelationReport {
        d,
        chi,
        chi0: norm.chi0,
        n: norm.n,
        rows,
    })
}

impl Report for RelationReport {
    fn csv_header(&self) -> &'static str {
        "i,a2i,b2i,relations"
    }

    fn csv_rows(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| format!("{},{},{},{}", r.i, r.a2i, r.b2i, r.relations))
            .collect()
    }
}
