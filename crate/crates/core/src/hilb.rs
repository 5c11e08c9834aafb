//! Poincaré polynomials of Hilbert schemes of points on the projective plane.
//!
//! The generating function is Göttsche's triple product
//!
//! ```text
//! sum_n P(Hilb^n; z) t^n = prod_{k>=1} 1 / ((1 - z^(2k-2) t^k)(1 - z^(2k) t^k)(1 - z^(2k+2) t^k))
//! ```
//!
//! Odd Betti numbers vanish, so the signed and unsigned Poincaré polynomials
//! agree. For `2s <= n` the coefficient of `z^(2s)` no longer depends on `n`
//! and is read off the stable series `1/(1-z^2)^2 * prod_{m>=2} 1/(1-z^(2m))^3`.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bigseries::{BivariateSeries, IntPoly, TruncatedSeries};
use crate::{Error, Result};

/// Generator tag written into every cache file.
pub const CACHE_GENERATOR: &str = "goettsche-p2-triple-product";
pub const CACHE_VERSION: u32 = 1;

/// Poincaré polynomial of `Hilb^n(P^2)` in `z`; degree `4n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbPoincare {
    n: usize,
    poly: IntPoly,
}

impl HilbPoincare {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    /// `b_{2k}`.
    pub fn betti(&self, k: usize) -> BigInt {
        self.poly.coeff(2 * k)
    }

    /// Topological Euler number, `P(1)`.
    pub fn euler(&self) -> BigInt {
        self.poly.eval(&BigInt::one())
    }

    pub fn odd_vanishing(&self) -> bool {
        self.poly
            .coeffs()
            .iter()
            .skip(1)
            .step_by(2)
            .all(Zero::is_zero)
    }

    pub fn is_palindromic(&self) -> bool {
        self.poly.is_palindromic()
    }
}

/// The product above, truncated at `t^tcap` and `z^zcap`.
///
/// Factors with `k >= tcap` are `1` modulo `t^tcap` and are skipped.
pub fn goettsche_bivariate(tcap: usize, zcap: usize) -> Result<BivariateSeries> {
    if tcap == 0 || zcap == 0 {
        return Err(Error::Domain(format!(
            "caps must be positive, got (tcap {tcap}, zcap {zcap})"
        )));
    }
    let mut acc = BivariateSeries::one(tcap, zcap);
    for k in 1..tcap {
        for zexp in [2 * k - 2, 2 * k, 2 * k + 2] {
            acc = acc.mul_geometric(zexp, k);
        }
    }
    Ok(acc)
}

fn compute_hilb(n: usize) -> Result<HilbPoincare> {
    let series = goettsche_bivariate(n + 1, 4 * n + 1)?;
    Ok(HilbPoincare {
        n,
        poly: series.row(n)?.clone(),
    })
}

/// In-memory memo backed by an optional directory of `hilb_<n>.json` files.
///
/// Writes go to a temporary file in the same directory and are renamed into
/// place, so concurrent readers never see a partial file.
#[derive(Debug, Default)]
pub struct HilbCache {
    dir: Option<PathBuf>,
    memo: Mutex<HashMap<usize, HilbPoincare>>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    n: usize,
    coeffs: Vec<String>,
    generator: String,
    version: u32,
}

impl HilbCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    pub fn on_disk(dir: impl Into<PathBuf>) -> Self {
        Self {
            dir: Some(dir.into()),
            memo: Mutex::default(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn file_path(&self, n: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("hilb_{n}.json")))
    }

    pub fn get(&self, n: usize) -> Result<HilbPoincare> {
        if let Some(hit) = self.memo.lock().unwrap().get(&n) {
            return Ok(hit.clone());
        }
        let value = match self.file_path(n) {
            Some(path) if path.exists() => read_cache_file(&path, n)?,
            Some(path) => {
                let value = compute_hilb(n)?;
                write_cache_file(&path, &value)?;
                value
            }
            None => compute_hilb(n)?,
        };
        self.memo.lock().unwrap().insert(n, value.clone());
        Ok(value)
    }
}

/// Serialized form of a cache entry, byte-for-byte what lands on disk.
pub fn cache_file_bytes(value: &HilbPoincare) -> Result<Vec<u8>> {
    let file = CacheFile {
        n: value.n,
        coeffs: value
            .poly
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect(),
        generator: CACHE_GENERATOR.to_owned(),
        version: CACHE_VERSION,
    };
    let mut bytes = serde_json::to_vec_pretty(&file)?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Parses a cache file, checking the header fields and the degree.
pub fn parse_cache_file(bytes: &[u8], path: &Path, n: usize) -> Result<HilbPoincare> {
    let bad = |reason: String| Error::Cache {
        path: path.to_owned(),
        reason,
    };
    let file: CacheFile = serde_json::from_slice(bytes).map_err(|e| bad(e.to_string()))?;
    if file.version != CACHE_VERSION {
        return Err(bad(format!("unsupported version {}", file.version)));
    }
    if file.generator != CACHE_GENERATOR {
        return Err(bad(format!("unknown generator {:?}", file.generator)));
    }
    if file.n != n {
        return Err(bad(format!("expected n = {n}, found {}", file.n)));
    }
    let coeffs = file
        .coeffs
        .iter()
        .map(|s| s.parse::<BigInt>().map_err(|e| bad(format!("{s:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    let poly = IntPoly::from_coeffs(coeffs);
    if poly.degree() != Some(4 * n) || poly.coeffs().len() != file.coeffs.len() {
        return Err(bad(format!("expected {} coefficients", 4 * n + 1)));
    }
    Ok(HilbPoincare { n, poly })
}

fn read_cache_file(path: &Path, n: usize) -> Result<HilbPoincare> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    parse_cache_file(&bytes, path, n)
}

fn write_cache_file(path: &Path, value: &HilbPoincare) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(dir, e))?;
    tmp.write_all(&cache_file_bytes(value)?)
        .map_err(|e| Error::io(tmp.path(), e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

/// Poincaré polynomial of `Hilb^n(P^2)`, through the cache.
pub fn hilb_poincare(n: usize, cache: &HilbCache) -> Result<HilbPoincare> {
    cache.get(n)
}

/// The stable series in `z`, truncated at `cap`.
pub fn stable_series(cap: usize) -> Result<TruncatedSeries> {
    if cap == 0 {
        return Err(Error::Domain("stable series needs cap >= 1".into()));
    }
    let mut acc = TruncatedSeries::one(cap).mul_geometric(2).mul_geometric(2);
    for m in (2..).take_while(|m| 2 * m < cap) {
        for _ in 0..3 {
            acc = acc.mul_geometric(2 * m);
        }
    }
    Ok(acc)
}

/// `b_{2s}(Hilb^n(P^2))` for any `n >= 2s`.
pub fn stable_betti(s: usize) -> BigInt {
    stable_series(2 * s + 1)
        .and_then(|r| r.coeff(2 * s))
        .expect("cap 2s+1 always covers z^(2s)")
}

/// Coefficient of `t^n` in `prod_{k>=1} (1 - t^k)^(-3)`.
///
/// Uses the divisor-sum recursion `n p(n) = 3 sum_{k=1}^n sigma(k) p(n-k)`,
/// which never touches the two-variable product.
pub fn colored_partition_euler(n: usize) -> BigInt {
    let sigma: Vec<BigInt> = (0..=n)
        .map(|k| {
            if k == 0 {
                BigInt::zero()
            } else {
                (1..=k).filter(|d| k % d == 0).map(BigInt::from).sum()
            }
        })
        .collect();
    let mut p = vec![BigInt::one()];
    for m in 1..=n {
        let acc: BigInt = (1..=m).map(|k| &sigma[k] * &p[m - k]).sum::<BigInt>() * 3;
        p.push(acc / m);
    }
    p.swap_remove(n)
}
