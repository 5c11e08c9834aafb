//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p motivic-betti --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use motivic_betti::betti::m_betti_table;
use motivic_betti::bigseries::{IntPoly, TruncatedSeries};
use motivic_betti::hilb::{
    colored_partition_euler, hilb_poincare, stable_betti, stable_series, HilbCache,
};
use motivic_betti::motivic::{
    correction_polynomial, projective, verify_congruence_chain, virtual_poincare, ChainConstants,
    MotivicClass,
};
use motivic_betti::tautgen::{a_coeff, relation_count};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn within(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn goettsche_expansion() -> Outcome {
    within(Duration::from_secs(1), || {
        let cache = HilbCache::in_memory();
        let h2 = hilb_poincare(2, &cache).map_err(|e| e.to_string())?;
        let evens: Vec<BigInt> = (0..=4).map(|k| h2.betti(k)).collect();
        ensure(evens == big(&[1, 2, 3, 2, 1]) && h2.odd_vanishing(), || {
            format!("Hilb^2: {}", h2.poly().display_in("z"))
        })?;
        let h1 = hilb_poincare(1, &cache).map_err(|e| e.to_string())?;
        let p2 = virtual_poincare(&projective(2))
            .to_polynomial()
            .ok_or("P_v(P^2) not a polynomial")?;
        ensure(h1.poly() == &p2, || {
            format!("Hilb^1: {}", h1.poly().display_in("z"))
        })
    })
}

fn euler_cross_check() -> Outcome {
    within(Duration::from_secs(5), || {
        let cache = HilbCache::in_memory();
        for n in 0..=12 {
            let h = hilb_poincare(n, &cache).map_err(|e| e.to_string())?;
            let oracle = colored_partition_euler(n);
            ensure(h.euler() == oracle, || {
                format!("n = {n}: P(1) = {} vs {oracle}", h.euler())
            })?;
        }
        Ok(())
    })
}

fn palindromic_odd_vanishing() -> Outcome {
    let cache = HilbCache::in_memory();
    for n in 0..=12 {
        let h = hilb_poincare(n, &cache).map_err(|e| e.to_string())?;
        ensure(h.is_palindromic() && h.odd_vanishing(), || {
            format!("n = {n}")
        })?;
        ensure(h.poly().degree() == Some(4 * n), || {
            format!("n = {n}: degree")
        })?;
    }
    Ok(())
}

/// Independent count of monomials of degree `s` in two degree-1 and three
/// degree-`m` variables for each `m >= 2`.
fn stable_by_enumeration(s: usize) -> u64 {
    fn go(slots: &[usize], left: usize) -> u64 {
        match slots.split_first() {
            None => u64::from(left == 0),
            Some((&w, rest)) => (0..=left / w).map(|e| go(rest, left - e * w)).sum(),
        }
    }
    let mut slots = vec![1, 1];
    for m in 2..=s.max(1) {
        slots.extend([m; 3]);
    }
    go(&slots, s)
}

fn stable_series_three_routes() -> Outcome {
    within(Duration::from_secs(2), || {
        let expect = big(&[1, 2, 6, 13, 29, 57]);
        let r = stable_series(11).map_err(|e| e.to_string())?;
        let cache = HilbCache::in_memory();
        for (s, want) in expect.iter().enumerate() {
            let series = r.coeff(2 * s).map_err(|e| e.to_string())?;
            let brute = BigInt::from(stable_by_enumeration(s));
            ensure(&series == want && &brute == want, || {
                format!("s = {s}: series {series}, enumeration {brute}, expected {want}")
            })?;
            for n in 2 * s..=12 {
                let h = hilb_poincare(n, &cache).map_err(|e| e.to_string())?;
                ensure(&h.betti(s) == want, || {
                    format!("s = {s}, n = {n}: {}", h.betti(s))
                })?;
            }
        }
        Ok(())
    })
}

fn minimality() -> Outcome {
    for d in 5i64..=9 {
        for i in 0..(d as usize - 1) {
            let a = a_coeff(d, i).map_err(|e| e.to_string())?;
            ensure(a == stable_betti(i), || {
                format!("d = {d}, i = {i}: a = {a}")
            })?;
        }
    }
    Ok(())
}

fn deficits() -> Outcome {
    for d in 5i64..=9 {
        let du = d as usize;
        let a1 = a_coeff(d, du - 1).map_err(|e| e.to_string())?;
        let a2 = a_coeff(d, du).map_err(|e| e.to_string())?;
        ensure(a1 == stable_betti(du - 1) - 3, || {
            format!("d = {d}: a_(2(d-1)) = {a1}")
        })?;
        ensure(a2 == stable_betti(du) - 9, || {
            format!("d = {d}: a_(2d) = {a2}")
        })?;
    }
    Ok(())
}

fn betti_table() -> Outcome {
    within(Duration::from_secs(10), || {
        let cache = HilbCache::in_memory();
        let t = m_betti_table(5, -6, &cache).map_err(|e| e.to_string())?;
        ensure(t.values() == big(&[1, 2, 6, 13, 26, 45]), || {
            format!("{:?}", t.values())
        })?;
        for d in 5i64..=9 {
            let du = d as usize;
            let t = m_betti_table(d, -d - 1, &cache).map_err(|e| e.to_string())?;
            let h = hilb_poincare(t.n, &cache).map_err(|e| e.to_string())?;
            let drops: Vec<BigInt> = (du - 1..=du)
                .map(|k| h.betti(k) - t.b2k(k).unwrap())
                .collect();
            ensure(drops == big(&[3, 12]), || {
                format!("d = {d}: drops {drops:?}")
            })?;
            for i in 0..=du {
                let r = relation_count(d, -d - 1, i, &cache).map_err(|e| e.to_string())?;
                let want = BigInt::from(if i == du { 3 } else { 0 });
                ensure(r == want, || format!("d = {d}, i = {i}: {r} relations"))?;
            }
        }
        Ok(())
    })
}

fn congruence_chain() -> Outcome {
    within(Duration::from_secs(10), || {
        let cache = HilbCache::in_memory();
        for d in 5i64..=8 {
            let report = verify_congruence_chain(d, &cache).map_err(|e| e.to_string())?;
            ensure(report.all_pass, || {
                format!(
                    "d = {d}: failing {:?}",
                    report.failing().map(|c| &c.name).collect::<Vec<_>>()
                )
            })?;
            let bounds: Vec<i64> = report.checks.iter().map(|c| c.bound).collect();
            let m = d * d - d;
            ensure(bounds == [2 * (m + 1), 2 * m, 2 * m], || {
                format!("d = {d}: bounds {bounds:?}")
            })?;
            let c = correction_polynomial(d, &cache).map_err(|e| e.to_string())?;
            let top = 2 * (m + 2) as usize;
            let got = (c.degree(), c.coeff(top), c.coeff(top - 2));
            ensure(
                got == (Some(top), BigInt::from(3), BigInt::from(12)),
                || format!("d = {d}: {got:?}"),
            )?;
        }
        mutations()
    })
}

/// Every chain constant shifted by ±1 must make `verify` exit with 1, except
/// the merge bound: that step is an exact identity, so its difference is zero
/// and lies in every filtration piece.
fn mutations() -> Outcome {
    let cache_dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_motivic-betti");
    let status = |extra: &[String]| -> Result<Option<i32>, String> {
        Command::new(bin)
            .args(["verify", "--d", "5", "--format", "csv", "--cache-dir"])
            .arg(cache_dir.path())
            .args(extra)
            .output()
            .map(|o| o.status.code())
            .map_err(|e| e.to_string())
    };
    ensure(status(&[])? == Some(0), || "unperturbed run failed".into())?;
    for field in ChainConstants::FIELDS {
        for delta in [-1, 1] {
            let arg = vec!["--mutate".to_owned(), format!("{field}={delta}")];
            let code = status(&arg)?;
            let want = if field == "merge_bound" { 0 } else { 1 };
            ensure(code == Some(want), || {
                format!("{field}{delta:+}: exit {code:?}")
            })?;
        }
    }
    Ok(())
}

fn random_poly(rng: &mut ChaCha8Rng, len: usize) -> IntPoly {
    let coeffs: Vec<i64> = (0..rng.gen_range(0..=len))
        .map(|_| rng.gen_range(-9..=9))
        .collect();
    IntPoly::from_i64s(&coeffs)
}

fn random_class(rng: &mut ChaCha8Rng) -> MotivicClass {
    let mut c = MotivicClass::from_poly(random_poly(rng, 6)).times_l_pow(rng.gen_range(-4..=4));
    for _ in 0..rng.gen_range(0..=3) {
        c = c.over_l_pow_minus_one(rng.gen_range(1..=4));
    }
    c
}

fn kernel_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let err = |e: motivic_betti::Error| e.to_string();
    for _ in 0..200 {
        let cap = rng.gen_range(1..=64);
        let s = |rng: &mut ChaCha8Rng| TruncatedSeries::new(random_poly(rng, 12), cap);
        let (a, b, c) = (s(&mut rng), s(&mut rng), s(&mut rng));
        ensure(a.mul(&b).map_err(err)? == b.mul(&a).map_err(err)?, || {
            "commutativity".into()
        })?;
        ensure(
            a.mul(&b).and_then(|ab| ab.mul(&c)).map_err(err)?
                == b.mul(&c).and_then(|bc| a.mul(&bc)).map_err(err)?,
            || "associativity".into(),
        )?;
        ensure(
            a.mul(&b.add(&c).map_err(err)?).map_err(err)?
                == a.mul(&b)
                    .map_err(err)?
                    .add(&a.mul(&c).map_err(err)?)
                    .map_err(err)?,
            || "distributivity".into(),
        )?;
        let mut unit = random_poly(&mut rng, 30).into_coeffs();
        unit.resize(unit.len().max(1), BigInt::default());
        unit[0] = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
        let u = TruncatedSeries::new(IntPoly::from_coeffs(unit), cap);
        let prod = u.mul(&u.inverse().map_err(err)?).map_err(err)?;
        ensure(prod == TruncatedSeries::one(cap), || {
            format!("inverse round trip at cap {cap}")
        })?;
    }
    for _ in 0..100 {
        let (a, b) = (random_class(&mut rng), random_class(&mut rng));
        let (pa, pb) = (virtual_poincare(&a), virtual_poincare(&b));
        ensure(virtual_poincare(&(&a * &b)) == pa.mul(&pb), || {
            format!("P_v({a} * {b})")
        })?;
        ensure(virtual_poincare(&(&a + &b)) == pa.add(&pb), || {
            format!("P_v({a} + {b})")
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "1 Göttsche expansion of Hilb^1, Hilb^2",
            goettsche_expansion,
        ),
        (
            "2 Euler numbers vs colored partitions, n <= 12",
            euler_cross_check,
        ),
        (
            "3 palindromic, odd Betti numbers vanish, n <= 12",
            palindromic_odd_vanishing,
        ),
        (
            "4 stable Betti numbers by three routes",
            stable_series_three_routes,
        ),
        (
            "5 monomial counts equal stable values below d-1",
            minimality,
        ),
        ("6 monomial deficits 3 and 9 at d-1, d", deficits),
        (
            "7 Betti table, corrections -3/-12, relation counts",
            betti_table,
        ),
        (
            "8 congruence chain d = 5..8 and mutation run",
            congruence_chain,
        ),
        (
            "9 kernel ring laws and measure homomorphism",
            kernel_properties,
        ),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS  {name}  ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
