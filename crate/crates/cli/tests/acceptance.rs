//! Acceptance criteria, one line each. Run with
//! `cargo test -p pdr-cli --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pdr_cli::cache;
use pdr_core::weyl::{
    type_a_characters, verify_by_enumeration, MolienData, DEFAULT_ENUMERATION_BUDGET,
};
use pdr_core::{
    fake_degree_qhook, hp0_slice_series, ih_orbit_closure, kostka_foulkes, partitions_of,
    pn_series, printed_audit, springer_fiber_series, syt_major_index_genfun, BiLaurentPoly, Family,
    LaurentPoly, Partition, WeylType,
};

type Outcome = Result<String, String>;

/// Name, check, and time limit in seconds (0 for none).
type Criterion = (&'static str, fn() -> Outcome, u64);

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `n^2 - sum of squared column lengths`, computed here rather than taken
/// from the library.
fn orbit_dim(l: &Partition) -> i64 {
    let n = l.size() as i64;
    let mut cols = vec![0i64; l.part(0) as usize];
    for &p in l.parts() {
        for c in cols.iter_mut().take(p as usize) {
            *c += 1;
        }
    }
    n * n - cols.iter().map(|c| c * c).sum::<i64>()
}

fn k_g(l: &Partition) -> LaurentPoly {
    kostka_foulkes(l, &Partition::column(l.size())).unwrap()
}

/// `v^{dim O_l} K_l(v^{-2})`.
fn weighted(l: &Partition) -> LaurentPoly {
    k_g(l).substitute_power(-2).unwrap().shift(orbit_dim(l))
}

fn all_partitions(max_n: u32) -> impl Iterator<Item = Partition> {
    (1..=max_n).flat_map(partitions_of)
}

fn ac1() -> Outcome {
    for n in 1..=8 {
        let v = pn_series(n).poly.eval_at_one();
        if v != factorial(n) {
            return Err(format!("n={n}: P_N(1,1)={v}"));
        }
    }
    let mut seen = Vec::new();
    for (f, r, order) in [
        (Family::B, 2, 8),
        (Family::B, 3, 48),
        (Family::G2, 2, 12),
        (Family::F4, 4, 1152),
    ] {
        let w = WeylType::new(f, r).unwrap();
        let p = MolienData::new(&w, DEFAULT_ENUMERATION_BUDGET)
            .and_then(|d| d.pn_series())
            .map_err(|e| format!("{w}: {e}"))?;
        if p.eval_at_one() != BigInt::from(order) {
            return Err(format!("{w}: P_N(1,1)={}", p.eval_at_one()));
        }
        seen.push(format!("{w}={order}"));
    }
    Ok(format!("n!=P_N(1,1) for n<=8; {}", seen.join(" ")))
}

fn ac2() -> Outcome {
    let mut count = 0;
    for n in 1..=7u32 {
        let data = MolienData::new(&WeylType::symmetric(n as usize).unwrap(), 0).unwrap();
        let big_n = (n * (n - 1) / 2) as i64;
        for l in partitions_of(n) {
            // Fake degrees in q; charge enters through q^N K(q^{-1}).
            let by_charge = k_g(&l).reverse().shift(big_n);
            let by_hook = fake_degree_qhook(&l);
            let by_molien = data
                .fake_degree(&type_a_characters(&l))
                .map_err(|e| format!("{l}: {e}"))?;
            let by_maj = syt_major_index_genfun(&l);
            if by_charge != by_hook || by_hook != by_molien || by_molien != by_maj {
                return Err(format!(
                    "{l}: {by_charge} | {by_hook} | {by_molien} | {by_maj}"
                ));
            }
            count += 1;
        }
    }
    Ok(format!(
        "{count} partitions agree across charge, q-hook, Molien and major index"
    ))
}

fn ac3() -> Outcome {
    for n in 1..=6u32 {
        let w = WeylType::symmetric(n as usize).unwrap();
        let molien = MolienData::new(&w, 0)
            .and_then(|d| d.pn_series())
            .map_err(|e| e.to_string())?;
        let direct = pn_series(n).poly;
        if molien != direct {
            return Err(format!("n={n}: {direct} vs {molien}"));
        }
    }
    Ok("per-partition sum equals the character-free average for n<=6".into())
}

fn ac4() -> Outcome {
    let expect = BiLaurentPoly::from_terms([((0, 0), BigInt::from(1)), ((2, -2), BigInt::from(1))]);
    let got = pn_series(2).poly;
    if got != expect {
        return Err(format!("P_N = {got}"));
    }
    let cli = pdr_cli::run(["pdr", "pn", "--n", "2", "--format", "json"]);
    let r = pdr_cli::QueryResult::from_json(&cli.stdout).map_err(|e| e.to_string())?;
    if r.result.to_bilaurent()? != expect {
        return Err(format!("cli returned {}", cli.stdout));
    }
    Ok(format!("P_N = {got}"))
}

fn ac5() -> Outcome {
    let mut count = 0;
    for l in all_partitions(7) {
        let lhs = weighted(&l);
        let rhs = weighted(&l.conjugate());
        if lhs != rhs {
            return Err(format!("{l}: {lhs} vs {rhs}"));
        }
        if hp0_slice_series(&l) != lhs {
            return Err(format!(
                "{l}: library HP0 disagrees with the direct formula"
            ));
        }
        count += 1;
    }
    Ok(format!("{count} partitions with n<=7"))
}

fn ac6() -> Outcome {
    let mut count = 0;
    for l in all_partitions(6) {
        let hp0 = hp0_slice_series(&l);
        let ih = ih_orbit_closure(&l.conjugate());
        if hp0 != ih {
            return Err(format!("{l}: HP0 {hp0} vs IH {ih}"));
        }
        count += 1;
    }
    Ok(format!("{count} partitions with n<=6"))
}

fn ac7() -> Outcome {
    for n in 1..=6 {
        let zero = springer_fiber_series(&Partition::column(n)).poly;
        if zero != pn_series(n).poly {
            return Err(format!("n={n}: fiber over 0 is {zero}"));
        }
        let regular = springer_fiber_series(&Partition::row(n)).poly;
        if regular != BiLaurentPoly::one() {
            return Err(format!("n={n}: fiber over a regular element is {regular}"));
        }
    }
    Ok("phi=(1^n) gives P_N and phi=(n) gives 1 for n<=6".into())
}

fn ac8() -> Outcome {
    let mut lowest = 0;
    for n in 1..=8 {
        let p = pn_series(n).poly;
        let (lo, hi) = p.y_range().ok_or("empty series")?;
        if hi > 0 {
            return Err(format!("n={n}: y^{hi} occurs"));
        }
        lowest = lowest.min(lo);
    }
    Ok(format!("max y-exponent 0, min {lowest} over n<=8"))
}

fn ac9() -> Outcome {
    let mut count = 0;
    for l in all_partitions(7) {
        let n = l.size() as i64;
        let lhs = syt_major_index_genfun(&l.conjugate());
        let rhs = fake_degree_qhook(&l).reverse().shift(n * (n - 1) / 2);
        if lhs != rhs {
            return Err(format!("{l}: {lhs} vs {rhs}"));
        }
        count += 1;
    }
    Ok(format!("{count} partitions with n<=7"))
}

fn ac10() -> Outcome {
    // (family, rank, |W|, N) from the standard tables.
    let expected = [
        (Family::A, 1, 2, 1),
        (Family::A, 2, 6, 3),
        (Family::A, 3, 24, 6),
        (Family::A, 4, 120, 10),
        (Family::B, 2, 8, 4),
        (Family::B, 3, 48, 9),
        (Family::B, 4, 384, 16),
        (Family::D, 4, 192, 12),
        (Family::G2, 2, 12, 6),
        (Family::F4, 4, 1152, 24),
    ];
    let mut seen = Vec::new();
    for (f, r, order, n_pos) in expected {
        let w = WeylType::new(f, r).unwrap();
        let prod: u64 = w.degrees.iter().map(|&d| d as u64).product();
        let sum: u64 = w.degrees.iter().map(|&d| d as u64 - 1).sum();
        let e = verify_by_enumeration(&w, DEFAULT_ENUMERATION_BUDGET)
            .map_err(|e| format!("{w}: {e}"))?;
        if (prod, sum, e.order, e.reflections) != (order, n_pos, order, n_pos) {
            return Err(format!(
                "{w}: prod d={prod} sum(d-1)={sum} enumerated |W|={} reflections={}",
                e.order, e.reflections
            ));
        }
        seen.push(w.to_string());
    }
    Ok(format!("enumerated {}", seen.join(" ")))
}

fn ac11() -> Outcome {
    let mut rows = Vec::new();
    for mu in all_partitions(6) {
        let a = printed_audit(&mu);
        let k = a
            .ratio_exponent
            .ok_or_else(|| format!("{mu}: ratio is not a power of y"))?;
        let two_n = 2 * mu.n_stat() as i64;
        let dim = orbit_dim(&mu);
        if k != two_n - dim {
            return Err(format!("{mu}: exponent {k} but 2n-dimO={}", two_n - dim));
        }
        rows.push(format!("{mu}:{k}"));
    }
    Ok(format!(
        "pure y-power; exponent = 2n(mu) - dim O_mu; {}",
        rows.join(" ")
    ))
}

fn ac12() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let start = Instant::now();
    let cold = cache::load_or_compute(Some(dir.path()), 8);
    let cold_time = start.elapsed();
    if cold.cache_hit || !cold.warnings.is_empty() {
        return Err(format!(
            "cold run: hit={} warnings={:?}",
            cold.cache_hit, cold.warnings
        ));
    }
    let pairs = cold.table.entries.len();
    let start = Instant::now();
    let warm = cache::load_or_compute(Some(dir.path()), 8);
    let warm_time = start.elapsed();
    if !warm.cache_hit || warm.table != cold.table {
        return Err("reload was not a faithful cache hit".into());
    }
    if cold_time > Duration::from_secs(300) || warm_time > Duration::from_secs(1) {
        return Err(format!("cold {cold_time:?}, reload {warm_time:?}"));
    }
    Ok(format!(
        "{pairs} dominance pairs; cold {cold_time:?}, reload {warm_time:?}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("regular-representation count", ac1, 30),
        ("fake-degree oracle triangle", ac2, 60),
        ("P_N double computation", ac3, 30),
        ("sl2 closed form", ac4, 0),
        ("duality identity", ac5, 0),
        ("HP0 = IH of the dual orbit closure", ac6, 0),
        ("Springer fiber specializations", ac7, 0),
        ("nonpositive weights", ac8, 0),
        ("coinvariant self-duality", ac9, 0),
        ("degree table by enumeration", ac10, 0),
        ("printed slice formula audit", ac11, 0),
        ("Kostka table performance", ac12, 0),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if *limit > 0 && elapsed > Duration::from_secs(*limit) && outcome.is_ok() {
            outcome = Err(format!("took {elapsed:?}, limit {limit} s"));
        }
        match outcome {
            Ok(detail) => println!("AC{:<2} PASS {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("AC{:<2} FAIL {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
