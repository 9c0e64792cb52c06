//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gkdim_core::analysis::{estimate_gkdim, find_witness, growth_series, Classification, GkEstimate, GrowthSeries, IsoMap};
use gkdim_core::catalog::{parse_ring, qint_dims, weyl_dim};
use gkdim_core::{Error, Generators, Label, UnitPolicy};
use num_bigint::BigUint;

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn series(ring: &str, gens: &str, n: usize) -> GrowthSeries {
    let r = parse_ring(ring).unwrap();
    let g = Generators::parse(&r, gens, UnitPolicy::Strict).unwrap();
    growth_series(&r, &g, n).unwrap()
}

fn degree(est: &GkEstimate, target: f64, tol: f64) -> Outcome {
    match (est.classification, est.degree) {
        (Classification::Polynomial, Some(d)) if (d - target).abs() <= tol => Ok(format!("degree {d:.4}")),
        _ => Err(format!("expected degree {target} ± {tol}, got {est:?}")),
    }
}

fn within(elapsed: Duration, limit_s: f64, inner: Outcome) -> Outcome {
    let msg = inner?;
    let t = elapsed.as_secs_f64();
    if t < limit_s {
        Ok(format!("{msg}, {t:.2} s"))
    } else {
        Err(format!("{msg}, but took {t:.2} s (limit {limit_s} s)"))
    }
}

fn sl2_exact() -> Outcome {
    let start = Instant::now();
    let s = series("sl2", "0;1", 1024);
    for rec in s.records.iter().take(1000) {
        let n = rec.n as u64;
        let closed = BigUint::from((n + 1) * (n + 2) * (2 * n + 3) / 6);
        if rec.dim_vn != closed {
            return Err(format!("n = {n}: {} vs closed form {closed}", rec.dim_vn));
        }
    }
    let est = estimate_gkdim(&s).unwrap();
    within(start.elapsed(), 5.0, degree(&est, 3.0, 0.05).map(|d| format!("closed form n ≤ 1000, {d}")))
}

fn gl2() -> Outcome {
    let start = Instant::now();
    let est = estimate_gkdim(&series("gl2", "(0,0);(1,0);(0,1);(0,-1)", 1024)).unwrap();
    within(start.elapsed(), 30.0, degree(&est, 4.0, 0.1))
}

fn torus() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for r in 1..=3usize {
        let mut gens = vec![if r == 1 { "0".to_string() } else { format!("({})", vec!["0"; r].join(",")) }];
        for i in 0..r {
            for s in [1, -1] {
                let mut v = vec![0i64; r];
                v[i] = s;
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                gens.push(if r == 1 { parts[0].clone() } else { format!("({})", parts.join(",")) });
            }
        }
        let est = estimate_gkdim(&series(&format!("torus:{r}"), &gens.join(";"), 1024)).unwrap();
        parts.push(format!("r={r}: {}", degree(&est, r as f64, 0.1)?));
    }
    within(start.elapsed(), 30.0, Ok(parts.join("; ")))
}

fn sl3() -> Outcome {
    let start = Instant::now();
    let est = estimate_gkdim(&series("sln:3", "(0,0);(1,0);(1,1)", 256)).unwrap();
    within(start.elapsed(), 60.0, degree(&est, 8.0, 0.3))
}

fn be3() -> Outcome {
    let start = Instant::now();
    let est = estimate_gkdim(&series("be:3", "0;1", 128)).unwrap();
    let target = 2.0 * ((3.0 + 5f64.sqrt()) / 2.0).log2();
    let verdict = match (est.classification, est.rate) {
        (Classification::Exponential, Some(rate)) if (rate - target).abs() <= 0.05 => {
            Ok(format!("exponential, rate {rate:.4} vs {target:.4}"))
        }
        _ => Err(format!("expected exponential with rate {target:.4} ± 0.05, got {est:?}")),
    };
    within(start.elapsed(), 5.0, verdict)
}

fn witness() -> Outcome {
    let (a, b) = (parse_ring("be:4").unwrap(), parse_ring("sl2").unwrap());
    let map = IsoMap::parse(&a, &b, "1=1").unwrap();
    let cert = find_witness(&a, &b, &map, 4).unwrap().ok_or("no witness found")?;
    if cert.ratio_num != BigUint::from(2u32) || cert.ratio_den != BigUint::from(1u32) {
        return Err(format!("ratio {}/{}", cert.ratio_num, cert.ratio_den));
    }
    if cert.bound() != "dim S_n >= 2^n" {
        return Err(cert.bound());
    }
    // u_{n+1} = 4u_n − u_{n−1} fits in u128 up to n = 64
    let mut u: Vec<u128> = vec![1, 4];
    for k in 1..64 {
        u.push(4 * u[k] - u[k - 1]);
    }
    let table = qint_dims(4, 64).unwrap();
    for n in 0..=64usize {
        if table[n] != BigUint::from(u[n]) || a.dim(&Label::Int(n as i64)).unwrap() != BigUint::from(u[n]) {
            return Err(format!("u_{n} disagrees with the recursion"));
        }
        if u[n] < 1u128 << n {
            return Err(format!("u_{n} = {} < 2^{n}", u[n]));
        }
    }
    Ok(format!("witness {} with ρ = 2, u_n ≥ 2^n for n ≤ 64", cert.witness))
}

fn invariance() -> Outcome {
    let (a, b) = (series("sl2", "0;1", 256), series("be:2", "0;1", 256));
    match a.records.iter().zip(&b.records).find(|(x, y)| x != y) {
        None if a.len() == b.len() => Ok("256 records equal".into()),
        None => Err("lengths differ".into()),
        Some((x, y)) => Err(format!("n = {}: {:?} vs {:?}", x.n, x, y)),
    }
}

fn axioms() -> Outcome {
    let rings = catalog();
    for (i, (id, gens, steps)) in rings.iter().enumerate() {
        axiom_suite(id, gens, *steps, 200, 100, 0x5eed + i as u64)?;
    }
    // LR products against dimensions from the hook-content formula, which
    // shares no code with the Weyl product in the library
    for n in [3usize, 4] {
        let ring = parse_ring(&format!("sln:{n}")).unwrap();
        let gens = if n == 3 { "(1,0);(1,1)" } else { "(1,0,0);(1,1,0);(1,1,1)" };
        let pool = label_pool(&ring, gens, 5);
        let dim = |l: &Label| hook_content_dim(l.as_parts().unwrap(), n);
        for l in &pool {
            if dim(l) != weyl_dim(l.as_parts().unwrap(), n) {
                return Err(format!("sln:{n}: Weyl and hook-content disagree at {l}"));
            }
        }
        let mut r = rng(n as u64);
        for _ in 0..200 {
            multiplicative_with(&ring, pick(&pool, &mut r), pick(&pool, &mut r), dim)?;
        }
    }
    Ok(format!("{} rings, 200 pairs and 100 triples each; LR on sl(3), sl(4)", rings.len()))
}

fn dsl() -> Outcome {
    let mut parts = Vec::new();
    for (file, gens) in [("z2.ring", "e;g"), ("s3.ring", "e;r")] {
        let id = format!("dsl:{}", ring_file(file));
        let est = estimate_gkdim(&series(&id, gens, 64)).unwrap();
        parts.push(format!("{file}: {}", degree(&est, 0.0, 0.01)?));
    }
    match parse_ring(&format!("dsl:{}", ring_file("s3_corrupt.ring"))) {
        Err(Error::RingDefinition(msg)) if msg.contains("(r,r)") => {
            let line = msg.lines().find(|l| l.contains("(r,r)")).unwrap().trim().to_string();
            parts.push(format!("corrupted S3 rejected: {line}"));
        }
        other => return Err(format!("corrupted S3 not rejected with a witness: {other:?}")),
    }
    Ok(parts.join("; "))
}

fn product() -> Outcome {
    let start = Instant::now();
    let gens = "[0|0];[0|1];[0|-1];[1|0];[1|1];[1|-1]";
    let est = estimate_gkdim(&series("product:sl2,torus:1", gens, 1024)).unwrap();
    within(start.elapsed(), 60.0, degree(&est, 4.0, 0.15))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("sl2 exact growth and degree 3", sl2_exact),
        ("gl2 degree 4", gl2),
        ("torus ranks 1-3", torus),
        ("sln:3 degree 8", sl3),
        ("be:3 exponential rate", be3),
        ("be:4 vs sl2 witness", witness),
        ("sl2 and be:2 series coincide", invariance),
        ("axiom suites", axioms),
        ("ring files", dsl),
        ("product:sl2,torus:1 degree 4", product),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
