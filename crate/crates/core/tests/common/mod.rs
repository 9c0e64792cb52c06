#![allow(dead_code)]

use std::path::PathBuf;

use gkdim_core::catalog::parse_ring;
use gkdim_core::power::power_support_sequence;
use gkdim_core::{fuse_elements, Label, MeasuredSemiring};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn ring_file(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../rings");
    p.push(name);
    p.to_string_lossy().into_owned()
}

/// Catalog rings with generating sets and a step count giving a useful label pool.
pub fn catalog() -> Vec<(String, &'static str, usize)> {
    vec![
        ("torus:1".into(), "1;-1", 6),
        ("torus:2".into(), "(1,0);(0,1);(-1,0);(0,-1)", 4),
        ("torus:3".into(), "(1,0,0);(0,1,0);(0,0,1);(-1,0,0);(0,-1,0);(0,0,-1)", 3),
        ("sl2".into(), "1", 10),
        ("gl2".into(), "(1,0);(0,1);(0,-1)", 5),
        ("sln:2".into(), "1", 10),
        ("sln:3".into(), "(1,0);(1,1)", 5),
        ("sln:4".into(), "(1,0,0);(1,1,0);(1,1,1)", 4),
        ("be:3".into(), "1", 10),
        ("be:4".into(), "1", 10),
        ("gef:3".into(), "(1,0);(0,1);(0,-1)", 5),
        ("product:sl2,torus:1".into(), "[1|0];[0|1];[0|-1]", 5),
        ("product:be:3,gl2".into(), "[1|(0,0)];[0|(1,0)];[0|(0,1)]", 4),
        (format!("dsl:{}", ring_file("z2.ring")), "g", 2),
        (format!("dsl:{}", ring_file("s3.ring")), "r", 3),
    ]
}

/// Every label reachable within `steps` fusion steps of `gens`.
pub fn label_pool(ring: &MeasuredSemiring, gens: &str, steps: usize) -> Vec<Label> {
    let labels: Vec<Label> = gkdim_core::split_label_list(gens)
        .into_iter()
        .map(|s| ring.parse_label(s).unwrap())
        .collect();
    let f = ring.support_set(labels).unwrap();
    let seq = power_support_sequence(ring, &f, steps).unwrap();
    seq.last().unwrap().iter().cloned().collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pick<'a>(pool: &'a [Label], r: &mut ChaCha8Rng) -> &'a Label {
    pool.choose(r).unwrap()
}

/// `dim(a)·dim(b)` against the dimension of the decomposition, with `dim` supplied by the caller.
pub fn multiplicative_with(
    ring: &MeasuredSemiring,
    a: &Label,
    b: &Label,
    dim: impl Fn(&Label) -> BigUint,
) -> Result<(), String> {
    let p = ring.fuse(a, b).map_err(|e| e.to_string())?;
    let lhs = dim(a) * dim(b);
    let rhs: BigUint = p.terms().map(|(l, m)| m * dim(l)).sum();
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: dim {a} · dim {b} = {lhs} but {p} has dim {rhs}", ring.id()))
    }
}

pub fn associative(ring: &MeasuredSemiring, a: &Label, b: &Label, c: &Label) -> Result<(), String> {
    let (x, y, z) = (ring.simple(a.clone()).unwrap(), ring.simple(b.clone()).unwrap(), ring.simple(c.clone()).unwrap());
    let left = fuse_elements(ring, &fuse_elements(ring, &x, &y).unwrap(), &z).unwrap();
    let right = fuse_elements(ring, &x, &fuse_elements(ring, &y, &z).unwrap()).unwrap();
    if left == right {
        Ok(())
    } else {
        Err(format!("{}: ({a}⊗{b})⊗{c} = {left} but {a}⊗({b}⊗{c}) = {right}", ring.id()))
    }
}

pub fn unital(ring: &MeasuredSemiring, a: &Label) -> Result<(), String> {
    let u = ring.unit();
    let s = ring.simple(a.clone()).unwrap();
    if ring.fuse(&u, a).unwrap() == s && ring.fuse(a, &u).unwrap() == s {
        Ok(())
    } else {
        Err(format!("{}: unit law fails at {a}", ring.id()))
    }
}

/// Axiom suite over random samples of a ring's label pool.
pub fn axiom_suite(id: &str, gens: &str, steps: usize, pairs: usize, triples: usize, seed: u64) -> Result<(), String> {
    let ring = parse_ring(id).map_err(|e| e.to_string())?;
    let pool = label_pool(&ring, gens, steps);
    let mut r = rng(seed);
    for a in &pool {
        unital(&ring, a)?;
    }
    for _ in 0..pairs {
        let (a, b) = (pick(&pool, &mut r), pick(&pool, &mut r));
        multiplicative_with(&ring, a, b, |l| ring.dim(l).unwrap())?;
    }
    for _ in 0..triples {
        let (a, b, c) = (pick(&pool, &mut r), pick(&pool, &mut r), pick(&pool, &mut r));
        associative(&ring, a, b, c)?;
    }
    Ok(())
}

/// Number of semistandard tableaux of shape `lambda` with entries `1..=n`,
/// by the hook-content formula.
pub fn hook_content_dim(lambda: &[i64], n: usize) -> BigUint {
    let rows: Vec<usize> = lambda.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
    let col_len = |j: usize| rows.iter().filter(|&&r| r > j).count();
    let (mut num, mut den) = (BigUint::from(1u32), BigUint::from(1u32));
    for (i, &len) in rows.iter().enumerate() {
        for j in 0..len {
            let content = n as i64 + j as i64 - i as i64;
            let hook = (len - j - 1) + (col_len(j) - i - 1) + 1;
            num *= content as u64;
            den *= hook as u64;
        }
    }
    num / den
}
