use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::label::Label;
use crate::power::{layer_profile, layer_profile_bfs, Expansion, Generators, UnitPolicy};
use crate::semiring::{MeasuredSemiring, SupportSet};

/// `log₂ x` from the bit length and the leading 64 bits, so huge values never
/// pass through a lossy float conversion of the whole integer.
pub fn log2_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        let v: u64 = x.try_into().expect("fits in 64 bits");
        return (v as f64).log2();
    }
    let shift = bits - 64;
    let top: u64 = (x >> shift).try_into().expect("exactly 64 bits");
    (top as f64).log2() + shift as f64
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRecord {
    pub n: usize,
    pub support_size: BigUint,
    pub dim_vn: BigUint,
    pub log2_dim_vn: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthSeries {
    pub ring: String,
    pub generators: Vec<Label>,
    pub unit_adjoined: bool,
    pub records: Vec<GrowthRecord>,
}

impl GrowthSeries {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn dims(&self) -> impl Iterator<Item = &BigUint> {
        self.records.iter().map(|r| &r.dim_vn)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthOptions {
    pub expansion: Expansion,
    /// Use per-factor profiles for product rings when the generators split.
    pub factorize: bool,
}

impl Default for GrowthOptions {
    fn default() -> Self {
        GrowthOptions {
            expansion: Expansion::default(),
            factorize: true,
        }
    }
}

/// Records `(n, |F_n|, dim V^n)` for `n = 1..=N`.
pub fn growth_series(ring: &MeasuredSemiring, gens: &Generators, n_max: usize) -> Result<GrowthSeries> {
    growth_series_with(ring, gens, n_max, GrowthOptions::default())
}

/// Same as [`growth_series`] for a raw support set; the unit is adjoined if missing.
pub fn growth_series_of(ring: &MeasuredSemiring, f: &SupportSet, n_max: usize) -> Result<GrowthSeries> {
    let gens = Generators::from_support(f, ring, UnitPolicy::Adjoin)?;
    growth_series(ring, &gens, n_max)
}

pub fn growth_series_with(
    ring: &MeasuredSemiring,
    gens: &Generators,
    n_max: usize,
    opts: GrowthOptions,
) -> Result<GrowthSeries> {
    if n_max == 0 {
        return Err(Error::InvalidParameter("number of steps must be at least 1".into()));
    }
    if gens.set().ring_id() != ring.id() {
        return Err(Error::RingMismatch {
            left: ring.id().to_string(),
            right: gens.set().ring_id().to_string(),
        });
    }
    let profile = if opts.factorize {
        layer_profile(ring, gens, n_max, opts.expansion)
    } else {
        layer_profile_bfs(ring, gens, n_max, opts.expansion)
    };
    let mut size = profile.counts[0].clone();
    let mut dim = profile.weights[0].clone();
    let records = (1..=n_max)
        .map(|n| {
            size += &profile.counts[n];
            dim += &profile.weights[n];
            GrowthRecord {
                n,
                support_size: size.clone(),
                dim_vn: dim.clone(),
                log2_dim_vn: log2_biguint(&dim),
            }
        })
        .collect();
    Ok(GrowthSeries {
        ring: ring.id().to_string(),
        generators: gens.labels().cloned().collect(),
        unit_adjoined: gens.unit_adjoined(),
        records,
    })
}
