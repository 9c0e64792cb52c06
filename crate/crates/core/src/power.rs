//! Supports of tensor powers, computed by sparse frontier expansion.
//!
//! With the unit in the generating set `F`, the supports `F_n` of `F^{⊗n}`
//! are nested, and `F_{n+1} = F_n ∪ L_n·F` where `L_n = F_n \ F_{n−1}` is
//! the newest layer. Each step therefore only fuses the last layer against
//! the generators, and only label supports are tracked.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::Zero;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::label::{split_label_list, Label};
use crate::semiring::{MeasuredSemiring, SupportSet};

/// What to do when the generating set lacks the unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnitPolicy {
    #[default]
    Adjoin,
    Strict,
}

/// How a frontier layer is fused against the generators.
///
/// Without the `parallel` feature, [`Expansion::Parallel`] runs sequentially.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expansion {
    Sequential,
    Parallel,
}

impl Default for Expansion {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Expansion::Parallel
        } else {
            Expansion::Sequential
        }
    }
}

/// A generating set that contains the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generators {
    set: SupportSet,
    unit_adjoined: bool,
}

impl Generators {
    pub fn new<I>(ring: &MeasuredSemiring, labels: I, policy: UnitPolicy) -> Result<Self>
    where
        I: IntoIterator<Item = Label>,
    {
        let mut labels: BTreeSet<Label> = labels.into_iter().collect();
        if labels.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for l in &labels {
            ring.check_label(l)?;
        }
        let unit = ring.unit();
        let unit_adjoined = !labels.contains(&unit);
        if unit_adjoined {
            if policy == UnitPolicy::Strict {
                return Err(Error::MissingUnit {
                    ring: ring.id().to_string(),
                    unit: unit.to_string(),
                });
            }
            labels.insert(unit);
        }
        Ok(Generators {
            set: SupportSet::from_parts(ring, labels),
            unit_adjoined,
        })
    }

    /// Parses a `;`- or `,`-separated list in the ring's label syntax.
    pub fn parse(ring: &MeasuredSemiring, list: &str, policy: UnitPolicy) -> Result<Self> {
        let labels = split_label_list(list)
            .into_iter()
            .map(|s| ring.parse_label(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, labels, policy)
    }

    pub fn from_support(set: &SupportSet, ring: &MeasuredSemiring, policy: UnitPolicy) -> Result<Self> {
        if set.ring_id() != ring.id() {
            return Err(Error::RingMismatch {
                left: ring.id().to_string(),
                right: set.ring_id().to_string(),
            });
        }
        Self::new(ring, set.iter().cloned(), policy)
    }

    pub fn set(&self) -> &SupportSet {
        &self.set
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.set.iter()
    }

    pub fn unit_adjoined(&self) -> bool {
        self.unit_adjoined
    }
}

/// Breadth-first layers `L_0 = {1}, L_1, L_2, …` of the power supports.
pub struct Frontier {
    ring: MeasuredSemiring,
    gens: Vec<Label>,
    seen: HashSet<Label>,
    layer: Vec<Label>,
    step: usize,
    mode: Expansion,
}

impl Frontier {
    pub fn new(ring: &MeasuredSemiring, gens: &Generators, mode: Expansion) -> Self {
        let unit = ring.unit();
        // L·1 = L, so the unit never contributes new labels
        let gens = gens.labels().filter(|g| **g != unit).cloned().collect();
        Frontier {
            ring: ring.clone(),
            gens,
            seen: HashSet::from([unit.clone()]),
            layer: vec![unit],
            step: 0,
            mode,
        }
    }

    pub fn step(&self) -> usize {
        self.step
    }

    /// Labels first reached at the current step, in canonical order.
    pub fn layer(&self) -> &[Label] {
        &self.layer
    }

    /// Number of labels in `F_step`.
    pub fn reached(&self) -> usize {
        self.seen.len()
    }

    pub fn advance(&mut self) -> &[Label] {
        let mut next = match self.mode {
            Expansion::Parallel => self.expand_parallel(),
            Expansion::Sequential => self.expand_sequential(),
        };
        sort_dedup(&mut next, self.mode);
        self.seen.extend(next.iter().cloned());
        self.layer = next;
        self.step += 1;
        &self.layer
    }

    fn expand_sequential(&self) -> Vec<Label> {
        let rule = self.ring.rule();
        let mut out = Vec::new();
        for a in &self.layer {
            for g in &self.gens {
                out.extend(
                    rule.fuse_support(a, g)
                        .into_iter()
                        .filter(|c| !self.seen.contains(c)),
                );
            }
        }
        out
    }

    #[cfg(feature = "parallel")]
    fn expand_parallel(&self) -> Vec<Label> {
        let rule = self.ring.rule();
        let (gens, seen) = (&self.gens, &self.seen);
        self.layer
            .par_iter()
            .flat_map_iter(|a| gens.iter().flat_map(move |g| rule.fuse_support(a, g)))
            .filter(|c| !seen.contains(c))
            .collect()
    }

    #[cfg(not(feature = "parallel"))]
    fn expand_parallel(&self) -> Vec<Label> {
        self.expand_sequential()
    }
}

fn sort_dedup(v: &mut Vec<Label>, mode: Expansion) {
    #[cfg(feature = "parallel")]
    if mode == Expansion::Parallel {
        v.par_sort_unstable();
        v.dedup();
        return;
    }
    let _ = mode;
    v.sort_unstable();
    v.dedup();
}

/// `Σ (dim S_β)²` over a batch of labels.
pub(crate) fn squared_dims(ring: &MeasuredSemiring, labels: &[Label], mode: Expansion) -> BigUint {
    let rule = ring.rule();
    let sq = |l: &Label| {
        let d = rule.dim(l);
        &d * &d
    };
    #[cfg(feature = "parallel")]
    if mode == Expansion::Parallel {
        return labels.par_iter().map(sq).reduce(BigUint::zero, |a, b| a + b);
    }
    let _ = mode;
    labels.iter().map(sq).sum()
}

/// `F_1, …, F_N` as explicit sets.
///
/// The unit is adjoined to `F` if missing. Memory grows with `N · |F_N|`; use
/// [`crate::analysis::growth_series`] for long runs.
pub fn power_support_sequence(ring: &MeasuredSemiring, f: &SupportSet, n_max: usize) -> Result<Vec<SupportSet>> {
    power_support_sequence_with(ring, f, n_max, Expansion::default())
}

pub fn power_support_sequence_with(
    ring: &MeasuredSemiring,
    f: &SupportSet,
    n_max: usize,
    mode: Expansion,
) -> Result<Vec<SupportSet>> {
    let gens = Generators::from_support(f, ring, UnitPolicy::Adjoin)?;
    let mut frontier = Frontier::new(ring, &gens, mode);
    let mut acc: BTreeSet<Label> = BTreeSet::from([ring.unit()]);
    let mut out = Vec::with_capacity(n_max);
    for _ in 0..n_max {
        acc.extend(frontier.advance().iter().cloned());
        out.push(SupportSet::from_parts(ring, acc.clone()));
    }
    Ok(out)
}

/// Per-layer label counts and squared-dimension weights for layers `0..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerProfile {
    pub counts: Vec<BigUint>,
    pub weights: Vec<BigUint>,
}

impl LayerProfile {
    fn with_len(len: usize) -> Self {
        LayerProfile {
            counts: vec![BigUint::zero(); len],
            weights: vec![BigUint::zero(); len],
        }
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Truncated Cauchy product: layer `m` pairs layers `i + j = m`.
    fn convolve(&self, other: &LayerProfile) -> LayerProfile {
        let len = self.len().min(other.len());
        let mut out = LayerProfile::with_len(len);
        for i in 0..len {
            for j in 0..len - i {
                if !self.counts[i].is_zero() && !other.counts[j].is_zero() {
                    out.counts[i + j] += &self.counts[i] * &other.counts[j];
                    out.weights[i + j] += &self.weights[i] * &other.weights[j];
                }
            }
        }
        out
    }

    /// Layers of `A_n × B_n`, from the cumulative products.
    fn diagonal(&self, other: &LayerProfile) -> LayerProfile {
        let len = self.len().min(other.len());
        let mut out = LayerProfile::with_len(len);
        let (mut ca, mut cb, mut wa, mut wb) = (BigUint::zero(), BigUint::zero(), BigUint::zero(), BigUint::zero());
        let (mut prev_c, mut prev_w) = (BigUint::zero(), BigUint::zero());
        for n in 0..len {
            ca += &self.counts[n];
            cb += &other.counts[n];
            wa += &self.weights[n];
            wb += &other.weights[n];
            let (c, w) = (&ca * &cb, &wa * &wb);
            out.counts[n] = &c - &prev_c;
            out.weights[n] = &w - &prev_w;
            prev_c = c;
            prev_w = w;
        }
        out
    }
}

/// Layer profile by explicit breadth-first expansion.
pub fn layer_profile_bfs(ring: &MeasuredSemiring, gens: &Generators, n_max: usize, mode: Expansion) -> LayerProfile {
    let mut frontier = Frontier::new(ring, gens, mode);
    let mut out = LayerProfile::with_len(n_max + 1);
    out.counts[0] = BigUint::from(1u32);
    out.weights[0] = squared_dims(ring, frontier.layer(), mode);
    for n in 1..=n_max {
        let layer = frontier.advance();
        if layer.is_empty() {
            break;
        }
        out.counts[n] = BigUint::from(layer.len());
        out.weights[n] = squared_dims(ring, layer, mode);
    }
    out
}

/// Layer profile, factoring through product structure when the generators allow it.
///
/// For a product ring `A × B` two generator shapes decompose exactly:
/// * axis sets `(F_A × {1}) ∪ ({1} × F_B)`: a pair `(a, b)` first appears at
///   step `d_A(a) + d_B(b)`, so the profile is the convolution of the factor
///   profiles;
/// * product sets `F_A × F_B`: `F_n = A_n × B_n`.
///
/// Anything else falls back to [`layer_profile_bfs`].
pub fn layer_profile(ring: &MeasuredSemiring, gens: &Generators, n_max: usize, mode: Expansion) -> LayerProfile {
    factored_profile(ring, gens, n_max, mode).unwrap_or_else(|| layer_profile_bfs(ring, gens, n_max, mode))
}

fn factored_profile(ring: &MeasuredSemiring, gens: &Generators, n_max: usize, mode: Expansion) -> Option<LayerProfile> {
    let (left, right) = ring.rule().factors()?;
    let split: Vec<(Label, Label)> = gens
        .labels()
        .map(|g| ring.rule().split_label(g))
        .collect::<Option<_>>()?;
    let (ul, ur) = (left.unit(), right.unit());

    if split.iter().all(|(a, b)| *a == ul || *b == ur) {
        let gl = split.iter().filter(|(_, b)| *b == ur).map(|(a, _)| a.clone());
        let gr = split.iter().filter(|(a, _)| *a == ul).map(|(_, b)| b.clone());
        let gl = Generators::new(&left, gl, UnitPolicy::Strict).ok()?;
        let gr = Generators::new(&right, gr, UnitPolicy::Strict).ok()?;
        let pl = layer_profile(&left, &gl, n_max, mode);
        let pr = layer_profile(&right, &gr, n_max, mode);
        return Some(pl.convolve(&pr));
    }

    let sl: BTreeSet<&Label> = split.iter().map(|(a, _)| a).collect();
    let sr: BTreeSet<&Label> = split.iter().map(|(_, b)| b).collect();
    if sl.len() * sr.len() == split.len() {
        let gl = Generators::new(&left, sl.into_iter().cloned(), UnitPolicy::Strict).ok()?;
        let gr = Generators::new(&right, sr.into_iter().cloned(), UnitPolicy::Strict).ok()?;
        let pl = layer_profile(&left, &gl, n_max, mode);
        let pr = layer_profile(&right, &gr, n_max, mode);
        return Some(pl.diagonal(&pr));
    }
    None
}
