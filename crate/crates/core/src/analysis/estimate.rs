//! Growth-degree estimation by doubling exponents.
//!
//! For `a_n ~ c·n^γ`, the doubling exponents `e_k = log₂(a_{2^k}/a_{2^{k−1}})`
//! converge to `γ` with error `O(2^{−k})`, which one Richardson step
//! `2e_k − e_{k−1}` removes to leading order. For exponential growth the
//! per-step rate `e_k / 2^{k−1}` settles to a positive constant instead.

use crate::error::{Error, Result};

use super::series::GrowthSeries;

/// Convergence threshold on successive extrapolated exponents.
pub const TAU_POLY: f64 = 0.1;
/// Minimum per-step bit rate for the exponential regime.
pub const TAU_EXP: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Polynomial,
    Exponential,
    Inconclusive,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Polynomial => "polynomial",
            Classification::Exponential => "exponential",
            Classification::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GkEstimate {
    pub classification: Classification,
    /// Extrapolated degree; set only for [`Classification::Polynomial`].
    pub degree: Option<f64>,
    /// Tail slope of `log₂ a_n` in bits per step; set only for [`Classification::Exponential`].
    pub rate: Option<f64>,
    /// `e_2, …, e_K` with `N = 2^K`.
    pub doubling_exponents: Vec<f64>,
    pub n_max: usize,
}

pub fn estimate_gkdim(series: &GrowthSeries) -> Result<GkEstimate> {
    let logs: Vec<f64> = series.records.iter().map(|r| r.log2_dim_vn).collect();
    estimate_from_log2(&logs)
}

/// Estimator over `log₂ a_n` for `n = 1..=N`; `N` must be a power of two `≥ 16`.
pub fn estimate_from_log2(log2_a: &[f64]) -> Result<GkEstimate> {
    let n_max = log2_a.len();
    if n_max < 16 {
        return Err(Error::SeriesTooShort { len: n_max });
    }
    if !n_max.is_power_of_two() {
        return Err(Error::NotPowerOfTwo { len: n_max });
    }
    let k_max = n_max.trailing_zeros() as usize;
    let at = |n: usize| log2_a[n - 1];
    // e[k] for k = 2..=K, stored at index k − 2
    let e: Vec<f64> = (2..=k_max).map(|k| at(1 << k) - at(1 << (k - 1))).collect();
    let rate_of = |k: usize| e[k - 2] / (1u64 << (k - 1)) as f64;

    let mut est = GkEstimate {
        classification: Classification::Inconclusive,
        degree: None,
        rate: None,
        doubling_exponents: e.clone(),
        n_max,
    };

    // Per-step rates over the last three doublings must not fall by more than
    // TAU_EXP; for polynomial growth they halve at every doubling.
    let last = rate_of(k_max);
    let steady = (k_max - 1..=k_max).all(|k| rate_of(k) >= rate_of(k - 1) - TAU_EXP);
    if last > TAU_EXP && steady {
        est.classification = Classification::Exponential;
        est.rate = Some(tail_slope(log2_a));
        return Ok(est);
    }

    let extrapolated = |k: usize| 2.0 * e[k - 2] - e[k - 3];
    let (cur, prev) = (extrapolated(k_max), extrapolated(k_max - 1));
    if (cur - prev).abs() < TAU_POLY {
        est.classification = Classification::Polynomial;
        est.degree = Some(cur.max(0.0));
    }
    Ok(est)
}

/// Least-squares slope of `log₂ a_n` against `n` over `n ∈ [N/2, N]`.
fn tail_slope(log2_a: &[f64]) -> f64 {
    let n_max = log2_a.len();
    let pts: Vec<(f64, f64)> = (n_max / 2..=n_max).map(|n| (n as f64, log2_a[n - 1])).collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
