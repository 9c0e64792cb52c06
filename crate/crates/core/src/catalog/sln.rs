//! SL(n) representation ring via Littlewood–Richardson coefficients.
//!
//! Labels are partitions with at most `n − 1` rows, stored as exactly `n − 1`
//! parts; a partition with `n` rows is reduced by deleting full columns.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::label::{lex_label, Label, RawLabel};
use crate::semiring::FusionRule;

/// Pads `parts` to `n` entries and removes full columns.
///
/// Returns the canonical `n − 1` parts, or an error if `parts` is not a
/// partition with at most `n` rows.
pub fn canonical_partition(parts: &[i64], n: usize) -> std::result::Result<Vec<i64>, String> {
    if parts.len() > n {
        return Err(format!("partition has {} parts; rank {n} allows at most {n}", parts.len()));
    }
    let mut full = parts.to_vec();
    full.resize(n, 0);
    if full.iter().any(|&p| p < 0) {
        return Err("partition parts must be non-negative".into());
    }
    if full.windows(2).any(|w| w[0] < w[1]) {
        return Err("partition parts must be non-increasing".into());
    }
    let last = full[n - 1];
    full.truncate(n - 1);
    full.iter_mut().for_each(|p| *p -= last);
    Ok(full)
}

/// Weyl dimension formula `∏_{i<j} (λ_i − λ_j + j − i)/(j − i)` with `λ_n = 0`.
pub fn weyl_dim(lambda: &[i64], n: usize) -> BigUint {
    let mut full = lambda.to_vec();
    full.resize(n, 0);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..n {
        for j in i + 1..n {
            num *= (full[i] - full[j] + (j - i) as i64) as u64;
            den *= (j - i) as u64;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r == BigUint::from(0u32));
    q
}

/// `c^ν_{λμ}` for all `ν` with at most `rows` rows, by enumerating LR skew tableaux.
///
/// Rows are filled top to bottom. The reverse reading word (right to left,
/// top to bottom) must be a lattice word, and columns must strictly increase.
/// Returned shapes have exactly `rows` parts.
pub fn littlewood_richardson(lambda: &[i64], mu: &[i64], rows: usize) -> BTreeMap<Vec<i64>, u64> {
    let mut lam = lambda.to_vec();
    lam.resize(rows.max(lam.len()), 0);
    let mu: Vec<i64> = mu.iter().copied().filter(|&p| p > 0).collect();
    let mut out = BTreeMap::new();
    if lam[rows..].iter().any(|&p| p > 0) {
        return out;
    }
    lam.truncate(rows);
    let mut search = LrSearch {
        lam: &lam,
        mu: &mu,
        rows,
        out: &mut out,
    };
    let mut counts = vec![0i64; mu.len()];
    search.fill_row(0, &mut Vec::with_capacity(rows), &[], &mut counts);
    out
}

struct LrSearch<'a> {
    lam: &'a [i64],
    mu: &'a [i64],
    rows: usize,
    out: &'a mut BTreeMap<Vec<i64>, u64>,
}

impl LrSearch<'_> {
    fn fill_row(&mut self, r: usize, nu: &mut Vec<i64>, prev: &[i64], counts: &mut [i64]) {
        if counts.iter().zip(self.mu).all(|(c, m)| c == m) {
            // no letters left: remaining rows keep the shape of λ
            let mut shape = nu.clone();
            shape.extend_from_slice(&self.lam[r..]);
            if shape.windows(2).all(|w| w[0] >= w[1]) {
                *self.out.entry(shape).or_insert(0) += 1;
            }
            return;
        }
        if r == self.rows {
            return;
        }
        let letters = self.mu.len().min(r + 1);
        let mut ks = vec![0i64; letters];
        self.choose(r, 0, &mut ks, nu, prev, counts);
    }

    fn choose(
        &mut self,
        r: usize,
        letter: usize,
        ks: &mut Vec<i64>,
        nu: &mut Vec<i64>,
        prev: &[i64],
        counts: &mut [i64],
    ) {
        if letter == ks.len() {
            self.place_row(r, ks, nu, prev, counts);
            return;
        }
        let remaining = self.mu[letter] - counts[letter];
        // lattice: after reading this row's copies of `letter`, the count of
        // `letter − 1` (read later in the row) must still dominate
        let cap = if letter == 0 {
            remaining
        } else {
            remaining.min(counts[letter - 1] - counts[letter])
        };
        for k in 0..=cap {
            ks[letter] = k;
            self.choose(r, letter + 1, ks, nu, prev, counts);
        }
        ks[letter] = 0;
    }

    fn place_row(&mut self, r: usize, ks: &[i64], nu: &mut Vec<i64>, prev: &[i64], counts: &mut [i64]) {
        let start = self.lam[r];
        let len = start + ks.iter().sum::<i64>();
        if r > 0 && len > nu[r - 1] {
            return;
        }
        let row: Vec<i64> = ks
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i as i64 + 1, k as usize))
            .collect();
        if r > 0 {
            let prev_start = self.lam[r - 1];
            for (offset, &letter) in row.iter().enumerate() {
                let col = start + offset as i64;
                if col >= prev_start && prev[(col - prev_start) as usize] >= letter {
                    return;
                }
            }
        }
        for (c, k) in counts.iter_mut().zip(ks) {
            *c += k;
        }
        nu.push(len);
        self.fill_row(r + 1, nu, &row, counts);
        nu.pop();
        for (c, k) in counts.iter_mut().zip(ks) {
            *c -= k;
        }
    }
}

/// Pieri rule for a single column `1^k`: add a vertical strip of size `k`.
pub fn pieri_column(lambda: &[i64], k: usize, rows: usize) -> Vec<Vec<i64>> {
    fn go(lam: &[i64], i: usize, left: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == lam.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if lam.len() - i < left {
            return;
        }
        for add in [0, 1] {
            if add > left as i64 {
                continue;
            }
            let v = lam[i] + add;
            if i > 0 && v > cur[i - 1] {
                continue;
            }
            cur.push(v);
            go(lam, i + 1, left - add as usize, cur, out);
            cur.pop();
        }
    }
    let mut lam = lambda.to_vec();
    lam.resize(rows, 0);
    let mut out = Vec::new();
    go(&lam, 0, k, &mut Vec::with_capacity(rows), &mut out);
    out
}

/// Height of `parts` if it is a single column `1^k`.
fn column_height(parts: &[i64]) -> Option<usize> {
    let k = parts.iter().take_while(|&&p| p == 1).count();
    parts[k..].iter().all(|&p| p == 0).then_some(k)
}

/// Fuses two canonical SL(n) labels; returns reduced partitions with multiplicities.
pub fn sln_fuse(lambda: &[i64], mu: &[i64], n: usize) -> BTreeMap<Vec<i64>, u64> {
    let reduce = |nu: &[i64]| canonical_partition(nu, n).expect("LR output is a partition");
    let mut out = BTreeMap::new();
    let column = column_height(mu)
        .map(|k| (lambda, k))
        .or_else(|| column_height(lambda).map(|k| (mu, k)));
    if let Some((base, k)) = column {
        for nu in pieri_column(base, k, n) {
            *out.entry(reduce(&nu)).or_insert(0) += 1;
        }
        return out;
    }
    for (nu, c) in littlewood_richardson(lambda, mu, n) {
        *out.entry(reduce(&nu)).or_insert(0) += c;
    }
    out
}

#[derive(Debug, Clone)]
pub struct SlnRing {
    n: usize,
}

impl SlnRing {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("sln rank n = {n} must be at least 2")));
        }
        Ok(SlnRing { n })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn label(&self, parts: &[i64]) -> Result<Label> {
        canonical_partition(parts, self.n)
            .map(Label::tuple)
            .map_err(|reason| Error::InvalidLabel {
                ring: self.id(),
                label: format!("{parts:?}"),
                reason,
            })
    }
}

impl FusionRule for SlnRing {
    fn id(&self) -> String {
        format!("sln:{}", self.n)
    }

    fn unit(&self) -> Label {
        Label::tuple(vec![0; self.n - 1])
    }

    fn validate(&self, label: &Label) -> std::result::Result<(), String> {
        let parts = label.as_parts().ok_or("expected a partition tuple")?;
        if parts.len() != self.n - 1 {
            return Err(format!("canonical partitions for rank {} have {} parts", self.n, self.n - 1));
        }
        let canon = canonical_partition(parts, self.n)?;
        if canon != parts {
            return Err("partition is not canonical".into());
        }
        Ok(())
    }

    fn parse_label(&self, s: &str) -> std::result::Result<Label, String> {
        let parts = match lex_label(s)? {
            RawLabel::Tuple(p) => p,
            RawLabel::Int(k) if self.n == 2 => vec![k],
            _ => return Err("expected a partition such as `(2,1)`".into()),
        };
        canonical_partition(&parts, self.n).map(Label::tuple)
    }

    fn fuse(&self, a: &Label, b: &Label) -> Vec<(Label, BigUint)> {
        let (Some(x), Some(y)) = (a.as_parts(), b.as_parts()) else {
            return Vec::new();
        };
        sln_fuse(x, y, self.n)
            .into_iter()
            .map(|(nu, c)| (Label::tuple(nu), BigUint::from(c)))
            .collect()
    }

    fn dim(&self, a: &Label) -> BigUint {
        weyl_dim(a.as_parts().unwrap_or(&[]), self.n)
    }
}
