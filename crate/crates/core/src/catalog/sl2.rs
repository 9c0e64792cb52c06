use num_bigint::BigUint;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::label::{lex_label, Label, RawLabel};
use crate::semiring::FusionRule;

/// Clebsch–Gordan rule: spins `|m−n|, |m−n|+2, …, m+n`, each once.
pub fn sl2_fuse(m: u64, n: u64) -> impl Iterator<Item = u64> {
    (m.abs_diff(n)..=m + n).step_by(2)
}

/// `u_0 = 1, u_1 = d, u_{k+1} = d·u_k − u_{k−1}` for `k ≤ K`.
///
/// With `q + q⁻¹ = d` these are the quantum integers `[k+1]_q`. For `d ≥ 2`
/// the sequence is strictly increasing, so every term is positive.
pub fn qint_dims(d: u64, k_max: usize) -> Result<Vec<BigUint>> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "deformation parameter d = {d} must be at least 2"
        )));
    }
    let mut u = Vec::with_capacity(k_max + 1);
    u.push(BigUint::from(1u32));
    if k_max >= 1 {
        u.push(BigUint::from(d));
    }
    while u.len() <= k_max {
        let k = u.len();
        let next = &u[k - 1] * d - &u[k - 2];
        u.push(next);
    }
    Ok(u)
}

/// Lazily extended table of quantum integers.
#[derive(Debug)]
pub(crate) struct QIntTable {
    d: u64,
    cache: RwLock<Vec<BigUint>>,
}

impl QIntTable {
    pub(crate) fn new(d: u64) -> Result<Self> {
        Ok(QIntTable {
            d,
            cache: RwLock::new(qint_dims(d, 64)?),
        })
    }

    pub(crate) fn d(&self) -> u64 {
        self.d
    }

    pub(crate) fn get(&self, k: usize) -> BigUint {
        if let Some(v) = self.cache.read().get(k) {
            return v.clone();
        }
        let mut u = self.cache.write();
        while u.len() <= k {
            let j = u.len();
            let next = &u[j - 1] * self.d - &u[j - 2];
            u.push(next);
        }
        u[k].clone()
    }
}

pub(crate) fn parse_spin(s: &str) -> std::result::Result<Label, String> {
    match lex_label(s)? {
        RawLabel::Int(k) => Ok(Label::Int(k)),
        RawLabel::Tuple(p) if p.len() == 1 => Ok(Label::Int(p[0])),
        _ => Err("expected a non-negative integer spin".into()),
    }
}

pub(crate) fn spin_of(label: &Label) -> std::result::Result<u64, String> {
    match label {
        Label::Int(k) if *k >= 0 => Ok(*k as u64),
        Label::Int(_) => Err("spin must be non-negative".into()),
        _ => Err("expected an integer spin".into()),
    }
}

fn sl2_support(a: &Label, b: &Label) -> Vec<Label> {
    let (m, n) = (a.as_int().unwrap_or(0) as u64, b.as_int().unwrap_or(0) as u64);
    sl2_fuse(m, n).map(|k| Label::Int(k as i64)).collect()
}

/// Representation ring of SL(2) (equivalently of generic-q quantum SL(2)).
#[derive(Debug, Clone, Copy, Default)]
pub struct Sl2Ring;

impl FusionRule for Sl2Ring {
    fn id(&self) -> String {
        "sl2".into()
    }

    fn unit(&self) -> Label {
        Label::Int(0)
    }

    fn validate(&self, label: &Label) -> std::result::Result<(), String> {
        spin_of(label).map(|_| ())
    }

    fn parse_label(&self, s: &str) -> std::result::Result<Label, String> {
        parse_spin(s)
    }

    fn fuse(&self, a: &Label, b: &Label) -> Vec<(Label, BigUint)> {
        sl2_support(a, b)
            .into_iter()
            .map(|l| (l, BigUint::from(1u32)))
            .collect()
    }

    fn fuse_support(&self, a: &Label, b: &Label) -> Vec<Label> {
        sl2_support(a, b)
    }

    fn dim(&self, a: &Label) -> BigUint {
        BigUint::from(a.as_int().unwrap_or(0) as u64 + 1)
    }
}

/// SL(2) fusion with the deformed dimension function `dim(k) = u_k(d)`.
///
/// This is the measured semiring of Bichon's `B(E)` for a `d × d` matrix `E`;
/// `d = 2` recovers [`Sl2Ring`].
#[derive(Debug)]
pub struct DeformedSl2Ring {
    dims: QIntTable,
}

impl DeformedSl2Ring {
    pub fn new(d: u64) -> Result<Self> {
        Ok(DeformedSl2Ring {
            dims: QIntTable::new(d)?,
        })
    }
}

impl FusionRule for DeformedSl2Ring {
    fn id(&self) -> String {
        format!("be:{}", self.dims.d())
    }

    fn unit(&self) -> Label {
        Label::Int(0)
    }

    fn validate(&self, label: &Label) -> std::result::Result<(), String> {
        spin_of(label).map(|_| ())
    }

    fn parse_label(&self, s: &str) -> std::result::Result<Label, String> {
        parse_spin(s)
    }

    fn fuse(&self, a: &Label, b: &Label) -> Vec<(Label, BigUint)> {
        Sl2Ring.fuse(a, b)
    }

    fn fuse_support(&self, a: &Label, b: &Label) -> Vec<Label> {
        sl2_support(a, b)
    }

    fn dim(&self, a: &Label) -> BigUint {
        self.dims.get(a.as_int().unwrap_or(0) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clebsch_gordan() {
        assert_eq!(sl2_fuse(1, 1).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(sl2_fuse(0, 7).collect::<Vec<_>>(), vec![7]);
        assert_eq!(sl2_fuse(2, 2).collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(sl2_fuse(5, 2).collect::<Vec<_>>(), vec![3, 5, 7]);
        for m in 0..12u64 {
            for n in 0..12u64 {
                assert_eq!(sl2_fuse(m, n).count() as u64, m.min(n) + 1);
            }
        }
    }

    #[test]
    fn quantum_integers() {
        let small = |d, k| -> Vec<u64> {
            qint_dims(d, k)
                .unwrap()
                .iter()
                .map(|v| v.try_into().unwrap())
                .collect()
        };
        assert_eq!(small(2, 5), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(small(3, 4), vec![1, 3, 8, 21, 55]);
        assert_eq!(small(4, 3), vec![1, 4, 15, 56]);
        assert_eq!(small(3, 0), vec![1]);
        assert!(matches!(qint_dims(1, 3), Err(Error::InvalidParameter(_))));
        assert!(DeformedSl2Ring::new(0).is_err());
    }

    #[test]
    fn lazy_table_matches_batch() {
        let t = QIntTable::new(5).unwrap();
        let batch = qint_dims(5, 300).unwrap();
        for k in [300, 0, 17, 65, 299] {
            assert_eq!(t.get(k), batch[k]);
        }
    }

    #[test]
    fn spin_parsing() {
        assert_eq!(Sl2Ring.parse_label(" 3 ").unwrap(), Label::Int(3));
        assert_eq!(Sl2Ring.parse_label("(4)").unwrap(), Label::Int(4));
        assert!(Sl2Ring.validate(&Label::Int(-2)).is_err());
        assert!(Sl2Ring.parse_label("(1,0)").is_err());
    }
}
