use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::label::{lex_label, Label, RawLabel};
use crate::semiring::{FusionRule, MeasuredSemiring};

/// Character lattice `ℤ^r` of a rank-`r` torus.
///
/// Rank one uses [`Label::Int`]; higher ranks use [`Label::Tuple`] of length `r`.
#[derive(Debug, Clone)]
pub struct TorusRing {
    rank: usize,
}

impl TorusRing {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParameter("torus rank must be at least 1".into()));
        }
        Ok(TorusRing { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Label for an exponent vector of length `rank`.
    pub fn label(&self, v: &[i64]) -> Label {
        if self.rank == 1 {
            Label::Int(v[0])
        } else {
            Label::tuple(v.iter().copied())
        }
    }

    fn coords<'a>(&self, l: &'a Label) -> std::borrow::Cow<'a, [i64]> {
        match l {
            Label::Int(v) => std::borrow::Cow::Owned(vec![*v]),
            Label::Tuple(p) => std::borrow::Cow::Borrowed(p),
            _ => std::borrow::Cow::Owned(vec![0; self.rank]),
        }
    }

    fn add(&self, a: &Label, b: &Label) -> Label {
        match (a, b) {
            (Label::Int(x), Label::Int(y)) => Label::Int(x + y),
            _ => {
                let (x, y) = (self.coords(a), self.coords(b));
                Label::tuple(x.iter().zip(y.iter()).map(|(p, q)| p + q))
            }
        }
    }
}

impl FusionRule for TorusRing {
    fn id(&self) -> String {
        format!("torus:{}", self.rank)
    }

    fn unit(&self) -> Label {
        self.label(&vec![0; self.rank])
    }

    fn validate(&self, label: &Label) -> std::result::Result<(), String> {
        match (label, self.rank) {
            (Label::Int(_), 1) => Ok(()),
            (Label::Tuple(p), r) if r > 1 && p.len() == r => Ok(()),
            _ => Err(format!("expected an integer vector of length {}", self.rank)),
        }
    }

    fn parse_label(&self, s: &str) -> std::result::Result<Label, String> {
        match lex_label(s)? {
            RawLabel::Int(v) if self.rank == 1 => Ok(Label::Int(v)),
            RawLabel::Tuple(p) if p.len() == self.rank => Ok(self.label(&p)),
            _ => Err(format!("expected an integer vector of length {}", self.rank)),
        }
    }

    fn fuse(&self, a: &Label, b: &Label) -> Vec<(Label, BigUint)> {
        vec![(self.add(a, b), BigUint::from(1u32))]
    }

    fn fuse_support(&self, a: &Label, b: &Label) -> Vec<Label> {
        vec![self.add(a, b)]
    }

    fn dim(&self, _a: &Label) -> BigUint {
        BigUint::from(1u32)
    }

    fn factors(&self) -> Option<(MeasuredSemiring, MeasuredSemiring)> {
        (self.rank > 1).then(|| {
            (
                MeasuredSemiring::new(TorusRing { rank: 1 }),
                MeasuredSemiring::new(TorusRing { rank: self.rank - 1 }),
            )
        })
    }

    fn split_label(&self, label: &Label) -> Option<(Label, Label)> {
        let p = label.as_parts().filter(|p| self.rank > 1 && p.len() == self.rank)?;
        let rest = TorusRing { rank: self.rank - 1 }.label(&p[1..]);
        Some((Label::Int(p[0]), rest))
    }
}
