use num_bigint::BigUint;

use crate::label::{lex_label, Label, RawLabel};
use crate::semiring::{FusionRule, MeasuredSemiring};

/// Representation ring of a product group: labels are pairs, fusion is componentwise.
#[derive(Debug, Clone)]
pub struct ProductRing {
    left: MeasuredSemiring,
    right: MeasuredSemiring,
}

impl ProductRing {
    pub fn new(left: MeasuredSemiring, right: MeasuredSemiring) -> Self {
        ProductRing { left, right }
    }

    pub fn left(&self) -> &MeasuredSemiring {
        &self.left
    }

    pub fn right(&self) -> &MeasuredSemiring {
        &self.right
    }
}

impl FusionRule for ProductRing {
    fn id(&self) -> String {
        format!("product:{},{}", self.left.id(), self.right.id())
    }

    fn unit(&self) -> Label {
        Label::pair(self.left.unit(), self.right.unit())
    }

    fn validate(&self, label: &Label) -> Result<(), String> {
        let (a, b) = label.as_pair().ok_or("expected a pair label `[a|b]`")?;
        self.left.rule().validate(a).map_err(|e| format!("left factor: {e}"))?;
        self.right.rule().validate(b).map_err(|e| format!("right factor: {e}"))
    }

    fn parse_label(&self, s: &str) -> Result<Label, String> {
        match lex_label(s)? {
            RawLabel::Pair(a, b) => Ok(Label::pair(
                self.left.rule().parse_label(a)?,
                self.right.rule().parse_label(b)?,
            )),
            _ => Err("expected a pair label `[a|b]`".into()),
        }
    }

    fn fuse(&self, a: &Label, b: &Label) -> Vec<(Label, BigUint)> {
        let (Some((a1, a2)), Some((b1, b2))) = (a.as_pair(), b.as_pair()) else {
            return Vec::new();
        };
        let left = self.left.rule().fuse(a1, b1);
        let right = self.right.rule().fuse(a2, b2);
        let mut out = Vec::with_capacity(left.len() * right.len());
        for (x, mx) in &left {
            for (y, my) in &right {
                out.push((Label::pair(x.clone(), y.clone()), mx * my));
            }
        }
        out
    }

    fn fuse_support(&self, a: &Label, b: &Label) -> Vec<Label> {
        let (Some((a1, a2)), Some((b1, b2))) = (a.as_pair(), b.as_pair()) else {
            return Vec::new();
        };
        let left = self.left.rule().fuse_support(a1, b1);
        let right = self.right.rule().fuse_support(a2, b2);
        left.iter()
            .flat_map(|x| right.iter().map(move |y| Label::pair(x.clone(), y.clone())))
            .collect()
    }

    fn dim(&self, a: &Label) -> BigUint {
        match a.as_pair() {
            Some((x, y)) => self.left.rule().dim(x) * self.right.rule().dim(y),
            None => BigUint::from(0u32),
        }
    }

    fn factors(&self) -> Option<(MeasuredSemiring, MeasuredSemiring)> {
        Some((self.left.clone(), self.right.clone()))
    }

    fn split_label(&self, label: &Label) -> Option<(Label, Label)> {
        label.as_pair().map(|(a, b)| (a.clone(), b.clone()))
    }
}
