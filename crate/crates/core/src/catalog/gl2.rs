use num_bigint::BigUint;

use super::sl2::{sl2_fuse, QIntTable};
use crate::error::Result;
use crate::label::{lex_label, Label, RawLabel};
use crate::semiring::FusionRule;

/// `(spin, det power)` pair; highest weight `(λ₁, λ₂)` maps to `(λ₁ − λ₂, λ₂)`.
fn parts(label: &Label) -> (u64, i64) {
    match label.as_parts() {
        Some(&[a, k]) => (a as u64, k),
        _ => (0, 0),
    }
}

fn validate_gl2(label: &Label) -> std::result::Result<(), String> {
    match label.as_parts() {
        Some(&[a, _]) if a >= 0 => Ok(()),
        Some(&[_, _]) => Err("spin component must be non-negative".into()),
        _ => Err("expected a pair (spin, det power)".into()),
    }
}

fn parse_gl2(s: &str) -> std::result::Result<Label, String> {
    match lex_label(s)? {
        RawLabel::Tuple(p) if p.len() == 2 => Ok(Label::tuple(p)),
        _ => Err("expected `(spin,det)`".into()),
    }
}

/// Clebsch–Gordan with determinant bookkeeping: `(c, i + j + (a+b−c)/2)`.
pub fn gl2_fuse(x: (u64, i64), y: (u64, i64)) -> impl Iterator<Item = (u64, i64)> {
    let (a, i) = x;
    let (b, j) = y;
    sl2_fuse(a, b).map(move |c| (c, i + j + ((a + b - c) / 2) as i64))
}

fn gl2_support(x: &Label, y: &Label) -> Vec<Label> {
    gl2_fuse(parts(x), parts(y))
        .map(|(c, k)| Label::tuple([c as i64, k]))
        .collect()
}

/// Representation ring of GL(2): `ℤ₊`-span of `x^a y^k` classes, `x = (1,0)`, `y = (0,1)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Gl2Ring;

impl FusionRule for Gl2Ring {
    fn id(&self) -> String {
        "gl2".into()
    }

    fn unit(&self) -> Label {
        Label::tuple([0, 0])
    }

    fn validate(&self, label: &Label) -> std::result::Result<(), String> {
        validate_gl2(label)
    }

    fn parse_label(&self, s: &str) -> std::result::Result<Label, String> {
        parse_gl2(s)
    }

    fn fuse(&self, a: &Label, b: &Label) -> Vec<(Label, BigUint)> {
        gl2_support(a, b)
            .into_iter()
            .map(|l| (l, BigUint::from(1u32)))
            .collect()
    }

    fn fuse_support(&self, a: &Label, b: &Label) -> Vec<Label> {
        gl2_support(a, b)
    }

    fn dim(&self, a: &Label) -> BigUint {
        BigUint::from(parts(a).0 + 1)
    }
}

/// GL(2) fusion with `dim(a, k) = u_a(d)`, the measured semiring of Mrozinski's `G(E,F)`.
///
/// The determinant class is one-dimensional, so the dimension ignores `k`.
#[derive(Debug)]
pub struct DeformedGl2Ring {
    dims: QIntTable,
}

impl DeformedGl2Ring {
    pub fn new(d: u64) -> Result<Self> {
        Ok(DeformedGl2Ring {
            dims: QIntTable::new(d)?,
        })
    }
}

impl FusionRule for DeformedGl2Ring {
    fn id(&self) -> String {
        format!("gef:{}", self.dims.d())
    }

    fn unit(&self) -> Label {
        Label::tuple([0, 0])
    }

    fn validate(&self, label: &Label) -> std::result::Result<(), String> {
        validate_gl2(label)
    }

    fn parse_label(&self, s: &str) -> std::result::Result<Label, String> {
        parse_gl2(s)
    }

    fn fuse(&self, a: &Label, b: &Label) -> Vec<(Label, BigUint)> {
        Gl2Ring.fuse(a, b)
    }

    fn fuse_support(&self, a: &Label, b: &Label) -> Vec<Label> {
        gl2_support(a, b)
    }

    fn dim(&self, a: &Label) -> BigUint {
        self.dims.get(parts(a).0 as usize)
    }
}
