//! The measured-semiring abstraction and its elementwise operations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::label::Label;

/// Fusion oracle, dimension function and unit of a based ring.
///
/// Implementations must be pure (or internally synchronized) since frontier
/// expansion calls them from worker threads.
pub trait FusionRule: Send + Sync + fmt::Debug {
    /// Identifier as accepted by [`crate::catalog::parse_ring`].
    fn id(&self) -> String;

    fn unit(&self) -> Label;

    /// `Err(reason)` when `label` is not the canonical encoding of a simple.
    fn validate(&self, label: &Label) -> std::result::Result<(), String>;

    /// Parses ring-specific label syntax into a canonical, valid label.
    fn parse_label(&self, s: &str) -> std::result::Result<Label, String>;

    /// Decomposition of `a ⊗ b` into simples. Entries have positive
    /// multiplicity and distinct labels; order is unspecified.
    fn fuse(&self, a: &Label, b: &Label) -> Vec<(Label, BigUint)>;

    /// Labels occurring in `a ⊗ b`, without multiplicities.
    fn fuse_support(&self, a: &Label, b: &Label) -> Vec<Label> {
        self.fuse(a, b).into_iter().map(|(l, _)| l).collect()
    }

    fn dim(&self, a: &Label) -> BigUint;

    /// Rings that are products expose their factors here, which lets growth
    /// computations convolve per-factor profiles instead of enumerating pairs.
    fn factors(&self) -> Option<(MeasuredSemiring, MeasuredSemiring)> {
        None
    }

    /// Inverse of the label pairing used by [`FusionRule::factors`].
    fn split_label(&self, _label: &Label) -> Option<(Label, Label)> {
        None
    }
}

/// Shared handle to a ring; cheap to clone and `Send + Sync`.
#[derive(Clone)]
pub struct MeasuredSemiring {
    rule: Arc<dyn FusionRule>,
    id: Arc<str>,
}

impl fmt::Debug for MeasuredSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MeasuredSemiring({})", self.id)
    }
}

impl MeasuredSemiring {
    pub fn new<R: FusionRule + 'static>(rule: R) -> Self {
        Self::from_arc(Arc::new(rule))
    }

    pub fn from_arc(rule: Arc<dyn FusionRule>) -> Self {
        let id: Arc<str> = rule.id().into();
        MeasuredSemiring { rule, id }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub(crate) fn id_arc(&self) -> &Arc<str> {
        &self.id
    }

    pub fn rule(&self) -> &dyn FusionRule {
        &*self.rule
    }

    pub fn unit(&self) -> Label {
        self.rule.unit()
    }

    pub fn check_label(&self, label: &Label) -> Result<()> {
        self.rule.validate(label).map_err(|reason| Error::InvalidLabel {
            ring: self.id.to_string(),
            label: label.to_string(),
            reason,
        })
    }

    pub fn parse_label(&self, s: &str) -> Result<Label> {
        let label = self.rule.parse_label(s).map_err(|reason| Error::InvalidLabel {
            ring: self.id.to_string(),
            label: s.trim().to_string(),
            reason,
        })?;
        self.check_label(&label)?;
        Ok(label)
    }

    pub fn dim(&self, label: &Label) -> Result<BigUint> {
        self.check_label(label)?;
        Ok(self.rule.dim(label))
    }

    /// Fusion of two simples as an [`Element`].
    pub fn fuse(&self, a: &Label, b: &Label) -> Result<Element> {
        self.check_label(a)?;
        self.check_label(b)?;
        let mut out = Element::zero(self);
        for (l, m) in self.rule.fuse(a, b) {
            out.add_term(l, m);
        }
        Ok(out)
    }

    pub fn element<I: IntoIterator<Item = (Label, u64)>>(&self, terms: I) -> Result<Element> {
        let mut out = Element::zero(self);
        for (l, m) in terms {
            self.check_label(&l)?;
            out.add_term(l, BigUint::from(m));
        }
        Ok(out)
    }

    pub fn big_element<I: IntoIterator<Item = (Label, BigUint)>>(&self, terms: I) -> Result<Element> {
        let mut out = Element::zero(self);
        for (l, m) in terms {
            self.check_label(&l)?;
            out.add_term(l, m);
        }
        Ok(out)
    }

    pub fn simple(&self, label: Label) -> Result<Element> {
        self.element([(label, 1)])
    }

    pub fn support_set<I: IntoIterator<Item = Label>>(&self, labels: I) -> Result<SupportSet> {
        let mut out = SupportSet::empty(self);
        for l in labels {
            self.check_label(&l)?;
            out.labels.insert(l);
        }
        Ok(out)
    }

    pub fn same_ring(&self, other: &MeasuredSemiring) -> bool {
        self.id == other.id
    }

    pub(crate) fn ensure_tag(&self, tag: &Arc<str>) -> Result<()> {
        if **tag == *self.id {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.id.to_string(),
                right: tag.to_string(),
            })
        }
    }
}

/// Finite non-negative integer combination of simples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    ring: Arc<str>,
    terms: BTreeMap<Label, BigUint>,
}

impl Element {
    pub fn zero(ring: &MeasuredSemiring) -> Self {
        Element {
            ring: ring.id_arc().clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn ring_id(&self) -> &str {
        &self.ring
    }

    fn add_term(&mut self, label: Label, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(label).or_insert_with(BigUint::zero) += mult;
    }

    pub fn multiplicity(&self, label: &Label) -> BigUint {
        self.terms.get(label).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Label, &BigUint)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same as [`Element::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn support(&self) -> SupportSet {
        SupportSet {
            ring: self.ring.clone(),
            labels: self.terms.keys().cloned().collect(),
        }
    }

    /// `Σ mult · dim`, the dimension of the represented object.
    pub fn dim(&self, ring: &MeasuredSemiring) -> Result<BigUint> {
        ring.ensure_tag(&self.ring)?;
        Ok(self.terms.iter().map(|(l, m)| m * ring.rule().dim(l)).sum())
    }

    /// Total multiplicity, i.e. the length of the object.
    pub fn length(&self) -> BigUint {
        self.terms.values().sum()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (l, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}:{m}")?;
        }
        f.write_str("}")
    }
}

/// Pointwise sum of multiplicity maps.
pub fn add_elements(x: &Element, y: &Element) -> Result<Element> {
    if x.ring != y.ring {
        return Err(Error::RingMismatch {
            left: x.ring.to_string(),
            right: y.ring.to_string(),
        });
    }
    let mut out = x.clone();
    for (l, m) in &y.terms {
        out.add_term(l.clone(), m.clone());
    }
    Ok(out)
}

/// Bilinear extension of the fusion oracle, with exact multiplicities.
pub fn fuse_elements(ring: &MeasuredSemiring, x: &Element, y: &Element) -> Result<Element> {
    ring.ensure_tag(&x.ring)?;
    ring.ensure_tag(&y.ring)?;
    let mut out = Element::zero(ring);
    for (a, ma) in &x.terms {
        ring.check_label(a)?;
        for (b, mb) in &y.terms {
            ring.check_label(b)?;
            let coeff = ma * mb;
            for (c, mc) in ring.rule().fuse(a, b) {
                out.add_term(c, &coeff * mc);
            }
        }
    }
    Ok(out)
}

/// Finite set of simples, iterated in canonical label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    ring: Arc<str>,
    labels: BTreeSet<Label>,
}

impl SupportSet {
    pub fn empty(ring: &MeasuredSemiring) -> Self {
        SupportSet {
            ring: ring.id_arc().clone(),
            labels: BTreeSet::new(),
        }
    }

    pub(crate) fn from_parts(ring: &MeasuredSemiring, labels: BTreeSet<Label>) -> Self {
        SupportSet {
            ring: ring.id_arc().clone(),
            labels,
        }
    }

    pub fn ring_id(&self) -> &str {
        &self.ring
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.labels.contains(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Label> {
        self.labels.iter()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_subset(&self, other: &SupportSet) -> bool {
        self.ring == other.ring && self.labels.is_subset(&other.labels)
    }

    pub fn labels(&self) -> &BTreeSet<Label> {
        &self.labels
    }
}

/// Boolean-semiring product: every simple occurring in some `a ⊗ b`.
pub fn fuse_support(ring: &MeasuredSemiring, a: &SupportSet, b: &SupportSet) -> Result<SupportSet> {
    ring.ensure_tag(&a.ring)?;
    ring.ensure_tag(&b.ring)?;
    let mut out = BTreeSet::new();
    for x in &a.labels {
        for y in &b.labels {
            out.extend(ring.rule().fuse_support(x, y));
        }
    }
    Ok(SupportSet::from_parts(ring, out))
}

/// `Σ_{β ∈ F_n} (dim S_β)²`, the dimension of the n-th power of the generating subcoalgebra.
pub fn dim_vn(ring: &MeasuredSemiring, support: &SupportSet) -> Result<BigUint> {
    ring.ensure_tag(&support.ring)?;
    Ok(support
        .labels
        .iter()
        .map(|l| {
            let d = ring.rule().dim(l);
            &d * &d
        })
        .sum())
}
