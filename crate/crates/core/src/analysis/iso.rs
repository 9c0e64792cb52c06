//! Label maps between measured semirings, extended breadth-first from a
//! generator map by matching fusion products, and dimension-gap witnesses.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::label::{split_label_list, Label};
use crate::semiring::{Element, MeasuredSemiring};

use super::series::log2_biguint;

/// Injective partial map from labels of ring A to labels of ring B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoMap {
    source: String,
    target: String,
    forward: BTreeMap<Label, Label>,
    backward: BTreeMap<Label, Label>,
    /// Domain in insertion order: the generator map first, then discovery order.
    order: Vec<Label>,
}

impl IsoMap {
    pub fn new(a: &MeasuredSemiring, b: &MeasuredSemiring) -> Self {
        IsoMap {
            source: a.id().to_string(),
            target: b.id().to_string(),
            forward: BTreeMap::new(),
            backward: BTreeMap::new(),
            order: Vec::new(),
        }
    }

    /// Parses `a=b;c=d`, labels in each ring's own syntax.
    pub fn parse(a: &MeasuredSemiring, b: &MeasuredSemiring, src: &str) -> Result<Self> {
        let mut map = IsoMap::new(a, b);
        for entry in split_label_list(src) {
            let (l, r) = entry
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("map entry `{entry}` is not of the form a=b")))?;
            let (x, y) = (a.parse_label(l.trim())?, b.parse_label(r.trim())?);
            match map.forward.get(&x) {
                Some(prev) if *prev != y => {
                    return Err(Error::InvalidParameter(format!("`{x}` is mapped to both `{prev}` and `{y}`")))
                }
                Some(_) => {}
                None => map.insert_unchecked(x, y),
            }
        }
        Ok(map)
    }

    pub fn source_ring(&self) -> &str {
        &self.source
    }

    pub fn target_ring(&self) -> &str {
        &self.target
    }

    pub fn get(&self, x: &Label) -> Option<&Label> {
        self.forward.get(x)
    }

    pub fn preimage(&self, y: &Label) -> Option<&Label> {
        self.backward.get(y)
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// Pairs in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = (&Label, &Label)> {
        self.order.iter().map(|x| (x, &self.forward[x]))
    }

    /// Image of an element of ring A; fails on the first unmapped label.
    pub fn apply(&self, b: &MeasuredSemiring, x: &Element) -> Result<Element> {
        let mut terms = Vec::with_capacity(x.len());
        for (l, m) in x.terms() {
            let y = self.get(l).ok_or_else(|| Error::Unmapped(l.to_string()))?;
            terms.push((y.clone(), m.clone()));
        }
        b.big_element(terms)
    }

    fn insert_unchecked(&mut self, x: Label, y: Label) {
        self.backward.entry(y.clone()).or_insert_with(|| x.clone());
        self.forward.insert(x.clone(), y);
        self.order.push(x);
    }
}

impl fmt::Display for IsoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, y)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{x}={y}")?;
        }
        Ok(())
    }
}

/// First violation found while extending a map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    UnitNotPreserved { unit: Label, image: Label },
    NotInjective { target: Label, sources: (Label, Label) },
    DimensionMismatch { label: Label, image: Label, dim_a: BigUint, dim_b: BigUint },
    FusionMismatch { pair: (Label, Label), product_a: String, product_b: String },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::UnitNotPreserved { unit, image } => {
                write!(f, "unit `{unit}` is mapped to `{image}`, not to the unit")
            }
            Counterexample::NotInjective { target, sources } => {
                write!(f, "`{}` and `{}` are both mapped to `{target}`", sources.0, sources.1)
            }
            Counterexample::DimensionMismatch { label, image, dim_a, dim_b } => {
                write!(f, "dim `{label}` = {dim_a} but dim `{image}` = {dim_b}")
            }
            Counterexample::FusionMismatch { pair, product_a, product_b } => {
                write!(f, "`{}`⊗`{}` = {product_a} does not correspond to {product_b}", pair.0, pair.1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    Verified(IsoMap),
    Counterexample(Counterexample),
}

/// Whether extension also demands `dim x = dim f(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimCheck {
    Required,
    Ignored,
}

/// Extends `map` breadth-first over `depth` fusion steps with the generators
/// (the labels of the initial map plus the unit).
///
/// For each pair `(x, g)` and `(g, x)` the product in A must correspond term by
/// term to the product of the images in B. Terms that are new on both sides
/// are matched by multiplicity and then, when dimensions are checked, by
/// dimension. A tie that no later pair resolves is reported as
/// [`Error::AmbiguousExtension`] instead of being broken arbitrarily.
pub fn extend_map(
    a: &MeasuredSemiring,
    b: &MeasuredSemiring,
    map: &IsoMap,
    depth: usize,
    dims: DimCheck,
) -> Result<IsoOutcome> {
    if map.source != a.id() || map.target != b.id() {
        return Err(Error::RingMismatch {
            left: format!("{} -> {}", map.source, map.target),
            right: format!("{} -> {}", a.id(), b.id()),
        });
    }
    let mut ext = Extender { a, b, dims, map: IsoMap::new(a, b) };

    let (ua, ub) = (a.unit(), b.unit());
    if let Some(image) = map.get(&ua) {
        if *image != ub {
            return Ok(IsoOutcome::Counterexample(Counterexample::UnitNotPreserved {
                unit: ua,
                image: image.clone(),
            }));
        }
    }
    let mut seed: Vec<(Label, Label)> = vec![(ua, ub)];
    seed.extend(map.iter().map(|(x, y)| (x.clone(), y.clone())));
    for (x, y) in seed {
        if ext.map.get(&x).is_some() {
            continue;
        }
        if let Some(c) = ext.assign(x, y)? {
            return Ok(IsoOutcome::Counterexample(c));
        }
    }

    let gens: Vec<Label> = ext.map.order.clone();
    let mut frontier = gens.clone();
    for _ in 0..depth {
        if frontier.is_empty() {
            break;
        }
        let known = ext.map.len();
        let mut pending: Vec<(Label, Label)> = Vec::new();
        for x in &frontier {
            for g in &gens {
                pending.push((x.clone(), g.clone()));
                if x != g {
                    pending.push((g.clone(), x.clone()));
                }
            }
        }
        loop {
            let mut deferred = Vec::new();
            let mut stuck = None;
            let before = ext.map.len();
            for (x, y) in pending {
                match ext.match_pair(&x, &y)? {
                    PairResult::Done => {}
                    PairResult::Violation(c) => return Ok(IsoOutcome::Counterexample(c)),
                    PairResult::Ambiguous(n) => {
                        stuck.get_or_insert((format!("({x}, {y})"), n));
                        deferred.push((x, y));
                    }
                }
            }
            if deferred.is_empty() {
                break;
            }
            if ext.map.len() == before {
                let (pair, candidates) = stuck.expect("deferred pairs record a tie");
                return Err(Error::AmbiguousExtension { pair, candidates });
            }
            pending = deferred;
        }
        frontier = ext.map.order[known..].to_vec();
    }
    Ok(IsoOutcome::Verified(ext.map))
}

/// Checks that `map` extends to a measured-semiring isomorphism on everything
/// reachable within `depth` fusion steps.
pub fn check_measured_iso(a: &MeasuredSemiring, b: &MeasuredSemiring, map: &IsoMap, depth: usize) -> Result<IsoOutcome> {
    extend_map(a, b, map, depth, DimCheck::Required)
}

/// Multiplicity, and dimension when dimensions are checked.
type TermKey = (BigUint, Option<BigUint>);

enum PairResult {
    Done,
    Violation(Counterexample),
    Ambiguous(usize),
}

struct Extender<'r> {
    a: &'r MeasuredSemiring,
    b: &'r MeasuredSemiring,
    dims: DimCheck,
    map: IsoMap,
}

impl Extender<'_> {
    fn assign(&mut self, x: Label, y: Label) -> Result<Option<Counterexample>> {
        if let Some(prev) = self.map.preimage(&y) {
            return Ok(Some(Counterexample::NotInjective {
                target: y,
                sources: (prev.clone(), x),
            }));
        }
        if self.dims == DimCheck::Required {
            let (da, db) = (self.a.dim(&x)?, self.b.dim(&y)?);
            if da != db {
                return Ok(Some(Counterexample::DimensionMismatch {
                    label: x,
                    image: y,
                    dim_a: da,
                    dim_b: db,
                }));
            }
        }
        self.map.insert_unchecked(x, y);
        Ok(None)
    }

    fn match_pair(&mut self, x: &Label, y: &Label) -> Result<PairResult> {
        let (fx, fy) = (self.map.forward[x].clone(), self.map.forward[y].clone());
        let pa = self.a.fuse(x, y)?;
        let pb = self.b.fuse(&fx, &fy)?;
        let mismatch = || {
            PairResult::Violation(Counterexample::FusionMismatch {
                pair: (x.clone(), y.clone()),
                product_a: pa.to_string(),
                product_b: pb.to_string(),
            })
        };

        let mut new_a: Vec<(&Label, &BigUint)> = Vec::new();
        for (t, m) in pa.terms() {
            match self.map.get(t) {
                Some(image) if pb.multiplicity(image) == *m => {}
                Some(_) => return Ok(mismatch()),
                None => new_a.push((t, m)),
            }
        }
        let mut new_b: Vec<(&Label, &BigUint)> = Vec::new();
        for (t, m) in pb.terms() {
            match self.map.preimage(t) {
                Some(pre) if pa.multiplicity(pre) == *m => {}
                Some(_) => return Ok(mismatch()),
                None => new_b.push((t, m)),
            }
        }
        if new_a.len() != new_b.len() {
            return Ok(mismatch());
        }
        if new_a.is_empty() {
            return Ok(PairResult::Done);
        }

        let key = |ring: &MeasuredSemiring, l: &Label, m: &BigUint| -> Result<TermKey> {
            let d = match self.dims {
                DimCheck::Required => Some(ring.dim(l)?),
                DimCheck::Ignored => None,
            };
            Ok((m.clone(), d))
        };
        let mut groups: BTreeMap<TermKey, (Vec<Label>, Vec<Label>)> = BTreeMap::new();
        for (t, m) in &new_a {
            groups.entry(key(self.a, t, m)?).or_default().0.push((*t).clone());
        }
        for (t, m) in &new_b {
            groups.entry(key(self.b, t, m)?).or_default().1.push((*t).clone());
        }
        if groups.values().any(|(ga, gb)| ga.len() != gb.len()) {
            // a lone new term on each side with equal multiplicity is a dimension failure
            if let ([(ta, ma)], [(tb, mb)]) = (new_a.as_slice(), new_b.as_slice()) {
                if ma == mb {
                    return Ok(PairResult::Violation(Counterexample::DimensionMismatch {
                        label: (*ta).clone(),
                        image: (*tb).clone(),
                        dim_a: self.a.dim(ta)?,
                        dim_b: self.b.dim(tb)?,
                    }));
                }
            }
            return Ok(mismatch());
        }
        let mut tie = 0;
        for (ga, gb) in groups.into_values() {
            if ga.len() == 1 {
                if let Some(c) = self.assign(ga[0].clone(), gb[0].clone())? {
                    return Ok(PairResult::Violation(c));
                }
            } else {
                tie = tie.max(ga.len());
            }
        }
        Ok(if tie > 0 { PairResult::Ambiguous(tie) } else { PairResult::Done })
    }
}

/// Certificate that `dim X > dim f(X)` for a fusion-compatible map `f`, which
/// forces `dim S_n ≥ ρⁿ` for simples `S_n` of ring A.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessCertificate {
    pub witness: Element,
    pub dim_x: BigUint,
    pub dim_fx: BigUint,
    /// `ρ = ratio_num / ratio_den` in lowest terms.
    pub ratio_num: BigUint,
    pub ratio_den: BigUint,
    pub ratio: f64,
}

impl WitnessCertificate {
    pub fn bound(&self) -> String {
        if self.ratio_den.is_one() {
            format!("dim S_n >= {}^n", self.ratio_num)
        } else {
            format!("dim S_n >= ({}/{})^n", self.ratio_num, self.ratio_den)
        }
    }
}

/// Compares `dim X` with `dim f(X)`; `map` must already cover the support of `x`.
pub fn infinite_growth_witness(
    a: &MeasuredSemiring,
    b: &MeasuredSemiring,
    map: &IsoMap,
    x: &Element,
) -> Result<Option<WitnessCertificate>> {
    let fx = map.apply(b, x)?;
    let (dim_x, dim_fx) = (x.dim(a)?, fx.dim(b)?);
    if dim_x <= dim_fx {
        return Ok(None);
    }
    let g = dim_x.gcd(&dim_fx);
    let ratio = (log2_biguint(&dim_x) - log2_biguint(&dim_fx)).exp2();
    Ok(Some(WitnessCertificate {
        witness: x.clone(),
        ratio_num: &dim_x / &g,
        ratio_den: &dim_fx / &g,
        dim_x,
        dim_fx,
        ratio,
    }))
}

/// Extends `map` to `depth` without requiring equal dimensions, then returns
/// the first simple (in discovery order) with `dim X > dim f(X)`.
///
/// A fusion-incompatible map is an [`Error::IncompatibleMap`].
pub fn find_witness(
    a: &MeasuredSemiring,
    b: &MeasuredSemiring,
    map: &IsoMap,
    depth: usize,
) -> Result<Option<WitnessCertificate>> {
    let ext = match extend_map(a, b, map, depth, DimCheck::Ignored)? {
        IsoOutcome::Verified(m) => m,
        IsoOutcome::Counterexample(c) => return Err(Error::IncompatibleMap(c.to_string())),
    };
    for (x, _) in ext.iter() {
        if let Some(cert) = infinite_growth_witness(a, b, &ext, &a.simple(x.clone())?)? {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}
