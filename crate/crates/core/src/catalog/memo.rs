use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;
use parking_lot::Mutex;

use crate::label::Label;
use crate::semiring::{FusionRule, MeasuredSemiring};

pub const DEFAULT_CACHE_ENTRIES: usize = 1 << 20;

type Product = Arc<Vec<(Label, BigUint)>>;

/// Wraps a ring with a bounded cache of full fusion products.
///
/// Once `capacity` entries are stored, further products are computed but not
/// cached. The wrapper keeps the inner ring's id, so elements stay compatible.
#[derive(Debug)]
pub struct MemoRing {
    inner: MeasuredSemiring,
    capacity: usize,
    cache: Mutex<HashMap<(Label, Label), Product>>,
}

impl MemoRing {
    pub fn new(inner: MeasuredSemiring, capacity: usize) -> Self {
        MemoRing {
            inner,
            capacity,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.lock().len()
    }

    fn product(&self, a: &Label, b: &Label) -> Product {
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.cache.lock().get(&key) {
            return hit.clone();
        }
        let value = Arc::new(self.inner.rule().fuse(a, b));
        let mut cache = self.cache.lock();
        if cache.len() < self.capacity {
            cache.insert(key, value.clone());
        }
        value
    }
}

impl FusionRule for MemoRing {
    fn id(&self) -> String {
        self.inner.id().to_string()
    }

    fn unit(&self) -> Label {
        self.inner.unit()
    }

    fn validate(&self, label: &Label) -> Result<(), String> {
        self.inner.rule().validate(label)
    }

    fn parse_label(&self, s: &str) -> Result<Label, String> {
        self.inner.rule().parse_label(s)
    }

    fn fuse(&self, a: &Label, b: &Label) -> Vec<(Label, BigUint)> {
        (*self.product(a, b)).clone()
    }

    fn fuse_support(&self, a: &Label, b: &Label) -> Vec<Label> {
        self.product(a, b).iter().map(|(l, _)| l.clone()).collect()
    }

    fn dim(&self, a: &Label) -> BigUint {
        self.inner.rule().dim(a)
    }

    fn factors(&self) -> Option<(MeasuredSemiring, MeasuredSemiring)> {
        self.inner.rule().factors()
    }

    fn split_label(&self, label: &Label) -> Option<(Label, Label)> {
        self.inner.rule().split_label(label)
    }
}
