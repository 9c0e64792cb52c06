use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::dsl::{validate_table, Diagnostics};
use crate::label::Label;
use crate::semiring::FusionRule;

pub type Decomposition = BTreeMap<String, u64>;

/// Finite fusion ring given by an explicit table, as produced by [`crate::dsl`].
#[derive(Debug, Clone, Default)]
pub struct FiniteRingTable {
    pub name: String,
    pub unit: String,
    /// Simple labels and their dimensions, keyed by label.
    pub simples: BTreeMap<String, u64>,
    /// `(a, b) ↦ a ⊗ b`; entries may be missing until the table is validated.
    pub fusion: BTreeMap<(String, String), Decomposition>,
    /// Source line of each explicitly written product, for diagnostics.
    pub(crate) source_lines: BTreeMap<(String, String), usize>,
}

impl PartialEq for FiniteRingTable {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.unit == other.unit
            && self.simples == other.simples
            && self.fusion == other.fusion
    }
}

impl Eq for FiniteRingTable {}

impl FiniteRingTable {
    pub fn product(&self, a: &str, b: &str) -> Option<&Decomposition> {
        self.fusion.get(&(a.to_string(), b.to_string()))
    }

    pub(crate) fn line_of(&self, a: &str, b: &str) -> usize {
        self.source_lines
            .get(&(a.to_string(), b.to_string()))
            .copied()
            .unwrap_or(0)
    }
}

/// A validated [`FiniteRingTable`] exposed as a measured semiring.
#[derive(Debug, Clone)]
pub struct TableRing {
    id: String,
    table: FiniteRingTable,
}

impl TableRing {
    /// Fails with the validation diagnostics if the table is not a measured semiring.
    pub fn new(id: impl Into<String>, table: FiniteRingTable) -> Result<Self, Diagnostics> {
        let diags = validate_table(&table);
        if diags.has_errors() {
            return Err(diags);
        }
        Ok(TableRing { id: id.into(), table })
    }

    pub fn table(&self) -> &FiniteRingTable {
        &self.table
    }

    fn name_of<'a>(&self, l: &'a Label) -> &'a str {
        match l {
            Label::Token(s) => s,
            _ => "",
        }
    }
}

impl FusionRule for TableRing {
    fn id(&self) -> String {
        self.id.clone()
    }

    fn unit(&self) -> Label {
        Label::token(self.table.unit.clone())
    }

    fn validate(&self, label: &Label) -> Result<(), String> {
        match label {
            Label::Token(s) if self.table.simples.contains_key(s) => Ok(()),
            Label::Token(s) => Err(format!("`{s}` is not a simple of {}", self.table.name)),
            _ => Err("expected a label token".into()),
        }
    }

    fn parse_label(&self, s: &str) -> Result<Label, String> {
        let s = s.trim();
        if self.table.simples.contains_key(s) {
            Ok(Label::token(s))
        } else {
            Err(format!("`{s}` is not a simple of {}", self.table.name))
        }
    }

    fn fuse(&self, a: &Label, b: &Label) -> Vec<(Label, BigUint)> {
        self.table
            .product(self.name_of(a), self.name_of(b))
            .map(|d| {
                d.iter()
                    .map(|(c, &m)| (Label::token(c.clone()), BigUint::from(m)))
                    .collect()
            })
            .unwrap_or_default()
    }

    fn dim(&self, a: &Label) -> BigUint {
        BigUint::from(self.table.simples.get(self.name_of(a)).copied().unwrap_or(0))
    }
}
