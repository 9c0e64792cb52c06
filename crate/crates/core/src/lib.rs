//! Growth of tensor powers in measured fusion semirings.
//!
//! A [`MeasuredSemiring`] pairs a fusion rule on simple labels with a
//! dimension function. For a generating set `F` containing the unit, the
//! support of `F^{⊗n}` and `dim V^n = Σ_{β ∈ F_n} (dim S_β)²` determine the
//! Gelfand–Kirillov dimension of the underlying Hopf algebra; the
//! [`analysis`] module computes these series and estimates the growth degree.
//!
//! ```
//! use gkdim_core::{catalog::parse_ring, analysis::growth_series, Generators, UnitPolicy};
//!
//! let ring = parse_ring("sl2").unwrap();
//! let gens = Generators::parse(&ring, "0,1", UnitPolicy::Strict).unwrap();
//! let s = growth_series(&ring, &gens, 4).unwrap();
//! let dims: Vec<String> = s.dims().map(|d| d.to_string()).collect();
//! assert_eq!(dims, ["5", "14", "30", "55"]);
//! ```

pub mod analysis;
pub mod catalog;
pub mod dsl;
mod error;
mod label;
pub mod power;
mod semiring;

pub use error::{Error, Result};
pub use label::{lex_label, split_label_list, Label, Parts, RawLabel};
pub use power::{Expansion, Generators, UnitPolicy};
pub use semiring::{
    add_elements, dim_vn, fuse_elements, fuse_support, Element, FusionRule, MeasuredSemiring, SupportSet,
};
