//! Built-in measured semirings and the ring identifier syntax.
//!
//! | id                   | ring                                   | labels           |
//! |----------------------|----------------------------------------|------------------|
//! | `torus:<r>`          | characters of a rank-`r` torus         | `k` / `(k1,…)`   |
//! | `sl2`                | SL(2)                                  | spin `k ≥ 0`     |
//! | `gl2`                | GL(2)                                  | `(spin,det)`     |
//! | `sln:<n>`            | SL(n), `n ≥ 2`                         | `(λ1,…,λ_{n−1})` |
//! | `be:<d>`             | SL(2) fusion, q-integer dims `u_k(d)`  | spin             |
//! | `gef:<d>`            | GL(2) fusion, q-integer dims `u_a(d)`  | `(spin,det)`     |
//! | `product:<id>,<id>`  | componentwise product                  | `[a\|b]`         |
//! | `dsl:<path>`         | finite table read from a `.ring` file  | tokens           |

mod gl2;
mod memo;
mod product;
mod sl2;
mod sln;
mod table;
mod torus;

pub use gl2::{gl2_fuse, DeformedGl2Ring, Gl2Ring};
pub use memo::{MemoRing, DEFAULT_CACHE_ENTRIES};
pub use product::ProductRing;
pub use sl2::{qint_dims, sl2_fuse, DeformedSl2Ring, Sl2Ring};
pub use sln::{canonical_partition, littlewood_richardson, pieri_column, sln_fuse, weyl_dim, SlnRing};
pub use table::{Decomposition, FiniteRingTable, TableRing};
pub use torus::TorusRing;

use crate::dsl::parse_ring_spec;
use crate::error::{Error, Result};
use crate::semiring::MeasuredSemiring;

/// Identifier patterns understood by [`parse_ring`], for `--help` style listings.
pub const RING_IDS: &[(&str, &str)] = &[
    ("torus:<r>", "characters of a rank-r torus; labels k (r = 1) or (k1,...,kr)"),
    ("sl2", "SL(2) / generic quantum SL(2); labels are spins k >= 0"),
    ("gl2", "GL(2) / generic quantum GL(2); labels (spin,det)"),
    ("sln:<n>", "SL(n), n >= 2, Littlewood-Richardson fusion; labels are partitions"),
    ("be:<d>", "SL(2) fusion with q-integer dimensions, d >= 2"),
    ("gef:<d>", "GL(2) fusion with q-integer dimensions, d >= 2"),
    ("product:<id>,<id>", "componentwise product; labels [a|b]"),
    ("dsl:<path>", "finite ring read from a .ring file; labels are tokens"),
];

fn parse_param<T: std::str::FromStr>(id: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("`{value}` in ring id `{id}`")))
}

/// Builds a ring from its identifier.
pub fn parse_ring(id: &str) -> Result<MeasuredSemiring> {
    let id = id.trim();
    let (kind, arg) = match id.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (id, None),
    };
    match (kind, arg) {
        ("sl2", None) => Ok(MeasuredSemiring::new(Sl2Ring)),
        ("gl2", None) => Ok(MeasuredSemiring::new(Gl2Ring)),
        ("torus", Some(r)) => Ok(MeasuredSemiring::new(TorusRing::new(parse_param(id, r)?)?)),
        ("sln", Some(n)) => Ok(MeasuredSemiring::new(SlnRing::new(parse_param(id, n)?)?)),
        ("be", Some(d)) => Ok(MeasuredSemiring::new(DeformedSl2Ring::new(parse_param(id, d)?)?)),
        ("gef", Some(d)) => Ok(MeasuredSemiring::new(DeformedGl2Ring::new(parse_param(id, d)?)?)),
        ("product", Some(rest)) => parse_product(id, rest),
        ("dsl", Some(path)) => load_table_ring(path),
        _ => Err(Error::UnknownRing(id.to_string())),
    }
}

fn parse_product(id: &str, rest: &str) -> Result<MeasuredSemiring> {
    // `product:product:a,b,c` is ambiguous; the leftmost split that parses wins
    let mut last_err = None;
    for (at, _) in rest.match_indices(',') {
        let (l, r) = (&rest[..at], &rest[at + 1..]);
        match (parse_ring(l), parse_ring(r)) {
            (Ok(a), Ok(b)) => return Ok(MeasuredSemiring::new(ProductRing::new(a, b))),
            (Err(e), _) | (_, Err(e)) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap_or_else(|| Error::UnknownRing(id.to_string())))
}

/// Reads, parses and validates a `.ring` file.
pub fn load_table_ring(path: &str) -> Result<MeasuredSemiring> {
    let src = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    let parsed = parse_ring_spec(&src).map_err(|d| Error::RingDefinition(d.to_string()))?;
    let ring = TableRing::new(format!("dsl:{path}"), parsed.table)
        .map_err(|d| Error::RingDefinition(d.to_string()))?;
    Ok(MeasuredSemiring::new(ring))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in ["sl2", "gl2", "torus:3", "sln:4", "be:3", "gef:2", "product:sl2,torus:1"] {
            assert_eq!(parse_ring(id).unwrap().id(), id);
        }
        let nested = parse_ring("product:product:sl2,gl2,torus:2").unwrap();
        assert_eq!(nested.id(), "product:product:sl2,gl2,torus:2");
    }

    #[test]
    fn bad_ids() {
        assert!(matches!(parse_ring("e8"), Err(Error::UnknownRing(_))));
        assert!(matches!(parse_ring("sl2:3"), Err(Error::UnknownRing(_))));
        assert!(matches!(parse_ring("torus:x"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_ring("be:1"), Err(Error::InvalidParameter(_))));
        assert!(matches!(parse_ring("sln:1"), Err(Error::InvalidParameter(_))));
        assert!(parse_ring("product:sl2").is_err());
        assert!(matches!(parse_ring("dsl:/nonexistent/x.ring"), Err(Error::Io(_))));
    }
}
