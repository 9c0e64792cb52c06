//! Labels for simple objects.
//!
//! A [`Label`] is the canonical encoding of one isomorphism class of simple
//! objects. Each ring decides which variant it uses; the derived ordering is
//! lexicographic on the encoding and only serves to make iteration and output
//! deterministic.

use std::fmt;

use smallvec::SmallVec;

pub type Parts = SmallVec<[i64; 4]>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// SL(2) spins, rank-one torus characters.
    Int(i64),
    /// Integer vectors: GL(2) `(spin, det power)`, SL(n) partitions, torus characters.
    Tuple(Parts),
    /// Named basis element of a table ring.
    Token(String),
    /// Basis element of a product ring.
    Pair(Box<Label>, Box<Label>),
}

impl Label {
    pub fn tuple<I: IntoIterator<Item = i64>>(parts: I) -> Self {
        Label::Tuple(parts.into_iter().collect())
    }

    pub fn token(s: impl Into<String>) -> Self {
        Label::Token(s.into())
    }

    pub fn pair(a: Label, b: Label) -> Self {
        Label::Pair(Box::new(a), Box::new(b))
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Label::Int(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_parts(&self) -> Option<&[i64]> {
        match self {
            Label::Tuple(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Label, &Label)> {
        match self {
            Label::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(v) => write!(f, "{v}"),
            Label::Tuple(parts) => {
                f.write_str("(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            Label::Token(s) => f.write_str(s),
            Label::Pair(a, b) => write!(f, "[{a}|{b}]"),
        }
    }
}

/// Syntactic shape of a label string, before any ring-specific validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawLabel<'a> {
    Int(i64),
    Tuple(Vec<i64>),
    Token(&'a str),
    Pair(&'a str, &'a str),
}

/// Classifies a single label string: `7`, `(1,0)`, `name`, `[a|b]` or `a|b`.
pub fn lex_label(s: &str) -> Result<RawLabel<'_>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty label".into());
    }
    if let Some((a, b)) = split_pair(s) {
        return Ok(RawLabel::Pair(a, b));
    }
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(RawLabel::Tuple(Vec::new()));
        }
        return inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| format!("bad integer `{}` in `{s}`", p.trim()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(RawLabel::Tuple);
    }
    if let Ok(v) = s.parse::<i64>() {
        return Ok(RawLabel::Int(v));
    }
    if s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Ok(RawLabel::Token(s));
    }
    Err(format!("unrecognized label `{s}`"))
}

fn split_pair(s: &str) -> Option<(&str, &str)> {
    let body = match s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        // `[a|b]` only counts as wrapped if the brackets match each other
        Some(inner) if top_level_bar(inner).is_some() => inner,
        _ => s,
    };
    let at = top_level_bar(body)?;
    Some((body[..at].trim(), body[at + 1..].trim()))
}

fn top_level_bar(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '|' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Splits a generator list on top-level `;` or `,`.
///
/// Commas nested inside `(...)` or `[...]` stay with their label, so
/// `0,1,-1`, `(0,0);(1,0)` and `(0,0),(1,0)` all split as expected.
pub fn split_label_list(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ';' | ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|t| !t.is_empty());
    out
}
