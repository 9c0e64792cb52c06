//! Text format for finite fusion rings.
//!
//! ```text
//! # character ring of S3
//! ring S3
//! unit e
//! simple e 1
//! simple s 1
//! simple r 2
//! fuse s s = e
//! fuse s r = r
//! fuse r r = e + s + r
//! ```
//!
//! Products involving the unit are filled in automatically. `fuse a b` and
//! `fuse b a` are independent entries; if only one is given the other
//! defaults to it, with a warning.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::catalog::{Decomposition, FiniteRingTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// 1-based source line; 0 when the finding is not tied to one line.
    pub line: usize,
    pub severity: Severity,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics(pub Vec<Diagnostic>);

impl Diagnostics {
    fn error(&mut self, line: usize, message: impl Into<String>) {
        self.0.push(Diagnostic {
            line,
            severity: Severity::Error,
            message: message.into(),
        });
    }

    fn warning(&mut self, line: usize, message: impl Into<String>) {
        self.0.push(Diagnostic {
            line,
            severity: Severity::Warning,
            message: message.into(),
        });
    }

    pub fn has_errors(&self) -> bool {
        self.0.iter().any(|d| d.severity == Severity::Error)
    }

    pub fn errors(&self) -> impl Iterator<Item = &Diagnostic> {
        self.0.iter().filter(|d| d.severity == Severity::Error)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn extend(&mut self, other: Diagnostics) {
        self.0.extend(other.0);
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        if self.line > 0 {
            write!(f, "line {}: {sev}: {}", self.line, self.message)
        } else {
            write!(f, "{sev}: {}", self.message)
        }
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// A parsed table together with any warnings raised while reading it.
#[derive(Debug, Clone)]
pub struct ParsedRing {
    pub table: FiniteRingTable,
    pub warnings: Diagnostics,
}

fn is_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct FuseLine {
    line: usize,
    a: String,
    b: String,
    terms: Vec<(u64, String)>,
}

fn parse_rhs(rhs: &str) -> Result<Vec<(u64, String)>, String> {
    let rhs = rhs.trim();
    if rhs.is_empty() {
        return Err("empty right-hand side".into());
    }
    rhs.split('+')
        .map(|term| {
            let words: Vec<&str> = term.split_whitespace().collect();
            let (k, c) = match words.as_slice() {
                [c] => (1, *c),
                [k, c] => {
                    let k: u64 = k
                        .parse()
                        .map_err(|_| format!("malformed coefficient `{k}`"))?;
                    if k == 0 {
                        return Err("coefficients must be positive".into());
                    }
                    (k, *c)
                }
                _ => return Err(format!("malformed term `{}`", term.trim())),
            };
            if !is_label(c) {
                return Err(format!("malformed label `{c}`"));
            }
            Ok((k, c.to_string()))
        })
        .collect()
}

/// Parses the ring format. Any error means no table is produced.
pub fn parse_ring_spec(src: &str) -> Result<ParsedRing, Diagnostics> {
    let mut diags = Diagnostics::default();
    let mut name: Option<String> = None;
    let mut unit: Option<(usize, String)> = None;
    let mut simples: BTreeMap<String, (usize, u64)> = BTreeMap::new();
    let mut fuses: Vec<FuseLine> = Vec::new();
    let mut seen_directive = false;

    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (keyword, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        let first = !seen_directive;
        seen_directive = true;
        match keyword {
            "ring" => {
                if !first {
                    diags.error(line, "`ring` must be the first line and appear once");
                } else if rest.is_empty() || rest.split_whitespace().count() != 1 {
                    diags.error(line, "expected `ring <name>`");
                } else {
                    name = Some(rest.to_string());
                }
            }
            _ => {
                if first {
                    diags.error(line, "the first line must be `ring <name>`");
                }
                parse_directive(keyword, rest, line, &mut diags, &mut unit, &mut simples, &mut fuses);
            }
        }
    }

    if name.is_none() && !diags.has_errors() {
        diags.error(0, "missing `ring <name>` line");
    }
    let unit = match unit {
        Some(u) => Some(u),
        None => {
            diags.error(0, "missing `unit` line");
            None
        }
    };
    if let Some((line, u)) = &unit {
        if !simples.contains_key(u) {
            diags.error(*line, format!("unit `{u}` is not declared as a simple"));
        }
    }

    let mut table = FiniteRingTable {
        name: name.unwrap_or_default(),
        unit: unit.as_ref().map(|(_, u)| u.clone()).unwrap_or_default(),
        simples: simples.iter().map(|(k, &(_, d))| (k.clone(), d)).collect(),
        ..Default::default()
    };

    for f in &fuses {
        let mut ok = true;
        for l in [&f.a, &f.b].into_iter().chain(f.terms.iter().map(|(_, c)| c)) {
            if !simples.contains_key(l) {
                diags.error(f.line, format!("unknown label `{l}`"));
                ok = false;
            }
        }
        let key = (f.a.clone(), f.b.clone());
        if let Some(prev) = table.source_lines.get(&key) {
            diags.error(
                f.line,
                format!("duplicate `fuse {} {}` (first given on line {prev})", f.a, f.b),
            );
            continue;
        }
        if !ok {
            continue;
        }
        let mut dec = Decomposition::new();
        for (k, c) in &f.terms {
            *dec.entry(c.clone()).or_insert(0) += k;
        }
        table.source_lines.insert(key.clone(), f.line);
        table.fusion.insert(key, dec);
    }

    if diags.has_errors() {
        return Err(diags);
    }

    let mut warnings = Diagnostics::default();
    fill_unit_products(&mut table, &mut diags);
    fill_mirrored_products(&mut table, &mut warnings);
    if diags.has_errors() {
        return Err(diags);
    }
    Ok(ParsedRing { table, warnings })
}

#[allow(clippy::too_many_arguments)]
fn parse_directive(
    keyword: &str,
    rest: &str,
    line: usize,
    diags: &mut Diagnostics,
    unit: &mut Option<(usize, String)>,
    simples: &mut BTreeMap<String, (usize, u64)>,
    fuses: &mut Vec<FuseLine>,
) {
    match keyword {
        "ring" => diags.error(line, "`ring` must be the first line and appear once"),
        "unit" => {
            if unit.is_some() {
                diags.error(line, "`unit` given more than once");
            } else if !is_label(rest) {
                diags.error(line, "expected `unit <label>`");
            } else {
                *unit = Some((line, rest.to_string()));
            }
        }
        "simple" => {
            let words: Vec<&str> = rest.split_whitespace().collect();
            let [label, dim] = words.as_slice() else {
                diags.error(line, "expected `simple <label> <dim>`");
                return;
            };
            if !is_label(label) {
                diags.error(line, format!("malformed label `{label}`"));
                return;
            }
            let dim = match dim.parse::<i64>() {
                Ok(d) if d <= 0 => {
                    diags.error(line, "dimension must be positive");
                    return;
                }
                Ok(d) => d as u64,
                Err(_) => {
                    diags.error(line, format!("malformed dimension `{dim}`"));
                    return;
                }
            };
            if let Some((prev, _)) = simples.get(*label) {
                diags.error(line, format!("duplicate label `{label}` (first declared on line {prev})"));
                return;
            }
            simples.insert(label.to_string(), (line, dim));
        }
        "fuse" => {
            let Some((lhs, rhs)) = rest.split_once('=') else {
                diags.error(line, "expected `fuse <a> <b> = <terms>`");
                return;
            };
            let operands: Vec<&str> = lhs.split_whitespace().collect();
            let [a, b] = operands.as_slice() else {
                diags.error(line, "expected two operands before `=`");
                return;
            };
            if !is_label(a) || !is_label(b) {
                diags.error(line, "malformed operand label");
                return;
            }
            match parse_rhs(rhs) {
                Ok(terms) => fuses.push(FuseLine {
                    line,
                    a: a.to_string(),
                    b: b.to_string(),
                    terms,
                }),
                Err(e) => diags.error(line, e),
            }
        }
        other => diags.error(line, format!("unknown directive `{other}`")),
    }
}

fn fill_unit_products(table: &mut FiniteRingTable, diags: &mut Diagnostics) {
    let unit = table.unit.clone();
    let labels: Vec<String> = table.simples.keys().cloned().collect();
    for a in &labels {
        let expected: Decomposition = [(a.clone(), 1)].into_iter().collect();
        for key in [(unit.clone(), a.clone()), (a.clone(), unit.clone())] {
            match table.fusion.get(&key) {
                Some(given) if *given != expected => {
                    let line = table.line_of(&key.0, &key.1);
                    diags.error(
                        line,
                        format!("unit law violated: {} ⊗ {} must be {a}", key.0, key.1),
                    );
                }
                Some(_) => {}
                None => {
                    table.fusion.insert(key, expected.clone());
                }
            }
        }
    }
}

fn fill_mirrored_products(table: &mut FiniteRingTable, warnings: &mut Diagnostics) {
    let given: Vec<(String, String)> = table.fusion.keys().cloned().collect();
    for (a, b) in given {
        if a == b || table.fusion.contains_key(&(b.clone(), a.clone())) {
            continue;
        }
        let line = table.line_of(&a, &b);
        warnings.warning(
            line,
            format!("only `fuse {a} {b}` given; using the same decomposition for `fuse {b} {a}`"),
        );
        let dec = table.fusion[&(a.clone(), b.clone())].clone();
        table.fusion.insert((b, a), dec);
    }
}

fn show(dec: &Decomposition) -> String {
    dec.iter()
        .map(|(c, &k)| if k == 1 { c.clone() } else { format!("{k} {c}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn compose(table: &FiniteRingTable, x: &Decomposition, y: &Decomposition) -> Option<Decomposition> {
    let mut out = Decomposition::new();
    for (a, &ka) in x {
        for (b, &kb) in y {
            for (c, &kc) in table.product(a, b)? {
                *out.entry(c.clone()).or_insert(0) += ka * kb * kc;
            }
        }
    }
    Some(out)
}

/// Exhaustive measured-semiring checks over the finite basis.
///
/// Checks completeness, the unit law, exact dimension multiplicativity on
/// every ordered pair, and associativity on every ordered triple. Each
/// violation is reported with its witness; nothing panics.
pub fn validate_table(t: &FiniteRingTable) -> Diagnostics {
    let mut diags = Diagnostics::default();
    let labels: Vec<&String> = t.simples.keys().collect();
    let unknown: BTreeSet<&String> = t
        .fusion
        .iter()
        .flat_map(|((a, b), dec)| [a, b].into_iter().chain(dec.keys()))
        .filter(|l| !t.simples.contains_key(*l))
        .collect();
    for l in unknown {
        diags.error(0, format!("unknown label `{l}` in fusion table"));
    }
    match t.simples.get(&t.unit) {
        None => diags.error(0, format!("unit `{}` is not a simple", t.unit)),
        Some(&d) if d != 1 => diags.error(0, format!("unit `{}` has dimension {d}, expected 1", t.unit)),
        _ => {}
    }
    for &a in &labels {
        if t.simples[a] == 0 {
            diags.error(0, format!("dimension must be positive (simple `{a}`)"));
        }
    }

    for &a in &labels {
        for &b in &labels {
            let line = t.line_of(a, b);
            let Some(dec) = t.product(a, b) else {
                diags.error(0, format!("missing fusion for ({a},{b})"));
                continue;
            };
            if dec.is_empty() || dec.values().any(|&k| k == 0) {
                diags.error(line, format!("empty or zero decomposition at ({a},{b})"));
            }
            if (*a == t.unit || *b == t.unit) && t.simples.contains_key(&t.unit) {
                let other = if *a == t.unit { b } else { a };
                if dec.len() != 1 || dec.get(other) != Some(&1) {
                    diags.error(line, format!("unit law fails at ({a},{b}): got {}", show(dec)));
                }
            }
            let (da, db) = (t.simples[a], t.simples[b]);
            let sum: u128 = dec
                .iter()
                .map(|(c, &k)| k as u128 * t.simples.get(c).copied().unwrap_or(0) as u128)
                .sum();
            if sum != da as u128 * db as u128 {
                diags.error(
                    line,
                    format!("dimension multiplicativity fails at ({a},{b}): {da}·{db} ≠ {sum}"),
                );
            }
        }
    }
    if diags.has_errors() {
        // associativity over an incomplete or inconsistent table is not meaningful
        if labels.iter().all(|a| labels.iter().all(|b| t.product(a, b).is_some())) {
            check_associativity(t, &labels, &mut diags);
        }
        return diags;
    }
    check_associativity(t, &labels, &mut diags);
    diags
}

fn check_associativity(t: &FiniteRingTable, labels: &[&String], diags: &mut Diagnostics) {
    let single = |x: &String| -> Decomposition { [(x.clone(), 1)].into_iter().collect() };
    for &a in labels {
        for &b in labels {
            for &c in labels {
                let ab = compose(t, &single(a), &single(b));
                let bc = compose(t, &single(b), &single(c));
                let left = ab.and_then(|ab| compose(t, &ab, &single(c)));
                let right = bc.and_then(|bc| compose(t, &single(a), &bc));
                if let (Some(l), Some(r)) = (left, right) {
                    if l != r {
                        diags.error(
                            0,
                            format!(
                                "associativity fails at ({a},{b},{c}): ({a}{b}){c} = {} but {a}({b}{c}) = {}",
                                show(&l),
                                show(&r)
                            ),
                        );
                    }
                }
            }
        }
    }
}

/// Writes a table back in the ring format; products with the unit are omitted.
pub fn write_ring_spec(t: &FiniteRingTable) -> String {
    let mut out = format!("ring {}\nunit {}\n", t.name, t.unit);
    for (l, d) in &t.simples {
        out.push_str(&format!("simple {l} {d}\n"));
    }
    for ((a, b), dec) in &t.fusion {
        if *a == t.unit || *b == t.unit {
            continue;
        }
        out.push_str(&format!("fuse {a} {b} = {}\n", show(dec)));
    }
    out
}
