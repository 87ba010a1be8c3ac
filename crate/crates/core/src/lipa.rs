//! Line-interval paths with endpoints in `A` ("LIPA" paths), the weight `μ`, and the `m/l` table calculus.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::central_points;
use crate::pieces::BoundaryTriple;
use crate::torus_sets::{fmt_q, q, qi, Arc, Point, TorusLine, TorusSet, Turn, Q};

/// An arc of `H` on a rational line whose closure endpoints lie in `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LipaPath {
    pub arc: Arc,
    pub endpoints: (Point, Point),
    pub line: TorusLine,
}

/// All LIPA paths of a triple: one per maximal arc of `H`, plus one per full `H`-line meeting `A`.
pub fn find_lipa_paths(t: &BoundaryTriple) -> Vec<LipaPath> {
    let a_lines = t.a.lines();
    let mut out = Vec::new();
    for arc in t.h.arcs() {
        if a_lines.contains(&arc.line) || arc.length() <= Q::from_integer(0) {
            continue;
        }
        let (s, e) = (arc.start_point(), arc.end_point());
        if t.a.contains(s) && t.a.contains(e) {
            out.push(LipaPath { arc, endpoints: (s, e), line: arc.line });
        }
    }
    for line in t.h.lines() {
        if a_lines.contains(&line) {
            continue;
        }
        let meet = t.a.intersect(&TorusSet::from_line(line));
        if let Some(p) = meet.witness_point() {
            let t0 = line.param_of(p).expect("witness lies on the line");
            let arc = Arc { line, t_start: t0, t_end: t0, start_closed: false, end_closed: false };
            out.push(LipaPath { arc, endpoints: (p, p), line });
        }
    }
    out
}

/// `max` over lines carrying a LIPA path of the fraction of the line covered by `H`; 0 if there are none.
pub fn weight_mu(t: &BoundaryTriple) -> Q {
    find_lipa_paths(t)
        .iter()
        .map(|p| t.h.measure_on_line(&p.line))
        .max()
        .unwrap_or_else(|| Q::from_integer(0))
}

/// The line achieving [`weight_mu`], if any.
pub fn weight_line(t: &BoundaryTriple) -> Option<TorusLine> {
    find_lipa_paths(t).iter().map(|p| p.line).max_by_key(|l| t.h.measure_on_line(l))
}

/// One cell of the `m/l` bound: the line `{p·u + q·v ≡ c}` against `A = {Δ·u + n·v ≡ 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub delta: i64,
    pub n: i64,
    pub p: i64,
    pub q: i64,
    #[serde(serialize_with = "ser_turn")]
    pub c: Turn,
    pub m: i64,
    pub l: u32,
    #[serde(serialize_with = "ser_q")]
    pub value: Q,
    pub flagged: bool,
}

fn ser_turn<S: serde::Serializer>(t: &Turn, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&t.to_string())
}

fn ser_q<S: serde::Serializer>(v: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(*v))
}

/// Threshold at and above which a table value is flagged.
pub fn flag_threshold() -> Q {
    q(2, 3)
}

/// `m = |p·n − Δ·q|`, `l` = central points on both lines, value `max{0, (m−2−l)/m}`.
pub fn table_value(delta: i64, n: i64, p: i64, qq: i64, c: Turn) -> Result<TableEntry> {
    if p.gcd(&qq) != 1 {
        return Err(Error::NonPrimitive(p, qq));
    }
    if n.abs().gcd(&delta) != 1 {
        return Err(Error::NonCoprime(delta, n));
    }
    if !(-delta < n && n < 0) {
        return Err(Error::InvalidArgument(format!("need -{delta} < n < 0, got {n}")));
    }
    if !c.is_central() {
        return Err(Error::InvalidArgument(format!("offset must be 0 or 1/2, got {c}")));
    }
    let m = (p * n - delta * qq).abs();
    if m == 0 {
        return Err(Error::DegenerateLine(p, qq));
    }
    let line = TorusLine::from_coeffs(p, qq, c);
    let a = TorusLine::from_coeffs(delta, n, Turn::ZERO);
    let l = central_points().iter().filter(|&&pt| line.contains(pt) && a.contains(pt)).count() as u32;
    let raw = qi(m - 2 - l as i64) / qi(m);
    let value = raw.max(Q::from_integer(0));
    Ok(TableEntry { delta, n, p, q: qq, c, m, l, value, flagged: value >= flag_threshold() })
}

/// Rows `λ₂ = −Δ/|n|` as `(Δ, n)`.
pub const TABLE_ROWS: [(i64, i64); 8] = [(3, -1), (3, -2), (4, -1), (4, -3), (5, -1), (5, -2), (5, -3), (5, -4)];

/// Columns `p/q`.
pub const TABLE_COLUMNS: [(i64, i64); 8] = [(-2, 1), (2, 1), (-1, 1), (1, 1), (-1, 2), (1, 2), (0, 1), (1, 0)];

/// One 8×8 grid for a fixed offset `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    #[serde(serialize_with = "ser_turn")]
    pub c: Turn,
    pub entries: Vec<Vec<TableEntry>>,
}

impl Table {
    pub fn flagged_count(&self) -> usize {
        self.entries.iter().flatten().filter(|e| e.flagged).count()
    }

    /// Plain-text grid; flagged cells are bracketed.
    pub fn render(&self) -> String {
        let mut s = format!("c = {}\n{:>6}", self.c, "");
        for (p, qq) in TABLE_COLUMNS {
            s.push_str(&format!("{:>8}", format!("{p}/{qq}")));
        }
        s.push('\n');
        for (row, (d, n)) in self.entries.iter().zip(TABLE_ROWS) {
            s.push_str(&format!("{:>6}", format!("-{d}/{}", -n)));
            for e in row {
                let v = fmt_q(e.value);
                let v = if e.flagged { format!("[{v}]") } else { v };
                s.push_str(&format!("{v:>8}"));
            }
            s.push('\n');
        }
        s
    }
}

/// Both grids, `c = 0` then `c = 1/2`.
pub fn generate_tables() -> [Table; 2] {
    [Turn::ZERO, Turn::HALF].map(|c| {
        let entries = TABLE_ROWS
            .par_iter()
            .map(|&(d, n)| {
                TABLE_COLUMNS
                    .iter()
                    .map(|&(p, qq)| table_value(d, n, p, qq, c).expect("table cells are nondegenerate"))
                    .collect()
            })
            .collect();
        Table { c, entries }
    })
}
