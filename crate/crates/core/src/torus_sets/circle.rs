//! Finite unions of intervals on the real line and on the circle `R/Z`.

use num_traits::{One, Zero};

use super::turn::{Turn, Q};

/// A real interval with independent endpoint closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Q, hi: Q, lo_closed: bool, hi_closed: bool) -> Interval {
        Interval { lo, hi, lo_closed, hi_closed }
    }

    pub fn open(lo: Q, hi: Q) -> Interval {
        Interval::new(lo, hi, false, false)
    }

    pub fn closed(lo: Q, hi: Q) -> Interval {
        Interval::new(lo, hi, true, true)
    }

    pub fn point(x: Q) -> Interval {
        Interval::closed(x, x)
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi && !self.is_empty()
    }

    pub fn length(&self) -> Q {
        if self.is_empty() {
            Q::zero()
        } else {
            self.hi - self.lo
        }
    }

    pub fn contains(&self, x: Q) -> bool {
        let above = x > self.lo || (x == self.lo && self.lo_closed);
        let below = x < self.hi || (x == self.hi && self.hi_closed);
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let (lo, lo_closed) = if self.lo > other.lo {
            (self.lo, self.lo_closed)
        } else if other.lo > self.lo {
            (other.lo, other.lo_closed)
        } else {
            (self.lo, self.lo_closed && other.lo_closed)
        };
        let (hi, hi_closed) = if self.hi < other.hi {
            (self.hi, self.hi_closed)
        } else if other.hi < self.hi {
            (other.hi, other.hi_closed)
        } else {
            (self.hi, self.hi_closed && other.hi_closed)
        };
        Interval { lo, hi, lo_closed, hi_closed }
    }
}

/// Sorts and merges intervals into a disjoint, non-adjacent list.
pub fn union_all(mut v: Vec<Interval>) -> Vec<Interval> {
    v.retain(|iv| !iv.is_empty());
    v.sort_by(|a, b| a.lo.cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed)));
    let mut out: Vec<Interval> = Vec::with_capacity(v.len());
    for iv in v {
        if let Some(cur) = out.last_mut() {
            let touches = iv.lo < cur.hi || (iv.lo == cur.hi && (cur.hi_closed || iv.lo_closed));
            if touches {
                if iv.lo == cur.lo {
                    cur.lo_closed |= iv.lo_closed;
                }
                if iv.hi > cur.hi {
                    cur.hi = iv.hi;
                    cur.hi_closed = iv.hi_closed;
                } else if iv.hi == cur.hi {
                    cur.hi_closed |= iv.hi_closed;
                }
                continue;
            }
        }
        out.push(iv);
    }
    out
}

/// Pairwise intersection of two normalized interval lists.
pub fn intersect_all(a: &[Interval], b: &[Interval]) -> Vec<Interval> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            let z = x.intersect(y);
            if !z.is_empty() {
                out.push(z);
            }
        }
    }
    union_all(out)
}

/// An arc of the circle: from `start`, counterclockwise, for `len ∈ [0, 1]`.
///
/// `len == 1` with both ends open is the circle minus `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircleArc {
    pub start: Turn,
    pub len: Q,
    pub start_closed: bool,
    pub end_closed: bool,
}

impl CircleArc {
    pub fn end(&self) -> Turn {
        Turn::new(self.start.value() + self.len)
    }

    pub fn midpoint(&self) -> Turn {
        Turn::new(self.start.value() + self.len / Q::from_integer(2))
    }

    pub fn is_point(&self) -> bool {
        self.len.is_zero()
    }
}

/// A subset of `R/Z` stored as disjoint intervals inside `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CircleSet {
    ivs: Vec<Interval>,
}

impl CircleSet {
    pub fn empty() -> CircleSet {
        CircleSet { ivs: Vec::new() }
    }

    pub fn full() -> CircleSet {
        CircleSet { ivs: vec![Interval::new(Q::zero(), Q::one(), true, false)] }
    }

    pub fn point(t: Turn) -> CircleSet {
        CircleSet { ivs: vec![Interval::point(t.value())] }
    }

    pub fn points<I: IntoIterator<Item = Turn>>(ts: I) -> CircleSet {
        CircleSet::from_intervals(ts.into_iter().map(|t| Interval::point(t.value())).collect())
    }

    /// Builds from intervals already inside `[0, 1]`; a closed end at 1 is read as 0.
    pub fn from_intervals(ivs: Vec<Interval>) -> CircleSet {
        let mut v = Vec::with_capacity(ivs.len());
        for iv in ivs {
            if iv.is_empty() {
                continue;
            }
            debug_assert!(iv.lo >= Q::zero() && iv.hi <= Q::one());
            if iv.hi == Q::one() {
                if iv.hi_closed {
                    v.push(Interval::point(Q::zero()));
                }
                if iv.lo < Q::one() {
                    v.push(Interval::new(iv.lo, iv.hi, iv.lo_closed, false));
                }
            } else {
                v.push(iv);
            }
        }
        CircleSet { ivs: union_all(v) }
    }

    pub fn from_arc(arc: CircleArc) -> CircleSet {
        let s = arc.start.value();
        let len = arc.len;
        if len > Q::one() || (len == Q::one() && (arc.start_closed || arc.end_closed)) {
            return CircleSet::full();
        }
        if len.is_zero() {
            return if arc.start_closed && arc.end_closed {
                CircleSet::point(arc.start)
            } else {
                CircleSet::empty()
            };
        }
        let e = s + len;
        if e <= Q::one() {
            CircleSet::from_intervals(vec![Interval::new(s, e, arc.start_closed, arc.end_closed)])
        } else {
            CircleSet::from_intervals(vec![
                Interval::new(s, Q::one(), arc.start_closed, false),
                Interval::new(Q::zero(), e - Q::one(), true, arc.end_closed),
            ])
        }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.ivs
    }

    pub fn is_empty(&self) -> bool {
        self.ivs.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.ivs.len() == 1 && self.ivs[0] == Interval::new(Q::zero(), Q::one(), true, false)
    }

    pub fn contains(&self, t: Turn) -> bool {
        let x = t.value();
        self.ivs.iter().any(|iv| iv.contains(x))
    }

    pub fn measure(&self) -> Q {
        self.ivs.iter().map(|iv| iv.length()).fold(Q::zero(), |a, b| a + b)
    }

    pub fn union(&self, other: &CircleSet) -> CircleSet {
        let mut v = self.ivs.clone();
        v.extend_from_slice(&other.ivs);
        CircleSet { ivs: union_all(v) }
    }

    pub fn intersect(&self, other: &CircleSet) -> CircleSet {
        CircleSet { ivs: intersect_all(&self.ivs, &other.ivs) }
    }

    /// Connected components, with the interval ending at 1 joined to one starting at 0.
    pub fn components(&self) -> Vec<CircleArc> {
        if self.is_full() {
            return vec![CircleArc { start: Turn::ZERO, len: Q::one(), start_closed: true, end_closed: true }];
        }
        let n = self.ivs.len();
        let wrap = n >= 2 && self.ivs[0].lo.is_zero() && self.ivs[0].lo_closed && self.ivs[n - 1].hi == Q::one();
        let mut out = Vec::with_capacity(n);
        let range = if wrap { 1..n - 1 } else { 0..n };
        for iv in &self.ivs[range] {
            out.push(CircleArc {
                start: Turn::new(iv.lo),
                len: iv.hi - iv.lo,
                start_closed: iv.lo_closed,
                end_closed: iv.hi_closed,
            });
        }
        if wrap {
            let first = self.ivs[0];
            let last = self.ivs[n - 1];
            out.push(CircleArc {
                start: Turn::new(last.lo),
                len: (Q::one() - last.lo) + first.hi,
                start_closed: last.lo_closed,
                end_closed: first.hi_closed,
            });
        }
        out.sort();
        out
    }

    /// Image under `t ↦ sign·t + shift` with `sign = ±1`.
    pub fn map_affine(&self, sign: i64, shift: Turn) -> CircleSet {
        if self.is_full() {
            return CircleSet::full();
        }
        let mut out = CircleSet::empty();
        for c in self.components() {
            let arc = if sign > 0 {
                CircleArc { start: c.start + shift, ..c }
            } else {
                CircleArc {
                    start: shift - c.end(),
                    len: c.len,
                    start_closed: c.end_closed,
                    end_closed: c.start_closed,
                }
            };
            out = out.union(&CircleSet::from_arc(arc));
        }
        out
    }

    /// Minkowski sum `{s + t}` on the circle.
    pub fn minkowski(&self, other: &CircleSet) -> CircleSet {
        if self.is_empty() || other.is_empty() {
            return CircleSet::empty();
        }
        if self.is_full() || other.is_full() {
            return CircleSet::full();
        }
        let mut pieces = Vec::new();
        for a in self.components() {
            for b in other.components() {
                let arc = CircleArc {
                    start: a.start + b.start,
                    len: a.len + b.len,
                    start_closed: a.start_closed && b.start_closed,
                    end_closed: a.end_closed && b.end_closed,
                };
                let s = CircleSet::from_arc(arc);
                if s.is_full() {
                    return s;
                }
                pieces.extend(s.ivs);
            }
        }
        CircleSet { ivs: union_all(pieces) }
    }

    /// The set with the given parameters removed.
    pub fn minus_points(&self, ts: &[Turn]) -> CircleSet {
        let mut ivs = self.ivs.clone();
        for t in ts {
            let x = t.value();
            let mut next = Vec::with_capacity(ivs.len() + 1);
            for iv in ivs {
                if iv.contains(x) {
                    next.push(Interval::new(iv.lo, x, iv.lo_closed, false));
                    next.push(Interval::new(x, iv.hi, false, iv.hi_closed));
                } else {
                    next.push(iv);
                }
            }
            ivs = next.into_iter().filter(|iv| !iv.is_empty()).collect();
        }
        CircleSet { ivs }
    }

    /// Degenerate components (isolated points).
    pub fn isolated_points(&self) -> Vec<Turn> {
        self.components().into_iter().filter(|c| c.is_point()).map(|c| c.start).collect()
    }

    /// Parameters of endpoints that bound the set but are not in it.
    pub fn open_endpoints(&self) -> Vec<Turn> {
        let mut out = Vec::new();
        for iv in &self.ivs {
            if !iv.lo_closed {
                out.push(Turn::new(iv.lo));
            }
            if !iv.hi_closed {
                out.push(Turn::new(iv.hi));
            }
        }
        out.retain(|&t| !self.contains(t));
        out.dedup();
        out
    }

    /// The set with its isolated points removed.
    pub fn without_isolated_points(&self) -> CircleSet {
        let n = self.ivs.len();
        let joins_wrap = n >= 2 && self.ivs[n - 1].hi == Q::one();
        let ivs = self
            .ivs
            .iter()
            .enumerate()
            .filter(|&(i, iv)| !iv.is_point() || (i == 0 && iv.lo.is_zero() && joins_wrap))
            .map(|(_, iv)| *iv)
            .collect();
        CircleSet { ivs }
    }
}
