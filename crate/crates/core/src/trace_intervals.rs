//! The product-trace interval calculus on folded angles.
//!
//! A folded angle `f ∈ [0, 1/2]` stands for the SU(2) conjugacy class of trace
//! `2cos(2πf)`. For noncentral classes `f₁, f₂`, the products of representatives
//! that do not commute sweep exactly the open angle interval
//! `(|f₁ − f₂|, min(f₁ + f₂, 1 − f₁ − f₂))`.

use num_traits::{One, Zero};

use crate::torus_sets::{q, union_all, CircleSet, Interval, TorusSet, Turn, Q};

/// An angle in `[0, 1/2]` obtained by `u ↦ min(u, 1 − u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FoldedAngle(Q);

impl FoldedAngle {
    /// Panics outside `[0, 1/2]`.
    pub fn new(value: Q) -> FoldedAngle {
        assert!(value >= Q::zero() && value <= q(1, 2), "folded angle out of range");
        FoldedAngle(value)
    }

    pub fn value(self) -> Q {
        self.0
    }

    pub fn is_central(self) -> bool {
        self.0.is_zero() || self.0 == q(1, 2)
    }
}

/// A finite union of intervals and points inside `[0, 1/2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FoldedSet {
    ivs: Vec<Interval>,
}

impl FoldedSet {
    pub fn empty() -> FoldedSet {
        FoldedSet::default()
    }

    pub fn from_intervals(ivs: Vec<Interval>) -> FoldedSet {
        let window = Interval::closed(Q::zero(), q(1, 2));
        FoldedSet { ivs: union_all(ivs.into_iter().map(|iv| iv.intersect(&window)).collect()) }
    }

    pub fn point(f: FoldedAngle) -> FoldedSet {
        FoldedSet { ivs: vec![Interval::point(f.value())] }
    }

    pub fn points<I: IntoIterator<Item = FoldedAngle>>(fs: I) -> FoldedSet {
        FoldedSet::from_intervals(fs.into_iter().map(|f| Interval::point(f.value())).collect())
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.ivs
    }

    pub fn is_empty(&self) -> bool {
        self.ivs.is_empty()
    }

    pub fn contains(&self, x: Q) -> bool {
        self.ivs.iter().any(|iv| iv.contains(x))
    }

    pub fn union(&self, other: &FoldedSet) -> FoldedSet {
        let mut v = self.ivs.clone();
        v.extend_from_slice(&other.ivs);
        FoldedSet { ivs: union_all(v) }
    }

    pub fn measure(&self) -> Q {
        self.ivs.iter().map(|iv| iv.length()).fold(Q::zero(), |a, b| a + b)
    }
}

/// `min(u, 1 − u)`.
pub fn fold(u: Turn) -> FoldedAngle {
    let x = u.value();
    FoldedAngle(if x <= q(1, 2) { x } else { Q::one() - x })
}

/// The folded image of a set of turns.
pub fn fold_set(s: &CircleSet) -> FoldedSet {
    let half = q(1, 2);
    let mut v = Vec::new();
    for iv in s.intervals() {
        let low = iv.intersect(&Interval::closed(Q::zero(), half));
        if !low.is_empty() {
            v.push(low);
        }
        let high = iv.intersect(&Interval::new(half, Q::one(), true, false));
        if !high.is_empty() {
            v.push(Interval::new(Q::one() - high.hi, Q::one() - high.lo, high.hi_closed, high.lo_closed));
        }
    }
    FoldedSet::from_intervals(v)
}

/// The open interval of product angles, or `None` when either class is central.
pub fn product_angle_interval(f1: FoldedAngle, f2: FoldedAngle) -> Option<(Q, Q)> {
    if f1.is_central() || f2.is_central() {
        return None;
    }
    let (a, b) = (f1.value(), f2.value());
    let lo = if a > b { a - b } else { b - a };
    let s = a + b;
    let hi = if s < Q::one() - s { s } else { Q::one() - s };
    (lo < hi).then_some((lo, hi))
}

fn meets_open_window(iv: &Interval) -> bool {
    !(iv.is_point() && (iv.lo.is_zero() || iv.lo == q(1, 2)))
}

/// Union of product intervals over all pairs drawn from `F₁ × F₂`.
pub fn admissible_product_set(f1: &FoldedSet, f2: &FoldedSet) -> FoldedSet {
    let half = q(1, 2);
    let mut out = Vec::new();
    for a in f1.intervals().iter().filter(|iv| meets_open_window(iv)) {
        for b in f2.intervals().iter().filter(|iv| meets_open_window(iv)) {
            let gap = [Q::zero(), b.lo - a.hi, a.lo - b.hi].into_iter().max().unwrap();
            let sl = a.lo + b.lo;
            let sh = a.hi + b.hi;
            let top = if sl <= half && half <= sh {
                half
            } else if sh < half {
                sh
            } else {
                Q::one() - sl
            };
            if gap < top {
                out.push(Interval::open(gap, top));
            }
        }
    }
    FoldedSet { ivs: union_all(out) }
}

/// Arcs on `{v = level}` over `F ∪ (1 − F)`.
pub fn unfold_to_arcs(f: &FoldedSet, level: Turn) -> TorusSet {
    let mut ivs = Vec::new();
    for iv in f.intervals() {
        ivs.push(*iv);
        ivs.push(Interval::new(Q::one() - iv.hi, Q::one() - iv.lo, iv.hi_closed, iv.lo_closed));
    }
    TorusSet::horizontal(level, &CircleSet::from_intervals(ivs))
}
