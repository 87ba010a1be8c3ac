//! The fiberwise sum `{(u₁ + u₂, v)}` of two torus sets.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::One;

use super::circle::{CircleArc, CircleSet, Interval};
use super::line::TorusLine;
use super::set::TorusSet;
use super::turn::{qi, Slope, Turn, Q};

/// A local branch `u = e + s·v` over a real interval `J ⊆ [0, 1)` of heights.
#[derive(Clone, Copy, Debug)]
struct Branch {
    j: Interval,
    e: Q,
    s: Q,
}

fn floor_i(x: Q) -> i64 {
    x.floor().to_integer()
}

/// Cuts a non-horizontal carrier into branches whose heights stay in one unit window.
fn branches(line: &TorusLine, set: &CircleSet) -> Vec<Branch> {
    let a = line.normal.a;
    let b = line.normal.b;
    debug_assert!(a > 0);
    let (u0, v0) = line.base();
    let (u0, v0) = (u0.value(), v0.value());
    let s = -qi(b) / qi(a);
    let mut out = Vec::new();
    for iv in set.intervals() {
        let lo_v = v0 + qi(a) * iv.lo;
        let hi_v = v0 + qi(a) * iv.hi;
        let mut n = floor_i(lo_v);
        loop {
            let wn = qi(n);
            if wn > hi_v || (wn == hi_v && !iv.hi_closed && n > floor_i(lo_v)) {
                break;
            }
            let (lo, lo_c) = if lo_v >= wn { (lo_v, iv.lo_closed) } else { (wn, true) };
            let (hi, hi_c) = if hi_v < wn + Q::one() { (hi_v, iv.hi_closed) } else { (wn + Q::one(), false) };
            let j = Interval::new(lo - wn, hi - wn, lo_c, hi_c);
            if !j.is_empty() {
                // u = u0 − b·t with t = (v − v0)/a and v = v' + n
                let e = u0 + s * (wn - v0);
                out.push(Branch { j, e, s });
            }
            n += 1;
        }
    }
    out
}

fn add_branch_sum(out: &mut TorusSet, b1: &Branch, b2: &Branch) {
    let j = b1.j.intersect(&b2.j);
    if j.is_empty() {
        return;
    }
    let e = b1.e + b2.e;
    let s = b1.s + b2.s;
    if j.is_point() {
        out.insert_point((Turn::new(e + s * j.lo), Turn::new(j.lo)));
        return;
    }
    // slope s = −B/A; the points satisfy A·u + B·v ≡ A·e
    let den = *s.denom();
    let num = *s.numer();
    let (aa, bb) = (den, -num);
    debug_assert_eq!(aa.gcd(&bb), 1);
    let normal = Slope::canonical_with_sign(aa, bb).0;
    debug_assert_eq!((normal.a, normal.b), (aa, bb));
    let line = TorusLine::new(normal, Turn::new(qi(aa) * e));
    let start = (Turn::new(e + s * j.lo), Turn::new(j.lo));
    let t0 = line.param_of(start).expect("branch start lies on its line");
    let arc = CircleArc { start: t0, len: (j.hi - j.lo) / qi(aa), start_closed: j.lo_closed, end_closed: j.hi_closed };
    out.insert_on_line(line, &CircleSet::from_arc(arc));
}

/// `{(u₁ + u₂, v) : (u₁, v) ∈ S₁, (u₂, v) ∈ S₂}`.
pub fn theta_sum(s1: &TorusSet, s2: &TorusSet) -> TorusSet {
    let mut out = TorusSet::empty();
    if s1.is_empty() || s2.is_empty() {
        return out;
    }
    let mut heights: BTreeSet<Turn> = BTreeSet::new();
    for s in [s1, s2] {
        for (l, _) in s.carriers() {
            if l.is_horizontal() {
                heights.insert(l.offset);
            }
        }
        for p in s.points() {
            heights.insert(p.1);
        }
    }
    for &c in &heights {
        let f1 = s1.fiber_u(c);
        if f1.is_empty() {
            continue;
        }
        let f2 = s2.fiber_u(c);
        if f2.is_empty() {
            continue;
        }
        let f = f1.minkowski(&f2);
        let h = TorusSet::horizontal(c, &f);
        for (l, set) in h.carriers() {
            out.insert_on_line(*l, set);
        }
        for p in h.points() {
            out.insert_point(p);
        }
    }
    let collect = |s: &TorusSet| -> Vec<Branch> {
        s.carriers().filter(|(l, _)| !l.is_horizontal()).flat_map(|(l, c)| branches(l, c)).collect()
    };
    let g1 = collect(s1);
    let g2 = collect(s2);
    for b1 in &g1 {
        for b2 in &g2 {
            add_branch_sum(&mut out, b1, b2);
        }
    }
    out.normalize();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus_sets::set::Arc;

    fn line(a: i64, b: i64, c: Turn) -> TorusSet {
        TorusSet::from_line(TorusLine::from_coeffs(a, b, c))
    }

    #[test]
    fn vertical_plus_vertical() {
        let u0 = line(1, 0, Turn::ZERO);
        assert_eq!(theta_sum(&u0, &u0), u0);
    }

    #[test]
    fn horizontal_absorbs() {
        let v0 = line(0, 1, Turn::ZERO);
        assert_eq!(theta_sum(&v0, &v0), v0);
        let other = line(3, 1, Turn::ZERO);
        assert_eq!(theta_sum(&v0, &other), v0);
    }

    #[test]
    fn doubled_trefoil_line() {
        let a = line(6, 5, Turn::ZERO);
        let expect = TorusSet::from_lines([
            TorusLine::from_coeffs(3, 5, Turn::ZERO),
            TorusLine::from_coeffs(3, 5, Turn::HALF),
        ]);
        assert_eq!(theta_sum(&a, &a), expect);
    }

    #[test]
    fn two_solid_tori_give_trefoil_line() {
        let a = line(2, 1, Turn::ZERO);
        let b = line(3, 1, Turn::ZERO);
        assert_eq!(theta_sum(&a, &b), line(6, 5, Turn::ZERO));
    }

    #[test]
    fn arc_plus_point() {
        let arc = TorusSet::from_arc(Arc::horizontal(Turn::HALF, Turn::frac(1, 12), Turn::frac(5, 12), false, false));
        let p = TorusSet::from_points([(Turn::frac(1, 2), Turn::HALF)]);
        let s = theta_sum(&arc, &p);
        let expect = TorusSet::from_arc(Arc::horizontal(Turn::HALF, Turn::frac(7, 12), Turn::frac(11, 12), false, false));
        assert_eq!(s, expect);
    }

    #[test]
    fn empty_input() {
        assert!(theta_sum(&TorusSet::empty(), &line(1, 0, Turn::ZERO)).is_empty());
    }
}
