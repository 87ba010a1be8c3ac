use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use super::circle::{CircleArc, CircleSet};
use super::line::TorusLine;
use super::mat2::{self, Mat2};
use super::turn::{Point, Turn, Q};
use crate::error::Result;

/// A sub-arc of a line, traversed from `t_start` in the positive direction to `t_end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub line: TorusLine,
    pub t_start: Turn,
    pub t_end: Turn,
    pub start_closed: bool,
    pub end_closed: bool,
}

impl Arc {
    /// Parameter length in `(0, 1]`; a full-length arc is the line minus one point.
    pub fn length(&self) -> Q {
        let l = (self.t_end - self.t_start).value();
        if l.is_zero() {
            Q::from_integer(1)
        } else {
            l
        }
    }

    pub fn start_point(&self) -> Point {
        self.line.point_at(self.t_start)
    }

    pub fn end_point(&self) -> Point {
        self.line.point_at(self.t_end)
    }

    pub fn midpoint(&self) -> Point {
        self.line.point_at(Turn::new(self.t_start.value() + self.length() / Q::from_integer(2)))
    }

    fn circle_arc(&self) -> CircleArc {
        CircleArc { start: self.t_start, len: self.length(), start_closed: self.start_closed, end_closed: self.end_closed }
    }

    /// Arc on `{v = level}` covering `u` from `u_lo` up to `u_hi`.
    pub fn horizontal(level: Turn, u_lo: Turn, u_hi: Turn, lo_closed: bool, hi_closed: bool) -> Arc {
        // u = −t on horizontal lines, so the u-range reverses in t
        Arc { line: TorusLine::horizontal(level), t_start: -u_hi, t_end: -u_lo, start_closed: hi_closed, end_closed: lo_closed }
    }
}

/// A finite union of rational lines, arcs on rational lines, and points of the torus.
///
/// Stored per carrier line as a subset of its parameter circle, plus isolated points.
/// Normalized: no empty carriers, no degenerate components inside carriers,
/// and no isolated point lying in any carrier.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TorusSet {
    carriers: BTreeMap<TorusLine, CircleSet>,
    points: BTreeSet<Point>,
}

impl fmt::Debug for TorusSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl TorusSet {
    pub fn empty() -> TorusSet {
        TorusSet::default()
    }

    pub fn from_line(l: TorusLine) -> TorusSet {
        let mut s = TorusSet::empty();
        s.carriers.insert(l, CircleSet::full());
        s
    }

    pub fn from_lines<I: IntoIterator<Item = TorusLine>>(ls: I) -> TorusSet {
        let mut s = TorusSet::empty();
        for l in ls {
            s.carriers.insert(l, CircleSet::full());
        }
        s
    }

    pub fn from_arc(a: Arc) -> TorusSet {
        TorusSet::from_line_subset(a.line, CircleSet::from_arc(a.circle_arc()))
    }

    pub fn from_arcs<I: IntoIterator<Item = Arc>>(arcs: I) -> TorusSet {
        let mut s = TorusSet::empty();
        for a in arcs {
            s.insert_on_line(a.line, &CircleSet::from_arc(a.circle_arc()));
        }
        s.normalize();
        s
    }

    pub fn from_points<I: IntoIterator<Item = Point>>(ps: I) -> TorusSet {
        TorusSet { carriers: BTreeMap::new(), points: ps.into_iter().collect() }
    }

    /// The subset of `line` given in parameter form.
    pub fn from_line_subset(line: TorusLine, set: CircleSet) -> TorusSet {
        let mut s = TorusSet::empty();
        s.insert_on_line(line, &set);
        s.normalize();
        s
    }

    /// The subset of `{v = level}` whose `u`-coordinates form `u_set`.
    pub fn horizontal(level: Turn, u_set: &CircleSet) -> TorusSet {
        let line = TorusLine::horizontal(level);
        let (u0, _) = line.base();
        TorusSet::from_line_subset(line, u_set.map_affine(-1, u0))
    }

    /// The four points `{0, 1/2}²`.
    pub fn central_points() -> TorusSet {
        let h = [Turn::ZERO, Turn::HALF];
        TorusSet::from_points(h.iter().flat_map(|&u| h.iter().map(move |&v| (u, v))))
    }

    pub(crate) fn insert_on_line(&mut self, line: TorusLine, set: &CircleSet) {
        if set.is_empty() {
            return;
        }
        let e = self.carriers.entry(line).or_default();
        *e = e.union(set);
    }

    pub(crate) fn insert_point(&mut self, p: Point) {
        self.points.insert(p);
    }

    pub(crate) fn normalize(&mut self) {
        let pts = std::mem::take(&mut self.points);
        for p in &pts {
            for (line, set) in self.carriers.iter_mut() {
                if let Some(t) = line.param_of(*p) {
                    *set = set.union(&CircleSet::point(t));
                }
            }
        }
        // each carrier holds every point of the set on its line
        let mut closures: Vec<(TorusLine, Turn)> = Vec::new();
        for (l, set) in &self.carriers {
            for t in set.open_endpoints() {
                let p = l.point_at(t);
                let covered = self.carriers.iter().any(|(m, sm)| m != l && m.param_of(p).is_some_and(|tm| sm.contains(tm)));
                if covered {
                    closures.push((*l, t));
                }
            }
        }
        for (l, t) in closures {
            let set = self.carriers.get_mut(&l).expect("carrier present");
            *set = set.union(&CircleSet::point(t));
        }
        let mut leftover: BTreeSet<Point> = BTreeSet::new();
        for (line, set) in self.carriers.iter_mut() {
            for t in set.isolated_points() {
                leftover.insert(line.point_at(t));
            }
            *set = set.without_isolated_points();
        }
        self.carriers.retain(|_, s| !s.is_empty());
        for p in pts.into_iter().chain(leftover) {
            if !self.carriers_contain(p) {
                self.points.insert(p);
            }
        }
    }

    fn carriers_contain(&self, p: Point) -> bool {
        self.carriers.iter().any(|(l, s)| l.param_of(p).is_some_and(|t| s.contains(t)))
    }

    pub fn is_empty(&self) -> bool {
        self.carriers.is_empty() && self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.contains(&p) || self.carriers_contain(p)
    }

    /// Full line components.
    pub fn lines(&self) -> Vec<TorusLine> {
        self.carriers.iter().filter(|(_, s)| s.is_full()).map(|(l, _)| *l).collect()
    }

    /// Proper arc components, in canonical order.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut out = Vec::new();
        for (line, set) in &self.carriers {
            if set.is_full() {
                continue;
            }
            for c in set.components() {
                out.push(Arc {
                    line: *line,
                    t_start: c.start,
                    t_end: c.end(),
                    start_closed: c.start_closed,
                    end_closed: c.end_closed,
                });
            }
        }
        out
    }

    /// Isolated points.
    pub fn points(&self) -> Vec<Point> {
        self.points.iter().copied().collect()
    }

    /// Lines carrying a line or arc component.
    pub fn carrier_lines(&self) -> Vec<TorusLine> {
        self.carriers.keys().copied().collect()
    }

    pub(crate) fn carriers(&self) -> impl Iterator<Item = (&TorusLine, &CircleSet)> {
        self.carriers.iter()
    }

    pub fn union(&self, other: &TorusSet) -> TorusSet {
        let mut s = self.clone();
        for (l, set) in &other.carriers {
            s.insert_on_line(*l, set);
        }
        s.points.extend(other.points.iter().copied());
        s.normalize();
        s
    }

    pub fn union_all<'a, I: IntoIterator<Item = &'a TorusSet>>(sets: I) -> TorusSet {
        let mut s = TorusSet::empty();
        for t in sets {
            for (l, set) in &t.carriers {
                s.insert_on_line(*l, set);
            }
            s.points.extend(t.points.iter().copied());
        }
        s.normalize();
        s
    }

    /// Exact intersection.
    pub fn intersect(&self, other: &TorusSet) -> TorusSet {
        let mut s = TorusSet::empty();
        for (l1, c1) in &self.carriers {
            for (l2, c2) in &other.carriers {
                if l1 == l2 {
                    s.insert_on_line(*l1, &c1.intersect(c2));
                    continue;
                }
                for t in l1.meet_params(l2) {
                    if !c1.contains(t) {
                        continue;
                    }
                    let p = l1.point_at(t);
                    if l2.param_of(p).is_some_and(|t2| c2.contains(t2)) {
                        s.points.insert(p);
                    }
                }
            }
        }
        for p in &self.points {
            if other.contains(*p) {
                s.points.insert(*p);
            }
        }
        for p in &other.points {
            if self.contains(*p) {
                s.points.insert(*p);
            }
        }
        s.normalize();
        s
    }

    /// Whether the intersection is nonempty, without building it.
    pub fn meets(&self, other: &TorusSet) -> bool {
        self.first_common_point(other).is_some()
    }

    /// A deterministic point of `self ∩ other`, if any.
    pub fn first_common_point(&self, other: &TorusSet) -> Option<Point> {
        let i = self.intersect(other);
        i.witness_point()
    }

    /// `S ∩ L` in the parameter coordinate of `L`.
    pub fn restrict_to_line(&self, line: &TorusLine) -> CircleSet {
        let mut out = self.carriers.get(line).cloned().unwrap_or_default();
        let mut extra = Vec::new();
        for (l, c) in &self.carriers {
            if l == line {
                continue;
            }
            for t in line.meet_params(l) {
                let p = line.point_at(t);
                if l.param_of(p).is_some_and(|t2| c.contains(t2)) {
                    extra.push(t);
                }
            }
        }
        for p in &self.points {
            if let Some(t) = line.param_of(*p) {
                extra.push(t);
            }
        }
        if !extra.is_empty() {
            out = out.union(&CircleSet::points(extra));
        }
        out
    }

    /// `{u : (u, level) ∈ S}`.
    pub fn fiber_u(&self, level: Turn) -> CircleSet {
        let line = TorusLine::horizontal(level);
        let (u0, _) = line.base();
        self.restrict_to_line(&line).map_affine(-1, u0)
    }

    /// `S` minus the horizontal lines `{v = c}` for `c` in `levels`.
    pub fn without_levels(&self, levels: &[Turn]) -> TorusSet {
        let mut s = TorusSet::empty();
        for (l, c) in &self.carriers {
            if l.is_horizontal() && levels.contains(&l.offset) {
                continue;
            }
            let cuts: Vec<Turn> = levels.iter().flat_map(|&lv| l.meet_params(&TorusLine::horizontal(lv))).collect();
            s.insert_on_line(*l, &c.minus_points(&cuts));
        }
        for p in &self.points {
            if !levels.contains(&p.1) {
                s.points.insert(*p);
            }
        }
        s.normalize();
        s
    }

    /// `S` minus finitely many points.
    pub fn without_points(&self, pts: &[Point]) -> TorusSet {
        let mut s = TorusSet::empty();
        for (l, c) in &self.carriers {
            let cuts: Vec<Turn> = pts.iter().filter_map(|&p| l.param_of(p)).collect();
            s.insert_on_line(*l, &c.minus_points(&cuts));
        }
        s.points = self.points.iter().copied().filter(|p| !pts.contains(p)).collect();
        s.normalize();
        s
    }

    /// Parameter-length fraction of `line` covered by `S`.
    pub fn measure_on_line(&self, line: &TorusLine) -> Q {
        self.carriers.get(line).map(|c| c.measure()).unwrap_or_else(Q::zero)
    }

    /// A deterministic point of `S`: isolated points first, then arc midpoints, then line base points.
    pub fn witness_point(&self) -> Option<Point> {
        if let Some(p) = self.points.iter().next() {
            return Some(*p);
        }
        if let Some(a) = self.arcs().first() {
            return Some(a.midpoint());
        }
        self.lines().first().map(|l| l.base())
    }

    /// Image under `p ↦ M·p + δ` for unimodular `M`.
    pub fn affine_image(&self, m: Mat2, delta: Point) -> TorusSet {
        let mut s = TorusSet::empty();
        for (l, c) in &self.carriers {
            let (l2, sign, shift) = l.affine_image(m, delta);
            s.insert_on_line(l2, &c.map_affine(sign, shift));
        }
        for &(u, v) in &self.points {
            let nu = Turn::new(
                Q::from_integer(m[0][0]) * u.value() + Q::from_integer(m[0][1]) * v.value() + delta.0.value(),
            );
            let nv = Turn::new(
                Q::from_integer(m[1][0]) * u.value() + Q::from_integer(m[1][1]) * v.value() + delta.1.value(),
            );
            s.points.insert((nu, nv));
        }
        s.normalize();
        s
    }

    /// Image under `(u, v) ↦ (−u, −v)`.
    pub fn jewel(&self) -> TorusSet {
        self.affine_image([[-1, 0], [0, -1]], (Turn::ZERO, Turn::ZERO))
    }

    pub fn translate(&self, delta: Point) -> TorusSet {
        self.affine_image(mat2::IDENTITY, delta)
    }

    /// Coordinates after replacing the basis by `M` applied to it (columns of `M`
    /// are the new basis in old coordinates); character coordinates map by `Mᵀ`.
    pub fn change_basis(&self, m: Mat2) -> Result<TorusSet> {
        mat2::check_unimodular(m)?;
        Ok(self.affine_image(mat2::transpose(m), (Turn::ZERO, Turn::ZERO)))
    }

    /// Human-readable listing of the components.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for l in self.lines() {
            parts.push(format!("line {l}"));
        }
        for a in self.arcs() {
            let (p, q) = (a.start_point(), a.end_point());
            parts.push(format!(
                "arc on {} {}({}, {})–({}, {}){}",
                a.line,
                if a.start_closed { "[" } else { "(" },
                p.0,
                p.1,
                q.0,
                q.1,
                if a.end_closed { "]" } else { ")" }
            ));
        }
        for p in &self.points {
            parts.push(format!("point ({}, {})", p.0, p.1));
        }
        if parts.is_empty() {
            "∅".to_string()
        } else {
            parts.join("; ")
        }
    }
}

/// The `order` parallel lines `{order·(a·u + b·v) ≡ 0}`.
pub fn character_lines(slope: super::turn::Slope, order: u32) -> TorusSet {
    let o = order.max(1) as i64;
    TorusSet::from_lines((0..o).map(|k| TorusLine::new(slope, Turn::frac(k, o))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus_sets::turn::{q, Slope};

    fn h_arc(level: Turn, lo: Turn, hi: Turn) -> Arc {
        Arc::horizontal(level, lo, hi, false, false)
    }

    #[test]
    fn horizontal_arc_in_u_coordinates() {
        let a = TorusSet::from_arc(h_arc(Turn::HALF, Turn::frac(1, 12), Turn::frac(5, 12)));
        assert!(a.contains((Turn::frac(1, 4), Turn::HALF)));
        assert!(!a.contains((Turn::frac(1, 12), Turn::HALF)));
        assert!(!a.contains((Turn::frac(3, 4), Turn::HALF)));
        let f = a.fiber_u(Turn::HALF);
        assert_eq!(f.measure(), q(1, 3));
        assert!(f.contains(Turn::frac(1, 3)));
    }

    #[test]
    fn intersection_points() {
        let a = TorusSet::from_line(TorusLine::vertical(Turn::ZERO));
        let b = TorusSet::from_line(TorusLine::horizontal(Turn::ZERO));
        assert_eq!(a.intersect(&b).points(), vec![(Turn::ZERO, Turn::ZERO)]);
        let c = TorusSet::from_line(TorusLine::vertical(Turn::HALF));
        assert!(a.intersect(&c).is_empty());
        let d = TorusSet::from_line(TorusLine::from_coeffs(3, 5, Turn::ZERO));
        let i = d.intersect(&b);
        assert_eq!(i.points(), vec![(Turn::ZERO, Turn::ZERO), (Turn::frac(1, 3), Turn::ZERO), (Turn::frac(2, 3), Turn::ZERO)]);
    }

    #[test]
    fn point_absorbed_by_line() {
        let s = TorusSet::from_line(TorusLine::horizontal(Turn::ZERO)).union(&TorusSet::from_points([(Turn::frac(1, 3), Turn::ZERO)]));
        assert!(s.points().is_empty());
        assert_eq!(s.lines().len(), 1);
    }

    #[test]
    fn point_closes_arc() {
        let a = TorusSet::from_arc(Arc::horizontal(Turn::HALF, Turn::frac(1, 12), Turn::frac(5, 12), false, false));
        let b = a.union(&TorusSet::from_points([(Turn::frac(1, 12), Turn::HALF)]));
        assert!(b.points().is_empty());
        assert!(b.contains((Turn::frac(1, 12), Turn::HALF)));
        assert_eq!(b.arcs().len(), 1);
    }

    #[test]
    fn jewel_and_translate_examples() {
        let a = TorusSet::from_arc(h_arc(Turn::HALF, Turn::frac(1, 12), Turn::frac(5, 12)));
        let j = a.jewel();
        let expect = TorusSet::from_arc(h_arc(Turn::HALF, Turn::frac(7, 12), Turn::frac(11, 12)));
        assert_eq!(j, expect);
        assert_eq!(j.jewel(), a);
        let c = TorusSet::central_points();
        assert_eq!(c.jewel(), c);
        let u0 = TorusSet::from_line(TorusLine::vertical(Turn::ZERO));
        let t = u0.translate((Turn::HALF, Turn::ZERO));
        assert_eq!(t, TorusSet::from_line(TorusLine::vertical(Turn::HALF)));
        assert_eq!(t.translate((Turn::HALF, Turn::ZERO)), u0);
        let p = TorusSet::from_points([(Turn::frac(1, 4), Turn::frac(1, 4))]);
        assert_eq!(p.translate((Turn::HALF, Turn::ZERO)).points(), vec![(Turn::frac(3, 4), Turn::frac(1, 4))]);
    }

    #[test]
    fn change_basis_examples() {
        let u0 = TorusSet::from_line(TorusLine::vertical(Turn::ZERO));
        assert_eq!(u0.change_basis(mat2::IDENTITY).unwrap(), u0);
        assert_eq!(u0.change_basis([[0, 1], [1, 0]]).unwrap(), TorusSet::from_line(TorusLine::horizontal(Turn::ZERO)));
        assert!(u0.change_basis([[1, 1], [1, 1]]).is_err());
        assert!(u0.change_basis([[2, 0], [0, 1]]).is_err());
    }

    #[test]
    fn character_lines_examples() {
        assert_eq!(character_lines(Slope { a: 0, b: 1 }, 1), TorusSet::from_line(TorusLine::horizontal(Turn::ZERO)));
        let two = character_lines(Slope { a: 1, b: 0 }, 2);
        assert_eq!(two.lines(), vec![TorusLine::vertical(Turn::ZERO), TorusLine::vertical(Turn::HALF)]);
    }

    #[test]
    fn measure_and_witness() {
        let l = TorusLine::horizontal(Turn::HALF);
        let a = TorusSet::from_arcs([
            h_arc(Turn::HALF, Turn::frac(1, 12), Turn::frac(5, 12)),
            h_arc(Turn::HALF, Turn::frac(7, 12), Turn::frac(11, 12)),
        ]);
        assert_eq!(a.measure_on_line(&l), q(2, 3));
        assert_eq!(TorusSet::from_line(l).measure_on_line(&l), q(1, 1));
        let p = TorusSet::from_points([(Turn::frac(1, 4), Turn::ZERO)]);
        assert_eq!(p.witness_point(), Some((Turn::frac(1, 4), Turn::ZERO)));
        assert_eq!(TorusSet::empty().witness_point(), None);
    }
}
