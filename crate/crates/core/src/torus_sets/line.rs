use std::fmt;

use num_integer::Integer;

use super::mat2::{self, Mat2};
use super::turn::{qi, Point, Slope, Turn};

/// The rational line `{a·u + b·v ≡ c (mod 1)}` with primitive normal `(a, b)`.
///
/// Parameterized by `t ∈ [0, 1)` as `base + t·(−b, a)`, a bijection onto the line.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusLine {
    pub normal: Slope,
    pub offset: Turn,
}

impl fmt::Debug for TorusLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}u + {}v ≡ {}}}", self.normal.a, self.normal.b, self.offset)
    }
}

impl fmt::Display for TorusLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.x, -e.y)
    } else {
        (e.x, e.y)
    }
}

impl TorusLine {
    /// Line from any nonzero integer normal; the normal is reduced and sign-fixed.
    /// A non-primitive normal `g·n` is rejected by debug assertion; use [`lines_for`] instead.
    pub fn new(normal: Slope, offset: Turn) -> TorusLine {
        TorusLine { normal, offset }
    }

    /// `{a·u + b·v ≡ c}` for primitive `(a, b)` of either sign.
    pub fn from_coeffs(a: i64, b: i64, c: Turn) -> TorusLine {
        let (n, s) = Slope::canonical_with_sign(a, b);
        debug_assert_eq!(a.gcd(&b), 1);
        let c = if s > 0 { c } else { -c };
        TorusLine { normal: n, offset: c }
    }

    /// The horizontal line `{v = level}`.
    pub fn horizontal(level: Turn) -> TorusLine {
        TorusLine { normal: Slope { a: 0, b: 1 }, offset: level }
    }

    /// The vertical line `{u = level}`.
    pub fn vertical(level: Turn) -> TorusLine {
        TorusLine { normal: Slope { a: 1, b: 0 }, offset: level }
    }

    pub fn is_horizontal(&self) -> bool {
        self.normal.a == 0
    }

    pub fn direction(&self) -> (i64, i64) {
        (-self.normal.b, self.normal.a)
    }

    pub fn base(&self) -> Point {
        let (x, y) = ext_gcd(self.normal.a, self.normal.b);
        let c = self.offset.value();
        (Turn::new(c * qi(x)), Turn::new(c * qi(y)))
    }

    pub fn point_at(&self, t: Turn) -> Point {
        let (u0, v0) = self.base();
        let (du, dv) = self.direction();
        (
            Turn::new(u0.value() + t.value() * qi(du)),
            Turn::new(v0.value() + t.value() * qi(dv)),
        )
    }

    pub fn contains(&self, p: Point) -> bool {
        Turn::new(p.0.value() * qi(self.normal.a) + p.1.value() * qi(self.normal.b)) == self.offset
    }

    /// Parameter of a point on the line, or `None` if it is off the line.
    pub fn param_of(&self, p: Point) -> Option<Turn> {
        if !self.contains(p) {
            return None;
        }
        let (x, y) = ext_gcd(self.normal.a, self.normal.b);
        let (u0, v0) = self.base();
        let du = p.0.value() - u0.value();
        let dv = p.1.value() - v0.value();
        Some(Turn::new(qi(x) * dv - qi(y) * du))
    }

    /// Parameters on `self` of the points of `self ∩ other`; empty for parallel lines.
    pub fn meet_params(&self, other: &TorusLine) -> Vec<Turn> {
        let (a1, b1) = (self.normal.a, self.normal.b);
        let (a2, b2) = (other.normal.a, other.normal.b);
        let d = a1 * b2 - a2 * b1;
        if d == 0 {
            return Vec::new();
        }
        let (u0, v0) = self.base();
        let k0 = qi(a2) * u0.value() + qi(b2) * v0.value();
        let rhs = other.offset.value() - k0;
        let n = d.abs();
        let mut out: Vec<Turn> = (0..n).map(|k| Turn::new((rhs + qi(k)) / qi(d))).collect();
        out.sort();
        out
    }

    pub fn meet_points(&self, other: &TorusLine) -> Vec<Point> {
        self.meet_params(other).into_iter().map(|t| self.point_at(t)).collect()
    }

    /// Image under `p ↦ M·p + δ`; returns the new line with the parameter map `t ↦ shift + sign·t`.
    pub fn affine_image(&self, m: Mat2, delta: Point) -> (TorusLine, i64, Turn) {
        let minv = mat2::inverse(m).expect("affine_image requires a unimodular matrix");
        let mit = mat2::transpose(minv);
        let n2 = mat2::apply(mit, (self.normal.a, self.normal.b));
        let (canon, s) = Slope::canonical_with_sign(n2.0, n2.1);
        let shift_dot = qi(n2.0) * delta.0.value() + qi(n2.1) * delta.1.value();
        let offset = Turn::new(qi(s) * (self.offset.value() + shift_dot));
        let line = TorusLine { normal: canon, offset };
        let (bu, bv) = self.base();
        let img = (
            Turn::new(qi(m[0][0]) * bu.value() + qi(m[0][1]) * bv.value() + delta.0.value()),
            Turn::new(qi(m[1][0]) * bu.value() + qi(m[1][1]) * bv.value() + delta.1.value()),
        );
        let tau = line.param_of(img).expect("image of base point lies on image line");
        let md = mat2::apply(m, self.direction());
        let nd = line.direction();
        let sign = if md == nd {
            1
        } else {
            debug_assert_eq!(md, (-nd.0, -nd.1));
            -1
        };
        (line, sign, tau)
    }
}

/// The `g` primitive lines making up `{a·u + b·v ≡ c}` for `g = gcd(a, b)`; empty for `(0,0)` unless `c ≡ 0`.
pub fn lines_for(a: i64, b: i64, c: Turn) -> Vec<TorusLine> {
    let g = a.gcd(&b);
    if g == 0 {
        return Vec::new();
    }
    let (n, s) = Slope::canonical_with_sign(a, b);
    let c = if s > 0 { c } else { -c };
    (0..g).map(|k| TorusLine { normal: n, offset: Turn::new((c.value() + qi(k)) / qi(g)) }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus_sets::q;

    #[test]
    fn parameterization_roundtrip() {
        let l = TorusLine::from_coeffs(6, 5, Turn::frac(1, 3));
        for k in 0..12 {
            let t = Turn::frac(k, 12);
            let p = l.point_at(t);
            assert!(l.contains(p));
            assert_eq!(l.param_of(p), Some(t));
        }
    }

    #[test]
    fn meet_count_is_determinant() {
        let a = TorusLine::from_coeffs(3, 5, Turn::ZERO);
        let b = TorusLine::horizontal(Turn::ZERO);
        let pts = a.meet_points(&b);
        assert_eq!(pts.len(), 3);
        let us: Vec<Turn> = {
            let mut v: Vec<Turn> = pts.iter().map(|p| p.0).collect();
            v.sort();
            v
        };
        assert_eq!(us, vec![Turn::ZERO, Turn::frac(1, 3), Turn::frac(2, 3)]);
    }

    #[test]
    fn lines_for_splits_by_gcd() {
        let ls = lines_for(6, 10, Turn::ZERO);
        assert_eq!(ls.len(), 2);
        assert_eq!(ls[1].offset, Turn::new(q(1, 2)));
    }
}
