//! Exact geometry on the character torus `S¹ × S¹` with coordinates `(u, v)` in turns.

mod circle;
mod line;
pub mod mat2;
mod set;
mod sum;
mod turn;

pub use circle::{intersect_all, union_all, CircleArc, CircleSet, Interval};
pub use line::{lines_for, TorusLine};
pub use mat2::Mat2;
pub use set::{character_lines, Arc, TorusSet};
pub use sum::theta_sum;
pub use turn::{distance, fmt_point, fmt_q, q, qi, turn_normalize, Point, Slope, Turn, Q};

/// `(u, v) ↦ (−u, −v)`.
pub fn jewel(s: &TorusSet) -> TorusSet {
    s.jewel()
}

/// Translation by `delta`.
pub fn translate(s: &TorusSet, delta: Point) -> TorusSet {
    s.translate(delta)
}

/// Basis change; see [`TorusSet::change_basis`].
pub fn change_basis(s: &TorusSet, m: Mat2) -> crate::error::Result<TorusSet> {
    s.change_basis(m)
}

pub fn intersect(s1: &TorusSet, s2: &TorusSet) -> TorusSet {
    s1.intersect(s2)
}

pub fn measure_on_line(s: &TorusSet, l: &TorusLine) -> Q {
    s.measure_on_line(l)
}

pub fn witness_point(s: &TorusSet) -> Option<Point> {
    s.witness_point()
}

pub fn restrict_to_line(s: &TorusSet, l: &TorusLine) -> CircleSet {
    s.restrict_to_line(l)
}
