//! Random torus sets and a brute-force grid oracle for `theta_sum`.
#![allow(dead_code)]

use std::collections::BTreeSet;

use pillowcase::torus_sets::{lines_for, q, Arc, TorusSet, Turn};
use proptest::prelude::*;

/// Test heights lie in `(1/HEIGHTS)ℤ`; fibers at these heights have endpoints in `(1/U_GRID)ℤ`.
pub const HEIGHTS: i64 = 24;
pub const U_GRID: i64 = 48;
/// Witness grid: twice the fiber grid, so every nonempty open overlap of fiber intervals contains a node.
pub const WITNESS: i64 = 2 * U_GRID;

#[derive(Clone, Debug)]
pub enum Shape {
    Lines { a: i64, b: i64, c: (i64, i64) },
    Arc { a: i64, b: i64, c: (i64, i64), t0: (i64, i64), len: (i64, i64), closed: (bool, bool) },
    Point { u: (i64, i64), v: (i64, i64) },
}

pub fn frac() -> impl Strategy<Value = (i64, i64)> {
    (1..=4i64).prop_flat_map(|d| (0..d, Just(d)))
}

pub fn coeffs() -> impl Strategy<Value = (i64, i64)> {
    (-2..=2i64, -3..=3i64).prop_filter("nonzero", |&(a, b)| (a, b) != (0, 0))
}

pub fn shape() -> impl Strategy<Value = Shape> {
    prop_oneof![
        (coeffs(), frac()).prop_map(|((a, b), c)| Shape::Lines { a, b, c }),
        (coeffs(), frac(), frac(), (1..=4i64).prop_flat_map(|d| (1..d.max(2), Just(d.max(2)))), any::<(bool, bool)>())
            .prop_map(|((a, b), c, t0, len, closed)| Shape::Arc { a, b, c, t0, len, closed }),
        (frac(), frac()).prop_map(|(u, v)| Shape::Point { u, v }),
    ]
}

pub fn build(shapes: &[Shape]) -> TorusSet {
    let parts: Vec<TorusSet> = shapes
        .iter()
        .map(|s| match *s {
            Shape::Lines { a, b, c } => TorusSet::from_lines(lines_for(a, b, Turn::frac(c.0, c.1))),
            Shape::Arc { a, b, c, t0, len, closed } => {
                let line = lines_for(a, b, Turn::frac(c.0, c.1))[0];
                let start = Turn::frac(t0.0, t0.1);
                let arc = Arc {
                    line,
                    t_start: start,
                    t_end: Turn::new(start.value() + q(len.0, len.1)),
                    start_closed: closed.0,
                    end_closed: closed.1,
                };
                TorusSet::from_arcs([arc])
            }
            Shape::Point { u, v } => TorusSet::from_points([(Turn::frac(u.0, u.1), Turn::frac(v.0, v.1))]),
        })
        .collect();
    TorusSet::union_all(&parts)
}

pub fn set() -> impl Strategy<Value = TorusSet> {
    prop::collection::vec(shape(), 1..=3).prop_map(|v| build(&v))
}

/// Points `(i/U_GRID, j/HEIGHTS)` where `S₁ ⊕ S₂` holds according to brute force over witnesses.
pub fn grid_sum(s1: &TorusSet, s2: &TorusSet) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for j in 0..HEIGHTS {
        let v = Turn::frac(j, HEIGHTS);
        let f1: Vec<bool> = (0..WITNESS).map(|k| s1.contains((Turn::frac(k, WITNESS), v))).collect();
        let f2: Vec<bool> = (0..WITNESS).map(|k| s2.contains((Turn::frac(k, WITNESS), v))).collect();
        if !f1.iter().any(|&b| b) || !f2.iter().any(|&b| b) {
            continue;
        }
        for i in 0..U_GRID {
            let target = i * (WITNESS / U_GRID);
            if (0..WITNESS).any(|k| f1[k as usize] && f2[(target - k).rem_euclid(WITNESS) as usize]) {
                out.insert((i, j));
            }
        }
    }
    out
}

pub fn grid_members(s: &TorusSet) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for j in 0..HEIGHTS {
        for i in 0..U_GRID {
            if s.contains((Turn::frac(i, U_GRID), Turn::frac(j, HEIGHTS))) {
                out.insert((i, j));
            }
        }
    }
    out
}
