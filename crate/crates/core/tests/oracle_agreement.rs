//! Symbolic membership against the numerical SU(2) oracle.

mod common;

use common::disk;
use pillowcase::pieces::BoundaryTriple;
use pillowcase::su2_oracle::{sample_product_traces, solve_representation, system_at, OracleConfig, Requirement};
use pillowcase::torus_sets::{q, Point, Turn};
use pillowcase::trace_intervals::{product_angle_interval, FoldedAngle};

const TARGETS_PER_PIECE: usize = 50;
const PIECES: [&[(i64, i64)]; 4] = [&[(2, 1), (3, 1)], &[(3, 1), (4, -1)], &[(2, 1), (5, 2)], &[(3, 1), (3, 1)]];

fn on_h(t: &BoundaryTriple, n: usize) -> Vec<Point> {
    let mut out = Vec::new();
    let arcs = t.h.arcs();
    let per = n.div_ceil(arcs.len().max(1));
    for arc in &arcs {
        for k in 1..=per {
            let s = arc.t_start.value() + arc.length() * q(k as i64, per as i64 + 1);
            out.push(arc.line.point_at(Turn::new(s)));
        }
    }
    out.truncate(n);
    out
}

fn on_a(t: &BoundaryTriple, n: usize) -> Vec<Point> {
    let lines = t.a.lines();
    let per = n.div_ceil(lines.len());
    let mut out: Vec<Point> = lines
        .iter()
        .flat_map(|l| (0..per).map(move |k| l.point_at(Turn::frac(2 * k as i64 + 1, 2 * per as i64 + 3))))
        .collect();
    out.truncate(n);
    out
}

fn off_both(t: &BoundaryTriple, n: usize) -> Vec<Point> {
    let mut out = Vec::new();
    for i in 0..23 {
        for j in 0..19 {
            let p = (Turn::frac(i, 23), Turn::frac(2 * j + 1, 38));
            if !t.a.contains(p) && !t.h.contains(p) {
                out.push(p);
            }
        }
    }
    let stride = (out.len() / n).max(1);
    out.into_iter().step_by(stride).take(n).collect()
}

#[test]
fn membership_agrees_with_oracle() {
    let cfg = OracleConfig::default();
    for f in PIECES {
        let t = disk(f);
        let pd = &t.presentation;
        let n_h = 20;
        let n_a = 15;
        let mut total = 0;
        for p in on_h(&t, n_h) {
            let got = solve_representation(&system_at(pd, 0, p.0, p.1).unwrap(), Requirement::Irreducible, &cfg).unwrap();
            assert!(got.found().is_some(), "{f:?}: false negative on H at {p:?}: {got:?}");
            total += 1;
        }
        for p in on_a(&t, n_a) {
            let got = solve_representation(&system_at(pd, 0, p.0, p.1).unwrap(), Requirement::Abelian, &cfg).unwrap();
            assert!(got.found().is_some(), "{f:?}: false negative on A at {p:?}: {got:?}");
            total += 1;
        }
        for p in off_both(&t, TARGETS_PER_PIECE - total) {
            let sys = system_at(pd, 0, p.0, p.1).unwrap();
            let irr = solve_representation(&sys, Requirement::Irreducible, &cfg).unwrap();
            assert!(irr.found().is_none(), "{f:?}: irreducible found off H at {p:?}");
            let ab = solve_representation(&sys, Requirement::Abelian, &cfg).unwrap();
            assert!(ab.found().is_none(), "{f:?}: abelian found off A at {p:?}");
            total += 1;
        }
        assert_eq!(total, TARGETS_PER_PIECE, "{f:?}");
    }
}

fn hausdorff_to_image(range: (f64, f64), lo: f64, hi: f64) -> f64 {
    let trace = |a: f64| 2.0 * (std::f64::consts::TAU * a).cos();
    let (t_lo, t_hi) = (trace(hi), trace(lo));
    (range.0 - t_lo).abs().max((range.1 - t_hi).abs())
}

#[test]
fn sampled_traces_converge_to_interval() {
    let pairs = [(1, 5, 1, 3), (1, 7, 2, 5), (1, 4, 1, 6), (3, 8, 1, 8)];
    for (i, &(a, b, c, d)) in pairs.iter().enumerate() {
        let (f1, f2) = (FoldedAngle::new(q(a, b)), FoldedAngle::new(q(c, d)));
        let (lo, hi) = product_angle_interval(f1, f2).unwrap();
        let (lo, hi) = (*lo.numer() as f64 / *lo.denom() as f64, *hi.numer() as f64 / *hi.denom() as f64);
        let coarse = sample_product_traces(f1, f2, 1_000, i as u64).unwrap().unwrap();
        let fine = sample_product_traces(f1, f2, 100_000, i as u64).unwrap().unwrap();
        let (ec, ef) = (hausdorff_to_image(coarse, lo, hi), hausdorff_to_image(fine, lo, hi));
        assert!(ec < 0.1, "N = 1e3 error {ec} for {a}/{b}, {c}/{d}");
        assert!(ef < 1e-3, "N = 1e5 error {ef} for {a}/{b}, {c}/{d}");
        assert!(ef <= ec, "error grew with N: {ec} then {ef}");
    }
}
