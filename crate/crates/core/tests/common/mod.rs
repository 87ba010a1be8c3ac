//! Shared proptest strategies.
#![allow(dead_code)]

pub mod torus;

use num_integer::Integer;
use pillowcase::assembly::{GluingSpec, ManifoldDocument, PieceKind, PieceSpec};
use pillowcase::pieces::{coefficients, seifert_disk_triple, BoundaryTriple};
use pillowcase::torus_sets::{mat2, Mat2, Slope};
use proptest::prelude::*;

pub fn fiber(max_p: i64, max_q: i64) -> impl Strategy<Value = (i64, i64)> {
    (2..=max_p, -max_q..=max_q).prop_filter("coprime, q ≠ 0", |&(p, q)| q != 0 && p.gcd(&q) == 1)
}

pub fn fibers(max_p: i64, max_q: i64, n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec(fiber(max_p, max_q), n)
}

pub fn unimodular(max_entry: i64) -> impl Strategy<Value = Mat2> {
    let e = -max_entry..=max_entry;
    (e.clone(), e.clone(), e.clone(), e).prop_map(|(a, b, c, d)| [[a, b], [c, d]]).prop_filter("det ±1", |m| mat2::det(*m).abs() == 1)
}

pub fn disk(pairs: &[(i64, i64)]) -> BoundaryTriple {
    seifert_disk_triple(&coefficients(pairs).unwrap()).unwrap()
}

pub fn disk_spec(id: &str, pairs: &[(i64, i64)]) -> PieceSpec {
    PieceSpec::disk(id, pairs)
}

pub fn glue(from: (&str, usize), to: (&str, usize), m: Mat2) -> GluingSpec {
    GluingSpec { from: (from.0.into(), from.1), to: (to.0.into(), to.1), matrix: m, label: None }
}

pub fn planar_spec(id: &str, pairs: &[(i64, i64)], ports: usize) -> PieceSpec {
    PieceSpec {
        id: id.into(),
        kind: PieceKind::SeifertPlanar,
        coefficients: pairs.iter().map(|&(p, q)| [p, q]).collect(),
        ports: Some(ports),
    }
}

/// A closed tree: a planar piece with `leaves.len()` boundary tori, each capped by a disk piece.
pub fn star(center: &[(i64, i64)], leaves: &[Vec<(i64, i64)>], mats: &[Mat2]) -> ManifoldDocument {
    let mut pieces = vec![planar_spec("c", center, leaves.len())];
    let mut gluings = Vec::new();
    for (k, (l, m)) in leaves.iter().zip(mats).enumerate() {
        let id = format!("d{k}");
        pieces.push(disk_spec(&id, l));
        gluings.push(glue(("c", k), (&id, 0), *m));
    }
    ManifoldDocument { name: None, pieces, gluings }
}

/// Bezout partner `ξ` with `Δ(ξ, λ) = 1`, as the matrix with columns `(ξ, λ)`.
pub fn xi_lambda_basis(lam: Slope) -> [[i64; 2]; 2] {
    let e = lam.a.extended_gcd(&lam.b);
    assert_eq!(e.gcd, 1);
    // a·x + b·y = 1 with ξ = (−y, x)
    let (c, d) = (-e.y, e.x);
    [[c, lam.a], [d, lam.b]]
}
