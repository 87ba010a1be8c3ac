//! Homological sets of pieces and orders of closed gluings.

mod common;

use common::{disk, disk_spec, fibers, glue, planar_spec, unimodular};
use pillowcase::assembly::{parse_manifold, ManifoldDocument, PieceKind, PieceSpec};
use pillowcase::homology::{abelian_set, central_points, longitude_of, restriction_image};
use pillowcase::pieces::{coefficients, seifert_mobius_triple, BoundaryTriple};
use pillowcase::torus_sets::TorusSet;
use proptest::prelude::*;

fn mobius(pairs: &[(i64, i64)]) -> BoundaryTriple {
    seifert_mobius_triple(&coefficients(pairs).unwrap()).unwrap()
}

fn mobius_spec(id: &str, pairs: &[(i64, i64)]) -> PieceSpec {
    PieceSpec {
        id: id.into(),
        kind: PieceKind::SeifertMobiusPlanar,
        coefficients: pairs.iter().map(|&(p, q)| [p, q]).collect(),
        ports: None,
    }
}

/// A planar piece with one capped boundary and one open boundary.
fn capped_planar(center: &[(i64, i64)], cap: &[(i64, i64)], m: [[i64; 2]; 2]) -> BoundaryTriple {
    let doc = ManifoldDocument {
        name: None,
        pieces: vec![planar_spec("c", center, 2), disk_spec("d", cap)],
        gluings: vec![glue(("c", 0), ("d", 0), m)],
    };
    parse_manifold(&doc).unwrap().boundary_triple().unwrap()
}

fn piece() -> impl Strategy<Value = BoundaryTriple> {
    prop_oneof![
        fibers(5, 3, 1..=3).prop_map(|f| disk(&f)),
        fibers(5, 3, 0..=2).prop_map(|f| mobius(&f)),
        (fibers(4, 2, 0..=1), fibers(4, 2, 1..=2), unimodular(2)).prop_map(|(c, d, m)| capped_planar(&c, &d, m)),
    ]
}

fn side_spec(id: &str) -> impl Strategy<Value = PieceSpec> {
    let id = id.to_string();
    let id2 = id.clone();
    prop_oneof![
        3 => fibers(7, 4, 1..=3).prop_map(move |f| disk_spec(&id, &f)),
        1 => fibers(7, 4, 0..=2).prop_map(move |f| mobius_spec(&id2, &f)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn constructive_a_matches_homology(t in piece()) {
        let via_longitude = abelian_set(&t.presentation, 0).unwrap();
        let via_restriction = restriction_image(&t.presentation, 0).unwrap();
        prop_assert_eq!(&t.a, &via_longitude, "{} vs {}", t.a.describe(), via_longitude.describe());
        prop_assert_eq!(&via_longitude, &via_restriction);
    }

    #[test]
    fn order_divides_torsion(t in piece()) {
        let l = longitude_of(&t.presentation, 0).unwrap();
        prop_assert_eq!(l.torsion % l.order, 0, "{:?}", l);
    }

    #[test]
    fn p_is_central_and_abelian(t in piece()) {
        let central = TorusSet::from_points(central_points());
        let bound = t.a.intersect(&central);
        prop_assert_eq!(t.p.union(&bound), bound);
    }

    #[test]
    fn longitude_formula_matches_smith_form(a in side_spec("a"), b in side_spec("b"), m in unimodular(3)) {
        let doc = ManifoldDocument::two_piece(a, b, m);
        let s = parse_manifold(&doc).unwrap().analyze(None).unwrap();
        prop_assert_eq!(s.h1_formula, Some(s.h1));
    }
}
