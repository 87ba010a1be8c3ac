//! Symmetries of constructed boundary triples.

mod common;

use common::{disk, fiber, fibers, xi_lambda_basis};
use num_integer::Integer;
use pillowcase::homology::longitude_of;
use pillowcase::pieces::{c3_compose, coefficients, seifert_mobius_triple, BoundaryTriple};
use pillowcase::torus_sets::{character_lines, jewel, translate, Slope, TorusSet, Turn};
use proptest::prelude::*;

fn mobius(pairs: &[(i64, i64)]) -> BoundaryTriple {
    seifert_mobius_triple(&coefficients(pairs).unwrap()).unwrap()
}

fn on_central_levels(s: &TorusSet) -> bool {
    s.carrier_lines().iter().all(|l| l.is_horizontal() && l.offset.is_central())
        && s.points().iter().all(|p| p.1.is_central())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn disk_triples_are_jewel_symmetric(f in fibers(5, 3, 1..=3)) {
        let t = disk(&f);
        prop_assert_eq!(jewel(&t.a), t.a.clone());
        prop_assert_eq!(jewel(&t.h), t.h.clone());
        prop_assert_eq!(jewel(&t.p), t.p.clone());
    }

    #[test]
    fn mobius_triples_are_jewel_symmetric(f in fibers(5, 3, 0..=2)) {
        let t = mobius(&f);
        prop_assert_eq!(jewel(&t.a), t.a.clone());
        prop_assert_eq!(jewel(&t.h), t.h.clone());
        prop_assert_eq!(jewel(&t.p), t.p.clone());
    }

    #[test]
    fn odd_order_pieces_are_translation_symmetric(f in fibers(6, 3, 1..=3)) {
        let t = disk(&f);
        let l = longitude_of(&t.presentation, 0).unwrap();
        prop_assume!(l.order % 2 == 1);
        let m = xi_lambda_basis(l.longitude);
        let s = t.change_basis(m, ("xi".into(), "lambda".into())).unwrap();
        let shift = (Turn::HALF, Turn::ZERO);
        prop_assert_eq!(translate(&s.a, shift), s.a.clone());
        prop_assert_eq!(translate(&s.h, shift), s.h.clone());
    }

    #[test]
    fn c3_compose_is_symmetric(f1 in fibers(5, 3, 1..=2), f2 in fibers(5, 3, 1..=2)) {
        let (t1, t2) = (disk(&f1), disk(&f2));
        let x = c3_compose(&t1, &t2).unwrap();
        let y = c3_compose(&t2, &t1).unwrap();
        prop_assert_eq!(x.a, y.a);
        prop_assert_eq!(x.h, y.h);
        prop_assert_eq!(x.p, y.p);
        prop_assert_eq!(x.h_exact, y.h_exact);
    }

    #[test]
    fn two_fiber_h_is_on_central_levels(f1 in fiber(8, 5), f2 in fiber(8, 5)) {
        let t = disk(&[f1, f2]);
        prop_assert!(on_central_levels(&t.h), "{}", t.h.describe());
    }

    #[test]
    fn two_fiber_a_matches_closed_form_longitude(f1 in fiber(8, 5), f2 in fiber(8, 5)) {
        let ((p1, q1), (p2, q2)) = (f1, f2);
        let t = disk(&[f1, f2]);
        // L = p₁p₂·μ + (p₁q₂ + p₂q₁)·h; L/gcd(p₁, p₂) is the least null-homologous multiple
        let (la, lb) = (p1 * p2, p1 * q2 + p2 * q1);
        let lam = Slope::from_vector(la, lb);
        let o = (la.gcd(&lb) / p1.gcd(&p2)) as u32;
        prop_assert_eq!(t.a.clone(), character_lines(lam, o), "{} vs λ {:?}, o {}", t.a.describe(), lam, o);
    }
}
