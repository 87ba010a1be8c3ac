//! Boundary character triples `(A, H, P)` of the atomic pieces and the two composition recipes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{central_extension_set, PresentationData};
use crate::torus_sets::{
    character_lines, mat2, theta_sum, Arc, Mat2, Slope, TorusLine, TorusSet, Turn,
};
use crate::trace_intervals::{admissible_product_set, fold_set, unfold_to_arcs};

/// Restrictions of SU(2) characters of a piece with one boundary torus.
///
/// `a` holds abelian characters, `h` restrictions of nonabelian ones, `p` the central
/// restrictions of noncentral abelian ones. When `h_exact` is false, `h` is only a subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryTriple {
    pub a: TorusSet,
    pub h: TorusSet,
    pub p: TorusSet,
    pub h_exact: bool,
    pub basis_label: (String, String),
    /// One-port presentation whose port carries the declared basis.
    pub presentation: PresentationData,
    /// Compositions that made `h` inexact.
    pub inexact_sources: Vec<String>,
}

/// A Seifert invariant `p/q` of an exceptional or regular fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertCoefficient {
    pub p: i64,
    pub q: i64,
}

impl SeifertCoefficient {
    pub fn new(p: i64, q: i64) -> Result<SeifertCoefficient> {
        use num_integer::Integer;
        if p < 1 || p.gcd(&q) != 1 {
            return Err(Error::NonCoprime(p, q));
        }
        Ok(SeifertCoefficient { p, q })
    }
}

pub fn coefficients(pairs: &[(i64, i64)]) -> Result<Vec<SeifertCoefficient>> {
    pairs.iter().map(|&(p, q)| SeifertCoefficient::new(p, q)).collect()
}

impl BoundaryTriple {
    /// `T(Y, ∂Y) = A ∪ H`.
    pub fn total(&self) -> TorusSet {
        self.a.union(&self.h)
    }

    fn check_invariants(&self) {
        debug_assert!(self.a.arcs().is_empty() && self.a.points().is_empty(), "A must be a union of lines");
        debug_assert!(self.p.carrier_lines().is_empty());
        debug_assert!(self.p.points().iter().all(|p| p.0.is_central() && p.1.is_central()));
    }

    /// Re-expresses the triple in the basis given by the columns of `m` (in old coordinates).
    pub fn change_basis(&self, m: Mat2, label: (String, String)) -> Result<BoundaryTriple> {
        mat2::check_unimodular(m)?;
        Ok(BoundaryTriple {
            a: self.a.change_basis(m)?,
            h: self.h.change_basis(m)?,
            p: self.p.change_basis(m)?,
            h_exact: self.h_exact,
            basis_label: label,
            presentation: self.presentation.change_port_basis(0, m),
            inexact_sources: self.inexact_sources.clone(),
        })
    }

    fn expect_fiber_label(&self, what: &str) -> Result<()> {
        if self.basis_label.1 != "h" {
            return Err(Error::BasisMismatch(format!(
                "{what} needs the fiber as second basis class, got ({}, {})",
                self.basis_label.0, self.basis_label.1
            )));
        }
        Ok(())
    }
}

fn label(x: &str, h: &str) -> (String, String) {
    (x.to_string(), h.to_string())
}

/// Solid torus whose meridian is `p·x + q·h`.
pub fn solid_torus_triple(meridian: Slope) -> BoundaryTriple {
    let t = BoundaryTriple {
        a: character_lines(meridian, 1),
        h: TorusSet::empty(),
        p: TorusSet::empty(),
        h_exact: true,
        basis_label: label("x", "h"),
        presentation: PresentationData::solid_torus(meridian.a, meridian.b).simplified(),
        inexact_sources: Vec::new(),
    };
    t.check_invariants();
    t
}

fn level_fiber(s: &TorusSet, level: Turn) -> crate::trace_intervals::FoldedSet {
    fold_set(&s.fiber_u(level))
}

/// Glues two pieces into the first two ports of `C₃`; the result lives on `(x₁x₂, h)`.
pub fn c3_compose(t1: &BoundaryTriple, t2: &BoundaryTriple) -> Result<BoundaryTriple> {
    t1.expect_fiber_label("C3")?;
    t2.expect_fiber_label("C3")?;
    let a = theta_sum(&t1.a, &t2.a);
    let mut parts = vec![
        theta_sum(&t1.a, &t2.h),
        theta_sum(&t1.h, &t2.a),
        theta_sum(&t1.h, &t2.h),
        theta_sum(&t1.p, &t2.p),
    ];
    // a side with central boundary and a noncentral abelian extension conjugates freely
    // against a noncentral abelian boundary on the other side
    let central = TorusSet::central_points();
    parts.push(theta_sum(&t1.p, &t2.a.without_points(&central.points())));
    parts.push(theta_sum(&t1.a.without_points(&central.points()), &t2.p));
    let (s1, s2) = (t1.total(), t2.total());
    for eps in [Turn::ZERO, Turn::HALF] {
        let f = admissible_product_set(&level_fiber(&s1, eps), &level_fiber(&s2, eps));
        parts.push(unfold_to_arcs(&f, eps));
    }
    let h = TorusSet::union_all(&parts);
    let presentation = c3_presentation(&t1.presentation, &t2.presentation);
    let p = central_extension_set(&presentation, 0)?;
    let mut inexact_sources = t1.inexact_sources.clone();
    inexact_sources.extend(t2.inexact_sources.iter().cloned());
    let t = BoundaryTriple {
        a,
        h,
        p,
        h_exact: t1.h_exact && t2.h_exact,
        basis_label: label("x3", "h"),
        presentation,
        inexact_sources,
    };
    t.check_invariants();
    Ok(t)
}

/// `π₁` of `C₃` with the two inputs glued in; one port `(x₁x₂, h)`.
pub fn c3_presentation(p1: &PresentationData, p2: &PresentationData) -> PresentationData {
    let (u, _) = PresentationData::free_product(&[&PresentationData::c3(), p1, p2], &["", "a.", "b."]);
    u.identify_ports(0, 3, mat2::IDENTITY).identify_ports(0, 2, mat2::IDENTITY).simplified()
}

/// `π₁` of `C₂` with its first port glued to the input; one port `(x₂, h)`.
pub fn c2_presentation(p1: &PresentationData) -> PresentationData {
    let (u, _) = PresentationData::free_product(&[&PresentationData::c2(), p1], &["", "a."]);
    u.identify_ports(0, 2, mat2::IDENTITY).simplified()
}

/// The line `{v = level}` minus the two central points on it.
fn punctured_level(level: Turn) -> TorusSet {
    TorusSet::from_arcs([
        Arc::horizontal(level, Turn::ZERO, Turn::HALF, false, false),
        Arc::horizontal(level, Turn::HALF, Turn::ZERO, false, false),
    ])
}

/// Glues a piece into the first port of `C₂`; the result lives on `(x₂, h)`.
pub fn c2_compose(t1: &BoundaryTriple) -> Result<BoundaryTriple> {
    t1.expect_fiber_label("C2")?;
    let v0 = TorusSet::from_line(TorusLine::horizontal(Turn::ZERO));
    let v1 = TorusSet::from_line(TorusLine::horizontal(Turn::HALF));
    let a = if t1.a.meets(&v1) { v0.union(&v1) } else { v0.clone() };
    let total = t1.total();
    let levels = [Turn::ZERO, Turn::HALF];
    let mut parts = vec![total.without_levels(&levels).affine_image([[-1, 0], [0, 1]], (Turn::HALF, Turn::ZERO))];
    let central = TorusSet::central_points();
    for (eps, line) in [(Turn::ZERO, &v0), (Turn::HALF, &v1)] {
        if t1.h.meets(line) {
            parts.push(line.clone());
        } else {
            let off_center = total.intersect(line).without_points(&central.points());
            if !off_center.is_empty() {
                parts.push(punctured_level(eps));
            }
        }
    }
    let h = TorusSet::union_all(&parts);
    let presentation = c2_presentation(&t1.presentation);
    let p = central_extension_set(&presentation, 0)?;
    let mut inexact_sources = t1.inexact_sources.clone();
    inexact_sources.push("C2 composition".into());
    let t = BoundaryTriple {
        a,
        h,
        p,
        h_exact: false,
        basis_label: label("x2", "h"),
        presentation,
        inexact_sources,
    };
    t.check_invariants();
    Ok(t)
}

fn slope_of(c: SeifertCoefficient) -> Result<Slope> {
    Slope::new(c.p, c.q)
}

/// Disk with exceptional fibers `pᵢ/qᵢ`, in the basis `(μ, h)` of its boundary.
pub fn seifert_disk_triple(coeffs: &[SeifertCoefficient]) -> Result<BoundaryTriple> {
    let Some((first, rest)) = coeffs.split_first() else {
        return Err(Error::InvalidPiece("seifert_disk".into(), "needs at least one fiber".into()));
    };
    let mut t = solid_torus_triple(slope_of(*first)?);
    for c in rest {
        t = c3_compose(&t, &solid_torus_triple(slope_of(*c)?))?;
    }
    t.basis_label = label("mu", "h");
    Ok(t)
}

/// Coefficients of the disk fibration used for the twisted bundle over the Möbius band.
pub const MOBIUS_REFIBRATION: [(i64, i64); 2] = [(2, 1), (2, -1)];

/// From the disk basis `(μ, h_D)` to the Möbius basis `(x, h)`: `x = h_D`, `h = μ`.
pub const MOBIUS_REFIBRATION_BASIS: Mat2 = [[0, 1], [1, 0]];

/// Möbius band with exceptional fibers, twisted fibration, in the basis `(x, h)`.
pub fn seifert_mobius_triple(coeffs: &[SeifertCoefficient]) -> Result<BoundaryTriple> {
    if coeffs.is_empty() {
        let disk = seifert_disk_triple(&coefficients(&MOBIUS_REFIBRATION)?)?;
        let mut t = disk.change_basis(MOBIUS_REFIBRATION_BASIS, label("x", "h"))?;
        t.presentation = c2_presentation(&PresentationData::solid_torus(1, 0));
        return Ok(t);
    }
    let disk = seifert_disk_triple(coeffs)?;
    let mut t = c2_compose(&disk)?;
    t.basis_label = label("x", "h");
    Ok(t)
}
