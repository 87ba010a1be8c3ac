//! Verdicts for closed gluings and Dehn fillings.

use std::fmt;

use serde::Serialize;

use super::graph::ManifoldGraph;
use crate::error::Result;
use crate::homology::{closed_h1_order, h1_order, longitude_of, H1Order, PresentationData};
use crate::pieces::{solid_torus_triple, BoundaryTriple};
use crate::torus_sets::{fmt_point, mat2, Mat2, Point, Slope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Abelian,
    NotAbelian,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Abelian => "Abelian",
            Status::NotAbelian => "NotAbelian",
            Status::Inconclusive => "Inconclusive",
        };
        f.write_str(s)
    }
}

/// Which pair of sets met: side 1 first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WitnessKind {
    /// `H₁ ∩ H₂`
    HH,
    /// `H₁ ∩ A₂`
    HA,
    /// `A₁ ∩ H₂`
    AH,
    /// `P₁ ∩ P₂`
    PP,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::HH => "H1 ∩ H2",
            WitnessKind::HA => "H1 ∩ A2",
            WitnessKind::AH => "A1 ∩ H2",
            WitnessKind::PP => "P1 ∩ P2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: Point,
    pub kind: WitnessKind,
    /// Label of the gluing torus, in the `from` basis of that edge.
    pub torus: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    /// Compositions whose `H` is only a subset, from both sides.
    pub inexact: Vec<String>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status)?;
        if let Some(w) = &self.witness {
            write!(f, ", witness {} on torus {} ({})", fmt_point(w.point), w.torus, w.kind.name())?;
        }
        if self.status == Status::Inconclusive {
            write!(f, " (C2 recipe is one-sided)")?;
        }
        Ok(())
    }
}

/// Compares two triples expressed on the same torus in the same basis.
pub fn closed_verdict(t1: &BoundaryTriple, t2: &BoundaryTriple, torus: &str) -> Verdict {
    let checks = [
        (WitnessKind::HH, &t1.h, &t2.h),
        (WitnessKind::HA, &t1.h, &t2.a),
        (WitnessKind::AH, &t1.a, &t2.h),
        (WitnessKind::PP, &t1.p, &t2.p),
    ];
    let mut inexact = t1.inexact_sources.clone();
    inexact.extend(t2.inexact_sources.iter().cloned());
    for (kind, s1, s2) in checks {
        if let Some(point) = s1.first_common_point(s2) {
            let witness = Witness { point, kind, torus: torus.into() };
            return Verdict { status: Status::NotAbelian, witness: Some(witness), inexact };
        }
    }
    let status = if t1.h_exact && t2.h_exact { Status::Abelian } else { Status::Inconclusive };
    Verdict { status, witness: None, inexact }
}

/// `T(α)`: glues a solid torus whose meridian is `α` in the basis of `t`.
pub fn dehn_fill_verdict(t: &BoundaryTriple, alpha: Slope) -> Verdict {
    closed_verdict(t, &solid_torus_triple(alpha), "filling")
}

/// Everything computed for one split of a closed manifold.
#[derive(Clone, Debug)]
pub struct SplitAnalysis {
    pub edge: String,
    pub matrix: Mat2,
    /// Side of the `from` end.
    pub side1: BoundaryTriple,
    /// Side of the `to` end, already in the `from` basis.
    pub side2: BoundaryTriple,
    /// `|H₁|` by Smith normal form of the glued presentation.
    pub h1: H1Order,
    /// `|H₁|` by the longitude formula when both sides are rational homology solid tori.
    pub h1_formula: Option<H1Order>,
    pub verdict: Verdict,
    pub warnings: Vec<String>,
}

/// The closed manifold's presentation, glued along a transported split.
pub fn glued_presentation(side1: &BoundaryTriple, side2: &BoundaryTriple) -> PresentationData {
    PresentationData::glue(&side1.presentation, 0, &side2.presentation, 0, mat2::IDENTITY).simplified()
}

impl ManifoldGraph {
    /// Splits at `edge` (default: the first edge) and decides.
    pub fn analyze(&self, edge: Option<&str>) -> Result<SplitAnalysis> {
        let ei = match edge {
            Some(l) => self.edge_index(l)?,
            None => {
                if self.edges.is_empty() {
                    return Err(crate::Error::NoInteriorEdge);
                }
                self.edges.iter().position(|e| e.external).unwrap_or(0)
            }
        };
        self.analyze_edge(ei)
    }

    pub fn analyze_edge(&self, ei: usize) -> Result<SplitAnalysis> {
        if !self.is_closed() {
            return Err(crate::Error::OpenPorts(1));
        }
        let (t1, t2, m) = self.reduce_to_split(ei)?;
        let label = self.edges[ei].label.clone();
        let h1_formula = match (longitude_of(&t1.presentation, 0), longitude_of(&t2.presentation, 0)) {
            (Ok(l1), Ok(l2)) => Some(closed_h1_order(&l1, &l2, m)),
            _ => None,
        };
        let side2 = t2.change_basis(mat2::inverse(m)?, t1.basis_label.clone())?;
        let h1 = h1_order(&glued_presentation(&t1, &side2));
        let mut warnings = Vec::new();
        if !h1.is_qhs() {
            warnings.push("not a rational homology sphere".to_string());
        }
        if let Some(f) = h1_formula {
            if f != h1 {
                warnings.push(format!("longitude formula gives |H1| = {f}, presentation gives {h1}"));
            }
        }
        let verdict = closed_verdict(&t1, &side2, &label);
        Ok(SplitAnalysis { edge: label, matrix: m, side1: t1, side2, h1, h1_formula, verdict, warnings })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::document::{ManifoldDocument, PieceSpec};
    use crate::assembly::graph::parse_manifold;
    use crate::pieces::{coefficients, seifert_disk_triple};

    fn slope(a: i64, b: i64) -> Slope {
        Slope::new(a, b).unwrap()
    }

    #[test]
    fn two_solid_tori_sphere() {
        let d = ManifoldDocument::two_piece(PieceSpec::solid_torus("a", 1, 0), PieceSpec::solid_torus("b", 1, 0), [[0, 1], [1, 0]]);
        let a = parse_manifold(&d).unwrap().analyze(None).unwrap();
        assert_eq!(a.verdict.status, Status::Abelian);
        assert_eq!(a.h1, H1Order::Finite(1));
        assert_eq!(a.h1_formula, Some(H1Order::Finite(1)));
    }

    #[test]
    fn trefoil_splice() {
        let d = ManifoldDocument::two_piece(
            PieceSpec::disk("a", &[(2, 1), (3, 1)]),
            PieceSpec::disk("b", &[(2, 1), (3, 1)]),
            [[1, -1], [-4, 5]],
        );
        let a = parse_manifold(&d).unwrap().analyze(None).unwrap();
        assert_eq!(a.h1, H1Order::Finite(1));
        assert_eq!(a.h1_formula, Some(H1Order::Finite(1)));
        assert_eq!(a.verdict.status, Status::NotAbelian);
        assert_eq!(a.verdict.witness.as_ref().unwrap().torus, "e1");
    }

    #[test]
    fn fillings() {
        let t = seifert_disk_triple(&coefficients(&[(2, 1), (3, 1)]).unwrap()).unwrap();
        assert_eq!(dehn_fill_verdict(&t, slope(0, 1)).status, Status::Abelian);
        assert_eq!(dehn_fill_verdict(&t, slope(1, 0)).status, Status::Abelian);
        // {4u + v ≡ 0} meets {v = 1/2} at u = 1/8, inside the arc (1/12, 5/12)
        let v = dehn_fill_verdict(&t, slope(4, 1));
        assert_eq!(v.status, Status::NotAbelian);
        assert_eq!(v.witness.unwrap().kind, WitnessKind::HA);
        let st = solid_torus_triple(slope(3, 1));
        assert_eq!(dehn_fill_verdict(&st, slope(3, 1)).status, Status::Abelian);
    }
}
