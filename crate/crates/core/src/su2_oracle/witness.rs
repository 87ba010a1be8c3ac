//! Numerical certification of a verdict witness: solve both sides and glue.

use std::fmt;

use super::quat::Quat;
use super::solver::{
    commutator_score, eval_word, relator_residual, solve_representation, OracleConfig, RelationSystem, Representation,
    Requirement, Solution,
};
use crate::assembly::{SplitAnalysis, Witness, WitnessKind};
use crate::error::{Error, Result};
use crate::homology::PresentationData;
use crate::pieces::BoundaryTriple;
use crate::torus_sets::{fmt_point, mat2};

/// Glued residuals below this pass.
pub const GLUED_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub witness: Option<Witness>,
    pub side1: Option<Solution>,
    pub side2: Option<Solution>,
    /// Relator residual of the glued assignment.
    pub glued_residual: Option<f64>,
    pub glued_commutator: Option<f64>,
    pub pass: bool,
    pub reason: String,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        match &self.witness {
            None => return write!(f, "{verdict}: {}", self.reason),
            Some(w) => writeln!(f, "witness {} on torus {} ({})", fmt_point(w.point), w.torus, w.kind.name())?,
        }
        for (name, s) in [("side 1", &self.side1), ("side 2", &self.side2)] {
            match s {
                Some(Solution::Found(r)) => {
                    writeln!(f, "  {name}: found, residual {:.3e}, commutator score {:.3e}", r.residual, r.commutator_score)?
                }
                Some(Solution::NotFound { best_residual }) => {
                    writeln!(f, "  {name}: not found, best residual {best_residual:.3e}")?
                }
                None => writeln!(f, "  {name}: not run")?,
            }
        }
        if let (Some(r), Some(c)) = (self.glued_residual, self.glued_commutator) {
            writeln!(f, "  glued: residual {r:.3e}, commutator score {c:.3e}")?;
        }
        write!(f, "{verdict}: {}", self.reason)
    }
}

fn requirements(kind: WitnessKind) -> (Requirement, Requirement) {
    match kind {
        WitnessKind::HH => (Requirement::Irreducible, Requirement::Irreducible),
        WitnessKind::HA => (Requirement::Irreducible, Requirement::Abelian),
        WitnessKind::AH => (Requirement::Abelian, Requirement::Irreducible),
        WitnessKind::PP => (Requirement::NonCentralAbelian, Requirement::NonCentralAbelian),
    }
}

/// Unit quaternion conjugating side 2's boundary images onto side 1's.
fn alignment(p1: &PresentationData, r1: &[Quat], p2: &PresentationData, r2: &[Quat]) -> Quat {
    let b1 = &p1.ports[0];
    let b2 = &p2.ports[0];
    let words1 = [b1.x.clone(), b1.h.clone(), b1.x.concat(&b1.h)];
    let words2 = [b2.x.clone(), b2.h.clone(), b2.x.concat(&b2.h)];
    let (k, _) = words1
        .iter()
        .map(|w| eval_word(w, r1).imag_norm())
        .enumerate()
        .fold((0, -1.0), |acc, (i, n)| if n > acc.1 { (i, n) } else { acc });
    let (q1, q2) = (eval_word(&words1[k], r1), eval_word(&words2[k], r2));
    if q1.imag_norm() < 1e-6 || q2.imag_norm() < 1e-6 {
        return Quat::ONE;
    }
    let unit = |q: Quat| {
        let n = q.imag_norm();
        [q.x / n, q.y / n, q.z / n]
    };
    Quat::rotation_between(unit(q2), unit(q1))
}

fn conjugated(r: &[Quat], g: Quat) -> Vec<Quat> {
    r.iter().map(|&q| g * q * g.inv()).collect()
}

/// Reconstructs the two one-sided extension problems at the witness, solves both, and glues.
///
/// `side2` must already be expressed in the basis of `side1`.
pub fn verify_witness(
    side1: &BoundaryTriple,
    side2: &BoundaryTriple,
    witness: Option<&Witness>,
    cfg: &OracleConfig,
) -> Result<VerificationReport> {
    if side1.basis_label != side2.basis_label {
        return Err(Error::Provenance(format!(
            "sides are in different bases ({}, {}) and ({}, {})",
            side1.basis_label.0, side1.basis_label.1, side2.basis_label.0, side2.basis_label.1
        )));
    }
    if side1.presentation.ports.len() != 1 || side2.presentation.ports.len() != 1 {
        return Err(Error::Provenance("each side must have exactly one boundary port".into()));
    }
    let Some(w) = witness else {
        return Ok(VerificationReport {
            witness: None,
            side1: None,
            side2: None,
            glued_residual: None,
            glued_commutator: None,
            pass: true,
            reason: "no witness to verify".into(),
        });
    };
    let (req1, req2) = requirements(w.kind);
    let sys1 = RelationSystem::new(side1.presentation.clone(), 0, w.point)?;
    let sys2 = RelationSystem::new(side2.presentation.clone(), 0, w.point)?;
    let (s1, s2) = rayon::join(|| solve_representation(&sys1, req1, cfg), || solve_representation(&sys2, req2, cfg));
    let (s1, s2) = (s1?, s2?);
    let mut report = VerificationReport {
        witness: Some(w.clone()),
        side1: Some(s1.clone()),
        side2: Some(s2.clone()),
        glued_residual: None,
        glued_commutator: None,
        pass: false,
        reason: String::new(),
    };
    let (Some(r1), Some(r2)) = (s1.found(), s2.found()) else {
        report.reason = "a side has no representation with the required pattern at the witness".into();
        return Ok(report);
    };
    let (glued_res, glued_comm) = glue(side1, r1, side2, r2, w.kind);
    report.glued_residual = Some(glued_res);
    report.glued_commutator = Some(glued_comm);
    report.pass = glued_res < GLUED_TOLERANCE && glued_comm > cfg.irreducible_threshold;
    report.reason = if report.pass {
        "glued representation is non-abelian".into()
    } else if glued_res >= GLUED_TOLERANCE {
        format!("glued residual {glued_res:.3e} exceeds {GLUED_TOLERANCE:e}")
    } else {
        "glued representation is abelian".into()
    };
    Ok(report)
}

/// Residual and commutator score of the closed assignment built from both sides.
fn glue(side1: &BoundaryTriple, r1: &Representation, side2: &BoundaryTriple, r2: &Representation, kind: WitnessKind) -> (f64, f64) {
    let (p1, p2) = (&side1.presentation, &side2.presentation);
    let mut g = alignment(p1, &r1.assignment, p2, &r2.assignment);
    if kind == WitnessKind::PP {
        // Both boundaries are central: any conjugation of side 2 still glues; move its axis off side 1's.
        let axis = |r: &[Quat]| {
            r.iter().copied().max_by(|a, b| a.imag_norm().total_cmp(&b.imag_norm())).map_or([1.0, 0.0, 0.0], |q| {
                let n = q.imag_norm();
                [q.x / n, q.y / n, q.z / n]
            })
        };
        let a1 = axis(&r1.assignment);
        let a2 = axis(&r2.assignment);
        g = Quat::rotation_between(a2, super::quat::perpendicular(a1));
    }
    let mut assignment = r1.assignment.clone();
    assignment.extend(conjugated(&r2.assignment, g));
    let closed = PresentationData::glue(p1, 0, p2, 0, mat2::IDENTITY);
    (relator_residual(&closed, &assignment), commutator_score(&assignment))
}

/// [`verify_witness`] on an analyzed split.
pub fn verify_split(a: &SplitAnalysis, cfg: &OracleConfig) -> Result<VerificationReport> {
    verify_witness(&a.side1, &a.side2, a.verdict.witness.as_ref(), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::{parse_manifold, ManifoldDocument, PieceSpec};
    use crate::torus_sets::Turn;

    fn splice() -> SplitAnalysis {
        let d = ManifoldDocument::two_piece(
            PieceSpec::disk("a", &[(2, 1), (3, 1)]),
            PieceSpec::disk("b", &[(2, 1), (3, 1)]),
            [[1, -1], [-4, 5]],
        );
        parse_manifold(&d).unwrap().analyze(None).unwrap()
    }

    #[test]
    fn splice_witness_passes() {
        let a = splice();
        let r = verify_split(&a, &OracleConfig::default()).unwrap();
        assert!(r.pass, "{r}");
        assert!(r.glued_residual.unwrap() < GLUED_TOLERANCE);
    }

    #[test]
    fn corrupted_witness_fails() {
        let a = splice();
        let mut w = a.verdict.witness.clone().unwrap();
        w.point.0 = Turn::new(w.point.0.value() + crate::torus_sets::q(1, 100));
        let cfg = OracleConfig { restarts: 40, ..OracleConfig::default() };
        let r = verify_witness(&a.side1, &a.side2, Some(&w), &cfg).unwrap();
        assert!(!r.pass, "{r}");
    }

    #[test]
    fn no_witness_is_vacuous() {
        let d = ManifoldDocument::two_piece(PieceSpec::solid_torus("a", 1, 0), PieceSpec::solid_torus("b", 1, 0), [[0, 1], [1, 0]]);
        let a = parse_manifold(&d).unwrap().analyze(None).unwrap();
        assert!(verify_split(&a, &OracleConfig::default()).unwrap().pass);
    }
}
