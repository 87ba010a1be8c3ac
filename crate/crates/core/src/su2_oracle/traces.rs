//! Monte Carlo sampling of `Tr(AB)` for SU(2) pairs with prescribed traces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::quat::Quat;
use crate::error::{Error, Result};
use crate::trace_intervals::FoldedAngle;

/// Pairs closer than this to commuting are discarded.
const COMMUTING_EPS: f64 = 1e-9;

fn random_axis(rng: &mut ChaCha8Rng) -> [f64; 3] {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

/// `(min, max)` of `Tr(AB)` over `n` random noncommuting pairs with `A`, `B` of angles `f1`, `f2`; `None` if all commute.
pub fn sample_product_traces(f1: FoldedAngle, f2: FoldedAngle, n: usize, seed: u64) -> Result<Option<(f64, f64)>> {
    if n < 1000 {
        return Err(Error::InvalidArgument(format!("need at least 1000 samples, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let to_f64 = |f: FoldedAngle| *f.value().numer() as f64 / *f.value().denom() as f64;
    let (a, b) = (to_f64(f1), to_f64(f2));
    let mut range: Option<(f64, f64)> = None;
    for _ in 0..n {
        let qa = Quat::from_turn(a, random_axis(&mut rng));
        let qb = Quat::from_turn(b, random_axis(&mut rng));
        if Quat::commutator(qa, qb).dist_to_one() < COMMUTING_EPS {
            continue;
        }
        let t = (qa * qb).trace();
        range = Some(match range {
            None => (t, t),
            Some((lo, hi)) => (lo.min(t), hi.max(t)),
        });
    }
    Ok(range)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus_sets::q;

    fn f(n: i64, d: i64) -> FoldedAngle {
        FoldedAngle::new(q(n, d))
    }

    #[test]
    fn quarter_quarter_fills_everything() {
        let (lo, hi) = sample_product_traces(f(1, 4), f(1, 4), 100_000, 1).unwrap().unwrap();
        assert!((lo + 2.0).abs() < 1e-3 && (hi - 2.0).abs() < 1e-3);
    }

    #[test]
    fn quarter_sixth() {
        let (lo, hi) = sample_product_traces(f(1, 4), f(1, 6), 100_000, 2).unwrap().unwrap();
        let s3 = 3f64.sqrt();
        assert!((lo + s3).abs() < 1e-3 && (hi - s3).abs() < 1e-3);
    }

    #[test]
    fn central_factor_commutes() {
        assert_eq!(sample_product_traces(f(0, 1), f(1, 5), 1000, 3).unwrap(), None);
        assert!(sample_product_traces(f(1, 5), f(1, 5), 10, 3).is_err());
    }
}
