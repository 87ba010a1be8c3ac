//! Random-restart Levenberg–Marquardt search for SU(2) representations with prescribed boundary characters.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::quat::Quat;
use crate::error::{Error, Result};
use crate::homology::{PresentationData, Word};
use crate::torus_sets::{Point, Turn};

/// Tunable numerical parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    pub restarts: usize,
    pub tol: f64,
    /// Commutator scores above this count as irreducible.
    pub irreducible_threshold: f64,
    pub max_iterations: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { restarts: 200, tol: 1e-8, irreducible_threshold: 1e-3, max_iterations: 400 }
    }
}

/// Which solutions count as found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Requirement {
    Any,
    /// Commutator score above the irreducibility threshold.
    Irreducible,
    /// All generators on the `i`-axis circle.
    Abelian,
    /// Abelian with some generator off `±1`.
    NonCentralAbelian,
}

/// A presentation with one boundary port and a target character at that port.
#[derive(Clone, Debug)]
pub struct RelationSystem {
    pub presentation: PresentationData,
    pub port: usize,
    /// `(u, v)`: `x ↦ e^{2πiu}`, `h ↦ e^{2πiv}`.
    pub target: Point,
}

impl RelationSystem {
    pub fn new(presentation: PresentationData, port: usize, target: Point) -> Result<RelationSystem> {
        if port >= presentation.ports.len() {
            return Err(Error::PortOutOfRange("system".into(), port));
        }
        Ok(RelationSystem { presentation, port, target })
    }

    /// `(word, target trace / 2, central)`; a central target is matched as a quaternion.
    fn targets(&self) -> [(Word, f64, bool); 3] {
        let p = &self.presentation.ports[self.port];
        let (u, v) = (self.target.0.to_f64(), self.target.1.to_f64());
        let cos = |t: f64| (std::f64::consts::TAU * t).cos();
        let central = |t: Turn| t.is_central();
        let uv = self.target.0 + self.target.1;
        [
            (p.x.clone(), cos(u), central(self.target.0)),
            (p.h.clone(), cos(v), central(self.target.1)),
            (p.x.concat(&p.h), cos(u + v), central(uv)),
        ]
    }

    fn seed(&self, req: Requirement, restart: usize) -> u64 {
        let mut h = DefaultHasher::new();
        self.presentation.to_string().hash(&mut h);
        self.port.hash(&mut h);
        self.target.0.to_string().hash(&mut h);
        self.target.1.to_string().hash(&mut h);
        req.hash(&mut h);
        restart.hash(&mut h);
        h.finish()
    }
}

/// A numerical representation: one quaternion per generator.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub assignment: Vec<Quat>,
    /// Euclidean norm of the residual vector.
    pub residual: f64,
    pub commutator_score: f64,
    pub restart: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Found(Representation),
    NotFound { best_residual: f64 },
}

impl Solution {
    pub fn found(&self) -> Option<&Representation> {
        match self {
            Solution::Found(r) => Some(r),
            Solution::NotFound { .. } => None,
        }
    }
}

/// Value of a word under an assignment.
pub fn eval_word(w: &Word, gens: &[Quat]) -> Quat {
    w.letters().iter().fold(Quat::ONE, |acc, &(g, e)| acc * gens[g].pow(e))
}

/// `max |[g, h] − 1|` over generator pairs.
pub fn commutator_score(gens: &[Quat]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            best = best.max(Quat::commutator(gens[i], gens[j]).dist_to_one());
        }
    }
    best
}

/// Euclidean norm of all `R − 1` over relators.
pub fn relator_residual(pd: &PresentationData, gens: &[Quat]) -> f64 {
    pd.relators.iter().map(|r| (eval_word(r, gens) - Quat::ONE).norm_sq()).sum::<f64>().sqrt()
}

/// Word value and its derivative along `g ↦ g·exp(ε·e_a)` for every generator `g` and axis `a` in `axes`.
fn word_jacobian(w: &Word, gens: &[Quat], axes: &[usize], out: &mut [Vec<Quat>]) -> Quat {
    let letters: Vec<(usize, bool)> =
        w.letters().iter().flat_map(|&(g, e)| std::iter::repeat_n((g, e > 0), e.unsigned_abs() as usize)).collect();
    let k = letters.len();
    let val = |(g, pos): (usize, bool)| if pos { gens[g] } else { gens[g].inv() };
    let mut pre = vec![Quat::ONE; k + 1];
    for j in 0..k {
        pre[j + 1] = pre[j] * val(letters[j]);
    }
    let mut suf = vec![Quat::ONE; k + 1];
    for j in (0..k).rev() {
        suf[j] = val(letters[j]) * suf[j + 1];
    }
    for (j, &(g, pos)) in letters.iter().enumerate() {
        for (slot, &a) in axes.iter().enumerate() {
            let e = Quat::AXES[a];
            let d = if pos { pre[j + 1] * e * suf[j + 1] } else { -(pre[j] * e * suf[j]) };
            let cur = &mut out[g][slot];
            *cur = Quat::new(cur.w + d.w, cur.x + d.x, cur.y + d.y, cur.z + d.z);
        }
    }
    pre[k]
}

struct Problem<'a> {
    pd: &'a PresentationData,
    targets: [(Word, f64, bool); 3],
    axes: &'a [usize],
}

impl Problem<'_> {
    fn n_vars(&self) -> usize {
        self.pd.generators.len() * self.axes.len()
    }

    fn n_rows(&self) -> usize {
        4 * self.pd.relators.len() + self.targets.iter().map(|t| if t.2 { 4 } else { 1 }).sum::<usize>()
    }

    fn residual(&self, gens: &[Quat]) -> DVector<f64> {
        let mut r = DVector::zeros(self.n_rows());
        for (i, rel) in self.pd.relators.iter().enumerate() {
            let d = eval_word(rel, gens) - Quat::ONE;
            r.rows_mut(4 * i, 4).copy_from_slice(&[d.w, d.x, d.y, d.z]);
        }
        let mut row = 4 * self.pd.relators.len();
        for (w, c, central) in &self.targets {
            let q = eval_word(w, gens);
            if *central {
                r.rows_mut(row, 4).copy_from_slice(&[q.w - c, q.x, q.y, q.z]);
                row += 4;
            } else {
                r[row] = 2.0 * (q.w - c);
                row += 1;
            }
        }
        r
    }

    fn jacobian(&self, gens: &[Quat]) -> DMatrix<f64> {
        let na = self.axes.len();
        let mut j = DMatrix::zeros(self.n_rows(), self.n_vars());
        let mut fill = |row: usize, w: &Word, comps: &dyn Fn(Quat) -> Vec<f64>| {
            let mut d = vec![vec![Quat::new(0.0, 0.0, 0.0, 0.0); na]; gens.len()];
            word_jacobian(w, gens, self.axes, &mut d);
            for (g, per) in d.iter().enumerate() {
                for (s, q) in per.iter().enumerate() {
                    for (c, v) in comps(*q).into_iter().enumerate() {
                        j[(row + c, g * na + s)] = v;
                    }
                }
            }
        };
        for (i, rel) in self.pd.relators.iter().enumerate() {
            fill(4 * i, rel, &|q| vec![q.w, q.x, q.y, q.z]);
        }
        let mut row = 4 * self.pd.relators.len();
        for (w, _, central) in &self.targets {
            if *central {
                fill(row, w, &|q| vec![q.w, q.x, q.y, q.z]);
                row += 4;
            } else {
                fill(row, w, &|q| vec![2.0 * q.w]);
                row += 1;
            }
        }
        j
    }

    fn step(&self, gens: &[Quat], delta: &DVector<f64>) -> Vec<Quat> {
        let na = self.axes.len();
        gens.iter()
            .enumerate()
            .map(|(g, &q)| {
                let mut v = [0.0; 3];
                for (s, &a) in self.axes.iter().enumerate() {
                    v[a] = delta[g * na + s];
                }
                (q * Quat::exp(v)).normalized()
            })
            .collect()
    }

    /// Damped Gauss–Newton descent from `start`; returns the final assignment and residual norm.
    fn descend(&self, mut gens: Vec<Quat>, cfg: &OracleConfig) -> (Vec<Quat>, f64) {
        let mut r = self.residual(&gens);
        let mut cost = r.norm_squared();
        let mut lambda = 1e-3;
        for _ in 0..cfg.max_iterations {
            if cost.sqrt() < cfg.tol * 1e-2 {
                break;
            }
            let j = self.jacobian(&gens);
            let jt = j.transpose();
            let jtj = &jt * &j;
            let g = &jt * &r;
            let mut improved = false;
            while lambda < 1e12 {
                let mut a = jtj.clone();
                for d in 0..a.nrows() {
                    a[(d, d)] += lambda * (1.0 + jtj[(d, d)]);
                }
                let Some(delta) = a.cholesky().map(|c| c.solve(&(-&g))) else {
                    lambda *= 10.0;
                    continue;
                };
                let trial = self.step(&gens, &delta);
                let rt = self.residual(&trial);
                let ct = rt.norm_squared();
                if ct < cost {
                    gens = trial;
                    r = rt;
                    cost = ct;
                    lambda = (lambda / 3.0).max(1e-12);
                    improved = true;
                    break;
                }
                lambda *= 4.0;
            }
            if !improved {
                break;
            }
        }
        (gens, cost.sqrt())
    }
}

fn random_start(n: usize, req: Requirement, rng: &mut ChaCha8Rng) -> Vec<Quat> {
    (0..n)
        .map(|_| match req {
            Requirement::Abelian | Requirement::NonCentralAbelian => Quat::from_turn(rng.gen::<f64>(), [1.0, 0.0, 0.0]),
            Requirement::Any | Requirement::Irreducible => loop {
                let q = Quat::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let n = q.norm();
                if n > 1e-3 && n <= 1.0 {
                    break q.scale(1.0 / n);
                }
            },
        })
        .collect()
}

fn accepts(req: Requirement, gens: &[Quat], score: f64, cfg: &OracleConfig) -> bool {
    match req {
        Requirement::Any | Requirement::Abelian => true,
        Requirement::Irreducible => score > cfg.irreducible_threshold,
        Requirement::NonCentralAbelian => gens.iter().any(|g| g.imag_norm() > cfg.irreducible_threshold),
    }
}

/// Searches for a representation of `sys` meeting `req`; restarts run in parallel with per-restart seeds.
pub fn solve_representation(sys: &RelationSystem, req: Requirement, cfg: &OracleConfig) -> Result<Solution> {
    if cfg.restarts == 0 || cfg.tol <= 0.0 {
        return Err(Error::InvalidArgument("need restarts ≥ 1 and tol > 0".into()));
    }
    let axes: &[usize] = match req {
        Requirement::Abelian | Requirement::NonCentralAbelian => &[0],
        Requirement::Any | Requirement::Irreducible => &[0, 1, 2],
    };
    let problem = Problem { pd: &sys.presentation, targets: sys.targets(), axes };
    let n = sys.presentation.generators.len();
    let chunk = rayon::current_num_threads().max(8);
    let mut best = f64::INFINITY;
    for lo in (0..cfg.restarts).step_by(chunk) {
        let hi = (lo + chunk).min(cfg.restarts);
        let results: Vec<(usize, Vec<Quat>, f64)> = (lo..hi)
            .into_par_iter()
            .map(|restart| {
                let mut rng = ChaCha8Rng::seed_from_u64(sys.seed(req, restart));
                let (gens, res) = problem.descend(random_start(n, req, &mut rng), cfg);
                (restart, gens, res)
            })
            .collect();
        for (restart, gens, residual) in results {
            let score = commutator_score(&gens);
            if residual < cfg.tol && accepts(req, &gens, score, cfg) {
                return Ok(Solution::Found(Representation { assignment: gens, residual, commutator_score: score, restart }));
            }
            if residual < cfg.tol {
                continue;
            }
            best = best.min(residual);
        }
    }
    Ok(Solution::NotFound { best_residual: best })
}

/// Convenience: the system for `port` of `pd` at `(u, v)`.
pub fn system_at(pd: &PresentationData, port: usize, u: Turn, v: Turn) -> Result<RelationSystem> {
    RelationSystem::new(pd.clone(), port, (u, v))
}
