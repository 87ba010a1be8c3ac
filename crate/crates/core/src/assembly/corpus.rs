//! Enumeration of closed manifolds made of two disk pieces.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;

use super::verdict::{closed_verdict, Status, Verdict};
use crate::error::Result;
use crate::homology::{closed_h1_order, longitude_of, H1Order, LongitudeData};
use crate::pieces::{coefficients, seifert_disk_triple, BoundaryTriple};
use crate::torus_sets::{mat2, Mat2};

/// Bounds of the enumeration.
#[derive(Clone, Copy, Debug)]
pub struct CorpusBounds {
    pub max_p: i64,
    pub max_q: i64,
    pub max_entry: i64,
    pub max_sigma: u64,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds { max_p: 5, max_q: 3, max_entry: 3, max_sigma: 5 }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub piece1: Vec<(i64, i64)>,
    pub piece2: Vec<(i64, i64)>,
    pub matrix: Mat2,
    pub sigma: u64,
    pub verdict: Verdict,
}

/// Exceptional fibers `p/q` with `2 ≤ p ≤ max_p`, `0 < |q| ≤ max_q`, coprime.
pub fn exceptional_fibers(max_p: i64, max_q: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in 2..=max_p {
        for q in -max_q..=max_q {
            if q != 0 && p.gcd(&q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

/// Unimodular matrices with entries bounded by `max_entry` in absolute value.
pub fn unimodular_matrices(max_entry: i64) -> Vec<Mat2> {
    let r = -max_entry..=max_entry;
    let mut out = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    if (a * d - b * c).abs() == 1 {
                        out.push([[a, b], [c, d]]);
                    }
                }
            }
        }
    }
    out
}

/// Two-fiber disk pieces: unordered fiber pairs.
pub fn two_fiber_disks(max_p: i64, max_q: i64) -> Vec<Vec<(i64, i64)>> {
    let f = exceptional_fibers(max_p, max_q);
    let mut out = Vec::new();
    for i in 0..f.len() {
        for j in i..f.len() {
            out.push(vec![f[i], f[j]]);
        }
    }
    out
}

struct Prepared {
    coeffs: Vec<(i64, i64)>,
    triple: BoundaryTriple,
    longitude: LongitudeData,
}

/// All ordered pairs of two-fiber disks and gluings with `1 ≤ σ ≤ max_sigma`, with verdicts.
pub fn two_disk_corpus(bounds: CorpusBounds) -> Result<Vec<CorpusEntry>> {
    let disks = two_fiber_disks(bounds.max_p, bounds.max_q);
    let prepared: Vec<Prepared> = disks
        .par_iter()
        .map(|c| {
            let triple = seifert_disk_triple(&coefficients(c)?)?;
            let longitude = longitude_of(&triple.presentation, 0)?;
            Ok(Prepared { coeffs: c.clone(), triple, longitude })
        })
        .collect::<Result<_>>()?;
    let mats = unimodular_matrices(bounds.max_entry);
    let pairs: Vec<(usize, usize)> =
        (0..prepared.len()).flat_map(|i| (0..prepared.len()).map(move |j| (i, j))).collect();
    let entries: Vec<Vec<CorpusEntry>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&prepared[i], &prepared[j]);
            let mut out = Vec::new();
            let mut transported: BTreeMap<Mat2, BoundaryTriple> = BTreeMap::new();
            for &m in &mats {
                let H1Order::Finite(sigma) = closed_h1_order(&a.longitude, &b.longitude, m) else { continue };
                if sigma > bounds.max_sigma {
                    continue;
                }
                let inv = mat2::inverse(m)?;
                let side2 = match transported.get(&m) {
                    Some(t) => t.clone(),
                    None => {
                        let t = b.triple.change_basis(inv, a.triple.basis_label.clone())?;
                        transported.insert(m, t.clone());
                        t
                    }
                };
                let verdict = closed_verdict(&a.triple, &side2, "e1");
                out.push(CorpusEntry { piece1: a.coeffs.clone(), piece2: b.coeffs.clone(), matrix: m, sigma, verdict });
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(entries.into_iter().flatten().collect())
}

/// Counts by status.
pub fn tally(entries: &[CorpusEntry]) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for s in [Status::Abelian, Status::NotAbelian, Status::Inconclusive] {
        m.insert(s.to_string(), entries.iter().filter(|e| e.verdict.status == s).count());
    }
    m
}
