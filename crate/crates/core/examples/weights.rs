//! The weight μ of two-fiber disk pieces, and the law it obeys.

use std::collections::BTreeMap;

use pillowcase::lipa::{find_lipa_paths, weight_mu};
use pillowcase::pieces::{coefficients, seifert_disk_triple};
use pillowcase::torus_sets::{fmt_q, Q};

fn main() -> anyhow::Result<()> {
    for pair in [[(2, 1), (2, 1)], [(2, 1), (3, 1)], [(2, 1), (4, 1)], [(2, 1), (4, 3)], [(3, 1), (5, -2)]] {
        let t = seifert_disk_triple(&coefficients(&pair)?)?;
        let paths = find_lipa_paths(&t);
        println!("D2({}/{}, {}/{}): mu = {}, {} LIPA paths", pair[0].0, pair[0].1, pair[1].0, pair[1].1, fmt_q(weight_mu(&t)), paths.len());
        for p in paths.iter().take(2) {
            println!("    on {} from {:?} to {:?}", p.line, p.endpoints.0, p.endpoints.1);
        }
    }
    let mut minima: BTreeMap<(i64, i64), Q> = BTreeMap::new();
    for p1 in 2..=8i64 {
        for p2 in p1..=8i64 {
            for q1 in (-3..=3i64).filter(|q| num_integer::gcd(*q, p1) == 1) {
                for q2 in (-3..=3i64).filter(|q| num_integer::gcd(*q, p2) == 1) {
                    let mu = weight_mu(&seifert_disk_triple(&coefficients(&[(p1, q1), (p2, q2)])?)?);
                    let e = minima.entry((p1, p2)).or_insert(mu);
                    *e = (*e).min(mu);
                }
            }
        }
    }
    println!("smallest mu per (p1, p2):");
    for ((p1, p2), mu) in minima {
        println!("  ({p1}, {p2}): {}", fmt_q(mu));
    }
    Ok(())
}
