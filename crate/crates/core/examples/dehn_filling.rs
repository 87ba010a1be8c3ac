//! Verdicts for Dehn fillings of the trefoil complement along small slopes.

use pillowcase::assembly::dehn_fill_verdict;
use pillowcase::homology::h1_order;
use pillowcase::pieces::{coefficients, seifert_disk_triple};
use pillowcase::torus_sets::Slope;

fn main() -> anyhow::Result<()> {
    let t = seifert_disk_triple(&coefficients(&[(2, 1), (3, 1)])?)?;
    for a in -3..=6i64 {
        for b in 0..=3i64 {
            let Ok(s) = Slope::new(a, b) else { continue };
            if s.a != a || s.b != b {
                continue;
            }
            let h1 = h1_order(&t.presentation.fill(0, a, b));
            println!("({a:>2}, {b}) |H1| = {:<9} {}", h1.to_string(), dehn_fill_verdict(&t, s));
        }
    }
    Ok(())
}
