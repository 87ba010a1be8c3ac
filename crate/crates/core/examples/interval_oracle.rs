//! Compares sampled SU(2) product traces with the exact product angle interval.

use pillowcase::su2_oracle::sample_product_traces;
use pillowcase::torus_sets::q;
use pillowcase::trace_intervals::{product_angle_interval, FoldedAngle};

fn trace(t: f64) -> f64 {
    2.0 * (std::f64::consts::TAU * t).cos()
}

fn main() -> anyhow::Result<()> {
    for (a, b) in [((1, 4), (1, 4)), ((1, 4), (1, 6)), ((1, 3), (1, 5)), ((2, 5), (3, 7)), ((1, 10), (1, 2))] {
        let (f1, f2) = (FoldedAngle::new(q(a.0, a.1)), FoldedAngle::new(q(b.0, b.1)));
        let exact = product_angle_interval(f1, f2);
        let sampled = sample_product_traces(f1, f2, 100_000, 7)?;
        let exact_traces = exact.map(|(lo, hi)| {
            let f = |x: pillowcase::torus_sets::Q| *x.numer() as f64 / *x.denom() as f64;
            (trace(f(hi)), trace(f(lo)))
        });
        println!("a = {}/{}, b = {}/{}: exact angles {exact:?}", a.0, a.1, b.0, b.1);
        println!("    exact traces {exact_traces:?}, sampled {sampled:?}");
    }
    Ok(())
}
