//! Writes the SVG of a piece's character sets to a file (default `trefoil.svg`).

use pillowcase::cli::svg::render_svg;
use pillowcase::pieces::{coefficients, seifert_disk_triple};

fn main() -> anyhow::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "trefoil.svg".into());
    let t = seifert_disk_triple(&coefficients(&[(2, 1), (3, 1)])?)?;
    std::fs::write(&out, render_svg(&t, "D2(2/1, 3/1)"))?;
    println!("wrote {out}: A = {}, H = {}", t.a.describe(), t.h.describe());
    Ok(())
}
