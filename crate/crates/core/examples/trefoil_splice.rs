//! Splices two trefoil complements, decides, and certifies the witness numerically.

use pillowcase::assembly::{parse_manifold, ManifoldDocument, PieceSpec};
use pillowcase::su2_oracle::{verify_split, OracleConfig};

fn main() -> anyhow::Result<()> {
    let doc = ManifoldDocument::two_piece(
        PieceSpec::disk("left", &[(2, 1), (3, 1)]),
        PieceSpec::disk("right", &[(2, 1), (3, 1)]),
        [[1, -1], [-4, 5]],
    );
    println!("{}", doc.to_json());
    let analysis = parse_manifold(&doc)?.analyze(None)?;
    println!("|H1| = {} (longitude formula: {:?})", analysis.h1, analysis.h1_formula);
    println!("{}", analysis.verdict);
    println!("{}", verify_split(&analysis, &OracleConfig::default())?);
    Ok(())
}
