//! Expands planar and Moebius-band pieces into atomic pieces and re-analyzes the result.

use pillowcase::assembly::{parse_manifold, ManifoldDocument};

const DOC: &str = r#"{
  "pieces": [
    {"id": "P", "type": "seifert_planar", "coefficients": [[2, 1]], "ports": 2},
    {"id": "M", "type": "seifert_mobius_planar", "coefficients": [], "ports": 1},
    {"id": "d", "type": "seifert_disk", "coefficients": [[3, 1], [4, 1]]}
  ],
  "gluings": [
    {"from": ["P", 0], "to": ["M", 0], "matrix": [[0, 1], [1, 0]]},
    {"from": ["P", 1], "to": ["d", 0], "matrix": [[0, 1], [1, 0]]}
  ]
}"#;

fn main() -> anyhow::Result<()> {
    let graph = parse_manifold(&ManifoldDocument::from_json(DOC)?)?;
    for n in &graph.nodes {
        println!("{:<12} {:?} (from {})", n.id, n.atom, n.origin);
    }
    let expanded = graph.to_document();
    println!("{}", expanded.to_json());
    let again = parse_manifold(&expanded)?;
    for e in &again.edges {
        let a = again.analyze(Some(&e.label))?;
        println!("split {:<6} |H1| = {:<4} {}", e.label, a.h1.to_string(), a.verdict);
    }
    Ok(())
}
