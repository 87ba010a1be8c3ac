//! Decides every closed gluing of two two-fiber disks with small bounds.

use std::time::Instant;

use pillowcase::assembly::corpus::{tally, two_disk_corpus, CorpusBounds};
use pillowcase::assembly::Status;

fn main() -> anyhow::Result<()> {
    let start = Instant::now();
    let entries = two_disk_corpus(CorpusBounds::default())?;
    println!("{} gluings with 1 ≤ |H1| ≤ 5 in {:.2?}", entries.len(), start.elapsed());
    for (status, n) in tally(&entries) {
        println!("  {status}: {n}");
    }
    for e in entries.iter().filter(|e| e.verdict.status != Status::NotAbelian).take(10) {
        println!("  exception: {:?} ∪ {:?} by {:?}: {}", e.piece1, e.piece2, e.matrix, e.verdict);
    }
    Ok(())
}
