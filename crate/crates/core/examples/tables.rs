//! Prints both m/l grids with flagged cells bracketed.

use pillowcase::lipa::generate_tables;

fn main() {
    for (i, t) in generate_tables().iter().enumerate() {
        println!("Table {} ({} flagged)", i + 1, t.flagged_count());
        println!("{}", t.render());
    }
}
