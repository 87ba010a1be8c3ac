//! Exact set algebra on the character torus.

use pillowcase::torus_sets::{character_lines, Arc, Slope, TorusLine, TorusSet, Turn};

fn main() -> anyhow::Result<()> {
    let a = character_lines(Slope::new(6, 5)?, 1);
    let h = TorusSet::from_arcs([
        Arc::horizontal(Turn::HALF, Turn::frac(1, 12), Turn::frac(5, 12), false, false),
        Arc::horizontal(Turn::HALF, Turn::frac(7, 12), Turn::frac(11, 12), false, false),
    ]);
    println!("A = {}", a.describe());
    println!("H = {}", h.describe());
    println!("A ∩ {{v = 1/2}} = {}", a.intersect(&TorusSet::from_line(TorusLine::horizontal(Turn::HALF))).describe());
    println!("closure points of H in A: {}", a.intersect(&TorusSet::from_points(h.arcs().iter().flat_map(|x| [x.start_point(), x.end_point()]))).describe());
    println!("jewel(H) == H: {}", h.jewel() == h);
    println!("H in basis [[1, 1], [0, 1]]: {}", h.change_basis([[1, 1], [0, 1]])?.describe());
    Ok(())
}
