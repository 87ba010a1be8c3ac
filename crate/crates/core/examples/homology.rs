//! Presentations, Smith normal forms, and rational longitudes of pieces.

use pillowcase::homology::{h1_factors, longitude_of, smith_normal_form, PresentationData};
use pillowcase::pieces::{coefficients, seifert_disk_triple, seifert_mobius_triple};

fn main() -> anyhow::Result<()> {
    let trefoil = seifert_disk_triple(&coefficients(&[(2, 1), (3, 1)])?)?;
    println!("trefoil piece:\n{}", trefoil.presentation);
    println!("  H1 factors {:?}, {:?}", h1_factors(&trefoil.presentation), longitude_of(&trefoil.presentation, 0)?);
    let mobius = seifert_mobius_triple(&coefficients(&[(3, 1)])?)?;
    println!("twisted piece over a Moebius band with one fiber 3/1:\n{}", mobius.presentation);
    println!("  H1 factors {:?}, {:?}", h1_factors(&mobius.presentation), longitude_of(&mobius.presentation, 0)?);
    let lens = PresentationData::solid_torus(1, 0).fill(0, 7, 2);
    println!("solid torus filled along (7, 2): H1 factors {:?}", h1_factors(&lens));
    let snf = smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
    println!("SNF diagonal of a 3x3 example: {:?}", snf.diag);
    Ok(())
}
