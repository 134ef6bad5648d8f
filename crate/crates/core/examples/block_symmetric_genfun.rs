//! The (q,t)-generating function of r-block diagonally symmetric tilings,
//! computed four independent ways.

use blocksym::exactalg::MPoly;
use blocksym::formulas::thm1_rhs;
use blocksym::paths::{det_polymatrix, lgv_matrix};
use blocksym::shapes::BlockProfile;
use blocksym::tilings::{block_symmetric_sum, enumerate_symmetric_hexagon, Weight, DEFAULT_TILING_LIMIT};

fn main() -> blocksym::Result<()> {
    let profile: BlockProfile = std::env::args().nth(1).as_deref().unwrap_or("1,0,2").parse()?;
    let (m, n) = (profile.total(), profile.n() as u32);
    println!("r = {profile}  (m = {m}, n = {n})");

    let product = thm1_rhs(&profile)?;
    let lgv = det_polymatrix(&lgv_matrix(&profile, m, n)?)?;
    let trapezoids = block_symmetric_sum(&profile, m, n, Weight::Qt, DEFAULT_TILING_LIMIT)?;
    let hexagon = enumerate_symmetric_hexagon(&profile, m, n, DEFAULT_TILING_LIMIT)?;

    let rows: [(&str, &MPoly); 4] = [
        ("product", &product),
        ("determinant", &lgv),
        ("trapezoid sum", &trapezoids),
        ("hexagon search", &hexagon.genfun),
    ];
    for (name, p) in rows {
        println!("{name:>15}: {p}");
    }
    assert!(rows.iter().all(|(_, p)| *p == &product));
    println!("{} symmetric tilings; all four agree", hexagon.count);
    Ok(())
}
