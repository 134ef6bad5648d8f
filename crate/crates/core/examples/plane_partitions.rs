//! Plane partitions in a box, symmetric ones, and the r-block symmetric
//! generating function.

use blocksym::formulas::{macmahon_count, macmahon_q, sym_pp_q, thm15_rhs};
use blocksym::planepartitions::{
    enumerate_pp, is_r_block_symmetric, pp_weights, r_block_pp_genfun, symmetric_half_genfun,
    volume_genfun, PpLimits,
};
use blocksym::shapes::BlockProfile;

fn main() -> blocksym::Result<()> {
    let limits = PpLimits::default();
    let all = enumerate_pp(2, 2, 2, &limits)?;
    println!("{} plane partitions fit in a 2x2x2 box (formula: {})", all.len(), macmahon_count(2, 2, 2)?);
    println!("volume genfun: {}", volume_genfun(2, 2, 2, &limits)?);
    assert_eq!(volume_genfun(2, 2, 2, &limits)?, macmahon_q(2, 2, 2)?);

    let symmetric = symmetric_half_genfun(3, 2, &limits)?;
    println!("symmetric 3x3, entries <= 2: {symmetric}");
    assert_eq!(symmetric, sym_pp_q(3, 2)?);

    let profile: BlockProfile = "1,1".parse()?;
    let genfun = r_block_pp_genfun(2, 2, &profile, &limits)?;
    println!("r = (1,1): {genfun}");
    assert_eq!(genfun, thm15_rhs(&profile)?);

    let example = all.iter().find(|pi| pi.is_symmetric() && pi.get(0, 1) == 1).unwrap();
    let w = pp_weights(example);
    println!("{:?}: total {}, diagonal {}, off-diagonal {}", example.entries(), w.total, w.diagonal, w.off_diagonal);
    println!("r = (1,1) block symmetric: {}", is_r_block_symmetric(example, &profile, 2)?);
    Ok(())
}
