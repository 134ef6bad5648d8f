//! A signed sum over pairs of dent sets on both sides of a trapezoid, against
//! its factorized closed form.

use blocksym::formulas::thm2_rhs;
use blocksym::shapes::BlockProfile;
use blocksym::tilings::{signed_block_sum, DEFAULT_TILING_LIMIT};

fn main() -> blocksym::Result<()> {
    for (r, l) in [("1,1", 1u32), ("1,2", 1), ("2,1,1", 2), ("1,1,2", 2)] {
        let profile: BlockProfile = r.parse()?;
        let n = profile.n() as u32;
        let prime = BlockProfile::staircase(l as usize, n as usize)?;
        let m = profile.total() - l;
        let signed = signed_block_sum(&profile, &prime, m, n, l, DEFAULT_TILING_LIMIT)?;
        let closed = thm2_rhs(&profile, &prime, m, n, l, DEFAULT_TILING_LIMIT)?;
        assert_eq!(signed, closed);
        println!("r = {profile}, r' = {prime}: {signed}");
    }
    Ok(())
}
