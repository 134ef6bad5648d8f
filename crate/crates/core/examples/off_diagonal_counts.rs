//! Plain counts of r-block symmetric tilings and the alternating sign matrix
//! numbers hiding inside the profile r = (2, 2, ..., 2).

use blocksym::formulas::{asm_count, cor1_count};
use blocksym::shapes::BlockProfile;
use num_bigint::BigInt;
use num_traits::Pow;

fn main() -> blocksym::Result<()> {
    for r in ["1", "1,1", "1,1,1", "1,1,1,1", "2,0,2,1,3"] {
        let profile: BlockProfile = r.parse()?;
        println!("r = ({r}): {}", cor1_count(&profile)?);
    }

    println!();
    println!(" n  count / (2^2n 3^C(n,2))  ASM(n)");
    for n in 1..=6u32 {
        let profile = BlockProfile::new(vec![2; n as usize])?;
        let scale = BigInt::from(2u32).pow(2 * n) * BigInt::from(3u32).pow(n * (n - 1) / 2);
        let reduced = cor1_count(&profile)? / scale;
        println!("{n:>2}  {reduced:>22}  {:>6}", asm_count(n)?);
    }
    Ok(())
}
