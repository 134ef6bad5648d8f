//! Admissible dent sets for a profile and the partitions they encode.

use blocksym::regions::{dent_distance, dent_windows, p_min, right_dent_sets, Direction};
use blocksym::shapes::{lambda_min_max, lambda_of_dents, BlockProfile};

fn main() -> blocksym::Result<()> {
    let profile: BlockProfile = std::env::args().nth(1).as_deref().unwrap_or("2,0,1").parse()?;
    let m = profile.total();
    let n = profile.n() as u32;
    println!("r = {profile}, windows {:?}", dent_windows(&profile));
    let (lo, hi) = lambda_min_max(&profile);
    println!("lambda ranges from {:?} to {:?}", lo.parts(), hi.parts());

    let bottom = p_min(&profile);
    for p in right_dent_sets(&profile, m + n)? {
        let lambda = lambda_of_dents(&p, m as usize)?;
        let d = dent_distance(&p, &bottom, Direction::AboveMin)?;
        println!("{:>20}  d = {d}  lambda = {:?}", format!("{:?}", p.labels()), lambda.parts());
    }
    Ok(())
}
