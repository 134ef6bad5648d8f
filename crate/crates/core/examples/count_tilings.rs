//! Counting lozenge tilings of hexagons and dented trapezoids.

use blocksym::formulas::macmahon_count;
use blocksym::regions::{HexagonRegion, Region, TrapezoidRegion};
use blocksym::shapes::DentSet;
use blocksym::tilings::{count_tilings, DEFAULT_TILING_LIMIT};

fn main() -> blocksym::Result<()> {
    println!("hexagon    tilings  product formula");
    for (a, b, c) in [(1, 1, 1), (2, 2, 2), (2, 3, 4), (3, 3, 3)] {
        let region: Region = HexagonRegion::new(a, b, c)?.into();
        let n = count_tilings(&region, DEFAULT_TILING_LIMIT)?;
        println!("H({a},{b},{c})  {n:>9}  {:>15}", macmahon_count(a, b, c)?);
    }

    println!();
    for (h, m, dents) in [(1, 1, vec![2]), (2, 2, vec![2, 4]), (3, 2, vec![1, 4]), (4, 3, vec![1, 3, 6])] {
        let label = format!("{dents:?}");
        let region: Region = TrapezoidRegion::with_right_dents(h, m, DentSet::new(dents)?)?.into();
        let n = count_tilings(&region, DEFAULT_TILING_LIMIT)?;
        println!("T({h},{m}; {label}) has {n} tilings");
    }

    // The visit budget is enforced while enumerating.
    let big: Region = HexagonRegion::new(4, 4, 4)?.into();
    match count_tilings(&big, 1_000) {
        Ok(n) => println!("H(4,4,4): {n}"),
        Err(e) => println!("H(4,4,4) with a budget of 1000: {e}"),
    }
    Ok(())
}
