//! Weighted lattice paths and the determinant that counts families of them.

use blocksym::paths::{
    det_bareiss, det_cofactor, lgv_matrix, path_weight_between, path_weight_closed,
    path_weight_recursive, LatticePoint,
};
use blocksym::shapes::BlockProfile;

fn main() -> blocksym::Result<()> {
    for (a, b) in [(0, 0), (-1, 1), (-2, 1), (-2, 3), (-3, 2)] {
        let closed = path_weight_closed(a, b);
        assert_eq!(closed, path_weight_recursive(a, b));
        println!("({a},{b}) -> (0,0): {closed}");
    }
    let shifted = path_weight_between(LatticePoint::new(1, 4), LatticePoint::new(3, 3))?;
    println!("(1,4) -> (3,3): {shifted}");

    let profile: BlockProfile = "1,1".parse()?;
    let matrix = lgv_matrix(&profile, profile.total(), profile.n() as u32)?;
    for i in 0..matrix.dim() {
        let row: Vec<String> = (0..matrix.dim()).map(|j| matrix.get(i, j).to_string()).collect();
        println!("[ {} ]", row.join(" , "));
    }
    let det = det_bareiss(&matrix)?;
    assert_eq!(det, det_cofactor(&matrix));
    println!("det = {det}");
    Ok(())
}
