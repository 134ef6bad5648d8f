//! The worked example with profile r = (2,0,2,1,3): its extremal dents, one
//! admissible dent set with its tilings, and a matching plane partition.

use blocksym::lattice::Orientation;
use blocksym::planepartitions::{is_r_block_symmetric, pp_weights, PlanePartition};
use blocksym::regions::{
    dent_distance, p_min, p_prime_max, right_dent_sets, Direction, Region, TrapezoidRegion,
};
use blocksym::schur::kostka;
use blocksym::shapes::{lambda_of_dents, BlockProfile, DentSet};
use blocksym::tilings::for_each_tiling;
use num_bigint::BigInt;

fn profile() -> BlockProfile {
    "2,0,2,1,3".parse().unwrap()
}

fn dents() -> DentSet {
    DentSet::new(vec![1, 3, 5, 7, 8, 10, 12, 13]).unwrap()
}

#[test]
fn extremal_dent_sets() {
    let r = profile();
    assert_eq!(p_min(&r), DentSet::new(vec![1, 2, 5, 6, 8, 10, 11, 12]).unwrap());
    assert_eq!(right_dent_sets(&r, 13).unwrap().len(), 72);
    assert!(right_dent_sets(&r, 13).unwrap().contains(&dents()));
    assert_eq!(dent_distance(&dents(), &p_min(&r), Direction::AboveMin).unwrap(), 4);
    for l in 1..=4usize {
        let rp = BlockProfile::new(vec![1; l]).unwrap();
        let even: Vec<u32> = (1..=l as u32).map(|k| 2 * k).collect();
        assert_eq!(p_prime_max(&rp), DentSet::new(even).unwrap());
    }
}

#[test]
fn shaded_lozenges_of_the_example_tiling() {
    let p = dents();
    let lambda = lambda_of_dents(&p, 8).unwrap();
    assert_eq!(lambda.parts(), &[5, 5, 4, 3, 3, 2, 1]);
    let content = [3u32, 3, 3, 2, 3, 2, 4, 3];
    assert_eq!(content.iter().sum::<u32>() as u64, lambda.size());

    let region: Region = TrapezoidRegion::with_right_dents(5, 8, p).unwrap().into();
    let mut matching = 0u64;
    let mut negatives_ok = true;
    let total = for_each_tiling(&region, u64::MAX, |lozenges| {
        let mut per_column = [0u32; 8];
        for l in lozenges.iter().filter(|l| l.orientation == Orientation::Negative) {
            per_column[l.column_from_right(8) as usize] += 1;
        }
        negatives_ok &= per_column.iter().sum::<u32>() as u64 == 23;
        if per_column == content {
            matching += 1;
        }
    })
    .unwrap();
    assert_eq!(total, 2_910_600);
    assert!(negatives_ok);
    assert!(matching > 0);
    assert_eq!(BigInt::from(matching), kostka(&lambda, &content));
}

#[test]
fn example_plane_partition() {
    let rows = vec![
        vec![5, 5, 4, 4, 4, 4, 4, 4],
        vec![5, 5, 4, 4, 4, 4, 4, 4],
        vec![4, 4, 4, 3, 3, 3, 3, 3],
        vec![4, 4, 3, 3, 3, 2, 2, 2],
        vec![4, 4, 3, 3, 3, 2, 1, 1],
        vec![4, 4, 3, 2, 2, 2, 1, 0],
        vec![4, 4, 3, 2, 1, 1, 1, 0],
        vec![4, 4, 3, 2, 1, 0, 0, 0],
    ];
    let pi = PlanePartition::new(rows, 5).unwrap();
    assert!(is_r_block_symmetric(&pi, &profile(), 5).unwrap());
    let w = pp_weights(&pi);
    assert_eq!((w.total, w.diagonal, w.off_diagonal), (187, 23, 164));
}
