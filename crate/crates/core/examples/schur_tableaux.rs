//! Semistandard tableaux, Schur polynomials and the dual Pieri rule.

use blocksym::schur::{dual_pieri_expand, elementary_sym, kostka, principal_spec, schur, skew_schur, ssyt};
use blocksym::shapes::{Partition, SkewShape};

fn main() -> blocksym::Result<()> {
    let lambda = Partition::new(vec![2, 1])?;
    let shape = SkewShape::new(lambda.clone(), Partition::empty())?;
    let tableaux = ssyt(&shape, 3);
    println!("{} tableaux of shape (2,1) with entries <= 3:", tableaux.len());
    for t in &tableaux {
        println!("  {:?}  content {:?}", t.rows(), t.content());
    }
    println!("s_(2,1)(x1,x2,x3) = {}", schur(&lambda, 3));
    println!("principal: {}", principal_spec(&lambda, 3)?);
    println!("K((3,2),(1,1,1,1,1)) = {}", kostka(&Partition::new(vec![3, 2])?, &[1, 1, 1, 1, 1]));

    let outer = Partition::new(vec![3, 2, 1])?;
    let inner = Partition::new(vec![1])?;
    println!("s_(3,2,1)/(1) in 2 variables = {}", skew_schur(&outer, &inner, 2)?);

    let terms = dual_pieri_expand(&lambda, 2, 3);
    let names: Vec<String> = terms.iter().map(|p| format!("s{:?}", p.parts())).collect();
    println!("s_(2,1) e_2 = {}", names.join(" + "));
    let sum = terms.iter().map(|p| schur(p, 3)).sum::<blocksym::exactalg::MPoly>();
    assert_eq!(schur(&lambda, 3) * elementary_sym(2, 3), sum);
    Ok(())
}
