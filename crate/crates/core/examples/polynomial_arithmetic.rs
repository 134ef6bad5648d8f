//! Exact polynomial arithmetic in q, t and x_1, x_2, ...: building, parsing,
//! printing, substituting and dividing.

use blocksym::exactalg::{q_binomial, q_factorial, MPoly, Monomial, QRatio};

fn main() -> blocksym::Result<()> {
    let a: MPoly = "q*t^2 + q*t + 1".parse()?;
    let b = MPoly::one() + MPoly::x(1) * MPoly::x(2);
    let product = &a * &b;
    println!("a         = {a}");
    println!("b         = {b}");
    println!("a * b     = {product}");
    println!("(a*b) / b = {}", product.exact_div(&b)?);
    println!("a at 1    = {}", a.eval_at_one());
    println!("q -> q^2  = {}", a.q_to_power(2));
    println!("t -> q    = {}", a.t_to_q());
    println!("json      = {}", a.to_json());

    println!();
    for n in 0..=4 {
        let row: Vec<String> = (0..=n).map(|k| q_binomial(n, k).to_string()).collect();
        println!("[{n} choose k]_q: {}", row.join("  |  "));
    }
    println!("[4]_q! = {}", q_factorial(4)?);

    // [6]! / ([3]! [3]!) built as a ratio of q-integers and reduced to a polynomial.
    let mut ratio = QRatio::new();
    ratio.qfact(6, 1).qfact(3, -1).qfact(3, -1);
    assert_eq!(ratio.to_mpoly()?, q_binomial(6, 3));
    println!("[6]!/([3]![3]!) = {}", ratio.to_mpoly()?);

    let shifted = MPoly::monomial(Monomial::qt(2, 1)) * q_binomial(3, 1);
    println!("q^2 t [3 choose 1]_q = {shifted}");
    Ok(())
}
