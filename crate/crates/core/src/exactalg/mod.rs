//! Exact arithmetic: big-integer polynomials in `q`, `t`, `x_1, x_2, ...`
//! and q-analogues of integers, factorials and binomials.

mod monomial;
mod mpoly;
pub mod qcalc;
pub mod text;

pub use monomial::Monomial;
pub use mpoly::MPoly;
pub use qcalc::{q_binomial, q_factorial, q_int, QRatio};
