//! Polynomials in x_1..x_27 and normal-ordered differential operators.

mod diffop;
mod latex;
mod monomial;
mod poly;

pub use diffop::DiffOp;
pub use latex::{parse_first_order, parse_polynomial};
pub use monomial::{Monomial, NVARS};
pub use poly::Polynomial;
