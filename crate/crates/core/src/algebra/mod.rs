//! Exact arithmetic, variables, multidegrees, monomials, polynomials, term
//! orders, coordinate changes, and parsing of generator expressions.

mod field;
pub mod linalg;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;
mod transform;

pub use field::PrimeField;
pub use monomial::{Monomial, Multidegree};
pub use order::{OrderKind, TermOrder};
pub use parse::{parse_polynomial, parse_t_monomials};
pub use poly::Polynomial;
pub use ring::{RingConfig, Variable, DEFAULT_PRIME};
pub use transform::BlockChange;
