//! Exact arithmetic over quotients of Laurent polynomial rings.

mod parse;
mod poly;
mod ring;

pub use parse::parse_polynomial;
pub use poly::{Exponents, Polynomial, VariableTable};
pub use ring::{RingContext, RingElement};
