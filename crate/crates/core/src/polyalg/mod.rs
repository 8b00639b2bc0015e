//! Polynomial algebra: sparse multivariate polynomials, their gcd, dense
//! univariate polynomials and rational functions in t.

mod gcd;
mod multipoly;
mod parse;
mod ratfun;
mod unipoly;

pub use gcd::{content, gcd2, multipoly_gcd, primitive_part};
pub use multipoly::{monomials_of_degree, Homogeneity, Monomial, MultiPoly};
pub use parse::{parse_poly, parse_scalar};
pub use ratfun::{ratfun_arith, RatOp, RationalFunction};
pub use unipoly::UniPoly;
