//! Exact scalars: rationals, polynomials in the indeterminate `r`, and reduced
//! rational functions in `r`.

mod poly;
mod ratfunc;
pub mod rational;

pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::Rational;
