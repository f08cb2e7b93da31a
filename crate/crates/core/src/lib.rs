//! Exact computation of partition-algebra characters and the matrix
//! functionals built from them.
//!
//! The crate is layered bottom-up:
//!
//! - [`scalars`]: rationals, polynomials and rational functions in `r`.
//! - [`diagrams`]: partition diagrams, enumeration and stacking.
//! - [`algebra`]: the partition algebra `P_n(r)` over rational functions.
//! - [`symchar`]: integer partitions and symmetric-group characters.
//! - [`pachar`]: irreducible characters of `P_n(r)` as cell-module traces.
//! - [`matfun`]: determinant, permanent, immanants and recombinants.
//! - [`verify`]: self-check suites used by the command-line front end.

pub mod algebra;
pub mod diagrams;
mod dsu;
pub mod error;
pub mod limits;
pub mod matfun;
pub mod pachar;
pub mod perm;
pub mod scalars;
pub mod setpart;
pub mod symchar;
pub mod verify;

pub use algebra::AlgebraElement;
pub use diagrams::{CompositionResult, PartitionDiagram, Vertex};
pub use error::{Error, Result};
pub use matfun::SquareMatrix;
pub use pachar::{HalfDiagram, ShapeIndex};
pub use perm::Permutation;
pub use scalars::{Poly, RatFunc, Rational};
pub use symchar::IntegerPartition;
