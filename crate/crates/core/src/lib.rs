//! Exact combinatorics of gl-infinity crystals on nonnegative integer matrices.
//!
//! The library models four crystal alphabets and their words, the bicrystal
//! structure on finitely supported matrices, anti-normal column insertion and
//! its inverse, generalized Verma triples, Demazure subcrystals indexed by
//! Grassmannian elements with their flagged tableau models, characters with
//! Demazure operators and flagged Cauchy expansions, and the layer bijection
//! between matrices and plane partitions.
//!
//! Everything is exact: coefficients are big integers and no operation uses
//! floating point. Crystal operators return `None` for the formal null result,
//! which is distinct from the `Error` values raised on malformed input.

pub mod characters;
pub mod crystal;
pub mod demazure;
pub mod matrix;
pub mod pp;
pub mod rsk;
pub mod shapes;
pub mod tableau;
pub mod verma;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
