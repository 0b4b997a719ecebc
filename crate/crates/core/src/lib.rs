//! Kochen-Specker ray systems from the binary and ternary Golay codes.
//!
//! The pipeline runs code -> rays -> bases -> certificate:
//!
//! * [`codes`] builds generator matrices over GF(2)/GF(3) and enumerates codewords.
//! * [`rays`] maps codewords to sign-canonical integer vectors and builds the
//!   orthogonality graph.
//! * [`bases`] produces basis systems by seed translation, clique enumeration,
//!   weight filtering and subspace restriction.
//! * [`kscheck`] decides colourability twice, by counting and by exact-cover
//!   search, and packages the result as a certificate.

pub mod bases;
mod bitset;
pub mod cli;
mod clique;
pub mod codes;
pub mod error;
pub mod kscheck;
pub mod rays;

pub use error::{Error, Result};
