//! Combinatorics of GL_n weights with two walls in their arrow diagrams:
//! Jantzen sums, cap diagrams, tilting multiplicities and decomposition
//! numbers, and the matching walled Brauer algebra side.

pub mod caps;
pub mod characters;
pub mod diagrams;
pub mod error;
pub mod jantzen;
pub mod multiplicities;
pub mod scalar;
pub mod verify;
pub mod walled_brauer;
pub mod weights;

pub use error::{Error, Result};
pub use scalar::Coefficient;
pub use weights::{DominantWeight, Partition};

/// Characters with arbitrary-precision coefficients.
pub type Character = characters::CharacterCombination<num_bigint::BigInt>;
/// Polynomials in δ over the integers.
pub type DeltaPolynomial = walled_brauer::Polynomial<num_bigint::BigInt>;
/// Elements of the walled Brauer algebra over `Z[δ]`.
pub type WalledBrauerElement = walled_brauer::WalledElement<num_bigint::BigInt>;
