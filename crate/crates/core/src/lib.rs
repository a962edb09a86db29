//! Locality measures of stabilizer groups.
//!
//! The crate computes two locality measures of a stabilizer group `G`:
//!
//! - `δ(G)`, the minimum weight of a non-identity element, which lower-bounds
//!   the locality of any Hamiltonian whose ground space contains the code;
//! - `η(G)`, the least `ν` such that the elements of weight at most `ν`
//!   generate `G`.
//!
//! Both are computed from the GF(2) check matrix by subset rank arguments
//! ([`locality::delta`], [`locality::eta`]) and cross-checked against
//! brute-force enumeration oracles. Codes can be built from CSS data or from
//! cellulations of closed surfaces ([`surface`]). The [`spectral`] module
//! certifies the associated no-go bounds numerically by dense exact
//! diagonalization on small systems.

pub mod catalog;
pub mod dense;
pub mod error;
pub mod f2;
pub mod locality;
pub mod pauli;
pub mod spectral;
pub mod stabilizer;
pub mod surface;

pub use error::{Error, Result};
pub use f2::{BitMatrix, BitVector};
pub use pauli::{PauliOperator, PauliSum, Sign};
pub use stabilizer::{GroupExtension, Membership, StabilizerGroup};

/// Resource caps for the exponential-cost paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest qubit count for dense `2^n × 2^n` matrices.
    pub dense_qubits: usize,
    /// Largest generator count for full `2^m` group enumeration.
    pub enumeration_generators: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            dense_qubits: dense::DEFAULT_DENSE_CAP,
            enumeration_generators: stabilizer::DEFAULT_ENUMERATION_CAP,
        }
    }
}
