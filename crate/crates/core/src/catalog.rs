//! Small named stabilizer groups used as fixtures and examples.

use crate::f2::BitVector;
use crate::pauli::{PauliOperator, Sign};
use crate::stabilizer::StabilizerGroup;

fn ops(gens: &[&str]) -> Vec<PauliOperator> {
    gens.iter().map(|s| s.parse().expect("valid Pauli literal")).collect()
}

fn group(n: usize, gens: &[&str]) -> StabilizerGroup {
    StabilizerGroup::validate(n, &ops(gens)).expect("catalog groups are valid")
}

/// The worked check-matrix example `⟨X⊗I⊗Z, I⊗Z⊗X⟩`, as generators.
///
/// The two generators anticommute on qubit 3, so they do not generate a
/// stabilizer group; the check matrix is still a valid input to the
/// check-matrix level algorithms in [`crate::locality`].
#[must_use]
pub fn worked_example_generators() -> Vec<PauliOperator> {
    ops(&["+XIZ", "+IZX"])
}

/// `⟨X⊗I⊗Z, Z⊗I⊗X⟩`: the closest commuting variant of the worked example.
/// Same first generator and same rank-drop set `{1, 3}`; `δ = η = 2`, `q = 2`.
#[must_use]
pub fn example_commuting() -> StabilizerGroup {
    group(3, &["+XIZ", "+ZIX"])
}

/// `⟨Z⊗Z, X⊗X⟩`, stabilizing a Bell state.
#[must_use]
pub fn bell() -> StabilizerGroup {
    group(2, &["+ZZ", "+XX"])
}

/// `⟨Z_1Z_2, …, Z_{n-1}Z_n, X^{⊗n}⟩`.
///
/// # Panics
/// Panics if `n < 2`.
#[must_use]
pub fn ghz(n: usize) -> StabilizerGroup {
    assert!(n >= 2, "GHZ needs at least two qubits");
    let mut gens = Vec::with_capacity(n);
    for k in 0..n - 1 {
        let z = BitVector::from_indices(n, &[k, k + 1]).expect("in range");
        gens.push(PauliOperator::hermitian(BitVector::zeros(n), z, Sign::Plus));
    }
    let all: Vec<usize> = (0..n).collect();
    gens.push(PauliOperator::hermitian(
        BitVector::from_indices(n, &all).expect("in range"),
        BitVector::zeros(n),
        Sign::Plus,
    ));
    StabilizerGroup::validate(n, &gens).expect("GHZ generators are valid")
}

/// `⟨X_1, …, X_n⟩`, stabilizing `|+⟩^{⊗n}`.
#[must_use]
pub fn product_plus(n: usize) -> StabilizerGroup {
    let gens: Vec<PauliOperator> = (0..n)
        .map(|k| PauliOperator::single(n, k, crate::pauli::Letter::X))
        .collect();
    StabilizerGroup::validate(n, &gens).expect("single-qubit X generators are valid")
}

/// Parity checks of the `[7, 4, 3]` Hamming code.
pub const HAMMING_CHECKS: [&str; 3] = ["0001111", "0110011", "1010101"];

/// Steane code: the Hamming checks as both X and Z generators.
#[must_use]
pub fn steane() -> StabilizerGroup {
    css_from_checks(&HAMMING_CHECKS, &HAMMING_CHECKS)
}

/// The `[[5, 1, 3]]` code, cyclic shifts of `XZZXI`.
#[must_use]
pub fn five_qubit() -> StabilizerGroup {
    group(5, &["+XZZXI", "+IXZZX", "+XIXZZ", "+ZXIXZ"])
}

/// CSS group with X checks from `x_checks` and Z checks from `z_checks`,
/// all signs `+`.
///
/// # Panics
/// Panics on malformed rows or if the checks are not mutually orthogonal.
#[must_use]
pub fn css_from_checks(x_checks: &[&str], z_checks: &[&str]) -> StabilizerGroup {
    let n = x_checks.first().or(z_checks.first()).map_or(0, |r| r.len());
    let mut gens = Vec::new();
    for r in x_checks {
        let x = BitVector::parse(r).expect("bit row");
        gens.push(PauliOperator::hermitian(x, BitVector::zeros(n), Sign::Plus));
    }
    for r in z_checks {
        let z = BitVector::parse(r).expect("bit row");
        gens.push(PauliOperator::hermitian(BitVector::zeros(n), z, Sign::Plus));
    }
    StabilizerGroup::validate(n, &gens).expect("orthogonal CSS checks")
}
