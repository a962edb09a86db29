use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::f2::{BitMatrix, BitVector, EchelonBasis};
use crate::pauli::{PauliOperator, Sign};

use super::StabilizerGroup;

fn random_bits(rng: &mut ChaCha8Rng, n: usize, density: f64) -> BitVector {
    BitVector::from_bools(&(0..n).map(|_| rng.random_bool(density)).collect::<Vec<_>>())
}

fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.random_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// A seeded random stabilizer group with `m ≤ n` independent generators.
///
/// Generators are drawn with a per-group density so that low- and
/// high-weight groups both occur; signs are uniform.
///
/// # Panics
/// Panics if `m > n`.
#[must_use]
pub fn random_stabilizer_group(n: usize, m: usize, seed: u64) -> StabilizerGroup {
    assert!(m <= n, "at most n independent commuting generators exist");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = rng.random_range(0.15..0.6);
    let mut gens: Vec<PauliOperator> = Vec::with_capacity(m);
    let mut basis = EchelonBasis::new(2 * n, m);
    while gens.len() < m {
        let x = random_bits(&mut rng, n, density);
        let z = random_bits(&mut rng, n, density);
        let cand = PauliOperator::hermitian(x, z, random_sign(&mut rng));
        if cand.is_identity_pattern() || !gens.iter().all(|g| g.commutes(&cand).expect("same size")) {
            continue;
        }
        if basis.solve(&cand.check_row()).is_some() {
            continue;
        }
        basis.insert(&cand.check_row());
        gens.push(cand);
    }
    StabilizerGroup::validate(n, &gens).expect("independent commuting generators")
}

/// A seeded random XZ-split group with `mx` pure-X and `mz` pure-Z
/// generators, `mx + mz ≤ n`.
///
/// # Panics
/// Panics if `mx + mz > n`.
#[must_use]
pub fn random_xz_split_group(n: usize, mx: usize, mz: usize, seed: u64) -> StabilizerGroup {
    assert!(mx + mz <= n, "too many generators for {n} qubits");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = rng.random_range(0.2..0.6);

    let mut z_rows: Vec<BitVector> = Vec::new();
    let mut zb = EchelonBasis::new(n, mz);
    while z_rows.len() < mz {
        let v = random_bits(&mut rng, n, density);
        if !v.is_zero() && !zb.contains(&v) {
            zb.insert(&v);
            z_rows.push(v);
        }
    }
    // X rows must be orthogonal to every Z row: draw from the null space of H_Z
    let hz = BitMatrix::from_rows(z_rows.clone(), n).expect("rows of length n");
    let kernel = hz.transpose().left_null_basis();
    let mut x_rows: Vec<BitVector> = Vec::new();
    let mut xb = EchelonBasis::new(n, mx);
    while x_rows.len() < mx {
        let mut v = BitVector::zeros(n);
        for row in kernel.rows() {
            if rng.random_bool(density.max(0.3)) {
                v.xor_assign(row);
            }
        }
        if !v.is_zero() && !xb.contains(&v) {
            xb.insert(&v);
            x_rows.push(v);
        }
    }

    let mut gens = Vec::with_capacity(mx + mz);
    for x in x_rows {
        gens.push(PauliOperator::hermitian(x, BitVector::zeros(n), random_sign(&mut rng)));
    }
    for z in z_rows {
        gens.push(PauliOperator::hermitian(BitVector::zeros(n), z, random_sign(&mut rng)));
    }
    StabilizerGroup::validate(n, &gens).expect("independent commuting generators")
}
