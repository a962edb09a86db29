//! Small helpers for dense complex matrices.

use nalgebra::{Complex, DMatrix};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;

/// Largest qubit count for which dense `2^n × 2^n` matrices are built.
pub const DEFAULT_DENSE_CAP: usize = 12;

pub(crate) fn check_dense_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Resource {
            what: "dense qubit count",
            requested: n,
            cap,
        });
    }
    Ok(())
}

/// Largest entrywise deviation `|M - M†|`.
#[must_use]
pub fn hermitian_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// `Trace(A · B)` without forming the product.
#[must_use]
pub fn trace_product(a: &CMatrix, b: &CMatrix) -> C64 {
    let n = a.nrows();
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..n {
        for k in 0..n {
            acc += a[(i, k)] * b[(k, i)];
        }
    }
    acc
}

#[must_use]
pub fn trace(a: &CMatrix) -> C64 {
    (0..a.nrows()).map(|i| a[(i, i)]).sum()
}

/// Norm induced by `⟨A, B⟩ = Trace(A B†)`, i.e. the Frobenius norm.
#[must_use]
pub fn frobenius_norm(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest entrywise modulus of `a - b`.
#[must_use]
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Qubit count of a `2^n × 2^n` matrix.
pub(crate) fn qubits_of(m: &CMatrix) -> Result<usize> {
    let dim = m.nrows();
    if dim != m.ncols() {
        return Err(Error::Dimension {
            expected: dim,
            found: m.ncols(),
        });
    }
    if !dim.is_power_of_two() {
        return Err(Error::Validation(format!("matrix dimension {dim} is not a power of two")));
    }
    Ok(dim.trailing_zeros() as usize)
}
