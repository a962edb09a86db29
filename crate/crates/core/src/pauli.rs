//! Phase-exact n-qubit Pauli operators and real linear combinations of them.
//!
//! An operator is stored as `i^phase · Π_k X^{x_k} Z^{z_k}`, with the X factor
//! to the left of the Z factor on every qubit. Under this convention the
//! Hermitian tensor with `y` factors on `ny` qubits has `phase = ny mod 4`,
//! because `Y = i·X·Z`; its negation has `phase = ny + 2 mod 4`.
//!
//! Dense matrices use the Kronecker convention: qubit 0 is the leftmost
//! tensor factor, i.e. the most significant bit of a basis-state index.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dense::{check_dense_cap, hermitian_defect, qubits_of, CMatrix, C64, DEFAULT_DENSE_CAP};
use crate::error::{Error, Result};
use crate::f2::BitVector;

/// Sign of a Hermitian Pauli operator relative to its canonical tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    #[must_use]
    pub fn value(self) -> f64 {
        match self {
            Self::Plus => 1.0,
            Self::Minus => -1.0,
        }
    }

    #[must_use]
    pub fn flipped(self) -> Self {
        match self {
            Self::Plus => Self::Minus,
            Self::Minus => Self::Plus,
        }
    }
}

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    fn bits(self) -> (bool, bool) {
        match self {
            Self::I => (false, false),
            Self::X => (true, false),
            Self::Y => (true, true),
            Self::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Self::I,
            (true, false) => Self::X,
            (true, true) => Self::Y,
            (false, true) => Self::Z,
        }
    }

    fn as_char(self) -> char {
        match self {
            Self::I => 'I',
            Self::X => 'X',
            Self::Y => 'Y',
            Self::Z => 'Z',
        }
    }
}

/// `i^phase · Π_k X^{x_k} Z^{z_k}` on `n` qubits.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    x: BitVector,
    z: BitVector,
    phase: u8,
}

impl PauliOperator {
    pub fn new(x: BitVector, z: BitVector, phase: u8) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::Dimension {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(Self { x, z, phase: phase % 4 })
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        Self {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
            phase: 0,
        }
    }

    /// The Hermitian operator with the given letters and sign.
    #[must_use]
    pub fn from_letters(letters: &[Letter], sign: Sign) -> Self {
        let n = letters.len();
        let mut x = BitVector::zeros(n);
        let mut z = BitVector::zeros(n);
        for (k, l) in letters.iter().enumerate() {
            let (bx, bz) = l.bits();
            x.set(k, bx);
            z.set(k, bz);
        }
        Self::hermitian(x, z, sign)
    }

    /// The Hermitian operator with pattern `(x, z)` and the given sign.
    ///
    /// # Panics
    /// Panics if `x` and `z` differ in length.
    #[must_use]
    pub fn hermitian(x: BitVector, z: BitVector, sign: Sign) -> Self {
        assert_eq!(x.len(), z.len(), "x and z parts differ in length");
        let ny = x.and(&z).weight();
        let phase = (ny + if sign == Sign::Minus { 2 } else { 0 }) % 4;
        Self { x, z, phase: phase as u8 }
    }

    /// Splits a check row `(x | z)` of length `2n`.
    pub fn from_check_row(row: &BitVector, sign: Sign) -> Result<Self> {
        if !row.len().is_multiple_of(2) {
            return Err(Error::Validation(format!(
                "check row must have even length, found {}",
                row.len()
            )));
        }
        let n = row.len() / 2;
        Ok(Self::hermitian(row.slice(0, n), row.slice(n, n), sign))
    }

    /// A single non-identity letter on qubit `q`.
    ///
    /// # Panics
    /// Panics if `q >= n`.
    #[must_use]
    pub fn single(n: usize, q: usize, letter: Letter) -> Self {
        let mut letters = vec![Letter::I; n];
        letters[q] = letter;
        Self::from_letters(&letters, Sign::Plus)
    }

    #[must_use]
    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    #[must_use]
    pub fn x(&self) -> &BitVector {
        &self.x
    }

    #[must_use]
    pub fn z(&self) -> &BitVector {
        &self.z
    }

    #[must_use]
    pub fn phase(&self) -> u8 {
        self.phase
    }

    #[must_use]
    pub fn letter(&self, q: usize) -> Letter {
        Letter::from_bits(self.x.get(q), self.z.get(q))
    }

    /// `(x | z)`, length `2n`.
    #[must_use]
    pub fn check_row(&self) -> BitVector {
        self.x.concat(&self.z)
    }

    fn y_count(&self) -> usize {
        self.x.and(&self.z).weight()
    }

    /// Whether the operator is `±σ` for a Hermitian Pauli tensor `σ`.
    #[must_use]
    pub fn is_hermitian(&self) -> bool {
        (self.phase as usize) % 2 == self.y_count() % 2
    }

    /// Sign relative to the canonical Hermitian tensor; `None` for `±iσ`.
    #[must_use]
    pub fn sign(&self) -> Option<Sign> {
        let ny = self.y_count() % 4;
        match (self.phase as usize + 4 - ny) % 4 {
            0 => Some(Sign::Plus),
            2 => Some(Sign::Minus),
            _ => None,
        }
    }

    #[must_use]
    pub fn negated(&self) -> Self {
        Self {
            x: self.x.clone(),
            z: self.z.clone(),
            phase: (self.phase + 2) % 4,
        }
    }

    /// Same pattern with sign `+`.
    #[must_use]
    pub fn unsigned(&self) -> Self {
        Self::hermitian(self.x.clone(), self.z.clone(), Sign::Plus)
    }

    #[must_use]
    pub fn is_identity_pattern(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of non-identity tensor factors.
    #[must_use]
    pub fn weight(&self) -> usize {
        self.x.or(&self.z).weight()
    }

    /// Qubits carrying a non-identity factor, ascending, 0-based.
    #[must_use]
    pub fn support(&self) -> Vec<usize> {
        self.x.or(&self.z).iter_ones().collect()
    }

    fn check_same_size(&self, other: &Self) -> Result<()> {
        if self.num_qubits() != other.num_qubits() {
            return Err(Error::Dimension {
                expected: self.num_qubits(),
                found: other.num_qubits(),
            });
        }
        Ok(())
    }

    /// Phase-exact product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_size(other)?;
        // moving other's X part left past self's Z part: Z^a X^b = (-1)^{a·b} X^b Z^a
        let swap = if self.z.dot(&other.x) { 2 } else { 0 };
        Ok(Self {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase: (self.phase + other.phase + swap) % 4,
        })
    }

    /// Whether the two operators commute (symplectic product zero).
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_same_size(other)?;
        Ok(self.x.dot(&other.z) == self.z.dot(&other.x))
    }

    fn masks(&self) -> (usize, usize) {
        let n = self.num_qubits();
        let mut xm = 0usize;
        let mut zm = 0usize;
        for k in self.x.iter_ones() {
            xm |= 1 << (n - 1 - k);
        }
        for k in self.z.iter_ones() {
            zm |= 1 << (n - 1 - k);
        }
        (xm, zm)
    }

    /// Calls `f(row, col, value)` for every nonzero entry of the dense matrix.
    /// A Pauli operator has exactly one nonzero entry per column.
    pub(crate) fn for_each_entry(&self, mut f: impl FnMut(usize, usize, C64)) {
        let n = self.num_qubits();
        let (xm, zm) = self.masks();
        let base = phase_value(self.phase);
        for col in 0..1usize << n {
            let v = if (col & zm).count_ones() % 2 == 1 { -base } else { base };
            f(col ^ xm, col, v);
        }
    }

    /// Dense `2^n × 2^n` matrix, refusing `n` above the default cap.
    pub fn to_dense(&self) -> Result<CMatrix> {
        self.to_dense_capped(DEFAULT_DENSE_CAP)
    }

    pub fn to_dense_capped(&self, cap: usize) -> Result<CMatrix> {
        check_dense_cap(self.num_qubits(), cap)?;
        let dim = 1usize << self.num_qubits();
        let mut m = CMatrix::zeros(dim, dim);
        self.for_each_entry(|r, c, v| m[(r, c)] = v);
        Ok(m)
    }
}

fn phase_value(phase: u8) -> C64 {
    match phase % 4 {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, 1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, -1.0),
    }
}

impl fmt::Display for PauliOperator {
    /// `+XIZ`, `-IYZ`; non-Hermitian operators render as `+iXYZ` / `-iXYZ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // relative to the canonical tensor, the prefactor is i^(phase - ny)
        let rel = (self.phase as usize + 4 - self.y_count() % 4) % 4;
        f.write_str(match rel {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        })?;
        for q in 0..self.num_qubits() {
            write!(f, "{}", self.letter(q).as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (rel, rest) = if let Some(r) = s.strip_prefix("+i") {
            (1, r)
        } else if let Some(r) = s.strip_prefix("-i").or_else(|| s.strip_prefix("\u{2212}i")) {
            (3, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r)
        } else if let Some(r) = s.strip_prefix('-').or_else(|| s.strip_prefix('\u{2212}')) {
            (2, r)
        } else {
            return Err(Error::Validation(format!("Pauli string {s:?} must start with a sign")));
        };
        let letters = rest
            .chars()
            .map(|c| match c {
                'I' => Ok(Letter::I),
                'X' => Ok(Letter::X),
                'Y' => Ok(Letter::Y),
                'Z' => Ok(Letter::Z),
                other => Err(Error::Validation(format!("invalid Pauli letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let base = Self::from_letters(&letters, Sign::Plus);
        Ok(Self {
            phase: ((base.phase as usize + rel) % 4) as u8,
            ..base
        })
    }
}

/// A real linear combination of Hermitian Pauli tensors.
///
/// Terms are keyed by their `(x, z)` pattern; signs are folded into the
/// coefficient so every pattern appears at most once.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    n: usize,
    terms: BTreeMap<(BitVector, BitVector), f64>,
}

impl PauliSum {
    #[must_use]
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `H = -Σ g` over the given generators, whose ground space is the
    /// codespace of the group they generate.
    pub fn code_hamiltonian(generators: &[PauliOperator]) -> Result<Self> {
        let n = generators.first().map_or(0, PauliOperator::num_qubits);
        let mut h = Self::zero(n);
        for g in generators {
            h.add_term(-1.0, g)?;
        }
        Ok(h)
    }

    #[must_use]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Adds `coefficient · op`; `op` must be Hermitian.
    pub fn add_term(&mut self, coefficient: f64, op: &PauliOperator) -> Result<()> {
        if op.num_qubits() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: op.num_qubits(),
            });
        }
        let sign = op
            .sign()
            .ok_or_else(|| Error::Validation(format!("{op} is not Hermitian")))?;
        let entry = self.terms.entry((op.x.clone(), op.z.clone())).or_insert(0.0);
        *entry += sign.value() * coefficient;
        Ok(())
    }

    /// Terms as `(coefficient, canonical tensor)` in deterministic order.
    pub fn terms(&self) -> impl Iterator<Item = (f64, PauliOperator)> + '_ {
        self.terms
            .iter()
            .map(|((x, z), &c)| (c, PauliOperator::hermitian(x.clone(), z.clone(), Sign::Plus)))
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the tensor with pattern `op` (sign ignored).
    #[must_use]
    pub fn coefficient(&self, op: &PauliOperator) -> f64 {
        self.terms.get(&(op.x.clone(), op.z.clone())).copied().unwrap_or(0.0)
    }

    #[must_use]
    pub fn identity_coefficient(&self) -> f64 {
        self.coefficient(&PauliOperator::identity(self.n))
    }

    #[must_use]
    pub fn is_traceless(&self) -> bool {
        self.identity_coefficient() == 0.0
    }

    /// Largest weight among terms with a nonzero coefficient.
    #[must_use]
    pub fn locality(&self) -> usize {
        self.terms()
            .filter(|(c, _)| *c != 0.0)
            .map(|(_, p)| p.weight())
            .max()
            .unwrap_or(0)
    }

    #[must_use]
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect(),
        }
    }

    pub fn to_dense(&self) -> Result<CMatrix> {
        self.to_dense_capped(DEFAULT_DENSE_CAP)
    }

    pub fn to_dense_capped(&self, cap: usize) -> Result<CMatrix> {
        check_dense_cap(self.n, cap)?;
        let dim = 1usize << self.n;
        let mut m = CMatrix::zeros(dim, dim);
        for (c, p) in self.terms() {
            if c != 0.0 {
                p.for_each_entry(|r, col, v| m[(r, col)] += v * c);
            }
        }
        Ok(m)
    }
}

/// Decomposes a Hermitian matrix as `Σ_J t_J σ_J` with
/// `t_J = Trace(M σ_J) / 2^n`. Coefficients whose magnitude is at rounding
/// level relative to the matrix scale are dropped.
pub fn pauli_decompose(m: &CMatrix) -> Result<PauliSum> {
    let n = qubits_of(m)?;
    check_dense_cap(n, DEFAULT_DENSE_CAP)?;
    let scale = m.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
    let defect = hermitian_defect(m);
    if defect > 1e-10 * scale {
        return Err(Error::Validation(format!(
            "matrix is not Hermitian (max |M - M†| = {defect:.3e})"
        )));
    }
    let dim = 1usize << n;
    let mut out = PauliSum::zero(n);
    for xm in 0..dim {
        for zm in 0..dim {
            let x = BitVector::from_bools(&(0..n).map(|k| xm >> (n - 1 - k) & 1 == 1).collect::<Vec<_>>());
            let z = BitVector::from_bools(&(0..n).map(|k| zm >> (n - 1 - k) & 1 == 1).collect::<Vec<_>>());
            let sigma = PauliOperator::hermitian(x, z, Sign::Plus);
            // Trace(M σ) = Σ_col M[row(col), col] · σ[row(col)... ] with σ one entry per column
            let mut acc = C64::new(0.0, 0.0);
            sigma.for_each_entry(|r, c, v| acc += m[(c, r)] * v);
            let t = acc / dim as f64;
            if t.im.abs() > 1e-10 * scale {
                return Err(Error::Validation(format!(
                    "coefficient of {sigma} has imaginary part {:.3e}",
                    t.im
                )));
            }
            if t.re.abs() > 1e-14 * scale {
                out.add_term(t.re, &sigma)?;
            }
        }
    }
    Ok(out)
}
