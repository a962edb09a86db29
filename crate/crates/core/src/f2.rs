//! Dense linear algebra over GF(2).
//!
//! Vectors are packed into `u64` words; bit `i` lives in word `i / 64` at
//! position `i % 64`. Matrices are stored row-major as a list of packed rows,
//! so a row operation is a word-parallel XOR.
//!
//! All reductions are deterministic: the same input always produces the same
//! reduced form, pivots ascending.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; word_count(len)],
            len,
        }
    }

    /// Vector of length `len` with only bit `index` set.
    ///
    /// # Panics
    /// Panics if `index >= len`.
    #[must_use]
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    #[must_use]
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Validation(format!("invalid bit character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_bools(&bits))
    }

    /// Vector whose bits are the indicator of `indices`.
    pub fn from_indices(len: usize, indices: &[usize]) -> Result<Self> {
        let mut v = Self::zeros(len);
        for &i in indices {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, bound: len });
            }
            v.set(i, true);
        }
        Ok(v)
    }

    #[must_use]
    pub const fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub const fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    /// Panics if `i >= self.len()`.
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    /// # Panics
    /// Panics if `i >= self.len()`.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    /// # Panics
    /// Panics if `i >= self.len()`.
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of set bits.
    #[must_use]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// In-place addition over GF(2).
    ///
    /// # Panics
    /// Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    #[must_use]
    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    #[must_use]
    pub fn and(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
            len: self.len,
        }
    }

    #[must_use]
    pub fn or(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
            len: self.len,
        }
    }

    /// Inner product over GF(2).
    #[must_use]
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    /// Lowest set index at or after `start`.
    #[must_use]
    pub fn first_one_from(&self, start: usize) -> Option<usize> {
        if start >= self.len {
            return None;
        }
        let mut w = start / WORD;
        let mut word = self.words[w] & (!0u64 << (start % WORD));
        loop {
            if word != 0 {
                let i = w * WORD + word.trailing_zeros() as usize;
                return (i < self.len).then_some(i);
            }
            w += 1;
            if w >= self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        let mut next = self.first_one_from(0);
        std::iter::from_fn(move || {
            let cur = next?;
            next = self.first_one_from(cur + 1);
            Some(cur)
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Sub-vector `[start, start + len)`.
    #[must_use]
    pub fn slice(&self, start: usize, len: usize) -> Self {
        assert!(start + len <= self.len, "slice out of range");
        let mut out = Self::zeros(len);
        for i in self.iter_ones().filter(|&i| i >= start && i < start + len) {
            out.set(i - start, true);
        }
        out
    }

    /// Concatenation `self ‖ other`.
    #[must_use]
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Compares bit strings position by position from index 0, treating
    /// `0 < 1`; shorter vectors sort first on a common prefix.
    #[must_use]
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.iter().zip(other.iter()) {
            match (a, b) {
                (false, true) => return Ordering::Less,
                (true, false) => return Ordering::Greater,
                _ => {}
            }
        }
        self.len.cmp(&other.len)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Outcome of inserting a vector into an [`EchelonBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Insertion {
    /// The vector raised the rank.
    Independent,
    /// The vector was already spanned; the payload marks which earlier
    /// insertions sum to it.
    Dependent(BitVector),
}

/// Incrementally maintained row-echelon basis with provenance tracking.
///
/// Every stored row has a distinct pivot equal to its lowest set bit.
/// Each stored row also carries the combination of inserted vectors (by
/// insertion order) that produces it, so membership queries return a
/// certificate.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    cols: usize,
    capacity: usize,
    inserted: usize,
    /// `pivot_slot[c]` is the index into `rows` of the row with pivot `c`.
    pivot_slot: Vec<Option<usize>>,
    rows: Vec<BitVector>,
    combos: Vec<BitVector>,
}

impl EchelonBasis {
    /// Basis for vectors of length `cols`, tracking up to `capacity`
    /// insertions.
    #[must_use]
    pub fn new(cols: usize, capacity: usize) -> Self {
        Self {
            cols,
            capacity,
            inserted: 0,
            pivot_slot: vec![None; cols],
            rows: Vec::new(),
            combos: Vec::new(),
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub const fn cols(&self) -> usize {
        self.cols
    }

    /// Reduces `v` against the basis. Returns the residual and the
    /// combination of inserted vectors that was subtracted.
    fn reduce(&self, v: &BitVector) -> (BitVector, BitVector) {
        let mut residual = v.clone();
        let mut combo = BitVector::zeros(self.capacity);
        let mut pos = residual.first_one_from(0);
        while let Some(p) = pos {
            if let Some(slot) = self.pivot_slot[p] {
                residual.xor_assign(&self.rows[slot]);
                combo.xor_assign(&self.combos[slot]);
            }
            pos = residual.first_one_from(p + 1);
        }
        (residual, combo)
    }

    /// Whether `v` lies in the span; when it does, the combination of
    /// inserted vectors summing to `v`.
    ///
    /// # Panics
    /// Panics if `v.len() != self.cols()`.
    #[must_use]
    pub fn solve(&self, v: &BitVector) -> Option<BitVector> {
        assert_eq!(v.len(), self.cols, "vector length does not match basis");
        let (residual, combo) = self.reduce(v);
        residual.is_zero().then_some(combo)
    }

    #[must_use]
    pub fn contains(&self, v: &BitVector) -> bool {
        self.solve(v).is_some()
    }

    /// Inserts `v`; insertions are labelled `0, 1, 2, …` in call order.
    ///
    /// # Panics
    /// Panics on a length mismatch or when more than `capacity` vectors are
    /// inserted.
    pub fn insert(&mut self, v: &BitVector) -> Insertion {
        assert_eq!(v.len(), self.cols, "vector length does not match basis");
        assert!(self.inserted < self.capacity, "echelon basis capacity exceeded");
        let label = self.inserted;
        self.inserted += 1;
        let (residual, combo) = self.reduce(v);
        if residual.is_zero() {
            return Insertion::Dependent(combo);
        }
        let pivot = residual.first_one_from(0).expect("nonzero residual");
        let mut combo = combo;
        combo.flip(label);
        self.pivot_slot[pivot] = Some(self.rows.len());
        self.rows.push(residual);
        self.combos.push(combo);
        Insertion::Independent
    }

    /// Fully reduced rows sorted by ascending pivot.
    #[must_use]
    pub fn reduced_rows(&self) -> Vec<BitVector> {
        let mut order: Vec<(usize, usize)> = self
            .pivot_slot
            .iter()
            .enumerate()
            .filter_map(|(p, s)| s.map(|s| (p, s)))
            .collect();
        order.sort_unstable();
        let mut rows: Vec<BitVector> = order.iter().map(|&(_, s)| self.rows[s].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&(p, _)| p).collect();
        // back-substitute from the last pivot upward
        for i in (0..rows.len()).rev() {
            for j in 0..i {
                if rows[j].get(pivots[i]) {
                    let r = rows[i].clone();
                    rows[j].xor_assign(&r);
                }
            }
        }
        rows
    }
}

/// Reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub rows: BitMatrix,
    pub pivots: Vec<usize>,
}

/// A dense `rows × cols` matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    cols: usize,
}

impl BitMatrix {
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BitVector::zeros(cols); rows],
            cols,
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        Self {
            rows: (0..n).map(|i| BitVector::unit(n, i)).collect(),
            cols: n,
        }
    }

    /// An empty matrix with `cols` columns.
    #[must_use]
    pub fn empty(cols: usize) -> Self {
        Self { rows: Vec::new(), cols }
    }

    pub fn from_rows(rows: Vec<BitVector>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { rows, cols })
    }

    /// Builds a matrix from `0`/`1` strings, one per row.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let parsed = rows.iter().map(|r| BitVector::parse(r)).collect::<Result<Vec<_>>>()?;
        let cols = parsed.first().map_or(0, BitVector::len);
        Self::from_rows(parsed, cols)
    }

    #[must_use]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub const fn ncols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    #[must_use]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    #[must_use]
    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self { rows, cols: self.cols })
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                out.rows[c].set(r, true);
            }
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows.len() {
            return Err(Error::Dimension {
                expected: self.cols,
                found: other.rows.len(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(other.cols);
                for k in row.iter_ones() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(Self { rows, cols: other.cols })
    }

    /// Row-vector product `uᵀ · self`.
    pub fn left_mul(&self, u: &BitVector) -> Result<BitVector> {
        if u.len() != self.rows.len() {
            return Err(Error::Dimension {
                expected: self.rows.len(),
                found: u.len(),
            });
        }
        let mut acc = BitVector::zeros(self.cols);
        for k in u.iter_ones() {
            acc.xor_assign(&self.rows[k]);
        }
        Ok(acc)
    }

    fn basis(&self) -> EchelonBasis {
        let mut basis = EchelonBasis::new(self.cols, self.rows.len());
        for row in &self.rows {
            basis.insert(row);
        }
        basis
    }

    /// Row rank over GF(2).
    #[must_use]
    pub fn rank(&self) -> usize {
        // untracked elimination; this sits in the subset loops
        let mut pivot_rows: Vec<Option<BitVector>> = vec![None; self.cols];
        let mut rank = 0;
        for row in &self.rows {
            let mut v = row.clone();
            let mut pos = v.first_one_from(0);
            while let Some(p) = pos {
                match &pivot_rows[p] {
                    Some(r) => {
                        v.xor_assign(r);
                        pos = v.first_one_from(p + 1);
                    }
                    None => {
                        pivot_rows[p] = Some(v);
                        rank += 1;
                        break;
                    }
                }
            }
            if rank == self.cols {
                break;
            }
        }
        rank
    }

    /// Reduced row echelon form; zero rows dropped, pivots ascending.
    #[must_use]
    pub fn echelon(&self) -> Echelon {
        let rows = self.basis().reduced_rows();
        let pivots = rows.iter().map(|r| r.first_one_from(0).expect("nonzero row")).collect();
        Echelon {
            rows: Self { rows, cols: self.cols },
            pivots,
        }
    }

    /// A basis for `{u : uᵀ · self = 0}`, as the rows of the returned matrix.
    #[must_use]
    pub fn left_null_basis(&self) -> Self {
        let m = self.rows.len();
        let mut basis = EchelonBasis::new(self.cols, m);
        let mut null = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            if let Insertion::Dependent(mut combo) = basis.insert(row) {
                combo.flip(i);
                null.push(combo);
            }
        }
        Self { rows: null, cols: m }
    }

    /// Whether `v` lies in the row space; when it does, a coefficient
    /// vector `u` with `uᵀ · self = v`.
    pub fn in_row_space(&self, v: &BitVector) -> Result<Option<BitVector>> {
        if v.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.basis().solve(v))
    }

    /// For a check matrix with `n = cols / 2` qubits, zeroes column `j` and
    /// column `j + n` for every qubit `j` in `qubits`.
    pub fn zero_columns(&self, qubits: &[usize]) -> Result<Self> {
        if !self.cols.is_multiple_of(2) {
            return Err(Error::Validation(format!(
                "check matrix must have an even number of columns, found {}",
                self.cols
            )));
        }
        let n = self.cols / 2;
        let mut mask = BitVector::zeros(self.cols);
        for &q in qubits {
            if q >= n {
                return Err(Error::IndexOutOfRange { index: q, bound: n });
            }
            mask.set(q, true);
            mask.set(q + n, true);
        }
        Ok(self.zero_masked(&mask))
    }

    /// Clears every column whose bit is set in `mask`.
    pub(crate) fn zero_masked(&self, mask: &BitVector) -> Self {
        let keep: Vec<u64> = mask.words.iter().map(|w| !w).collect();
        let rows = self
            .rows
            .iter()
            .map(|r| BitVector {
                words: r.words.iter().zip(&keep).map(|(a, k)| a & k).collect(),
                len: r.len,
            })
            .collect();
        Self { rows, cols: self.cols }
    }

    /// Columns `[start, start + len)` as a new matrix.
    #[must_use]
    pub fn column_block(&self, start: usize, len: usize) -> Self {
        Self {
            rows: self.rows.iter().map(|r| r.slice(start, len)).collect(),
            cols: len,
        }
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{} [", self.rows.len(), self.cols)?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{row}")?;
        }
        f.write_str("]")
    }
}

/// Iterator over all `k`-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    #[must_use]
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// `C(n, k)` saturating at `u64::MAX`.
#[must_use]
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn example_check_matrix() -> BitMatrix {
        BitMatrix::parse_rows(&["100001", "001010"]).unwrap()
    }

    /// Every vector in the row space, by enumerating all `2^m` combinations.
    fn rowspace_oracle(m: &BitMatrix) -> Vec<BitVector> {
        let rows = m.nrows();
        let mut out: Vec<BitVector> = (0u64..1 << rows)
            .map(|mask| {
                let mut acc = BitVector::zeros(m.ncols());
                for i in 0..rows {
                    if mask >> i & 1 == 1 {
                        acc.xor_assign(m.row(i));
                    }
                }
                acc
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn rank_oracle(m: &BitMatrix) -> usize {
        rowspace_oracle(m).len().trailing_zeros() as usize
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> BitMatrix {
        let rows = (0..rows)
            .map(|_| BitVector::from_bools(&(0..cols).map(|_| rng.random_bool(0.4)).collect::<Vec<_>>()))
            .collect();
        BitMatrix::from_rows(rows, cols).unwrap()
    }

    fn matrix_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
        (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(any::<bool>(), c), r).prop_map(move |rows| {
                BitMatrix::from_rows(rows.iter().map(|r| BitVector::from_bools(r)).collect(), c).unwrap()
            })
        })
    }

    #[test]
    fn bit_vector_basics() {
        let mut v = BitVector::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.weight(), 3);
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.first_one_from(1), Some(64));
        assert_eq!(v.first_one_from(130), None);
        v.flip(64);
        assert!(!v.get(64));
        assert!(BitVector::zeros(0).is_zero());
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn bit_vector_bounds_checked() {
        let v = BitVector::zeros(3);
        let _ = v.get(3);
    }

    #[test]
    fn rank_of_example_matrix() {
        assert_eq!(example_check_matrix().rank(), 2);
    }

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(BitMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(BitMatrix::zeros(0, 5).rank(), 0);
        assert_eq!(BitMatrix::identity(4).rank(), 4);
    }

    #[test]
    fn zero_columns_matches_displayed_example() {
        // qubits {1,3} in 1-based labels
        let a_s = example_check_matrix().zero_columns(&[0, 2]).unwrap();
        assert_eq!(a_s, BitMatrix::parse_rows(&["000000", "000010"]).unwrap());
        assert_eq!(a_s.rank(), 1);
    }

    #[test]
    fn zero_columns_edges() {
        let a = example_check_matrix();
        assert_eq!(a.zero_columns(&[]).unwrap(), a);
        assert!(a.zero_columns(&[0, 1, 2]).unwrap().is_zero());
        assert_eq!(
            a.zero_columns(&[3]),
            Err(Error::IndexOutOfRange { index: 3, bound: 3 })
        );
        assert!(BitMatrix::zeros(2, 5).zero_columns(&[0]).is_err());
    }

    #[test]
    fn left_null_of_zeroed_example() {
        let a_s = example_check_matrix().zero_columns(&[0, 2]).unwrap();
        let null = a_s.left_null_basis();
        assert_eq!(null.nrows(), 1);
        assert_eq!(null.row(0), &BitVector::parse("10").unwrap());
    }

    #[test]
    fn left_null_full_rank_is_empty() {
        let null = BitMatrix::identity(4).left_null_basis();
        assert_eq!(null.nrows(), 0);
        assert_eq!(null.ncols(), 4);
    }

    #[test]
    fn left_null_of_duplicated_row() {
        let m = BitMatrix::parse_rows(&["1100", "0110", "1100"]).unwrap();
        let null = m.left_null_basis();
        assert_eq!(null.nrows(), 1);
        assert_eq!(null.row(0), &BitVector::parse("101").unwrap());
    }

    #[test]
    fn in_row_space_certificates() {
        let m = BitMatrix::parse_rows(&["11000", "01100", "00011"]).unwrap();
        let cert = m.in_row_space(m.row(0)).unwrap().unwrap();
        assert_eq!(cert, BitVector::parse("100").unwrap());
        let sum = m.row(0).xor(m.row(1));
        let cert = m.in_row_space(&sum).unwrap().unwrap();
        assert_eq!(cert, BitVector::parse("110").unwrap());
        assert!(m.in_row_space(&BitVector::zeros(4)).is_err());
    }

    #[test]
    fn vector_outside_enumerated_rowspace() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        // rank-deficient 4x8: last row is the sum of the first two
        let mut m = random_matrix(&mut rng, 3, 8);
        let extra = m.row(0).xor(m.row(1));
        m.push_row(extra).unwrap();
        let space = rowspace_oracle(&m);
        assert!(space.len() <= 8);
        let outside = (0u64..256)
            .map(|bits| BitVector::from_bools(&(0..8).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>()))
            .find(|v| !space.contains(v))
            .unwrap();
        assert_eq!(m.in_row_space(&outside).unwrap(), None);
        for v in &space {
            assert!(m.in_row_space(v).unwrap().is_some());
        }
    }

    #[test]
    fn echelon_is_reproducible_and_reduced() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = random_matrix(&mut rng, 6, 10);
        let e1 = m.echelon();
        let e2 = m.clone().echelon();
        assert_eq!(e1, e2);
        assert!(e1.pivots.windows(2).all(|w| w[0] < w[1]));
        for (i, &p) in e1.pivots.iter().enumerate() {
            for j in 0..e1.rows.nrows() {
                assert_eq!(e1.rows.get(j, p), i == j);
            }
        }
        assert_eq!(e1.rows.nrows(), m.rank());
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(Combinations::new(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(Combinations::new(2, 3).count(), 0);
        assert_eq!(binomial(18, 4), 3060);
        assert_eq!(Combinations::new(9, 4).count() as u64, binomial(9, 4));
    }

    proptest! {
        #[test]
        fn rank_matches_enumeration(m in matrix_strategy(10, 12)) {
            prop_assert_eq!(m.rank(), rank_oracle(&m));
            prop_assert!(m.rank() <= m.nrows().min(m.ncols()));
        }

        #[test]
        fn rank_equals_transpose_rank(m in matrix_strategy(12, 12)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn left_null_annihilates(m in matrix_strategy(12, 10)) {
            let null = m.left_null_basis();
            prop_assert!(null.mul(&m).unwrap().is_zero());
            prop_assert_eq!(null.rank(), null.nrows());
            prop_assert_eq!(null.rank() + m.rank(), m.nrows());
        }

        #[test]
        fn zeroing_never_raises_rank(m in matrix_strategy(8, 6), q in prop::collection::vec(0usize..3, 0..3)) {
            let wide = BitMatrix::from_rows(
                m.rows().iter().map(|r| r.concat(&BitVector::zeros(6 - r.len()))).collect(),
                6,
            ).unwrap();
            prop_assert!(wide.zero_columns(&q).unwrap().rank() <= wide.rank());
        }

        #[test]
        fn certificates_reproduce_target(m in matrix_strategy(8, 10), mask in any::<u16>()) {
            let mut v = BitVector::zeros(m.ncols());
            for i in 0..m.nrows() {
                if mask >> i & 1 == 1 {
                    v.xor_assign(m.row(i));
                }
            }
            let cert = m.in_row_space(&v).unwrap();
            prop_assert!(cert.is_some());
            prop_assert_eq!(m.left_mul(&cert.unwrap()).unwrap(), v);
        }
    }
}
