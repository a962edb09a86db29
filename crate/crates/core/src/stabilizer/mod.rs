//! Stabilizer groups as signed check matrices.
//!
//! A [`StabilizerGroup`] always holds a minimal generating set: its check
//! matrix `A = (A_X | A_Z)` has full row rank `m`, so `|G| = 2^m` and the
//! codespace has dimension `2^(n-m)`. Signs are invisible to `A`; they are
//! carried on the generators and recovered for any element by multiplying
//! the generators selected by a row-space certificate.

mod extension;
mod random;
pub mod text;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dense::{check_dense_cap, CMatrix, C64, DEFAULT_DENSE_CAP};
use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVector, Combinations, EchelonBasis, Insertion};
use crate::pauli::{PauliOperator, Sign};

pub use extension::{extend, GroupExtension};
pub use random::{random_stabilizer_group, random_xz_split_group};

/// Largest generator count for which the full group is enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// Result of a signed membership query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Membership {
    InGroup,
    NegationInGroup,
    Neither,
}

/// A commutative subgroup of the Pauli group not containing `-1`.
#[derive(Debug, Clone)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliOperator>,
    check: BitMatrix,
    basis: EchelonBasis,
    removed: Vec<usize>,
}

impl StabilizerGroup {
    /// The trivial group `{1}` on `n` qubits.
    #[must_use]
    pub fn trivial(n: usize) -> Self {
        Self {
            n,
            generators: Vec::new(),
            check: BitMatrix::empty(2 * n),
            basis: EchelonBasis::new(2 * n, 0),
            removed: Vec::new(),
        }
    }

    /// Validates `generators` and reduces them to a minimal generating set.
    ///
    /// Generators are scanned in order; one already generated by those kept
    /// before it is dropped and its input index recorded in
    /// [`removed`](Self::removed).
    pub fn validate(n: usize, generators: &[PauliOperator]) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.num_qubits() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: g.num_qubits(),
                });
            }
            if !g.is_hermitian() {
                return Err(Error::Validation(format!("generator {} ({g}) is not Hermitian", i + 1)));
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if !generators[i].commutes(&generators[j])? {
                    return Err(Error::NonCommuting { first: i, second: j });
                }
            }
        }

        let mut basis = EchelonBasis::new(2 * n, generators.len());
        let mut kept: Vec<usize> = Vec::new();
        let mut removed = Vec::new();
        for (i, g) in generators.iter().enumerate() {
            let row = g.check_row();
            match basis.solve(&row) {
                None => {
                    basis.insert(&row);
                    kept.push(i);
                }
                Some(combo) => {
                    let mut product = PauliOperator::identity(n);
                    let mut used = Vec::new();
                    for slot in combo.iter_ones() {
                        product = product.multiply(&generators[kept[slot]])?;
                        used.push(kept[slot]);
                    }
                    if product == *g {
                        removed.push(i);
                    } else {
                        used.push(i);
                        return Err(Error::TrivialCodespace { certificate: used });
                    }
                }
            }
        }

        let gens: Vec<PauliOperator> = kept.iter().map(|&i| generators[i].clone()).collect();
        Ok(Self::from_independent(n, gens, removed))
    }

    /// Builds a group from generators already known to be commuting,
    /// independent and free of `-1`.
    fn from_independent(n: usize, generators: Vec<PauliOperator>, removed: Vec<usize>) -> Self {
        let rows: Vec<BitVector> = generators.iter().map(PauliOperator::check_row).collect();
        let mut basis = EchelonBasis::new(2 * n, rows.len());
        for r in &rows {
            let ins = basis.insert(r);
            debug_assert_eq!(ins, Insertion::Independent);
        }
        Self {
            n,
            generators,
            check: BitMatrix::from_rows(rows, 2 * n).expect("rows have length 2n"),
            basis,
            removed,
        }
    }

    #[must_use]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Size `m` of the minimal generating set.
    #[must_use]
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    #[must_use]
    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// Check matrix `(A_X | A_Z)`, one row per generator, `2n` columns.
    #[must_use]
    pub fn check_matrix(&self) -> &BitMatrix {
        &self.check
    }

    /// Input positions of generators dropped as redundant during validation.
    #[must_use]
    pub fn removed(&self) -> &[usize] {
        &self.removed
    }

    #[must_use]
    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// `log2` of the codespace dimension, `n - m`.
    #[must_use]
    pub fn logical_qubits(&self) -> usize {
        self.n - self.generators.len()
    }

    /// Codespace dimension `q = 2^(n-m)`, when it fits in a `u64`.
    #[must_use]
    pub fn codespace_dim(&self) -> Option<u64> {
        1u64.checked_shl(self.logical_qubits() as u32)
    }

    /// Product of the generators selected by `combo`, in index order.
    fn product(&self, combo: &BitVector) -> PauliOperator {
        combo.iter_ones().fold(PauliOperator::identity(self.n), |acc, i| {
            acc.multiply(&self.generators[i]).expect("same qubit count")
        })
    }

    /// Coefficients `v` with `vᵀA = row`, if `row` is in the row space.
    pub fn solve_row(&self, row: &BitVector) -> Result<Option<BitVector>> {
        if row.len() != 2 * self.n {
            return Err(Error::Dimension {
                expected: 2 * self.n,
                found: row.len(),
            });
        }
        Ok(self.basis.solve(row))
    }

    /// The unique element of `G` whose check row is `row`, sign included.
    pub fn element_from_row(&self, row: &BitVector) -> Result<Option<PauliOperator>> {
        Ok(self.solve_row(row)?.map(|combo| self.product(&combo)))
    }

    /// Product of generators chosen by a coefficient vector of length `m`.
    pub fn element_from_coefficients(&self, coefficients: &BitVector) -> Result<PauliOperator> {
        if coefficients.len() != self.generators.len() {
            return Err(Error::Dimension {
                expected: self.generators.len(),
                found: coefficients.len(),
            });
        }
        Ok(self.product(coefficients))
    }

    pub fn membership(&self, p: &PauliOperator) -> Result<Membership> {
        if p.num_qubits() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: p.num_qubits(),
            });
        }
        if !p.is_hermitian() {
            return Err(Error::Validation(format!("{p} is not Hermitian")));
        }
        Ok(match self.element_from_row(&p.check_row())? {
            None => Membership::Neither,
            Some(e) if e == *p => Membership::InGroup,
            Some(_) => Membership::NegationInGroup,
        })
    }

    /// Whether both groups contain exactly the same signed elements.
    #[must_use]
    pub fn is_same_group(&self, other: &Self) -> bool {
        self.n == other.n
            && self.num_generators() == other.num_generators()
            && other
                .generators
                .iter()
                .all(|g| matches!(self.membership(g), Ok(Membership::InGroup)))
    }

    /// All `2^m` elements in Gray-code order.
    pub fn enumerate(&self) -> Result<Elements<'_>> {
        self.enumerate_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_capped(&self, cap: usize) -> Result<Elements<'_>> {
        let m = self.generators.len();
        if m > cap || m >= 64 {
            return Err(Error::Resource {
                what: "enumeration generator count",
                requested: m,
                cap,
            });
        }
        Ok(Elements {
            group: self,
            next_index: 0,
            end: 1u64 << m,
            current: PauliOperator::identity(self.n),
        })
    }

    /// Elements whose support lies inside `qubits`, as check-row coefficient
    /// vectors: a basis of the left null space of `A` with those columns
    /// zeroed.
    pub fn supported_within(&self, qubits: &[usize]) -> Result<BitMatrix> {
        // vᵀA_S = 0 exactly when vᵀA vanishes outside S
        Ok(self.check.zero_columns(qubits)?.left_null_basis())
    }

    /// Every element of weight `1..=nu`, deduplicated, in ascending
    /// (weight, lexicographic check row) order.
    pub fn local_elements(&self, nu: usize) -> Result<Vec<PauliOperator>> {
        if nu > self.n {
            return Err(Error::Precondition(format!(
                "nu = {nu} exceeds the qubit count {}",
                self.n
            )));
        }
        let mut found: BTreeMap<BitVector, PauliOperator> = BTreeMap::new();
        for subset in Combinations::new(self.n, nu) {
            let null = self.supported_within(&subset)?;
            let k = null.nrows();
            if k >= 63 {
                return Err(Error::Resource {
                    what: "local subgroup generator count",
                    requested: k,
                    cap: 62,
                });
            }
            for mask in 1u64..1 << k {
                let mut coeffs = BitVector::zeros(self.generators.len());
                for i in 0..k {
                    if mask >> i & 1 == 1 {
                        coeffs.xor_assign(null.row(i));
                    }
                }
                let row = self.check.left_mul(&coeffs)?;
                found.entry(row).or_insert_with(|| self.product(&coeffs));
            }
        }
        let mut elems: Vec<PauliOperator> = found.into_values().collect();
        elems.sort_by(|a, b| {
            a.weight()
                .cmp(&b.weight())
                .then_with(|| a.check_row().lex_cmp(&b.check_row()))
        });
        Ok(elems)
    }

    /// `G_ν`, the subgroup generated by elements of weight at most `nu`.
    ///
    /// Generators are chosen greedily from the `ν`-local elements in
    /// ascending (weight, lexicographic check row) order, so the result is
    /// deterministic and every generator is `ν`-local.
    pub fn subgroup_nu(&self, nu: usize) -> Result<Self> {
        let candidates = self.local_elements(nu)?;
        let mut basis = EchelonBasis::new(2 * self.n, candidates.len());
        let mut chosen = Vec::new();
        for c in candidates {
            if basis.insert(&c.check_row()) == Insertion::Independent {
                chosen.push(c);
                if chosen.len() == self.generators.len() {
                    break;
                }
            }
        }
        Ok(Self::from_independent(self.n, chosen, Vec::new()))
    }

    /// `G ∩ P_S`: elements supported inside `qubits`.
    pub fn restricted_to(&self, qubits: &[usize]) -> Result<Self> {
        let null = self.supported_within(qubits)?;
        let gens = null.rows().iter().map(|v| self.product(v)).collect();
        Ok(Self::from_independent(self.n, gens, Vec::new()))
    }

    /// Dense codespace projector `(1/|G|) Σ_{g∈G} g`.
    pub fn projector(&self) -> Result<CMatrix> {
        self.projector_capped(DEFAULT_DENSE_CAP)
    }

    pub fn projector_capped(&self, dense_cap: usize) -> Result<CMatrix> {
        check_dense_cap(self.n, dense_cap)?;
        let dim = 1usize << self.n;
        let mut acc = CMatrix::zeros(dim, dim);
        for g in self.enumerate()? {
            g.for_each_entry(|r, c, v| acc[(r, c)] += v);
        }
        let norm = C64::new((1u64 << self.generators.len()) as f64, 0.0);
        Ok(acc / norm)
    }

    /// Copy with the sign of generator `index` flipped.
    pub fn with_flipped_sign(&self, index: usize) -> Result<Self> {
        if index >= self.generators.len() {
            return Err(Error::IndexOutOfRange {
                index,
                bound: self.generators.len(),
            });
        }
        let mut gens = self.generators.clone();
        gens[index] = gens[index].negated();
        Ok(Self::from_independent(self.n, gens, Vec::new()))
    }

    /// The generators as check-matrix text.
    #[must_use]
    pub fn to_text(&self) -> String {
        text::write_check_matrix(self.n, &self.generators)
    }
}

/// Gray-code walk over a group: each step multiplies by one generator.
#[derive(Debug, Clone)]
pub struct Elements<'a> {
    group: &'a StabilizerGroup,
    next_index: u64,
    end: u64,
    current: PauliOperator,
}

impl Iterator for Elements<'_> {
    type Item = PauliOperator;

    fn next(&mut self) -> Option<PauliOperator> {
        if self.next_index >= self.end {
            return None;
        }
        let k = self.next_index;
        self.next_index += 1;
        if k > 0 {
            let flip = k.trailing_zeros() as usize;
            self.current = self
                .current
                .multiply(&self.group.generators[flip])
                .expect("same qubit count");
        }
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next_index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Elements<'_> {}

/// Signs of the generators as a bit vector (`1` for `-`).
#[must_use]
pub fn sign_bits(generators: &[PauliOperator]) -> BitVector {
    BitVector::from_bools(&generators.iter().map(|g| g.sign() == Some(Sign::Minus)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::dense::{max_abs_diff, trace};
    use std::collections::HashSet;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    fn group(gens: &[&str]) -> StabilizerGroup {
        let ops: Vec<PauliOperator> = gens.iter().map(|s| p(s)).collect();
        StabilizerGroup::validate(ops[0].num_qubits(), &ops).unwrap()
    }

    #[test]
    fn validate_commuting_example() {
        let g = group(&["+XIZ", "+ZIX"]);
        assert_eq!(g.num_generators(), 2);
        assert_eq!(g.codespace_dim(), Some(2));
    }

    #[test]
    fn validate_rejects_literal_worked_example() {
        let gens = [p("+XIZ"), p("+IZX")];
        assert_eq!(
            StabilizerGroup::validate(3, &gens).unwrap_err(),
            Error::NonCommuting { first: 0, second: 1 }
        );
    }

    #[test]
    fn validate_rejects_sign_conflict() {
        let err = StabilizerGroup::validate(1, &[p("+Z"), p("-Z")]).unwrap_err();
        assert_eq!(err, Error::TrivialCodespace { certificate: vec![0, 1] });
        let err = StabilizerGroup::validate(2, &[p("+ZI"), p("+IZ"), p("-ZZ")]).unwrap_err();
        assert_eq!(err, Error::TrivialCodespace { certificate: vec![0, 1, 2] });
        let err = StabilizerGroup::validate(2, &[p("-II")]).unwrap_err();
        assert_eq!(err, Error::TrivialCodespace { certificate: vec![0] });
    }

    #[test]
    fn validate_rejects_anticommuting_single_qubit() {
        assert_eq!(
            StabilizerGroup::validate(1, &[p("+X"), p("+Z")]).unwrap_err(),
            Error::NonCommuting { first: 0, second: 1 }
        );
        assert!(StabilizerGroup::validate(1, &[p("+iX")]).is_err());
        assert!(StabilizerGroup::validate(2, &[p("+X")]).is_err());
    }

    #[test]
    fn validate_drops_redundant_generators() {
        let g = StabilizerGroup::validate(2, &[p("+ZI"), p("+IZ"), p("+ZZ"), p("+II")]).unwrap();
        assert_eq!(g.num_generators(), 2);
        assert_eq!(g.removed(), &[2, 3]);
    }

    #[test]
    fn membership_with_signs() {
        let g = group(&["+XIZ", "+ZIX"]);
        assert_eq!(g.membership(&p("+XIZ")).unwrap(), Membership::InGroup);
        assert_eq!(g.membership(&p("-XIZ")).unwrap(), Membership::NegationInGroup);
        assert_eq!(g.membership(&p("+ZII")).unwrap(), Membership::Neither);
        // XZ on qubit 1 and ZX on qubit 3 give (-iY)(iY) = +YY
        assert_eq!(g.membership(&p("+YIY")).unwrap(), Membership::InGroup);
        assert!(g.membership(&p("+iXIZ")).is_err());
    }

    #[test]
    fn membership_of_every_enumerated_element() {
        for g in [catalog::steane(), catalog::ghz(4), catalog::five_qubit()] {
            let elems: Vec<_> = g.enumerate().unwrap().collect();
            assert_eq!(elems.len(), 1 << g.num_generators());
            let distinct: HashSet<_> = elems.iter().map(PauliOperator::check_row).collect();
            assert_eq!(distinct.len(), elems.len());
            for e in &elems {
                assert_eq!(g.membership(e).unwrap(), Membership::InGroup);
                assert_eq!(g.membership(&e.negated()).unwrap(), Membership::NegationInGroup);
            }
        }
    }

    #[test]
    fn enumerate_small_groups() {
        let g = group(&["+XIZ", "+ZIX"]);
        let elems: Vec<String> = g.enumerate().unwrap().map(|e| e.to_string()).collect();
        assert_eq!(elems, vec!["+III", "+XIZ", "+YIY", "+ZIX"]);
        let t = StabilizerGroup::trivial(3);
        assert_eq!(t.enumerate().unwrap().collect::<Vec<_>>(), vec![PauliOperator::identity(3)]);
        let zz = group(&["+ZI", "+IZ"]);
        assert!(zz.enumerate().unwrap().all(|e| e.x().is_zero()));
        assert_eq!(zz.enumerate().unwrap().count(), 4);
        assert!(matches!(zz.enumerate_capped(1), Err(Error::Resource { .. })));
    }

    #[test]
    fn subgroup_nu_examples() {
        let ghz = catalog::ghz(3);
        let g2 = ghz.subgroup_nu(2).unwrap();
        assert_eq!(g2.num_generators(), 2);
        assert!(g2.is_same_group(&group(&["+ZZI", "+IZZ"])));
        assert!(ghz.subgroup_nu(3).unwrap().is_same_group(&ghz));
        let ex = group(&["+XIZ", "+ZIX"]);
        assert!(ex.subgroup_nu(1).unwrap().is_trivial());
        assert!(ex.subgroup_nu(4).is_err());
    }

    #[test]
    fn subgroup_nu_matches_enumeration() {
        for seed in 0..30 {
            let g = random_stabilizer_group(6, 4, seed);
            for nu in 0..=6 {
                let sub = g.subgroup_nu(nu).unwrap();
                assert!(sub.generators().iter().all(|h| h.weight() <= nu));
                // oracle: span of all enumerated elements of weight <= nu
                let mut basis = EchelonBasis::new(12, 16);
                for e in g.enumerate().unwrap().filter(|e| e.weight() <= nu) {
                    basis.insert(&e.check_row());
                }
                assert_eq!(sub.num_generators(), basis.rank());
                assert!(sub.generators().iter().all(|h| g.membership(h).unwrap() == Membership::InGroup));
                assert!(g.num_generators() >= sub.num_generators());
            }
        }
    }

    #[test]
    fn restricted_subgroups() {
        let ghz = catalog::ghz(3);
        let g01 = ghz.restricted_to(&[0, 1]).unwrap();
        assert!(g01.is_same_group(&group(&["+ZZI"])));
        assert!(ghz.restricted_to(&[0]).unwrap().is_trivial());
    }

    #[test]
    fn projector_laws() {
        let z = group(&["+Z"]);
        let pz = z.projector().unwrap();
        assert_eq!(pz[(0, 0)], C64::new(1.0, 0.0));
        assert_eq!(pz[(1, 1)], C64::new(0.0, 0.0));

        for g in [group(&["+XIZ", "+ZIX"]), catalog::bell(), catalog::ghz(3), catalog::steane()] {
            let pi = g.projector().unwrap();
            assert!(max_abs_diff(&(&pi * &pi), &pi) < 1e-10);
            assert!(max_abs_diff(&pi.adjoint(), &pi) < 1e-12);
            let q = g.codespace_dim().unwrap() as f64;
            assert!((trace(&pi) - C64::new(q, 0.0)).norm() < 1e-9);
            for gen in g.generators() {
                let fixed = &pi * gen.to_dense().unwrap();
                assert!(max_abs_diff(&fixed, &pi) < 1e-9);
            }
        }
    }

    #[test]
    fn subgroup_never_shrinks_codespace() {
        for seed in 0..20 {
            let g = random_stabilizer_group(5, 3, seed);
            for nu in 0..=5 {
                let sub = g.subgroup_nu(nu).unwrap();
                assert!(sub.logical_qubits() >= g.logical_qubits());
            }
        }
    }
}
