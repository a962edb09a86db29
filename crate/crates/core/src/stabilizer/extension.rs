use crate::error::{Error, Result};
use crate::f2::{BitVector, EchelonBasis, Insertion};
use crate::pauli::PauliOperator;

use super::StabilizerGroup;

/// An ordered minimal generating set `g_1 … g_t` of `G` whose first `s`
/// members generate `G_ν` and are each `ν`-local.
///
/// Sign-flipped groups `G(b)` are obtained by negating `g_j` for `j > s`
/// wherever `b_j = 1`.
#[derive(Debug, Clone)]
pub struct GroupExtension {
    base: StabilizerGroup,
    nu: usize,
    ordered: Vec<PauliOperator>,
    s: usize,
}

impl GroupExtension {
    /// Orders generators as: the `ν`-local minimal set chosen by
    /// [`StabilizerGroup::subgroup_nu`], then the base generators in their
    /// own order, each kept only if independent of everything before it.
    pub fn new(base: &StabilizerGroup, nu: usize) -> Result<Self> {
        let local = base.subgroup_nu(nu)?;
        let n = base.num_qubits();
        let mut basis = EchelonBasis::new(2 * n, local.num_generators() + base.num_generators());
        let mut ordered = Vec::with_capacity(base.num_generators());
        for g in local.generators().iter().chain(base.generators()) {
            if basis.insert(&g.check_row()) == Insertion::Independent {
                ordered.push(g.clone());
            }
        }
        debug_assert_eq!(ordered.len(), base.num_generators());
        Ok(Self {
            base: base.clone(),
            nu,
            ordered,
            s: local.num_generators(),
        })
    }

    #[must_use]
    pub fn base(&self) -> &StabilizerGroup {
        &self.base
    }

    #[must_use]
    pub fn nu(&self) -> usize {
        self.nu
    }

    /// Number of `ν`-local generators.
    #[must_use]
    pub fn s(&self) -> usize {
        self.s
    }

    /// Total generator count.
    #[must_use]
    pub fn t(&self) -> usize {
        self.ordered.len()
    }

    /// Length of the sign bitstring, `t - s`.
    #[must_use]
    pub fn free_signs(&self) -> usize {
        self.t() - self.s
    }

    /// `ν < η(G)` holds exactly when `G_ν` is a proper subgroup.
    #[must_use]
    pub fn nu_below_eta(&self) -> bool {
        self.s < self.t()
    }

    #[must_use]
    pub fn ordered_generators(&self) -> &[PauliOperator] {
        &self.ordered
    }

    /// `G(b)` for a bitstring of length `t - s`.
    pub fn apply(&self, b: &BitVector) -> Result<StabilizerGroup> {
        if b.len() != self.free_signs() {
            return Err(Error::Dimension {
                expected: self.free_signs(),
                found: b.len(),
            });
        }
        let gens: Vec<PauliOperator> = self
            .ordered
            .iter()
            .enumerate()
            .map(|(j, g)| {
                if j >= self.s && b.get(j - self.s) {
                    g.negated()
                } else {
                    g.clone()
                }
            })
            .collect();
        Ok(StabilizerGroup::from_independent(self.base.num_qubits(), gens, Vec::new()))
    }

    /// All `2^(t-s)` sign patterns in counting order.
    pub fn bitstrings(&self, cap: usize) -> Result<impl Iterator<Item = BitVector>> {
        let k = self.free_signs();
        if k > cap || k >= 64 {
            return Err(Error::Resource {
                what: "extension sign-bit count",
                requested: k,
                cap,
            });
        }
        Ok((0u64..1 << k).map(move |mask| {
            BitVector::from_bools(&(0..k).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        }))
    }
}

/// `G(b)` for `ν < η(G)`.
pub fn extend(group: &StabilizerGroup, nu: usize, b: &BitVector) -> Result<StabilizerGroup> {
    let ext = GroupExtension::new(group, nu)?;
    if !ext.nu_below_eta() {
        return Err(Error::Precondition(format!(
            "nu = {nu} is not below eta(G): the {nu}-local elements already generate G"
        )));
    }
    ext.apply(b)
}
