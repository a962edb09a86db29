//! Locality metrics of stabilizer groups.
//!
//! `δ(G)` is the least weight of a non-identity element. `η(G)` is the least
//! `ν` for which the elements of weight at most `ν` generate `G`. Both are
//! computed from the check matrix `A` by scanning qubit subsets `S` of
//! growing size: the rows `vᵀA` supported inside `S` are exactly the left
//! null vectors of `A_S`, the matrix `A` with the columns of `S` zeroed.
//!
//! Each metric also has an enumeration oracle that walks all `2^m` elements.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVector, Combinations, EchelonBasis};
use crate::pauli::{PauliOperator, Sign};
use crate::stabilizer::StabilizerGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricKind {
    Delta,
    Eta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Algorithm,
    Oracle,
}

/// What a metric's value is certified by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A non-identity element of weight `δ`.
    Element(PauliOperator),
    /// A generating set whose members all have weight at most `η`.
    Generators(Vec<PauliOperator>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalityReport {
    pub kind: MetricKind,
    pub value: usize,
    pub witness: Witness,
    /// Qubit subsets scanned by the algorithm, or elements visited by the
    /// oracle.
    pub subsets_examined: u64,
    pub method: Method,
    /// For `δ` by subset scan: the first subset (0-based) where the rank
    /// of `A_S` drops.
    pub rank_drop: Option<Vec<usize>>,
}

impl LocalityReport {
    /// The `δ` witness element, if this is a `δ` report.
    #[must_use]
    pub fn element(&self) -> Option<&PauliOperator> {
        match &self.witness {
            Witness::Element(g) => Some(g),
            Witness::Generators(_) => None,
        }
    }

    /// The `η` witness generators, if this is an `η` report.
    #[must_use]
    pub fn generators(&self) -> Option<&[PauliOperator]> {
        match &self.witness {
            Witness::Generators(g) => Some(g),
            Witness::Element(_) => None,
        }
    }
}

/// Raw result of the `δ` subset scan on a check matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankDrop {
    pub value: usize,
    pub subset: Vec<usize>,
    /// Row coefficients `v` with `vᵀA ≠ 0` supported in `subset`.
    pub coefficients: BitVector,
    pub examined: u64,
}

fn qubits_of_check(check: &BitMatrix) -> Result<usize> {
    if !check.ncols().is_multiple_of(2) {
        return Err(Error::Validation(format!(
            "check matrix has an odd column count {}",
            check.ncols()
        )));
    }
    Ok(check.ncols() / 2)
}

fn spend(examined: &mut u64, budget: Option<u64>, lower_bound: usize) -> Result<()> {
    if let Some(cap) = budget {
        if *examined >= cap {
            return Err(Error::BudgetExceeded {
                examined: *examined,
                lower_bound,
            });
        }
    }
    *examined += 1;
    Ok(())
}

/// Subset rank-drop scan for `δ` on any check matrix, commuting or not.
///
/// Subsets are visited by size, then lexicographically; the first `S`
/// with `rank(A_S) < rank(A)` fixes the value.
pub fn delta_rank_drop(check: &BitMatrix, budget: Option<u64>) -> Result<RankDrop> {
    let n = qubits_of_check(check)?;
    let full = check.rank();
    if full == 0 {
        return Err(Error::UndefinedDelta);
    }
    let mut examined = 0u64;
    for k in 1..=n {
        for subset in Combinations::new(n, k) {
            spend(&mut examined, budget, k)?;
            let zeroed = check.zero_columns(&subset)?;
            if zeroed.rank() < full {
                // rank(A_S) < rank(A) guarantees a null vector of A_S with vᵀA ≠ 0
                let coefficients = zeroed
                    .left_null_basis()
                    .into_rows()
                    .into_iter()
                    .find(|v| !check.left_mul(v).expect("matching length").is_zero())
                    .expect("rank drop leaves a null vector outside left-null(A)");
                return Ok(RankDrop {
                    value: k,
                    subset,
                    coefficients,
                    examined,
                });
            }
        }
    }
    unreachable!("S = all qubits leaves A_S = 0, so the scan ends by k = n")
}

/// Raw result of the `η` scan: independent rows in the order found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSpan {
    pub value: usize,
    pub rows: Vec<BitVector>,
    pub examined: u64,
}

/// Null-space accumulation for `η` on any check matrix.
///
/// At each size `k` the span is rebuilt from empty: every smaller support
/// set lies inside some `k`-set, so nothing is lost by the reset.
pub fn eta_span(check: &BitMatrix, budget: Option<u64>) -> Result<LocalSpan> {
    let n = qubits_of_check(check)?;
    let full = check.rank();
    if full == 0 {
        return Ok(LocalSpan {
            value: 0,
            rows: Vec::new(),
            examined: 0,
        });
    }
    let mut examined = 0u64;
    for k in 1..=n {
        let mut span = EchelonBasis::new(2 * n, full);
        let mut rows = Vec::with_capacity(full);
        for subset in Combinations::new(n, k) {
            spend(&mut examined, budget, k)?;
            let null = check.zero_columns(&subset)?.left_null_basis();
            for v in null.rows() {
                let row = check.left_mul(v)?;
                if !row.is_zero() && !span.contains(&row) {
                    span.insert(&row);
                    rows.push(row);
                }
            }
            if span.rank() == full {
                return Ok(LocalSpan {
                    value: k,
                    rows,
                    examined,
                });
            }
        }
    }
    unreachable!("S = all qubits recovers the whole row space")
}

/// `δ(G)` by subset rank drop, without a work limit.
pub fn delta(group: &StabilizerGroup) -> Result<LocalityReport> {
    delta_with_budget(group, None)
}

/// `δ(G)`, giving up after `budget` subsets with the bound reached so far.
pub fn delta_with_budget(group: &StabilizerGroup, budget: Option<u64>) -> Result<LocalityReport> {
    if group.is_trivial() {
        return Err(Error::UndefinedDelta);
    }
    let drop = delta_rank_drop(group.check_matrix(), budget)?;
    let witness = group.element_from_coefficients(&drop.coefficients)?;
    Ok(LocalityReport {
        kind: MetricKind::Delta,
        value: drop.value,
        witness: Witness::Element(witness),
        subsets_examined: drop.examined,
        method: Method::Algorithm,
        rank_drop: Some(drop.subset),
    })
}

/// `δ` of the row space spanned by an arbitrary generator list.
///
/// The list need not commute; the witness is the ordered product of the
/// generators selected by the null vector, so it may carry a phase.
pub fn delta_of_generators(
    n: usize,
    generators: &[PauliOperator],
    budget: Option<u64>,
) -> Result<LocalityReport> {
    let check = check_matrix_of(n, generators)?;
    let drop = delta_rank_drop(&check, budget)?;
    let witness = drop
        .coefficients
        .iter_ones()
        .try_fold(PauliOperator::identity(n), |acc, i| acc.multiply(&generators[i]))?;
    Ok(LocalityReport {
        kind: MetricKind::Delta,
        value: drop.value,
        witness: Witness::Element(witness),
        subsets_examined: drop.examined,
        method: Method::Algorithm,
        rank_drop: Some(drop.subset),
    })
}

/// `η(G)` by null-space accumulation. The trivial group has `η = 0`.
pub fn eta(group: &StabilizerGroup) -> Result<LocalityReport> {
    eta_with_budget(group, None)
}

pub fn eta_with_budget(group: &StabilizerGroup, budget: Option<u64>) -> Result<LocalityReport> {
    let span = eta_span(group.check_matrix(), budget)?;
    let witness = span
        .rows
        .iter()
        .map(|r| {
            group
                .element_from_row(r)?
                .ok_or_else(|| Error::Consistency(format!("row {r} is not in the row space of A")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LocalityReport {
        kind: MetricKind::Eta,
        value: span.value,
        witness: Witness::Generators(witness),
        subsets_examined: span.examined,
        method: Method::Algorithm,
        rank_drop: None,
    })
}

/// `δ(G)` as the least weight over all `2^m - 1` non-identity elements.
pub fn delta_oracle(group: &StabilizerGroup) -> Result<LocalityReport> {
    if group.is_trivial() {
        return Err(Error::UndefinedDelta);
    }
    let mut best: Option<PauliOperator> = None;
    let mut visited = 0u64;
    for g in group.enumerate()?.skip(1) {
        visited += 1;
        if best.as_ref().is_none_or(|b| g.weight() < b.weight()) {
            best = Some(g);
        }
    }
    let best = best.expect("nontrivial group has a non-identity element");
    Ok(LocalityReport {
        kind: MetricKind::Delta,
        value: best.weight(),
        witness: Witness::Element(best),
        subsets_examined: visited,
        method: Method::Oracle,
        rank_drop: None,
    })
}

/// `η(G)` by sorting all elements by weight and row-reducing in that order
/// until the span reaches rank `m`.
pub fn eta_oracle(group: &StabilizerGroup) -> Result<LocalityReport> {
    let m = group.num_generators();
    let mut elems: Vec<PauliOperator> = group.enumerate()?.skip(1).collect();
    let visited = elems.len() as u64;
    elems.sort_by_key(PauliOperator::weight);
    let mut span = EchelonBasis::new(2 * group.num_qubits(), m);
    let mut witness = Vec::with_capacity(m);
    let mut value = 0;
    for e in elems {
        if span.rank() == m {
            break;
        }
        let row = e.check_row();
        if !span.contains(&row) {
            span.insert(&row);
            value = e.weight();
            witness.push(e);
        }
    }
    Ok(LocalityReport {
        kind: MetricKind::Eta,
        value,
        witness: Witness::Generators(witness),
        subsets_examined: visited,
        method: Method::Oracle,
        rank_drop: None,
    })
}

/// Nonzero vectors of the row space of `check`, from a row basis.
fn row_space(check: &BitMatrix, cap: usize) -> Result<Vec<BitVector>> {
    let basis = check.echelon().rows.into_rows();
    if basis.len() > cap || basis.len() >= 64 {
        return Err(Error::Resource {
            what: "enumeration generator count",
            requested: basis.len(),
            cap,
        });
    }
    let mut out = Vec::with_capacity((1usize << basis.len()) - 1);
    let mut cur = BitVector::zeros(check.ncols());
    for k in 1u64..1 << basis.len() {
        cur.xor_assign(&basis[k.trailing_zeros() as usize]);
        out.push(cur.clone());
    }
    Ok(out)
}

fn row_weight(row: &BitVector, n: usize) -> usize {
    row.slice(0, n).or(&row.slice(n, n)).weight()
}

/// `δ` of a check matrix's row space by enumeration.
pub fn delta_oracle_rows(check: &BitMatrix) -> Result<usize> {
    let n = qubits_of_check(check)?;
    row_space(check, crate::stabilizer::DEFAULT_ENUMERATION_CAP)?
        .iter()
        .map(|r| row_weight(r, n))
        .min()
        .ok_or(Error::UndefinedDelta)
}

/// `η` of a check matrix's row space by enumeration.
pub fn eta_oracle_rows(check: &BitMatrix) -> Result<usize> {
    let n = qubits_of_check(check)?;
    let mut rows = row_space(check, crate::stabilizer::DEFAULT_ENUMERATION_CAP)?;
    let full = check.rank();
    rows.sort_by_key(|r| row_weight(r, n));
    let mut span = EchelonBasis::new(2 * n, full);
    let mut value = 0;
    for r in rows {
        if span.rank() == full {
            break;
        }
        if !span.contains(&r) {
            span.insert(&r);
            value = row_weight(&r, n);
        }
    }
    Ok(value)
}

/// Builds the check matrix of an arbitrary generator list.
pub fn check_matrix_of(n: usize, generators: &[PauliOperator]) -> Result<BitMatrix> {
    let rows = generators
        .iter()
        .map(|g| {
            if g.num_qubits() == n {
                Ok(g.check_row())
            } else {
                Err(Error::Dimension {
                    expected: n,
                    found: g.num_qubits(),
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    BitMatrix::from_rows(rows, 2 * n)
}

/// Decomposition of a group into its pure-X and pure-Z parts.
#[derive(Debug, Clone)]
pub struct CssSplit {
    /// Whether `G = G_X · G_Z`.
    pub is_split: bool,
    /// `G ∩ 𝒫_X`: elements with no Z part.
    pub gx: StabilizerGroup,
    /// `G ∩ 𝒫_Z`: elements with no X part.
    pub gz: StabilizerGroup,
    /// When every stored generator is already pure, the permutation listing
    /// X-type generators first then Z-type, each in original order. With
    /// this order the check matrix is block-diagonal.
    pub reordering: Option<Vec<usize>>,
}

fn pure_part(group: &StabilizerGroup, block_start: usize) -> StabilizerGroup {
    let n = group.num_qubits();
    // vᵀA_Z = 0 selects the pure-X elements, and symmetrically for Z
    let other = group.check_matrix().column_block(block_start, n);
    let gens: Vec<PauliOperator> = other
        .left_null_basis()
        .rows()
        .iter()
        .map(|v| group.element_from_coefficients(v).expect("coefficient length m"))
        .collect();
    StabilizerGroup::validate(n, &gens).expect("elements of a stabilizer group")
}

#[must_use]
pub fn css_split(group: &StabilizerGroup) -> CssSplit {
    let n = group.num_qubits();
    let gx = pure_part(group, n);
    let gz = pure_part(group, 0);
    // G_X ∩ G_Z = {1}, so G = G_X G_Z exactly when the ranks add up
    let is_split = gx.num_generators() + gz.num_generators() == group.num_generators();
    let gens = group.generators();
    let reordering = gens
        .iter()
        .all(|g| g.x().is_zero() || g.z().is_zero())
        .then(|| {
            let xs = (0..gens.len()).filter(|&i| gens[i].z().is_zero());
            let zs = (0..gens.len()).filter(|&i| !gens[i].z().is_zero());
            xs.chain(zs).collect()
        });
    CssSplit {
        is_split,
        gx,
        gz,
        reordering,
    }
}

/// Component metrics of an XZ-split group. `None` for a `δ` stands for the
/// trivial component, whose minimum weight is `+∞`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CssLocality {
    pub delta_x: Option<usize>,
    pub delta_z: Option<usize>,
    pub eta_x: usize,
    pub eta_z: usize,
    pub delta: Option<usize>,
    pub eta: usize,
}

fn optional_delta(group: &StabilizerGroup) -> Result<Option<usize>> {
    match delta(group) {
        Ok(r) => Ok(Some(r.value)),
        Err(Error::UndefinedDelta) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Metrics of `G`, `G_X` and `G_Z`, after checking
/// `δ(G) = min(δ(G_X), δ(G_Z))` and `η(G) = max(η(G_X), η(G_Z))`.
pub fn css_locality(group: &StabilizerGroup) -> Result<CssLocality> {
    let split = css_split(group);
    if !split.is_split {
        return Err(Error::Precondition(
            "group is not XZ-split: pure-X and pure-Z elements do not generate it".into(),
        ));
    }
    let out = CssLocality {
        delta_x: optional_delta(&split.gx)?,
        delta_z: optional_delta(&split.gz)?,
        eta_x: eta(&split.gx)?.value,
        eta_z: eta(&split.gz)?.value,
        delta: optional_delta(group)?,
        eta: eta(group)?.value,
    };
    let min_delta = match (out.delta_x, out.delta_z) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    if out.delta != min_delta {
        return Err(Error::Consistency(format!(
            "delta {:?} differs from min(delta_x, delta_z) = {min_delta:?}",
            out.delta
        )));
    }
    if out.eta != out.eta_x.max(out.eta_z) {
        return Err(Error::Consistency(format!(
            "eta {} differs from max(eta_x, eta_z) = {}",
            out.eta,
            out.eta_x.max(out.eta_z)
        )));
    }
    Ok(out)
}

/// Check rows signed `+`, for rendering a row-space witness with no group.
#[must_use]
pub fn unsigned_operator(row: &BitVector) -> PauliOperator {
    PauliOperator::from_check_row(row, Sign::Plus).expect("even-length check row")
}
