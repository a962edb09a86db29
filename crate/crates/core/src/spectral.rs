//! Dense spectral certificates for the locality theorems.
//!
//! Every check verifies its own hypotheses first and returns
//! [`Error::Precondition`] when they fail, so a certificate that reports a
//! violated bound always points at a real defect.
//!
//! The distance `‖Π_G − Π_H‖` used by [`check_gap_pinch`] is the norm
//! induced by `Tr(A B†)`, i.e. the Frobenius norm, even though it is
//! customarily called the trace norm in this setting.

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dense::{frobenius_norm, trace_product, CMatrix, C64};
use crate::error::{Error, Result};
use crate::f2::{BitVector, Combinations};
use crate::locality::delta;
use crate::pauli::{Letter, PauliOperator, PauliSum, Sign};
use crate::stabilizer::{GroupExtension, Membership, StabilizerGroup};

/// Relative tolerance for classifying eigenvalues, scaled by `max(1, ‖E‖)`.
pub const CLASSIFY_TOLERANCE: f64 = 1e-8;
/// Tolerance on trace identities, scaled by `max(1, ‖E‖)`.
pub const TRACE_TOLERANCE: f64 = 1e-9;
/// Least admissible slack of a certified inequality.
pub const SLACK_TOLERANCE: f64 = 1e-9;
/// Spectral gaps in `(tol, AMBIGUITY_FACTOR · tol]` are too close to call.
pub const AMBIGUITY_FACTOR: f64 = 100.0;

/// Full eigendecomposition of a Hamiltonian, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct SpectralReport {
    pub eigenvalues: Vec<f64>,
    /// Column `i` is the eigenvector of `eigenvalues[i]`.
    pub eigenvectors: CMatrix,
    /// `‖E‖₂ = Tr(H²)^{1/2}`.
    pub e_norm: f64,
    /// Absolute tolerance `1e-8 · max(1, ‖E‖₂)`.
    pub tolerance: f64,
}

/// Hermitian eigendecomposition of a dense matrix, read from its lower
/// triangle.
pub fn diagonalize_dense(h: &CMatrix) -> Result<SpectralReport> {
    let dim = h.nrows();
    let m = faer::Mat::<C64>::from_fn(dim, dim, |r, c| h[(r, c)]);
    let eig = m
        .self_adjoint_eigen(faer::Side::Lower)
        .map_err(|e| Error::Consistency(format!("eigensolver failed: {e:?}")))?;
    let eigenvalues: Vec<f64> = eig.S().column_vector().iter().map(|z| z.re).collect();
    let u = eig.U();
    let eigenvectors = CMatrix::from_fn(dim, dim, |r, c| u[(r, c)]);
    if eigenvalues.iter().any(|e| !e.is_finite()) {
        return Err(Error::Consistency("eigensolver returned non-finite eigenvalues".into()));
    }
    let e_norm = eigenvalues.iter().map(|e| e * e).sum::<f64>().sqrt();
    Ok(SpectralReport {
        eigenvalues,
        eigenvectors,
        e_norm,
        tolerance: CLASSIFY_TOLERANCE * e_norm.max(1.0),
    })
}

/// Diagonalizes `h` densely, subject to the default qubit cap.
pub fn diagonalize(h: &PauliSum) -> Result<SpectralReport> {
    diagonalize_dense(&h.to_dense()?)
}

impl SpectralReport {
    #[must_use]
    pub fn dimension(&self) -> usize {
        self.eigenvalues.len()
    }

    #[must_use]
    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Multiplicity of `E₀` within tolerance.
    #[must_use]
    pub fn ground_dim(&self) -> usize {
        let e0 = self.ground_energy();
        self.eigenvalues.iter().take_while(|&&e| e - e0 <= self.tolerance).count()
    }

    /// `E_q − E₀`, when `q` is a valid index.
    #[must_use]
    pub fn gap(&self, q: usize) -> Option<f64> {
        self.eigenvalues.get(q).map(|e| e - self.ground_energy())
    }

    /// Projector onto the span of the eigenvectors selected by `keep`.
    fn projector_where(&self, keep: impl Fn(usize, f64) -> bool) -> CMatrix {
        let d = self.dimension();
        let mut p = CMatrix::zeros(d, d);
        for (i, &e) in self.eigenvalues.iter().enumerate() {
            if keep(i, e) {
                let v = self.eigenvectors.column(i);
                p += v * v.adjoint();
            }
        }
        p
    }

    /// Projector onto the ground eigenspace.
    #[must_use]
    pub fn ground_projector(&self) -> CMatrix {
        let g = self.ground_dim();
        self.projector_where(|i, _| i < g)
    }

    /// Projector onto `𝒱₋`, eigenvalues below `-tolerance`.
    #[must_use]
    pub fn negative_projector(&self) -> CMatrix {
        let tol = self.tolerance;
        self.projector_where(|_, e| e < -tol)
    }

    /// Projector onto `𝒱₀`, eigenvalues within `tolerance` of zero.
    #[must_use]
    pub fn zero_projector(&self) -> CMatrix {
        let tol = self.tolerance;
        self.projector_where(|_, e| e.abs() <= tol)
    }

    /// Projector onto `𝒱₊`, eigenvalues above `tolerance`.
    #[must_use]
    pub fn positive_projector(&self) -> CMatrix {
        let tol = self.tolerance;
        self.projector_where(|_, e| e > tol)
    }
}

/// Every Pauli pattern of weight `1..=k` supported on `qubits`, by weight,
/// then subset, then letters in `X, Y, Z` order.
fn local_patterns(n: usize, qubits: &[usize], k: usize) -> Vec<PauliOperator> {
    let mut out = Vec::new();
    for w in 1..=k {
        for subset in Combinations::new(qubits.len(), w) {
            for code in 0..3usize.pow(w as u32) {
                let mut letters = vec![Letter::I; n];
                let mut c = code;
                for &pos in &subset {
                    letters[qubits[pos]] = [Letter::X, Letter::Y, Letter::Z][c % 3];
                    c /= 3;
                }
                out.push(PauliOperator::from_letters(&letters, Sign::Plus));
            }
        }
    }
    out
}

/// A traceless `k`-local Hamiltonian with an independent uniform `[-1, 1]`
/// coefficient on every Pauli pattern of weight `1..=k`.
pub fn random_local_hamiltonian(n: usize, k: usize, seed: u64) -> Result<PauliSum> {
    let all: Vec<usize> = (0..n).collect();
    random_local_hamiltonian_on(n, &all, k, seed)
}

/// As [`random_local_hamiltonian`], acting only on `qubits`.
pub fn random_local_hamiltonian_on(n: usize, qubits: &[usize], k: usize, seed: u64) -> Result<PauliSum> {
    if k == 0 || k > qubits.len() {
        return Err(Error::Precondition(format!(
            "locality k = {k} must lie in 1..={}",
            qubits.len()
        )));
    }
    let mut seen = vec![false; n];
    for &q in qubits {
        if q >= n {
            return Err(Error::IndexOutOfRange { index: q, bound: n });
        }
        if std::mem::replace(&mut seen[q], true) {
            return Err(Error::Validation(format!("qubit {} listed twice", q + 1)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = PauliSum::zero(n);
    for p in local_patterns(n, qubits, k) {
        h.add_term(rng.random_range(-1.0..=1.0), &p)?;
    }
    Ok(h)
}

fn require_traceless_local(h: &PauliSum, n: usize, max_locality: usize, what: &str) -> Result<()> {
    if h.num_qubits() != n {
        return Err(Error::Dimension {
            expected: n,
            found: h.num_qubits(),
        });
    }
    if !h.is_traceless() {
        return Err(Error::Precondition("Hamiltonian has an identity component".into()));
    }
    if h.locality() > max_locality {
        return Err(Error::Precondition(format!(
            "Hamiltonian is {}-local but {what} allows at most {max_locality}",
            h.locality()
        )));
    }
    Ok(())
}

fn real_trace(a: &CMatrix, b: &CMatrix) -> f64 {
    trace_product(a, b).re
}

/// Orthonormal basis of the image of a projector, as columns.
fn image_basis(p: &CMatrix) -> Result<CMatrix> {
    let eig = diagonalize_dense(p)?;
    let keep: Vec<usize> = (0..eig.dimension()).filter(|&i| eig.eigenvalues[i] > 0.5).collect();
    Ok(CMatrix::from_fn(p.nrows(), keep.len(), |r, c| eig.eigenvectors[(r, keep[c])]))
}

/// Evidence that a codespace is not contained in the negative eigenspace
/// of a Hamiltonian less local than `δ(G)`.
#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Certificate {
    /// `None` for the trivial group, whose `δ` is unbounded.
    pub delta: Option<usize>,
    pub locality: usize,
    /// `Tr(Π_G H)`.
    pub trace: f64,
    pub e_norm: f64,
    pub trace_tolerance: f64,
    pub trace_ok: bool,
    /// `⟨ψ|H|ψ⟩` for the codespace witness `ψ`.
    pub witness_energy: f64,
    /// `‖Π_G ψ − ψ‖`.
    pub witness_residual: f64,
    pub witness_ok: bool,
    #[serde(skip)]
    pub witness: DVector<C64>,
}

impl Theorem1Certificate {
    #[must_use]
    pub fn passed(&self) -> bool {
        self.trace_ok && self.witness_ok
    }
}

/// `Tr(Π_G H) = 0` for traceless `H` that is less local than `δ(G)`,
/// plus a codespace vector `ψ` with `⟨ψ|H|ψ⟩ ≥ 0`: the top eigenvector of
/// `H` compressed to the codespace.
pub fn check_theorem1(group: &StabilizerGroup, h: &PauliSum) -> Result<Theorem1Certificate> {
    let n = group.num_qubits();
    let d = match delta(group) {
        Ok(r) => Some(r.value),
        Err(Error::UndefinedDelta) => None,
        Err(e) => return Err(e),
    };
    require_traceless_local(h, n, d.map_or(n, |d| d - 1), "delta(G) - 1")?;
    let pi = group.projector()?;
    let hd = h.to_dense()?;
    let e_norm = frobenius_norm(&hd);
    let trace = real_trace(&pi, &hd);
    let trace_tolerance = TRACE_TOLERANCE * e_norm.max(1.0);

    let v = image_basis(&pi)?;
    let compressed = v.adjoint() * &hd * &v;
    let inner = diagonalize_dense(&compressed)?;
    let top = inner.dimension() - 1;
    let witness: DVector<C64> = &v * inner.eigenvectors.column(top);
    let witness_energy = (witness.adjoint() * &hd * &witness)[(0, 0)].re;
    let witness_residual = (&pi * &witness - &witness).norm();
    Ok(Theorem1Certificate {
        delta: d,
        locality: h.locality(),
        trace,
        e_norm,
        trace_tolerance,
        trace_ok: trace.abs() <= trace_tolerance,
        witness_energy,
        witness_residual,
        witness_ok: witness_energy >= -SLACK_TOLERANCE && witness_residual <= CLASSIFY_TOLERANCE,
        witness,
    })
}

/// `Tr(Π_G H) = Tr(Π_{G(b)} H)` for one sign pattern.
#[derive(Debug, Clone, Serialize)]
pub struct Theorem2Certificate {
    pub nu: usize,
    pub s: usize,
    pub t: usize,
    pub b: String,
    pub trace_g: f64,
    pub trace_gb: f64,
    pub difference: f64,
    pub tolerance: f64,
    pub holds: bool,
    /// Terms `σ` of `H` with `σ` or `−σ` in `G`.
    pub case1_terms: usize,
    /// Terms with neither `σ` nor `−σ` in `G`.
    pub case2_terms: usize,
}

fn extension_below_eta(group: &StabilizerGroup, nu: usize) -> Result<GroupExtension> {
    let ext = GroupExtension::new(group, nu)?;
    if !ext.nu_below_eta() {
        return Err(Error::Precondition(format!(
            "nu = {nu} is not below eta(G): the {nu}-local elements generate G"
        )));
    }
    Ok(ext)
}

pub fn check_theorem2(group: &StabilizerGroup, nu: usize, b: &BitVector, h: &PauliSum) -> Result<Theorem2Certificate> {
    let n = group.num_qubits();
    let ext = extension_below_eta(group, nu)?;
    require_traceless_local(h, n, nu, "nu")?;
    let gb = ext.apply(b)?;
    let hd = h.to_dense()?;
    let trace_g = real_trace(&group.projector()?, &hd);
    let trace_gb = real_trace(&gb.projector()?, &hd);
    let tolerance = TRACE_TOLERANCE * frobenius_norm(&hd).max(1.0);
    let mut case1_terms = 0;
    for (_, sigma) in h.terms() {
        if group.membership(&sigma)? != Membership::Neither {
            case1_terms += 1;
        }
    }
    let difference = (trace_g - trace_gb).abs();
    Ok(Theorem2Certificate {
        nu,
        s: ext.s(),
        t: ext.t(),
        b: b.to_string(),
        trace_g,
        trace_gb,
        difference,
        tolerance,
        holds: difference <= tolerance,
        case1_terms,
        case2_terms: h.len() - case1_terms,
    })
}

/// Whether the codespaces of all sign-flipped extensions span the full
/// Hilbert space.
#[derive(Debug, Clone, Serialize)]
pub struct SpanCertificate {
    pub nu: usize,
    pub s: usize,
    pub t: usize,
    pub extensions: usize,
    /// Rank of `Σ_b Π_{G(b)}` at tolerance.
    pub rank: usize,
    pub dimension: usize,
    pub spans: bool,
    /// Recorded when the span is complete.
    pub conclusion: Option<String>,
}

/// Sums the codespace projectors of every `G(b)`, for any `ν`. With
/// `s = t` there is one extension, `G` itself.
pub fn extension_span(group: &StabilizerGroup, nu: usize, max_sign_bits: usize) -> Result<SpanCertificate> {
    let ext = GroupExtension::new(group, nu)?;
    let dim = 1usize << group.num_qubits();
    let mut sum = CMatrix::zeros(dim, dim);
    let mut extensions = 0;
    for b in ext.bitstrings(max_sign_bits)? {
        sum += ext.apply(&b)?.projector()?;
        extensions += 1;
    }
    let eig = diagonalize_dense(&sum)?;
    let rank = eig.eigenvalues.iter().filter(|&&e| e > eig.tolerance).count();
    let spans = rank == dim;
    Ok(SpanCertificate {
        nu,
        s: ext.s(),
        t: ext.t(),
        extensions,
        rank,
        dimension: dim,
        spans,
        conclusion: spans.then(|| {
            format!("the codespace of G is not the ground eigenspace of any traceless {nu}-local Hamiltonian")
        }),
    })
}

/// [`extension_span`] restricted to `ν < η(G)`.
pub fn check_corollary3_span(group: &StabilizerGroup, nu: usize, max_sign_bits: usize) -> Result<SpanCertificate> {
    extension_below_eta(group, nu)?;
    extension_span(group, nu, max_sign_bits)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct BoundInputs {
    pub q: usize,
    pub r: usize,
    pub e_norm: f64,
    /// `E₀ + ⋯ + E_{r−1}`.
    pub partial_sum: f64,
    pub e0: f64,
    /// `E_q − E₀`.
    pub delta_e: f64,
}

/// One side-by-side evaluation of an inequality `lhs ≥ rhs`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BoundEvaluation {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub satisfied: bool,
    pub inputs: BoundInputs,
}

impl BoundEvaluation {
    fn new(lhs: f64, rhs: f64, inputs: BoundInputs) -> Self {
        let slack = lhs - rhs;
        Self {
            lhs,
            rhs,
            slack,
            satisfied: slack >= -SLACK_TOLERANCE,
            inputs,
        }
    }
}

/// `Tr(Π_G H) = (q/r) Tr(Π_{G_ν} H)` for `ν`-local `H`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TraceIdentity {
    pub lhs: f64,
    pub rhs: f64,
    pub difference: f64,
    pub tolerance: f64,
    pub holds: bool,
}

pub fn trace_identity(group: &StabilizerGroup, nu: usize, h: &PauliSum) -> Result<TraceIdentity> {
    require_traceless_local(h, group.num_qubits(), nu, "nu")?;
    let local = group.subgroup_nu(nu)?;
    let hd = h.to_dense()?;
    let q = 2f64.powi(group.logical_qubits() as i32);
    let r = 2f64.powi(local.logical_qubits() as i32);
    let lhs = real_trace(&group.projector()?, &hd);
    let rhs = q / r * real_trace(&local.projector()?, &hd);
    let tolerance = TRACE_TOLERANCE * frobenius_norm(&hd).max(1.0);
    let difference = (lhs - rhs).abs();
    Ok(TraceIdentity {
        lhs,
        rhs,
        difference,
        tolerance,
        holds: difference <= tolerance,
    })
}

/// Distance between the codespace and the ground space of an over-local
/// Hamiltonian, against its two lower bounds.
#[derive(Debug, Clone, Serialize)]
pub struct GapPinchCertificate {
    pub nu: usize,
    pub q: usize,
    pub r: usize,
    pub ground_dim: usize,
    /// `‖Π_G − Π_H‖` in the Frobenius norm.
    pub distance: f64,
    /// `(q/‖E‖)(mean(E₀..E_{r−1}) − E₀)`.
    pub theorem: BoundEvaluation,
    /// `q ((r−q)/r) ΔE / ‖E‖²`.
    pub corollary: BoundEvaluation,
    pub trace_identity: TraceIdentity,
}

impl GapPinchCertificate {
    #[must_use]
    pub fn passed(&self) -> bool {
        self.theorem.satisfied && self.corollary.satisfied && self.trace_identity.holds
    }
}

pub fn check_gap_pinch(group: &StabilizerGroup, nu: usize, h: &PauliSum) -> Result<GapPinchCertificate> {
    let n = group.num_qubits();
    let ext = extension_below_eta(group, nu)?;
    require_traceless_local(h, n, nu, "nu")?;
    let spectrum = diagonalize(h)?;
    let q = 1usize << group.logical_qubits();
    let r = 1usize << (n - ext.s());

    let ground_dim = spectrum.ground_dim();
    let delta_e = spectrum.gap(q).unwrap_or(0.0);
    if ground_dim != q {
        return Err(Error::Precondition(format!(
            "ground space has dimension {ground_dim}, the codespace has {q}"
        )));
    }
    if delta_e <= AMBIGUITY_FACTOR * spectrum.tolerance {
        return Err(Error::Precondition(format!(
            "gap {delta_e:e} is within {AMBIGUITY_FACTOR} tolerances of zero; ground dimension is ambiguous"
        )));
    }

    let distance = frobenius_norm(&(group.projector()? - spectrum.ground_projector()));
    let e0 = spectrum.ground_energy();
    let partial_sum: f64 = spectrum.eigenvalues[..r].iter().sum();
    let inputs = BoundInputs {
        q,
        r,
        e_norm: spectrum.e_norm,
        partial_sum,
        e0,
        delta_e,
    };
    let (qf, rf) = (q as f64, r as f64);
    let theorem_rhs = qf / spectrum.e_norm * (partial_sum / rf - e0);
    let corollary_rhs = qf * ((rf - qf) / rf) * delta_e / (spectrum.e_norm * spectrum.e_norm);
    Ok(GapPinchCertificate {
        nu,
        q,
        r,
        ground_dim,
        distance,
        theorem: BoundEvaluation::new(distance, theorem_rhs, inputs),
        corollary: BoundEvaluation::new(distance, corollary_rhs, inputs),
        trace_identity: trace_identity(group, nu, h)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::dense::{max_abs_diff, trace};
    use crate::pauli::pauli_decompose;
    use crate::stabilizer::random_stabilizer_group;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    fn sum(terms: &[(f64, &str)]) -> PauliSum {
        let n = p(terms[0].1).num_qubits();
        let mut h = PauliSum::zero(n);
        for &(c, s) in terms {
            h.add_term(c, &p(s)).unwrap();
        }
        h
    }

    #[test]
    fn diagonalize_small_cases() {
        let r = diagonalize(&sum(&[(-1.0, "+Z")])).unwrap();
        assert!((r.eigenvalues[0] + 1.0).abs() < 1e-12 && (r.eigenvalues[1] - 1.0).abs() < 1e-12);
        let code = PauliSum::code_hamiltonian(catalog::example_commuting().generators()).unwrap();
        let r = diagonalize(&code).unwrap();
        assert!((r.ground_energy() + 2.0).abs() < 1e-10);
        assert_eq!(r.ground_dim(), 2);
        let zero = diagonalize(&PauliSum::zero(2)).unwrap();
        assert!(zero.eigenvalues.iter().all(|e| *e == 0.0));
        assert!(max_abs_diff(&zero.zero_projector(), &CMatrix::identity(4, 4)) < 1e-12);
    }

    #[test]
    fn diagonalizes_exactly_degenerate_projectors() {
        let g = crate::surface::toric(2).unwrap().build_code().unwrap();
        let p = g.projector().unwrap();
        let r = diagonalize_dense(&p).unwrap();
        assert!(r.eigenvalues.iter().all(|e| e.is_finite()));
        assert_eq!(r.eigenvalues.iter().filter(|&&e| e > 0.5).count(), 4);
        let v = image_basis(&p).unwrap();
        assert!(max_abs_diff(&(&v * v.adjoint()), &p) < 1e-10);
    }

    #[test]
    fn spectral_report_invariants() {
        for seed in 0..10 {
            let h = random_local_hamiltonian(4, 2, seed).unwrap();
            let hd = h.to_dense().unwrap();
            let r = diagonalize(&h).unwrap();
            assert!(r.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
            let tr: f64 = r.eigenvalues.iter().sum();
            assert!((tr - trace(&hd).re).abs() < 1e-8);
            let tr2 = trace(&(&hd * &hd)).re;
            let sq: f64 = r.eigenvalues.iter().map(|e| e * e).sum();
            assert!((sq - tr2).abs() <= 1e-6 * tr2);
            let coeff_sq: f64 = h.terms().map(|(c, _)| c * c).sum();
            assert!((r.e_norm.powi(2) - 16.0 * coeff_sq).abs() < 1e-8 * tr2);
            let total = r.negative_projector() + r.zero_projector() + r.positive_projector();
            assert!(max_abs_diff(&total, &CMatrix::identity(16, 16)) < 1e-8);
            let g = r.ground_projector();
            assert!(max_abs_diff(&(&g * &g), &g) < 1e-8);
        }
    }

    #[test]
    fn random_hamiltonians_are_local_and_seeded() {
        let h = random_local_hamiltonian(3, 1, 5).unwrap();
        assert_eq!(h.len(), 9);
        assert_eq!(h.locality(), 1);
        assert!(h.is_traceless());
        assert_eq!(h, random_local_hamiltonian(3, 1, 5).unwrap());
        assert_ne!(h, random_local_hamiltonian(3, 1, 6).unwrap());
        assert!(h.terms().all(|(c, _)| (-1.0..=1.0).contains(&c)));
        let full = random_local_hamiltonian(3, 3, 1).unwrap();
        assert_eq!(full.len(), 63);
        let back = pauli_decompose(&full.to_dense().unwrap()).unwrap();
        for (c, op) in full.terms() {
            assert!((back.coefficient(&op) - c).abs() < 1e-10);
        }
        let on = random_local_hamiltonian_on(4, &[1, 3], 2, 0).unwrap();
        assert!(on.terms().all(|(_, op)| op.support().iter().all(|q| [1, 3].contains(q))));
        assert!(random_local_hamiltonian(3, 0, 0).is_err());
        assert!(random_local_hamiltonian(3, 4, 0).is_err());
        assert!(random_local_hamiltonian_on(3, &[1, 1], 1, 0).is_err());
    }

    #[test]
    fn theorem1_on_example() {
        let g = catalog::example_commuting();
        for seed in 0..50 {
            let h = random_local_hamiltonian(3, 1, seed).unwrap();
            let c = check_theorem1(&g, &h).unwrap();
            assert!(c.passed(), "{c:?}");
        }
        let zero = check_theorem1(&g, &PauliSum::zero(3)).unwrap();
        assert!(zero.passed() && zero.trace == 0.0);
    }

    #[test]
    fn theorem1_gates_on_locality() {
        let zz = StabilizerGroup::validate(2, &[p("+ZZ")]).unwrap();
        let err = check_theorem1(&zz, &sum(&[(-1.0, "+ZZ")])).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        let err = check_theorem1(&zz, &sum(&[(1.0, "+II"), (1.0, "+ZI")])).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn theorem2_on_bell() {
        let bell = catalog::bell();
        for seed in 0..20 {
            let h = random_local_hamiltonian(2, 1, seed).unwrap();
            for bits in ["00", "01", "10", "11"] {
                let b = BitVector::parse(bits).unwrap();
                let c = check_theorem2(&bell, 1, &b, &h).unwrap();
                assert!(c.holds, "{c:?}");
                assert_eq!((c.case1_terms, c.case2_terms), (0, 6));
            }
        }
        let h = random_local_hamiltonian(2, 1, 0).unwrap();
        let c = check_theorem2(&bell, 1, &BitVector::zeros(2), &h).unwrap();
        assert_eq!(c.difference, 0.0);
        assert!(matches!(
            check_theorem2(&bell, 2, &BitVector::zeros(0), &h),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn theorem2_case_split() {
        let ghz = catalog::ghz(3);
        let b = BitVector::parse("1").unwrap();
        let member = sum(&[(0.7, "+ZZI")]);
        let c = check_theorem2(&ghz, 2, &b, &member).unwrap();
        assert_eq!((c.case1_terms, c.case2_terms), (1, 0));
        assert!((c.trace_g - 0.7).abs() < 1e-12 && c.holds);
        let stranger = sum(&[(0.7, "+XZI")]);
        let c = check_theorem2(&ghz, 2, &b, &stranger).unwrap();
        assert_eq!((c.case1_terms, c.case2_terms), (0, 1));
        assert!(c.trace_g.abs() < 1e-12 && c.trace_gb.abs() < 1e-12);
    }

    #[test]
    fn corollary3_spans() {
        let bell = check_corollary3_span(&catalog::bell(), 1, 16).unwrap();
        assert_eq!((bell.extensions, bell.rank, bell.spans), (4, 4, true));
        assert!(bell.conclusion.is_some());
        let ghz = check_corollary3_span(&catalog::ghz(3), 2, 16).unwrap();
        assert_eq!((ghz.extensions, ghz.rank, ghz.spans), (2, 2, false));
        let whole = extension_span(&catalog::ghz(3), 3, 16).unwrap();
        assert_eq!((whole.s, whole.t, whole.extensions, whole.rank), (3, 3, 1, 1));
        assert!(check_corollary3_span(&catalog::ghz(3), 3, 16).is_err());
        assert!(matches!(
            check_corollary3_span(&catalog::bell(), 1, 1),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn gap_pinch_on_bell() {
        let bell = catalog::bell();
        for seed in 0..30 {
            let h = random_local_hamiltonian(2, 1, seed).unwrap();
            let c = check_gap_pinch(&bell, 1, &h).unwrap();
            assert!(c.passed(), "{c:?}");
            assert_eq!((c.q, c.r), (1, 4));
        }
    }

    #[test]
    fn gap_pinch_with_degenerate_codespace() {
        let g = catalog::example_commuting();
        for seed in 0..20 {
            // acting on two of three qubits leaves a twofold ground space
            let h = random_local_hamiltonian_on(3, &[0, 1], 1, seed).unwrap();
            let c = check_gap_pinch(&g, 1, &h).unwrap();
            assert!(c.theorem.satisfied && c.trace_identity.holds, "{c:?}");
            assert_eq!((c.q, c.r, c.ground_dim), (2, 8, 2));
        }
    }

    #[test]
    fn gap_pinch_rejects_wrong_ground_dimension() {
        let ghz = catalog::ghz(3);
        // −ZZI − IZZ has a twofold ground space, larger than q = 1
        let h = sum(&[(-1.0, "+ZZI"), (-1.0, "+IZZ")]);
        assert!(matches!(check_gap_pinch(&ghz, 2, &h), Err(Error::Precondition(_))));
        let h = random_local_hamiltonian(3, 2, 0).unwrap();
        assert!(matches!(check_gap_pinch(&ghz, 3, &h), Err(Error::Precondition(_))));
    }

    #[test]
    fn corollary_is_not_scale_invariant() {
        // The theorem's bound is invariant under H → cH; the corollary's
        // right side scales as 1/c and eventually exceeds the distance.
        let bell = catalog::bell();
        let h = random_local_hamiltonian(2, 1, 3).unwrap();
        let small = h.scaled(1e-3);
        let big = check_gap_pinch(&bell, 1, &h).unwrap();
        let tiny = check_gap_pinch(&bell, 1, &small).unwrap();
        assert!((big.theorem.rhs - tiny.theorem.rhs).abs() < 1e-9);
        assert!(tiny.theorem.satisfied);
        assert!(!tiny.corollary.satisfied);
        // dividing by ‖E‖ once instead of twice is what the theorem supports
        let i = tiny.corollary.inputs;
        let once = i.q as f64 * ((i.r - i.q) as f64 / i.r as f64) * i.delta_e / i.e_norm;
        assert!(tiny.distance >= once - SLACK_TOLERANCE);
    }

    #[test]
    fn trace_identity_on_random_groups() {
        for seed in 0..20 {
            let g = random_stabilizer_group(4, 3, seed);
            let eta = crate::locality::eta(&g).unwrap().value;
            for nu in 1..eta {
                let h = random_local_hamiltonian(4, nu, seed).unwrap();
                let t = trace_identity(&g, nu, &h).unwrap();
                assert!(t.holds, "{t:?}");
            }
        }
    }
}
