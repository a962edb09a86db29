use std::fs;
use std::path::{Path, PathBuf};

use serde_json::json;
use stabloc::locality::{
    self, check_matrix_of, css_locality, delta_oracle_rows, eta_oracle_rows, eta_span, unsigned_operator,
    LocalityReport,
};
use stabloc::pauli::PauliSum;
use stabloc::spectral::{
    check_corollary3_span, check_gap_pinch, check_theorem1, check_theorem2, random_local_hamiltonian,
    random_local_hamiltonian_on, SLACK_TOLERANCE, TRACE_TOLERANCE,
};
use stabloc::stabilizer::text::CheckMatrixFile;
use stabloc::stabilizer::text::write_check_matrix;
use stabloc::surface::{self, Cellulation};
use stabloc::{BitVector, Error, GroupExtension, PauliOperator, StabilizerGroup};

use crate::report::RunReport;
use crate::SurfaceSource;

/// Largest sign-bit count for which every extension is tried.
const MAX_SIGN_BITS: usize = 12;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{}: {source}", .path.display())]
    InFile { path: PathBuf, source: Error },
    #[error("cannot read {}: {source}", .path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {}: {source}", .path.display())]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for bad input, 2 for an inapplicable hypothesis or exhausted
    /// resources, 3 for an internal consistency failure.
    pub fn exit_code(&self) -> u8 {
        let core = match self {
            Self::Core(e) | Self::InFile { source: e, .. } => e,
            Self::Read { .. } | Self::Write { .. } | Self::Usage(_) => return 1,
        };
        match core {
            Error::Precondition(_) | Error::BudgetExceeded { .. } | Error::Resource { .. } | Error::UndefinedDelta => 2,
            Error::Consistency(_) => 3,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn load_check_file(path: &Path) -> Result<CheckMatrixFile> {
    CheckMatrixFile::parse(&read(path)?).map_err(|source| CliError::InFile {
        path: path.to_path_buf(),
        source,
    })
}

fn load_group(path: &Path) -> Result<StabilizerGroup> {
    let file = load_check_file(path)?;
    StabilizerGroup::validate(file.n, &file.generators).map_err(|source| CliError::InFile {
        path: path.to_path_buf(),
        source,
    })
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

fn set_text(indices: &[usize]) -> String {
    let items: Vec<String> = one_based(indices).iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn op_list(ops: &[PauliOperator]) -> Vec<String> {
    ops.iter().map(ToString::to_string).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Delta,
    Eta,
}

/// `delta` and `eta` on a check-matrix file. A file whose generators do
/// not commute is still accepted: the metric is taken over the row space
/// of its check matrix, without signs.
pub fn metric(kind: Metric, path: &Path, oracle: bool, budget: Option<u64>) -> Result<RunReport> {
    let name = match kind {
        Metric::Delta => "delta",
        Metric::Eta => "eta",
    };
    let mut report = RunReport::new(name);
    let file = load_check_file(path)?;
    report.input("path", path.display().to_string());
    report.input("n", file.n);
    report.input("generators", op_list(&file.generators));
    report.input("oracle", oracle);
    report.input("budget", budget);

    report.phase("algorithm");
    let group = match StabilizerGroup::validate(file.n, &file.generators) {
        Ok(g) => Some(g),
        Err(Error::NonCommuting { first, second }) => {
            eprintln!(
                "note: generators {} and {} anticommute; using the row space of the check matrix",
                first + 1,
                second + 1
            );
            None
        }
        Err(source) => {
            return Err(CliError::InFile {
                path: path.to_path_buf(),
                source,
            })
        }
    };
    report.result("commuting", group.is_some());

    let computed: LocalityReport = match (&group, kind) {
        (Some(g), Metric::Delta) => locality::delta_with_budget(g, budget)?,
        (Some(g), Metric::Eta) => locality::eta_with_budget(g, budget)?,
        (None, Metric::Delta) => locality::delta_of_generators(file.n, &file.generators, budget)?,
        (None, Metric::Eta) => {
            let check = check_matrix_of(file.n, &file.generators)?;
            let span = eta_span(&check, budget)?;
            LocalityReport {
                kind: locality::MetricKind::Eta,
                value: span.value,
                witness: locality::Witness::Generators(span.rows.iter().map(unsigned_operator).collect()),
                subsets_examined: span.examined,
                method: locality::Method::Algorithm,
                rank_drop: None,
            }
        }
    };
    report.result("value", computed.value);
    report.result("subsets_examined", computed.subsets_examined);
    let mut detail = Vec::new();
    if let Some(w) = computed.element() {
        report.result("witness", w.to_string());
        detail.push(format!("witness = {w}"));
    }
    if let Some(gens) = computed.generators() {
        report.result("witness", op_list(gens));
        detail.push(format!("generators = {}", op_list(gens).join(", ")));
    }
    if let Some(s) = &computed.rank_drop {
        report.result("rank_drop", one_based(s));
        detail.push(format!("rank drop at S = {}", set_text(s)));
    }
    detail.push(format!("subsets examined = {}", computed.subsets_examined));

    let mut headline = format!("{name} = {}", computed.value);
    if oracle {
        report.phase("oracle");
        let expected = match (&group, kind) {
            (Some(g), Metric::Delta) => locality::delta_oracle(g)?.value,
            (Some(g), Metric::Eta) => locality::eta_oracle(g)?.value,
            (None, Metric::Delta) => delta_oracle_rows(&check_matrix_of(file.n, &file.generators)?)?,
            (None, Metric::Eta) => eta_oracle_rows(&check_matrix_of(file.n, &file.generators)?)?,
        };
        report.result("oracle_value", expected);
        let agrees = expected == computed.value;
        headline.push_str(&if agrees {
            " (oracle agrees)".to_string()
        } else {
            format!(" (oracle disagrees: {expected})")
        });
        report.line(headline);
        for d in detail {
            report.line(d);
        }
        report.verdict("oracle_agrees", agrees, expected, 0);
    } else {
        report.line(headline);
        for d in detail {
            report.line(d);
        }
    }
    Ok(report)
}

pub fn surface(source: &SurfaceSource, emit: Option<&Path>) -> Result<RunReport> {
    let mut report = RunReport::new("surface");
    report.phase("build");
    let cell = match source {
        SurfaceSource::Toric { l } => {
            report.input("source", "toric");
            report.input("l", l);
            surface::toric(*l)?
        }
        SurfaceSource::From { path } => {
            report.input("source", "file");
            report.input("path", path.display().to_string());
            Cellulation::parse(&read(path)?).map_err(|source| CliError::InFile {
                path: path.clone(),
                source,
            })?
        }
        SurfaceSource::Counterexample => {
            report.input("source", "counterexample");
            surface::valence_counterexample()
        }
    };
    report.input("emit", emit.map(|p| p.display().to_string()));

    let listed = cell.code_generators();
    let group = cell.build_code()?;
    let n = group.num_qubits();
    let k = group.logical_qubits();
    let dim_h1 = cell.dim_h1();
    let min_face = cell.face_sizes().into_iter().min().unwrap_or(0);
    report.result("vertices", cell.num_vertices());
    report.result("edges", cell.num_edges());
    report.result("faces", cell.num_faces());
    report.result("euler_characteristic", cell.euler_characteristic());
    report.result("dim_h1", dim_h1);
    report.result("n", n);
    report.result("m", group.num_generators());
    report.result("generators_listed", listed.len());
    report.result("logical_qubits", k);
    report.result("q", group.codespace_dim());
    report.result("min_valence", cell.min_valence());
    report.result("min_face_size", min_face);

    report.line(format!("n = {n}"));
    report.line(format!("m = {} ({} listed)", group.num_generators(), listed.len()));
    match group.codespace_dim() {
        Some(q) => report.line(format!("q = {q}")),
        None => report.line(format!("q = 2^{k}")),
    }
    report.line(format!("euler characteristic = {}", cell.euler_characteristic()));
    report.line(format!("dim H1 = {dim_h1}"));
    report.line(format!("min valence = {}", cell.min_valence()));
    report.line(format!("min face size = {min_face}"));

    if matches!(source, SurfaceSource::Counterexample) {
        report.phase("delta");
        let d = locality::delta(&group)?;
        let w = d.element().expect("delta witness").clone();
        report.result("delta", d.value);
        report.result("witness_support", one_based(&w.support()));
        report.line(format!("delta = {}", d.value));
        report.line(format!("witness support = {}", set_text(&w.support())));
    }

    report.verdict(
        "faces_commute_with_stars",
        cell.boundary_matrices().faces_commute_with_stars(),
        true,
        true,
    );
    report.verdict("codespace_matches_homology", k == dim_h1, k, dim_h1);

    if let Some(out) = emit {
        report.phase("emit");
        let text = write_check_matrix(n, &listed);
        fs::write(out, &text).map_err(|source| CliError::Write {
            path: out.to_path_buf(),
            source,
        })?;
        let back = load_check_file(out)?;
        let same = back.n == n && back.generators == listed;
        report.line(format!("wrote {}", out.display()));
        report.verdict("emit_round_trip", same, same, true);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    One,
    Two,
    Span,
    GapPinch,
    Css,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    pub trials: usize,
    pub nu: Option<usize>,
    pub b: Option<String>,
}

impl VerifyOptions {
    fn nu(&self) -> Result<usize> {
        self.nu.ok_or_else(|| CliError::Usage("this check needs --nu".into()))
    }

    fn trial_seed(&self, t: usize) -> u64 {
        self.seed.wrapping_add(t as u64)
    }
}

/// A random traceless Hamiltonian of locality `k`, or zero when `k = 0`.
fn hamiltonian(n: usize, k: usize, seed: u64) -> Result<PauliSum> {
    if k == 0 {
        return Ok(PauliSum::zero(n));
    }
    Ok(random_local_hamiltonian(n, k.min(n), seed)?)
}

pub fn verify(kind: Theorem, path: &Path, opts: &VerifyOptions) -> Result<RunReport> {
    let name = match kind {
        Theorem::One => "verify theorem1",
        Theorem::Two => "verify theorem2",
        Theorem::Span => "verify corollary3",
        Theorem::GapPinch => "verify gap-pinch",
        Theorem::Css => "verify css",
    };
    let mut report = RunReport::new(name);
    let group = load_group(path)?;
    report.input("path", path.display().to_string());
    report.input("n", group.num_qubits());
    report.input("m", group.num_generators());
    report.input("seed", opts.seed);
    report.input("trials", opts.trials);
    report.input("nu", opts.nu);
    report.input("b", &opts.b);
    report.phase("verify");
    match kind {
        Theorem::One => theorem1(&mut report, &group, opts)?,
        Theorem::Two => theorem2(&mut report, &group, opts)?,
        Theorem::Span => span(&mut report, &group, opts)?,
        Theorem::GapPinch => gap_pinch(&mut report, &group, opts)?,
        Theorem::Css => css(&mut report, &group)?,
    }
    Ok(report)
}

fn theorem1(report: &mut RunReport, group: &StabilizerGroup, opts: &VerifyOptions) -> Result<()> {
    let n = group.num_qubits();
    let delta = match locality::delta(group) {
        Ok(r) => Some(r.value),
        Err(Error::UndefinedDelta) => None,
        Err(e) => return Err(e.into()),
    };
    let k = delta.map_or(n, |d| d - 1);
    let mut instances = Vec::new();
    let mut worst_trace = 0.0f64;
    let mut min_energy = f64::INFINITY;
    let mut traces_ok = true;
    let mut witnesses_ok = true;
    for t in 0..opts.trials {
        let seed = opts.trial_seed(t);
        let h = hamiltonian(n, k, seed)?;
        let c = check_theorem1(group, &h)?;
        worst_trace = worst_trace.max(c.trace.abs() / c.e_norm.max(1.0));
        min_energy = min_energy.min(c.witness_energy);
        traces_ok &= c.trace_ok;
        witnesses_ok &= c.witness_ok;
        instances.push(json!({
            "seed": seed,
            "trace": c.trace,
            "e_norm": c.e_norm,
            "witness_energy": c.witness_energy,
            "witness_residual": c.witness_residual,
        }));
    }
    report.result("delta", delta);
    report.result("locality", k);
    report.result("instances", instances);
    report.line(match delta {
        Some(d) => format!("delta = {d}; Hamiltonians are {k}-local"),
        None => format!("trivial group; Hamiltonians are {k}-local"),
    });
    report.line(format!("{} instances", opts.trials));
    report.verdict("trace_vanishes", traces_ok, worst_trace, TRACE_TOLERANCE);
    report.verdict(
        "codespace_witness",
        witnesses_ok,
        if min_energy.is_finite() { min_energy } else { 0.0 },
        -SLACK_TOLERANCE,
    );
    Ok(())
}

fn parse_bits(s: &str) -> Result<BitVector> {
    BitVector::parse(s).map_err(|_| CliError::Usage(format!("--b expects a bit string, got {s:?}")))
}

fn theorem2(report: &mut RunReport, group: &StabilizerGroup, opts: &VerifyOptions) -> Result<()> {
    let n = group.num_qubits();
    let nu = opts.nu()?;
    let ext = GroupExtension::new(group, nu)?;
    if !ext.nu_below_eta() {
        return Err(Error::Precondition(format!("nu = {nu} is not below eta(G)")).into());
    }
    let patterns: Vec<BitVector> = match &opts.b {
        Some(s) => {
            let b = parse_bits(s)?;
            if b.len() != ext.free_signs() {
                return Err(CliError::Usage(format!(
                    "--b needs t - s = {} bits, got {}",
                    ext.free_signs(),
                    b.len()
                )));
            }
            vec![b]
        }
        None => ext.bitstrings(MAX_SIGN_BITS)?.collect(),
    };
    let mut worst = 0.0f64;
    let mut all_hold = true;
    let (mut case1, mut case2) = (0, 0);
    for t in 0..opts.trials {
        let h = hamiltonian(n, nu, opts.trial_seed(t))?;
        for b in &patterns {
            let c = check_theorem2(group, nu, b, &h)?;
            worst = worst.max(c.difference / (c.tolerance / TRACE_TOLERANCE));
            all_hold &= c.holds;
            case1 += c.case1_terms;
            case2 += c.case2_terms;
        }
    }
    report.result("s", ext.s());
    report.result("t", ext.t());
    report.result("sign_patterns", patterns.iter().map(ToString::to_string).collect::<Vec<_>>());
    report.result("case1_terms", case1);
    report.result("case2_terms", case2);
    report.line(format!("s = {}, t = {}", ext.s(), ext.t()));
    report.line(format!(
        "{} sign patterns x {} Hamiltonians; terms in ±G: {case1}, outside: {case2}",
        patterns.len(),
        opts.trials
    ));
    report.verdict("trace_equality", all_hold, worst, TRACE_TOLERANCE);
    Ok(())
}

fn span(report: &mut RunReport, group: &StabilizerGroup, opts: &VerifyOptions) -> Result<()> {
    let nu = opts.nu()?;
    let c = check_corollary3_span(group, nu, MAX_SIGN_BITS)?;
    let q = 1usize << group.logical_qubits();
    report.result("s", c.s);
    report.result("t", c.t);
    report.result("extensions", c.extensions);
    report.result("rank", c.rank);
    report.result("dimension", c.dimension);
    report.result("spans", c.spans);
    report.result("conclusion", &c.conclusion);
    report.line(format!("extensions = {}", c.extensions));
    report.line(format!("rank = {} of {}", c.rank, c.dimension));
    report.line(format!("spans = {}", if c.spans { "yes" } else { "no" }));
    if let Some(text) = &c.conclusion {
        report.line(text.clone());
    }
    // distinct extensions have orthogonal codespaces of dimension q each
    report.verdict("extensions_orthogonal", c.rank == c.extensions * q, c.rank, c.extensions * q);
    Ok(())
}

fn gap_pinch(report: &mut RunReport, group: &StabilizerGroup, opts: &VerifyOptions) -> Result<()> {
    let n = group.num_qubits();
    let nu = opts.nu()?;
    if nu == 0 {
        return Err(Error::Precondition("nu must be at least 1 for a nonzero Hamiltonian".into()).into());
    }
    // acting on m of the n qubits leaves a ground space of dimension q generically
    let active: Vec<usize> = (0..group.num_generators()).collect();
    if active.is_empty() {
        return Err(Error::Precondition("the trivial group has eta = 0".into()).into());
    }
    let k = nu.min(active.len());
    let mut instances = Vec::new();
    let (mut skipped, mut small_norm) = (0usize, 0usize);
    let mut min_theorem = f64::INFINITY;
    let mut min_corollary = f64::INFINITY;
    let mut worst_identity = 0.0f64;
    let (mut theorem_ok, mut corollary_ok, mut identity_ok) = (true, true, true);
    let mut attempt = 0usize;
    while instances.len() < opts.trials && attempt < 10 * opts.trials.max(1) {
        let seed = opts.trial_seed(attempt);
        attempt += 1;
        let h = random_local_hamiltonian_on(n, &active, k, seed)?;
        let c = match check_gap_pinch(group, nu, &h) {
            Ok(c) => c,
            Err(Error::Precondition(msg)) if msg.starts_with("ground space") || msg.starts_with("gap") => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        if c.theorem.inputs.e_norm < 1.0 {
            small_norm += 1;
        }
        min_theorem = min_theorem.min(c.theorem.slack);
        min_corollary = min_corollary.min(c.corollary.slack);
        worst_identity = worst_identity.max(c.trace_identity.difference / (c.trace_identity.tolerance / TRACE_TOLERANCE));
        theorem_ok &= c.theorem.satisfied;
        corollary_ok &= c.corollary.satisfied;
        identity_ok &= c.trace_identity.holds;
        instances.push(json!({
            "seed": seed,
            "distance": c.distance,
            "e_norm": c.theorem.inputs.e_norm,
            "delta_e": c.theorem.inputs.delta_e,
            "theorem_rhs": c.theorem.rhs,
            "corollary_rhs": c.corollary.rhs,
        }));
    }
    if instances.is_empty() && opts.trials > 0 {
        return Err(Error::Precondition("no generated Hamiltonian satisfied the ground-space hypothesis".into()).into());
    }
    let q = 1usize << group.logical_qubits();
    let r = 1usize << (n - GroupExtension::new(group, nu)?.s());
    let accepted = instances.len();
    report.result("q", q);
    report.result("r", r);
    report.result("accepted", accepted);
    report.result("skipped", skipped);
    report.result("small_norm_instances", small_norm);
    report.result("instances", instances);
    report.line(format!("q = {q}, r = {r}"));
    report.line(format!(
        "{accepted} instances accepted, {skipped} skipped, {small_norm} with ||E|| < 1"
    ));
    let finite = |x: f64| if x.is_finite() { x } else { 0.0 };
    report.verdict("theorem_bound", theorem_ok, finite(min_theorem), -SLACK_TOLERANCE);
    report.verdict("corollary_bound", corollary_ok, finite(min_corollary), -SLACK_TOLERANCE);
    report.verdict("trace_identity", identity_ok, worst_identity, TRACE_TOLERANCE);
    Ok(())
}

fn css(report: &mut RunReport, group: &StabilizerGroup) -> Result<()> {
    let l = css_locality(group)?;
    let show = |d: Option<usize>| d.map_or("inf".to_string(), |d| d.to_string());
    report.result("metrics", &l);
    report.line(format!(
        "delta = {} = min({}, {})",
        show(l.delta),
        show(l.delta_x),
        show(l.delta_z)
    ));
    report.line(format!("eta = {} = max({}, {})", l.eta, l.eta_x, l.eta_z));
    // css_locality fails with a consistency error if either identity breaks
    report.verdict("delta_is_min", true, l.delta, 0);
    report.verdict("eta_is_max", true, l.eta, 0);
    Ok(())
}
