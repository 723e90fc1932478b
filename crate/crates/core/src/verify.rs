//! Checks predictions against direct eigendecompositions, batches the checks
//! over parameter grids, and compares printed closed forms with the generic
//! construction.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closed_forms::{
    cyclic_power_decomposition, predict_joined_union, predict_named, predict_power_cyclic, predict_power_group,
    NamedFamily, PartSpectrum, PowerGroupKind, SpectralPrediction,
};
use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::{self, Graph, JoinedUnionSpec};
use crate::matrix::Matrix;
use crate::number_theory::{proper_divisors, totient};
use crate::partitions::JoinedUnionShape;
use crate::spectra::{a_alpha_matrix, characteristic_polynomial, eig_symmetric, spectra_match, Alpha, Spectrum};
use crate::transcribed;

/// `{0, 0.25, 0.5, 0.75, 1}`.
pub const ALPHA_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];
pub const DEFAULT_SEED: u64 = 20_240_601;
pub const RANDOM_SPEC_COUNT: usize = 50;

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub case: String,
    pub n: usize,
    pub alpha: f64,
    pub matched: bool,
    /// `None` for a structural failure (dimension mismatch or a prediction
    /// that could not be assembled).
    pub max_error: Option<f64>,
    pub fixed_dim: usize,
    pub aux_dim: usize,
    pub failure: Option<String>,
    pub wall_time: Duration,
}

/// Compares the assembled prediction with the spectrum of `A_α(g)`.
pub fn verify_prediction(
    case: &str,
    g: &Graph,
    pred: &SpectralPrediction<f64>,
    alpha: &Alpha<f64>,
    tol: f64,
) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport {
        case: case.to_string(),
        n: g.order(),
        alpha: alpha.get(),
        matched: false,
        max_error: None,
        fixed_dim: pred.fixed_dim(),
        aux_dim: pred.aux_dim(),
        failure: None,
        wall_time: Duration::ZERO,
    };
    let outcome = if pred.total_dim() != g.order() {
        Err(Error::DimensionMismatch {
            expected: g.order(),
            found: pred.total_dim(),
        })
    } else {
        pred.assemble()
            .and_then(|predicted| Ok((predicted, eig_symmetric(&a_alpha_matrix(g, alpha))?)))
    };
    match outcome {
        Ok((predicted, direct)) => {
            let m = spectra_match(&predicted, &direct, tol);
            report.matched = m.matched;
            report.max_error = Some(m.max_error);
        }
        Err(e) => report.failure = Some(e.to_string()),
    }
    report.wall_time = start.elapsed();
    report
}

fn verify_on_graph(family: &Family, g: &Graph, alpha: f64, tol: f64) -> Result<VerificationReport> {
    let a = Alpha::new(alpha)?;
    let pred = family.predict(&a)?;
    Ok(verify_prediction(&family.to_string(), g, &pred, &a, tol))
}

pub fn verify_family(family: &Family, alpha: f64, tol: f64) -> Result<VerificationReport> {
    verify_on_graph(family, &family.graph()?, alpha, tol)
}

/// One report per `(instance, α)`, instance-major, independent of
/// scheduling.
pub fn run_sweep(families: &[Family], alphas: &[f64], tol: f64) -> Result<Vec<VerificationReport>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    for &a in alphas {
        Alpha::new(a)?;
    }
    let per_family: Vec<Vec<VerificationReport>> = families
        .par_iter()
        .map(|f| {
            let g = f.graph()?;
            alphas.iter().map(|&a| verify_on_graph(f, &g, a, tol)).collect()
        })
        .collect::<Result<_>>()?;
    Ok(per_family.into_iter().flatten().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepSummary {
    pub total: usize,
    pub matched: usize,
}

impl SweepSummary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        Self {
            total: reports.len(),
            matched: reports.iter().filter(|r| r.matched).count(),
        }
    }

    pub fn all_matched(&self) -> bool {
        self.total == self.matched
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    PowerCyclic,
    JoinedUnionRandom,
    PqPqr,
    PqPower,
    Dihedral,
    Quaternion,
    ElementaryAbelian,
    NonabelianPq,
    Named,
    Acceptance,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::PowerCyclic,
        Suite::JoinedUnionRandom,
        Suite::PqPqr,
        Suite::PqPower,
        Suite::Dihedral,
        Suite::Quaternion,
        Suite::ElementaryAbelian,
        Suite::NonabelianPq,
        Suite::Named,
        Suite::Acceptance,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::PowerCyclic => "power_cyclic",
            Self::JoinedUnionRandom => "joined_union_random",
            Self::PqPqr => "pq_pqr",
            Self::PqPower => "pq_power",
            Self::Dihedral => "dihedral",
            Self::Quaternion => "quaternion",
            Self::ElementaryAbelian => "elementary_abelian",
            Self::NonabelianPq => "nonabelian_pq",
            Self::Named => "named",
            Self::Acceptance => "acceptance",
        }
    }

    /// Default instance grid; `seed` only affects the random suite.
    pub fn instances(&self, seed: u64) -> Result<Vec<Family>> {
        let cyclic = |ns: &[u64]| ns.iter().map(|&n| Family::PowerCyclic { n }).collect::<Vec<_>>();
        let group = |k: PowerGroupKind| Family::PowerGroup(k);
        Ok(match self {
            Self::PowerCyclic => (3..=60).map(|n| Family::PowerCyclic { n }).collect(),
            Self::JoinedUnionRandom => random_joined_unions(RANDOM_SPEC_COUNT, seed)?,
            Self::PqPqr => cyclic(&[6, 10, 15, 21, 35, 30, 42]),
            Self::PqPower => cyclic(&[12, 18, 24, 48, 50]),
            Self::Dihedral => [3, 4, 5, 7, 8, 9]
                .map(|n| group(PowerGroupKind::DihedralPrimePower { n }))
                .to_vec(),
            Self::Quaternion => [2, 4, 8].map(|n| group(PowerGroupKind::DicyclicTwoPower { n })).to_vec(),
            Self::ElementaryAbelian => [(2, 2), (2, 3), (3, 2), (5, 1), (3, 3)]
                .map(|(p, k)| group(PowerGroupKind::ElementaryAbelian { p, k }))
                .to_vec(),
            Self::NonabelianPq => [(2, 3), (2, 5), (2, 7), (3, 7), (5, 11)]
                .map(|(p, q)| group(PowerGroupKind::NonabelianPq { p, q }))
                .to_vec(),
            Self::Named => named_instances(),
            Self::Acceptance => {
                let mut all = Vec::new();
                for s in &Self::ALL[..Self::ALL.len() - 1] {
                    all.extend(s.instances(seed)?);
                }
                all
            }
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

pub fn run_suite(suite: Suite, seed: u64, alphas: &[f64], tol: f64) -> Result<Vec<VerificationReport>> {
    run_sweep(&suite.instances(seed)?, alphas, tol)
}

fn named_instances() -> Vec<Family> {
    let mut out = Vec::new();
    let mut named = |f: NamedFamily| out.push(Family::Named(f));
    for n in 1..=10 {
        named(NamedFamily::Friendship { n });
    }
    for n in 1..=8 {
        for p in 0..=n {
            named(NamedFamily::Firefly { p, n });
        }
    }
    for a in 1..=8 {
        for b in 1..=8 {
            named(NamedFamily::CompleteBipartite { a, b });
        }
    }
    for n in 2..=10 {
        for omega in 1..n {
            named(NamedFamily::CompleteSplit { omega, n });
        }
    }
    for a in 3..=8 {
        for b in 1..=5 {
            named(NamedFamily::Cone { a, b });
        }
    }
    for n in 3..=12 {
        named(NamedFamily::Wheel { n });
    }
    for parts in 2..=4 {
        for sizes in nondecreasing(parts, 4) {
            out.push(Family::CompleteMultipartite { sizes });
        }
    }
    out
}

fn nondecreasing(len: usize, max: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for head in nondecreasing(len - 1, max) {
        let start = head.last().copied().unwrap_or(1);
        for x in start..=max {
            let mut v = head.clone();
            v.push(x);
            out.push(v);
        }
    }
    out
}

/// Regular graphs of order at most 5 from which random parts are drawn.
pub fn part_pool() -> Result<Vec<Graph>> {
    let k2 = Graph::complete(2)?;
    let mut pool = Vec::new();
    for n in 1..=5 {
        pool.push(Graph::complete(n)?);
    }
    for n in 3..=5 {
        pool.push(Graph::cycle(n)?);
    }
    for n in 2..=4 {
        pool.push(Graph::empty(n)?);
    }
    pool.push(graph::disjoint_union(&k2, &k2)?);
    Ok(pool)
}

/// Connected base on 3 to 6 vertices with parts drawn from [`part_pool`].
pub fn random_joined_union<R: Rng>(rng: &mut R, pool: &[Graph]) -> Result<JoinedUnionSpec> {
    let k = rng.random_range(3..=6);
    let base = loop {
        let edges: Vec<(usize, usize)> = (0..k)
            .flat_map(|u| ((u + 1)..k).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(0.5))
            .collect();
        let g = Graph::from_edges(k, &edges)?;
        if g.is_connected() {
            break g;
        }
    };
    let parts = (0..k).map(|_| pool[rng.random_range(0..pool.len())].clone()).collect();
    JoinedUnionSpec::new(base, parts)
}

/// `count` seeded random joined unions labelled `joined_union_random:SEED#i`.
pub fn random_joined_unions(count: usize, seed: u64) -> Result<Vec<Family>> {
    let pool = part_pool()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            Ok(Family::JoinedUnion {
                label: format!("joined_union_random:{seed}#{i}"),
                spec: random_joined_union(&mut rng, &pool)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            _ => Err(Error::Parse(format!("unknown report format `{s}`"))),
        }
    }
}

/// 17 significant digits; non-finite values become `null`.
pub fn format_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn format_error(e: Option<f64>) -> String {
    e.map_or_else(|| "null".to_string(), format_float)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub const CSV_HEADER: &str = "case,n,alpha,matched,max_error,fixed_dim,aux_dim";

/// Fixed field order; wall-time is not serialized.
pub fn render_report(reports: &[VerificationReport], format: ReportFormat) -> String {
    let mut out = String::new();
    match format {
        ReportFormat::Json => {
            if reports.is_empty() {
                return "[]\n".to_string();
            }
            out.push_str("[\n");
            for (i, r) in reports.iter().enumerate() {
                let _ = write!(
                    out,
                    "  {{\"case\": {}, \"n\": {}, \"alpha\": {}, \"matched\": {}, \"max_error\": {}, \"fixed_dim\": {}, \"aux_dim\": {}}}",
                    serde_json::to_string(&r.case).expect("string serializes"),
                    r.n,
                    format_float(r.alpha),
                    r.matched,
                    format_error(r.max_error),
                    r.fixed_dim,
                    r.aux_dim
                );
                out.push_str(if i + 1 < reports.len() { ",\n" } else { "\n" });
            }
            out.push_str("]\n");
        }
        ReportFormat::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    csv_field(&r.case),
                    r.n,
                    format_float(r.alpha),
                    r.matched,
                    format_error(r.max_error),
                    r.fixed_dim,
                    r.aux_dim
                );
            }
        }
    }
    out
}

pub fn write_report(reports: &[VerificationReport], format: ReportFormat, path: &Path) -> Result<()> {
    std::fs::write(path, render_report(reports, format)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Outcome of comparing one printed closed form with the generic
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Finding {
    pub name: String,
    pub agrees: bool,
    pub deviation: f64,
    pub detail: String,
}

impl Finding {
    fn new(name: String, deviation: f64, bound: f64, detail: String) -> Self {
        Self {
            name,
            agrees: deviation <= bound,
            deviation,
            detail,
        }
    }
}

const ENTRY_TOL: f64 = 1e-12;
const SPECTRAL_TOL: f64 = 1e-8;

fn alpha_of(alpha: f64) -> Result<Alpha<f64>> {
    Alpha::new(alpha)
}

fn compare_matrices(name: String, printed: &Matrix<f64>, generic: &Matrix<f64>) -> Result<Finding> {
    if printed.dim() != generic.dim() {
        return Err(Error::DimensionMismatch {
            expected: generic.dim(),
            found: printed.dim(),
        });
    }
    let dev = printed.max_abs_diff(generic);
    let scale = 1f64.max(generic.max_abs());
    let worst = (0..printed.dim())
        .flat_map(|i| (0..printed.dim()).map(move |j| (i, j)))
        .max_by(|&a, &b| {
            (printed[a] - generic[a])
                .abs()
                .total_cmp(&(printed[b] - generic[b]).abs())
        })
        .expect("non-empty");
    let detail = format!(
        "worst entry ({}, {}): printed {} vs generic {}",
        worst.0, worst.1, printed[worst], generic[worst]
    );
    Ok(Finding::new(name, dev, ENTRY_TOL * scale, detail))
}

fn compare_polynomials(name: String, printed: &[f64], generic: &[f64]) -> Finding {
    let scale = generic.iter().fold(1f64, |m, c| m.max(c.abs()));
    let dev = printed
        .iter()
        .zip(generic)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let detail = format!("printed {printed:?} vs generic {generic:?}");
    Finding::new(name, dev, SPECTRAL_TOL * scale, detail)
}

fn compare_spectra(name: String, printed: &Spectrum<f64>, generic: &Spectrum<f64>) -> Finding {
    let m = spectra_match(printed, generic, SPECTRAL_TOL);
    let detail = format!("printed {:?} vs generic {:?}", printed.values(), generic.values());
    Finding {
        name,
        agrees: m.matched,
        deviation: m.max_error,
        detail,
    }
}

/// Symmetric matrix similar to `m` when the off-diagonal pattern of `m` is a
/// forest and `m_ij m_ji > 0` on every edge.
pub fn symmetrize_forest_pattern(m: &Matrix<f64>) -> Result<Matrix<f64>> {
    let n = m.dim();
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (m[(i, j)], m[(j, i)]);
            if a == 0.0 && b == 0.0 {
                continue;
            }
            if !(a * b > 0.0) {
                return Err(Error::NotSymmetric {
                    row: i,
                    col: j,
                    deviation: (a - b).abs(),
                });
            }
            let (ri, rj) = (find(&mut root, i), find(&mut root, j));
            if ri == rj {
                return Err(Error::InvalidParameter("off-diagonal pattern has a cycle".into()));
            }
            root[ri] = rj;
        }
    }
    Ok(Matrix::from_fn(n, |i, j| {
        if i == j {
            m[(i, i)]
        } else {
            m[(i, j)].signum() * (m[(i, j)] * m[(j, i)]).abs().sqrt()
        }
    }))
}

fn forest_spectrum(m: &Matrix<f64>) -> Result<Spectrum<f64>> {
    eig_symmetric(&symmetrize_forest_pattern(m)?)
}

fn generic_aux(pred: &SpectralPrediction<f64>) -> Matrix<f64> {
    pred.aux.clone().expect("joined-union predictions carry an auxiliary matrix")
}

/// Printed three-part matrix for `P(Z_pq)` against the generic quotient
/// (generic rows reordered to `(p, centre, q)`).
pub fn check_qmat_pq(p: u64, q: u64, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let generic = generic_aux(&predict_power_cyclic(p * q, &a)?).permuted(&[1, 0, 2]);
    compare_matrices(
        format!("pq matrix n={} alpha={alpha}", p * q),
        &transcribed::qmat_pq(p, q, &a)?,
        &generic,
    )
}

/// Printed seven-part matrix for `P(Z_pqr)` against the generic quotient.
pub fn check_qmat_pqr(p: u64, q: u64, r: u64, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let n = p * q * r;
    let divisors = proper_divisors(n)?;
    let mut order = vec![0];
    for d in [p, q, r, p * q, p * r, q * r] {
        order.push(1 + divisors.iter().position(|&x| x == d).expect("proper divisor"));
    }
    let generic = generic_aux(&predict_power_cyclic(n, &a)?).permuted(&order);
    compare_matrices(
        format!("pqr matrix n={n} alpha={alpha}"),
        &transcribed::qmat_pqr(p, q, r, &a)?,
        &generic,
    )
}

/// Fixed eigenvalue produced by the clique of elements of order `d` in
/// `P(Z_n)` (`d = n` for the identity-plus-generators clique).
pub fn cyclic_part_eigenvalue(n: u64, d: u64, alpha: f64) -> Result<(f64, usize)> {
    let (spec, classes) = cyclic_power_decomposition(n)?;
    let target = if d == n { None } else { Some(d) };
    let i = classes
        .iter()
        .position(|&c| c == target)
        .ok_or_else(|| Error::InvalidParameter(format!("{d} is not a divisor class of {n}")))?;
    let shape = JoinedUnionShape::from_spec(&spec)?;
    let w = shape.neighbor_weights()[i];
    let size = shape.sizes[i];
    let value = alpha * (size - 1 + w) as f64 - (1.0 - alpha);
    Ok((value, size - 1))
}

/// Written terms of the `P(Z_{pq^N})` eigenvalue list against the generic
/// per-clique eigenvalues.
pub fn check_pq_power_listed(p: u64, q: u64, big_n: u32, alpha: f64) -> Result<Vec<Finding>> {
    let a = alpha_of(alpha)?;
    let n = p * q.pow(big_n);
    transcribed::pq_power_listed(p, q, big_n, &a)?
        .into_iter()
        .map(|t| {
            let d = if t.divisor == 1 { n } else { t.divisor };
            let (value, mult) = cyclic_part_eigenvalue(n, d, alpha)?;
            let dev = if mult == t.mult { (value - t.value).abs() } else { f64::INFINITY };
            Ok(Finding::new(
                format!("pq^N listed term n={n} divisor={d} alpha={alpha}"),
                dev,
                ENTRY_TOL * 1f64.max(value.abs()),
                format!("printed ({}, x{}) vs generic ({value}, x{mult})", t.value, t.mult),
            ))
        })
        .collect()
}

/// The stated `φ`-multiplicity list for `P(Z_{pq^N})` against the part
/// sizes of the generic decomposition.
pub fn pq_power_multiplicities_agree(p: u64, q: u64, big_n: u32) -> Result<bool> {
    let n = p * q.pow(big_n);
    let (spec, _) = cyclic_power_decomposition(n)?;
    let mut generic: Vec<usize> = spec.sizes().iter().map(|s| s - 1).collect();
    let mut stated = transcribed::pq_power_multiplicities(p, q, big_n)?;
    generic.sort_unstable();
    stated.sort_unstable();
    Ok(generic == stated && totient(n)? as usize == spec.sizes()[0] - 1)
}

fn unreduced(kind: PowerGroupKind, a: &Alpha<f64>) -> Result<SpectralPrediction<f64>> {
    let spec = kind.decomposition()?;
    let parts: Vec<PartSpectrum<f64>> = spec
        .parts()
        .iter()
        .map(|g| {
            if g.order() > 1 && g.regular_degree() == Some(0) {
                PartSpectrum::empty(g.order())
            } else {
                PartSpectrum::complete(g.order())
            }
        })
        .collect();
    predict_joined_union(spec.base(), &parts, a)
}

fn reduced_aux(kind: PowerGroupKind, a: &Alpha<f64>) -> Result<Matrix<f64>> {
    Ok(generic_aux(&predict_power_group(kind, a)?))
}

pub fn check_dihedral_matrix(n: usize, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let generic = reduced_aux(PowerGroupKind::DihedralPrimePower { n }, &a)?;
    compare_matrices(
        format!("dihedral matrix n={n} alpha={alpha}"),
        &transcribed::qmat_dihedral(n, &a)?,
        &generic,
    )
}

/// Printed cubic against the characteristic polynomial of the generic 3×3.
pub fn check_dihedral_cubic(n: usize, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let generic = characteristic_polynomial(&reduced_aux(PowerGroupKind::DihedralPrimePower { n }, &a)?);
    Ok(compare_polynomials(
        format!("dihedral cubic n={n} alpha={alpha}"),
        &transcribed::dihedral_cubic(n, &a)?,
        &generic,
    ))
}

pub fn check_elementary_abelian_matrix(p: usize, k: u32, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let generic = generic_aux(&unreduced(PowerGroupKind::ElementaryAbelian { p, k }, &a)?);
    compare_matrices(
        format!("elementary abelian matrix p={p} k={k} alpha={alpha}"),
        &transcribed::qmat_elementary_abelian(p as u64, k, &a)?,
        &generic,
    )
}

pub fn check_elementary_abelian_reduced(p: usize, k: u32, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let generic = characteristic_polynomial(&reduced_aux(PowerGroupKind::ElementaryAbelian { p, k }, &a)?);
    let printed = characteristic_polynomial(&transcribed::reduced_elementary_abelian(p as u64, k, &a)?);
    Ok(compare_polynomials(
        format!("elementary abelian reduced matrix p={p} k={k} alpha={alpha}"),
        &printed,
        &generic,
    ))
}

/// Printed `±` pair, scaled by `scale` (1 for the literal values, 0.5 for
/// the conjectured missing factor), against the reduced 2×2 eigenvalues.
pub fn check_elementary_abelian_pair(p: usize, k: u32, alpha: f64, scale: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let generic = eig_symmetric(&reduced_aux(PowerGroupKind::ElementaryAbelian { p, k }, &a)?)?;
    let (x, y) = transcribed::elementary_abelian_pair(p as u64, k, &a)?;
    Ok(compare_spectra(
        format!("elementary abelian pair p={p} k={k} alpha={alpha} scale={scale}"),
        &Spectrum::from_values(vec![scale * x, scale * y]),
        &generic,
    ))
}

pub fn check_nonabelian_pq_matrix(p: usize, q: usize, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let generic = generic_aux(&unreduced(PowerGroupKind::NonabelianPq { p, q }, &a)?);
    compare_matrices(
        format!("nonabelian pq matrix p={p} q={q} alpha={alpha}"),
        &transcribed::qmat_nonabelian_pq(p as u64, q as u64, &a)?,
        &generic,
    )
}

pub fn check_nonabelian_pq_reduced(p: usize, q: usize, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let generic = characteristic_polynomial(&reduced_aux(PowerGroupKind::NonabelianPq { p, q }, &a)?);
    let printed = characteristic_polynomial(&transcribed::reduced_nonabelian_pq(p as u64, q as u64, &a)?);
    Ok(compare_polynomials(
        format!("nonabelian pq reduced matrix p={p} q={q} alpha={alpha}"),
        &printed,
        &generic,
    ))
}

pub fn check_quaternion_matrix(n: usize, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let generic = generic_aux(&unreduced(PowerGroupKind::DicyclicTwoPower { n }, &a)?);
    compare_matrices(
        format!("quaternion matrix n={n} alpha={alpha}"),
        &transcribed::qmat_quaternion(n, &a)?,
        &generic,
    )
}

pub fn check_quaternion_reduced(n: usize, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let generic = characteristic_polynomial(&reduced_aux(PowerGroupKind::DicyclicTwoPower { n }, &a)?);
    let printed = characteristic_polynomial(&transcribed::reduced_quaternion(n, &a)?);
    Ok(compare_polynomials(
        format!("quaternion reduced matrix n={n} alpha={alpha}"),
        &printed,
        &generic,
    ))
}

/// Stated fixed list plus the eigenvalues of the printed reduced 3×3
/// against the direct spectrum of the power graph of `Q_n`.
pub fn check_quaternion_statement(n: usize, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let family = Family::PowerGroup(PowerGroupKind::DicyclicTwoPower { n });
    let direct = eig_symmetric(&a_alpha_matrix(&family.graph()?, &a))?;
    let mut values: Vec<f64> = transcribed::quaternion_fixed(n, &a)?
        .into_iter()
        .flat_map(|(v, m)| std::iter::repeat_n(v, m))
        .collect();
    values.extend_from_slice(forest_spectrum(&transcribed::reduced_quaternion(n, &a)?)?.values());
    let printed = Spectrum::from_values(values);
    let mut f = compare_spectra(format!("quaternion statement n={n} alpha={alpha}"), &printed, &direct);
    f.detail = format!("{} printed values vs {} vertices; {}", printed.len(), direct.len(), f.detail);
    Ok(f)
}

pub fn check_friendship_matrix(n: usize, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let generic = generic_aux(&predict_named(NamedFamily::Friendship { n }, &a)?);
    compare_matrices(
        format!("friendship matrix n={n} alpha={alpha}"),
        &transcribed::qmat_friendship(n, &a)?,
        &generic,
    )
}

/// Printed `±` pair of a join-of-two family against its 2×2 auxiliary
/// eigenvalues. Friendship and firefly have no printed pair.
pub fn check_named_pair(family: NamedFamily, alpha: f64) -> Result<Finding> {
    let a = alpha_of(alpha)?;
    let (x, y) = match family {
        NamedFamily::CompleteBipartite { a: p, b: q } => transcribed::complete_bipartite_pair(p, q, &a),
        NamedFamily::CompleteSplit { omega, n } => transcribed::complete_split_pair(omega, n),
        NamedFamily::Cone { a: p, b: q } => transcribed::cone_pair(p, q, &a),
        NamedFamily::Wheel { n } => transcribed::wheel_pair(n, &a),
        _ => return Err(Error::InvalidParameter(format!("{family:?} has no printed pair"))),
    };
    let generic = predict_named(family, &a)?.aux_spectrum()?;
    Ok(compare_spectra(
        format!("{} pair alpha={alpha}", Family::Named(family)),
        &Spectrum::from_values(vec![x, y]),
        &generic,
    ))
}

/// Every printed-form comparison at one `α`.
pub fn printed_form_findings(alpha: f64) -> Result<Vec<Finding>> {
    let mut out = Vec::new();
    for (p, q) in [(2, 3), (2, 5), (3, 5), (3, 7), (5, 7)] {
        out.push(check_qmat_pq(p, q, alpha)?);
    }
    for (p, q, r) in [(2, 3, 5), (2, 3, 7)] {
        out.push(check_qmat_pqr(p, q, r, alpha)?);
    }
    for (p, q, big_n) in [(3, 2, 2), (2, 3, 2), (3, 2, 3), (3, 2, 4), (2, 5, 2), (2, 3, 3), (3, 2, 5)] {
        out.extend(check_pq_power_listed(p, q, big_n, alpha)?);
    }
    for n in [3, 4, 5, 7, 8, 9] {
        out.push(check_dihedral_matrix(n, alpha)?);
        out.push(check_dihedral_cubic(n, alpha)?);
    }
    for n in [2, 4, 8] {
        out.push(check_quaternion_matrix(n, alpha)?);
        out.push(check_quaternion_reduced(n, alpha)?);
        out.push(check_quaternion_statement(n, alpha)?);
    }
    for (p, k) in [(2, 2), (2, 3), (3, 2), (5, 1), (3, 3)] {
        out.push(check_elementary_abelian_matrix(p, k, alpha)?);
        out.push(check_elementary_abelian_reduced(p, k, alpha)?);
        out.push(check_elementary_abelian_pair(p, k, alpha, 1.0)?);
        out.push(check_elementary_abelian_pair(p, k, alpha, 0.5)?);
    }
    for (p, q) in [(2, 3), (2, 5), (3, 7)] {
        out.push(check_nonabelian_pq_matrix(p, q, alpha)?);
        out.push(check_nonabelian_pq_reduced(p, q, alpha)?);
    }
    out.push(check_friendship_matrix(3, alpha)?);
    for f in [
        NamedFamily::CompleteBipartite { a: 3, b: 5 },
        NamedFamily::CompleteSplit { omega: 3, n: 8 },
        NamedFamily::Cone { a: 5, b: 3 },
        NamedFamily::Wheel { n: 7 },
    ] {
        out.push(check_named_pair(f, alpha)?);
    }
    Ok(out)
}
