//! Structured spectrum predictions: explicit eigenvalues with multiplicities
//! plus a small auxiliary matrix whose eigenvalues complete the spectrum.
//!
//! Every family with a known joined-union decomposition goes through
//! [`predict_joined_union`]; the join-of-two and join-of-three forms keep
//! their own small matrices so the two routes can be compared.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, Graph, JoinedUnionSpec};
use crate::groups::{check_nonabelian_pq, universal_vertices};
use crate::matrix::Matrix;
use crate::number_theory::{divisor_graph, is_prime, totient, Factorization};
use crate::partitions::{joined_union_aux_matrix, BlockSymmetricSpec, JoinedUnionShape};
use crate::scalar::Real;
use crate::spectra::{a_alpha_matrix, eig_quotient, eig_symmetric, multiplicity_of, symmetrize_quotient, Alpha, Spectrum};

/// Tolerance for "top adjacency eigenvalue equals the degree".
const REGULARITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FixedEigenvalue<T> {
    pub value: T,
    pub mult: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralPrediction<T> {
    pub fixed: Vec<FixedEigenvalue<T>>,
    /// Auxiliary matrix, diagonally similar to a symmetric one via
    /// `aux_sizes`.
    pub aux: Option<Matrix<T>>,
    pub aux_sizes: Vec<usize>,
}

impl<T: Real> SpectralPrediction<T> {
    fn new(fixed: Vec<FixedEigenvalue<T>>, aux: Matrix<T>, aux_sizes: Vec<usize>) -> Self {
        Self {
            fixed,
            aux: Some(aux),
            aux_sizes,
        }
    }

    pub fn fixed_dim(&self) -> usize {
        self.fixed.iter().map(|f| f.mult).sum()
    }

    pub fn aux_dim(&self) -> usize {
        self.aux.as_ref().map_or(0, Matrix::dim)
    }

    pub fn total_dim(&self) -> usize {
        self.fixed_dim() + self.aux_dim()
    }

    pub fn aux_spectrum(&self) -> Result<Spectrum<T>> {
        match &self.aux {
            Some(m) => eig_quotient(m, &self.aux_sizes),
            None => Ok(Spectrum::from_values(Vec::new())),
        }
    }

    /// Fixed values repeated by multiplicity together with the auxiliary
    /// eigenvalues.
    pub fn assemble(&self) -> Result<Spectrum<T>> {
        let mut values: Vec<T> = self
            .fixed
            .iter()
            .flat_map(|f| std::iter::repeat_n(f.value, f.mult))
            .collect();
        values.extend_from_slice(self.aux_spectrum()?.values());
        Ok(Spectrum::from_values(values))
    }

    /// Multiplicity declared for `value` in the fixed part.
    pub fn fixed_multiplicity(&self, value: T, tol: T) -> usize {
        let bound = tol * T::one().max(value.abs());
        self.fixed
            .iter()
            .filter(|f| (f.value - value).abs() <= bound)
            .map(|f| f.mult)
            .sum()
    }

    fn push_fixed(&mut self, value: T, mult: usize) {
        push_fixed(&mut self.fixed, value, mult);
    }
}

fn push_fixed<T: Real>(fixed: &mut Vec<FixedEigenvalue<T>>, value: T, mult: usize) {
    if mult == 0 {
        return;
    }
    match fixed.last_mut() {
        Some(last) if last.value == value => last.mult += mult,
        _ => fixed.push(FixedEigenvalue { value, mult }),
    }
}

#[derive(Serialize, Deserialize)]
struct PredictionJson {
    fixed: Vec<FixedEigenvalue<f64>>,
    aux: Vec<Vec<f64>>,
    aux_sizes: Vec<usize>,
}

impl SpectralPrediction<f64> {
    /// `{"fixed": [{"value": .., "mult": ..}], "aux": [[..]], "aux_sizes": [..]}`.
    pub fn to_json(&self) -> String {
        let doc = PredictionJson {
            fixed: self.fixed.clone(),
            aux: self.aux.as_ref().map(Matrix::rows).unwrap_or_default(),
            aux_sizes: self.aux_sizes.clone(),
        };
        serde_json::to_string(&doc).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PredictionJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let aux = if doc.aux.is_empty() {
            None
        } else {
            Some(Matrix::from_rows(doc.aux)?)
        };
        Ok(Self {
            fixed: doc.fixed,
            aux,
            aux_sizes: doc.aux_sizes,
        })
    }
}

/// Order, regular degree and full adjacency spectrum (descending) of a part.
#[derive(Debug, Clone, PartialEq)]
pub struct PartSpectrum<T> {
    pub order: usize,
    pub degree: usize,
    pub eigenvalues: Vec<T>,
}

impl<T: Real> PartSpectrum<T> {
    /// `K_t`: `{t - 1, (-1)^(t-1)}`.
    pub fn complete(t: usize) -> Self {
        let mut eigenvalues = vec![T::from_count(t.saturating_sub(1))];
        eigenvalues.extend(std::iter::repeat_n(-T::one(), t.saturating_sub(1)));
        Self {
            order: t,
            degree: t.saturating_sub(1),
            eigenvalues,
        }
    }

    /// `K̄_t`: all zeros.
    pub fn empty(t: usize) -> Self {
        Self {
            order: t,
            degree: 0,
            eigenvalues: vec![T::zero(); t],
        }
    }

    /// `C_t`: `2 cos(2πk/t)`, `k = 0..t`.
    pub fn cycle(t: usize) -> Self {
        let tau = T::TAU();
        let eigenvalues = (0..t)
            .map(|k| T::lit(2.0) * (tau * T::from_count(k) / T::from_count(t)).cos())
            .collect();
        Self::sorted(t, 2, eigenvalues)
    }

    /// Numerical adjacency spectrum of a regular graph.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let degree = g.regular_degree().ok_or(Error::NotRegular { index: 0 })?;
        let s = eig_symmetric(&crate::spectra::adjacency_matrix::<T>(g))?;
        Ok(Self {
            order: g.order(),
            degree,
            eigenvalues: s.values().to_vec(),
        })
    }

    fn sorted(order: usize, degree: usize, values: Vec<T>) -> Self {
        Self {
            order,
            degree,
            eigenvalues: Spectrum::from_values(values).values().to_vec(),
        }
    }

    /// Eigenvalues other than the Perron value `r`.
    pub fn non_perron(&self) -> &[T] {
        &self.eigenvalues[1.min(self.eigenvalues.len())..]
    }

    fn check(&self, index: usize) -> Result<()> {
        if self.order == 0 || self.eigenvalues.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                found: self.eigenvalues.len(),
            });
        }
        let top = self.eigenvalues[0];
        let r = T::from_count(self.degree);
        if !((top - r).abs() <= T::lit(REGULARITY_TOL) * T::one().max(r)) {
            return Err(Error::RegularityViolation {
                index,
                top: top.to_f64_lossy(),
                degree: self.degree,
            });
        }
        Ok(())
    }
}

/// Spectrum of `base[G_1, ..., G_n]` for regular parts.
///
/// Part `i` contributes `α(r_i + α_i) + (1 - α)λ_ik` for its non-Perron
/// adjacency eigenvalues; the auxiliary matrix is the joined-union quotient.
pub fn predict_joined_union<T: Real>(
    base: &Graph,
    parts: &[PartSpectrum<T>],
    alpha: &Alpha<T>,
) -> Result<SpectralPrediction<T>> {
    if base.order() < 2 {
        return Err(Error::InvalidParameter("base graph needs at least 2 vertices".into()));
    }
    joined_union_prediction(base, parts, alpha)
}

/// As [`predict_joined_union`] but also admits a single-vertex base.
fn joined_union_prediction<T: Real>(
    base: &Graph,
    parts: &[PartSpectrum<T>],
    alpha: &Alpha<T>,
) -> Result<SpectralPrediction<T>> {
    if parts.len() != base.order() {
        return Err(Error::DimensionMismatch {
            expected: base.order(),
            found: parts.len(),
        });
    }
    for (i, p) in parts.iter().enumerate() {
        p.check(i)?;
    }
    let shape = JoinedUnionShape::new(
        base.clone(),
        parts.iter().map(|p| p.order).collect(),
        parts.iter().map(|p| p.degree).collect(),
    )?;
    let a = alpha.get();
    let weights = shape.neighbor_weights();
    let mut fixed = Vec::new();
    for (p, &w) in parts.iter().zip(&weights) {
        let shift = a * T::from_count(p.degree + w);
        for &lambda in p.non_perron() {
            push_fixed(&mut fixed, shift + (T::one() - a) * lambda, 1);
        }
    }
    let aux = joined_union_aux_matrix(&shape, alpha);
    Ok(SpectralPrediction::new(fixed, aux, shape.sizes))
}

/// `K_{n_1, ..., n_p}`. Equal part sizes take the fully explicit path with
/// no auxiliary matrix.
pub fn predict_complete_multipartite<T: Real>(sizes: &[usize], alpha: &Alpha<T>) -> Result<SpectralPrediction<T>> {
    let p = sizes.len();
    if p < 2 {
        return Err(Error::InvalidParameter("complete multipartite needs at least 2 parts".into()));
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidParameter("empty part".into()));
    }
    let a = alpha.get();
    let one_minus = alpha.complement();
    let total: usize = sizes.iter().sum();
    if sizes.iter().all(|&s| s == sizes[0]) {
        let t = T::from_count(sizes[0]);
        let pp = T::from_count(p);
        let mut fixed = Vec::new();
        push_fixed(&mut fixed, a * t * (pp - T::one()), total - p);
        push_fixed(&mut fixed, t * (a * pp - T::one()), p - 1);
        push_fixed(&mut fixed, t * (pp - T::one()), 1);
        return Ok(SpectralPrediction {
            fixed,
            aux: None,
            aux_sizes: Vec::new(),
        });
    }
    let mut fixed = Vec::new();
    for &s in sizes {
        push_fixed(&mut fixed, a * T::from_count(total - s), s - 1);
    }
    let aux = Matrix::from_fn(p, |i, j| {
        if i == j {
            a * T::from_count(total - sizes[i])
        } else {
            T::from_count(sizes[j]) * one_minus
        }
    });
    Ok(SpectralPrediction::new(fixed, aux, sizes.to_vec()))
}

/// `G_1 ▽ G_2` for regular parts, with the 2×2 auxiliary matrix
/// `[[r_1 + α n_2, (1-α) n_2], [(1-α) n_1, r_2 + α n_1]]`.
pub fn predict_join_two<T: Real>(
    g1: &PartSpectrum<T>,
    g2: &PartSpectrum<T>,
    alpha: &Alpha<T>,
) -> Result<SpectralPrediction<T>> {
    g1.check(0)?;
    g2.check(1)?;
    let a = alpha.get();
    let b = alpha.complement();
    let (n1, n2) = (T::from_count(g1.order), T::from_count(g2.order));
    let (r1, r2) = (T::from_count(g1.degree), T::from_count(g2.degree));
    let mut fixed = Vec::new();
    for &l in g1.non_perron() {
        push_fixed(&mut fixed, a * (r1 + n2) + b * l, 1);
    }
    for &l in g2.non_perron() {
        push_fixed(&mut fixed, a * (r2 + n1) + b * l, 1);
    }
    let aux = Matrix::from_rows(vec![vec![r1 + a * n2, b * n2], vec![b * n1, r2 + a * n1]])?;
    Ok(SpectralPrediction::new(fixed, aux, vec![g1.order, g2.order]))
}

/// `G_1 ▽ (G_2 ∪ G_3)`, i.e. `P_3[G_2, G_1, G_3]`; the auxiliary matrix rows
/// follow that order.
pub fn predict_join_three<T: Real>(
    g1: &PartSpectrum<T>,
    g2: &PartSpectrum<T>,
    g3: &PartSpectrum<T>,
    alpha: &Alpha<T>,
) -> Result<SpectralPrediction<T>> {
    for (i, g) in [g1, g2, g3].into_iter().enumerate() {
        g.check(i)?;
    }
    let a = alpha.get();
    let b = alpha.complement();
    let c = T::from_count;
    let (n1, n2, n3) = (g1.order, g2.order, g3.order);
    let n = n1 + n2 + n3;
    let mut fixed = Vec::new();
    for (g, shift) in [(g1, g1.degree + n - n1), (g2, n1 + g2.degree), (g3, n1 + g3.degree)] {
        for &l in g.non_perron() {
            push_fixed(&mut fixed, a * c(shift) + b * l, 1);
        }
    }
    let (r1, r2, r3) = (c(g1.degree), c(g2.degree), c(g3.degree));
    let aux = Matrix::from_rows(vec![
        vec![r2 + a * c(n1), b * c(n1), T::zero()],
        vec![b * c(n2), r1 + a * c(n2 + n3), b * c(n3)],
        vec![T::zero(), b * c(n1), r3 + a * c(n1)],
    ])?;
    Ok(SpectralPrediction::new(fixed, aux, vec![n2, n1, n3]))
}

/// Named graph families with closed-form spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFamily {
    /// `F_n = K_1 ▽ nK_2`.
    Friendship { n: usize },
    /// `F_{p,n-p} = K_1 ▽ (pK_1 ∪ (n-p)K_2)`.
    Firefly { p: usize, n: usize },
    /// `W_{n+1} = C_n ▽ K_1`.
    Wheel { n: usize },
    /// `CS_{ω,n-ω} = K_ω ▽ K̄_{n-ω}`.
    CompleteSplit { omega: usize, n: usize },
    /// `C_{a,b} = C_a ▽ K̄_b`.
    Cone { a: usize, b: usize },
    /// `K_{a,b} = K̄_a ▽ K̄_b`.
    CompleteBipartite { a: usize, b: usize },
}

impl NamedFamily {
    fn validate(&self) -> Result<()> {
        let ok = match *self {
            Self::Friendship { n } => n >= 1,
            Self::Firefly { p, n } => n >= 1 && p <= n,
            Self::Wheel { n } => n >= 3,
            Self::CompleteSplit { omega, n } => omega >= 1 && n > omega,
            Self::Cone { a, b } => a >= 3 && b >= 1,
            Self::CompleteBipartite { a, b } => a >= 1 && b >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("invalid family parameters {self:?}")))
        }
    }

    /// Builds the graph from unions and joins.
    pub fn graph(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            Self::Friendship { n } => Self::Firefly { p: 0, n }.graph(),
            Self::Firefly { p, n } => {
                let k1 = Graph::complete(1)?;
                let k2 = Graph::complete(2)?;
                let leaves: Vec<&Graph> = std::iter::repeat_n(&k1, p)
                    .chain(std::iter::repeat_n(&k2, n - p))
                    .collect();
                graph::join(&k1, &graph::disjoint_union_all(leaves)?)
            }
            Self::Wheel { n } => graph::join(&Graph::cycle(n)?, &Graph::complete(1)?),
            Self::CompleteSplit { omega, n } => graph::join(&Graph::complete(omega)?, &Graph::empty(n - omega)?),
            Self::Cone { a, b } => graph::join(&Graph::cycle(a)?, &Graph::empty(b)?),
            Self::CompleteBipartite { a, b } => graph::join(&Graph::empty(a)?, &Graph::empty(b)?),
        }
    }
}

pub fn predict_named<T: Real>(family: NamedFamily, alpha: &Alpha<T>) -> Result<SpectralPrediction<T>> {
    family.validate()?;
    match family {
        NamedFamily::Friendship { n } => predict_named(NamedFamily::Firefly { p: 0, n }, alpha),
        NamedFamily::Firefly { p, n } => {
            let mut parts = vec![PartSpectrum::complete(1)];
            parts.extend(std::iter::repeat_n(PartSpectrum::complete(1), p));
            parts.extend(std::iter::repeat_n(PartSpectrum::complete(2), n - p));
            predict_joined_union(&Graph::star(n + 1)?, &parts, alpha)
        }
        NamedFamily::Wheel { n } => predict_join_two(&PartSpectrum::cycle(n), &PartSpectrum::complete(1), alpha),
        NamedFamily::CompleteSplit { omega, n } => {
            predict_join_two(&PartSpectrum::complete(omega), &PartSpectrum::empty(n - omega), alpha)
        }
        NamedFamily::Cone { a, b } => predict_join_two(&PartSpectrum::cycle(a), &PartSpectrum::empty(b), alpha),
        NamedFamily::CompleteBipartite { a, b } => {
            predict_join_two(&PartSpectrum::empty(a), &PartSpectrum::empty(b), alpha)
        }
    }
}

/// `P(Z_n) = (K_1 ▽ 𝔾_n)[K_{φ(n)+1}, K_{φ(d_1)}, ..., K_{φ(d_r)}]` with the
/// proper divisors `d_i` ascending. Returns the decomposition and, per part,
/// the element orders it collects (`None` for identity plus generators).
pub fn cyclic_power_decomposition(n: u64) -> Result<(JoinedUnionSpec, Vec<Option<u64>>)> {
    if n < 2 {
        return Err(Error::InvalidParameter("cyclic power graph needs n >= 2".into()));
    }
    let dg = divisor_graph(n)?;
    let base = graph::join(&Graph::complete(1)?, &dg.graph)?;
    let mut parts = vec![Graph::complete(totient(n)? as usize + 1)?];
    let mut classes = vec![None];
    for &d in &dg.divisors {
        parts.push(Graph::complete(totient(d)? as usize)?);
        classes.push(Some(d));
    }
    Ok((JoinedUnionSpec::new(base, parts)?, classes))
}

/// `A_α` spectrum of `P(Z_n)`, `n >= 3`, through its joined-union
/// decomposition. Prime `n` degenerates to `K_n` (single-vertex base).
pub fn predict_power_cyclic<T: Real>(n: u64, alpha: &Alpha<T>) -> Result<SpectralPrediction<T>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("power_cyclic needs n >= 3, got {n}")));
    }
    let (spec, _) = cyclic_power_decomposition(n)?;
    let parts: Vec<PartSpectrum<T>> = spec.sizes().into_iter().map(PartSpectrum::complete).collect();
    joined_union_prediction(spec.base(), &parts, alpha)
}

/// Power-graph families with dedicated closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerGroupKind {
    /// `(Z_p)^k`: `K_1 ▽ l K_{p-1}`, `l = (p^k - 1)/(p - 1)`.
    ElementaryAbelian { p: usize, k: u32 },
    /// Non-abelian group of order `pq`: `K_1 ▽ (q K_{p-1} ∪ K_{q-1})`.
    NonabelianPq { p: usize, q: usize },
    /// `D_{2n}` with `n` a prime power: `P_3[K_{n-1}, K_1, K̄_n]`.
    DihedralPrimePower { n: usize },
    /// `Q_n` of order `4n` with `n` a power of two:
    /// `K_{1,n+1}[K_2, K_{2n-2}, nK_2]`.
    DicyclicTwoPower { n: usize },
}

impl PowerGroupKind {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            Self::ElementaryAbelian { p, k } => {
                if !is_prime(p as u64) || k == 0 {
                    return bad(format!("elementary abelian needs prime p and k >= 1, got p={p}, k={k}"));
                }
                if p.checked_pow(k).is_none_or(|o| o > graph::MAX_ORDER) {
                    return Err(Error::TooLarge(usize::MAX));
                }
            }
            Self::NonabelianPq { p, q } => check_nonabelian_pq(p, q)?,
            Self::DihedralPrimePower { n } => {
                if n < 3 || !Factorization::of(n as u64)?.is_prime_power() {
                    return bad(format!("dihedral closed form needs a prime power n >= 3, got {n}"));
                }
            }
            Self::DicyclicTwoPower { n } => {
                if n < 2 || !n.is_power_of_two() {
                    return bad(format!("dicyclic closed form needs n a power of 2, n >= 2, got {n}"));
                }
            }
        }
        Ok(())
    }

    /// Base graph and parts of the joined-union decomposition.
    pub fn decomposition(&self) -> Result<JoinedUnionSpec> {
        self.validate()?;
        let k = Graph::complete;
        match *self {
            Self::ElementaryAbelian { p, k: e } => {
                let l = (p.pow(e) - 1) / (p - 1);
                let mut parts = vec![k(1)?];
                parts.extend(std::iter::repeat_n(k(p - 1)?, l));
                JoinedUnionSpec::new(Graph::star(l + 1)?, parts)
            }
            Self::NonabelianPq { p, q } => {
                let mut parts = vec![k(1)?];
                parts.extend(std::iter::repeat_n(k(p - 1)?, q));
                parts.push(k(q - 1)?);
                JoinedUnionSpec::new(Graph::star(q + 2)?, parts)
            }
            Self::DihedralPrimePower { n } => {
                JoinedUnionSpec::new(Graph::path(3)?, vec![k(n - 1)?, k(1)?, Graph::empty(n)?])
            }
            Self::DicyclicTwoPower { n } => {
                let mut parts = vec![k(2)?, k(2 * n - 2)?];
                parts.extend(std::iter::repeat_n(k(2)?, n));
                JoinedUnionSpec::new(Graph::star(n + 2)?, parts)
            }
        }
    }

    /// Leading block size `t` and the position of the repeated blocks for
    /// the block-symmetric reduction of the auxiliary matrix, if any.
    fn reduction_layout(&self, parts: usize) -> Option<(usize, Vec<usize>)> {
        match *self {
            Self::ElementaryAbelian { .. } => Some((1, (0..parts).collect())),
            // centre, K_{q-1}, then the q copies of K_{p-1}
            Self::NonabelianPq { .. } => {
                let mut order = vec![0, parts - 1];
                order.extend(1..parts - 1);
                Some((2, order))
            }
            Self::DicyclicTwoPower { .. } => Some((2, (0..parts).collect())),
            Self::DihedralPrimePower { .. } => None,
        }
    }
}

/// Closed form for the power graph of the given group family.
///
/// The auxiliary matrix of the star-shaped families is reduced with the
/// block-symmetric reduction: the repeated leaf eigenvalue moves into the fixed
/// list and the remaining small matrix is symmetric (unit sizes).
pub fn predict_power_group<T: Real>(kind: PowerGroupKind, alpha: &Alpha<T>) -> Result<SpectralPrediction<T>> {
    let spec = kind.decomposition()?;
    let parts: Vec<PartSpectrum<T>> = spec
        .parts()
        .iter()
        .map(|g| match g.regular_degree() {
            Some(0) if g.order() > 1 => PartSpectrum::empty(g.order()),
            _ => PartSpectrum::complete(g.order()),
        })
        .collect();
    let mut pred = predict_joined_union(spec.base(), &parts, alpha)?;
    let Some((t, order)) = kind.reduction_layout(parts.len()) else {
        return Ok(pred);
    };
    let aux = pred.aux.take().expect("joined union has an auxiliary matrix");
    let sizes: Vec<usize> = order.iter().map(|&i| pred.aux_sizes[i]).collect();
    let symmetric = symmetrize_quotient(&aux.permuted(&order), &sizes)?;
    let reduction = BlockSymmetricSpec::from_matrix(&symmetric, t, 1, T::lit(1e-12))?.reduce()?;
    for &v in reduction.repeated.values() {
        pred.push_fixed(v, reduction.multiplicity);
    }
    pred.aux_sizes = vec![1; reduction.reduced.dim()];
    pred.aux = Some(reduction.reduced);
    Ok(pred)
}

#[derive(Debug, Clone, PartialEq)]
pub struct UniversalBound<T> {
    /// Number of universal vertices.
    pub b: usize,
    pub bound: usize,
    /// `αn - 1`.
    pub value: T,
    pub observed: usize,
}

impl<T> UniversalBound<T> {
    pub fn holds(&self) -> bool {
        self.observed >= self.bound
    }
}

/// Multiplicity of `αn - 1` in the `A_α` spectrum against the lower bound
/// `b - 1`, `b` the number of universal vertices.
pub fn universal_multiplicity_bound<T: Real>(g: &Graph, alpha: &Alpha<T>, tol: T) -> Result<UniversalBound<T>> {
    let n = g.order();
    if n < 3 {
        return Err(Error::InvalidParameter("needs at least 3 vertices".into()));
    }
    let b = universal_vertices(g).len();
    let value = alpha.get() * T::from_count(n) - T::one();
    let spectrum = eig_symmetric(&a_alpha_matrix(g, alpha))?;
    Ok(UniversalBound {
        b,
        bound: b.saturating_sub(1),
        value,
        observed: multiplicity_of(&spectrum, value, tol),
    })
}
