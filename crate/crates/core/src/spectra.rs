//! Matrix builders (`A`, `D`, `L`, `Q`, `A_α`), the symmetric eigensolver and
//! tolerance-aware spectrum comparison.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::scalar::{Real, Scalar};

/// Default relative tolerance for spectrum comparisons.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Symmetry tolerance accepted by [`eig_symmetric`].
const SYMMETRY_TOL: f64 = 1e-12;
/// Symmetry tolerance for the diagonally-similar auxiliary matrices.
const QUOTIENT_SYMMETRY_TOL: f64 = 1e-9;
const JACOBI_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// The mixing parameter `α ∈ [0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Alpha<T>(T);

impl<T: Scalar> Alpha<T> {
    pub fn new(value: T) -> Result<Self> {
        if value >= T::zero() && value <= T::one() {
            Ok(Self(value))
        } else {
            Err(Error::AlphaOutOfRange)
        }
    }

    pub fn value(&self) -> &T {
        &self.0
    }

    /// `1 - α`.
    pub fn complement(&self) -> T {
        T::one() - self.0.clone()
    }
}

impl<T: Real> Alpha<T> {
    pub fn get(&self) -> T {
        self.0
    }
}

pub fn adjacency_matrix<T: Scalar>(g: &Graph) -> Matrix<T> {
    Matrix::from_fn(g.order(), |i, j| if g.has_edge(i, j) { T::one() } else { T::zero() })
}

pub fn degree_matrix<T: Scalar>(g: &Graph) -> Matrix<T> {
    let d: Vec<T> = g.degrees().into_iter().map(T::from_count).collect();
    Matrix::diagonal(&d)
}

/// `L = D - A`.
pub fn laplacian_matrix<T: Scalar>(g: &Graph) -> Matrix<T> {
    degree_matrix::<T>(g)
        .sub(&adjacency_matrix(g))
        .expect("same order")
}

/// `Q = D + A`.
pub fn signless_laplacian_matrix<T: Scalar>(g: &Graph) -> Matrix<T> {
    degree_matrix::<T>(g)
        .add(&adjacency_matrix(g))
        .expect("same order")
}

/// `A_α = α D + (1 - α) A`.
pub fn a_alpha_matrix<T: Scalar>(g: &Graph, alpha: &Alpha<T>) -> Matrix<T> {
    let a = alpha.value().clone();
    let off = alpha.complement();
    Matrix::from_fn(g.order(), |i, j| {
        if i == j {
            a.clone() * T::from_count(g.degree(i))
        } else if g.has_edge(i, j) {
            off.clone()
        } else {
            T::zero()
        }
    })
}

/// Real eigenvalues sorted in descending order, multiplicity by repetition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum<T> {
    values: Vec<T>,
}

impl<T: Real> Spectrum<T> {
    /// Sorts `values` descending. Non-finite values sort last.
    pub fn from_values(mut values: Vec<T>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
        Self { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> Option<T> {
        self.values.first().copied()
    }

    /// Largest absolute eigenvalue (0 for the empty spectrum).
    pub fn radius(&self) -> T {
        self.values.iter().fold(T::zero(), |acc, x| acc.max(x.abs()))
    }

    pub fn sum(&self) -> T {
        self.values.iter().fold(T::zero(), |acc, &x| acc + x)
    }

    pub fn sum_of_squares(&self) -> T {
        self.values.iter().fold(T::zero(), |acc, &x| acc + x * x)
    }

    /// Multiset union.
    pub fn merged(&self, other: &Self) -> Self {
        let mut v = self.values.clone();
        v.extend_from_slice(&other.values);
        Self::from_values(v)
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Self::from_values(self.values.iter().map(|&x| f(x)).collect())
    }

    /// `λ_1 - λ_2`; `None` for spectra with fewer than two values.
    pub fn top_gap(&self) -> Option<T> {
        match self.values[..] {
            [a, b, ..] => Some(a - b),
            _ => None,
        }
    }
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps visit pairs `(p, q)`, `p < q`, in row order and stop once the
/// off-diagonal Frobenius norm drops below `1e-12 * (1 + ‖m‖_F)`. The fixed
/// order makes results reproducible bit for bit.
pub fn eig_symmetric<T: Real>(m: &Matrix<T>) -> Result<Spectrum<T>> {
    if !m.is_finite() {
        return Err(Error::InvalidParameter("matrix has non-finite entries".into()));
    }
    m.check_symmetric(T::lit(SYMMETRY_TOL).max(T::epsilon()))?;
    let n = m.dim();
    let mut a = m.clone();
    let threshold = T::lit(JACOBI_TOL).max(T::epsilon() * T::lit(4.0)) * (T::one() + m.frobenius_norm());

    let off_norm = |a: &Matrix<T>| {
        let mut s = T::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                s = s + a[(i, j)] * a[(i, j)];
            }
        }
        (s + s).sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) >= threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
    }
    Ok(Spectrum::from_values((0..n).map(|i| a[(i, i)]).collect()))
}

/// Annihilates `a[p][q]` with a plane rotation applied on both sides.
fn rotate<T: Real>(a: &mut Matrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == T::zero() {
        return;
    }
    let two = T::lit(2.0);
    let theta = (a[(q, q)] - a[(p, p)]) / (two * apq);
    let t = if theta.abs() > T::lit(1e150) {
        T::one() / (two * theta)
    } else {
        theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    let n = a.dim();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[(k, p)] = new_kp;
        a[(p, k)] = new_kp;
        a[(k, q)] = new_kq;
        a[(q, k)] = new_kq;
    }
    a[(p, p)] = a[(p, p)] - t * apq;
    a[(q, q)] = a[(q, q)] + t * apq;
    a[(p, q)] = T::zero();
    a[(q, p)] = T::zero();
}

/// Symmetrizes `m` by the similarity `Δ^{1/2} m Δ^{-1/2}`, `Δ = diag(sizes)`.
///
/// Fails when the result is not symmetric, which means the off-diagonal
/// entries do not follow the `c * n_j` pattern of a joined-union quotient.
pub fn symmetrize_quotient<T: Real>(m: &Matrix<T>, sizes: &[usize]) -> Result<Matrix<T>> {
    if sizes.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: sizes.len(),
        });
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidParameter("part sizes must be positive".into()));
    }
    let roots: Vec<T> = sizes.iter().map(|&s| T::from_count(s).sqrt()).collect();
    let s = Matrix::from_fn(m.dim(), |i, j| m[(i, j)] * roots[i] / roots[j]);
    s.check_symmetric(T::lit(QUOTIENT_SYMMETRY_TOL))?;
    Ok(Matrix::from_fn(m.dim(), |i, j| (s[(i, j)] + s[(j, i)]) / T::lit(2.0)))
}

/// Eigenvalues of a joined-union auxiliary matrix via its symmetrization.
pub fn eig_quotient<T: Real>(m: &Matrix<T>, sizes: &[usize]) -> Result<Spectrum<T>> {
    eig_symmetric(&symmetrize_quotient(m, sizes)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch<T> {
    pub index: usize,
    pub left: T,
    pub right: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumMatch<T> {
    pub matched: bool,
    /// Largest `|s1_i - s2_i|` over sorted pairs; infinite on length mismatch.
    pub max_error: T,
    /// Scaled tolerance actually applied.
    pub bound: T,
    /// Worst pair exceeding the bound, if any.
    pub worst: Option<Mismatch<T>>,
    pub lengths: (usize, usize),
}

/// Multiset comparison: same length and `|s1_i - s2_i| <= tol * max(1, ρ)`
/// pairwise after sorting, where `ρ` is the larger spectral radius.
pub fn spectra_match<T: Real>(s1: &Spectrum<T>, s2: &Spectrum<T>, tol: T) -> SpectrumMatch<T> {
    let bound = tol * T::one().max(s1.radius()).max(s2.radius());
    let lengths = (s1.len(), s2.len());
    if s1.len() != s2.len() {
        return SpectrumMatch {
            matched: false,
            max_error: T::infinity(),
            bound,
            worst: None,
            lengths,
        };
    }
    let mut max_error = T::zero();
    let mut worst: Option<Mismatch<T>> = None;
    for (index, (&left, &right)) in s1.values().iter().zip(s2.values()).enumerate() {
        let err = (left - right).abs();
        if !(err <= max_error) {
            max_error = err;
        }
        if !(err <= bound) && worst.as_ref().is_none_or(|w| err > (w.left - w.right).abs()) {
            worst = Some(Mismatch { index, left, right });
        }
    }
    SpectrumMatch {
        matched: worst.is_none(),
        max_error,
        bound,
        worst,
        lengths,
    }
}

/// Number of eigenvalues within `tol * max(1, |value|)` of `value`.
pub fn multiplicity_of<T: Real>(s: &Spectrum<T>, value: T, tol: T) -> usize {
    let bound = tol * T::one().max(value.abs());
    s.values().iter().filter(|&&x| (x - value).abs() <= bound).count()
}

/// Coefficients of `det(xI - m)`, highest degree first (leading 1), by the
/// Faddeev–LeVerrier recurrence. Exact over rationals.
pub fn characteristic_polynomial<T: Scalar>(m: &Matrix<T>) -> Vec<T> {
    let n = m.dim();
    let mut coeffs = vec![T::one()];
    let mut mk = Matrix::<T>::zeros(n);
    for k in 1..=n {
        let prev = coeffs.last().cloned().unwrap_or_else(T::one);
        mk = m
            .mul(&mk)
            .and_then(|x| x.add(&Matrix::identity(n).scale(&prev)))
            .expect("square");
        let c = T::zero() - m.mul(&mk).expect("square").trace() / T::from_count(k);
        coeffs.push(c);
    }
    coeffs
}

/// Horner evaluation of a highest-degree-first coefficient list.
pub fn eval_polynomial<T: Real>(coeffs: &[T], x: T) -> T {
    coeffs.iter().fold(T::zero(), |acc, &c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn spec(v: &[f64]) -> Spectrum<f64> {
        Spectrum::from_values(v.to_vec())
    }

    #[test]
    fn alpha_bounds() {
        assert!(Alpha::new(-0.1).is_err());
        assert!(Alpha::new(1.1).is_err());
        assert!(Alpha::new(0.0).is_ok());
        assert!(Alpha::new(Ratio::new(1i64, 2)).is_ok());
    }

    #[test]
    fn alpha_endpoints_and_half() {
        let g = Graph::path(4).unwrap();
        assert_eq!(a_alpha_matrix(&g, &Alpha::new(0.0).unwrap()), adjacency_matrix(&g));
        assert_eq!(a_alpha_matrix(&g, &Alpha::new(1.0).unwrap()), degree_matrix(&g));
        assert_eq!(
            a_alpha_matrix(&g, &Alpha::new(0.5).unwrap()).scale(&2.0),
            signless_laplacian_matrix(&g)
        );
    }

    #[test]
    fn complete_three() {
        // (x - 2)(x + 1)^2
        let s = eig_symmetric(&adjacency_matrix::<f64>(&Graph::complete(3).unwrap())).unwrap();
        let m = spectra_match(&s, &spec(&[2.0, -1.0, -1.0]), 1e-12);
        assert!(m.matched, "{m:?}");
    }

    #[test]
    fn zero_matrix() {
        let s = eig_symmetric(&Matrix::<f64>::zeros(4)).unwrap();
        assert_eq!(s.values(), &[0.0; 4]);
    }

    #[test]
    fn cycle_four() {
        let s = eig_symmetric(&adjacency_matrix::<f64>(&Graph::cycle(4).unwrap())).unwrap();
        assert!(spectra_match(&s, &spec(&[2.0, 0.0, 0.0, -2.0]), 1e-12).matched);
    }

    #[test]
    fn eig_rejects_nonsymmetric() {
        let m = Matrix::from_rows(vec![vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap();
        assert!(matches!(eig_symmetric(&m), Err(Error::NotSymmetric { .. })));
    }

    #[test]
    fn eig_f32() {
        let s = eig_symmetric(&adjacency_matrix::<f32>(&Graph::complete(5).unwrap())).unwrap();
        assert!((s.values()[0] - 4.0).abs() < 1e-5);
        assert!(s.values()[1..].iter().all(|x| (x + 1.0).abs() < 1e-5));
    }

    #[test]
    fn quotient_examples() {
        let a = 0.3;
        let m = Matrix::from_rows(vec![vec![a, 1.0 - a], vec![1.0 - a, a]]).unwrap();
        assert!(spectra_match(&eig_quotient(&m, &[1, 1]).unwrap(), &spec(&[1.0, -0.4]), 1e-12).matched);

        let m = Matrix::from_rows(vec![vec![0.0, 3.0], vec![2.0, 0.0]]).unwrap();
        let r6 = 6f64.sqrt();
        assert!(spectra_match(&eig_quotient(&m, &[2, 3]).unwrap(), &spec(&[r6, -r6]), 1e-12).matched);

        let m = Matrix::from_rows(vec![vec![0.0, 2.0], vec![2.0, 0.0]]).unwrap();
        assert!(spectra_match(&eig_quotient(&m, &[2, 2]).unwrap(), &spec(&[2.0, -2.0]), 1e-12).matched);
    }

    #[test]
    fn quotient_rejects_malformed() {
        let m = Matrix::from_rows(vec![vec![0.0, 3.0], vec![3.0, 0.0]]).unwrap();
        assert!(eig_quotient(&m, &[2, 3]).is_err());
        assert!(eig_quotient(&m, &[2]).is_err());
    }

    #[test]
    fn matching_examples() {
        assert!(spectra_match(&spec(&[1.0, 0.0]), &spec(&[1.0 + 5e-9, 0.0]), 1e-8).matched);
        let m = spectra_match(&spec(&[1.0, 1.0, 0.0]), &spec(&[1.0, 0.0, 0.0]), 1e-8);
        assert!(!m.matched);
        assert_eq!(m.worst.unwrap().index, 1);
        let v: Vec<f64> = (0..50).map(|i| i as f64 * 0.37 - 4.0).collect();
        let m = spectra_match(&spec(&v), &spec(&v), 1e-8);
        assert!(m.matched);
        assert_eq!(m.max_error, 0.0);
        assert!(!spectra_match(&spec(&[1.0]), &spec(&[1.0, 2.0]), 1e-8).matched);
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity_of(&spec(&[2.0, -1.0, -1.0]), -1.0, 1e-9), 2);
        assert_eq!(multiplicity_of(&spec(&[0.0, 0.0, 0.0]), 1.0, 1e-9), 0);
    }

    #[test]
    fn char_poly_exact() {
        // K_3: x^3 - 3x - 2
        let p = characteristic_polynomial(&adjacency_matrix::<Ratio<i64>>(&Graph::complete(3).unwrap()));
        let ints: Vec<Ratio<i64>> = [1, 0, -3, -2].iter().map(|&c| Ratio::from_integer(c)).collect();
        assert_eq!(p, ints);
    }
}
