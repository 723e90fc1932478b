//! Published closed forms copied term by term, including their typos.
//!
//! Nothing here feeds the predictors. These functions exist so the printed
//! matrices and formulas can be compared against the generic construction;
//! where the two differ the discrepancy is a finding about the printed form.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::number_theory::{is_prime, totient};
use crate::scalar::Real;
use crate::spectra::Alpha;

fn phi<T: Real>(n: u64) -> Result<T> {
    Ok(T::from_count(totient(n)? as usize))
}

fn count<T: Real>(n: u64) -> T {
    T::from_count(n as usize)
}

fn require_primes(ps: &[u64]) -> Result<()> {
    if ps.iter().all(|&p| is_prime(p)) && ps.windows(2).all(|w| w[0] < w[1]) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("expected increasing primes, got {ps:?}")))
    }
}

/// Three-part matrix for `P(Z_pq)`, rows ordered `(K_φ(p), K_{φ(pq)+1}, K_φ(q))`.
pub fn qmat_pq<T: Real>(p: u64, q: u64, alpha: &Alpha<T>) -> Result<Matrix<T>> {
    require_primes(&[p, q])?;
    let a = alpha.get();
    let b = alpha.complement();
    let one = T::one();
    let (fp, fq, fpq) = (phi::<T>(p)?, phi::<T>(q)?, phi::<T>(p * q)?);
    Matrix::from_rows(vec![
        vec![fp - one + a * (fpq + one), b * (fpq + one), T::zero()],
        vec![b * fp, fpq + a * (fp + fq), b * fq],
        vec![T::zero(), b * (fpq + one), fq - one + a * (fpq + one)],
    ])
}

/// Seven-part matrix for `P(Z_pqr)`, rows ordered
/// `(centre, p, q, r, pq, pr, qr)`.
pub fn qmat_pqr<T: Real>(p: u64, q: u64, r: u64, alpha: &Alpha<T>) -> Result<Matrix<T>> {
    require_primes(&[p, q, r])?;
    let a = alpha.get();
    let b = alpha.complement();
    let one = T::one();
    let z = T::zero();
    let n = p * q * r;
    let fnn = phi::<T>(n)?;
    let (fp, fq, fr) = (phi::<T>(p)?, phi::<T>(q)?, phi::<T>(r)?);
    let (fpq, fpr, fqr) = (phi::<T>(p * q)?, phi::<T>(p * r)?, phi::<T>(q * r)?);
    let c1 = b * (fnn + one);
    let z1 = fnn + a * (count::<T>(n) - fnn - one);
    let z2 = fp - one + a * (fnn + one + fpr + fpq);
    // printed with φ(pq) + φ(pr)
    let z3 = fq - one + a * (fnn + one + fpq + fpr);
    let z4 = fr - one + a * (fnn + one + fpr + fqr);
    let z5 = fpq - one + a * (fnn + one + fp + fq);
    let z6 = fpr - one + a * (fnn + one + fp + fr);
    let z7 = fqr - one + a * (fnn + one + fq + fr);
    Matrix::from_rows(vec![
        vec![z1, b * fp, b * fq, b * fr, b * fpq, b * fpr, b * fqr],
        vec![c1, z2, z, z, b * fpq, b * fpr, z],
        vec![c1, z, z3, z, b * fpq, z, b * fqr],
        vec![c1, z, z, z4, z, b * fpr, b * fqr],
        vec![c1, b * fp, b * fq, z, z5, z, z],
        vec![c1, b * fp, z, b * fr, z, z6, z],
        vec![c1, z, b * fq, b * fr, z, z, z7],
    ])
}

/// One explicitly written term of the `P(Z_{pq^N})` eigenvalue list.
#[derive(Debug, Clone, PartialEq)]
pub struct ListedEigenvalue<T> {
    /// Divisor whose clique produces the term; `1` stands for the
    /// identity-plus-generators clique.
    pub divisor: u64,
    pub value: T,
    pub mult: usize,
}

/// The explicitly written terms of the `P(Z_{pq^N})` eigenvalue list, `N >= 2`
/// (the terms elided with dots are omitted). For small `m` several written
/// terms name the same divisor; each is kept.
pub fn pq_power_listed<T: Real>(p: u64, q: u64, big_n: u32, alpha: &Alpha<T>) -> Result<Vec<ListedEigenvalue<T>>> {
    if !is_prime(p) || !is_prime(q) || p == q || big_n < 2 {
        return Err(Error::InvalidParameter(format!("expected distinct primes and N >= 2, got {p}, {q}, {big_n}")));
    }
    let a = alpha.get();
    let one = T::one();
    let n = p * q.pow(big_n);
    let fnn = phi::<T>(n)?;
    let fp = phi::<T>(p)?;
    let fq = phi::<T>(q)?;
    let qp = |e: u32| count::<T>(q.pow(e));
    let mult = |d: u64| -> Result<usize> { Ok(totient(d)? as usize - 1) };
    let term = |divisor: u64, inner: T| -> Result<ListedEigenvalue<T>> {
        Ok(ListedEigenvalue {
            divisor,
            value: a * inner - one,
            mult: mult(divisor)?,
        })
    };
    let mut out = vec![ListedEigenvalue {
        divisor: 1,
        value: a * count::<T>(n) - one,
        mult: totient(n)? as usize,
    }];
    if big_n % 2 == 0 {
        let m = big_n / 2;
        out.push(term(p, fnn + fp * qp(2 * m - 1) + one)?);
        out.push(term(q, fnn + qp(2 * m) + fp * (qp(2 * m - 1) - one))?);
        out.push(term(q.pow(m), fnn + qp(2 * m) + fp * (qp(2 * m - 1) - qp(m - 1)))?);
        out.push(term(q.pow(2 * m), fnn + qp(2 * m))?);
        out.push(term(p * q, fnn + fq + fp * qp(2 * m - 1) + one)?);
        out.push(term(p * q.pow(m), fnn + qp(m) + fp * qp(2 * m - 1))?);
        out.push(term(p * q.pow(2 * m - 1), fnn + qp(2 * m - 1) + fp * qp(2 * m - 1))?);
    } else {
        let m = (big_n - 1) / 2;
        out.push(term(p, fnn + fp * qp(2 * m) + one)?);
        out.push(term(q, fnn + qp(2 * m + 1) + fp * (qp(2 * m) - one))?);
        out.push(term(q.pow(m + 1), fnn + qp(2 * m + 1) + fp * (qp(2 * m) - qp(m)))?);
        out.push(term(q.pow(2 * m + 1), fnn + qp(2 * m + 1))?);
        out.push(term(p * q, fnn + fq + fp * qp(2 * m) + one)?);
        out.push(term(p * q.pow(m + 1), fnn + qp(m + 1) + fp * qp(2 * m))?);
        out.push(term(p * q.pow(2 * m), fnn + qp(2 * m) + fp * qp(2 * m - 1))?);
    }
    Ok(out)
}

/// Complete multiplicity list for `P(Z_{pq^N})`: `φ(n)` followed by
/// `φ(d) - 1` over `p`, `q^j` (`j = 1..=N`) and `pq^j` (`j = 1..N`).
pub fn pq_power_multiplicities(p: u64, q: u64, big_n: u32) -> Result<Vec<usize>> {
    let n = p * q.pow(big_n);
    let mut out = vec![totient(n)? as usize, totient(p)? as usize - 1];
    for j in 1..=big_n {
        out.push(totient(q.pow(j))? as usize - 1);
    }
    for j in 1..big_n {
        out.push(totient(p * q.pow(j))? as usize - 1);
    }
    Ok(out)
}

fn elementary_l(p: u64, k: u32) -> usize {
    ((p.pow(k) - 1) / (p - 1)) as usize
}

/// `(l + 1)`-dimensional matrix for the elementary abelian `p`-group of
/// order `p^k`.
pub fn qmat_elementary_abelian<T: Real>(p: u64, k: u32, alpha: &Alpha<T>) -> Result<Matrix<T>> {
    require_primes(&[p])?;
    let l = elementary_l(p, k);
    let a = alpha.get();
    let b = alpha.complement();
    let pm1 = count::<T>(p - 1);
    Ok(Matrix::from_fn(l + 1, |i, j| match (i, j) {
        (0, 0) => a * T::from_count(l) * pm1,
        (0, _) => b * pm1,
        (_, 0) => b,
        _ if i == j => a + count::<T>(p) - T::lit(2.0),
        _ => T::zero(),
    }))
}

pub fn reduced_elementary_abelian<T: Real>(p: u64, k: u32, alpha: &Alpha<T>) -> Result<Matrix<T>> {
    require_primes(&[p])?;
    let l = T::from_count(elementary_l(p, k));
    let a = alpha.get();
    let b = alpha.complement();
    let pm1 = count::<T>(p - 1);
    Matrix::from_rows(vec![
        vec![a * l * pm1, l * b * pm1],
        vec![b, a + count::<T>(p) - T::lit(2.0)],
    ])
}

/// The printed `±` pair for the elementary abelian group.
pub fn elementary_abelian_pair<T: Real>(p: u64, k: u32, alpha: &Alpha<T>) -> Result<(T, T)> {
    require_primes(&[p])?;
    let l = T::from_count(elementary_l(p, k));
    let a = alpha.get();
    let pp = count::<T>(p);
    let two = T::lit(2.0);
    let centre = a * (l * pp + T::one() - l) + pp - two;
    let inner = a * l * pp + pp + a - a * l - two;
    let disc = inner * inner - T::lit(4.0) * l * (a * pp * pp - a * pp - pp + T::one());
    let root = disc.sqrt();
    Ok((centre + root, centre - root))
}

/// `(q + 2)`-dimensional matrix for the non-abelian group of order `pq`,
/// rows ordered `(centre, q copies of K_{p-1}, K_{q-1})`.
pub fn qmat_nonabelian_pq<T: Real>(p: u64, q: u64, alpha: &Alpha<T>) -> Result<Matrix<T>> {
    require_primes(&[p, q])?;
    let a = alpha.get();
    let b = alpha.complement();
    let two = T::lit(2.0);
    let dim = q as usize + 2;
    Ok(Matrix::from_fn(dim, |i, j| match (i, j) {
        (0, 0) => a * count::<T>(p * q - 1),
        (0, j) if j == dim - 1 => b * count::<T>(q - 1),
        (0, _) => b * count::<T>(p - 1),
        (_, 0) => b,
        (i, j) if i == j && i == dim - 1 => a + count::<T>(q) - two,
        (i, j) if i == j => a + count::<T>(p) - two,
        _ => T::zero(),
    }))
}

/// Reduced 3×3 matrix for the non-abelian group of order `pq`. The printed
/// leading entry is in terms of an undefined `l`; the value `α(pq - 1)` of
/// the unreduced matrix is used.
pub fn reduced_nonabelian_pq<T: Real>(p: u64, q: u64, alpha: &Alpha<T>) -> Result<Matrix<T>> {
    require_primes(&[p, q])?;
    let a = alpha.get();
    let b = alpha.complement();
    let two = T::lit(2.0);
    let z = T::zero();
    Matrix::from_rows(vec![
        vec![a * count::<T>(p * q - 1), count::<T>(q) * b * count::<T>(p - 1), b * count::<T>(q - 1)],
        vec![b, a + count::<T>(p) - two, z],
        vec![b, z, a + count::<T>(q) - two],
    ])
}

fn require_two_power(n: usize) -> Result<()> {
    if n >= 2 && n.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("expected a power of two >= 2, got {n}")))
    }
}

/// Stated fixed list for the generalized quaternion group `Q_n` of order
/// `4n`: `{4αn - 1, (2αn - 1)^(2n-3), (4α - 1)^(n), (1 + 2α)^(n-2)}`.
pub fn quaternion_fixed<T: Real>(n: usize, alpha: &Alpha<T>) -> Result<Vec<(T, usize)>> {
    require_two_power(n)?;
    let a = alpha.get();
    let nn = T::from_count(n);
    let one = T::one();
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    Ok(vec![
        (four * a * nn - one, 1),
        (two * a * nn - one, 2 * n - 3),
        (four * a - one, n),
        (one + two * a, n - 2),
    ])
}

/// `(n + 2)`-dimensional quotient matrix for `Q_n`.
pub fn qmat_quaternion<T: Real>(n: usize, alpha: &Alpha<T>) -> Result<Matrix<T>> {
    require_two_power(n)?;
    let a = alpha.get();
    let b = alpha.complement();
    let nn = T::from_count(n);
    let two = T::lit(2.0);
    Ok(Matrix::from_fn(n + 2, |i, j| match (i, j) {
        (0, 0) => T::one() + a * (T::lit(4.0) * nn - two),
        (0, 1) => b * (two * nn - two),
        (0, _) | (_, 0) => b * two,
        (1, 1) => two * nn - T::lit(3.0) + two * a,
        _ if i == j => T::one() + two * a,
        _ => T::zero(),
    }))
}

/// Reduced 3×3 matrix for `Q_n`.
pub fn reduced_quaternion<T: Real>(n: usize, alpha: &Alpha<T>) -> Result<Matrix<T>> {
    require_two_power(n)?;
    let a = alpha.get();
    let b = alpha.complement();
    let nn = T::from_count(n);
    let two = T::lit(2.0);
    let z = T::zero();
    Matrix::from_rows(vec![
        vec![T::one() + a * (T::lit(4.0) * nn - two), b * (two * nn - two), two * nn * b],
        vec![two * b, two * nn - T::lit(3.0) + a, z],
        vec![two * b, z, T::one() + two * a],
    ])
}

/// 3×3 matrix for `P(D_2n)`, `n` a prime power, rows ordered
/// `(K_{n-1}, K_1, K̄_n)`.
pub fn qmat_dihedral<T: Real>(n: usize, alpha: &Alpha<T>) -> Result<Matrix<T>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("dihedral needs n >= 3, got {n}")));
    }
    let a = alpha.get();
    let b = alpha.complement();
    let nn = T::from_count(n);
    let two = T::lit(2.0);
    let z = T::zero();
    Matrix::from_rows(vec![
        vec![nn - two + a, b, z],
        vec![b * (nn - two), a * (two * nn - T::one()), b * nn],
        vec![z, b, a],
    ])
}

/// Monic coefficients (highest degree first) of the printed dihedral cubic
/// `(α - x)(α² - 2α + 2αn² + α²n - 3αn - 2αnx - nx - n + x² + 2x + 2)
///  - (1 - α)² n (α + n - x - 2)`.
pub fn dihedral_cubic<T: Real>(n: usize, alpha: &Alpha<T>) -> Result<[T; 4]> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("dihedral needs n >= 3, got {n}")));
    }
    let a = alpha.get();
    let nn = T::from_count(n);
    let two = T::lit(2.0);
    let w = alpha.complement() * alpha.complement() * nn;
    // quadratic factor x² + bx + c
    let b = two - two * a * nn - nn;
    let c = a * a - two * a + two * a * nn * nn + a * a * nn - T::lit(3.0) * a * nn - nn + two;
    Ok([T::one(), b - a, c - a * b - w, w * (a + nn - two) - a * c])
}

/// Printed `(n + 1)`-dimensional matrix for the friendship graph `F_n`.
pub fn qmat_friendship<T: Real>(n: usize, alpha: &Alpha<T>) -> Result<Matrix<T>> {
    if n == 0 {
        return Err(Error::InvalidParameter("friendship needs n >= 1".into()));
    }
    let a = alpha.get();
    let b = alpha.complement();
    let two = T::lit(2.0);
    Ok(Matrix::from_fn(n + 1, |i, j| match (i, j) {
        (0, 0) => two * a * T::from_count(n),
        (0, _) => two * b,
        (_, 0) => b,
        _ if i == j => T::one() + a,
        _ => two * b,
    }))
}

/// Printed pair for `K_{a,b}`.
pub fn complete_bipartite_pair<T: Real>(a: usize, b: usize, alpha: &Alpha<T>) -> (T, T) {
    let x = alpha.get();
    let s = T::from_count(a + b);
    let ab = T::from_count(a * b);
    let root = (x * x * s * s + T::lit(4.0) * ab * (T::one() - T::lit(2.0) * x)).sqrt();
    let half = T::lit(0.5);
    (half * (x * s + root), half * (x * s - root))
}

/// Printed pair for `CS_{ω,n-ω}` (no dependence on `α`).
pub fn complete_split_pair<T: Real>(omega: usize, n: usize) -> (T, T) {
    let w = T::from_count(omega);
    let nn = T::from_count(n);
    let one = T::one();
    let two = T::lit(2.0);
    let centre = T::lit(5.0) * nn - two * w - T::lit(6.0);
    let d = T::lit(3.0) * (two * w - nn) - two * (w - one);
    let root = (d * d + T::lit(4.0) * w * (nn - w)).sqrt();
    let half = T::lit(0.5);
    (half * (centre + root), half * (centre - root))
}

/// Printed pair for the cone `C_{a,b}`.
pub fn cone_pair<T: Real>(a: usize, b: usize, alpha: &Alpha<T>) -> (T, T) {
    let x = alpha.get();
    let (aa, bb) = (T::from_count(a), T::from_count(b));
    let four = T::lit(4.0);
    let s = aa + bb;
    let disc = x * x * s * s + x * (four * aa - four * bb - T::lit(8.0) * aa * bb) + four * aa * bb + four;
    let centre = T::lit(2.0) + x * s;
    let half = T::lit(0.5);
    (half * (centre + disc.sqrt()), half * (centre - disc.sqrt()))
}

/// Printed pair for the wheel `W_{n+1}`.
pub fn wheel_pair<T: Real>(n: usize, alpha: &Alpha<T>) -> (T, T) {
    let x = alpha.get();
    let n1 = T::from_count(n + 1);
    let nn = T::from_count(n);
    let four = T::lit(4.0);
    let disc = x * x * n1 * n1 + x * (four - T::lit(12.0) * nn) + four * nn + four;
    let centre = T::lit(2.0) + x * n1;
    let half = T::lit(0.5);
    (half * (centre + disc.sqrt()), half * (centre - disc.sqrt()))
}
