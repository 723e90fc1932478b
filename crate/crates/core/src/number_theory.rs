//! Totients, divisors and the proper-divisor graph.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Trial division handles anything up to this bound comfortably.
pub const MAX_INPUT: u64 = 1_000_000_000;

/// Prime-power decomposition with primes in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn of(n: u64) -> Result<Self> {
        check_input(n, 1)?;
        let mut rest = n;
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= rest {
            if rest % p == 0 {
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                out.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            out.push((rest, 1));
        }
        Ok(Self(out))
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn divisor_count(&self) -> u64 {
        self.0.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }

    pub fn is_prime_power(&self) -> bool {
        self.0.len() == 1
    }
}

fn check_input(n: u64, min: u64) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!("expected n >= {min}, got {n}")));
    }
    if n > MAX_INPUT {
        return Err(Error::InvalidParameter(format!("n = {n} exceeds {MAX_INPUT}")));
    }
    Ok(())
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && Factorization::of(n).is_ok_and(|f| f.pairs() == [(n, 1)])
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient.
pub fn totient(n: u64) -> Result<u64> {
    let f = Factorization::of(n)?;
    Ok(f.pairs()
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// Divisors `d` with `1 < d < n`, ascending.
pub fn proper_divisors(n: u64) -> Result<Vec<u64>> {
    check_input(n, 2)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// The proper divisors of `n` as vertices, adjacent when one divides the
/// other. Vertex `i` carries `divisors[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorGraph {
    pub graph: Graph,
    pub divisors: Vec<u64>,
}

pub fn divisor_graph(n: u64) -> Result<DivisorGraph> {
    let divisors = proper_divisors(n)?;
    let mut edges = Vec::new();
    for (i, &a) in divisors.iter().enumerate() {
        for (j, &b) in divisors.iter().enumerate().skip(i + 1) {
            if b % a == 0 {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(divisors.len(), &edges)?
        .with_labels(divisors.iter().map(u64::to_string).collect())?;
    Ok(DivisorGraph { graph, divisors })
}

/// Like [`divisor_graph`] but fails when `n` has no proper divisors.
pub fn nonempty_divisor_graph(n: u64) -> Result<DivisorGraph> {
    let dg = divisor_graph(n)?;
    if dg.divisors.is_empty() {
        return Err(Error::InvalidParameter(format!("{n} has no proper divisors")));
    }
    Ok(dg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_totient(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    fn brute_divisors(n: u64) -> Vec<u64> {
        (2..n).filter(|d| n % d == 0).collect()
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(totient(7).unwrap(), 6);
        assert_eq!(brute_totient(6), 2);
        assert_eq!(totient(6).unwrap(), 2);
        assert!(totient(0).is_err());
    }

    #[test]
    fn totient_matches_brute_count() {
        for n in 1..500 {
            assert_eq!(totient(n).unwrap(), brute_totient(n), "n = {n}");
        }
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(brute_divisors(12), vec![2, 3, 4, 6]);
        assert_eq!(proper_divisors(12).unwrap(), vec![2, 3, 4, 6]);
        assert_eq!(proper_divisors(9).unwrap(), vec![3]);
        assert!(proper_divisors(7).unwrap().is_empty());
        assert!(proper_divisors(1).is_err());
        for n in 2..400 {
            assert_eq!(proper_divisors(n).unwrap(), brute_divisors(n));
        }
    }

    #[test]
    fn divisor_graph_examples() {
        let g12 = divisor_graph(12).unwrap();
        assert_eq!(g12.divisors, vec![2, 3, 4, 6]);
        // 2-4, 2-6, 3-6 : the path 4-2-6-3
        assert_eq!(g12.graph.edges(), vec![(0, 2), (0, 3), (1, 3)]);
        let g6 = divisor_graph(6).unwrap();
        assert_eq!(g6.divisors, vec![2, 3]);
        assert_eq!(g6.graph.edge_count(), 0);
        let g9 = divisor_graph(9).unwrap();
        assert_eq!((g9.graph.order(), g9.graph.edge_count()), (1, 0));
        assert!(nonempty_divisor_graph(13).is_err());
    }

    #[test]
    fn factorization_roundtrip() {
        for n in 1..2000 {
            let f = Factorization::of(n).unwrap();
            assert_eq!(f.value(), n);
            assert!(f.pairs().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.pairs().iter().all(|&(p, e)| e >= 1 && is_prime(p)));
        }
        assert!(Factorization::of(MAX_INPUT + 1).is_err());
    }
}
