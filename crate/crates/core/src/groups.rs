//! Finite groups given by Cayley tables, and their power graphs.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::number_theory::is_prime;

/// Groups up to this order have associativity checked exhaustively.
const EXHAUSTIVE_ASSOC_ORDER: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// `Z_n`.
    Cyclic { n: usize },
    /// `D_{2n}`, order `2n`.
    Dihedral { n: usize },
    /// `Q_n = <a, b | a^{2n} = e, b^2 = a^n, ab = ba^{-1}>`, order `4n`.
    Dicyclic { n: usize },
    /// `(Z_p)^k`.
    ElementaryAbelian { p: usize, k: u32 },
}

impl GroupKind {
    pub fn order(&self) -> usize {
        match *self {
            Self::Cyclic { n } => n,
            Self::Dihedral { n } => 2 * n,
            Self::Dicyclic { n } => 4 * n,
            Self::ElementaryAbelian { p, k } => p.pow(k),
        }
    }
}

/// Parses `cyclic:6`, `dihedral:12`, `dicyclic:8`, `elementary_abelian:3,2`
/// (also `elemabelian:3,2`).
///
/// Dihedral and dicyclic parameters are group orders, so `dihedral:12` is
/// `D_12` and `dicyclic:8` is the quaternion group of order 8.
impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("group spec `{s}` lacks `kind:params`")))?;
        let nums = parse_params(params)?;
        let one = |nums: &[usize]| match nums {
            [x] => Ok(*x),
            _ => Err(Error::Parse(format!("`{kind}` takes one parameter"))),
        };
        match kind {
            "cyclic" => Ok(Self::Cyclic { n: one(&nums)? }),
            "dihedral" => {
                let order = one(&nums)?;
                if order == 0 || order % 2 != 0 {
                    return Err(Error::Parse(format!("dihedral order {order} must be even and positive")));
                }
                Ok(Self::Dihedral { n: order / 2 })
            }
            "dicyclic" => {
                let order = one(&nums)?;
                if order == 0 || order % 4 != 0 {
                    return Err(Error::Parse(format!("dicyclic order {order} must be a positive multiple of 4")));
                }
                Ok(Self::Dicyclic { n: order / 4 })
            }
            "elemabelian" | "elementary_abelian" => match nums[..] {
                [p, k] => Ok(Self::ElementaryAbelian {
                    p,
                    k: u32::try_from(k).map_err(|_| Error::Parse("exponent too large".into()))?,
                }),
                _ => Err(Error::Parse("`elemabelian` takes `p,k`".into())),
            },
            _ => Err(Error::Parse(format!("unknown group kind `{kind}`"))),
        }
    }
}

pub(crate) fn parse_params(params: &str) -> Result<Vec<usize>> {
    params
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
        })
        .collect()
}

/// A finite group as a composition table over element indices.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<usize>,
    order: usize,
    identity: usize,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Validates the table: Latin square, two-sided identity, associativity
    /// (exhaustive up to order 64, sampled above).
    pub fn from_table(table: Vec<Vec<usize>>, identity: usize, names: Vec<String>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if names.len() != order || identity >= order {
            return Err(Error::InvalidGroup("names or identity inconsistent with order".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in &table {
            if row.len() != order {
                return Err(Error::InvalidGroup("ragged table".into()));
            }
            flat.extend_from_slice(row);
        }
        let g = Self {
            table: flat,
            order,
            identity,
            names,
        };
        g.check_latin()?;
        g.check_identity()?;
        g.check_associative()?;
        Ok(g)
    }

    pub fn build(kind: GroupKind) -> Result<Self> {
        match kind {
            GroupKind::Cyclic { n } => cyclic(n),
            GroupKind::Dihedral { n } => dihedral(n),
            GroupKind::Dicyclic { n } => dicyclic(n),
            GroupKind::ElementaryAbelian { p, k } => elementary_abelian(p, k),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    /// The cyclic subgroup `<x>` as successive powers `x, x^2, ..., e`.
    pub fn powers(&self, x: usize) -> Vec<usize> {
        let mut out = vec![x];
        let mut cur = x;
        while cur != self.identity {
            cur = self.op(cur, x);
            out.push(cur);
        }
        out
    }

    pub fn element_order(&self, x: usize) -> Result<usize> {
        if x >= self.order {
            return Err(Error::InvalidParameter(format!(
                "element {x} out of range for order {}",
                self.order
            )));
        }
        Ok(self.powers(x).len())
    }

    fn check_latin(&self) -> Result<()> {
        let n = self.order;
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                let r = self.op(i, j);
                let c = self.op(j, i);
                if r >= n || c >= n || std::mem::replace(&mut row[r], true) || std::mem::replace(&mut col[c], true) {
                    return Err(Error::InvalidGroup(format!("row/column {i} is not a permutation")));
                }
            }
        }
        Ok(())
    }

    fn check_identity(&self) -> Result<()> {
        let e = self.identity;
        if (0..self.order).all(|x| self.op(e, x) == x && self.op(x, e) == x) {
            Ok(())
        } else {
            Err(Error::InvalidGroup(format!("element {e} is not a two-sided identity")))
        }
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| {
            if self.op(self.op(a, b), c) == self.op(a, self.op(b, c)) {
                Ok(())
            } else {
                Err(Error::InvalidGroup(format!("({a} {b}) {c} != {a} ({b} {c})")))
            }
        };
        if n <= EXHAUSTIVE_ASSOC_ORDER {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                check(rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("names", &self.names)
            .finish()
    }
}

fn positive(name: &str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(format!("{name} parameter must be positive")));
    }
    Ok(())
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    positive("cyclic", n)?;
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(table, 0, (0..n).map(|i| i.to_string()).collect())
}

/// Normal form `a^i b^j`, index `i + j*m`, with `b a^k = a^{-k} b` and
/// `b^2 = a^{b_sq}`.
fn metacyclic(m: usize, b_sq: usize) -> Result<FiniteGroup> {
    let order = 2 * m;
    let split = |x: usize| (x % m, x / m);
    let table = (0..order)
        .map(|x| {
            (0..order)
                .map(|y| {
                    let (i, j) = split(x);
                    let (k, l) = split(y);
                    // a^i b^j a^k b^l = a^{i + (-1)^j k} b^{j+l}
                    let shifted = if j == 0 { (i + k) % m } else { (i + m - k) % m };
                    match (j + l) % 2 {
                        0 if j + l == 2 => (shifted + b_sq) % m,
                        0 => shifted,
                        _ => shifted + m,
                    }
                })
                .collect()
        })
        .collect();
    let names = (0..order)
        .map(|x| {
            let (i, j) = split(x);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (0, 1) => "b".to_string(),
                (1, 0) => "a".to_string(),
                (1, 1) => "ab".to_string(),
                (i, 0) => format!("a^{i}"),
                (i, _) => format!("a^{i}b"),
            }
        })
        .collect();
    FiniteGroup::from_table(table, 0, names)
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    positive("dihedral", n)?;
    metacyclic(n, 0)
}

fn dicyclic(n: usize) -> Result<FiniteGroup> {
    positive("dicyclic", n)?;
    metacyclic(2 * n, n)
}

fn elementary_abelian(p: usize, k: u32) -> Result<FiniteGroup> {
    if !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    positive("elementary abelian exponent", k as usize)?;
    let order = p
        .checked_pow(k)
        .filter(|&o| o <= graph::MAX_ORDER)
        .ok_or(Error::TooLarge(usize::MAX))?;
    let digits = |mut x: usize| {
        let mut d = Vec::with_capacity(k as usize);
        for _ in 0..k {
            d.push(x % p);
            x /= p;
        }
        d
    };
    let table = (0..order)
        .map(|x| {
            let dx = digits(x);
            (0..order)
                .map(|y| {
                    digits(y)
                        .iter()
                        .zip(&dx)
                        .rev()
                        .fold(0, |acc, (a, b)| acc * p + (a + b) % p)
                })
                .collect()
        })
        .collect();
    let names = (0..order)
        .map(|x| {
            let d: Vec<String> = digits(x).iter().map(usize::to_string).collect();
            format!("({})", d.join(","))
        })
        .collect();
    FiniteGroup::from_table(table, 0, names)
}

/// A power graph together with its universal vertices.
#[derive(Debug, Clone)]
pub struct PowerGraph {
    pub graph: Graph,
    pub universal: Vec<usize>,
}

/// Distinct `x`, `y` are adjacent when one lies in the cyclic subgroup
/// generated by the other.
pub fn power_graph(g: &FiniteGroup) -> Result<PowerGraph> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidParameter("power graph needs order >= 2".into()));
    }
    let mut member = vec![false; n * n];
    for x in 0..n {
        for y in g.powers(x) {
            member[x * n + y] = true;
        }
    }
    let mut edges = Vec::new();
    for x in 0..n {
        for y in (x + 1)..n {
            if member[x * n + y] || member[y * n + x] {
                edges.push((x, y));
            }
        }
    }
    let graph = Graph::from_edges(n, &edges)?.with_labels(g.names().to_vec())?;
    let universal = universal_vertices(&graph);
    Ok(PowerGraph { graph, universal })
}

/// Vertices adjacent to every other vertex.
pub fn universal_vertices(g: &Graph) -> Vec<usize> {
    let n = g.order();
    (0..n).filter(|&v| g.degree(v) + 1 == n).collect()
}

/// `K_1 ▽ (q K_{p-1} ∪ K_{q-1})`, the power graph of a non-abelian group of
/// order `pq`, built from its structure rather than from a Cayley table.
/// Requires primes `p < q` with `q ≡ 1 (mod p)`.
pub fn nonabelian_pq_power_graph(p: usize, q: usize) -> Result<Graph> {
    check_nonabelian_pq(p, q)?;
    let kp = Graph::complete(p - 1)?;
    let kq = Graph::complete(q - 1)?;
    let mut pieces: Vec<&Graph> = std::iter::repeat_n(&kp, q).collect();
    pieces.push(&kq);
    let rest = graph::disjoint_union_all(pieces)?;
    graph::join(&Graph::complete(1)?, &rest)
}

pub(crate) fn check_nonabelian_pq(p: usize, q: usize) -> Result<()> {
    if !(is_prime(p as u64) && is_prime(q as u64)) || p >= q || (q - 1) % p != 0 {
        return Err(Error::InvalidParameter(format!(
            "no non-abelian group of order {p}*{q}: need primes p < q with p | q - 1"
        )));
    }
    Ok(())
}
