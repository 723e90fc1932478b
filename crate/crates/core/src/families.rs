//! Named instances: an independently constructed graph paired with the
//! closed-form prediction for it, plus the `name:params` string grammar.

use std::fmt;
use std::str::FromStr;

use crate::closed_forms::{
    predict_complete_multipartite, predict_joined_union, predict_named, predict_power_cyclic, predict_power_group,
    NamedFamily, PartSpectrum, PowerGroupKind, SpectralPrediction,
};
use crate::error::{Error, Result};
use crate::graph::{self, BasicKind, Graph, JoinedUnionSpec};
use crate::groups::{nonabelian_pq_power_graph, parse_params, power_graph, FiniteGroup, GroupKind};
use crate::scalar::Real;
use crate::spectra::Alpha;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `P(Z_n)`.
    PowerCyclic { n: u64 },
    Named(NamedFamily),
    CompleteMultipartite { sizes: Vec<usize> },
    PowerGroup(PowerGroupKind),
    /// An arbitrary joined union of regular parts.
    JoinedUnion { label: String, spec: JoinedUnionSpec },
}

impl Family {
    /// The graph, built without reference to the predicted structure:
    /// power graphs come from Cayley tables, families from unions and joins.
    pub fn graph(&self) -> Result<Graph> {
        match self {
            Self::PowerCyclic { n } => power_graph_of(GroupKind::Cyclic { n: *n as usize }),
            Self::Named(f) => f.graph(),
            Self::CompleteMultipartite { sizes } => complete_multipartite(sizes),
            Self::PowerGroup(kind) => {
                kind.validate()?;
                match *kind {
                    PowerGroupKind::ElementaryAbelian { p, k } => power_graph_of(GroupKind::ElementaryAbelian { p, k }),
                    PowerGroupKind::NonabelianPq { p, q } => nonabelian_pq_power_graph(p, q),
                    PowerGroupKind::DihedralPrimePower { n } => power_graph_of(GroupKind::Dihedral { n }),
                    PowerGroupKind::DicyclicTwoPower { n } => power_graph_of(GroupKind::Dicyclic { n }),
                }
            }
            Self::JoinedUnion { spec, .. } => graph::joined_union(spec),
        }
    }

    pub fn predict<T: Real>(&self, alpha: &Alpha<T>) -> Result<SpectralPrediction<T>> {
        match self {
            Self::PowerCyclic { n } => predict_power_cyclic(*n, alpha),
            Self::Named(f) => predict_named(*f, alpha),
            Self::CompleteMultipartite { sizes } => predict_complete_multipartite(sizes, alpha),
            Self::PowerGroup(kind) => predict_power_group(*kind, alpha),
            Self::JoinedUnion { spec, .. } => {
                let parts = spec
                    .parts()
                    .iter()
                    .map(PartSpectrum::from_graph)
                    .collect::<Result<Vec<_>>>()?;
                predict_joined_union(spec.base(), &parts, alpha)
            }
        }
    }
}

fn power_graph_of(kind: GroupKind) -> Result<Graph> {
    Ok(power_graph(&FiniteGroup::build(kind)?)?.graph)
}

/// `K_{n_1, ..., n_p}`: vertices in different parts are adjacent.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidParameter(format!("bad part sizes {sizes:?}")));
    }
    let part: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect();
    let n = part.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

fn join_csv(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::PowerCyclic { n } => write!(f, "power_cyclic:{n}"),
            Self::Named(named) => match *named {
                NamedFamily::Friendship { n } => write!(f, "friendship:{n}"),
                NamedFamily::Firefly { p, n } => write!(f, "firefly:{p},{n}"),
                NamedFamily::Wheel { n } => write!(f, "wheel:{n}"),
                NamedFamily::CompleteSplit { omega, n } => write!(f, "complete_split:{omega},{n}"),
                NamedFamily::Cone { a, b } => write!(f, "cone:{a},{b}"),
                NamedFamily::CompleteBipartite { a, b } => write!(f, "complete_bipartite:{a},{b}"),
            },
            Self::CompleteMultipartite { sizes } => write!(f, "multipartite:{}", join_csv(sizes)),
            Self::PowerGroup(kind) => match *kind {
                PowerGroupKind::ElementaryAbelian { p, k } => write!(f, "elementary_abelian:{p},{k}"),
                PowerGroupKind::NonabelianPq { p, q } => write!(f, "nonabelian_pq:{p},{q}"),
                PowerGroupKind::DihedralPrimePower { n } => write!(f, "dihedral_prime_power:{n}"),
                PowerGroupKind::DicyclicTwoPower { n } => write!(f, "dicyclic_two_power:{n}"),
            },
            Self::JoinedUnion { label, .. } => f.write_str(label),
        }
    }
}

/// Family names understood by [`Family::from_str`].
pub const FAMILY_NAMES: &[&str] = &[
    "power_cyclic",
    "friendship",
    "firefly",
    "wheel",
    "complete_split",
    "cone",
    "complete_bipartite",
    "multipartite",
    "elementary_abelian",
    "nonabelian_pq",
    "dihedral_prime_power",
    "dicyclic_two_power",
];

/// Parses `name:params`, e.g. `power_cyclic:30`, `cone:5,2`,
/// `multipartite:2,3,4`, `dihedral_prime_power:9` (the group `D_18`),
/// `dicyclic_two_power:4` (the quaternion group of order 16).
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family `{s}` lacks `name:params`")))?;
        let nums = parse_params(params)?;
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!("`{name}` takes {k} parameter(s), got {}", nums.len())))
            }
        };
        let family = match name {
            "power_cyclic" => {
                arity(1)?;
                Self::PowerCyclic { n: nums[0] as u64 }
            }
            "friendship" => {
                arity(1)?;
                Self::Named(NamedFamily::Friendship { n: nums[0] })
            }
            "firefly" => {
                arity(2)?;
                Self::Named(NamedFamily::Firefly { p: nums[0], n: nums[1] })
            }
            "wheel" => {
                arity(1)?;
                Self::Named(NamedFamily::Wheel { n: nums[0] })
            }
            "complete_split" => {
                arity(2)?;
                Self::Named(NamedFamily::CompleteSplit { omega: nums[0], n: nums[1] })
            }
            "cone" => {
                arity(2)?;
                Self::Named(NamedFamily::Cone { a: nums[0], b: nums[1] })
            }
            "complete_bipartite" => {
                arity(2)?;
                Self::Named(NamedFamily::CompleteBipartite { a: nums[0], b: nums[1] })
            }
            "multipartite" => Self::CompleteMultipartite { sizes: nums },
            "elementary_abelian" => {
                arity(2)?;
                let k = u32::try_from(nums[1]).map_err(|_| Error::Parse("exponent too large".into()))?;
                Self::PowerGroup(PowerGroupKind::ElementaryAbelian { p: nums[0], k })
            }
            "nonabelian_pq" => {
                arity(2)?;
                Self::PowerGroup(PowerGroupKind::NonabelianPq { p: nums[0], q: nums[1] })
            }
            "dihedral_prime_power" => {
                arity(1)?;
                Self::PowerGroup(PowerGroupKind::DihedralPrimePower { n: nums[0] })
            }
            "dicyclic_two_power" => {
                arity(1)?;
                Self::PowerGroup(PowerGroupKind::DicyclicTwoPower { n: nums[0] })
            }
            _ => return Err(Error::Parse(format!("unknown family `{name}`"))),
        };
        Ok(family)
    }
}

/// Graph constructor strings: the basic kinds (`complete:5`, `empty:3`,
/// `cycle:6`, `path:4`, `star:5`, sized by vertex count) and every family
/// name.
pub fn parse_graph_spec(s: &str) -> Result<Graph> {
    let (name, params) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("graph spec `{s}` lacks `name:params`")))?;
    if let Ok(kind) = name.parse::<BasicKind>() {
        let n = match parse_params(params)?[..] {
            [n] => n,
            _ => return Err(Error::Parse(format!("`{name}` takes one parameter"))),
        };
        return Graph::build_basic(kind, n);
    }
    s.parse::<Family>()?.graph()
}
