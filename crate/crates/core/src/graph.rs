//! Simple undirected graphs and the union / join / joined-union operators.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest vertex count the dense representation accepts.
pub const MAX_ORDER: usize = 4096;

/// Simple undirected graph with a dense adjacency table.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    Complete,
    Empty,
    Cycle,
    Path,
    Star,
}

impl FromStr for BasicKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(Self::Complete),
            "empty" => Ok(Self::Empty),
            "cycle" => Ok(Self::Cycle),
            "path" => Ok(Self::Path),
            "star" => Ok(Self::Star),
            _ => Err(Error::Parse(format!("unknown basic graph kind `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeInfo {
    pub degrees: Vec<usize>,
    /// `Some(r)` when every vertex has degree `r`.
    pub regular: Option<usize>,
    pub edges: usize,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge(n));
        }
        Ok(Self {
            n,
            adj: vec![false; n * n],
            labels: None,
        })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn build_basic(kind: BasicKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("graph order must be positive".into()));
        }
        let mut g = Self::new(n)?;
        match kind {
            BasicKind::Complete => {
                for u in 0..n {
                    for v in (u + 1)..n {
                        g.set_edge(u, v);
                    }
                }
            }
            BasicKind::Empty => {}
            BasicKind::Cycle => {
                if n < 3 {
                    return Err(Error::InvalidParameter(format!(
                        "cycle needs at least 3 vertices, got {n}"
                    )));
                }
                for u in 0..n {
                    g.set_edge(u, (u + 1) % n);
                }
            }
            BasicKind::Path => {
                for u in 1..n {
                    g.set_edge(u - 1, u);
                }
            }
            BasicKind::Star => {
                for v in 1..n {
                    g.set_edge(0, v);
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::build_basic(BasicKind::Complete, n)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::build_basic(BasicKind::Empty, n)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::build_basic(BasicKind::Cycle, n)
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::build_basic(BasicKind::Path, n)
    }

    pub fn star(n: usize) -> Result<Self> {
        Self::build_basic(BasicKind::Star, n)
    }

    /// Attaches display labels; the list must have one entry per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let degrees = self.degrees();
        match degrees.first() {
            Some(&d) if degrees.iter().all(|&x| x == d) => Some(d),
            _ => None,
        }
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Maximum distance over all vertex pairs; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn degree_info(&self) -> DegreeInfo {
        DegreeInfo {
            degrees: self.degrees(),
            regular: self.regular_degree(),
            edges: self.edge_count(),
            diameter: self.diameter(),
        }
    }

    /// Vertex `i` of the result is vertex `order[i]` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if order.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: order.len(),
            });
        }
        for &v in order {
            if v >= self.n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParameter("order is not a permutation".into()));
            }
        }
        let mut g = Self::new(self.n)?;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_edge(order[i], order[j]) {
                    g.set_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(order.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    /// Induced subgraph on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut g = Self::new(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Checks the representation invariants: symmetric table, empty diagonal,
    /// label count.
    pub fn validate(&self) -> Result<()> {
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) != self.has_edge(v, u) {
                    return Err(Error::InvalidGraph(format!("asymmetric pair ({u}, {v})")));
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::InvalidGraph("label count mismatch".into()));
            }
        }
        Ok(())
    }
}

fn concat_labels(graphs: &[&Graph]) -> Option<Vec<String>> {
    if graphs.iter().all(|g| g.labels.is_none()) {
        return None;
    }
    let mut out = Vec::new();
    for g in graphs {
        match &g.labels {
            Some(l) => out.extend(l.iter().cloned()),
            None => out.extend((0..g.n).map(|v| v.to_string())),
        }
    }
    Some(out)
}

/// Vertex-disjoint union; `g`'s vertices come first.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = Graph::new(g.n + h.n)?;
    for (u, v) in g.edges() {
        out.set_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.set_edge(g.n + u, g.n + v);
    }
    out.labels = concat_labels(&[g, h]);
    Ok(out)
}

/// Disjoint union of several graphs, folded left to right.
pub fn disjoint_union_all<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Result<Graph> {
    graphs
        .into_iter()
        .try_fold(Graph::new(0)?, |acc, g| disjoint_union(&acc, g))
}

/// `g ▽ h`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = disjoint_union(g, h)?;
    for u in 0..g.n {
        for v in 0..h.n {
            out.set_edge(u, g.n + v);
        }
    }
    Ok(out)
}

/// A base graph together with one part per base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinedUnionSpec {
    base: Graph,
    parts: Vec<Graph>,
}

impl JoinedUnionSpec {
    pub fn new(base: Graph, parts: Vec<Graph>) -> Result<Self> {
        if parts.len() != base.order() {
            return Err(Error::DimensionMismatch {
                expected: base.order(),
                found: parts.len(),
            });
        }
        if let Some(i) = parts.iter().position(|p| p.order() == 0) {
            return Err(Error::InvalidParameter(format!("part {i} is empty")));
        }
        Ok(Self { base, parts })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn parts(&self) -> &[Graph] {
        &self.parts
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Graph::order).collect()
    }

    /// For each base vertex, the total order of the parts at its neighbours.
    pub fn neighbor_weights(&self) -> Vec<usize> {
        neighbor_weights(&self.base, &self.sizes())
    }

    pub fn total_order(&self) -> usize {
        self.parts.iter().map(Graph::order).sum()
    }
}

pub(crate) fn neighbor_weights(base: &Graph, sizes: &[usize]) -> Vec<usize> {
    (0..base.order())
        .map(|i| base.neighbors(i).map(|j| sizes[j]).sum())
        .collect()
}

/// Start offset of each part when parts are laid out in base-vertex order.
pub fn part_offsets(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .scan(0, |acc, &s| {
            let start = *acc;
            *acc += s;
            Some(start)
        })
        .collect()
}

/// `G[G_1, ..., G_n]`. Vertices are laid out part by part in base-vertex
/// order, each part keeping its internal order.
pub fn joined_union(spec: &JoinedUnionSpec) -> Result<Graph> {
    let sizes = spec.sizes();
    let offsets = part_offsets(&sizes);
    let refs: Vec<&Graph> = spec.parts.iter().collect();
    let mut out = disjoint_union_all(refs.iter().copied())?;
    for (i, j) in spec.base.edges() {
        for u in 0..sizes[i] {
            for v in 0..sizes[j] {
                out.set_edge(offsets[i] + u, offsets[j] + v);
            }
        }
    }
    out.labels = concat_labels(&refs);
    Ok(out)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Parses the edge-list text format: a header `n m` followed by `m` lines
/// `u v` of 0-based endpoints.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let (n, m) = parse_pair(header, 1)?;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        edges.push(parse_pair(line, idx + 1)?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let bad = || Error::Parse(format!("line {line_no}: expected two integers, got `{line}`"));
    if fields.len() != 2 {
        return Err(bad());
    }
    let a = fields[0].parse().map_err(|_| bad())?;
    let b = fields[1].parse().map_err(|_| bad())?;
    Ok((a, b))
}

pub fn format_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
