//! Equitable partitions, quotient matrices, the joined-union auxiliary
//! matrix and the block-symmetric reduction.

use crate::error::{Error, Result};
use crate::graph::{neighbor_weights, part_offsets, Graph, JoinedUnionSpec};
use crate::matrix::Matrix;
use crate::scalar::{Real, Scalar};
use crate::spectra::{a_alpha_matrix, adjacency_matrix, eig_symmetric, Alpha, Spectrum};

/// Ordered, disjoint, non-empty blocks covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl VertexPartition {
    pub fn new(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(Self { blocks, n })
    }

    /// Consecutive blocks of the given sizes: the natural partition of a
    /// joined union.
    pub fn natural(sizes: &[usize]) -> Result<Self> {
        let offsets = part_offsets(sizes);
        let blocks = sizes
            .iter()
            .zip(offsets)
            .map(|(&s, o)| (o..o + s).collect())
            .collect();
        Self::new(blocks, sizes.iter().sum())
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    fn check_order(&self, dim: usize) -> Result<()> {
        if dim != self.n {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} vertices, matrix has {dim}",
                self.n
            )));
        }
        Ok(())
    }
}

/// Which matrix of the graph a partition is evaluated against.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixKind<T> {
    Adjacency,
    AAlpha(Alpha<T>),
}

impl<T: Scalar> MatrixKind<T> {
    pub fn matrix(&self, g: &Graph) -> Matrix<T> {
        match self {
            Self::Adjacency => adjacency_matrix(g),
            Self::AAlpha(a) => a_alpha_matrix(g, a),
        }
    }
}

/// Block-average row sums, plus whether every block has constant row sums.
#[derive(Debug, Clone, PartialEq)]
pub struct Quotient<T> {
    pub matrix: Matrix<T>,
    pub equitable: bool,
}

/// Quotient of an arbitrary square matrix. Row sums are compared with
/// tolerance `tol * max(1, max|m|)`.
pub fn quotient_of<T: Real>(m: &Matrix<T>, p: &VertexPartition, tol: T) -> Result<Quotient<T>> {
    p.check_order(m.dim())?;
    let bound = tol * T::one().max(m.max_abs());
    let s = p.blocks.len();
    let mut q = Matrix::zeros(s);
    let mut equitable = true;
    for (bi, rows) in p.blocks.iter().enumerate() {
        for (bj, cols) in p.blocks.iter().enumerate() {
            let sums: Vec<T> = rows
                .iter()
                .map(|&r| cols.iter().fold(T::zero(), |acc, &c| acc + m[(r, c)]))
                .collect();
            let total = sums.iter().fold(T::zero(), |acc, &x| acc + x);
            let mean = total / T::from_count(rows.len());
            if sums.iter().any(|&x| !((x - mean).abs() <= bound)) {
                equitable = false;
            }
            q[(bi, bj)] = mean;
        }
    }
    Ok(Quotient { matrix: q, equitable })
}

pub fn quotient_matrix<T: Real>(g: &Graph, p: &VertexPartition, kind: &MatrixKind<T>) -> Result<Quotient<T>> {
    quotient_of(&kind.matrix(g), p, T::lit(1e-12))
}

pub fn is_equitable<T: Real>(g: &Graph, p: &VertexPartition, kind: &MatrixKind<T>) -> Result<bool> {
    Ok(quotient_matrix(g, p, kind)?.equitable)
}

/// Sizes, regular degrees and base graph of a joined union of regular parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinedUnionShape {
    pub base: Graph,
    pub sizes: Vec<usize>,
    pub degrees: Vec<usize>,
}

impl JoinedUnionShape {
    pub fn new(base: Graph, sizes: Vec<usize>, degrees: Vec<usize>) -> Result<Self> {
        let n = base.order();
        for len in [sizes.len(), degrees.len()] {
            if len != n {
                return Err(Error::DimensionMismatch { expected: n, found: len });
            }
        }
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidParameter(format!("part {i} is empty")));
        }
        if let Some(index) = sizes.iter().zip(&degrees).position(|(&s, &d)| d >= s) {
            return Err(Error::NotRegular { index });
        }
        Ok(Self { base, sizes, degrees })
    }

    pub fn from_spec(spec: &JoinedUnionSpec) -> Result<Self> {
        let degrees = spec
            .parts()
            .iter()
            .enumerate()
            .map(|(index, g)| g.regular_degree().ok_or(Error::NotRegular { index }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(spec.base().clone(), spec.sizes(), degrees)
    }

    /// `α_i`: total order of the parts adjacent to part `i` in the base.
    pub fn neighbor_weights(&self) -> Vec<usize> {
        neighbor_weights(&self.base, &self.sizes)
    }

    pub fn total_order(&self) -> usize {
        self.sizes.iter().sum()
    }
}

/// Diagonal `α·α_i + r_i`, off-diagonal `(1 - α)·n_j` on base edges.
pub fn joined_union_aux_matrix<T: Scalar>(shape: &JoinedUnionShape, alpha: &Alpha<T>) -> Matrix<T> {
    let weights = shape.neighbor_weights();
    let a = alpha.value().clone();
    let off = alpha.complement();
    Matrix::from_fn(shape.base.order(), |i, j| {
        if i == j {
            a.clone() * T::from_count(weights[i]) + T::from_count(shape.degrees[i])
        } else if shape.base.has_edge(i, j) {
            off.clone() * T::from_count(shape.sizes[j])
        } else {
            T::zero()
        }
    })
}

/// A matrix of the form
///
/// ```text
/// [ X   β   β  ...  β ]
/// [ βᵀ  B   C  ...  C ]
/// [ βᵀ  C   B  ...  C ]
/// [ ...               ]
/// [ βᵀ  C   C  ...  B ]
/// ```
///
/// with `X` of size `t×t`, `β` of size `t×s`, `B`, `C` of size `s×s` and
/// `copies` diagonal `B` blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockSymmetricSpec<T> {
    pub x: Vec<Vec<T>>,
    pub beta: Vec<Vec<T>>,
    pub b: Vec<Vec<T>>,
    pub c: Vec<Vec<T>>,
    pub copies: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockReduction<T> {
    /// Eigenvalues of `B - C`, each occurring `multiplicity` times.
    pub repeated: Spectrum<T>,
    pub multiplicity: usize,
    /// `[[X, √c β], [√c βᵀ, B + (c-1) C]]`.
    pub reduced: Matrix<T>,
}

impl<T: Real> BlockSymmetricSpec<T> {
    pub fn t(&self) -> usize {
        self.x.len()
    }

    pub fn s(&self) -> usize {
        self.b.len()
    }

    pub fn dim(&self) -> usize {
        self.t() + self.copies * self.s()
    }

    fn validate(&self) -> Result<()> {
        let (t, s) = (self.t(), self.s());
        let square = |m: &Vec<Vec<T>>, d: usize| m.len() == d && m.iter().all(|r| r.len() == d);
        if self.copies == 0 {
            return Err(Error::InvalidParameter("copy count must be at least 1".into()));
        }
        if !square(&self.x, t) || !square(&self.b, s) || !square(&self.c, s) {
            return Err(Error::DimensionMismatch { expected: s, found: self.c.len() });
        }
        if self.beta.len() != t || self.beta.iter().any(|r| r.len() != s) {
            return Err(Error::DimensionMismatch { expected: t, found: self.beta.len() });
        }
        Ok(())
    }

    pub fn assemble(&self) -> Result<Matrix<T>> {
        self.validate()?;
        let (t, s) = (self.t(), self.s());
        Ok(Matrix::from_fn(self.dim(), |i, j| match (i < t, j < t) {
            (true, true) => self.x[i][j],
            (true, false) => self.beta[i][(j - t) % s],
            (false, true) => self.beta[j][(i - t) % s],
            (false, false) => {
                let (bi, ri) = ((i - t) / s, (i - t) % s);
                let (bj, rj) = ((j - t) / s, (j - t) % s);
                if bi == bj {
                    self.b[ri][rj]
                } else {
                    self.c[ri][rj]
                }
            }
        }))
    }

    pub fn reduce(&self) -> Result<BlockReduction<T>> {
        self.validate()?;
        let (t, s) = (self.t(), self.s());
        let c = T::from_count(self.copies);
        let root = c.sqrt();
        let reduced = Matrix::from_fn(t + s, |i, j| match (i < t, j < t) {
            (true, true) => self.x[i][j],
            (true, false) => root * self.beta[i][j - t],
            (false, true) => root * self.beta[j][i - t],
            (false, false) => self.b[i - t][j - t] + (c - T::one()) * self.c[i - t][j - t],
        });
        let diff = Matrix::from_fn(s, |i, j| self.b[i][j] - self.c[i][j]);
        Ok(BlockReduction {
            repeated: eig_symmetric(&diff)?,
            multiplicity: self.copies - 1,
            reduced,
        })
    }

    /// Reads the block structure off a symmetric matrix of dimension
    /// `t + copies·s`, checking that every copy repeats the same blocks to
    /// within `tol * max(1, max|m|)`.
    pub fn from_matrix(m: &Matrix<T>, t: usize, s: usize, tol: T) -> Result<Self> {
        if s == 0 || m.dim() < t || (m.dim() - t) % s != 0 {
            return Err(Error::InvalidParameter(format!(
                "dimension {} does not split as {t} + c*{s}",
                m.dim()
            )));
        }
        let copies = (m.dim() - t) / s;
        let spec = Self {
            x: m.block(0..t, 0..t),
            beta: m.block(0..t, t..t + s),
            b: m.block(t..t + s, t..t + s),
            c: if copies > 1 {
                m.block(t..t + s, t + s..t + 2 * s)
            } else {
                vec![vec![T::zero(); s]; s]
            },
            copies,
        };
        let bound = tol * T::one().max(m.max_abs());
        if m.max_abs_diff(&spec.assemble()?) > bound {
            return Err(Error::InvalidParameter("matrix does not have the block-symmetric pattern".into()));
        }
        Ok(spec)
    }
}
