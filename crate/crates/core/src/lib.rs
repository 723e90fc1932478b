//! Generalized adjacency (`A_α = αD + (1-α)A`) spectra of joined unions of
//! graphs and of power graphs of finite groups.
//!
//! Each closed form is expressed as a [`SpectralPrediction`]: eigenvalues
//! known explicitly plus a small auxiliary matrix. [`verify`] checks a
//! prediction against a direct eigendecomposition of the constructed graph.
//!
//! Matrix construction is generic over [`Scalar`] (floats and exact
//! rationals); eigenvalue work is generic over [`Real`] (`f32`, `f64`). The
//! aliases below fix the usual choices.

pub mod closed_forms;
pub mod error;
pub mod families;
pub mod graph;
pub mod groups;
pub mod matrix;
pub mod number_theory;
pub mod partitions;
pub mod scalar;
pub mod spectra;
pub mod transcribed;
pub mod verify;

pub use closed_forms::{NamedFamily, PartSpectrum, PowerGroupKind};
pub use error::{Error, Result};
pub use families::Family;
pub use graph::{Graph, JoinedUnionSpec};
pub use groups::{FiniteGroup, GroupKind};
pub use scalar::{Real, Scalar};

/// Exact rational scalar.
pub type Rational = num_rational::Ratio<i64>;

pub type RealMatrix = matrix::Matrix<f64>;
pub type ExactMatrix = matrix::Matrix<Rational>;
pub type Spectrum = spectra::Spectrum<f64>;
pub type AlphaParam = spectra::Alpha<f64>;
pub type ExactAlpha = spectra::Alpha<Rational>;
pub type SpectralPrediction = closed_forms::SpectralPrediction<f64>;
pub type BlockSymmetricSpec = partitions::BlockSymmetricSpec<f64>;
