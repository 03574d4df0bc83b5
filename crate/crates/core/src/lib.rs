//! Exact decision, certification and classification of Mathieu subspaces of
//! finite-dimensional associative unital algebras over `F_p` and `ℚ`.

pub mod algebra;
pub mod error;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod scan;
pub mod subspace;

pub mod experiments;
pub mod json;
mod kernel;
pub mod mathieu;
pub mod matrixlab;

pub use algebra::{Algebra, AlgebraMap, Element};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use poly::Poly;
pub use scan::ScanConfig;
pub use subspace::{Subspace, ThetaVariant};
