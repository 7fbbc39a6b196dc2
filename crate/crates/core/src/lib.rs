//! Exact resistance distance toolkit.
//!
//! Resistance matrices are computed over arbitrary-precision rationals from the
//! Laplacian pseudoinverse, so resistance regularity and the pseudo variant are
//! decided by exact equality. Spectral quantities (resistance eigenvalues,
//! energy, spectral radius) use a Jacobi eigensolver on the float image of the
//! exact matrix. An independent spanning-forest enumerator serves as ground
//! truth for small graphs.

pub mod error;
pub mod graph;
pub mod linalg;
pub mod oracle;
pub mod resistance;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph};
pub use linalg::{Rational, RationalMatrix};
pub use resistance::{ClassKind, ClassLabel, ResistanceProfile};
pub use spectral::{BoundId, BoundsReport, Spectrum};
