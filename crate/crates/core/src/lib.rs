//! Spherical quandles and their embeddings into Pin/Spin groups.
//!
//! The crate is generic over the real scalar type ([`numerics::Scalar`]):
//! every construction runs either in exact rational arithmetic or in `f64`
//! with an absolute tolerance. Concrete aliases for both modes live at the
//! crate root.

pub mod clifford;
pub mod embeddings;
pub mod error;
pub mod groups;
pub mod numerics;
pub mod quandle;
pub mod search;
pub mod verify;

pub use error::{Error, Result};

/// Arbitrary-precision rational scalar used by exact-mode computations.
pub type Rational = num_rational::BigRational;

pub type ExactVector = numerics::Vector<Rational>;
pub type FloatVector = numerics::Vector<f64>;
pub type ExactMatrix = numerics::Matrix<Rational>;
pub type FloatMatrix = numerics::Matrix<f64>;
pub type ExactClifford = clifford::CliffordElement<Rational>;
pub type FloatClifford = clifford::CliffordElement<f64>;
pub type ExactVersor = clifford::Versor<Rational>;
pub type FloatVersor = clifford::Versor<f64>;
pub type ExactSu2 = groups::Su2Matrix<Rational>;
pub type FloatSu2 = groups::Su2Matrix<f64>;
