//! Jacobi theta functions, Chebyshev-Blaschke products and the monodromy and
//! modulus computations around them.

// `!(x > 0.0)` is how NaN gets rejected along with the out-of-range values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod blaschke;
pub mod dd;
pub mod elliptic;
pub mod error;
pub mod identities;
pub mod modulus;
pub mod monodromy;
pub mod poly;
pub mod scalar;
pub mod theta;
pub mod verify;

pub use blaschke::{ChebyshevBlaschke, FiniteBlaschkeProduct};
pub use elliptic::EllipticContext;
pub use error::{Error, Result};
pub use identities::{IdentityReport, LandenId};
pub use monodromy::{MonodromyRep, Permutation};
pub use theta::{SeriesConfig, ThetaKind, UpperHalfPoint};
