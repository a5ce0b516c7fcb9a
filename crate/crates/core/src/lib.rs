//! Symbolic computation in the universal Askey-Wilson algebra and the
//! universal double affine Hecke algebra of type (C1v, C1) over Q(q).

pub mod algebras;
pub mod coeff_matrix;
pub mod error;
pub mod expected;
pub mod free_algebra;
pub mod linalg;
pub mod morphisms;
pub mod parse;
pub mod rewrite;
pub mod scalar;
pub mod specfile;
pub mod tbasis;
pub mod verify;

pub use error::{Error, Result};
pub use free_algebra::{Alphabet, GenId, NCPoly, Word};
pub use rewrite::{RewriteRule, RewriteSystem, RuleKind};
pub use scalar::QScalar;
