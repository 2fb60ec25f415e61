//! Exact computation of depth functions of symbolic powers of monomial
//! ideals.

mod dominance;
pub mod claims;
pub mod complex;
pub mod depth;
pub mod error;
pub mod families;
pub mod functions;
pub mod linalg;
pub mod lp;
pub mod membership;
pub mod monomial;
pub mod oracle;
pub mod scalar;

pub use error::{Error, Result};
pub use monomial::{Decomposition, ExponentVector, MonomialIdeal, PrimaryComponent, Ring, VarSet};
pub use scalar::Coefficients;

/// Exponents of monomials.
pub type Exponent = u32;

/// Exact rational scalar used by the linear programs.
pub type Rational = num_rational::BigRational;
