//! Exact computations with homogeneous ideals: Gröbner bases, saturation and
//! saturation degrees, symbolic powers, minimal free resolutions and
//! regularity, plus the graded characters of hook Schur powers.

pub mod combinat;
pub mod corpus;
pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal_ops;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod resolution;
pub mod schur;

pub use error::{AlgebraError, Result};
pub use field::{CoefficientField, Field, FieldKind, PrimeField, RationalField, DEFAULT_PRIME};
pub use groebner::{GroebnerBasis, HilbertData, Ideal, Limits};
pub use monomial::{monomial_compare, Monomial, MonomialOrder, MAX_VARS};
pub use poly::{Homogeneity, PolyRing, Polynomial, MAX_RING_VARS};
