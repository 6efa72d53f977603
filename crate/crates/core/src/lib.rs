//! Exact local exterior-square, symmetric-square and Rankin–Selberg factors
//! for representations of `GL_m` given by Zelevinsky segments.
//!
//! Every factor is an [`EulerFactor`]: a multiset of inverse roots `α` in the
//! group `μ_∞ · q^ℚ`, denoting `∏(1 - α q^{-s})^{-1}`. Supercuspidal inputs
//! are abstract and come from a [`Registry`].
//!
//! ```
//! use lfactor_core::{dsl::parse_repr, lfun::l_rep_ext, Registry};
//!
//! let reg = Registry::standard();
//! let st3 = parse_repr("[one:3@-1]").unwrap();
//! assert_eq!(l_rep_ext(&reg, &st3).unwrap().to_string(), "(1 - q^(-1) X)^-1");
//! ```

pub mod dsl;
pub mod error;
pub mod galois;
pub mod lfun;
pub mod registry;
pub mod scalar;
pub mod segment;
pub mod selftest;

pub use error::{Error, Result};
pub use galois::FormalParam;
pub use registry::{CuspidalDatum, DualData, Invariant, Registry, ValidationError};
pub use scalar::{EulerFactor, GammaClass, Rational, Scalar};
pub use segment::{Constituent, Derived, Representation, Segment};
