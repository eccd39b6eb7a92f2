//! Exact symbolic engine for generalized Hall-Littlewood functions over
//! formal group laws.
//!
//! The crate computes, over an exact coefficient field, the symmetrized
//! one-row/multi-row functions attached to a formal group law `F`, a
//! deformation series `T`, and a Laurent weight `H`; their generating
//! functions and coefficient extraction; determinant and Pfaffian closed
//! forms; and the Pieri-type expansion tables for the connective K-theory
//! case. Everything is computed modulo an explicit truncation contract and
//! compared exactly — there is no floating point anywhere.
//!
//! The polynomial and series layers are generic over the [`Scalar`]
//! coefficient field. Two instantiations are used: [`ParamFrac`] (fractions
//! of polynomials in the formal parameters `b`, `g`, `t`, `b1..`) is the
//! symbolic default, and [`Rational`] is the numeric mode used when all
//! parameters are specialized.

pub mod error;
pub mod scalar;
pub mod param;
pub mod poly;
pub mod series;
pub mod laurent;
pub mod fgl;
pub mod hl;
pub mod genfun;
pub mod pieri;
pub mod checks;

pub use error::{Error, Result};
pub use param::{Param, ParamFrac};
pub use poly::{MPoly, Mono, Trunc, Vars};
pub use scalar::{Rational, Scalar};

/// Symbolic-mode polynomial (the default working type).
pub type SymPoly = MPoly<ParamFrac>;
/// Numeric-mode polynomial (all parameters specialized to rationals).
pub type NumPoly = MPoly<Rational>;
/// Symbolic-mode formal group law.
pub type SymFgl = fgl::Fgl<ParamFrac>;
/// Numeric-mode formal group law.
pub type NumFgl = fgl::Fgl<Rational>;
/// Symbolic-mode family specification.
pub type SymSpec = hl::HlSpec<ParamFrac>;
