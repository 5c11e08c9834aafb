//! Exact Betti numbers of the moduli spaces `M(d, χ)` of one-dimensional
//! semistable sheaves on the projective plane.
//!
//! Everything is integer arithmetic on truncated power series:
//!
//! - [`bigseries`]: dense big-integer polynomials and truncated series in one
//!   and two variables.
//! - [`hilb`]: Göttsche's product for Hilbert schemes of points on the plane,
//!   the stable series and an Euler-number oracle, with an on-disk cache.
//! - [`tautgen`]: the tautological generator system, its monomial counts and
//!   relation counts.
//! - [`motivic`]: classes in the localized Grothendieck ring (at the level of
//!   the virtual Poincaré measure) and the congruence-chain verifier.
//! - [`betti`]: χ-normalization and the Betti table of `M(d, χ)`.
//! - [`emit`]: deterministic JSON/CSV output.

pub mod betti;
pub mod bigseries;
pub mod emit;
mod error;
pub mod hilb;
pub mod motivic;
pub mod tautgen;

pub use error::{Error, Result};
