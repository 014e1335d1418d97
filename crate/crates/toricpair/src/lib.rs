//! Exact invariants of affine toric pairs.
//!
//! Given a strongly convex full-dimensional cone (the variety) and an
//! invariant monomial ideal (the subscheme), this crate computes the Newton
//! polyhedron and its dual fan, log-discrepancies and the minimal
//! log-discrepancy (with a certified minus-infinity branch), the
//! log-canonical/log-terminal classification, and the divisor sets attached
//! to arc families, together with brute-force and resolution-sampling
//! oracles that cross-check every headline output.

pub mod cone;
pub mod error;
pub mod exec;
pub mod fan;
pub mod lattice;
pub mod linalg;
pub mod newton;

pub use cone::Cone;
pub use error::{Result, ToricError};
pub use fan::Fan;
pub use lattice::{Int, LatticePoint, QVector, Rat};
pub use newton::{DualFan, MonomialIdeal, NewtonPolyhedron};
