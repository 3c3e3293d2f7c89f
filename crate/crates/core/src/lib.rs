//! Quantale-valued order theory and topology, checked mechanically on finite
//! instances and on `[0,1]` with continuous t-norms.
//!
//! The crate builds finite commutative unital quantales, quantale-valued
//! ordered sets, flat ideals and way-below relations, Scott topologies,
//! points of quantale modules, sobriety certificates and sobrifications, and
//! cross-validates closed-form `[0,1]` results against exact finite chains.
//!
//! Everything is immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.

pub mod error;
pub mod report;

mod lattice;

pub mod flat;
pub mod interval;
pub mod io;
pub mod module;
pub mod qorder;
pub mod qtop;
pub mod quantale;
pub mod sober;
pub mod suites;
pub mod tnorm;

pub use error::{Error, Result};
pub use report::{ValidationReport, Violation};

/// Default bound on exhaustive enumerations (`|Q|^|X|`-style candidate counts).
pub const DEFAULT_CAP: u64 = 1_000_000;
