//! Exact verification toolkit for fractional 11/4-coloring of subcubic
//! triangle-free graphs.
//!
//! The crate models graphs with external degrees (e-graphs), decides
//! 11/4-colorability and fractional chromatic numbers by exact rational
//! linear programming, enumerates polytope vertices by the double
//! description method, checks reducible configurations and the standard
//! argument pipeline, and maintains the catalog of valid critical e-graphs
//! together with its closure properties under the transformations used in
//! the proofs.
//!
//! Entry points by capability:
//! - [`egraph`]: the e-graph model, text format, induced sub-e-graphs.
//! - [`canon`]: canonical labelling and isomorphism.
//! - [`ratlp`]: exact rational scalars, linear systems, simplex.
//! - [`polytope`]: vertex enumeration of bounded rational polyhedra.
//! - [`coloring`]: independent sets, colorability, chi_f, restriction and
//!   extension, interval constructions, convex combination, the
//!   vertex-deletion averaging construction.
//! - [`reduce`]: trivial constraints, reducible configurations, the
//!   standard-argument checker.
//! - [`catalog`]: criticality, catalog verification, closure rules,
//!   bounded re-enumeration.
//!
//! Runnable examples for each capability live in `examples/`; the thin
//! `fraccrit` binary exposes the same operations as subcommands.

pub mod canon;
pub mod catalog;
pub mod coloring;
pub mod combine;
pub mod egraph;
pub mod embed;
pub mod hall;
pub mod interval;
pub mod linsys;
pub mod polytope;
pub mod rat;
pub mod reduce;
pub mod simplex;

/// Exact rational linear programming, re-exported as one face.
pub mod ratlp {
    pub use crate::linsys::{parse_system, LinearSystem, ParseSystemError};
    pub use crate::rat::Rat;
    pub use crate::simplex::{feasible, optimize, optimize_until, Certificate, LpOutcome, Sense};
}

pub use crate::egraph::EGraph;
pub use crate::rat::Rat;
