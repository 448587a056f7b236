//! Exact root-system combinatorics for integrality questions about
//! parameters `λ` in the complexified dual of a Cartan subspace.
//!
//! The crate covers integral root subsystems `Σ(λ)`, the simple-reflection
//! equivalence `[λ]` and its chamber-gallery counterpart, edges and parabolic
//! closures, Smith normal forms and lattice indices, full-rank subsystem
//! enumeration by affine-node removal, and exact rational cone feasibility for
//! the integral-negativity predicates.

pub mod error;
pub mod lattice;
pub mod linalg;
pub mod negativity;
pub mod params;
pub mod rational;
pub mod rootsys;
pub mod simplex;
pub mod subsystems;

pub mod cli;
pub mod verify;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, Parameter, Root, RootSystem, RootSystemSpec, WeylElement};
