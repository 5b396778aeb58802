//! Commutation geometry of generalized Pauli operators on registers of
//! prime-dimensional factors.
//!
//! Operators are exact symplectic exponent vectors; the Pauli graph joins
//! commuting operators, its maximum cliques are the lines of a point-line
//! geometry, and the dual graph on lines carries intersection sizes as edge
//! weights. Finite product rings and their projective lines live in
//! [`rings`].

pub mod error;
pub mod geometry;
pub mod graphs;
pub mod pauli;
pub mod rings;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{build_geometry, dual_graph, DualGeometry, IncidenceGeometry, PaperLabeling};
pub use graphs::{Graph, Spectrum};
pub use pauli::{commutes, enumerate_operators, symplectic_residue, PauliOperator, SystemSpec};
