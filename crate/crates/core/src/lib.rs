//! Obstruction invariants for elementary-move equivalence of links and tangles.
//!
//! The crate works on combinatorial planar diagrams (PD codes) and computes:
//!
//! * Fox `k`-colorings, the boundary map of a tangle and the determinant ([`coloring`]);
//! * the symplectic space of boundary colorings and its Lagrangian subspaces ([`symplectic`]);
//! * the Kauffman polynomial by skein recursion, exactly at `a = 1, x = 2cos(2π/5)` ([`skein`]);
//! * Reidemeister moves, `n`-moves, `(s,q)`-moves, rational moves and rotor flips ([`moves`]);
//! * unknotting-number and Gordian-distance lower bounds ([`bounds`]);
//! * class-3 Burnside quotients of the double branched cover ([`burnside`]).

pub mod bounds;
pub mod burnside;
pub mod cli;
pub mod coloring;
pub mod diagram;
mod error;
pub mod linalg;
pub mod moves;
pub mod skein;
pub mod symplectic;

pub use diagram::{braid::BraidWord, catalog, Crossing, Diagram, Label, Tangle};
pub use error::{Error, Result};
