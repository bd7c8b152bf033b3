//! Finite residuated lattices: reticulation, co-Stone classification and the
//! strongly co-Stone hull, checked exhaustively on small carriers.

pub mod algebra;
pub mod coann;
pub mod config;
pub mod corpus;
pub mod error;
pub mod filters;
pub mod format;
pub mod hull;
pub mod par;
pub mod report;
pub mod render;
pub mod reticulation;
pub mod set;
pub mod stone;
pub mod suites;
pub mod transfer;

pub use algebra::{Algebra, Lattice, Morphism, ResiduatedLattice};
pub use config::Caps;
pub use error::{Error, Result};
pub use par::Strategy;
pub use set::ElemSet;
