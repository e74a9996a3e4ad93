//! Regular triangulations, secondary (Chow) and Hurwitz polytopes of lattice
//! polytopes, with exact rational arithmetic throughout.

pub mod cli;
pub mod error;
pub mod exact;
pub mod functional;
pub mod io;
pub mod polytope;
pub mod triangulation;
pub mod vectors;
pub mod weight;

pub use error::{Error, Result};
