//! Constructions and exact verification of rank four strongly regular graphs.
//!
//! The crate builds graphs from finite geometry and small permutation actions,
//! checks strong and distance regularity by brute force, and recomputes
//! intersection numbers both numerically and symbolically.

pub mod error;
pub mod families;
pub mod geometry;
pub mod gf;
pub mod graph;
pub mod orbitals;
pub mod schemes;

pub use error::{Error, Result};
