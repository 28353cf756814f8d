//! Spectral-radius conditions for rainbow matchings in graph families.
//!
//! The crate builds the extremal graphs `A^i_{n,m}`, computes Perron roots,
//! shifts graphs toward the least labels, searches for rainbow matchings
//! exactly, and runs desk-scale verification sweeps that emit JSON-lines
//! certificates. See the `examples/` directory for one runnable program per
//! capability; the `srm` binary exposes the same operations on the command
//! line.

pub mod cli;
pub mod error;
pub mod graph;
pub mod matching;
pub mod shifting;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{construct_extremal, graphs_equal, recognize_extremal, ExtremalKind, ExtremalParams, Graph};
pub use matching::{find_rainbow, max_matching, GraphFamily, RainbowMatching};
pub use spectral::{spectral_radius, threshold, SpectralResult};
