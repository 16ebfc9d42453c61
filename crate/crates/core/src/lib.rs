//! Solvers for the Hunters and Rabbit game.
//!
//! Each round the hunters shoot a set of vertices; an invisible rabbit that
//! was not hit moves to a neighbor. The crate computes hunter numbers and
//! monotone hunter numbers exactly (small graphs) or through class-specific
//! formulas, checks and transforms strategies, kernelizes instances by a
//! vertex cover, and generates graph families with explicit strategies.

pub mod classes;
pub mod error;
pub mod game;
pub mod generators;
pub mod graph;
pub mod kernel;
pub mod solver;
pub mod vertex_set;

pub use error::{Error, Result};
pub use game::{ContaminationTrace, HunterStrategy, RabbitTrajectory};
pub use generators::FamilyInstance;
pub use kernel::{KernelOutcome, KernelResult};
pub use graph::{Bipartition, CoTree, Graph, PathDecomposition, SplitPartition};
pub use solver::{SolveResult, StartSet};
pub use vertex_set::VertexSet;
