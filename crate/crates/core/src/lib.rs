//! Exact computations in the quantized Loday-Ronco Hopf algebra of planar
//! binary trees and loop graphs, its quantum differential, and topological
//! recursion on the Airy curve.

pub mod airy;
pub mod cli;
pub mod complexes;
pub mod error;
pub mod freemodule;
pub mod hopfops;
pub mod loopgraphs;
pub mod permutations;
pub mod subalgebras;
pub mod trees;

pub use error::{Error, Result};
