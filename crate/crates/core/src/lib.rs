//! Constrained coloring toolkit.
//!
//! A proper `q`-coloring of a graph combined with extra constraints on vertex
//! tuples: finite relations (`R`-constrained coloring), uniformly rainbow free
//! constraints (URFC and its multi-shape generalization GURFC), and coloring of
//! graphs that are a small modulator away from a disjoint union of cliques.
//!
//! The crate is organised as
//!
//! * [`relations`]: explicit finite relations, permutation invariance, OR
//!   witnesses, the `NUR` relation family and the kernel exponent formulas;
//! * [`instances`]: problem instances and their line-oriented text formats;
//! * [`oracles`]: exhaustive solvers used as ground truth;
//! * [`polykernel`]: GF(p) polynomials, Vandermonde capture pairs and the
//!   kernels built on top of them (plus the product-pruning kernel);
//! * [`reductions`]: the gadget transformations between the problems;
//! * [`generate`]: seeded random instance generators.
//!
//! Conventions: vertices are 0-based `usize` in memory and 1-based in every
//! text format; colors are 1-based ([`Color`]) everywhere.

pub mod generate;
pub mod instances;
pub mod limits;
pub mod oracles;
pub mod polykernel;
pub mod reductions;
pub mod relations;
pub mod text;
mod util;

pub use limits::{BudgetExceeded, Limits};

/// A color in `1..=q`.
pub type Color = u8;

/// Largest supported palette. Color sets are stored as `u64` bitmasks.
pub const MAX_COLORS: usize = 64;
