//! Finite universal algebra toolkit.
//!
//! Algebras are operation tables over `0..n-1`. On top of that sit
//! congruence lattices, polynomial clones, term-condition machinery
//! (commutators, centralizers, abelianness), tame type labels with the
//! solvable and strongly solvable radicals, executable verifiers for the
//! structural facts those notions support, and first-order interpretation
//! gadgets over diagonal subpowers with a brute-force model checker.

pub mod algebra;
pub mod centrality;
pub mod clones;
pub mod conlat;
pub mod error;
pub mod fmt;
pub mod gadgets;
pub mod partition;
pub mod subpower;
pub mod tct;
pub mod theorems;
pub mod witness;

pub use algebra::{AlgebraOps, FiniteAlgebra, Operation, Term};
pub use error::{AlgError, Result};
pub use partition::Partition;

/// Caps shared across the library. Every closure and enumeration obeys one
/// of these; overflowing is always a hard error, never silent truncation.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// Maximum number of elements any closure may reach.
    pub element_cap: usize,
    /// Maximum universe size for full congruence-lattice enumeration.
    pub con_size_bound: usize,
    /// Maximum number of congruences in a lattice.
    pub lattice_cap: usize,
    /// Arity bound for materialized induced algebras and type checks.
    pub arity_cap: usize,
    /// Maximum total number of product factors in a subdirect scan.
    pub power_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            element_cap: subpower::DEFAULT_ELEMENT_CAP,
            con_size_bound: conlat::DEFAULT_CON_SIZE_BOUND,
            lattice_cap: conlat::DEFAULT_LATTICE_CAP,
            arity_cap: 3,
            power_cap: 2,
        }
    }
}
