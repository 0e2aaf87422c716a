//! Finite semigroups, their enhanced power graphs, and exhaustive audits of
//! the structural characterizations relating the two.
//!
//! A semigroup is a [`CayleyTable`] on dense element indices. From it the
//! crate derives monogenic data (index, period, kernel), Green's relations,
//! the enhanced power graph with its power, cyclic and commuting siblings,
//! and exact graph invariants (planarity with Kuratowski witnesses,
//! independence, clique and chromatic numbers). [`enumerate`] produces every
//! semigroup of a small order up to isomorphism, and [`audit`] evaluates
//! each characterization over such a corpus.

pub mod audit;
mod backtrack;
pub mod dot;
pub mod enumerate;
pub mod epgraph;
pub mod error;
pub mod format;
pub mod graph;
pub mod green;
pub mod props;
pub mod semigroup;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use semigroup::{CayleyTable, Element, Generator, MonogenicData, SubsemigroupSet};
