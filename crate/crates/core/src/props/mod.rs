//! Exact graph analyses: classification, planarity, independence, cliques
//! and colourings.

mod classify;
mod coloring;
mod independence;
mod planarity;

pub use classify::{classify, GraphClassification};
pub use coloring::{chromatic_number, CHROMATIC_EXACT_LIMIT};
pub use independence::{clique_number, independence_number};
pub use planarity::{
    is_planar, planar_decision, KuratowskiKind, KuratowskiWitness, PlanarityResult,
};
