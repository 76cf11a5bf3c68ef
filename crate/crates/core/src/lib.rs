//! Finite lattices and their canonical join complexes.
//!
//! Posets and lattices live on dense ids `0..n` with bit-packed order
//! matrices. On top of that sit canonical join and meet representations,
//! semidistributivity tests, the canonical join complex and crosscut
//! complexes, lattice constructions (doubling, quotients, products,
//! multichains), standard families, and exhaustive searches over small
//! lattices and congruence-uniform doubling sequences.

pub mod bits;
pub mod canon;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod poset;
pub mod search;

pub use bits::BitSet;
pub use complex::{
    canonical_join_complex, canonical_join_graph, canonical_meet_complex, crosscut_complex,
    is_crosscut_simplicial, SimplicialComplex,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use lattice::{Eta, JoinRep, Lattice, MeetRep, Side, Triple};
pub use poset::{Antichain, Poset};
pub use search::{DoublingSequence, LabeledLattice};
