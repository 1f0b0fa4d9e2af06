//! Counting invariants and homotopy tools for finite graphs.
//!
//! The crate works with two presheaf flavors of graphs. Directed graphs carry
//! nodes, arcs and source/target maps; undirected graphs carry half-arcs with
//! an involution whose fixed points are degenerate loops. On top of them it
//! provides:
//!
//! * exact zeta series and their polynomial reciprocals `det(I - tA)`, and
//!   the Ihara variants built from backtrack-free cycles and the Hashimoto
//!   half-arc operator, all in exact big-integer/rational arithmetic;
//! * sums, products, pushouts and pullbacks of graphs, plus coverings,
//!   star-map diagnostics, edge colorings as coverings of bouquets, and
//!   truncated forest extensions of cycles inside coverings;
//! * Cayley-graph functors from group actions (free or involutive), the
//!   equivalence between colored graphs and involutive actions, dessins
//!   d'enfants with passports, and ramification profiles of Galoisian
//!   complexes;
//! * a small lab of executable demonstrations whose claims are checked at
//!   run time and reported deterministically.
//!
//! Everything is exact: no floats, no hashing-order nondeterminism. All
//! containers iterate in sorted order, so equal inputs give byte-equal
//! outputs. With the default `parallel` feature, hom-set enumeration and the
//! corpus helpers fan out over rayon without changing any result.

pub mod cat;
pub mod complexes;
pub mod corpus;
pub mod cover;
pub mod dessin;
pub mod error;
pub mod exact;
pub mod graph;
pub mod gset;
pub mod homs;
pub mod lab;
pub mod par;
pub mod zeta;

pub use error::{Error, Result};
pub use exact::{IntPolynomial, RationalPowerSeries};
pub use graph::{
    DirectedGraph, DirectedMorphism, Graph, NodeId, UndirectedGraph, UndirectedMorphism,
};
