//! Finite presheaf graphs in two flavors.
//!
//! A directed graph is a presheaf on the two-object category with parallel
//! arrows `s, t`: a set of nodes, a set of arcs, and source/target maps. An
//! undirected graph carries half-arcs together with a fixed-point-allowed
//! involution `inv` satisfying `src(inv(a)) = tgt(a)`; an arc is an orbit
//! `{a, inv(a)}` and a half-arc fixed by `inv` is a degenerate loop.
//!
//! Identifiers are plain strings, graphs are immutable values, and every map
//! is stored as an explicit finite table.

pub mod directed;
pub mod iso;
pub mod json;
pub mod morphism;
pub mod standard;
pub mod undirected;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use directed::{DirectedArc, DirectedGraph};
pub use iso::{is_isomorphic_directed, is_isomorphic_undirected};
pub use json::{graph_from_json, graph_from_str, graph_to_json, graph_to_string};
pub use morphism::{
    compose_directed, compose_undirected, identity_directed, identity_undirected,
    validate_directed_morphism, validate_undirected_morphism, DirectedMorphism,
    UndirectedMorphism,
};
pub use standard::{standard_graph, StandardKind};
pub use undirected::{ArcOrbit, HalfArc, Star, UndirectedGraph};

/// Node identifier, unique within one graph.
#[derive(
    Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct NodeId(pub String);

/// Arc identifier for directed graphs.
#[derive(
    Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct ArcId(pub String);

/// Half-arc identifier for undirected graphs.
#[derive(
    Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct HalfArcId(pub String);

macro_rules! id_impls {
    ($ty:ident) => {
        impl $ty {
            pub fn as_str(&self) -> &str {
                &self.0
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
        impl From<&str> for $ty {
            fn from(s: &str) -> Self {
                $ty(s.to_string())
            }
        }
        impl From<String> for $ty {
            fn from(s: String) -> Self {
                $ty(s)
            }
        }
    };
}

id_impls!(NodeId);
id_impls!(ArcId);
id_impls!(HalfArcId);

/// A graph of either flavor, used at the serialization boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph {
    Directed(DirectedGraph),
    Undirected(UndirectedGraph),
}

impl Graph {
    pub fn flavor(&self) -> &'static str {
        match self {
            Graph::Directed(_) => "directed",
            Graph::Undirected(_) => "undirected",
        }
    }

    pub fn validate(&self) -> Diagnostics {
        match self {
            Graph::Directed(g) => g.validate(),
            Graph::Undirected(g) => g.validate(),
        }
    }
}

/// Outcome of a structural validation: an empty violation list means valid.
/// Every violation names the offending identifier.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub violations: Vec<String>,
}

impl Diagnostics {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: String) {
        self.violations.push(v);
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{}", v)?;
            }
            Ok(())
        }
    }
}
