//! Canonical JSON wire format for graphs.
//!
//! Directed:   `{"flavor":"directed","nodes":[...],"arcs":[{"id":..,"src":..,"tgt":..}]}`
//! Undirected: `{"flavor":"undirected","nodes":[...],"halfarcs":[{"id":..,"src":..,"tgt":..,"inv":..}]}`
//!
//! Serialization always emits nodes and arcs sorted by id, so equal graphs
//! produce byte-identical JSON. `inv` equal to the half-arc's own id marks a
//! degenerate loop. Duplicate identifiers are rejected at parse time;
//! dangling references and involution defects are left for `validate` to
//! report.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{ArcId, DirectedGraph, Graph, HalfArcId, NodeId, UndirectedGraph};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
pub struct DirectedArcJson {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Serialize, Deserialize)]
pub struct HalfArcJson {
    pub id: String,
    pub src: String,
    pub tgt: String,
    pub inv: String,
}

/// The wire form of a graph; embeds in larger documents (coverings,
/// reports) so those inherit the canonical graph layout.
#[derive(Serialize, Deserialize)]
#[serde(tag = "flavor")]
pub enum GraphJson {
    #[serde(rename = "directed")]
    Directed {
        nodes: Vec<String>,
        arcs: Vec<DirectedArcJson>,
    },
    #[serde(rename = "undirected")]
    Undirected {
        nodes: Vec<String>,
        halfarcs: Vec<HalfArcJson>,
    },
}

impl GraphJson {
    pub fn from_graph(graph: &Graph) -> Self {
        wire_of(graph)
    }

    pub fn into_graph(self) -> Result<Graph> {
        graph_of(self)
    }
}

fn wire_of(graph: &Graph) -> GraphJson {
    match graph {
        Graph::Directed(g) => GraphJson::Directed {
            nodes: g.nodes().map(|n| n.0.clone()).collect(),
            arcs: g
                .arcs()
                .map(|(id, a)| DirectedArcJson {
                    id: id.0.clone(),
                    src: a.src.0.clone(),
                    tgt: a.tgt.0.clone(),
                })
                .collect(),
        },
        Graph::Undirected(g) => GraphJson::Undirected {
            nodes: g.nodes().map(|n| n.0.clone()).collect(),
            halfarcs: g
                .halfarcs()
                .map(|(id, h)| HalfArcJson {
                    id: id.0.clone(),
                    src: h.src.0.clone(),
                    tgt: h.tgt.0.clone(),
                    inv: h.inv.0.clone(),
                })
                .collect(),
        },
    }
}

fn graph_of(wire: GraphJson) -> Result<Graph> {
    fn check_unique(what: &str, ids: impl Iterator<Item = String>) -> Result<()> {
        let mut seen = BTreeSet::new();
        for id in ids {
            if !seen.insert(id.clone()) {
                return Err(Error::InvalidGraph(format!("duplicate {} id `{}`", what, id)));
            }
        }
        Ok(())
    }
    match wire {
        GraphJson::Directed { nodes, arcs } => {
            check_unique("node", nodes.iter().cloned())?;
            check_unique("arc", arcs.iter().map(|a| a.id.clone()))?;
            Ok(Graph::Directed(DirectedGraph::from_parts(
                nodes.into_iter().map(NodeId),
                arcs.into_iter()
                    .map(|a| (ArcId(a.id), NodeId(a.src), NodeId(a.tgt))),
            )))
        }
        GraphJson::Undirected { nodes, halfarcs } => {
            check_unique("node", nodes.iter().cloned())?;
            check_unique("half-arc", halfarcs.iter().map(|a| a.id.clone()))?;
            Ok(Graph::Undirected(UndirectedGraph::from_parts(
                nodes.into_iter().map(NodeId),
                halfarcs.into_iter().map(|h| {
                    (
                        HalfArcId(h.id),
                        NodeId(h.src),
                        NodeId(h.tgt),
                        HalfArcId(h.inv),
                    )
                }),
            )))
        }
    }
}

pub fn graph_to_json(graph: &Graph) -> Value {
    serde_json::to_value(wire_of(graph)).expect("graph serialization cannot fail")
}

/// Canonical single-line JSON text.
pub fn graph_to_string(graph: &Graph) -> String {
    serde_json::to_string(&wire_of(graph)).expect("graph serialization cannot fail")
}

pub fn graph_from_json(v: &Value) -> Result<Graph> {
    graph_of(serde_json::from_value(v.clone())?)
}

pub fn graph_from_str(s: &str) -> Result<Graph> {
    graph_of(serde_json::from_str(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::standard;

    #[test]
    fn directed_round_trip_is_canonical() {
        let g = Graph::Directed(standard::directed_cycle(2));
        let s = graph_to_string(&g);
        assert_eq!(
            s,
            r#"{"flavor":"directed","nodes":["[0]","[1]"],"arcs":[{"id":"a0","src":"[0]","tgt":"[1]"},{"id":"a1","src":"[1]","tgt":"[0]"}]}"#
        );
        assert_eq!(graph_from_str(&s).unwrap(), g);
    }

    #[test]
    fn undirected_round_trip_keeps_involution() {
        let g = Graph::Undirected(standard::bouquet(1));
        let s = graph_to_string(&g);
        assert_eq!(
            s,
            r#"{"flavor":"undirected","nodes":["*"],"halfarcs":[{"id":"a0","src":"*","tgt":"*","inv":"a0"}]}"#
        );
        assert_eq!(graph_from_str(&s).unwrap(), g);
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let s = r#"{"flavor":"directed","nodes":["x","x"],"arcs":[]}"#;
        assert!(graph_from_str(s).is_err());
        let s = r#"{"flavor":"directed","nodes":["x"],"arcs":[{"id":"a","src":"x","tgt":"x"},{"id":"a","src":"x","tgt":"x"}]}"#;
        assert!(graph_from_str(s).is_err());
    }

    #[test]
    fn dangling_references_parse_but_fail_validation() {
        let s = r#"{"flavor":"directed","nodes":["x"],"arcs":[{"id":"a","src":"x","tgt":"ghost"}]}"#;
        let g = graph_from_str(s).unwrap();
        assert!(!g.validate().is_valid());
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = graph_from_str("{\"flavor\": \"directed\",").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line"), "{}", msg);
    }
}
