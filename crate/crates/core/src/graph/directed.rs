use std::collections::{BTreeMap, BTreeSet};

use num::bigint::BigInt;
use num::Zero;

use super::{ArcId, Diagnostics, NodeId};
use crate::exact::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DirectedArc {
    pub src: NodeId,
    pub tgt: NodeId,
}

/// A finite directed multigraph. Construction is lenient (dangling endpoints
/// are representable so that [`validate`](Self::validate) has something to
/// report); every operation in the crate assumes a valid graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DirectedGraph {
    nodes: BTreeSet<NodeId>,
    arcs: BTreeMap<ArcId, DirectedArc>,
}

impl DirectedGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_parts(
        nodes: impl IntoIterator<Item = NodeId>,
        arcs: impl IntoIterator<Item = (ArcId, NodeId, NodeId)>,
    ) -> Self {
        DirectedGraph {
            nodes: nodes.into_iter().collect(),
            arcs: arcs
                .into_iter()
                .map(|(id, src, tgt)| (id, DirectedArc { src, tgt }))
                .collect(),
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = &NodeId> {
        self.nodes.iter()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn contains_node(&self, n: &NodeId) -> bool {
        self.nodes.contains(n)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (&ArcId, &DirectedArc)> {
        self.arcs.iter()
    }

    pub fn arc(&self, id: &ArcId) -> Option<&DirectedArc> {
        self.arcs.get(id)
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn validate(&self) -> Diagnostics {
        let mut d = Diagnostics::default();
        for (id, arc) in &self.arcs {
            if !self.nodes.contains(&arc.src) {
                d.push(format!("arc `{}` has dangling source `{}`", id, arc.src));
            }
            if !self.nodes.contains(&arc.tgt) {
                d.push(format!("arc `{}` has dangling target `{}`", id, arc.tgt));
            }
        }
        d
    }

    /// Adjacency matrix over the sorted node order; entry (i, j) counts arcs
    /// from node i to node j.
    pub fn adjacency_matrix(&self) -> (Vec<NodeId>, IntMatrix) {
        let order: Vec<NodeId> = self.nodes.iter().cloned().collect();
        let index: BTreeMap<&NodeId, usize> =
            order.iter().enumerate().map(|(i, n)| (n, i)).collect();
        let mut m = vec![vec![BigInt::zero(); order.len()]; order.len()];
        for arc in self.arcs.values() {
            m[index[&arc.src]][index[&arc.tgt]] += 1;
        }
        (order, m)
    }

    /// Arcs grouped by (src, tgt) in sorted id order, for hom enumeration.
    pub fn arc_index(&self) -> BTreeMap<(NodeId, NodeId), Vec<ArcId>> {
        let mut idx: BTreeMap<(NodeId, NodeId), Vec<ArcId>> = BTreeMap::new();
        for (id, arc) in &self.arcs {
            idx.entry((arc.src.clone(), arc.tgt.clone()))
                .or_default()
                .push(id.clone());
        }
        idx
    }

    /// Weakly connected components, each a sorted node list; the component
    /// list is sorted by its smallest node.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut neighbors: BTreeMap<&NodeId, BTreeSet<&NodeId>> = BTreeMap::new();
        for arc in self.arcs.values() {
            neighbors.entry(&arc.src).or_default().insert(&arc.tgt);
            neighbors.entry(&arc.tgt).or_default().insert(&arc.src);
        }
        let mut seen: BTreeSet<&NodeId> = BTreeSet::new();
        let mut out = Vec::new();
        for start in &self.nodes {
            if seen.contains(start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(n) = stack.pop() {
                if !seen.insert(n) {
                    continue;
                }
                comp.insert(n.clone());
                if let Some(next) = neighbors.get(n) {
                    stack.extend(next.iter());
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1 && !self.nodes.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> DirectedGraph {
        DirectedGraph::from_parts(
            ["x", "y", "z"].map(NodeId::from),
            [
                (ArcId::from("a"), NodeId::from("x"), NodeId::from("y")),
                (ArcId::from("b"), NodeId::from("y"), NodeId::from("z")),
                (ArcId::from("c"), NodeId::from("z"), NodeId::from("x")),
            ],
        )
    }

    #[test]
    fn validate_reports_dangling_endpoints() {
        let g = DirectedGraph::from_parts(
            [NodeId::from("x")],
            [(ArcId::from("a"), NodeId::from("x"), NodeId::from("ghost"))],
        );
        let d = g.validate();
        assert_eq!(d.violations.len(), 1);
        assert!(d.violations[0].contains("ghost"));
        assert!(triangle().validate().is_valid());
    }

    #[test]
    fn adjacency_matrix_counts_parallel_arcs() {
        let g = DirectedGraph::from_parts(
            ["u", "v"].map(NodeId::from),
            [
                (ArcId::from("a"), NodeId::from("u"), NodeId::from("v")),
                (ArcId::from("b"), NodeId::from("u"), NodeId::from("v")),
                (ArcId::from("l"), NodeId::from("u"), NodeId::from("u")),
            ],
        );
        let (order, m) = g.adjacency_matrix();
        assert_eq!(order, vec![NodeId::from("u"), NodeId::from("v")]);
        assert_eq!(m[0][1], BigInt::from(2));
        assert_eq!(m[0][0], BigInt::from(1));
        assert_eq!(m[1][0], BigInt::from(0));
    }

    #[test]
    fn components_split_correctly() {
        let mut g = triangle();
        g = DirectedGraph::from_parts(
            g.nodes().cloned().chain([NodeId::from("lone")]),
            g.arcs()
                .map(|(id, a)| (id.clone(), a.src.clone(), a.tgt.clone())),
        );
        assert_eq!(g.components().len(), 2);
        assert!(!g.is_connected());
        assert!(triangle().is_connected());
        assert!(!DirectedGraph::empty().is_connected());
    }
}
