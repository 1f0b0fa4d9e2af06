use std::collections::{BTreeMap, BTreeSet};

use num::bigint::BigInt;
use num::Zero;

use super::{Diagnostics, HalfArcId, NodeId};
use crate::error::{Error, Result};
use crate::exact::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfArc {
    pub src: NodeId,
    pub tgt: NodeId,
    pub inv: HalfArcId,
}

/// An undirected arc as an involution orbit, normalized so the two half-arc
/// ids are sorted. A degenerate loop has both entries equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcOrbit(pub HalfArcId, pub HalfArcId);

impl ArcOrbit {
    pub fn new(a: HalfArcId, b: HalfArcId) -> Self {
        if a <= b {
            ArcOrbit(a, b)
        } else {
            ArcOrbit(b, a)
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.0 == self.1
    }

    /// The representative half-arc (smaller id).
    pub fn rep(&self) -> &HalfArcId {
        &self.0
    }
}

/// The star of a node: the set of arc orbits incident to it. A loop of either
/// kind contributes exactly one orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub node: NodeId,
    pub arcs: BTreeSet<ArcOrbit>,
}

impl Star {
    pub fn size(&self) -> usize {
        self.arcs.len()
    }
}

/// A finite undirected multigraph presented by half-arcs and an involution.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UndirectedGraph {
    nodes: BTreeSet<NodeId>,
    halfarcs: BTreeMap<HalfArcId, HalfArc>,
}

impl UndirectedGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_parts(
        nodes: impl IntoIterator<Item = NodeId>,
        halfarcs: impl IntoIterator<Item = (HalfArcId, NodeId, NodeId, HalfArcId)>,
    ) -> Self {
        UndirectedGraph {
            nodes: nodes.into_iter().collect(),
            halfarcs: halfarcs
                .into_iter()
                .map(|(id, src, tgt, inv)| (id, HalfArc { src, tgt, inv }))
                .collect(),
        }
    }

    /// Builder taking prebuilt half-arc records; the categorical
    /// constructions already carry `HalfArc` values around.
    pub fn from_halfarc_pairs(
        nodes: impl IntoIterator<Item = NodeId>,
        halfarcs: impl IntoIterator<Item = (HalfArcId, HalfArc)>,
    ) -> Self {
        UndirectedGraph {
            nodes: nodes.into_iter().collect(),
            halfarcs: halfarcs.into_iter().collect(),
        }
    }

    /// Convenience builder from whole arcs. Each `(id, u, v)` becomes the
    /// half-arc pair `id+` / `id-`; each loop entry `(id, u, u)` still gets
    /// two half-arcs (a non-degenerate loop). Degenerate loops are added with
    /// [`from_parts`](Self::from_parts) directly.
    pub fn from_arcs(
        nodes: impl IntoIterator<Item = NodeId>,
        arcs: impl IntoIterator<Item = (String, NodeId, NodeId)>,
    ) -> Self {
        let halfarcs: Vec<(HalfArcId, NodeId, NodeId, HalfArcId)> = arcs
            .into_iter()
            .flat_map(|(id, u, v)| {
                let plus = HalfArcId(format!("{}+", id));
                let minus = HalfArcId(format!("{}-", id));
                [
                    (plus.clone(), u.clone(), v.clone(), minus.clone()),
                    (minus, v, u, plus),
                ]
            })
            .collect();
        Self::from_parts(nodes, halfarcs)
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

    pub fn halfarcs(&self) -> impl Iterator<Item = (&HalfArcId, &HalfArc)> {
        self.halfarcs.iter()
    }

    pub fn halfarc(&self, id: &HalfArcId) -> Option<&HalfArc> {
        self.halfarcs.get(id)
    }

    pub fn halfarc_count(&self) -> usize {
        self.halfarcs.len()
    }

    pub fn inv(&self, id: &HalfArcId) -> Result<&HalfArcId> {
        self.halfarcs
            .get(id)
            .map(|h| &h.inv)
            .ok_or_else(|| Error::UnknownId {
                kind: "half-arc",
                id: id.0.clone(),
            })
    }

    pub fn orbit_of(&self, id: &HalfArcId) -> Result<ArcOrbit> {
        let inv = self.inv(id)?;
        Ok(ArcOrbit::new(id.clone(), inv.clone()))
    }

    /// All arc orbits, sorted.
    pub fn arc_orbits(&self) -> Vec<ArcOrbit> {
        let mut set = BTreeSet::new();
        for (id, h) in &self.halfarcs {
            set.insert(ArcOrbit::new(id.clone(), h.inv.clone()));
        }
        set.into_iter().collect()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_orbits().len()
    }

    pub fn validate(&self) -> Diagnostics {
        let mut d = Diagnostics::default();
        for (id, h) in &self.halfarcs {
            if !self.nodes.contains(&h.src) {
                d.push(format!("half-arc `{}` has dangling source `{}`", id, h.src));
            }
            if !self.nodes.contains(&h.tgt) {
                d.push(format!("half-arc `{}` has dangling target `{}`", id, h.tgt));
            }
            match self.halfarcs.get(&h.inv) {
                None => d.push(format!(
                    "half-arc `{}` names missing involution partner `{}`",
                    id, h.inv
                )),
                Some(partner) => {
                    if partner.inv != *id {
                        d.push(format!(
                            "involution is not symmetric at `{}`: inv(inv) is `{}`",
                            id, partner.inv
                        ));
                    }
                    if partner.src != h.tgt || partner.tgt != h.src {
                        d.push(format!(
                            "half-arc `{}` does not reverse its partner `{}`",
                            id, h.inv
                        ));
                    }
                }
            }
        }
        d
    }

    pub fn star(&self, node: &NodeId) -> Result<Star> {
        if !self.nodes.contains(node) {
            return Err(Error::UnknownNode(node.0.clone()));
        }
        let mut arcs = BTreeSet::new();
        for (id, h) in &self.halfarcs {
            if h.src == *node || h.tgt == *node {
                arcs.insert(ArcOrbit::new(id.clone(), h.inv.clone()));
            }
        }
        Ok(Star {
            node: node.clone(),
            arcs,
        })
    }

    /// A loop is any half-arc with equal endpoints (degenerate or not).
    pub fn has_loops(&self) -> bool {
        self.halfarcs.values().any(|h| h.src == h.tgt)
    }

    /// Degree as the number of half-arcs leaving the node. For loopless
    /// graphs this equals the star size.
    pub fn degree(&self, node: &NodeId) -> usize {
        self.halfarcs.values().filter(|h| h.src == *node).count()
    }

    /// Adjacency matrix over sorted nodes: entry (i, j) counts half-arcs from
    /// node i to node j. Symmetric for valid graphs.
    pub fn adjacency_matrix(&self) -> (Vec<NodeId>, IntMatrix) {
        let order: Vec<NodeId> = self.nodes.iter().cloned().collect();
        let index: BTreeMap<&NodeId, usize> =
            order.iter().enumerate().map(|(i, n)| (n, i)).collect();
        let mut m = vec![vec![BigInt::zero(); order.len()]; order.len()];
        for h in self.halfarcs.values() {
            m[index[&h.src]][index[&h.tgt]] += 1;
        }
        (order, m)
    }

    /// Half-arcs grouped by (src, tgt) in sorted id order.
    pub fn halfarc_index(&self) -> BTreeMap<(NodeId, NodeId), Vec<HalfArcId>> {
        let mut idx: BTreeMap<(NodeId, NodeId), Vec<HalfArcId>> = BTreeMap::new();
        for (id, h) in &self.halfarcs {
            idx.entry((h.src.clone(), h.tgt.clone()))
                .or_default()
                .push(id.clone());
        }
        idx
    }

    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut neighbors: BTreeMap<&NodeId, BTreeSet<&NodeId>> = BTreeMap::new();
        for h in self.halfarcs.values() {
            neighbors.entry(&h.src).or_default().insert(&h.tgt);
            neighbors.entry(&h.tgt).or_default().insert(&h.src);
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

    /// The node-induced subgraph on `keep`. Half-arcs survive only when both
    /// endpoints survive; involution partners always live on the same arc, so
    /// the result is again closed under `inv`.
    pub fn induced_subgraph(&self, keep: &BTreeSet<NodeId>) -> UndirectedGraph {
        let halfarcs = self
            .halfarcs
            .iter()
            .filter(|(_, h)| keep.contains(&h.src) && keep.contains(&h.tgt))
            .map(|(id, h)| (id.clone(), h.src.clone(), h.tgt.clone(), h.inv.clone()));
        UndirectedGraph::from_parts(keep.iter().cloned(), halfarcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::standard;

    #[test]
    fn from_arcs_pairs_halfarcs() {
        let g = UndirectedGraph::from_arcs(
            ["u", "v"].map(NodeId::from),
            [("e".to_string(), NodeId::from("u"), NodeId::from("v"))],
        );
        assert!(g.validate().is_valid());
        assert_eq!(g.halfarc_count(), 2);
        assert_eq!(g.arc_count(), 1);
        let plus = g.halfarc(&HalfArcId::from("e+")).unwrap();
        assert_eq!(plus.src, NodeId::from("u"));
        assert_eq!(plus.tgt, NodeId::from("v"));
        assert_eq!(plus.inv, HalfArcId::from("e-"));
    }

    #[test]
    fn validate_catches_involution_breaks() {
        // inv points at itself on one side only
        let g = UndirectedGraph::from_parts(
            ["u", "v"].map(NodeId::from),
            [
                (
                    HalfArcId::from("a"),
                    NodeId::from("u"),
                    NodeId::from("v"),
                    HalfArcId::from("b"),
                ),
                (
                    HalfArcId::from("b"),
                    NodeId::from("v"),
                    NodeId::from("u"),
                    HalfArcId::from("a"),
                ),
                (
                    HalfArcId::from("c"),
                    NodeId::from("u"),
                    NodeId::from("v"),
                    HalfArcId::from("a"),
                ),
            ],
        );
        let d = g.validate();
        assert!(!d.is_valid());
        assert!(d.violations.iter().any(|v| v.contains("`c`")));
    }

    #[test]
    fn star_counts_loops_once() {
        // bouquet with 3 degenerate loops: star size 3
        let b3 = standard::bouquet(3);
        let star = b3.star(&NodeId::from("*")).unwrap();
        assert_eq!(star.size(), 3);
        assert!(star.arcs.iter().all(|o| o.is_degenerate()));
        // non-degenerate loop: one orbit in the star
        let eight = standard::eight();
        assert_eq!(eight.star(&NodeId::from("*")).unwrap().size(), 2);
    }

    #[test]
    fn degenerate_marker_is_inv_fixed() {
        let b1 = standard::bouquet(1);
        let (id, h) = b1.halfarcs().next().unwrap();
        assert_eq!(&h.inv, id);
        assert!(b1.orbit_of(id).unwrap().is_degenerate());
        assert!(b1.has_loops());
    }
}
