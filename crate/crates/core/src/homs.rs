//! Exhaustive enumeration of graph morphisms.
//!
//! The search assigns node images along a connectivity-aware order with
//! arc-feasibility pruning, then multiplies out the per-arc image choices
//! (parallel arcs give independent choices). Results come back in a fixed
//! lexicographic order. With the `parallel` feature the search fans out over
//! the image candidates of the first node; the concatenation order makes the
//! output identical to the sequential path, which stays available as the
//! `_seq` variants for oracle checks and benchmarks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::{
    ArcId, DirectedGraph, DirectedMorphism, HalfArcId, NodeId, UndirectedGraph,
    UndirectedMorphism,
};
use crate::par;

/// BFS order over the underlying undirected adjacency, component by
/// component, smallest node first. Gives consecutive pruning on cycles and
/// paths.
fn plan_order(nodes: Vec<NodeId>, adjacency: &BTreeMap<NodeId, BTreeSet<NodeId>>) -> Vec<NodeId> {
    let mut order = Vec::with_capacity(nodes.len());
    let mut seen: BTreeSet<&NodeId> = BTreeSet::new();
    for start in &nodes {
        if seen.contains(start) {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(n) = queue.pop_front() {
            order.push(n.clone());
            if let Some(next) = adjacency.get(n) {
                for m in next {
                    if seen.insert(m) {
                        queue.push_back(m);
                    }
                }
            }
        }
    }
    order
}

struct DirectedSearch {
    order: Vec<NodeId>,
    // (arc, src position, tgt position), checked as soon as both are set
    checks: Vec<Vec<(usize, usize)>>,
    arcs: Vec<(ArcId, usize, usize)>,
    y_nodes: Vec<NodeId>,
    y_index: BTreeMap<(NodeId, NodeId), Vec<ArcId>>,
}

impl DirectedSearch {
    fn new(x: &DirectedGraph, y: &DirectedGraph) -> Self {
        let mut adjacency: BTreeMap<NodeId, BTreeSet<NodeId>> = BTreeMap::new();
        for (_, a) in x.arcs() {
            adjacency
                .entry(a.src.clone())
                .or_default()
                .insert(a.tgt.clone());
            adjacency
                .entry(a.tgt.clone())
                .or_default()
                .insert(a.src.clone());
        }
        let order = plan_order(x.nodes().cloned().collect(), &adjacency);
        let pos: BTreeMap<&NodeId, usize> = order.iter().enumerate().map(|(i, n)| (n, i)).collect();
        let arcs: Vec<(ArcId, usize, usize)> = x
            .arcs()
            .map(|(id, a)| (id.clone(), pos[&a.src], pos[&a.tgt]))
            .collect();
        let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); order.len()];
        for &(_, s, t) in &arcs {
            checks[s.max(t)].push((s, t));
        }
        DirectedSearch {
            order,
            checks,
            arcs,
            y_nodes: y.nodes().cloned().collect(),
            y_index: y.arc_index(),
        }
    }

    fn feasible(&self, assign: &[usize], pos: usize) -> bool {
        self.checks[pos].iter().all(|&(s, t)| {
            self.y_index.contains_key(&(
                self.y_nodes[assign[s]].clone(),
                self.y_nodes[assign[t]].clone(),
            ))
        })
    }

    fn emit(&self, assign: &[usize], out: &mut Vec<DirectedMorphism>) {
        let node_map: BTreeMap<NodeId, NodeId> = self
            .order
            .iter()
            .zip(assign)
            .map(|(n, &w)| (n.clone(), self.y_nodes[w].clone()))
            .collect();
        let candidates: Vec<&Vec<ArcId>> = self
            .arcs
            .iter()
            .map(|(_, s, t)| {
                &self.y_index[&(
                    self.y_nodes[assign[*s]].clone(),
                    self.y_nodes[assign[*t]].clone(),
                )]
            })
            .collect();
        let mut chosen: Vec<usize> = vec![0; self.arcs.len()];
        self.emit_arcs(0, &candidates, &mut chosen, &node_map, out);
    }

    fn emit_arcs(
        &self,
        i: usize,
        candidates: &[&Vec<ArcId>],
        chosen: &mut Vec<usize>,
        node_map: &BTreeMap<NodeId, NodeId>,
        out: &mut Vec<DirectedMorphism>,
    ) {
        if i == self.arcs.len() {
            let arc_map = self
                .arcs
                .iter()
                .enumerate()
                .map(|(k, (id, _, _))| (id.clone(), candidates[k][chosen[k]].clone()))
                .collect();
            out.push(DirectedMorphism {
                node_map: node_map.clone(),
                arc_map,
            });
            return;
        }
        for c in 0..candidates[i].len() {
            chosen[i] = c;
            self.emit_arcs(i + 1, candidates, chosen, node_map, out);
        }
    }

    fn search(&self, assign: &mut Vec<usize>, out: &mut Vec<DirectedMorphism>) {
        let pos = assign.len();
        if pos == self.order.len() {
            self.emit(assign, out);
            return;
        }
        for w in 0..self.y_nodes.len() {
            assign.push(w);
            if self.feasible(assign, pos) {
                self.search(assign, out);
            }
            assign.pop();
        }
    }

    fn run_root(&self, root: usize) -> Vec<DirectedMorphism> {
        let mut out = Vec::new();
        let mut assign = vec![root];
        if self.feasible(&assign, 0) {
            self.search(&mut assign, &mut out);
        }
        out
    }
}

fn homs_directed(x: &DirectedGraph, y: &DirectedGraph, parallel: bool) -> Vec<DirectedMorphism> {
    if x.node_count() == 0 {
        // the empty graph is initial: exactly one (empty) morphism
        return vec![DirectedMorphism::default()];
    }
    let search = DirectedSearch::new(x, y);
    let roots: Vec<usize> = (0..search.y_nodes.len()).collect();
    if parallel {
        par::flat_map_ordered(roots, |r| search.run_root(r))
    } else {
        roots.into_iter().flat_map(|r| search.run_root(r)).collect()
    }
}

/// All morphisms x -> y, in a fixed lexicographic order.
pub fn enumerate_homs_directed(x: &DirectedGraph, y: &DirectedGraph) -> Vec<DirectedMorphism> {
    homs_directed(x, y, true)
}

/// Sequential reference implementation; same output, same order.
pub fn enumerate_homs_directed_seq(x: &DirectedGraph, y: &DirectedGraph) -> Vec<DirectedMorphism> {
    homs_directed(x, y, false)
}

struct OrbitInfo {
    rep: HalfArcId,
    rep_inv: HalfArcId,
    src: usize,
    tgt: usize,
    degenerate: bool,
}

struct UndirectedSearch {
    order: Vec<NodeId>,
    checks: Vec<Vec<usize>>, // orbit indices to test once position is set
    orbits: Vec<OrbitInfo>,
    y_nodes: Vec<NodeId>,
    y_index: BTreeMap<(NodeId, NodeId), Vec<HalfArcId>>,
    y_degen: BTreeMap<NodeId, Vec<HalfArcId>>,
    y_inv: BTreeMap<HalfArcId, HalfArcId>,
}

impl UndirectedSearch {
    fn new(x: &UndirectedGraph, y: &UndirectedGraph) -> Self {
        let mut adjacency: BTreeMap<NodeId, BTreeSet<NodeId>> = BTreeMap::new();
        for (_, h) in x.halfarcs() {
            adjacency
                .entry(h.src.clone())
                .or_default()
                .insert(h.tgt.clone());
            adjacency
                .entry(h.tgt.clone())
                .or_default()
                .insert(h.src.clone());
        }
        let order = plan_order(x.nodes().cloned().collect(), &adjacency);
        let pos: BTreeMap<&NodeId, usize> = order.iter().enumerate().map(|(i, n)| (n, i)).collect();
        let orbits: Vec<OrbitInfo> = x
            .arc_orbits()
            .into_iter()
            .map(|o| {
                let h = x.halfarc(o.rep()).expect("half-arc exists");
                OrbitInfo {
                    rep: o.rep().clone(),
                    rep_inv: h.inv.clone(),
                    src: pos[&h.src],
                    tgt: pos[&h.tgt],
                    degenerate: o.is_degenerate(),
                }
            })
            .collect();
        let mut checks = vec![Vec::new(); order.len()];
        for (i, o) in orbits.iter().enumerate() {
            checks[o.src.max(o.tgt)].push(i);
        }
        let mut y_degen: BTreeMap<NodeId, Vec<HalfArcId>> = BTreeMap::new();
        for (id, h) in y.halfarcs() {
            if h.inv == *id {
                y_degen.entry(h.src.clone()).or_default().push(id.clone());
            }
        }
        UndirectedSearch {
            order,
            checks,
            orbits,
            y_nodes: y.nodes().cloned().collect(),
            y_index: y.halfarc_index(),
            y_degen,
            y_inv: y
                .halfarcs()
                .map(|(id, h)| (id.clone(), h.inv.clone()))
                .collect(),
        }
    }

    fn candidates(&self, o: &OrbitInfo, assign: &[usize]) -> Option<&Vec<HalfArcId>> {
        if o.degenerate {
            self.y_degen.get(&self.y_nodes[assign[o.src]])
        } else {
            self.y_index.get(&(
                self.y_nodes[assign[o.src]].clone(),
                self.y_nodes[assign[o.tgt]].clone(),
            ))
        }
    }

    fn feasible(&self, assign: &[usize], pos: usize) -> bool {
        self.checks[pos]
            .iter()
            .all(|&i| self.candidates(&self.orbits[i], assign).is_some())
    }

    fn emit(&self, assign: &[usize], out: &mut Vec<UndirectedMorphism>) {
        let node_map: BTreeMap<NodeId, NodeId> = self
            .order
            .iter()
            .zip(assign)
            .map(|(n, &w)| (n.clone(), self.y_nodes[w].clone()))
            .collect();
        let candidates: Vec<&Vec<HalfArcId>> = match self
            .orbits
            .iter()
            .map(|o| self.candidates(o, assign))
            .collect()
        {
            Some(c) => c,
            None => return,
        };
        let mut chosen = vec![0usize; self.orbits.len()];
        self.emit_orbits(0, &candidates, &mut chosen, &node_map, out);
    }

    fn emit_orbits(
        &self,
        i: usize,
        candidates: &[&Vec<HalfArcId>],
        chosen: &mut Vec<usize>,
        node_map: &BTreeMap<NodeId, NodeId>,
        out: &mut Vec<UndirectedMorphism>,
    ) {
        if i == self.orbits.len() {
            let mut halfarc_map = BTreeMap::new();
            for (k, o) in self.orbits.iter().enumerate() {
                let img = candidates[k][chosen[k]].clone();
                let img_inv = self.y_inv[&img].clone();
                halfarc_map.insert(o.rep.clone(), img);
                halfarc_map.insert(o.rep_inv.clone(), img_inv);
            }
            out.push(UndirectedMorphism {
                node_map: node_map.clone(),
                halfarc_map,
            });
            return;
        }
        for c in 0..candidates[i].len() {
            chosen[i] = c;
            self.emit_orbits(i + 1, candidates, chosen, node_map, out);
        }
    }

    fn search(&self, assign: &mut Vec<usize>, out: &mut Vec<UndirectedMorphism>) {
        let pos = assign.len();
        if pos == self.order.len() {
            self.emit(assign, out);
            return;
        }
        for w in 0..self.y_nodes.len() {
            assign.push(w);
            if self.feasible(assign, pos) {
                self.search(assign, out);
            }
            assign.pop();
        }
    }

    fn run_root(&self, root: usize) -> Vec<UndirectedMorphism> {
        let mut out = Vec::new();
        let mut assign = vec![root];
        if self.feasible(&assign, 0) {
            self.search(&mut assign, &mut out);
        }
        out
    }
}

fn homs_undirected(
    x: &UndirectedGraph,
    y: &UndirectedGraph,
    parallel: bool,
) -> Vec<UndirectedMorphism> {
    if x.node_count() == 0 {
        return vec![UndirectedMorphism::default()];
    }
    let search = UndirectedSearch::new(x, y);
    let roots: Vec<usize> = (0..search.y_nodes.len()).collect();
    if parallel {
        par::flat_map_ordered(roots, |r| search.run_root(r))
    } else {
        roots.into_iter().flat_map(|r| search.run_root(r)).collect()
    }
}

/// All morphisms x -> y. A non-degenerate orbit may land on a degenerate
/// loop (both half-arcs fold onto the fixed half-arc); a degenerate loop can
/// only land on a degenerate loop.
pub fn enumerate_homs_undirected(
    x: &UndirectedGraph,
    y: &UndirectedGraph,
) -> Vec<UndirectedMorphism> {
    homs_undirected(x, y, true)
}

pub fn enumerate_homs_undirected_seq(
    x: &UndirectedGraph,
    y: &UndirectedGraph,
) -> Vec<UndirectedMorphism> {
    homs_undirected(x, y, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::morphism::{validate_directed_morphism, validate_undirected_morphism};
    use crate::graph::standard;

    #[test]
    fn directed_cycle_homs() {
        // c_2 -> c_1: everything folds onto the loop
        let homs = enumerate_homs_directed(
            &standard::directed_cycle(2),
            &standard::directed_cycle(1),
        );
        assert_eq!(homs.len(), 1);
        // c_6 -> c_3: three rotations
        let c6 = standard::directed_cycle(6);
        let c3 = standard::directed_cycle(3);
        let homs = enumerate_homs_directed(&c6, &c3);
        assert_eq!(homs.len(), 3);
        for h in &homs {
            assert!(validate_directed_morphism(h, &c6, &c3).is_valid());
        }
        // c_3 -> c_2: none
        assert!(enumerate_homs_directed(&c3, &standard::directed_cycle(2)).is_empty());
    }

    #[test]
    fn empty_domain_has_one_morphism() {
        let none = DirectedGraph::empty();
        assert_eq!(
            enumerate_homs_directed(&none, &standard::directed_cycle(3)).len(),
            1
        );
        let none_u = UndirectedGraph::empty();
        assert_eq!(
            enumerate_homs_undirected(&none_u, &standard::undirected_cycle(3)).len(),
            1
        );
    }

    #[test]
    fn parallel_arcs_multiply_choices() {
        // c_1 -> two-loop bouquet: 2 images for the single arc
        let homs = enumerate_homs_directed(
            &standard::directed_cycle(1),
            &standard::directed_bouquet(2),
        );
        assert_eq!(homs.len(), 2);
    }

    #[test]
    fn undirected_digon_self_homs() {
        let c2 = standard::undirected_cycle(2);
        let homs = enumerate_homs_undirected(&c2, &c2);
        assert_eq!(homs.len(), 8);
        for h in &homs {
            assert!(validate_undirected_morphism(h, &c2, &c2).is_valid());
        }
    }

    #[test]
    fn degenerate_loops_absorb_arcs_but_not_conversely() {
        // arc onto B_1: both endpoints to the point, both half-arcs onto the
        // fixed half-arc
        let arc = standard::undirected_arc();
        let b1 = standard::bouquet(1);
        let homs = enumerate_homs_undirected(&arc, &b1);
        assert_eq!(homs.len(), 1);
        assert!(validate_undirected_morphism(&homs[0], &arc, &b1).is_valid());
        // B_1 into the plain loop graph: a degenerate loop has no valid image
        let c1 = standard::undirected_cycle(1);
        assert!(enumerate_homs_undirected(&b1, &c1).is_empty());
        // but the plain loop maps onto B_1 two... no: both half-arcs must land
        // on the fixed point, giving exactly one morphism
        assert_eq!(enumerate_homs_undirected(&c1, &b1).len(), 1);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let x = standard::undirected_cycle(4);
        let y = standard::complete(4);
        assert_eq!(
            enumerate_homs_undirected(&x, &y),
            enumerate_homs_undirected_seq(&x, &y)
        );
        let xd = standard::directed_cycle(5);
        let yd = standard::directed_bouquet(2);
        assert_eq!(
            enumerate_homs_directed(&xd, &yd),
            enumerate_homs_directed_seq(&xd, &yd)
        );
    }
}
