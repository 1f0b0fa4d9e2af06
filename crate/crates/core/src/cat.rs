//! Binary limits and colimits in both presheaf categories, computed
//! pointwise: sums, products, pushouts (quotients by the generated
//! equivalence, via union-find) and pullbacks. Ids of constructed objects
//! are derived from the input ids: `0:x`/`1:y` in a sum, `(x,y)` in a
//! product or pullback, and the least member of its class in a pushout.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::morphism::{
    validate_directed_morphism, validate_undirected_morphism,
};
use crate::graph::undirected::HalfArc;
use crate::graph::{
    ArcId, DirectedGraph, DirectedMorphism, HalfArcId, NodeId, UndirectedGraph,
    UndirectedMorphism,
};

fn pair_id(a: &str, b: &str) -> String {
    format!("({},{})", a, b)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Quotient a sorted id universe by unions, mapping every id to the least
/// id of its class.
struct Classes {
    ids: Vec<String>,
    index: BTreeMap<String, usize>,
    uf: UnionFind,
}

impl Classes {
    fn new(ids: Vec<String>) -> Self {
        let index = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), i))
            .collect();
        let uf = UnionFind::new(ids.len());
        Classes { ids, index, uf }
    }

    fn union(&mut self, a: &str, b: &str) {
        let (ia, ib) = (self.index[a], self.index[b]);
        self.uf.union(ia, ib);
    }

    /// Least id in the class; relies on `ids` being sorted so the root
    /// index is also the least id.
    fn rep(&mut self, id: &str) -> String {
        let i = self.index[id];
        let r = self.uf.find(i);
        self.ids[r].clone()
    }
}

/// Disjoint union with injection morphisms; ids get `0:` / `1:` prefixes.
pub fn sum_directed(
    x: &DirectedGraph,
    y: &DirectedGraph,
) -> (DirectedGraph, DirectedMorphism, DirectedMorphism) {
    let mut nodes = Vec::new();
    let mut arcs = Vec::new();
    let mut inj = [DirectedMorphism::default(), DirectedMorphism::default()];
    for (side, g) in [(0, x), (1, y)] {
        for n in g.nodes() {
            let id: NodeId = format!("{}:{}", side, n).into();
            inj[side].node_map.insert(n.clone(), id.clone());
            nodes.push(id);
        }
        for (a, arc) in g.arcs() {
            let id: ArcId = format!("{}:{}", side, a).into();
            inj[side].arc_map.insert(a.clone(), id.clone());
            arcs.push((
                id,
                format!("{}:{}", side, arc.src).into(),
                format!("{}:{}", side, arc.tgt).into(),
            ));
        }
    }
    let [ix, iy] = inj;
    (DirectedGraph::from_parts(nodes, arcs), ix, iy)
}

/// Undirected disjoint union; the involution carries over within each side.
pub fn sum_undirected(
    x: &UndirectedGraph,
    y: &UndirectedGraph,
) -> (UndirectedGraph, UndirectedMorphism, UndirectedMorphism) {
    let mut nodes = Vec::new();
    let mut halfarcs = Vec::new();
    let mut inj = [
        UndirectedMorphism::default(),
        UndirectedMorphism::default(),
    ];
    for (side, g) in [(0, x), (1, y)] {
        for n in g.nodes() {
            let id: NodeId = format!("{}:{}", side, n).into();
            inj[side].node_map.insert(n.clone(), id.clone());
            nodes.push(id);
        }
        for (a, h) in g.halfarcs() {
            let id: HalfArcId = format!("{}:{}", side, a).into();
            inj[side].halfarc_map.insert(a.clone(), id.clone());
            halfarcs.push((
                id,
                HalfArc {
                    src: format!("{}:{}", side, h.src).into(),
                    tgt: format!("{}:{}", side, h.tgt).into(),
                    inv: format!("{}:{}", side, h.inv).into(),
                },
            ));
        }
    }
    let [ix, iy] = inj;
    (UndirectedGraph::from_halfarc_pairs(nodes, halfarcs), ix, iy)
}

/// Pointwise product with projections: nodes and arcs are pairs, structure
/// maps act componentwise.
pub fn product_directed(
    x: &DirectedGraph,
    y: &DirectedGraph,
) -> (DirectedGraph, DirectedMorphism, DirectedMorphism) {
    let mut nodes = Vec::new();
    let mut arcs = Vec::new();
    let mut px = DirectedMorphism::default();
    let mut py = DirectedMorphism::default();
    for a in x.nodes() {
        for b in y.nodes() {
            let id: NodeId = pair_id(a.as_str(), b.as_str()).into();
            px.node_map.insert(id.clone(), a.clone());
            py.node_map.insert(id.clone(), b.clone());
            nodes.push(id);
        }
    }
    for (ia, aa) in x.arcs() {
        for (ib, ab) in y.arcs() {
            let id: ArcId = pair_id(ia.as_str(), ib.as_str()).into();
            px.arc_map.insert(id.clone(), ia.clone());
            py.arc_map.insert(id.clone(), ib.clone());
            arcs.push((
                id,
                pair_id(aa.src.as_str(), ab.src.as_str()).into(),
                pair_id(aa.tgt.as_str(), ab.tgt.as_str()).into(),
            ));
        }
    }
    (DirectedGraph::from_parts(nodes, arcs), px, py)
}

/// Undirected product; the involution of a pair is the pair of involutions,
/// so a pair is a degenerate loop exactly when both components are.
pub fn product_undirected(
    x: &UndirectedGraph,
    y: &UndirectedGraph,
) -> (UndirectedGraph, UndirectedMorphism, UndirectedMorphism) {
    let mut nodes = Vec::new();
    let mut halfarcs = Vec::new();
    let mut px = UndirectedMorphism::default();
    let mut py = UndirectedMorphism::default();
    for a in x.nodes() {
        for b in y.nodes() {
            let id: NodeId = pair_id(a.as_str(), b.as_str()).into();
            px.node_map.insert(id.clone(), a.clone());
            py.node_map.insert(id.clone(), b.clone());
            nodes.push(id);
        }
    }
    for (ia, ha) in x.halfarcs() {
        for (ib, hb) in y.halfarcs() {
            let id: HalfArcId = pair_id(ia.as_str(), ib.as_str()).into();
            px.halfarc_map.insert(id.clone(), ia.clone());
            py.halfarc_map.insert(id.clone(), ib.clone());
            halfarcs.push((
                id,
                HalfArc {
                    src: pair_id(ha.src.as_str(), hb.src.as_str()).into(),
                    tgt: pair_id(ha.tgt.as_str(), hb.tgt.as_str()).into(),
                    inv: pair_id(ha.inv.as_str(), hb.inv.as_str()).into(),
                },
            ));
        }
    }
    (UndirectedGraph::from_halfarc_pairs(nodes, halfarcs), px, py)
}

/// The terminal directed graph: one node, one loop.
pub fn terminal_directed() -> DirectedGraph {
    DirectedGraph::from_parts(vec!["*".into()], vec![("a".into(), "*".into(), "*".into())])
}

/// The terminal undirected graph: one node, one degenerate loop (the
/// involution on a singleton is the identity).
pub fn terminal_undirected() -> UndirectedGraph {
    crate::graph::standard::bouquet(1)
}

fn check_directed(
    name: &str,
    f: &DirectedMorphism,
    dom: &DirectedGraph,
    cod: &DirectedGraph,
) -> Result<()> {
    let d = validate_directed_morphism(f, dom, cod);
    if d.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidMorphism(format!("{}: {}", name, d)))
    }
}

fn check_undirected(
    name: &str,
    f: &UndirectedMorphism,
    dom: &UndirectedGraph,
    cod: &UndirectedGraph,
) -> Result<()> {
    let d = validate_undirected_morphism(f, dom, cod);
    if d.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidMorphism(format!("{}: {}", name, d)))
    }
}

/// Pushout of `f: z -> x` along `g: z -> y`: the sum of `x` and `y`
/// quotiented by the equivalence generated by `f(w) ~ g(w)`, with the two
/// legs. Class representatives are the least ids of the sum.
pub fn pushout_directed(
    f: &DirectedMorphism,
    g: &DirectedMorphism,
    z: &DirectedGraph,
    x: &DirectedGraph,
    y: &DirectedGraph,
) -> Result<(DirectedGraph, DirectedMorphism, DirectedMorphism)> {
    check_directed("left map", f, z, x)?;
    check_directed("right map", g, z, y)?;
    let (s, ix, iy) = sum_directed(x, y);
    let mut node_cls = Classes::new(s.nodes().map(|n| n.as_str().to_owned()).collect());
    let mut arc_cls = Classes::new(s.arcs().map(|(a, _)| a.as_str().to_owned()).collect());
    for n in z.nodes() {
        node_cls.union(
            ix.node_map[&f.node_map[n]].as_str(),
            iy.node_map[&g.node_map[n]].as_str(),
        );
    }
    for (a, _) in z.arcs() {
        arc_cls.union(
            ix.arc_map[&f.arc_map[a]].as_str(),
            iy.arc_map[&g.arc_map[a]].as_str(),
        );
    }
    // duplicate reps collapse in from_parts (node set is a BTreeSet)
    let nodes: Vec<NodeId> = s.nodes().map(|n| node_cls.rep(n.as_str()).into()).collect();
    let mut arcs: Vec<(ArcId, NodeId, NodeId)> = Vec::new();
    for (a, arc) in s.arcs() {
        let rep = arc_cls.rep(a.as_str());
        if rep == *a.as_str() {
            arcs.push((
                rep.into(),
                node_cls.rep(arc.src.as_str()).into(),
                node_cls.rep(arc.tgt.as_str()).into(),
            ));
        }
    }
    let result = DirectedGraph::from_parts(nodes, arcs);
    let qx = DirectedMorphism {
        node_map: x
            .nodes()
            .map(|n| (n.clone(), node_cls.rep(ix.node_map[n].as_str()).into()))
            .collect(),
        arc_map: x
            .arcs()
            .map(|(a, _)| (a.clone(), arc_cls.rep(ix.arc_map[a].as_str()).into()))
            .collect(),
    };
    let qy = DirectedMorphism {
        node_map: y
            .nodes()
            .map(|n| (n.clone(), node_cls.rep(iy.node_map[n].as_str()).into()))
            .collect(),
        arc_map: y
            .arcs()
            .map(|(a, _)| (a.clone(), arc_cls.rep(iy.arc_map[a].as_str()).into()))
            .collect(),
    };
    Ok((result, qx, qy))
}

/// Undirected pushout; the involution descends to the quotient because the
/// identifications come from equivariant maps.
pub fn pushout_undirected(
    f: &UndirectedMorphism,
    g: &UndirectedMorphism,
    z: &UndirectedGraph,
    x: &UndirectedGraph,
    y: &UndirectedGraph,
) -> Result<(UndirectedGraph, UndirectedMorphism, UndirectedMorphism)> {
    check_undirected("left map", f, z, x)?;
    check_undirected("right map", g, z, y)?;
    let (s, ix, iy) = sum_undirected(x, y);
    let mut node_cls = Classes::new(s.nodes().map(|n| n.as_str().to_owned()).collect());
    let mut ha_cls = Classes::new(s.halfarcs().map(|(a, _)| a.as_str().to_owned()).collect());
    for n in z.nodes() {
        node_cls.union(
            ix.node_map[&f.node_map[n]].as_str(),
            iy.node_map[&g.node_map[n]].as_str(),
        );
    }
    for (a, _) in z.halfarcs() {
        ha_cls.union(
            ix.halfarc_map[&f.halfarc_map[a]].as_str(),
            iy.halfarc_map[&g.halfarc_map[a]].as_str(),
        );
    }
    // duplicate reps collapse in from_parts (node set is a BTreeSet)
    let nodes: Vec<NodeId> = s.nodes().map(|n| node_cls.rep(n.as_str()).into()).collect();
    let mut halfarcs: Vec<(HalfArcId, HalfArc)> = Vec::new();
    for (a, h) in s.halfarcs() {
        let rep = ha_cls.rep(a.as_str());
        if rep == *a.as_str() {
            halfarcs.push((
                rep.into(),
                HalfArc {
                    src: node_cls.rep(h.src.as_str()).into(),
                    tgt: node_cls.rep(h.tgt.as_str()).into(),
                    inv: ha_cls.rep(h.inv.as_str()).into(),
                },
            ));
        }
    }
    let result = UndirectedGraph::from_halfarc_pairs(nodes, halfarcs);
    let qx = UndirectedMorphism {
        node_map: x
            .nodes()
            .map(|n| (n.clone(), node_cls.rep(ix.node_map[n].as_str()).into()))
            .collect(),
        halfarc_map: x
            .halfarcs()
            .map(|(a, _)| (a.clone(), ha_cls.rep(ix.halfarc_map[a].as_str()).into()))
            .collect(),
    };
    let qy = UndirectedMorphism {
        node_map: y
            .nodes()
            .map(|n| (n.clone(), node_cls.rep(iy.node_map[n].as_str()).into()))
            .collect(),
        halfarc_map: y
            .halfarcs()
            .map(|(a, _)| (a.clone(), ha_cls.rep(iy.halfarc_map[a].as_str()).into()))
            .collect(),
    };
    Ok((result, qx, qy))
}

/// Pullback of `f: x -> z` and `g: y -> z`: the subobject of the product
/// where both components agree in `z`, with the projection legs.
pub fn pullback_directed(
    f: &DirectedMorphism,
    g: &DirectedMorphism,
    x: &DirectedGraph,
    y: &DirectedGraph,
    z: &DirectedGraph,
) -> Result<(DirectedGraph, DirectedMorphism, DirectedMorphism)> {
    check_directed("left map", f, x, z)?;
    check_directed("right map", g, y, z)?;
    let mut nodes = Vec::new();
    let mut arcs = Vec::new();
    let mut px = DirectedMorphism::default();
    let mut py = DirectedMorphism::default();
    for a in x.nodes() {
        for b in y.nodes() {
            if f.node_map[a] != g.node_map[b] {
                continue;
            }
            let id: NodeId = pair_id(a.as_str(), b.as_str()).into();
            px.node_map.insert(id.clone(), a.clone());
            py.node_map.insert(id.clone(), b.clone());
            nodes.push(id);
        }
    }
    for (ia, aa) in x.arcs() {
        for (ib, ab) in y.arcs() {
            if f.arc_map[ia] != g.arc_map[ib] {
                continue;
            }
            let id: ArcId = pair_id(ia.as_str(), ib.as_str()).into();
            px.arc_map.insert(id.clone(), ia.clone());
            py.arc_map.insert(id.clone(), ib.clone());
            arcs.push((
                id,
                pair_id(aa.src.as_str(), ab.src.as_str()).into(),
                pair_id(aa.tgt.as_str(), ab.tgt.as_str()).into(),
            ));
        }
    }
    Ok((DirectedGraph::from_parts(nodes, arcs), px, py))
}

pub fn pullback_undirected(
    f: &UndirectedMorphism,
    g: &UndirectedMorphism,
    x: &UndirectedGraph,
    y: &UndirectedGraph,
    z: &UndirectedGraph,
) -> Result<(UndirectedGraph, UndirectedMorphism, UndirectedMorphism)> {
    check_undirected("left map", f, x, z)?;
    check_undirected("right map", g, y, z)?;
    let mut nodes = Vec::new();
    let mut halfarcs = Vec::new();
    let mut px = UndirectedMorphism::default();
    let mut py = UndirectedMorphism::default();
    for a in x.nodes() {
        for b in y.nodes() {
            if f.node_map[a] != g.node_map[b] {
                continue;
            }
            let id: NodeId = pair_id(a.as_str(), b.as_str()).into();
            px.node_map.insert(id.clone(), a.clone());
            py.node_map.insert(id.clone(), b.clone());
            nodes.push(id);
        }
    }
    for (ia, ha) in x.halfarcs() {
        for (ib, hb) in y.halfarcs() {
            if f.halfarc_map[ia] != g.halfarc_map[ib] {
                continue;
            }
            let id: HalfArcId = pair_id(ia.as_str(), ib.as_str()).into();
            px.halfarc_map.insert(id.clone(), ia.clone());
            py.halfarc_map.insert(id.clone(), ib.clone());
            halfarcs.push((
                id,
                HalfArc {
                    src: pair_id(ha.src.as_str(), hb.src.as_str()).into(),
                    tgt: pair_id(ha.tgt.as_str(), hb.tgt.as_str()).into(),
                    inv: pair_id(ha.inv.as_str(), hb.inv.as_str()).into(),
                },
            ));
        }
    }
    Ok((UndirectedGraph::from_halfarc_pairs(nodes, halfarcs), px, py))
}
