//! Graph isomorphism by backtracking over node bijections with degree and
//! loop-count pruning. Multigraph arc matching is resolved afterwards by
//! zipping parallel arcs in sorted id order, which is enough because any
//! bijection of parallel arcs works once the node bijection fits.

use std::collections::{BTreeMap, BTreeSet};

use super::{
    ArcId, DirectedGraph, DirectedMorphism, HalfArcId, NodeId, UndirectedGraph,
    UndirectedMorphism,
};

type DirectedSignature = (usize, usize, usize); // out, in, loops

fn directed_signatures(g: &DirectedGraph) -> BTreeMap<NodeId, DirectedSignature> {
    let mut sig: BTreeMap<NodeId, DirectedSignature> =
        g.nodes().map(|n| (n.clone(), (0, 0, 0))).collect();
    for (_, arc) in g.arcs() {
        if arc.src == arc.tgt {
            sig.get_mut(&arc.src).unwrap().2 += 1;
        }
        sig.get_mut(&arc.src).unwrap().0 += 1;
        sig.get_mut(&arc.tgt).unwrap().1 += 1;
    }
    sig
}

fn pair_counts_directed(g: &DirectedGraph) -> BTreeMap<(NodeId, NodeId), Vec<ArcId>> {
    g.arc_index()
}

/// Searches for an isomorphism and returns a witness morphism, or `None`.
pub fn is_isomorphic_directed(x: &DirectedGraph, y: &DirectedGraph) -> Option<DirectedMorphism> {
    if x.node_count() != y.node_count() || x.arc_count() != y.arc_count() {
        return None;
    }
    let sx = directed_signatures(x);
    let sy = directed_signatures(y);
    let mut profile_x: Vec<_> = sx.values().collect();
    let mut profile_y: Vec<_> = sy.values().collect();
    profile_x.sort();
    profile_y.sort();
    if profile_x != profile_y {
        return None;
    }
    let cx = pair_counts_directed(x);
    let cy = pair_counts_directed(y);
    let xs: Vec<NodeId> = x.nodes().cloned().collect();
    let ys: Vec<NodeId> = y.nodes().cloned().collect();

    fn arcs_between(
        idx: &BTreeMap<(NodeId, NodeId), Vec<ArcId>>,
        a: &NodeId,
        b: &NodeId,
    ) -> usize {
        idx.get(&(a.clone(), b.clone())).map_or(0, |v| v.len())
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        pos: usize,
        xs: &[NodeId],
        ys: &[NodeId],
        sx: &BTreeMap<NodeId, DirectedSignature>,
        sy: &BTreeMap<NodeId, DirectedSignature>,
        cx: &BTreeMap<(NodeId, NodeId), Vec<ArcId>>,
        cy: &BTreeMap<(NodeId, NodeId), Vec<ArcId>>,
        assign: &mut BTreeMap<NodeId, NodeId>,
        used: &mut BTreeSet<NodeId>,
    ) -> bool {
        if pos == xs.len() {
            return true;
        }
        let v = &xs[pos];
        for w in ys {
            if used.contains(w) || sx[v] != sy[w] {
                continue;
            }
            let ok = assign.iter().all(|(u, fu)| {
                arcs_between(cx, v, u) == arcs_between(cy, w, fu)
                    && arcs_between(cx, u, v) == arcs_between(cy, fu, w)
            });
            if !ok {
                continue;
            }
            assign.insert(v.clone(), w.clone());
            used.insert(w.clone());
            if search(pos + 1, xs, ys, sx, sy, cx, cy, assign, used) {
                return true;
            }
            assign.remove(v);
            used.remove(w);
        }
        false
    }

    let mut assign = BTreeMap::new();
    let mut used = BTreeSet::new();
    if !search(0, &xs, &ys, &sx, &sy, &cx, &cy, &mut assign, &mut used) {
        return None;
    }

    // The node bijection matches all pairwise arc counts (loops included via
    // the (v, v) entries); zip parallel arcs in sorted order.
    let mut arc_map = BTreeMap::new();
    for ((src, tgt), ids) in &cx {
        let ids_y = &cy[&(assign[src].clone(), assign[tgt].clone())];
        for (a, b) in ids.iter().zip(ids_y) {
            arc_map.insert(a.clone(), b.clone());
        }
    }
    Some(DirectedMorphism {
        node_map: assign,
        arc_map,
    })
}

type UndirectedSignature = (usize, usize, usize); // star size, degenerate loops, other loops

fn undirected_signatures(g: &UndirectedGraph) -> BTreeMap<NodeId, UndirectedSignature> {
    let mut sig: BTreeMap<NodeId, UndirectedSignature> =
        g.nodes().map(|n| (n.clone(), (0, 0, 0))).collect();
    for n in g.nodes() {
        let star = g.star(n).expect("node exists");
        let mut degen = 0;
        let mut loops = 0;
        for orbit in &star.arcs {
            let h = g.halfarc(orbit.rep()).expect("half-arc exists");
            if h.src == h.tgt {
                if orbit.is_degenerate() {
                    degen += 1;
                } else {
                    loops += 1;
                }
            }
        }
        *sig.get_mut(n).unwrap() = (star.size(), degen, loops);
    }
    sig
}

/// Orbits between an unordered node pair (loops keyed by (n, n)), sorted.
fn orbit_groups(g: &UndirectedGraph) -> BTreeMap<(NodeId, NodeId), Vec<super::ArcOrbit>> {
    let mut groups: BTreeMap<(NodeId, NodeId), Vec<super::ArcOrbit>> = BTreeMap::new();
    for orbit in g.arc_orbits() {
        let h = g.halfarc(orbit.rep()).expect("half-arc exists");
        let key = if h.src <= h.tgt {
            (h.src.clone(), h.tgt.clone())
        } else {
            (h.tgt.clone(), h.src.clone())
        };
        groups.entry(key).or_default().push(orbit);
    }
    groups
}

pub fn is_isomorphic_undirected(
    x: &UndirectedGraph,
    y: &UndirectedGraph,
) -> Option<UndirectedMorphism> {
    if x.node_count() != y.node_count()
        || x.halfarc_count() != y.halfarc_count()
        || x.arc_count() != y.arc_count()
    {
        return None;
    }
    let sx = undirected_signatures(x);
    let sy = undirected_signatures(y);
    let mut profile_x: Vec<_> = sx.values().collect();
    let mut profile_y: Vec<_> = sy.values().collect();
    profile_x.sort();
    profile_y.sort();
    if profile_x != profile_y {
        return None;
    }
    let gx = orbit_groups(x);
    let gy = orbit_groups(y);
    let xs: Vec<NodeId> = x.nodes().cloned().collect();
    let ys: Vec<NodeId> = y.nodes().cloned().collect();

    fn orbits_between(
        groups: &BTreeMap<(NodeId, NodeId), Vec<super::ArcOrbit>>,
        a: &NodeId,
        b: &NodeId,
    ) -> usize {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        groups.get(&key).map_or(0, |v| v.len())
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        pos: usize,
        xs: &[NodeId],
        ys: &[NodeId],
        sx: &BTreeMap<NodeId, UndirectedSignature>,
        sy: &BTreeMap<NodeId, UndirectedSignature>,
        gx: &BTreeMap<(NodeId, NodeId), Vec<super::ArcOrbit>>,
        gy: &BTreeMap<(NodeId, NodeId), Vec<super::ArcOrbit>>,
        assign: &mut BTreeMap<NodeId, NodeId>,
        used: &mut BTreeSet<NodeId>,
    ) -> bool {
        if pos == xs.len() {
            return true;
        }
        let v = &xs[pos];
        for w in ys {
            if used.contains(w) || sx[v] != sy[w] {
                continue;
            }
            let ok = assign
                .iter()
                .all(|(u, fu)| orbits_between(gx, v, u) == orbits_between(gy, w, fu));
            if !ok {
                continue;
            }
            assign.insert(v.clone(), w.clone());
            used.insert(w.clone());
            if search(pos + 1, xs, ys, sx, sy, gx, gy, assign, used) {
                return true;
            }
            assign.remove(v);
            used.remove(w);
        }
        false
    }

    let mut assign = BTreeMap::new();
    let mut used = BTreeSet::new();
    if !search(0, &xs, &ys, &sx, &sy, &gx, &gy, &mut assign, &mut used) {
        return None;
    }

    let mut halfarc_map: BTreeMap<HalfArcId, HalfArcId> = BTreeMap::new();
    for ((a, b), orbits) in &gx {
        let key = {
            let (fa, fb) = (assign[a].clone(), assign[b].clone());
            if fa <= fb {
                (fa, fb)
            } else {
                (fb, fa)
            }
        };
        let orbits_y = &gy[&key];
        // Degenerate loops can only match degenerate loops; separate them so
        // the zip respects the split (counts match because signatures do).
        let (degen_x, plain_x): (Vec<_>, Vec<_>) =
            orbits.iter().partition(|o| o.is_degenerate());
        let (degen_y, plain_y): (Vec<_>, Vec<_>) =
            orbits_y.iter().partition(|o| o.is_degenerate());
        for (ox, oy) in degen_x.iter().zip(&degen_y) {
            halfarc_map.insert(ox.rep().clone(), oy.rep().clone());
        }
        for (ox, oy) in plain_x.iter().zip(&plain_y) {
            let hx = x.halfarc(ox.rep()).expect("half-arc exists");
            // Orient the target half-arc to start at the image of the source.
            let want_src = &assign[&hx.src];
            let y0 = y.halfarc(oy.rep()).expect("half-arc exists");
            let (fwd, bwd) = if y0.src == *want_src {
                (oy.rep().clone(), y0.inv.clone())
            } else {
                (y0.inv.clone(), oy.rep().clone())
            };
            halfarc_map.insert(ox.rep().clone(), fwd);
            halfarc_map.insert(x.inv(ox.rep()).expect("valid").clone(), bwd);
        }
    }
    Some(UndirectedMorphism {
        node_map: assign,
        halfarc_map,
    })
}
