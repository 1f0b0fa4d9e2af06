//! Coverings of undirected graphs: verification via star bijectivity,
//! covering-preserving pushouts, common covers via fibered products,
//! cycle-and-forest extensions, edge-coloring search, and the bounded
//! weak-equivalence check between coverings of a common base.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cat::{pullback_undirected, pushout_undirected};
use crate::error::{Error, Result};
use crate::graph::json::GraphJson;
use crate::graph::morphism::{compose_undirected, validate_undirected_morphism};
use crate::graph::undirected::{ArcOrbit, HalfArc};
use crate::graph::{standard, Graph, HalfArcId, NodeId, UndirectedGraph, UndirectedMorphism};
use crate::zeta::{self, CycleMapCheck};

/// A morphism of undirected graphs packaged with its endpoints, checked for
/// structural validity at construction. Whether it actually is a covering
/// is a separate question answered by [`Covering::check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    pub total: UndirectedGraph,
    pub base: UndirectedGraph,
    pub map: UndirectedMorphism,
}

/// Star-map diagnostics. Empty `failures` means the map is a covering.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoveringCheck {
    pub failures: Vec<String>,
}

impl CoveringCheck {
    pub fn is_covering(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Covering {
    /// Packages the data after validating both graphs and the morphism.
    pub fn new(
        total: UndirectedGraph,
        base: UndirectedGraph,
        map: UndirectedMorphism,
    ) -> Result<Self> {
        let dt = total.validate();
        if !dt.is_valid() {
            return Err(Error::InvalidGraph(format!("total: {}", dt)));
        }
        let db = base.validate();
        if !db.is_valid() {
            return Err(Error::InvalidGraph(format!("base: {}", db)));
        }
        let dm = validate_undirected_morphism(&map, &total, &base);
        if !dm.is_valid() {
            return Err(Error::InvalidMorphism(dm.to_string()));
        }
        Ok(Covering { total, base, map })
    }

    /// Checks the covering condition: at every node `y` of the total graph
    /// the induced map on stars must biject onto the star of the image.
    pub fn check(&self) -> CoveringCheck {
        let mut failures = Vec::new();
        for y in self.total.nodes() {
            let image = &self.map.node_map[y];
            let up = self.total.star(y).expect("validated");
            let down = self.base.star(image).expect("validated");
            let mut seen: BTreeMap<ArcOrbit, ArcOrbit> = BTreeMap::new();
            for orbit in &up.arcs {
                let img_half = &self.map.halfarc_map[orbit.rep()];
                let img_orbit = self.base.orbit_of(img_half).expect("validated");
                if let Some(previous) = seen.iter().find(|(_, v)| **v == img_orbit) {
                    failures.push(format!(
                        "star at `{}` is not injective: `{}` and `{}` both land on `{}`",
                        y,
                        previous.0.rep(),
                        orbit.rep(),
                        img_orbit.rep()
                    ));
                }
                seen.insert(orbit.clone(), img_orbit);
            }
            for orbit in &down.arcs {
                if !seen.values().any(|v| v == orbit) {
                    failures.push(format!(
                        "star at `{}` is not surjective: nothing lands on `{}` at `{}`",
                        y,
                        orbit.rep(),
                        image
                    ));
                }
            }
        }
        CoveringCheck { failures }
    }

    pub fn is_covering(&self) -> bool {
        self.check().is_covering()
    }

    /// Fiber size over the base, defined when the base is connected,
    /// nonempty and the map is a covering; fibers then all agree.
    pub fn degree(&self) -> Option<usize> {
        if self.base.node_count() == 0 || !self.base.is_connected() || !self.is_covering() {
            return None;
        }
        let mut sizes = self.base.nodes().map(|b| {
            self.total
                .nodes()
                .filter(|y| self.map.node_map[*y] == *b)
                .count()
        });
        let first = sizes.next().expect("nonempty base");
        debug_assert!(sizes.all(|s| s == first), "fibers differ over connected base");
        Some(first)
    }
}

#[derive(Serialize, Deserialize)]
struct MorphismJson {
    nodes: BTreeMap<String, String>,
    halfarcs: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct CoveringJson {
    map: MorphismJson,
    base: GraphJson,
    total: GraphJson,
}

fn expect_undirected(g: Graph, which: &str) -> Result<UndirectedGraph> {
    match g {
        Graph::Undirected(u) => Ok(u),
        Graph::Directed(_) => Err(Error::FlavorMismatch(format!(
            "{} graph must be undirected",
            which
        ))),
    }
}

/// Parses `{"map":{"nodes":{..},"halfarcs":{..}},"base":..,"total":..}`.
pub fn covering_from_str(s: &str) -> Result<Covering> {
    let j: CoveringJson = serde_json::from_str(s)?;
    let base = expect_undirected(j.base.into_graph()?, "base")?;
    let total = expect_undirected(j.total.into_graph()?, "total")?;
    let map = UndirectedMorphism {
        node_map: j
            .map
            .nodes
            .into_iter()
            .map(|(k, v)| (k.into(), v.into()))
            .collect(),
        halfarc_map: j
            .map
            .halfarcs
            .into_iter()
            .map(|(k, v)| (k.into(), v.into()))
            .collect(),
    };
    Covering::new(total, base, map)
}

/// Canonical JSON for a covering; inverse of [`covering_from_str`].
pub fn covering_to_string(c: &Covering) -> String {
    let j = CoveringJson {
        map: MorphismJson {
            nodes: c
                .map
                .node_map
                .iter()
                .map(|(k, v)| (k.as_str().to_owned(), v.as_str().to_owned()))
                .collect(),
            halfarcs: c
                .map
                .halfarc_map
                .iter()
                .map(|(k, v)| (k.as_str().to_owned(), v.as_str().to_owned()))
                .collect(),
        },
        base: GraphJson::from_graph(&Graph::Undirected(c.base.clone())),
        total: GraphJson::from_graph(&Graph::Undirected(c.total.clone())),
    };
    serde_json::to_string(&j).expect("serializable")
}

/// Pushout in the category of coverings of a fixed base: `f: y -> z` and
/// `g: y -> z2` are morphisms over the base between verified coverings.
/// Returns the glued covering and the two quotient legs. The induced map
/// of the quotient is checked to be a covering again.
pub fn covering_pushout(
    f: &UndirectedMorphism,
    g: &UndirectedMorphism,
    y: &Covering,
    z: &Covering,
    z2: &Covering,
) -> Result<(Covering, UndirectedMorphism, UndirectedMorphism)> {
    if y.base != z.base || y.base != z2.base {
        return Err(Error::InvalidParameter(
            "all three coverings must share one base".into(),
        ));
    }
    for (name, c) in [("y", y), ("z", z), ("z2", z2)] {
        let check = c.check();
        if !check.is_covering() {
            return Err(Error::NotACovering(format!(
                "{}: {}",
                name,
                check.failures.join("; ")
            )));
        }
    }
    for (name, map, cod) in [("left map", f, z), ("right map", g, z2)] {
        let d = validate_undirected_morphism(map, &y.total, &cod.total);
        if !d.is_valid() {
            return Err(Error::InvalidMorphism(format!("{}: {}", name, d)));
        }
        if compose_undirected(map, &cod.map)? != y.map {
            return Err(Error::InvalidParameter(format!(
                "{} does not commute over the base",
                name
            )));
        }
    }
    let (l, qz, qz2) = pushout_undirected(f, g, &y.total, &z.total, &z2.total)?;
    // the base maps agree on identified elements, so they descend
    let mut node_map: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    let mut halfarc_map: BTreeMap<HalfArcId, HalfArcId> = BTreeMap::new();
    for (side, leg, c) in [(0, &qz, z), (1, &qz2, z2)] {
        for (n, image) in &c.map.node_map {
            let down = node_map
                .entry(leg.node_map[n].clone())
                .or_insert_with(|| image.clone());
            if down != image {
                return Err(Error::Inconsistency(format!(
                    "side {}: node `{}` descends ambiguously",
                    side, n
                )));
            }
        }
        for (h, image) in &c.map.halfarc_map {
            let down = halfarc_map
                .entry(leg.halfarc_map[h].clone())
                .or_insert_with(|| image.clone());
            if down != image {
                return Err(Error::Inconsistency(format!(
                    "side {}: half-arc `{}` descends ambiguously",
                    side, h
                )));
            }
        }
    }
    let induced = Covering::new(
        l,
        y.base.clone(),
        UndirectedMorphism {
            node_map,
            halfarc_map,
        },
    )?;
    let check = induced.check();
    if !check.is_covering() {
        return Err(Error::Inconsistency(format!(
            "glued map is not a covering: {}",
            check.failures.join("; ")
        )));
    }
    Ok((induced, qz, qz2))
}

/// Component of the fibered product of two coverings of one base that
/// contains the seed pair, with its two projection coverings. This is how
/// a common cover realizing matched cycle families is produced.
pub fn common_cover(
    left: &Covering,
    right: &Covering,
    seed_left: &NodeId,
    seed_right: &NodeId,
) -> Result<(Covering, Covering)> {
    if left.base != right.base {
        return Err(Error::InvalidParameter(
            "coverings must share one base".into(),
        ));
    }
    for (name, c) in [("left", left), ("right", right)] {
        if !c.is_covering() {
            return Err(Error::NotACovering(name.into()));
        }
    }
    if left.map.node_map.get(seed_left) != right.map.node_map.get(seed_right) {
        return Err(Error::InvalidParameter(
            "seed nodes sit over different base nodes".into(),
        ));
    }
    let (p, to_left, to_right) = pullback_undirected(
        &left.map,
        &right.map,
        &left.total,
        &right.total,
        &left.base,
    )?;
    let seed: NodeId = format!("({},{})", seed_left, seed_right).into();
    let component: BTreeSet<NodeId> = p
        .components()
        .into_iter()
        .find(|c| c.contains(&seed))
        .ok_or_else(|| Error::UnknownNode(seed.as_str().to_owned()))?
        .into_iter()
        .collect();
    let l = p.induced_subgraph(&component);
    let restrict = |m: &UndirectedMorphism| UndirectedMorphism {
        node_map: m
            .node_map
            .iter()
            .filter(|(k, _)| component.contains(*k))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect(),
        halfarc_map: m
            .halfarc_map
            .iter()
            .filter(|(k, _)| l.halfarc(k).is_some())
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect(),
    };
    let (rl, rr) = (restrict(&to_left), restrict(&to_right));
    Ok((
        Covering::new(l.clone(), left.total.clone(), rl)?,
        Covering::new(l, right.total.clone(), rr)?,
    ))
}

/// A cycle with truncated trees attached, mapping into the total graph of
/// a covering; the composite to the base is carried along.
#[derive(Debug, Clone)]
pub struct RXp {
    pub graph: UndirectedGraph,
    pub to_total: UndirectedMorphism,
    pub to_base: UndirectedMorphism,
    pub cycle_len: usize,
}

/// Extends a non-backtracking `p`-cycle in the loopless total graph of a
/// covering to a cycle-with-forest whose structure map restricts to the
/// cycle. Trees unfold the stars of the total graph to the requested depth;
/// at depth 0 the cycle is returned bare.
pub fn extend_cycle_to_rxp(
    cov: &Covering,
    h: &UndirectedMorphism,
    p: usize,
    depth: usize,
) -> Result<RXp> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "cycle length must be at least 1".into(),
        ));
    }
    let y = &cov.total;
    if y.has_loops() {
        return Err(Error::HasLoops(
            "forest extension needs a loopless total graph".into(),
        ));
    }
    let cycle = standard::undirected_cycle(p);
    let d = validate_undirected_morphism(h, &cycle, y);
    if !d.is_valid() {
        return Err(Error::InvalidMorphism(d.to_string()));
    }
    if zeta::is_backtracking(h, p)? {
        return Err(Error::InvalidParameter("the cycle backtracks".into()));
    }
    let mut nodes: Vec<NodeId> = cycle.nodes().cloned().collect();
    let mut halfarcs: Vec<(HalfArcId, HalfArc)> = cycle
        .halfarcs()
        .map(|(id, ha)| (id.clone(), ha.clone()))
        .collect();
    let mut to_total = h.clone();
    let mut counter = 0usize;
    // (node in the new graph, its image in y, orbit not to re-enter, level)
    let mut frontier: VecDeque<(NodeId, NodeId, Vec<ArcOrbit>, usize)> = VecDeque::new();
    for k in 0..p {
        let node: NodeId = format!("[{}]", k).into();
        let image = h.node_map[&node].clone();
        let outgoing = y.orbit_of(&h.halfarc_map[&format!("[{}]+", k).into()])?;
        let incoming =
            y.orbit_of(&h.halfarc_map[&format!("[{}]+", (k + p - 1) % p).into()])?;
        frontier.push_back((node, image, vec![outgoing, incoming], 0));
    }
    while let Some((node, image, used, level)) = frontier.pop_front() {
        if level >= depth {
            continue;
        }
        for orbit in &y.star(&image)?.arcs {
            if used.contains(orbit) {
                continue;
            }
            let rep = y.halfarc(orbit.rep()).expect("validated");
            // orient the half-arc away from the current image node
            let (out_img, out_half) = if rep.src == image {
                (orbit.rep().clone(), rep.clone())
            } else {
                (rep.inv.clone(), y.halfarc(&rep.inv).expect("validated").clone())
            };
            let child: NodeId = format!("t{}", counter).into();
            let out_id: HalfArcId = format!("t{}.out", counter).into();
            let in_id: HalfArcId = format!("t{}.in", counter).into();
            counter += 1;
            nodes.push(child.clone());
            halfarcs.push((
                out_id.clone(),
                HalfArc {
                    src: node.clone(),
                    tgt: child.clone(),
                    inv: in_id.clone(),
                },
            ));
            halfarcs.push((
                in_id.clone(),
                HalfArc {
                    src: child.clone(),
                    tgt: node.clone(),
                    inv: out_id.clone(),
                },
            ));
            to_total.node_map.insert(child.clone(), out_half.tgt.clone());
            to_total
                .halfarc_map
                .insert(out_id, out_img.clone());
            to_total
                .halfarc_map
                .insert(in_id, y.inv(&out_img)?.clone());
            frontier.push_back((child, out_half.tgt, vec![orbit.clone()], level + 1));
        }
    }
    let graph = UndirectedGraph::from_halfarc_pairs(nodes, halfarcs);
    debug_assert!(graph.validate().is_valid());
    debug_assert!(validate_undirected_morphism(&to_total, &graph, y).is_valid());
    let to_base = compose_undirected(&to_total, &cov.map)?;
    Ok(RXp {
        graph,
        to_total,
        to_base,
        cycle_len: p,
    })
}

/// Searches for a proper `n`-edge-coloring of a loopless graph, returned as
/// a covering onto the bouquet `B_n`; `None` when the graph is not
/// `n`-regular or no coloring exists. Deterministic lexicographic
/// backtracking over arc orbits.
pub fn find_n_coloring(x: &UndirectedGraph, n: usize) -> Result<Option<Covering>> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "need at least one color".into(),
        ));
    }
    if x.has_loops() {
        return Err(Error::HasLoops("colorings need a loopless graph".into()));
    }
    let d = x.validate();
    if !d.is_valid() {
        return Err(Error::InvalidGraph(d.to_string()));
    }
    if x.nodes().any(|v| x.degree(v) != n) {
        return Ok(None);
    }
    let orbits = x.arc_orbits();
    let mut used: BTreeMap<NodeId, BTreeSet<usize>> = BTreeMap::new();
    let mut colors: Vec<usize> = Vec::with_capacity(orbits.len());

    fn assign(
        x: &UndirectedGraph,
        orbits: &[ArcOrbit],
        i: usize,
        n: usize,
        used: &mut BTreeMap<NodeId, BTreeSet<usize>>,
        colors: &mut Vec<usize>,
    ) -> bool {
        if i == orbits.len() {
            return true;
        }
        let rep = x.halfarc(orbits[i].rep()).expect("validated");
        let (a, b) = (rep.src.clone(), rep.tgt.clone());
        for c in 0..n {
            let clash = used.get(&a).is_some_and(|s| s.contains(&c))
                || used.get(&b).is_some_and(|s| s.contains(&c));
            if clash {
                continue;
            }
            used.entry(a.clone()).or_default().insert(c);
            used.entry(b.clone()).or_default().insert(c);
            colors.push(c);
            if assign(x, orbits, i + 1, n, used, colors) {
                return true;
            }
            colors.pop();
            used.get_mut(&a).expect("inserted").remove(&c);
            used.get_mut(&b).expect("inserted").remove(&c);
        }
        false
    }

    if !assign(x, &orbits, 0, n, &mut used, &mut colors) {
        return Ok(None);
    }
    let base = standard::bouquet(n);
    let mut map = UndirectedMorphism {
        node_map: x.nodes().map(|v| (v.clone(), "*".into())).collect(),
        halfarc_map: BTreeMap::new(),
    };
    for (orbit, c) in orbits.iter().zip(&colors) {
        let loop_id: HalfArcId = format!("a{}", c).into();
        let rep = x.halfarc(orbit.rep()).expect("validated");
        map.halfarc_map.insert(orbit.rep().clone(), loop_id.clone());
        map.halfarc_map.insert(rep.inv.clone(), loop_id);
    }
    let covering = Covering::new(x.clone(), base, map)?;
    debug_assert!(covering.is_covering());
    Ok(Some(covering))
}

/// Bounded weak-equivalence report for a morphism of coverings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringWeqReport {
    /// the finite bound this proxy was checked to
    pub bound: usize,
    pub failing_p: Option<usize>,
    pub checks: Vec<CycleMapCheck>,
}

impl CoveringWeqReport {
    pub fn bounded_bijective(&self) -> bool {
        self.failing_p.is_none()
    }
}

/// Checks whether `h`, a morphism over the common base between two loopless
/// coverings, induces bijections on non-backtracking cycles for every
/// length up to `bound`. A finite proxy, not a complete decision.
pub fn covering_weak_equiv(
    h: &UndirectedMorphism,
    from: &Covering,
    to: &Covering,
    bound: usize,
) -> Result<CoveringWeqReport> {
    if from.base != to.base {
        return Err(Error::InvalidParameter(
            "coverings must share one base".into(),
        ));
    }
    if from.total.has_loops() || to.total.has_loops() {
        return Err(Error::HasLoops(
            "non-backtracking comparison needs loopless totals".into(),
        ));
    }
    for (name, c) in [("source", from), ("target", to)] {
        if !c.is_covering() {
            return Err(Error::NotACovering(name.into()));
        }
    }
    let d = validate_undirected_morphism(h, &from.total, &to.total);
    if !d.is_valid() {
        return Err(Error::InvalidMorphism(d.to_string()));
    }
    if compose_undirected(h, &to.map)? != from.map {
        return Err(Error::InvalidParameter(
            "the morphism does not commute over the base".into(),
        ));
    }
    let (failing_p, checks) =
        zeta::least_failing_p_undirected(h, &from.total, &to.total, bound, true)?;
    Ok(CoveringWeqReport {
        bound,
        failing_p,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::is_isomorphic_undirected;
    use crate::graph::morphism::identity_undirected;

    /// `[n] -> [n mod m]`, the standard quotient of cycle coverings.
    pub fn cycle_quotient(total_len: usize, base_len: usize) -> UndirectedMorphism {
        let mut f = UndirectedMorphism::default();
        for n in 0..total_len {
            f.node_map.insert(
                format!("[{}]", n).into(),
                format!("[{}]", n % base_len).into(),
            );
            for sign in ["+", "-"] {
                f.halfarc_map.insert(
                    format!("[{}]{}", n, sign).into(),
                    format!("[{}]{}", n % base_len, sign).into(),
                );
            }
        }
        f
    }

    fn cycle_covering(total_len: usize, base_len: usize) -> Covering {
        Covering::new(
            standard::undirected_cycle(total_len),
            standard::undirected_cycle(base_len),
            cycle_quotient(total_len, base_len),
        )
        .unwrap()
    }

    /// Alternating 2-coloring of an even cycle as a covering of B_2.
    fn even_cycle_over_b2(len: usize, shift: usize) -> Covering {
        let x = standard::undirected_cycle(len);
        let mut map = UndirectedMorphism {
            node_map: x.nodes().map(|v| (v.clone(), "*".into())).collect(),
            halfarc_map: BTreeMap::new(),
        };
        for n in 0..len {
            let color: HalfArcId = format!("a{}", (n + shift) % 2).into();
            map.halfarc_map
                .insert(format!("[{}]+", n).into(), color.clone());
            map.halfarc_map.insert(format!("[{}]-", n).into(), color);
        }
        Covering::new(x, standard::bouquet(2), map).unwrap()
    }

    #[test]
    fn cycle_quotients_are_coverings() {
        assert!(cycle_covering(4, 2).is_covering());
        assert_eq!(cycle_covering(4, 2).degree(), Some(2));
        assert!(cycle_covering(6, 3).is_covering());
    }

    #[test]
    fn folding_is_not_a_covering() {
        let folding = UndirectedMorphism {
            node_map: [
                ("v1".into(), "u1".into()),
                ("v2".into(), "u2".into()),
                ("v3".into(), "u2".into()),
            ]
            .into(),
            halfarc_map: [
                ("b1".into(), "a1".into()),
                ("b2".into(), "a2".into()),
                ("c1".into(), "a1".into()),
                ("c2".into(), "a2".into()),
            ]
            .into(),
        };
        let c = Covering::new(standard::cherry(), standard::undirected_arc(), folding).unwrap();
        let check = c.check();
        assert!(!check.is_covering());
        // v1 sends both of its arcs onto the single base arc
        assert!(check.failures.iter().any(|f| f.contains("v1")));
    }

    #[test]
    fn empty_total_is_a_covering() {
        let c = Covering::new(
            UndirectedGraph::empty(),
            standard::undirected_cycle(3),
            UndirectedMorphism::default(),
        )
        .unwrap();
        assert!(c.is_covering());
        assert_eq!(c.degree(), Some(0));
    }

    #[test]
    fn covering_json_round_trip() {
        let c = cycle_covering(4, 2);
        let s = covering_to_string(&c);
        let back = covering_from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(covering_from_str("{\"map\":{}}").is_err());
    }

    #[test]
    fn pushout_of_identity_coverings() {
        let c = cycle_covering(4, 2);
        let id = identity_undirected(&c.total);
        let (glued, _, _) = covering_pushout(&id, &id, &c, &c, &c).unwrap();
        assert!(glued.is_covering());
        assert!(is_isomorphic_undirected(&glued.total, &c.total).is_some());
    }

    #[test]
    fn pushout_glues_two_quotients_of_the_octagon() {
        // c^8 covers c^4 two ways; gluing the quotients over c^2 gives a
        // degree-2 covering again
        let y = cycle_covering(8, 2);
        let z = cycle_covering(4, 2);
        let f = cycle_quotient(8, 4);
        let mut g = UndirectedMorphism::default();
        for n in 0..8 {
            g.node_map.insert(
                format!("[{}]", n).into(),
                format!("[{}]", (n + 2) % 4).into(),
            );
            for sign in ["+", "-"] {
                g.halfarc_map.insert(
                    format!("[{}]{}", n, sign).into(),
                    format!("[{}]{}", (n + 2) % 4, sign).into(),
                );
            }
        }
        let (glued, _, _) = covering_pushout(&f, &g, &y, &z, &z).unwrap();
        assert!(glued.is_covering());
        assert_eq!(glued.degree(), Some(2));
        assert!(is_isomorphic_undirected(&glued.total, &standard::undirected_cycle(4)).is_some());
    }

    #[test]
    fn common_cover_of_shifted_colorings() {
        let left = even_cycle_over_b2(8, 0);
        let right = even_cycle_over_b2(8, 1);
        let (to_left, to_right) =
            common_cover(&left, &right, &"[0]".into(), &"[1]".into()).unwrap();
        assert!(to_left.is_covering());
        assert!(to_right.is_covering());
        assert_eq!(to_left.total, to_right.total);
        assert!(
            is_isomorphic_undirected(&to_left.total, &standard::undirected_cycle(8)).is_some()
        );
    }

    #[test]
    fn rxp_identity_cycle_has_no_forest() {
        let c = cycle_covering(3, 3);
        let h = identity_undirected(&c.total);
        let r = extend_cycle_to_rxp(&c, &h, 3, 1).unwrap();
        assert_eq!(r.graph.node_count(), 3);
        assert_eq!(r.graph.arc_count(), 3);
        assert_eq!(r.to_total, h);
    }

    #[test]
    fn rxp_on_k4_triangle_adds_one_pendant_per_node() {
        let k4 = standard::complete(4);
        let coloring = find_n_coloring(&k4, 3).unwrap().expect("K_4 is 3-colorable");
        // walk a triangle 1 -> 2 -> 3 -> 1
        let mut h = UndirectedMorphism::default();
        for (k, (a, b)) in [(0, (1, 2)), (1, (2, 3)), (2, (3, 1))] {
            h.node_map
                .insert(format!("[{}]", k).into(), format!("{}", a).into());
            let (lo, hi) = (a.min(b), a.max(b));
            let fwd = if a < b { "+" } else { "-" };
            let bwd = if a < b { "-" } else { "+" };
            h.halfarc_map.insert(
                format!("[{}]+", k).into(),
                format!("e{}_{}{}", lo, hi, fwd).into(),
            );
            h.halfarc_map.insert(
                format!("[{}]-", k).into(),
                format!("e{}_{}{}", lo, hi, bwd).into(),
            );
        }
        let r = extend_cycle_to_rxp(&coloring, &h, 3, 1).unwrap();
        assert_eq!(r.graph.node_count(), 6);
        assert_eq!(r.graph.arc_count(), 6);
        // interior (cycle) nodes now have full stars over the base
        for k in 0..3 {
            let node: NodeId = format!("[{}]", k).into();
            assert_eq!(r.graph.star(&node).unwrap().size(), 3);
        }
    }

    #[test]
    fn rxp_refuses_loops_and_backtracking() {
        let b1 = standard::undirected_cycle(1);
        let c = Covering::new(b1.clone(), b1.clone(), identity_undirected(&b1)).unwrap();
        let doubling = UndirectedMorphism {
            node_map: [("[0]".into(), "[0]".into()), ("[1]".into(), "[0]".into())].into(),
            halfarc_map: [
                ("[0]+".into(), "[0]+".into()),
                ("[0]-".into(), "[0]-".into()),
                ("[1]+".into(), "[0]+".into()),
                ("[1]-".into(), "[0]-".into()),
            ]
            .into(),
        };
        assert!(matches!(
            extend_cycle_to_rxp(&c, &doubling, 2, 1),
            Err(Error::HasLoops(_))
        ));
        // backtracking 2-cycle in the square
        let c42 = cycle_covering(4, 2);
        let mut bt = UndirectedMorphism::default();
        bt.node_map.insert("[0]".into(), "[0]".into());
        bt.node_map.insert("[1]".into(), "[1]".into());
        bt.halfarc_map.insert("[0]+".into(), "[0]+".into());
        bt.halfarc_map.insert("[0]-".into(), "[0]-".into());
        bt.halfarc_map.insert("[1]+".into(), "[0]-".into());
        bt.halfarc_map.insert("[1]-".into(), "[0]+".into());
        assert!(matches!(
            extend_cycle_to_rxp(&c42, &bt, 2, 1),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn k4_is_three_colorable_and_the_triangle_is_not() {
        assert!(find_n_coloring(&standard::complete(4), 3).unwrap().is_some());
        assert!(find_n_coloring(&standard::undirected_cycle(3), 2)
            .unwrap()
            .is_none());
        // odd cycle is 2-regular but has no proper 2-edge-coloring
        assert!(find_n_coloring(&standard::undirected_cycle(5), 2)
            .unwrap()
            .is_none());
        assert!(find_n_coloring(&standard::undirected_cycle(6), 2)
            .unwrap()
            .is_some());
    }

    #[test]
    fn covering_weq_identity_true_quotient_false() {
        let c42 = cycle_covering(4, 2);
        let id = identity_undirected(&c42.total);
        let r = covering_weak_equiv(&id, &c42, &c42, 6).unwrap();
        assert!(r.bounded_bijective());

        // quotient c^4 -> c^2 over B_2: fails at p = 2 with counts 0 vs 4
        let y = even_cycle_over_b2(4, 0);
        let z = even_cycle_over_b2(2, 0);
        let h = cycle_quotient(4, 2);
        let r = covering_weak_equiv(&h, &y, &z, 6).unwrap();
        assert_eq!(r.failing_p, Some(2));
        assert_eq!(r.checks[1].domain_count, 0);
        assert_eq!(r.checks[1].codomain_count, 4);
    }
}
