//! Finite group actions presented by generator tables, the Cayley graph
//! functors in both flavors, and the equivalence between involutive actions
//! and edge-colored regular graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::cover::Covering;
use crate::error::{Error, Result};
use crate::graph::undirected::HalfArc;
use crate::graph::{
    standard, ArcId, DirectedGraph, DirectedMorphism, HalfArcId, NodeId, UndirectedGraph,
    UndirectedMorphism,
};
use crate::zeta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    /// generators act as arbitrary permutations (free group actions)
    Free,
    /// every generator squares to the identity
    Involutive,
}

/// A finite set acted on by named generators. Tables are total maps of the
/// carrier; each generator must act bijectively, and involutively when the
/// kind says so. Generator order is the lexicographic order of the names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GSetAction {
    pub kind: GroupKind,
    pub carrier: BTreeSet<String>,
    pub generators: BTreeMap<String, BTreeMap<String, String>>,
}

impl GSetAction {
    pub fn new(
        kind: GroupKind,
        carrier: impl IntoIterator<Item = String>,
        generators: BTreeMap<String, BTreeMap<String, String>>,
    ) -> Result<Self> {
        let action = GSetAction {
            kind,
            carrier: carrier.into_iter().collect(),
            generators,
        };
        action.validate()?;
        Ok(action)
    }

    /// Checks totality, bijectivity, the involution law when applicable,
    /// and that generator names stay clear of the `:` used in Cayley ids.
    pub fn validate(&self) -> Result<()> {
        for (name, table) in &self.generators {
            if name.contains(':') {
                return Err(Error::InvalidAction(format!(
                    "generator name `{}` must not contain `:`",
                    name
                )));
            }
            let mut image = BTreeSet::new();
            for x in &self.carrier {
                let y = table.get(x).ok_or_else(|| {
                    Error::InvalidAction(format!("generator `{}` undefined on `{}`", name, x))
                })?;
                if !self.carrier.contains(y) {
                    return Err(Error::InvalidAction(format!(
                        "generator `{}` sends `{}` outside the carrier to `{}`",
                        name, x, y
                    )));
                }
                image.insert(y.clone());
            }
            if image.len() != self.carrier.len() {
                return Err(Error::InvalidAction(format!(
                    "generator `{}` is not a bijection",
                    name
                )));
            }
            for x in table.keys() {
                if !self.carrier.contains(x) {
                    return Err(Error::InvalidAction(format!(
                        "generator `{}` tabulates `{}` outside the carrier",
                        name, x
                    )));
                }
            }
            if self.kind == GroupKind::Involutive {
                for x in &self.carrier {
                    let twice = &table[&table[x]];
                    if twice != x {
                        return Err(Error::InvalidAction(format!(
                            "generator `{}` does not square to the identity at `{}`",
                            name, x
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, generator: &str, x: &str) -> Result<&String> {
        self.generators
            .get(generator)
            .ok_or_else(|| Error::UnknownId {
                kind: "generator",
                id: generator.into(),
            })?
            .get(x)
            .ok_or_else(|| Error::UnknownId {
                kind: "carrier element",
                id: x.into(),
            })
    }

    pub fn generator_names(&self) -> Vec<&String> {
        self.generators.keys().collect()
    }
}

/// Parses `{"kind":"free|involutive","carrier":[..],"generators":{..}}`.
pub fn gset_from_str(s: &str) -> Result<GSetAction> {
    let action: GSetAction = serde_json::from_str(s)?;
    action.validate()?;
    Ok(action)
}

/// Canonical JSON text; maps come out sorted.
pub fn gset_to_string(action: &GSetAction) -> String {
    serde_json::to_string(action).expect("serializable")
}

/// A Cayley graph together with the generator labeling of its arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyDirected {
    pub graph: DirectedGraph,
    pub labels: BTreeMap<ArcId, String>,
}

/// Directed Cayley graph: one node per carrier element, one arc
/// `g:x` from `x` to `g(x)` per generator and element.
pub fn cayley_directed(action: &GSetAction) -> Result<CayleyDirected> {
    action.validate()?;
    let nodes: Vec<NodeId> = action.carrier.iter().map(|x| x.as_str().into()).collect();
    let mut arcs = Vec::new();
    let mut labels = BTreeMap::new();
    for (name, table) in &action.generators {
        for x in &action.carrier {
            let id: ArcId = format!("{}:{}", name, x).into();
            labels.insert(id.clone(), name.clone());
            arcs.push((id, x.as_str().into(), table[x].as_str().into()));
        }
    }
    Ok(CayleyDirected {
        graph: DirectedGraph::from_parts(nodes, arcs),
        labels,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyUndirected {
    pub graph: UndirectedGraph,
    pub labels: BTreeMap<HalfArcId, String>,
}

/// Undirected Cayley graph of an involutive action: the half-arc `g:x`
/// from `x` to `g(x)` is inverse to `g:g(x)`; a fixed point of `g` yields a
/// degenerate loop.
pub fn cayley_undirected(action: &GSetAction) -> Result<CayleyUndirected> {
    action.validate()?;
    if action.kind != GroupKind::Involutive {
        return Err(Error::InvalidAction(
            "undirected Cayley graphs need an involutive action".into(),
        ));
    }
    let nodes: Vec<NodeId> = action.carrier.iter().map(|x| x.as_str().into()).collect();
    let mut halfarcs = Vec::new();
    let mut labels = BTreeMap::new();
    for (name, table) in &action.generators {
        for x in &action.carrier {
            let y = &table[x];
            let id: HalfArcId = format!("{}:{}", name, x).into();
            labels.insert(id.clone(), name.clone());
            halfarcs.push((
                id,
                HalfArc {
                    src: x.as_str().into(),
                    tgt: y.as_str().into(),
                    inv: format!("{}:{}", name, y).into(),
                },
            ));
        }
    }
    Ok(CayleyUndirected {
        graph: UndirectedGraph::from_halfarc_pairs(nodes, halfarcs),
        labels,
    })
}

/// The coloring covering onto the bouquet that comes for free with an
/// undirected Cayley graph: the `i`-th generator (in name order) lands on
/// the loop `a{i}`.
pub fn covering_to_bouquet(action: &GSetAction) -> Result<Covering> {
    let cayley = cayley_undirected(action)?;
    let n = action.generators.len();
    let index: BTreeMap<&String, usize> = action
        .generators
        .keys()
        .enumerate()
        .map(|(i, name)| (name, i))
        .collect();
    let map = UndirectedMorphism {
        node_map: cayley.graph.nodes().map(|v| (v.clone(), "*".into())).collect(),
        halfarc_map: cayley
            .labels
            .iter()
            .map(|(id, name)| (id.clone(), format!("a{}", index[name]).into()))
            .collect(),
    };
    Covering::new(cayley.graph, standard::bouquet(n), map)
}

/// Reads an involutive action off an edge-colored graph, i.e. a covering
/// of a bouquet: the generator named by each loop of the base moves every
/// node across its arc of that color. Inverse to [`cayley_undirected`] up
/// to isomorphism.
pub fn colored_to_gset(coloring: &Covering) -> Result<GSetAction> {
    let base = &coloring.base;
    let degenerate_base = base
        .halfarcs()
        .all(|(id, h)| h.inv == *id && h.src == h.tgt);
    if base.node_count() != 1 || !degenerate_base {
        return Err(Error::InvalidParameter(
            "the base of a coloring must be a bouquet of degenerate loops".into(),
        ));
    }
    let check = coloring.check();
    if !check.is_covering() {
        return Err(Error::NotACovering(check.failures.join("; ")));
    }
    let mut generators: BTreeMap<String, BTreeMap<String, String>> = base
        .halfarcs()
        .map(|(id, _)| (id.as_str().to_owned(), BTreeMap::new()))
        .collect();
    for (h, rec) in coloring.total.halfarcs() {
        let color = &coloring.map.halfarc_map[h];
        generators
            .get_mut(color.as_str())
            .expect("validated morphism lands in the base")
            .insert(rec.src.as_str().to_owned(), rec.tgt.as_str().to_owned());
    }
    // nodes fixed by a color (degenerate loops upstairs) appear only as
    // their own image; fill in genuinely missing fixed points
    for table in generators.values_mut() {
        for x in coloring.total.nodes() {
            table.entry(x.as_str().to_owned()).or_insert_with(|| x.as_str().to_owned());
        }
    }
    GSetAction::new(
        GroupKind::Involutive,
        coloring.total.nodes().map(|n| n.as_str().to_owned()),
        generators,
    )
}

/// A map of carriers; equivariance is checked against a pair of actions.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EquivariantMap {
    pub map: BTreeMap<String, String>,
}

pub fn validate_equivariant(
    f: &EquivariantMap,
    x: &GSetAction,
    y: &GSetAction,
) -> Result<()> {
    if x.generator_names() != y.generator_names() {
        return Err(Error::GeneratorMismatch(
            "the two actions must share one generator list".into(),
        ));
    }
    for a in &x.carrier {
        let fa = f
            .map
            .get(a)
            .ok_or_else(|| Error::InvalidAction(format!("`{}` has no image", a)))?;
        if !y.carrier.contains(fa) {
            return Err(Error::InvalidAction(format!(
                "`{}` maps outside the carrier to `{}`",
                a, fa
            )));
        }
        for g in x.generators.keys() {
            let lhs = f.map.get(x.apply(g, a)?.as_str()).ok_or_else(|| {
                Error::InvalidAction(format!("`{}` has no image", x.apply(g, a).unwrap()))
            })?;
            let rhs = y.apply(g, fa)?;
            if lhs != rhs {
                return Err(Error::InvalidAction(format!(
                    "map is not equivariant at `{}` under `{}`: `{}` vs `{}`",
                    a, g, lhs, rhs
                )));
            }
        }
    }
    Ok(())
}

/// The Cayley functor on morphisms: an equivariant map becomes a graph
/// morphism sending `g:x` to `g:f(x)`.
pub fn cayley_map_directed(
    f: &EquivariantMap,
    x: &GSetAction,
    y: &GSetAction,
) -> Result<DirectedMorphism> {
    validate_equivariant(f, x, y)?;
    let mut m = DirectedMorphism::default();
    for a in &x.carrier {
        m.node_map
            .insert(a.as_str().into(), f.map[a].as_str().into());
        for g in x.generators.keys() {
            m.arc_map.insert(
                format!("{}:{}", g, a).into(),
                format!("{}:{}", g, f.map[a]).into(),
            );
        }
    }
    Ok(m)
}

/// Objects are weakly equivalent when their directed Cayley graphs count
/// the same cycles; decided exactly through the determinant reciprocal.
pub fn weak_equiv_gsets(x: &GSetAction, y: &GSetAction) -> Result<bool> {
    if x.generator_names() != y.generator_names() {
        return Err(Error::GeneratorMismatch(
            "the two actions must share one generator list".into(),
        ));
    }
    Ok(zeta::weak_equiv_directed(
        &cayley_directed(x)?.graph,
        &cayley_directed(y)?.graph,
    ))
}

/// Bounded weak-equivalence check for an equivariant map: composition must
/// biject cycles of the Cayley graphs for every length up to `bound`.
pub fn weak_equiv_gset_map(
    f: &EquivariantMap,
    x: &GSetAction,
    y: &GSetAction,
    bound: usize,
) -> Result<(Option<usize>, bool)> {
    let morphism = cayley_map_directed(f, x, y)?;
    let (failing, _) = zeta::least_failing_p_directed(
        &morphism,
        &cayley_directed(x)?.graph,
        &cayley_directed(y)?.graph,
        bound,
    )?;
    Ok((failing, failing.is_none()))
}

/// Exhaustive search for an equivariant bijection.
pub fn gset_isomorphic(x: &GSetAction, y: &GSetAction) -> Result<Option<EquivariantMap>> {
    if x.generator_names() != y.generator_names() {
        return Err(Error::GeneratorMismatch(
            "the two actions must share one generator list".into(),
        ));
    }
    if x.carrier.len() != y.carrier.len() {
        return Ok(None);
    }
    let xs: Vec<&String> = x.carrier.iter().collect();
    let ys: Vec<&String> = y.carrier.iter().collect();
    let mut assign: Vec<usize> = Vec::new();

    fn consistent(
        x: &GSetAction,
        y: &GSetAction,
        xs: &[&String],
        ys: &[&String],
        assign: &[usize],
    ) -> bool {
        let pos: BTreeMap<&str, usize> = xs
            .iter()
            .enumerate()
            .take(assign.len())
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let i = assign.len() - 1;
        for g in x.generators.keys() {
            let gx = x.generators[g][xs[i]].as_str();
            if let Some(&j) = pos.get(gx) {
                if y.generators[g][ys[assign[i]]] != *ys[assign[j]] {
                    return false;
                }
            }
            // the other direction: some earlier point maps onto xs[i]
            for (k, &ak) in assign.iter().enumerate() {
                if x.generators[g][xs[k]].as_str() == xs[i].as_str()
                    && y.generators[g][ys[ak]] != *ys[assign[i]]
                {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        x: &GSetAction,
        y: &GSetAction,
        xs: &[&String],
        ys: &[&String],
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if assign.len() == xs.len() {
            return true;
        }
        for c in 0..ys.len() {
            if used[c] {
                continue;
            }
            assign.push(c);
            used[c] = true;
            if consistent(x, y, xs, ys, assign) && search(x, y, xs, ys, assign, used) {
                return true;
            }
            used[c] = false;
            assign.pop();
        }
        false
    }

    let mut used = vec![false; ys.len()];
    if search(x, y, &xs, &ys, &mut assign, &mut used) {
        let map = xs
            .iter()
            .zip(&assign)
            .map(|(a, &c)| (a.as_str().to_owned(), ys[c].as_str().to_owned()))
            .collect();
        let f = EquivariantMap { map };
        debug_assert!(validate_equivariant(&f, x, y).is_ok());
        Ok(Some(f))
    } else {
        Ok(None)
    }
}

/// Cofibrancy decision for free actions with a computed justification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofibrancyReport {
    pub cofibrant: bool,
    pub reason: String,
}

/// A free action is cofibrant when its Cayley graph is a disjoint sum of
/// cycles with trees attached, i.e. when every component has cycle rank at
/// most one. Since generators act bijectively every node has out-degree
/// `n`, so with two or more generators the rank of a component with `v`
/// nodes is `v(n-1)+1 >= 2` and the answer is no; with one generator the
/// components are plain cycles and the answer is yes.
pub fn is_cofibrant_fnset(action: &GSetAction) -> Result<CofibrancyReport> {
    action.validate()?;
    if action.kind != GroupKind::Free {
        return Err(Error::InvalidAction(
            "cofibrancy is decided for free actions".into(),
        ));
    }
    let cayley = cayley_directed(action)?;
    let n = action.generators.len();
    for component in cayley.graph.components() {
        let in_component: BTreeSet<&NodeId> = component.iter().collect();
        let arcs = cayley
            .graph
            .arcs()
            .filter(|(_, a)| in_component.contains(&a.src))
            .count();
        let rank = arcs as i64 - component.len() as i64 + 1;
        if rank > 1 {
            return Ok(CofibrancyReport {
                cofibrant: false,
                reason: format!(
                    "the component of `{}` has {} nodes and {} arcs, hence {} independent cycles; with {} generators every element emits {} arcs, so no component is a cycle with trees",
                    component[0], component.len(), arcs, rank, n, n
                ),
            });
        }
    }
    Ok(CofibrancyReport {
        cofibrant: true,
        reason: format!(
            "every component has cycle rank at most one ({} generator{} acting bijectively)",
            n,
            if n == 1 { "" } else { "s" }
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::{is_isomorphic_directed, is_isomorphic_undirected};
    use crate::graph::morphism::validate_directed_morphism;

    pub fn involution(pairs: &[(&str, &str)], fixed: &[&str]) -> BTreeMap<String, String> {
        let mut t = BTreeMap::new();
        for (a, b) in pairs {
            t.insert((*a).to_owned(), (*b).to_owned());
            t.insert((*b).to_owned(), (*a).to_owned());
        }
        for x in fixed {
            t.insert((*x).to_owned(), (*x).to_owned());
        }
        t
    }

    fn one_point(kind: GroupKind, gens: usize) -> GSetAction {
        let generators = (0..gens)
            .map(|i| {
                (
                    format!("a{}", i),
                    [("*".to_owned(), "*".to_owned())].into(),
                )
            })
            .collect();
        GSetAction::new(kind, ["*".to_owned()], generators).unwrap()
    }

    #[test]
    fn validation_catches_bad_tables() {
        let broken = GSetAction {
            kind: GroupKind::Free,
            carrier: ["x".to_owned(), "y".to_owned()].into(),
            generators: [(
                "g".to_owned(),
                [("x".to_owned(), "y".to_owned()), ("y".to_owned(), "y".to_owned())].into(),
            )]
            .into(),
        };
        assert!(broken.validate().is_err());
        let not_involutive = GSetAction {
            kind: GroupKind::Involutive,
            carrier: ["x".to_owned(), "y".to_owned(), "z".to_owned()].into(),
            generators: [(
                "g".to_owned(),
                [
                    ("x".to_owned(), "y".to_owned()),
                    ("y".to_owned(), "z".to_owned()),
                    ("z".to_owned(), "x".to_owned()),
                ]
                .into(),
            )]
            .into(),
        };
        assert!(not_involutive.validate().is_err());
        let colon = GSetAction {
            kind: GroupKind::Free,
            carrier: ["x".to_owned()].into(),
            generators: [("a:b".to_owned(), [("x".to_owned(), "x".to_owned())].into())].into(),
        };
        assert!(colon.validate().is_err());
    }

    #[test]
    fn cayley_of_one_point_actions() {
        let free = cayley_directed(&one_point(GroupKind::Free, 2)).unwrap();
        assert!(is_isomorphic_directed(&free.graph, &standard::directed_bouquet(2)).is_some());
        let inv = cayley_undirected(&one_point(GroupKind::Involutive, 3)).unwrap();
        assert!(is_isomorphic_undirected(&inv.graph, &standard::bouquet(3)).is_some());
    }

    #[test]
    fn cayley_of_cyclic_action_is_cycle() {
        let table: BTreeMap<String, String> = (0..3)
            .map(|i| (i.to_string(), ((i + 1) % 3).to_string()))
            .collect();
        let action = GSetAction::new(
            GroupKind::Free,
            (0..3).map(|i| i.to_string()),
            [("r".to_owned(), table)].into(),
        )
        .unwrap();
        let c = cayley_directed(&action).unwrap();
        assert!(is_isomorphic_directed(&c.graph, &standard::directed_cycle(3)).is_some());
    }

    #[test]
    fn free_orbit_gives_single_arc() {
        let action = GSetAction::new(
            GroupKind::Involutive,
            ["x".to_owned(), "y".to_owned()],
            [("a0".to_owned(), involution(&[("x", "y")], &[]))].into(),
        )
        .unwrap();
        let c = cayley_undirected(&action).unwrap();
        assert!(is_isomorphic_undirected(&c.graph, &standard::undirected_arc()).is_some());
    }

    #[test]
    fn coloring_round_trip_on_k4() {
        let k4 = standard::complete(4);
        let coloring = crate::cover::find_n_coloring(&k4, 3).unwrap().unwrap();
        let action = colored_to_gset(&coloring).unwrap();
        assert_eq!(action.carrier.len(), 4);
        for table in action.generators.values() {
            // perfect matchings: no fixed points
            assert!(table.iter().all(|(a, b)| a != b));
        }
        let back = cayley_undirected(&action).unwrap();
        assert!(is_isomorphic_undirected(&back.graph, &k4).is_some());
    }

    #[test]
    fn bouquet_round_trip_keeps_fixed_points() {
        let action = one_point(GroupKind::Involutive, 2);
        let cov = covering_to_bouquet(&action).unwrap();
        assert!(cov.is_covering());
        let back = colored_to_gset(&cov).unwrap();
        assert_eq!(back.carrier.len(), 1);
        assert!(gset_isomorphic(&back, &rename_generators(&action)).unwrap().is_some());
    }

    /// covering_to_bouquet renames colors to a0..; mirror that on the
    /// original action for comparison.
    fn rename_generators(action: &GSetAction) -> GSetAction {
        let generators = action
            .generators
            .values()
            .enumerate()
            .map(|(i, t)| (format!("a{}", i), t.clone()))
            .collect();
        GSetAction::new(action.kind, action.carrier.iter().cloned(), generators).unwrap()
    }

    #[test]
    fn equivariant_maps_and_functoriality() {
        let x = {
            let table: BTreeMap<String, String> = (0..4)
                .map(|i| (i.to_string(), ((i + 1) % 4).to_string()))
                .collect();
            GSetAction::new(
                GroupKind::Free,
                (0..4).map(|i| i.to_string()),
                [("r".to_owned(), table)].into(),
            )
            .unwrap()
        };
        let y = {
            let table: BTreeMap<String, String> = (0..2)
                .map(|i| (i.to_string(), ((i + 1) % 2).to_string()))
                .collect();
            GSetAction::new(
                GroupKind::Free,
                (0..2).map(|i| i.to_string()),
                [("r".to_owned(), table)].into(),
            )
            .unwrap()
        };
        let f = EquivariantMap {
            map: (0..4).map(|i| (i.to_string(), (i % 2).to_string())).collect(),
        };
        let m = cayley_map_directed(&f, &x, &y).unwrap();
        assert!(validate_directed_morphism(
            &m,
            &cayley_directed(&x).unwrap().graph,
            &cayley_directed(&y).unwrap().graph
        )
        .is_valid());
        // a non-equivariant map is refused
        let bad = EquivariantMap {
            map: [
                ("0".to_owned(), "0".to_owned()),
                ("1".to_owned(), "0".to_owned()),
                ("2".to_owned(), "1".to_owned()),
                ("3".to_owned(), "0".to_owned()),
            ]
            .into(),
        };
        assert!(cayley_map_directed(&bad, &x, &y).is_err());
    }

    #[test]
    fn isomorphism_search_sees_structure() {
        let z4 = {
            let table: BTreeMap<String, String> = (0..4)
                .map(|i| (i.to_string(), ((i + 1) % 4).to_string()))
                .collect();
            GSetAction::new(
                GroupKind::Free,
                (0..4).map(|i| i.to_string()),
                [("r".to_owned(), table)].into(),
            )
            .unwrap()
        };
        let z4_relabeled = {
            let table: BTreeMap<String, String> = [
                ("a".to_owned(), "b".to_owned()),
                ("b".to_owned(), "c".to_owned()),
                ("c".to_owned(), "d".to_owned()),
                ("d".to_owned(), "a".to_owned()),
            ]
            .into();
            GSetAction::new(
                GroupKind::Free,
                ["a", "b", "c", "d"].map(str::to_owned),
                [("r".to_owned(), table)].into(),
            )
            .unwrap()
        };
        assert!(gset_isomorphic(&z4, &z4_relabeled).unwrap().is_some());
        let two_plus_two = {
            let table: BTreeMap<String, String> = [
                ("a".to_owned(), "b".to_owned()),
                ("b".to_owned(), "a".to_owned()),
                ("c".to_owned(), "d".to_owned()),
                ("d".to_owned(), "c".to_owned()),
            ]
            .into();
            GSetAction::new(
                GroupKind::Free,
                ["a", "b", "c", "d"].map(str::to_owned),
                [("r".to_owned(), table)].into(),
            )
            .unwrap()
        };
        assert!(gset_isomorphic(&z4, &two_plus_two).unwrap().is_none());
    }

    #[test]
    fn weak_equivalence_of_actions() {
        let x = one_point(GroupKind::Free, 2);
        assert!(weak_equiv_gsets(&x, &x).unwrap());
        let other = GSetAction::new(
            GroupKind::Free,
            ["u".to_owned()],
            [("b0".to_owned(), [("u".to_owned(), "u".to_owned())].into())].into(),
        )
        .unwrap();
        assert!(matches!(
            weak_equiv_gsets(&x, &other),
            Err(Error::GeneratorMismatch(_))
        ));
    }

    #[test]
    fn cofibrancy_by_generator_count() {
        let perm = {
            let table: BTreeMap<String, String> = (0..5)
                .map(|i| (i.to_string(), ((i + 2) % 5).to_string()))
                .collect();
            GSetAction::new(
                GroupKind::Free,
                (0..5).map(|i| i.to_string()),
                [("r".to_owned(), table)].into(),
            )
            .unwrap()
        };
        assert!(is_cofibrant_fnset(&perm).unwrap().cofibrant);
        let two_gen = one_point(GroupKind::Free, 2);
        let report = is_cofibrant_fnset(&two_gen).unwrap();
        assert!(!report.cofibrant);
        assert!(report.reason.contains("2"));
    }

    #[test]
    fn gset_json_round_trip() {
        let action = one_point(GroupKind::Involutive, 2);
        let s = gset_to_string(&action);
        assert_eq!(gset_from_str(&s).unwrap(), action);
        assert!(gset_from_str("{\"kind\":\"free\"}").is_err());
    }
}
