//! Dessins d'enfants presented as a finite set of edge labels with two
//! permutations: the first (in generator name order) rotates edges around
//! white vertices, the second around black vertices.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::undirected::HalfArc;
use crate::graph::{NodeId, UndirectedGraph};
use crate::gset::{GSetAction, GroupKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dessin {
    action: GSetAction,
}

impl Dessin {
    /// Wraps a free action with exactly two generators.
    pub fn new(action: GSetAction) -> Result<Self> {
        action.validate()?;
        if action.kind != GroupKind::Free {
            return Err(Error::InvalidAction("a dessin is a free action".into()));
        }
        if action.generators.len() != 2 {
            return Err(Error::InvalidAction(format!(
                "a dessin needs exactly two generators, got {}",
                action.generators.len()
            )));
        }
        Ok(Dessin { action })
    }

    pub fn action(&self) -> &GSetAction {
        &self.action
    }

    /// White rotation: the generator with the smaller name.
    pub fn s0(&self) -> (&String, &BTreeMap<String, String>) {
        self.action.generators.iter().next().expect("two generators")
    }

    /// Black rotation: the generator with the larger name.
    pub fn s1(&self) -> (&String, &BTreeMap<String, String>) {
        self.action.generators.iter().nth(1).expect("two generators")
    }

    pub fn edges(&self) -> &BTreeSet<String> {
        &self.action.carrier
    }
}

/// The one-edge dessin: a single edge fixed by both rotations.
pub fn d0() -> Dessin {
    let id: BTreeMap<String, String> = [("x".to_owned(), "x".to_owned())].into();
    Dessin::new(
        GSetAction::new(
            GroupKind::Free,
            ["x".to_owned()],
            [("s0".to_owned(), id.clone()), ("s1".to_owned(), id)].into(),
        )
        .unwrap(),
    )
    .unwrap()
}

/// Two edges sharing their black vertex: s0 is trivial, s1 swaps.
pub fn d1() -> Dessin {
    let s0: BTreeMap<String, String> = [
        ("x".to_owned(), "x".to_owned()),
        ("y".to_owned(), "y".to_owned()),
    ]
    .into();
    let s1: BTreeMap<String, String> = [
        ("x".to_owned(), "y".to_owned()),
        ("y".to_owned(), "x".to_owned()),
    ]
    .into();
    Dessin::new(
        GSetAction::new(
            GroupKind::Free,
            ["x".to_owned(), "y".to_owned()],
            [("s0".to_owned(), s0), ("s1".to_owned(), s1)].into(),
        )
        .unwrap(),
    )
    .unwrap()
}

/// Cycles of a permutation table. Each cycle starts at its least element;
/// cycles come sorted by that starting element.
pub fn permutation_cycles(table: &BTreeMap<String, String>) -> Vec<Vec<String>> {
    let mut seen: BTreeSet<&String> = BTreeSet::new();
    let mut cycles = Vec::new();
    for start in table.keys() {
        if seen.contains(start) {
            continue;
        }
        let mut cycle = vec![start.clone()];
        seen.insert(start);
        let mut here = &table[start];
        while here != start {
            cycle.push(here.clone());
            seen.insert(here);
            here = &table[here];
        }
        cycles.push(cycle);
    }
    cycles
}

/// Cycle lengths in weakly decreasing order.
pub fn cycle_type(table: &BTreeMap<String, String>) -> Vec<usize> {
    let mut lens: Vec<usize> = permutation_cycles(table).iter().map(Vec::len).collect();
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

fn compose_tables(
    first: &BTreeMap<String, String>,
    then: &BTreeMap<String, String>,
) -> BTreeMap<String, String> {
    first
        .iter()
        .map(|(x, y)| (x.clone(), then[y].clone()))
        .collect()
}

fn invert_table(table: &BTreeMap<String, String>) -> BTreeMap<String, String> {
    table.iter().map(|(x, y)| (y.clone(), x.clone())).collect()
}

/// Cycle types of the white rotation, the black rotation, and the inverse
/// of their composite (the face permutation).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Passport {
    pub white: Vec<usize>,
    pub black: Vec<usize>,
    pub faces: Vec<usize>,
}

pub fn dessin_passport(d: &Dessin) -> Passport {
    let (_, s0) = d.s0();
    let (_, s1) = d.s1();
    let face = invert_table(&compose_tables(s0, s1));
    Passport {
        white: cycle_type(s0),
        black: cycle_type(s1),
        faces: cycle_type(&face),
    }
}

/// The bipartite graph of a dessin: a white node per s0-cycle, a black node
/// per s1-cycle, and one arc per edge label joining its two orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DessinGraph {
    pub graph: UndirectedGraph,
    pub white: BTreeSet<NodeId>,
    pub black: BTreeSet<NodeId>,
}

pub fn dessin_graph(d: &Dessin) -> DessinGraph {
    let (_, s0) = d.s0();
    let (_, s1) = d.s1();
    let orbit_node = |cycles: &[Vec<String>], prefix: &str| -> BTreeMap<String, NodeId> {
        let mut of_edge = BTreeMap::new();
        for cycle in cycles {
            let node: NodeId = format!("{}:{}", prefix, cycle[0]).into();
            for e in cycle {
                of_edge.insert(e.clone(), node.clone());
            }
        }
        of_edge
    };
    let white_of = orbit_node(&permutation_cycles(s0), "w");
    let black_of = orbit_node(&permutation_cycles(s1), "b");
    let white: BTreeSet<NodeId> = white_of.values().cloned().collect();
    let black: BTreeSet<NodeId> = black_of.values().cloned().collect();
    let nodes = white.iter().chain(black.iter()).cloned();
    let halfarcs = d.edges().iter().flat_map(|e| {
        let plus: crate::graph::HalfArcId = format!("{}+", e).into();
        let minus: crate::graph::HalfArcId = format!("{}-", e).into();
        [
            (
                plus.clone(),
                HalfArc {
                    src: white_of[e].clone(),
                    tgt: black_of[e].clone(),
                    inv: minus.clone(),
                },
            ),
            (
                minus,
                HalfArc {
                    src: black_of[e].clone(),
                    tgt: white_of[e].clone(),
                    inv: plus,
                },
            ),
        ]
    });
    DessinGraph {
        graph: UndirectedGraph::from_halfarc_pairs(nodes, halfarcs),
        white,
        black,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso::is_isomorphic_undirected;
    use crate::graph::standard;
    use crate::gset::{cayley_directed, gset_isomorphic, weak_equiv_gsets};
    use crate::zeta;

    #[test]
    fn base_passports() {
        assert_eq!(
            dessin_passport(&d0()),
            Passport {
                white: vec![1],
                black: vec![1],
                faces: vec![1]
            }
        );
        assert_eq!(
            dessin_passport(&d1()),
            Passport {
                white: vec![1, 1],
                black: vec![2],
                faces: vec![2]
            }
        );
    }

    #[test]
    fn base_bipartite_shapes() {
        let g0 = dessin_graph(&d0());
        assert!(is_isomorphic_undirected(&g0.graph, &standard::undirected_arc()).is_some());
        assert_eq!((g0.white.len(), g0.black.len()), (1, 1));
        let g1 = dessin_graph(&d1());
        assert!(is_isomorphic_undirected(&g1.graph, &standard::path(3)).is_some());
        assert_eq!((g1.white.len(), g1.black.len()), (2, 1));
    }

    #[test]
    fn base_pair_is_weakly_equivalent_but_not_isomorphic() {
        let (a, b) = (d0(), d1());
        assert!(weak_equiv_gsets(a.action(), b.action()).unwrap());
        assert!(gset_isomorphic(a.action(), b.action()).unwrap().is_none());
        for p in 1..=6 {
            let n = |d: &Dessin| {
                zeta::closed_walk_count(&cayley_directed(d.action()).unwrap().graph, p).unwrap()
            };
            assert_eq!(n(&a), n(&b));
            assert_eq!(n(&a), num::BigInt::from(1u32 << p));
        }
    }

    #[test]
    fn hexagonal_torus_passport() {
        // three edges, both rotations 3-cycles, one face:
        // V - E + F = 2 - 3 + 1 = 0, so this dessin lives on a torus
        let rot: BTreeMap<String, String> = [
            ("x".to_owned(), "y".to_owned()),
            ("y".to_owned(), "z".to_owned()),
            ("z".to_owned(), "x".to_owned()),
        ]
        .into();
        let d = Dessin::new(
            GSetAction::new(
                GroupKind::Free,
                ["x", "y", "z"].map(str::to_owned),
                [("s0".to_owned(), rot.clone()), ("s1".to_owned(), rot)].into(),
            )
            .unwrap(),
        )
        .unwrap();
        let p = dessin_passport(&d);
        assert_eq!(p.white, vec![3]);
        assert_eq!(p.black, vec![3]);
        assert_eq!(p.faces, vec![3]);
        let g = dessin_graph(&d);
        assert!(is_isomorphic_undirected(&g.graph, &standard::theta(3)).is_some());
    }

    #[test]
    fn dessin_refuses_wrong_shapes() {
        let one_gen = GSetAction::new(
            GroupKind::Free,
            ["x".to_owned()],
            [("s0".to_owned(), [("x".to_owned(), "x".to_owned())].into())].into(),
        )
        .unwrap();
        assert!(Dessin::new(one_gen).is_err());
    }
}
