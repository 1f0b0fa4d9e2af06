//! Seeded random graphs and actions for tests and benchmarks. Everything
//! here is deterministic in the seed, and sizes are rejection-capped so
//! that brute-force enumeration stays fast.

use std::collections::BTreeMap;

use num::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{DirectedGraph, NodeId, UndirectedGraph};
use crate::gset::{GSetAction, GroupKind};
use crate::zeta;

/// Upper bound on the total closed-walk count through length 8; graphs
/// above it are resampled so enumeration-based cross-checks stay cheap.
const WALK_BUDGET: u64 = 20_000;

fn within_budget(counts: &[BigInt]) -> bool {
    let mut total = BigInt::from(0);
    for c in counts {
        total += c;
    }
    total <= BigInt::from(WALK_BUDGET)
}

pub fn random_directed(rng: &mut impl Rng, max_nodes: usize, max_arcs: usize) -> DirectedGraph {
    let n = rng.gen_range(1..=max_nodes);
    let nodes: Vec<NodeId> = (0..n).map(|i| NodeId(format!("v{}", i))).collect();
    let arcs = (0..rng.gen_range(0..=max_arcs))
        .map(|k| {
            let s = rng.gen_range(0..n);
            let t = rng.gen_range(0..n);
            (
                format!("e{}", k).into(),
                NodeId(format!("v{}", s)),
                NodeId(format!("v{}", t)),
            )
        })
        .collect::<Vec<_>>();
    DirectedGraph::from_parts(nodes, arcs)
}

/// Random finite directed graphs, each small enough that counting cycles by
/// explicit enumeration through length 8 is immediate.
pub fn directed_corpus(seed: u64, count: usize) -> Vec<DirectedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_directed(&mut rng, 6, 10);
        if within_budget(&zeta::closed_walk_counts(&g, 8)) {
            out.push(g);
        }
    }
    out
}

pub fn random_loopless_undirected(rng: &mut impl Rng, max_nodes: usize) -> UndirectedGraph {
    let n = rng.gen_range(1..=max_nodes);
    let nodes: Vec<NodeId> = (0..n).map(|i| NodeId(format!("v{}", i))).collect();
    let arc_bound = if n == 1 { 0 } else { rng.gen_range(0..=9) };
    let arcs = (0..arc_bound)
        .map(|k| {
            let s = rng.gen_range(0..n);
            let mut t = rng.gen_range(0..n - 1);
            if t >= s {
                t += 1;
            }
            (
                format!("e{}", k),
                NodeId(format!("v{}", s)),
                NodeId(format!("v{}", t)),
            )
        })
        .collect::<Vec<_>>();
    UndirectedGraph::from_arcs(nodes, arcs)
}

/// Random loopless undirected graphs with the closed-walk budget applied to
/// the half-arc walk operator, which bounds both cycle and non-backtracking
/// cycle enumeration.
pub fn loopless_corpus(seed: u64, count: usize) -> Vec<UndirectedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_loopless_undirected(&mut rng, 6);
        let counts: Vec<BigInt> = (1..=8)
            .map(|p| zeta::undirected_cycle_count(&g, p).expect("positive length"))
            .collect();
        if within_budget(&counts) {
            out.push(g);
        }
    }
    out
}

/// A random involutive action: each generator is a uniformly chosen
/// involution of the carrier, fixed points allowed unless forbidden.
pub fn random_involutive_gset(
    rng: &mut impl Rng,
    generators: usize,
    max_carrier: usize,
    allow_fixed: bool,
) -> GSetAction {
    let n = if allow_fixed {
        rng.gen_range(1..=max_carrier)
    } else {
        2 * rng.gen_range(1..=max_carrier.max(2) / 2)
    };
    let carrier: Vec<String> = (0..n).map(|i| format!("x{}", i)).collect();
    let tables = (0..generators)
        .map(|g| {
            let mut order = carrier.clone();
            order.shuffle(rng);
            let mut table = BTreeMap::new();
            let mut rest = order.as_slice();
            while let [a, tail @ ..] = rest {
                if !tail.is_empty() && (!allow_fixed || rng.gen_bool(0.8)) {
                    let b = &tail[0];
                    table.insert(a.clone(), b.clone());
                    table.insert(b.clone(), a.clone());
                    rest = &tail[1..];
                } else {
                    table.insert(a.clone(), a.clone());
                    rest = tail;
                }
            }
            (format!("a{}", g), table)
        })
        .collect();
    GSetAction::new(GroupKind::Involutive, carrier, tables).expect("pairings are involutions")
}

/// Random edge-colored graphs presented as involutive actions; with
/// `allow_fixed = false` the Cayley graphs are loopless and n-regular.
pub fn involutive_corpus(
    seed: u64,
    count: usize,
    generators: usize,
    allow_fixed: bool,
) -> Vec<GSetAction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_involutive_gset(&mut rng, generators, 8, allow_fixed))
        .collect()
}

/// A random free action: each generator is a uniformly chosen permutation.
pub fn random_free_gset(rng: &mut impl Rng, generators: usize, max_carrier: usize) -> GSetAction {
    let n = rng.gen_range(1..=max_carrier);
    let carrier: Vec<String> = (0..n).map(|i| format!("x{}", i)).collect();
    let tables = (0..generators)
        .map(|g| {
            let mut image = carrier.clone();
            image.shuffle(rng);
            let table = carrier.iter().cloned().zip(image).collect();
            (format!("a{}", g), table)
        })
        .collect();
    GSetAction::new(GroupKind::Free, carrier, tables).expect("shuffles are permutations")
}
