//! Parallel vs sequential hom-set enumeration on fixed mid-size inputs.
//! Run with `--no-default-features` to see the erased-rayon numbers for the
//! library entry points as well.

use criterion::{criterion_group, criterion_main, Criterion};
use gzeta_core::graph::{standard, DirectedGraph, NodeId};
use gzeta_core::homs::{
    enumerate_homs_directed, enumerate_homs_directed_seq, enumerate_homs_undirected,
    enumerate_homs_undirected_seq,
};
use gzeta_core::zeta;

/// Complete digraph without loops on n nodes.
fn dense_directed(n: usize) -> DirectedGraph {
    let nodes: Vec<NodeId> = (0..n).map(|i| NodeId(i.to_string())).collect();
    let arcs = (0..n)
        .flat_map(|s| (0..n).filter(move |t| *t != s).map(move |t| (s, t)))
        .map(|(s, t)| {
            (
                format!("e{}_{}", s, t).into(),
                NodeId(s.to_string()),
                NodeId(t.to_string()),
            )
        })
        .collect::<Vec<_>>();
    DirectedGraph::from_parts(nodes, arcs)
}

fn bench_directed(c: &mut Criterion) {
    let cycle = standard::directed_cycle(8);
    let target = dense_directed(4);
    let mut group = c.benchmark_group("directed_cycle_homs_len8_into_k4");
    group.bench_function("parallel", |b| {
        b.iter(|| enumerate_homs_directed(&cycle, &target))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| enumerate_homs_directed_seq(&cycle, &target))
    });
    group.finish();
}

fn bench_undirected(c: &mut Criterion) {
    let cycle = standard::undirected_cycle(8);
    let target = standard::petersen();
    let mut group = c.benchmark_group("undirected_cycle_homs_len8_into_petersen");
    group.bench_function("parallel", |b| {
        b.iter(|| enumerate_homs_undirected(&cycle, &target))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| enumerate_homs_undirected_seq(&cycle, &target))
    });
    group.finish();
}

fn bench_nb_cycles(c: &mut Criterion) {
    let target = standard::petersen();
    c.bench_function("nb_cycles_len8_petersen", |b| {
        b.iter(|| zeta::nb_cycles(&target, 8).unwrap())
    });
}

criterion_group!(benches, bench_directed, bench_undirected, bench_nb_cycles);
criterion_main!(benches);
