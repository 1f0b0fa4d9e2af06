//! Randomized laws. Strategies draw a seed and expand it through the
//! corpus generators, so failures shrink to a reproducible seed.

use gzeta_core::cat;
use gzeta_core::corpus;
use gzeta_core::exact::RationalPowerSeries;
use gzeta_core::graph::{
    graph_from_str, graph_to_string, is_isomorphic_directed, is_isomorphic_undirected,
    validate_undirected_morphism, Graph, NodeId,
};
use gzeta_core::gset::{cayley_undirected, colored_to_gset, covering_to_bouquet, gset_isomorphic};
use gzeta_core::zeta;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn relabel_directed(g: &gzeta_core::DirectedGraph) -> gzeta_core::DirectedGraph {
    gzeta_core::DirectedGraph::from_parts(
        g.nodes().map(|n| NodeId(format!("r.{}", n))),
        g.arcs().map(|(id, a)| {
            (
                format!("r.{}", id).into(),
                NodeId(format!("r.{}", a.src)),
                NodeId(format!("r.{}", a.tgt)),
            )
        }),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn directed_weak_equivalence_iff_bounded_counts(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = corpus::random_directed(&mut rng, 5, 8);
        let y = corpus::random_directed(&mut rng, 5, 8);
        let bound = x.node_count() + y.node_count();
        let counts_agree =
            zeta::closed_walk_counts(&x, bound) == zeta::closed_walk_counts(&y, bound);
        prop_assert_eq!(zeta::weak_equiv_directed(&x, &y), counts_agree);
        // relabeling is invisible to the counts
        prop_assert!(zeta::weak_equiv_directed(&x, &relabel_directed(&x)));
    }

    #[test]
    fn zeta_series_times_reciprocal_is_one(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = corpus::random_directed(&mut rng, 5, 8);
        let order = x.node_count() + 2;
        let series = zeta::zeta_series(&x, order).unwrap();
        let recip = RationalPowerSeries::from_polynomial(&zeta::zeta_rational(&x), order);
        prop_assert!(series.mul(&recip).is_one());
    }

    #[test]
    fn moebius_inversion_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = corpus::random_directed(&mut rng, 5, 8);
        let counts = zeta::closed_walk_counts(&x, 8);
        let mult = zeta::invert_counts(&counts).unwrap();
        prop_assert_eq!(zeta::reconstruct_counts(&mult), counts);
    }

    #[test]
    fn graph_json_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = corpus::random_directed(&mut rng, 6, 10);
        let s = graph_to_string(&Graph::Directed(d.clone()));
        prop_assert_eq!(graph_from_str(&s).unwrap(), Graph::Directed(d));
        let u = corpus::random_loopless_undirected(&mut rng, 6);
        let s = graph_to_string(&Graph::Undirected(u.clone()));
        prop_assert_eq!(graph_from_str(&s).unwrap(), Graph::Undirected(u));
    }

    #[test]
    fn products_with_the_terminal_object_change_nothing(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = corpus::random_directed(&mut rng, 5, 8);
        let (p, px, _) = cat::product_directed(&d, &cat::terminal_directed());
        prop_assert!(is_isomorphic_directed(&p, &d).is_some());
        prop_assert!(gzeta_core::graph::validate_directed_morphism(&px, &p, &d).is_valid());
        let u = corpus::random_loopless_undirected(&mut rng, 5);
        let (q, qx, _) = cat::product_undirected(&u, &cat::terminal_undirected());
        prop_assert!(is_isomorphic_undirected(&q, &u).is_some());
        prop_assert!(validate_undirected_morphism(&qx, &q, &u).is_valid());
    }

    #[test]
    fn sums_inject_and_pushouts_along_identities_collapse(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = corpus::random_loopless_undirected(&mut rng, 4);
        let y = corpus::random_loopless_undirected(&mut rng, 4);
        let (s, ix, iy) = cat::sum_undirected(&x, &y);
        prop_assert!(validate_undirected_morphism(&ix, &x, &s).is_valid());
        prop_assert!(validate_undirected_morphism(&iy, &y, &s).is_valid());
        let id = gzeta_core::graph::identity_undirected(&x);
        let (z, _, from_y) = cat::pushout_undirected(&id, &id, &x, &x, &x).unwrap();
        prop_assert!(is_isomorphic_undirected(&z, &x).is_some());
        prop_assert!(validate_undirected_morphism(&from_y, &x, &z).is_valid());
    }

    #[test]
    fn pullbacks_of_coverings_are_coverings(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = corpus::random_involutive_gset(&mut rng, 2, 6, true);
        let b = corpus::random_involutive_gset(&mut rng, 2, 6, true);
        let ca = covering_to_bouquet(&a).unwrap();
        let cb = covering_to_bouquet(&b).unwrap();
        let (p, to_a, to_b) = cat::pullback_undirected(
            &ca.map, &cb.map, &ca.total, &cb.total, &ca.base,
        ).unwrap();
        // both legs cover again
        let left = gzeta_core::cover::Covering::new(p.clone(), ca.total.clone(), to_a).unwrap();
        prop_assert!(left.is_covering(), "{:?}", left.check().failures);
        let right = gzeta_core::cover::Covering::new(p, cb.total.clone(), to_b).unwrap();
        prop_assert!(right.is_covering(), "{:?}", right.check().failures);
    }

    #[test]
    fn colored_round_trip_up_to_isomorphism(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let action = corpus::random_involutive_gset(&mut rng, 3, 8, true);
        let cov = covering_to_bouquet(&action).unwrap();
        prop_assert!(cov.is_covering());
        let back = colored_to_gset(&cov).unwrap();
        prop_assert!(gset_isomorphic(&action, &back).unwrap().is_some());
        let again = cayley_undirected(&back).unwrap();
        prop_assert!(is_isomorphic_undirected(&again.graph, &cov.total).is_some());
    }

    #[test]
    fn hashimoto_equals_enumeration(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = corpus::random_loopless_undirected(&mut rng, 5);
        for p in 1..=4 {
            prop_assert_eq!(
                zeta::hashimoto_count(&g, p).unwrap(),
                zeta::nb_cycle_count(&g, p).unwrap()
            );
        }
        prop_assert!(zeta::bass_identity(&g).unwrap().holds);
    }

    #[test]
    fn composition_of_cycle_bijective_maps_is_cycle_bijective(seed in any::<u64>()) {
        // isomorphisms are cycle-bijective; so must be their composites
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = corpus::random_loopless_undirected(&mut rng, 4);
        let relabeled = gzeta_core::UndirectedGraph::from_halfarc_pairs(
            x.nodes().map(|n| NodeId(format!("s.{}", n))),
            x.halfarcs().map(|(id, h)| {
                (
                    format!("s.{}", id).into(),
                    gzeta_core::graph::HalfArc {
                        src: NodeId(format!("s.{}", h.src)),
                        tgt: NodeId(format!("s.{}", h.tgt)),
                        inv: format!("s.{}", h.inv).into(),
                    },
                )
            }),
        );
        let f = is_isomorphic_undirected(&x, &relabeled).expect("relabeling is an isomorphism");
        let g = is_isomorphic_undirected(&relabeled, &x).expect("and back");
        let gf = gzeta_core::graph::compose_undirected(&f, &g).unwrap();
        prop_assert!(validate_undirected_morphism(&gf, &x, &x).is_valid());
        let (failing, _) = zeta::least_failing_p_undirected(&f, &x, &relabeled, 4, false).unwrap();
        prop_assert!(failing.is_none());
        let (failing, _) = zeta::least_failing_p_undirected(&gf, &x, &x, 4, false).unwrap();
        prop_assert!(failing.is_none());
    }
}
