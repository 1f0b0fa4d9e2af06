//! Cross-checks between independent computation routes on fixed seeds and
//! frozen expected values. Every count that the fast linear-algebra path
//! produces is re-derived here by explicit enumeration.

use gzeta_core::cover::{covering_weak_equiv, Covering};
use gzeta_core::exact::{IntPolynomial, RationalPowerSeries};
use gzeta_core::graph::morphism::compose_undirected;
use gzeta_core::graph::{is_isomorphic_undirected, standard, UndirectedMorphism};
use gzeta_core::gset::{cayley_undirected, colored_to_gset, covering_to_bouquet, gset_isomorphic};
use gzeta_core::{corpus, zeta};
use num::BigInt;

#[test]
fn trace_formula_matches_enumeration() {
    for g in corpus::directed_corpus(101, 25) {
        let counts = zeta::closed_walk_counts(&g, 6);
        for p in 1..=6 {
            assert_eq!(
                counts[p - 1],
                zeta::closed_walk_count_by_enumeration(&g, p).unwrap(),
                "length {} on {:?}",
                p,
                g
            );
        }
    }
}

#[test]
fn zeta_series_inverts_its_reciprocal() {
    for g in corpus::directed_corpus(102, 25) {
        let order = 10;
        let series = zeta::zeta_series(&g, order).unwrap();
        let recip = RationalPowerSeries::from_polynomial(&zeta::zeta_rational(&g), order);
        assert!(series.mul(&recip).is_one(), "on {:?}", g);
    }
}

#[test]
fn walk_operator_matches_undirected_enumeration() {
    for g in corpus::loopless_corpus(103, 15) {
        for p in 1..=5 {
            assert_eq!(
                zeta::undirected_cycle_count(&g, p).unwrap(),
                BigInt::from(zeta::cycle_homs(&g, p).unwrap().len()),
            );
        }
    }
}

#[test]
fn hashimoto_matches_enumeration_and_bass_holds() {
    for g in corpus::loopless_corpus(104, 15) {
        for p in 1..=6 {
            assert_eq!(
                zeta::hashimoto_count(&g, p).unwrap(),
                zeta::nb_cycle_count(&g, p).unwrap(),
            );
        }
        assert!(zeta::bass_identity(&g).unwrap().holds, "on {:?}", g);
    }
}

#[test]
fn ihara_reciprocal_of_triangle_is_frozen() {
    let p = zeta::ihara_rational(&standard::undirected_cycle(3)).unwrap();
    // (1 - t^3)^2
    assert_eq!(p, IntPolynomial::from_i64(&[1, 0, 0, -2, 0, 0, 1]));
}

#[test]
fn bouquet_multiplicities_are_frozen() {
    // the undirected route: invert the walk counts of the 2-bouquet
    let b2 = standard::bouquet(2);
    let counts: Vec<BigInt> = (1..=4)
        .map(|p| zeta::undirected_cycle_count(&b2, p).unwrap())
        .collect();
    let mults = zeta::invert_counts(&counts).unwrap();
    assert_eq!(mults, [2, 1, 2, 3].map(BigInt::from).to_vec());
    assert_eq!(zeta::reconstruct_counts(&mults), counts);
}

#[test]
fn coverings_compose() {
    // the two cycle quotients [n] -> [n mod m] stack into one covering
    let quotient = |total: usize, base: usize| -> UndirectedMorphism {
        UndirectedMorphism {
            node_map: (0..total)
                .map(|n| (format!("[{}]", n).into(), format!("[{}]", n % base).into()))
                .collect(),
            halfarc_map: (0..total)
                .flat_map(|n| {
                    ["+", "-"].map(|s| {
                        (
                            format!("[{}]{}", n, s).into(),
                            format!("[{}]{}", n % base, s).into(),
                        )
                    })
                })
                .collect(),
        }
    };
    let c8 = standard::undirected_cycle(8);
    let c2 = standard::undirected_cycle(2);
    let stacked = compose_undirected(&quotient(8, 4), &quotient(4, 2)).unwrap();
    let cov = Covering::new(c8, c2, stacked).unwrap();
    assert!(cov.is_covering());
    assert_eq!(cov.degree(), Some(4));
}

#[test]
fn colored_actions_round_trip() {
    for action in corpus::involutive_corpus(105, 10, 3, true) {
        let cov = covering_to_bouquet(&action).unwrap();
        assert!(cov.is_covering());
        assert_eq!(cov.degree(), Some(action.carrier.len()));
        let back = colored_to_gset(&cov).unwrap();
        assert!(gset_isomorphic(&action, &back).unwrap().is_some());
        let cayley = cayley_undirected(&back).unwrap();
        assert!(is_isomorphic_undirected(&cayley.graph, &cov.total).is_some());
    }
}

/// The alternating 2-coloring of the even cycle, rotated by `shift`.
fn even_cycle_coloring(len: usize, shift: usize) -> Covering {
    let map = UndirectedMorphism {
        node_map: (0..len)
            .map(|n| (format!("[{}]", n).into(), "*".into()))
            .collect(),
        halfarc_map: (0..len)
            .flat_map(|n| {
                ["+", "-"].map(|s| {
                    (
                        format!("[{}]{}", n, s).into(),
                        format!("a{}", (n + shift) % 2).into(),
                    )
                })
            })
            .collect(),
    };
    Covering::new(standard::undirected_cycle(len), standard::bouquet(2), map).unwrap()
}

#[test]
fn covering_equivalences_preserve_ihara_series() {
    // the common cover of the two alternating colorings of the octagon maps
    // isomorphically onto either one; that map is a weak equivalence of
    // coverings, and the Ihara series of its two ends agree
    let left = even_cycle_coloring(8, 0);
    let right = even_cycle_coloring(8, 1);
    let (to_left, _) =
        gzeta_core::cover::common_cover(&left, &right, &"[0]".into(), &"[1]".into()).unwrap();
    let composite = Covering::new(
        to_left.total.clone(),
        left.base.clone(),
        compose_undirected(&to_left.map, &left.map).unwrap(),
    )
    .unwrap();
    let report = covering_weak_equiv(&to_left.map, &composite, &left, 8).unwrap();
    assert!(report.bounded_bijective());
    assert_eq!(
        zeta::ihara_series(&composite.total, 8).unwrap(),
        zeta::ihara_series(&left.total, 8).unwrap()
    );
    // and an identity comparison on a random coloring for good measure
    for action in corpus::involutive_corpus(106, 4, 2, false) {
        let cov = covering_to_bouquet(&action).unwrap();
        let id = gzeta_core::graph::identity_undirected(&cov.total);
        let report = covering_weak_equiv(&id, &cov, &cov, 8).unwrap();
        assert!(report.bounded_bijective());
    }
}
