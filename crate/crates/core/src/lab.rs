//! Executable counterexample demos. Each demo is a list of claims, and
//! every verdict is the outcome of an exact computation run on the spot;
//! the note records what the arithmetic does and does not establish.

use serde::Serialize;

use crate::cat;
use crate::dessin;
use crate::error::{Error, Result};
use crate::exact::poly::IntPolynomial;
use crate::graph::iso::is_isomorphic_undirected;
use crate::graph::{
    standard, validate_undirected_morphism, UndirectedGraph, UndirectedMorphism,
};
use crate::gset::{cayley_directed, gset_isomorphic, weak_equiv_gsets};
use crate::zeta::{self, CycleMapCheck};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DemoItem {
    pub claim: String,
    pub evidence: String,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DemoReport {
    pub demo: String,
    pub note: String,
    pub items: Vec<DemoItem>,
}

impl DemoReport {
    pub fn all_green(&self) -> bool {
        self.items.iter().all(|i| i.verdict)
    }

    /// Deterministic bytes: field order is fixed and all maps upstream are
    /// ordered, so repeated runs serialize identically.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("demo {}\n", self.demo);
        for item in &self.items {
            let mark = if item.verdict { "ok" } else { "!!" };
            out.push_str(&format!("[{}] {}: {}\n", mark, item.claim, item.evidence));
        }
        out.push_str(&format!("note: {}\n", self.note));
        out
    }
}

/// The elementary folding: the two arcs of the cherry land on the single
/// arc, the two leaves on one endpoint.
pub fn folding() -> (UndirectedGraph, UndirectedGraph, UndirectedMorphism) {
    let cherry = standard::cherry();
    let arc = standard::undirected_arc();
    let f = UndirectedMorphism {
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
    debug_assert!(validate_undirected_morphism(&f, &cherry, &arc).is_valid());
    (cherry, arc, f)
}

/// The cherry sitting inside the digon: both arcs become the two distinct
/// arcs of the 2-cycle.
pub fn digon_inclusion() -> (UndirectedGraph, UndirectedGraph, UndirectedMorphism) {
    let cherry = standard::cherry();
    let digon = standard::undirected_cycle(2);
    let l = UndirectedMorphism {
        node_map: [
            ("v1".into(), "[0]".into()),
            ("v2".into(), "[1]".into()),
            ("v3".into(), "[1]".into()),
        ]
        .into(),
        halfarc_map: [
            ("b1".into(), "[0]+".into()),
            ("b2".into(), "[0]-".into()),
            ("c1".into(), "[1]-".into()),
            ("c2".into(), "[1]+".into()),
        ]
        .into(),
    };
    debug_assert!(validate_undirected_morphism(&l, &cherry, &digon).is_valid());
    (cherry, digon, l)
}

/// The digon collapsing onto the single arc: both its arcs become the same
/// one.
pub fn digon_collapse() -> (UndirectedGraph, UndirectedGraph, UndirectedMorphism) {
    let digon = standard::undirected_cycle(2);
    let arc = standard::undirected_arc();
    let m = UndirectedMorphism {
        node_map: [("[0]".into(), "u1".into()), ("[1]".into(), "u2".into())].into(),
        halfarc_map: [
            ("[0]+".into(), "a1".into()),
            ("[0]-".into(), "a2".into()),
            ("[1]+".into(), "a2".into()),
            ("[1]-".into(), "a1".into()),
        ]
        .into(),
    };
    debug_assert!(validate_undirected_morphism(&m, &digon, &arc).is_valid());
    (digon, arc, m)
}

/// Bounded cycle analysis of one undirected morphism: per-length check
/// records, the least length where composition fails to biject, and an
/// isomorphism witness when nothing fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapCycleAnalysis {
    pub bound: usize,
    pub least_failing: Option<usize>,
    pub checks: Vec<CycleMapCheck>,
    pub iso: Option<UndirectedMorphism>,
}

/// Runs the per-length bijectivity checks up to `bound`, defaulting to the
/// total number of arcs on both sides.
pub fn cycle_analysis(
    f: &UndirectedMorphism,
    x: &UndirectedGraph,
    y: &UndirectedGraph,
    bound: Option<usize>,
) -> Result<MapCycleAnalysis> {
    let diag = validate_undirected_morphism(f, x, y);
    if !diag.is_valid() {
        return Err(Error::InvalidMorphism(diag.to_string()));
    }
    let bound = bound.unwrap_or_else(|| x.arc_orbits().len() + y.arc_orbits().len()).max(1);
    let (least_failing, checks) = zeta::least_failing_p_undirected(f, x, y, bound, false)?;
    let iso = if least_failing.is_none() {
        is_isomorphic_undirected(x, y)
    } else {
        None
    };
    Ok(MapCycleAnalysis {
        bound,
        least_failing,
        checks,
        iso,
    })
}

/// The `prop-4-8` demo: cycle-count bijectivity is a genuine condition on a
/// morphism, failing maps fail at a definite least length, and passing does
/// not require the map itself to be invertible.
pub fn demo_prop_4_8() -> DemoReport {
    let mut items = Vec::new();

    let (cherry, arc, f) = folding();
    let fold = cycle_analysis(&f, &cherry, &arc, Some(8)).expect("folding is a valid morphism");
    let fold_check = &fold.checks[1];
    items.push(DemoItem {
        claim: "the elementary folding fails cycle bijectivity at length 2".into(),
        evidence: format!(
            "least failing length {:?}: {} cycles upstairs, {} downstairs",
            fold.least_failing, fold_check.domain_count, fold_check.codomain_count
        ),
        verdict: fold.least_failing == Some(2)
            && fold_check.domain_count == 4
            && fold_check.codomain_count == 2,
    });

    let digon = standard::undirected_cycle(2);
    let square = standard::undirected_cycle(4);
    let q = UndirectedMorphism {
        node_map: (0..4)
            .map(|n| (format!("[{}]", n).into(), format!("[{}]", n % 2).into()))
            .collect(),
        halfarc_map: (0..4)
            .flat_map(|n| {
                [
                    (
                        format!("[{}]+", n).into(),
                        format!("[{}]+", n % 2).into(),
                    ),
                    (
                        format!("[{}]-", n).into(),
                        format!("[{}]-", n % 2).into(),
                    ),
                ]
            })
            .collect(),
    };
    let quot = cycle_analysis(&q, &square, &digon, Some(8)).expect("quotient is a valid morphism");
    let quot_check = &quot.checks[1];
    items.push(DemoItem {
        claim: "the double cover of the digon fails despite equal counts at length 2".into(),
        evidence: format!(
            "length 2 counts {} vs {}, injective: {}, surjective: {}",
            quot_check.domain_count,
            quot_check.codomain_count,
            quot_check.injective,
            quot_check.surjective
        ),
        verdict: quot.least_failing == Some(2)
            && quot_check.domain_count == 8
            && quot_check.codomain_count == 8
            && !quot_check.injective
            && !quot_check.surjective,
    });

    let triangle = standard::undirected_cycle(3);
    let id = crate::graph::identity_undirected(&triangle);
    let ident = cycle_analysis(&id, &triangle, &triangle, Some(8)).expect("identity is valid");
    items.push(DemoItem {
        claim: "the identity on the triangle passes every length and is an isomorphism".into(),
        evidence: format!(
            "no failing length up to {}; isomorphism witness found: {}",
            ident.bound,
            ident.iso.is_some()
        ),
        verdict: ident.least_failing.is_none() && ident.iso.is_some(),
    });

    DemoReport {
        demo: "prop-4-8".into(),
        note: "bijectivity of cycle composition is checked length by length; a map can \
               preserve counts yet scramble the cycles, and the least failing length is \
               reported exactly"
            .into(),
        items,
    }
}

/// The `theorem-4-9` demo: with non-backtracking counting the elementary
/// folding looks like an equivalence, but pushing out or pulling back along
/// it changes the counts, so this class of maps is not stable under either
/// construction.
pub fn demo_theorem_4_9() -> DemoReport {
    let mut items = Vec::new();
    let (cherry, arc, f) = folding();

    let nb = |g: &UndirectedGraph, p: usize| {
        zeta::nb_cycle_count(g, p).expect("positive length")
    };
    let zero = num::BigInt::from(0);
    let all_zero = (1..=8).all(|p| nb(&cherry, p) == zero && nb(&arc, p) == zero);
    items.push(DemoItem {
        claim: "the folding has no non-backtracking cycles on either side".into(),
        evidence: "counts vanish for every length from 1 to 8 on the cherry and on the arc"
            .into(),
        verdict: all_zero,
    });

    let (_, digon, l) = digon_inclusion();
    let (po, _, _) = cat::pushout_undirected(&l, &f, &cherry, &digon, &arc)
        .expect("spans of valid morphisms push out");
    let before = nb(&digon, 2);
    let after = nb(&po, 2);
    items.push(DemoItem {
        claim: "pushing the digon out along the folding kills its 2-cycles".into(),
        evidence: format!(
            "non-backtracking 2-cycles: {} before, {} after; the pushout is a single arc: {}",
            before,
            after,
            is_isomorphic_undirected(&po, &arc).is_some()
        ),
        verdict: before == num::BigInt::from(4)
            && after == zero
            && is_isomorphic_undirected(&po, &arc).is_some(),
    });

    let (digon2, arc2, m) = digon_collapse();
    let (pb, _, leg) = cat::pullback_undirected(&f, &m, &cherry, &digon2, &arc2)
        .expect("cospans of valid morphisms pull back");
    let up = nb(&pb, 2);
    let down = nb(&digon2, 2);
    items.push(DemoItem {
        claim: "pulling the folding back along the digon collapse doubles the 2-cycles".into(),
        evidence: format!(
            "the pullback has {} nodes and {} arcs; non-backtracking 2-cycles: {} upstairs, {} under the projection",
            pb.node_count(),
            pb.arc_orbits().len(),
            up,
            down
        ),
        verdict: pb.node_count() == 3
            && pb.arc_orbits().len() == 4
            && up == num::BigInt::from(8)
            && down == num::BigInt::from(4)
            && validate_undirected_morphism(&leg, &pb, &digon2).is_valid(),
    });

    DemoReport {
        demo: "theorem-4-9".into(),
        note: "an obstruction run: maps with vanishing non-backtracking counts on both \
               sides are not preserved by pushout or pullback, so no properness argument \
               can treat them as weak equivalences; the demo certifies the counts, not \
               the categorical conclusion"
            .into(),
        items,
    }
}

/// The `dessins-d0-d1` demo: two dessins with the same zeta data that are
/// not isomorphic, so cycle counting cannot recover the number of edges.
pub fn demo_dessins_d0_d1() -> DemoReport {
    let a = dessin::d0();
    let b = dessin::d1();
    let za = zeta::zeta_rational(&cayley_directed(a.action()).expect("valid action").graph);
    let zb = zeta::zeta_rational(&cayley_directed(b.action()).expect("valid action").graph);
    let expected = IntPolynomial::from_i64(&[1, -2]);

    let mut items = Vec::new();
    items.push(DemoItem {
        claim: "both Cayley zeta reciprocals equal 1 - 2t".into(),
        evidence: format!("D_0: {}, D_1: {}", za, zb),
        verdict: za == expected && zb == expected,
    });

    let weq = weak_equiv_gsets(a.action(), b.action()).expect("same generator names");
    let pow2 = (1..=6).all(|p| {
        let n = |d: &dessin::Dessin| {
            zeta::closed_walk_count(&cayley_directed(d.action()).expect("valid").graph, p)
                .expect("positive length")
        };
        n(&a) == n(&b) && n(&a) == num::BigInt::from(1u32 << p)
    });
    items.push(DemoItem {
        claim: "the two dessins are weakly equivalent".into(),
        evidence: "equal reciprocals, and both count 2^p closed walks for every length up to 6"
            .into(),
        verdict: weq && pow2,
    });

    let iso = gset_isomorphic(a.action(), b.action()).expect("same generator names");
    items.push(DemoItem {
        claim: "the two dessins are not isomorphic".into(),
        evidence: format!(
            "carriers have sizes {} and {}; exhaustive equivariant search finds no bijection",
            a.edges().len(),
            b.edges().len()
        ),
        verdict: iso.is_none(),
    });

    let pa = dessin::dessin_passport(&a);
    let pb = dessin::dessin_passport(&b);
    items.push(DemoItem {
        claim: "their passports already differ".into(),
        evidence: format!(
            "white/black/faces {:?}/{:?}/{:?} vs {:?}/{:?}/{:?}",
            pa.white, pa.black, pa.faces, pb.white, pb.black, pb.faces
        ),
        verdict: pa != pb,
    });

    DemoReport {
        demo: "dessins-d0-d1".into(),
        note: "a weak equivalence that is not an isomorphism: zeta data is blind to the \
               number of edges of a dessin"
            .into(),
        items,
    }
}

pub fn demo_by_name(name: &str) -> Result<DemoReport> {
    match name {
        "prop-4-8" => Ok(demo_prop_4_8()),
        "theorem-4-9" => Ok(demo_theorem_4_9()),
        "dessins-d0-d1" => Ok(demo_dessins_d0_d1()),
        other => Err(Error::InvalidParameter(format!(
            "unknown demo `{}` (expected prop-4-8, theorem-4-9 or dessins-d0-d1)",
            other
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_maps_are_valid() {
        let (x, y, f) = folding();
        assert!(validate_undirected_morphism(&f, &x, &y).is_valid());
        let (x, y, l) = digon_inclusion();
        assert!(validate_undirected_morphism(&l, &x, &y).is_valid());
        let (x, y, m) = digon_collapse();
        assert!(validate_undirected_morphism(&m, &x, &y).is_valid());
    }

    #[test]
    fn all_demos_are_green() {
        for name in ["prop-4-8", "theorem-4-9", "dessins-d0-d1"] {
            let report = demo_by_name(name).unwrap();
            assert!(report.all_green(), "{}", report.to_text());
        }
        assert!(demo_by_name("nope").is_err());
    }

    #[test]
    fn demo_json_is_reproducible() {
        for name in ["prop-4-8", "theorem-4-9", "dessins-d0-d1"] {
            let a = demo_by_name(name).unwrap().to_json_string();
            let b = demo_by_name(name).unwrap().to_json_string();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn cycle_analysis_defaults_its_bound() {
        let (x, y, f) = folding();
        let analysis = cycle_analysis(&f, &x, &y, None).unwrap();
        assert_eq!(analysis.bound, 3);
        assert_eq!(analysis.least_failing, Some(2));
    }
}
