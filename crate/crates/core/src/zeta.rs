//! Counting invariants: closed-walk zeta functions, non-backtracking cycle
//! counts, the Ihara zeta function, and the weak-equivalence tests built on
//! them.
//!
//! All computation is exact. Series live in `Q[[t]]` truncated at a chosen
//! order; the rational forms are the reciprocal polynomials `det(I - tA)`
//! (directed) and `det(I - tB)` (undirected, `B` the half-arc
//! non-backtracking operator), computed by fraction-free elimination rather
//! than from the counts, so the two routes check each other.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{det_bareiss, det_i_minus_ta, IntMatrix, IntPolynomial, RationalPowerSeries};
use crate::exact::matrix::{mat_mul, trace};
use crate::graph::{
    standard, DirectedGraph, HalfArcId, UndirectedGraph, UndirectedMorphism,
};
use crate::homs::{enumerate_homs_directed, enumerate_homs_undirected};
use crate::par;

/// Number of closed walks of length `p`, i.e. morphisms from the directed
/// `p`-cycle. Computed as `tr(A^p)`.
pub fn closed_walk_count(x: &DirectedGraph, p: usize) -> Result<BigInt> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "walk length must be at least 1".into(),
        ));
    }
    Ok(closed_walk_counts(x, p).pop().expect("p >= 1"))
}

/// Closed-walk counts for every length `1..=pmax`, sharing the power
/// computation.
pub fn closed_walk_counts(x: &DirectedGraph, pmax: usize) -> Vec<BigInt> {
    let (_, a) = x.adjacency_matrix();
    let mut counts = Vec::with_capacity(pmax);
    let mut power = a.clone();
    for p in 1..=pmax {
        if p > 1 {
            power = mat_mul(&power, &a);
        }
        counts.push(trace(&power));
    }
    counts
}

/// Count morphisms from the directed `p`-cycle by brute enumeration. Slow;
/// kept as an independent check on the trace formula.
pub fn closed_walk_count_by_enumeration(x: &DirectedGraph, p: usize) -> Result<BigInt> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "walk length must be at least 1".into(),
        ));
    }
    Ok(BigInt::from(
        enumerate_homs_directed(&standard::directed_cycle(p), x).len(),
    ))
}

fn exp_of_counts(counts: &[BigInt], order: usize) -> Result<RationalPowerSeries> {
    let mut log = RationalPowerSeries::zero(order);
    for (i, n) in counts.iter().enumerate() {
        let p = i + 1;
        if p > order {
            break;
        }
        log.set_coeff(p, BigRational::new(n.clone(), BigInt::from(p)));
    }
    let series = log.exp()?;
    if !series.is_integral() {
        return Err(Error::Inconsistency(
            "zeta series must have integer coefficients".into(),
        ));
    }
    Ok(series)
}

/// The zeta series `exp(sum_p n_p t^p / p)` truncated at `order`, where
/// `n_p` counts closed walks of length `p`. Integrality of the result is
/// asserted, not assumed.
pub fn zeta_series(x: &DirectedGraph, order: usize) -> Result<RationalPowerSeries> {
    exp_of_counts(&closed_walk_counts(x, order), order)
}

/// The reciprocal `det(I - tA)` of the zeta function, as an exact integer
/// polynomial.
pub fn zeta_rational(x: &DirectedGraph) -> IntPolynomial {
    let (_, a) = x.adjacency_matrix();
    det_i_minus_ta(&a).expect("adjacency matrices are square")
}

/// Two directed graphs are weakly equivalent when every cycle counts the
/// same, equivalently when `det(I - tA)` agrees.
pub fn weak_equiv_directed(x: &DirectedGraph, y: &DirectedGraph) -> bool {
    zeta_rational(x) == zeta_rational(y)
}

/// The half-arc walk operator `M[a][b] = 1` iff `b` starts where `a` ends,
/// backtracking allowed. A morphism from the undirected `p`-cycle is the
/// same thing as a closed walk of half-arcs, so `|Hom(c^p_U, x)| = tr(M^p)`.
pub fn undirected_walk_operator(x: &UndirectedGraph) -> (Vec<HalfArcId>, IntMatrix) {
    let ids: Vec<HalfArcId> = x.halfarcs().map(|(id, _)| id.clone()).collect();
    let pos: BTreeMap<&HalfArcId, usize> = ids.iter().enumerate().map(|(i, n)| (n, i)).collect();
    let n = ids.len();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (ia, ha) in x.halfarcs() {
        for (ib, hb) in x.halfarcs() {
            if ha.tgt == hb.src {
                m[pos[ia]][pos[ib]] = BigInt::one();
            }
        }
    }
    (ids, m)
}

/// `|Hom(c^p_U, x)|` via the walk operator trace.
pub fn undirected_cycle_count(x: &UndirectedGraph, p: usize) -> Result<BigInt> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "cycle length must be at least 1".into(),
        ));
    }
    let (_, m) = undirected_walk_operator(x);
    let mut power = m.clone();
    for _ in 1..p {
        power = mat_mul(&power, &m);
    }
    Ok(trace(&power))
}

/// `det(I - tM)` for the walk operator: the reciprocal of the generating
/// exponential of all (backtracking allowed) cycle counts. Equality decides
/// weak equivalence of undirected graphs exactly.
pub fn uzeta_rational(x: &UndirectedGraph) -> IntPolynomial {
    let (_, m) = undirected_walk_operator(x);
    det_i_minus_ta(&m).expect("walk operators are square")
}

/// Undirected graphs are weakly equivalent when every undirected cycle
/// counts the same; decided via `det(I - tM)` for the walk operator.
pub fn weak_equiv_undirected(x: &UndirectedGraph, y: &UndirectedGraph) -> bool {
    uzeta_rational(x) == uzeta_rational(y)
}

/// All morphisms from the undirected `p`-cycle into `x`.
pub fn cycle_homs(x: &UndirectedGraph, p: usize) -> Result<Vec<UndirectedMorphism>> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "cycle length must be at least 1".into(),
        ));
    }
    Ok(enumerate_homs_undirected(&standard::undirected_cycle(p), x))
}

/// A cycle morphism backtracks when some step retraces the previous one:
/// `f([n+1]+) = inv f([n]+)` for some `n` (indices mod `p`).
pub fn is_backtracking(m: &UndirectedMorphism, p: usize) -> Result<bool> {
    for n in 0..p {
        let fwd = m.apply_halfarc(&format!("[{}]+", (n + 1) % p).into())?;
        let back = m.apply_halfarc(&format!("[{}]-", n).into())?;
        if fwd == back {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Non-backtracking cycle morphisms of length `p` into `x`.
pub fn nb_cycles(x: &UndirectedGraph, p: usize) -> Result<Vec<UndirectedMorphism>> {
    let homs = cycle_homs(x, p)?;
    let kept = par::map_ordered(homs, |m| {
        let bt = is_backtracking(&m, p).expect("cycle ids are fixed");
        (m, bt)
    });
    Ok(kept
        .into_iter()
        .filter_map(|(m, bt)| if bt { None } else { Some(m) })
        .collect())
}

/// `c_p`, the number of non-backtracking `p`-cycles in `x`.
pub fn nb_cycle_count(x: &UndirectedGraph, p: usize) -> Result<BigInt> {
    Ok(BigInt::from(nb_cycles(x, p)?.len()))
}

/// The half-arc non-backtracking operator: `B[a][b] = 1` iff `b` starts
/// where `a` ends and `b != inv(a)`. Only defined on loopless graphs; a
/// graph with loops (degenerate or not) is refused.
pub fn hashimoto_matrix(x: &UndirectedGraph) -> Result<(Vec<HalfArcId>, IntMatrix)> {
    if x.has_loops() {
        return Err(Error::HasLoops(
            "the non-backtracking operator needs a loopless graph".into(),
        ));
    }
    let ids: Vec<HalfArcId> = x.halfarcs().map(|(id, _)| id.clone()).collect();
    let pos: BTreeMap<&HalfArcId, usize> = ids.iter().enumerate().map(|(i, n)| (n, i)).collect();
    let n = ids.len();
    let mut b = vec![vec![BigInt::zero(); n]; n];
    for (ia, ha) in x.halfarcs() {
        for (ib, hb) in x.halfarcs() {
            if ha.tgt == hb.src && *ib != ha.inv {
                b[pos[ia]][pos[ib]] = BigInt::one();
            }
        }
    }
    Ok((ids, b))
}

/// `tr(B^p)` for the Hashimoto operator; on loopless graphs this equals the
/// non-backtracking cycle count, which the enumeration route verifies in
/// tests.
pub fn hashimoto_count(x: &UndirectedGraph, p: usize) -> Result<BigInt> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "cycle length must be at least 1".into(),
        ));
    }
    let (_, b) = hashimoto_matrix(x)?;
    let mut power = b.clone();
    for _ in 1..p {
        power = mat_mul(&power, &b);
    }
    Ok(trace(&power))
}

/// The Ihara zeta series `exp(sum_p c_p t^p / p)` with `c_p` the
/// non-backtracking cycle counts, obtained by enumeration so that graphs
/// with loops are covered too.
pub fn ihara_series(x: &UndirectedGraph, order: usize) -> Result<RationalPowerSeries> {
    let counts: Vec<BigInt> = (1..=order)
        .map(|p| nb_cycle_count(x, p))
        .collect::<Result<_>>()?;
    exp_of_counts(&counts, order)
}

/// `det(I - tB)`, the reciprocal of the Ihara zeta function. Loopless
/// graphs only, like [`hashimoto_matrix`].
pub fn ihara_rational(x: &UndirectedGraph) -> Result<IntPolynomial> {
    let (_, b) = hashimoto_matrix(x)?;
    det_i_minus_ta(&b)
}

/// Both sides of the Bass determinant identity
/// `det(I - tB) = (1 - t^2)^(E - V) det(I - tA + t^2 (D - I))`,
/// cross-multiplied so a negative exponent needs no rational arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BassIdentity {
    /// `det(I - tB)`
    pub det_hashimoto: IntPolynomial,
    /// `det(I - tA + t^2 (D - I))`
    pub vertex_part: IntPolynomial,
    /// `E - V`: arc orbits minus nodes
    pub edge_exponent: i64,
    pub holds: bool,
}

pub fn bass_identity(x: &UndirectedGraph) -> Result<BassIdentity> {
    let det_hashimoto = ihara_rational(x)?;
    let nodes: Vec<_> = x.nodes().cloned().collect();
    let (_, a) = x.adjacency_matrix();
    let n = nodes.len();
    let mut m = vec![vec![IntPolynomial::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            // I - tA + t^2 (D - I)
            let mut c0 = BigInt::zero();
            let mut c2 = BigInt::zero();
            if i == j {
                c0 = BigInt::one();
                c2 = BigInt::from(x.degree(&nodes[i])) - BigInt::one();
            }
            m[i][j] = IntPolynomial::new(vec![c0, -a[i][j].clone(), c2]);
        }
    }
    let vertex_part = det_bareiss(m)?;
    let edge_exponent = x.arc_count() as i64 - n as i64;
    let one_minus_t2 = IntPolynomial::new(vec![
        BigInt::one(),
        BigInt::zero(),
        -BigInt::one(),
    ]);
    let (mut lhs, mut rhs) = (det_hashimoto.clone(), vertex_part.clone());
    for _ in 0..edge_exponent.max(0) {
        rhs = &rhs * &one_minus_t2;
    }
    for _ in 0..(-edge_exponent).max(0) {
        lhs = &lhs * &one_minus_t2;
    }
    Ok(BassIdentity {
        det_hashimoto,
        vertex_part,
        edge_exponent,
        holds: lhs == rhs,
    })
}

/// The Moebius function on positive integers.
pub fn mobius(n: u64) -> i64 {
    assert!(n > 0, "mobius is defined on positive integers");
    let mut n = n;
    let mut primes = 0;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            primes += 1;
        }
        d += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Moebius inversion of a count sequence `n_1..n_pmax` (1-indexed by
/// position): `m_l = (1/l) sum_{d | l} mu(l/d) n_d`. Fails if any
/// multiplicity comes out negative or fractional, which would mean the
/// counts are not cycle counts of any graph.
pub fn invert_counts(counts: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut mult = Vec::with_capacity(counts.len());
    for l in 1..=counts.len() {
        let mut acc = BigInt::zero();
        for d in divisors(l) {
            acc += BigInt::from(mobius((l / d) as u64)) * &counts[d - 1];
        }
        let (q, r) = num::Integer::div_rem(&acc, &BigInt::from(l));
        if !r.is_zero() || q.is_negative() {
            return Err(Error::Inconsistency(format!(
                "multiplicity at length {} is not a nonnegative integer",
                l
            )));
        }
        mult.push(q);
    }
    Ok(mult)
}

/// Inverse of [`invert_counts`]: `n_p = sum_{l | p} l m_l`.
pub fn reconstruct_counts(mult: &[BigInt]) -> Vec<BigInt> {
    (1..=mult.len())
        .map(|p| {
            divisors(p)
                .into_iter()
                .map(|l| BigInt::from(l) * &mult[l - 1])
                .sum()
        })
        .collect()
}

/// Multiplicities of primitive closed walks up to length `lmax` in a
/// directed graph, i.e. counts of cyclic walks up to rotation that are not
/// proper powers.
pub fn primitive_multiplicities(x: &DirectedGraph, lmax: usize) -> Result<Vec<BigInt>> {
    invert_counts(&closed_walk_counts(x, lmax))
}

/// Row of a hom profile: at each length with at least one primitive cycle
/// in `x`, how many morphisms the cycles of that length admit into `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileRow {
    pub length: usize,
    /// primitive cycles of this length in the source
    pub multiplicity: BigInt,
    /// morphisms from the length-`length` cycle into the target
    pub hom_count: BigInt,
}

/// For every length `l <= lmax` where `x` has a primitive cycle, count the
/// morphisms `c_l -> y`. Equal profiles for `(x, y)` and `(y, x)` over a
/// sufficient bound witness a zigzag of trivial cofibrations; unequal cycle
/// counts rule one out.
pub fn homotopy_hom_profile(
    x: &DirectedGraph,
    y: &DirectedGraph,
    lmax: usize,
) -> Result<Vec<ProfileRow>> {
    let mult_x = primitive_multiplicities(x, lmax)?;
    let mult_y = primitive_multiplicities(y, lmax)?;
    let mut rows = Vec::new();
    for (i, m) in mult_x.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        let l = i + 1;
        let hom_count = divisors(l)
            .into_iter()
            .map(|k| BigInt::from(k) * &mult_y[k - 1])
            .sum();
        rows.push(ProfileRow {
            length: l,
            multiplicity: m.clone(),
            hom_count,
        });
    }
    Ok(rows)
}

/// How `h -> f . h` acts on the cycles of one length: counts on both
/// sides, injectivity and surjectivity of the induced map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleMapCheck {
    pub p: usize,
    pub domain_count: usize,
    pub codomain_count: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl CycleMapCheck {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

fn induced_map_check<M: Ord>(p: usize, images: Vec<M>, codomain: Vec<M>) -> CycleMapCheck {
    let domain_count = images.len();
    let codomain_count = codomain.len();
    let image_set: std::collections::BTreeSet<M> = images.into_iter().collect();
    let codomain_set: std::collections::BTreeSet<M> = codomain.into_iter().collect();
    debug_assert!(image_set.is_subset(&codomain_set));
    CycleMapCheck {
        p,
        domain_count,
        codomain_count,
        injective: image_set.len() == domain_count,
        surjective: image_set.len() == codomain_count,
    }
}

/// Check whether composition with `f: x -> y` is a bijection from the
/// length-`p` cycles of `x` to those of `y`. `nb_only` restricts both
/// sides to non-backtracking cycles.
pub fn cycle_map_check_undirected(
    f: &UndirectedMorphism,
    x: &UndirectedGraph,
    y: &UndirectedGraph,
    p: usize,
    nb_only: bool,
) -> Result<CycleMapCheck> {
    let (dom, cod) = if nb_only {
        (nb_cycles(x, p)?, nb_cycles(y, p)?)
    } else {
        (cycle_homs(x, p)?, cycle_homs(y, p)?)
    };
    let images = dom
        .iter()
        .map(|h| crate::graph::morphism::compose_undirected(h, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(induced_map_check(p, images, cod))
}

/// Least `p <= pmax` where composition with `f` fails to be a bijection on
/// cycles, together with the per-length evidence.
pub fn least_failing_p_undirected(
    f: &UndirectedMorphism,
    x: &UndirectedGraph,
    y: &UndirectedGraph,
    pmax: usize,
    nb_only: bool,
) -> Result<(Option<usize>, Vec<CycleMapCheck>)> {
    let mut checks = Vec::with_capacity(pmax);
    let mut failing = None;
    for p in 1..=pmax {
        let c = cycle_map_check_undirected(f, x, y, p, nb_only)?;
        if !c.bijective() && failing.is_none() {
            failing = Some(p);
        }
        checks.push(c);
    }
    Ok((failing, checks))
}

/// Directed version of [`cycle_map_check_undirected`].
pub fn cycle_map_check_directed(
    f: &crate::graph::DirectedMorphism,
    x: &DirectedGraph,
    y: &DirectedGraph,
    p: usize,
) -> Result<CycleMapCheck> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "cycle length must be at least 1".into(),
        ));
    }
    let cp = standard::directed_cycle(p);
    let dom = enumerate_homs_directed(&cp, x);
    let cod = enumerate_homs_directed(&cp, y);
    let images = dom
        .iter()
        .map(|h| crate::graph::morphism::compose_directed(h, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(induced_map_check(p, images, cod))
}

pub fn least_failing_p_directed(
    f: &crate::graph::DirectedMorphism,
    x: &DirectedGraph,
    y: &DirectedGraph,
    pmax: usize,
) -> Result<(Option<usize>, Vec<CycleMapCheck>)> {
    let mut checks = Vec::with_capacity(pmax);
    let mut failing = None;
    for p in 1..=pmax {
        let c = cycle_map_check_directed(f, x, y, p)?;
        if !c.bijective() && failing.is_none() {
            failing = Some(p);
        }
        checks.push(c);
    }
    Ok((failing, checks))
}
