//! Two-sided complexes: involutive actions equipped with a choice of
//! positive side that every generator swaps with the negative side. The
//! undirected Cayley graph of such an action is bipartite on the sides,
//! and its even non-backtracking cycles carry ramification data.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::HalfArcId;
use crate::gset::{cayley_undirected, GSetAction, GroupKind};
use crate::zeta;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisComplex {
    pub action: GSetAction,
    pub plus: BTreeSet<String>,
}

impl GaloisComplex {
    pub fn new(action: GSetAction, plus: impl IntoIterator<Item = String>) -> Result<Self> {
        let complex = GaloisComplex {
            action,
            plus: plus.into_iter().collect(),
        };
        complex.validate()?;
        Ok(complex)
    }

    pub fn validate(&self) -> Result<()> {
        self.action.validate()?;
        if self.action.kind != GroupKind::Involutive {
            return Err(Error::InvalidAction(
                "a two-sided complex is an involutive action".into(),
            ));
        }
        for x in &self.plus {
            if !self.action.carrier.contains(x) {
                return Err(Error::InvalidAction(format!(
                    "positive element `{}` is not in the carrier",
                    x
                )));
            }
        }
        for (name, table) in &self.action.generators {
            for x in &self.action.carrier {
                if self.plus.contains(x) == self.plus.contains(&table[x]) {
                    return Err(Error::InvalidAction(format!(
                        "generator `{}` keeps `{}` on its side",
                        name, x
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn minus(&self) -> BTreeSet<&String> {
        self.action
            .carrier
            .iter()
            .filter(|x| !self.plus.contains(*x))
            .collect()
    }
}

/// Parses `{"action":{..},"plus":[..]}`.
pub fn complex_from_str(s: &str) -> Result<GaloisComplex> {
    let complex: GaloisComplex = serde_json::from_str(s)?;
    complex.validate()?;
    Ok(complex)
}

pub fn complex_to_string(complex: &GaloisComplex) -> String {
    serde_json::to_string(complex).expect("serializable")
}

/// The doubled point: two elements swapped by each of `n + 1` generators
/// `a0 .. an`.
pub fn doubled(n: usize) -> GaloisComplex {
    let swap: BTreeMap<String, String> = [
        ("S+".to_owned(), "S-".to_owned()),
        ("S-".to_owned(), "S+".to_owned()),
    ]
    .into();
    let generators = (0..=n).map(|i| (format!("a{}", i), swap.clone())).collect();
    GaloisComplex::new(
        GSetAction::new(
            GroupKind::Involutive,
            ["S+".to_owned(), "S-".to_owned()],
            generators,
        )
        .unwrap(),
        ["S+".to_owned()],
    )
    .unwrap()
}

/// The induced free action on the positive side: for each generator `a`
/// beyond the least one `a0`, the composite `a0 then a` restricted to the
/// positive elements, named `a0.a`.
pub fn plus_action(complex: &GaloisComplex) -> Result<GSetAction> {
    complex.validate()?;
    let mut names = complex.action.generators.keys();
    let base = names.next().ok_or_else(|| {
        Error::InvalidAction("a two-sided complex needs at least one generator".into())
    })?;
    let base_table = &complex.action.generators[base];
    let generators: BTreeMap<String, BTreeMap<String, String>> = names
        .map(|a| {
            let table = complex
                .plus
                .iter()
                .map(|x| {
                    let across = &base_table[x];
                    (x.clone(), complex.action.generators[a][across].clone())
                })
                .collect();
            (format!("{}.{}", base, a), table)
        })
        .collect();
    GSetAction::new(GroupKind::Free, complex.plus.iter().cloned(), generators)
}

/// One geometric non-backtracking cycle of the Cayley graph, reported with
/// the generators it uses. `degree` is the candidate ramification degree
/// `length / 2`, present only when the cycle misses at least one generator;
/// when it misses exactly one the corresponding branch point cannot be told
/// apart from its neighbors, which `vertex_ambiguous` records.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamificationEntry {
    pub cycle: Vec<HalfArcId>,
    pub length: usize,
    pub colors: BTreeSet<String>,
    pub degree: Option<usize>,
    pub vertex_ambiguous: bool,
}

/// Rotations and the reversed traversal describe the same geometric cycle;
/// pick the least sequence as canonical.
fn canonical_cycle(seq: &[HalfArcId], inv: impl Fn(&HalfArcId) -> HalfArcId) -> Vec<HalfArcId> {
    let len = seq.len();
    let reversed: Vec<HalfArcId> = seq.iter().rev().map(inv).collect();
    let mut best: Option<Vec<HalfArcId>> = None;
    for start in 0..len {
        for candidate in [seq, reversed.as_slice()] {
            let rotated: Vec<HalfArcId> = (0..len)
                .map(|i| candidate[(start + i) % len].clone())
                .collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.expect("cycles are nonempty")
}

/// All geometric non-backtracking cycles of length up to `2 * max_degree`,
/// one entry each. Odd-length cycles would contradict two-sidedness and are
/// reported as an inconsistency rather than silently dropped.
pub fn ramification_profile(
    complex: &GaloisComplex,
    max_degree: usize,
) -> Result<Vec<RamificationEntry>> {
    complex.validate()?;
    let cayley = cayley_undirected(&complex.action)?;
    if cayley.graph.has_loops() {
        return Err(Error::Inconsistency(
            "side-swapping generators cannot produce loops".into(),
        ));
    }
    let n_upper = complex.action.generators.len().saturating_sub(1);
    let mut entries = Vec::new();
    for len in 1..=(2 * max_degree) {
        let cycles = zeta::nb_cycles(&cayley.graph, len)?;
        if len % 2 == 1 {
            if !cycles.is_empty() {
                return Err(Error::Inconsistency(format!(
                    "found a non-backtracking cycle of odd length {} in a two-sided complex",
                    len
                )));
            }
            continue;
        }
        let mut seen: BTreeSet<Vec<HalfArcId>> = BTreeSet::new();
        for m in &cycles {
            let seq: Vec<HalfArcId> = (0..len)
                .map(|i| m.halfarc_map[&HalfArcId::from(format!("[{}]+", i))].clone())
                .collect();
            seen.insert(canonical_cycle(&seq, |h| {
                cayley.graph.inv(h).expect("image half-arc exists").clone()
            }));
        }
        for cycle in seen {
            let colors: BTreeSet<String> =
                cycle.iter().map(|h| cayley.labels[h].clone()).collect();
            let m = colors.len();
            entries.push(RamificationEntry {
                length: len,
                degree: (m <= n_upper).then_some(len / 2),
                vertex_ambiguous: m == n_upper,
                colors,
                cycle,
            });
        }
    }
    Ok(entries)
}
