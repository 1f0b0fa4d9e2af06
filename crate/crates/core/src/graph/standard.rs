//! Builders for the standard graphs used throughout the crate, with their
//! customary labels: cycle nodes are `[n]`, cycle half-arcs `[n]+` / `[n]-`,
//! the arc graph A has nodes `u1, u2`, the cherry V has `v1, v2, v3`.

use super::{ArcId, Graph, HalfArcId, NodeId, UndirectedGraph};
use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

/// The one-node directed graph D.
pub fn directed_dot() -> DirectedGraph {
    DirectedGraph::from_parts([NodeId::from("*")], [])
}

/// The directed arc A: nodes 0, 1 and one arc a between them.
pub fn directed_arc() -> DirectedGraph {
    DirectedGraph::from_parts(
        ["0", "1"].map(NodeId::from),
        [(ArcId::from("a"), NodeId::from("0"), NodeId::from("1"))],
    )
}

/// The directed cycle c_p on nodes [0] .. [p-1], arc a_n from [n] to [n+1].
pub fn directed_cycle(p: usize) -> DirectedGraph {
    assert!(p >= 1, "cycle length must be at least 1");
    let nodes = (0..p).map(|n| NodeId(format!("[{}]", n)));
    let arcs = (0..p).map(|n| {
        (
            ArcId(format!("a{}", n)),
            NodeId(format!("[{}]", n)),
            NodeId(format!("[{}]", (n + 1) % p)),
        )
    });
    DirectedGraph::from_parts(nodes, arcs)
}

/// One node with n directed loops a0 .. a{n-1}.
pub fn directed_bouquet(n: usize) -> DirectedGraph {
    let star = NodeId::from("*");
    let arcs = (0..n).map(|i| (ArcId(format!("a{}", i)), star.clone(), star.clone()));
    DirectedGraph::from_parts([star.clone()], arcs)
}

/// The one-node undirected graph.
pub fn undirected_dot() -> UndirectedGraph {
    UndirectedGraph::from_parts([NodeId::from("*")], [])
}

/// The undirected arc A: nodes u1, u2 joined by the half-arc pair a1 / a2.
pub fn undirected_arc() -> UndirectedGraph {
    UndirectedGraph::from_parts(
        ["u1", "u2"].map(NodeId::from),
        [
            (
                HalfArcId::from("a1"),
                NodeId::from("u1"),
                NodeId::from("u2"),
                HalfArcId::from("a2"),
            ),
            (
                HalfArcId::from("a2"),
                NodeId::from("u2"),
                NodeId::from("u1"),
                HalfArcId::from("a1"),
            ),
        ],
    )
}

/// The cherry V: center v1 joined to v2 by arc b and to v3 by arc c.
pub fn cherry() -> UndirectedGraph {
    UndirectedGraph::from_parts(
        ["v1", "v2", "v3"].map(NodeId::from),
        [
            (
                HalfArcId::from("b1"),
                NodeId::from("v1"),
                NodeId::from("v2"),
                HalfArcId::from("b2"),
            ),
            (
                HalfArcId::from("b2"),
                NodeId::from("v2"),
                NodeId::from("v1"),
                HalfArcId::from("b1"),
            ),
            (
                HalfArcId::from("c1"),
                NodeId::from("v1"),
                NodeId::from("v3"),
                HalfArcId::from("c2"),
            ),
            (
                HalfArcId::from("c2"),
                NodeId::from("v3"),
                NodeId::from("v1"),
                HalfArcId::from("c1"),
            ),
        ],
    )
}

/// The path P_n on n nodes 0 .. n-1 with half-arc pairs p+ / p-.
pub fn path(n: usize) -> UndirectedGraph {
    assert!(n >= 1, "a path needs at least one node");
    let nodes = (0..n).map(|i| NodeId(i.to_string()));
    let halfarcs = (0..n.saturating_sub(1)).flat_map(|p| {
        let plus = HalfArcId(format!("{}+", p));
        let minus = HalfArcId(format!("{}-", p));
        [
            (
                plus.clone(),
                NodeId(p.to_string()),
                NodeId((p + 1).to_string()),
                minus.clone(),
            ),
            (
                minus,
                NodeId((p + 1).to_string()),
                NodeId(p.to_string()),
                plus,
            ),
        ]
    });
    UndirectedGraph::from_parts(nodes, halfarcs)
}

/// The undirected cycle on p nodes: half-arcs [n]+ from [n] to [n+1] and
/// [n]- back, paired by the involution. For p = 1 this is a single
/// non-degenerate loop.
pub fn undirected_cycle(p: usize) -> UndirectedGraph {
    assert!(p >= 1, "cycle length must be at least 1");
    let nodes = (0..p).map(|n| NodeId(format!("[{}]", n)));
    let halfarcs = (0..p).flat_map(|n| {
        let plus = HalfArcId(format!("[{}]+", n));
        let minus = HalfArcId(format!("[{}]-", n));
        let here = NodeId(format!("[{}]", n));
        let next = NodeId(format!("[{}]", (n + 1) % p));
        [
            (plus.clone(), here.clone(), next.clone(), minus.clone()),
            (minus, next, here, plus),
        ]
    });
    UndirectedGraph::from_parts(nodes, halfarcs)
}

/// One node carrying two non-degenerate loops.
pub fn eight() -> UndirectedGraph {
    let star = NodeId::from("*");
    UndirectedGraph::from_parts(
        [star.clone()],
        [
            (
                HalfArcId::from("a+"),
                star.clone(),
                star.clone(),
                HalfArcId::from("a-"),
            ),
            (
                HalfArcId::from("a-"),
                star.clone(),
                star.clone(),
                HalfArcId::from("a+"),
            ),
            (
                HalfArcId::from("b+"),
                star.clone(),
                star.clone(),
                HalfArcId::from("b-"),
            ),
            (
                HalfArcId::from("b-"),
                star.clone(),
                star.clone(),
                HalfArcId::from("b+"),
            ),
        ],
    )
}

/// The bouquet B_n: one node with n degenerate loops a0 .. a{n-1}, each a
/// single half-arc fixed by the involution.
pub fn bouquet(n: usize) -> UndirectedGraph {
    let star = NodeId::from("*");
    let halfarcs = (0..n).map(|i| {
        let id = HalfArcId(format!("a{}", i));
        (id.clone(), star.clone(), star.clone(), id)
    });
    UndirectedGraph::from_parts([star.clone()], halfarcs)
}

/// Two nodes 0, 1 joined by n parallel arcs a1 .. an.
pub fn theta(n: usize) -> UndirectedGraph {
    let arcs = (1..=n).map(|i| {
        (
            format!("a{}", i),
            NodeId::from("0"),
            NodeId::from("1"),
        )
    });
    UndirectedGraph::from_arcs(["0", "1"].map(NodeId::from), arcs)
}

/// Complete graph on n nodes 0 .. n-1, arcs e{i}_{j} for i < j.
pub fn complete(n: usize) -> UndirectedGraph {
    let nodes: Vec<NodeId> = (0..n).map(|i| NodeId(i.to_string())).collect();
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            arcs.push((
                format!("e{}_{}", i, j),
                NodeId(i.to_string()),
                NodeId(j.to_string()),
            ));
        }
    }
    UndirectedGraph::from_arcs(nodes, arcs)
}

/// The Petersen graph: outer 5-cycle o0..o4, inner pentagram i0..i4, spokes.
pub fn petersen() -> UndirectedGraph {
    let nodes = (0..5)
        .map(|k| NodeId(format!("o{}", k)))
        .chain((0..5).map(|k| NodeId(format!("i{}", k))));
    let mut arcs = Vec::new();
    for k in 0..5 {
        arcs.push((
            format!("out{}", k),
            NodeId(format!("o{}", k)),
            NodeId(format!("o{}", (k + 1) % 5)),
        ));
        arcs.push((
            format!("spoke{}", k),
            NodeId(format!("o{}", k)),
            NodeId(format!("i{}", k)),
        ));
        arcs.push((
            format!("in{}", k),
            NodeId(format!("i{}", k)),
            NodeId(format!("i{}", (k + 2) % 5)),
        ));
    }
    UndirectedGraph::from_arcs(nodes, arcs)
}

/// Named standard graphs, addressable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    DirectedDot,
    DirectedArc,
    DirectedCycle(usize),
    DirectedBouquet(usize),
    Dot,
    Arc,
    Cherry,
    Path(usize),
    Cycle(usize),
    Eight,
    Bouquet(usize),
    Theta(usize),
    Complete(usize),
    Petersen,
}

impl StandardKind {
    /// Parses a kind name plus optional numeric parameter, as used by the
    /// `standard` CLI verb.
    pub fn parse(kind: &str, param: Option<usize>) -> Result<Self> {
        let need = |what: &str| -> Result<usize> {
            param.ok_or_else(|| {
                Error::InvalidParameter(format!("kind `{}` needs a numeric parameter", what))
            })
        };
        Ok(match kind {
            "d" => StandardKind::DirectedDot,
            "a" => StandardKind::DirectedArc,
            "c" => StandardKind::DirectedCycle(need("c")?),
            "bd" => StandardKind::DirectedBouquet(need("bd")?),
            "du" => StandardKind::Dot,
            "au" => StandardKind::Arc,
            "vu" => StandardKind::Cherry,
            "path" => StandardKind::Path(need("path")?),
            "cu" => StandardKind::Cycle(need("cu")?),
            "eight" => StandardKind::Eight,
            "b" => StandardKind::Bouquet(need("b")?),
            "dn" => StandardKind::Theta(need("dn")?),
            "k" => StandardKind::Complete(need("k")?),
            "petersen" => StandardKind::Petersen,
            other => return Err(Error::UnknownKind(other.to_string())),
        })
    }
}

pub fn standard_graph(kind: StandardKind) -> Result<Graph> {
    let check_pos = |p: usize, what: &str| -> Result<()> {
        if p == 0 {
            Err(Error::InvalidParameter(format!(
                "{} needs a parameter of at least 1",
                what
            )))
        } else {
            Ok(())
        }
    };
    Ok(match kind {
        StandardKind::DirectedDot => Graph::Directed(directed_dot()),
        StandardKind::DirectedArc => Graph::Directed(directed_arc()),
        StandardKind::DirectedCycle(p) => {
            check_pos(p, "a directed cycle")?;
            Graph::Directed(directed_cycle(p))
        }
        StandardKind::DirectedBouquet(n) => Graph::Directed(directed_bouquet(n)),
        StandardKind::Dot => Graph::Undirected(undirected_dot()),
        StandardKind::Arc => Graph::Undirected(undirected_arc()),
        StandardKind::Cherry => Graph::Undirected(cherry()),
        StandardKind::Path(n) => {
            check_pos(n, "a path")?;
            Graph::Undirected(path(n))
        }
        StandardKind::Cycle(p) => {
            check_pos(p, "an undirected cycle")?;
            Graph::Undirected(undirected_cycle(p))
        }
        StandardKind::Eight => Graph::Undirected(eight()),
        StandardKind::Bouquet(n) => Graph::Undirected(bouquet(n)),
        StandardKind::Theta(n) => Graph::Undirected(theta(n)),
        StandardKind::Complete(n) => Graph::Undirected(complete(n)),
        StandardKind::Petersen => Graph::Undirected(petersen()),
    })
}
