use std::collections::BTreeMap;

use super::{ArcId, Diagnostics, DirectedGraph, HalfArcId, NodeId, UndirectedGraph};
use crate::error::{Error, Result};

/// A directed graph morphism as a pair of explicit tables. The domain and
/// codomain are passed alongside wherever they are needed; the maps alone
/// make hom-set enumeration cheap.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct DirectedMorphism {
    pub node_map: BTreeMap<NodeId, NodeId>,
    pub arc_map: BTreeMap<ArcId, ArcId>,
}

/// An undirected graph morphism: node table plus a half-arc table that must
/// commute with the involutions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct UndirectedMorphism {
    pub node_map: BTreeMap<NodeId, NodeId>,
    pub halfarc_map: BTreeMap<HalfArcId, HalfArcId>,
}

impl DirectedMorphism {
    pub fn apply_node(&self, n: &NodeId) -> Result<&NodeId> {
        self.node_map
            .get(n)
            .ok_or_else(|| Error::InvalidMorphism(format!("node `{}` has no image", n)))
    }

    pub fn apply_arc(&self, a: &ArcId) -> Result<&ArcId> {
        self.arc_map
            .get(a)
            .ok_or_else(|| Error::InvalidMorphism(format!("arc `{}` has no image", a)))
    }

    pub fn is_bijective(&self, dom: &DirectedGraph, cod: &DirectedGraph) -> bool {
        use std::collections::BTreeSet;
        let node_images: BTreeSet<_> = self.node_map.values().collect();
        let arc_images: BTreeSet<_> = self.arc_map.values().collect();
        self.node_map.len() == dom.node_count()
            && self.arc_map.len() == dom.arc_count()
            && node_images.len() == cod.node_count()
            && arc_images.len() == cod.arc_count()
            && node_images.len() == self.node_map.len()
            && arc_images.len() == self.arc_map.len()
    }
}

impl UndirectedMorphism {
    pub fn apply_node(&self, n: &NodeId) -> Result<&NodeId> {
        self.node_map
            .get(n)
            .ok_or_else(|| Error::InvalidMorphism(format!("node `{}` has no image", n)))
    }

    pub fn apply_halfarc(&self, a: &HalfArcId) -> Result<&HalfArcId> {
        self.halfarc_map
            .get(a)
            .ok_or_else(|| Error::InvalidMorphism(format!("half-arc `{}` has no image", a)))
    }

    pub fn is_bijective(&self, dom: &UndirectedGraph, cod: &UndirectedGraph) -> bool {
        use std::collections::BTreeSet;
        let node_images: BTreeSet<_> = self.node_map.values().collect();
        let half_images: BTreeSet<_> = self.halfarc_map.values().collect();
        self.node_map.len() == dom.node_count()
            && self.halfarc_map.len() == dom.halfarc_count()
            && node_images.len() == cod.node_count()
            && half_images.len() == cod.halfarc_count()
            && node_images.len() == self.node_map.len()
            && half_images.len() == self.halfarc_map.len()
    }
}

pub fn identity_directed(g: &DirectedGraph) -> DirectedMorphism {
    DirectedMorphism {
        node_map: g.nodes().map(|n| (n.clone(), n.clone())).collect(),
        arc_map: g.arcs().map(|(id, _)| (id.clone(), id.clone())).collect(),
    }
}

pub fn identity_undirected(g: &UndirectedGraph) -> UndirectedMorphism {
    UndirectedMorphism {
        node_map: g.nodes().map(|n| (n.clone(), n.clone())).collect(),
        halfarc_map: g
            .halfarcs()
            .map(|(id, _)| (id.clone(), id.clone()))
            .collect(),
    }
}

/// g after f.
pub fn compose_directed(f: &DirectedMorphism, g: &DirectedMorphism) -> Result<DirectedMorphism> {
    let mut node_map = BTreeMap::new();
    for (k, v) in &f.node_map {
        node_map.insert(k.clone(), g.apply_node(v)?.clone());
    }
    let mut arc_map = BTreeMap::new();
    for (k, v) in &f.arc_map {
        arc_map.insert(k.clone(), g.apply_arc(v)?.clone());
    }
    Ok(DirectedMorphism { node_map, arc_map })
}

/// g after f.
pub fn compose_undirected(
    f: &UndirectedMorphism,
    g: &UndirectedMorphism,
) -> Result<UndirectedMorphism> {
    let mut node_map = BTreeMap::new();
    for (k, v) in &f.node_map {
        node_map.insert(k.clone(), g.apply_node(v)?.clone());
    }
    let mut halfarc_map = BTreeMap::new();
    for (k, v) in &f.halfarc_map {
        halfarc_map.insert(k.clone(), g.apply_halfarc(v)?.clone());
    }
    Ok(UndirectedMorphism {
        node_map,
        halfarc_map,
    })
}

/// Checks totality, image containment, and both naturality squares
/// (f0 . src = src . f1 and f0 . tgt = tgt . f1).
pub fn validate_directed_morphism(
    f: &DirectedMorphism,
    dom: &DirectedGraph,
    cod: &DirectedGraph,
) -> Diagnostics {
    let mut d = Diagnostics::default();
    for n in dom.nodes() {
        match f.node_map.get(n) {
            None => d.push(format!("node `{}` has no image", n)),
            Some(img) if !cod.contains_node(img) => {
                d.push(format!("node `{}` maps outside the codomain to `{}`", n, img))
            }
            _ => {}
        }
    }
    for (n, _) in f.node_map.iter().filter(|(n, _)| !dom.contains_node(n)) {
        d.push(format!("node table mentions `{}` outside the domain", n));
    }
    for (id, arc) in dom.arcs() {
        let img = match f.arc_map.get(id) {
            None => {
                d.push(format!("arc `{}` has no image", id));
                continue;
            }
            Some(i) => i,
        };
        let img_arc = match cod.arc(img) {
            None => {
                d.push(format!("arc `{}` maps outside the codomain to `{}`", id, img));
                continue;
            }
            Some(a) => a,
        };
        if let (Some(fs), Some(ft)) = (f.node_map.get(&arc.src), f.node_map.get(&arc.tgt)) {
            if img_arc.src != *fs {
                d.push(format!(
                    "arc `{}` breaks the source square: src image is `{}`, expected `{}`",
                    id, img_arc.src, fs
                ));
            }
            if img_arc.tgt != *ft {
                d.push(format!(
                    "arc `{}` breaks the target square: tgt image is `{}`, expected `{}`",
                    id, img_arc.tgt, ft
                ));
            }
        }
    }
    for (a, _) in f.arc_map.iter().filter(|(a, _)| dom.arc(a).is_none()) {
        d.push(format!("arc table mentions `{}` outside the domain", a));
    }
    d
}

/// Undirected version: naturality squares plus involution equivariance
/// (f1 . inv = inv . f1).
pub fn validate_undirected_morphism(
    f: &UndirectedMorphism,
    dom: &UndirectedGraph,
    cod: &UndirectedGraph,
) -> Diagnostics {
    let mut d = Diagnostics::default();
    for n in dom.nodes() {
        match f.node_map.get(n) {
            None => d.push(format!("node `{}` has no image", n)),
            Some(img) if !cod.contains_node(img) => {
                d.push(format!("node `{}` maps outside the codomain to `{}`", n, img))
            }
            _ => {}
        }
    }
    for (n, _) in f.node_map.iter().filter(|(n, _)| !dom.contains_node(n)) {
        d.push(format!("node table mentions `{}` outside the domain", n));
    }
    for (id, h) in dom.halfarcs() {
        let img = match f.halfarc_map.get(id) {
            None => {
                d.push(format!("half-arc `{}` has no image", id));
                continue;
            }
            Some(i) => i,
        };
        let img_h = match cod.halfarc(img) {
            None => {
                d.push(format!(
                    "half-arc `{}` maps outside the codomain to `{}`",
                    id, img
                ));
                continue;
            }
            Some(a) => a,
        };
        if let (Some(fs), Some(ft)) = (f.node_map.get(&h.src), f.node_map.get(&h.tgt)) {
            if img_h.src != *fs {
                d.push(format!(
                    "half-arc `{}` breaks the source square: src image is `{}`, expected `{}`",
                    id, img_h.src, fs
                ));
            }
            if img_h.tgt != *ft {
                d.push(format!(
                    "half-arc `{}` breaks the target square: tgt image is `{}`, expected `{}`",
                    id, img_h.tgt, ft
                ));
            }
        }
        if let Some(inv_img) = f.halfarc_map.get(&h.inv) {
            if *inv_img != img_h.inv {
                d.push(format!(
                    "half-arc `{}` breaks involution equivariance: inv maps to `{}`, expected `{}`",
                    id, inv_img, img_h.inv
                ));
            }
        }
    }
    for (a, _) in f
        .halfarc_map
        .iter()
        .filter(|(a, _)| dom.halfarc(a).is_none())
    {
        d.push(format!("half-arc table mentions `{}` outside the domain", a));
    }
    d
}
