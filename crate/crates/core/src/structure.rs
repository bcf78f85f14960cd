//! Structural predicates: components, diameter, induced subgraphs, cographs.

use serde::Serialize;

use crate::graph::{is_isomorphic, BitIter, Graph};

/// Maximal connected vertex sets, each sorted, ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn count(&self) -> usize {
        self.blocks.len()
    }
}

fn component_masks(g: &Graph) -> Vec<u64> {
    masks_within(g, g.vertex_mask())
}

pub fn components(g: &Graph) -> ComponentPartition {
    ComponentPartition {
        blocks: component_masks(g)
            .into_iter()
            .map(|m| BitIter(m).collect())
            .collect(),
    }
}

pub fn is_connected(g: &Graph) -> bool {
    component_masks(g).len() == 1
}

/// Graph diameter; disconnected graphs have infinite diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

/// Eccentricity of `v` inside the vertex set `within` (which must contain `v`),
/// or `None` if part of `within` is unreachable.
fn eccentricity(g: &Graph, v: usize, within: u64) -> Option<usize> {
    let mut reached = 1u64 << v;
    let mut frontier = reached;
    let mut depth = 0;
    while reached != within {
        let mut next = 0;
        for u in BitIter(frontier) {
            next |= g.neighbors(u);
        }
        frontier = next & within & !reached;
        if frontier == 0 {
            return None;
        }
        reached |= frontier;
        depth += 1;
    }
    Some(depth)
}

fn diameter_within(g: &Graph, within: u64) -> Diameter {
    let mut best = 0;
    for v in BitIter(within) {
        match eccentricity(g, v, within) {
            Some(e) => best = best.max(e),
            None => return Diameter::Infinite,
        }
    }
    Diameter::Finite(best)
}

pub fn diameter(g: &Graph) -> Diameter {
    diameter_within(g, g.vertex_mask())
}

/// Diameter of the subgraph induced on `mask`, without materializing it.
pub fn induced_diameter(g: &Graph, mask: u64) -> Diameter {
    diameter_within(g, mask)
}

/// Finds a vertex set inducing a copy of `pattern`.
///
/// Exact search over all subsets of the right size, restricted to vertices
/// whose degree is at least the pattern's minimum degree and pruned once the
/// partial subset holds more edges than the pattern. Returns the witness in
/// increasing vertex order.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.order();
    if k > g.order() {
        return None;
    }
    let min_deg = pattern.degree_sequence().last().copied().unwrap_or(0);
    let candidates: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= min_deg).collect();
    let mut search = InducedSearch {
        g,
        pattern,
        target_edges: pattern.edge_count(),
        target_degrees: pattern.degree_sequence(),
        candidates,
        k,
    };
    search.extend(0, 0, 0).map(|m| BitIter(m).collect())
}

struct InducedSearch<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    target_edges: usize,
    target_degrees: Vec<usize>,
    candidates: Vec<usize>,
    k: usize,
}

impl InducedSearch<'_> {
    fn extend(&mut self, from: usize, mask: u64, edges: usize) -> Option<u64> {
        let chosen = mask.count_ones() as usize;
        if chosen == self.k {
            return (edges == self.target_edges && self.matches(mask)).then_some(mask);
        }
        let need = self.k - chosen;
        for i in from..self.candidates.len() {
            if self.candidates.len() - i < need {
                break;
            }
            let v = self.candidates[i];
            let e = edges + (self.g.neighbors(v) & mask).count_ones() as usize;
            if e > self.target_edges {
                continue;
            }
            if let Some(found) = self.extend(i + 1, mask | 1 << v, e) {
                return Some(found);
            }
        }
        None
    }

    fn matches(&self, mask: u64) -> bool {
        let sub = self.g.induced_mask(mask);
        sub.degree_sequence() == self.target_degrees
            && is_isomorphic(&sub, self.pattern).unwrap_or(false)
    }
}

/// Cograph test by the complement-reducible recursion: a graph on at most one
/// vertex is a cograph; a disconnected graph is one iff its components are;
/// a connected graph on two or more vertices is one iff its complement is
/// disconnected with cograph components.
pub fn is_cograph(g: &Graph) -> bool {
    cograph_within(g, &g.complement(), g.vertex_mask(), true)
}

/// Recursion on vertex subsets of `g`; `plain` selects whether `g` or its
/// complement `co` is the graph currently examined.
fn cograph_within(g: &Graph, co: &Graph, within: u64, plain: bool) -> bool {
    if within.count_ones() <= 1 {
        return true;
    }
    let cur = if plain { g } else { co };
    let comps = masks_within(cur, within);
    if comps.len() > 1 {
        return comps.into_iter().all(|c| cograph_within(g, co, c, plain));
    }
    let other = if plain { co } else { g };
    let co_comps = masks_within(other, within);
    if co_comps.len() == 1 {
        return false;
    }
    co_comps
        .into_iter()
        .all(|c| cograph_within(g, co, c, !plain))
}

fn masks_within(g: &Graph, within: u64) -> Vec<u64> {
    let mut unseen = within;
    let mut out = Vec::new();
    while unseen != 0 {
        let start = unseen.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= g.neighbors(v);
            }
            next &= within;
            frontier = next & !comp;
            comp |= next;
        }
        unseen &= !comp;
        out.push(comp);
    }
    out
}
