//! Canonical forms by individualization and color refinement.
//!
//! The search tree branches on the first non-singleton cell of an equitable
//! ordered partition. Within a cell, only one vertex per twin class is
//! explored: swapping two twins is an automorphism fixing every previously
//! individualized vertex, so their subtrees produce the same encodings. The
//! canonical form is the minimal upper-triangle bit string over the leaves.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

/// Node budget for a single canonization. Never approached below order 16
/// on the graphs this crate builds or enumerates.
const NODE_BUDGET: usize = 4_000_000;

/// Upper triangle of the canonically relabeled adjacency matrix, in graph6
/// bit order, packed most-significant-first into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> &[u64] {
        &self.bits
    }

    /// The canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order;
        let mut g = Graph::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }

    fn encode(g: &Graph, order: &[usize]) -> Vec<u64> {
        let n = order.len();
        let total = n * (n - 1) / 2;
        let mut bits = vec![0u64; total.div_ceil(64).max(1)];
        let mut k = 0;
        for j in 1..n {
            let row = g.neighbors(order[j]);
            for &oi in &order[..j] {
                if row >> oi & 1 == 1 {
                    bits[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        bits
    }
}

/// Vertex order of `g` (position → vertex) realizing its canonical form.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            order: n,
            min: 1,
            max: MAX_ORDER,
        });
    }
    let mut search = Search {
        g,
        best: None,
        nodes: 0,
    };
    search.descend(vec![(0..n).collect()])?;
    let (bits, order) = search.best.expect("search visits at least one leaf");
    Ok((CanonicalForm { order: n, bits }, order))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Isomorphism test. Cheap invariants first, canonical forms last.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    nodes: usize,
}

impl Search<'_> {
    fn descend(&mut self, partition: Vec<Vec<usize>>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return Err(Error::CanonBudget(NODE_BUDGET));
        }
        let cells = refine(self.g, partition);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let bits = CanonicalForm::encode(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| bits < *b) {
                self.best = Some((bits, order));
            }
            return Ok(());
        };
        let mut reps: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if reps.iter().any(|&u| twins(self.g, u, v)) {
                continue;
            }
            reps.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(next)?;
        }
        Ok(())
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    (g.neighbors(u) & !(1 << v)) == (g.neighbors(v) & !(1 << u))
}

/// Splits cells by neighbor counts into every cell until the ordered
/// partition is equitable. Sub-cells are ordered by their count vectors, so
/// the result depends only on the graph and the input partition up to
/// relabeling.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(g.order());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.neighbors(v);
                    let sig = masks.iter().map(|m| (row & m).count_ones() as u8).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    if start > 0 || i < keyed.len() {
                        split = true;
                    }
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyId};
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        family(FamilyId::Cycle, &[n]).unwrap()
    }

    fn all_labeled(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len())
            .map(|m| {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| m >> k & 1 == 1)
                    .map(|(_, e)| *e)
                    .collect();
                Graph::from_edges(n, &edges)
            })
            .collect()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Brute-force minimum over all n! relabelings.
    fn brute_min(g: &Graph) -> Vec<u64> {
        permutations(g.order())
            .into_iter()
            .map(|order| CanonicalForm::encode(g, &order))
            .min()
            .unwrap()
    }

    #[test]
    fn path_reversal() {
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let r = p.permuted(&[3, 2, 1, 0]);
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&r).unwrap());
    }

    #[test]
    fn small_examples() {
        let c4 = cycle(4);
        let k22 = family(FamilyId::CompleteBipartite, &[2, 2]).unwrap();
        assert!(is_isomorphic(&c4, &k22).unwrap());
        let j1 = family(FamilyId::J1, &[]).unwrap();
        let j2 = family(FamilyId::J2, &[]).unwrap();
        let j3 = family(FamilyId::J3, &[]).unwrap();
        assert_ne!(canonical_form(&j1).unwrap(), canonical_form(&j2).unwrap());
        assert!(!is_isomorphic(&j2, &j3).unwrap());
        let eq1 = family(FamilyId::Eq1Graph, &[6]).unwrap();
        let built = Graph::complete(3).join(&Graph::complete(2).disjoint_union(&Graph::new(1)));
        assert!(is_isomorphic(&eq1, &built).unwrap());
    }

    #[test]
    fn representative_has_same_form() {
        let g = family(FamilyId::Gnr, &[4, 1]).unwrap();
        let (form, order) = canonical_labeling(&g).unwrap();
        let rep = form.to_graph();
        assert_eq!(canonical_form(&rep).unwrap(), form);
        assert!(is_isomorphic(&g, &rep).unwrap());
        assert_eq!(order.len(), 8);
    }

    #[test]
    fn partitions_like_brute_force_up_to_order_5() {
        // Canonical form and brute-force minimum induce the same classes.
        use std::collections::HashMap;
        for n in 1..=5 {
            let mut fwd: HashMap<Vec<u64>, Vec<u64>> = HashMap::new();
            let mut back: HashMap<Vec<u64>, Vec<u64>> = HashMap::new();
            for g in all_labeled(n) {
                let f = canonical_form(&g).unwrap().bits;
                let b = brute_min(&g);
                assert_eq!(fwd.entry(f.clone()).or_insert_with(|| b.clone()), &b);
                assert_eq!(back.entry(b).or_insert(f.clone()), &f);
            }
        }
    }

    #[test]
    fn exhaustive_invariance_up_to_order_5() {
        for n in 1..=5 {
            let perms = permutations(n);
            for g in all_labeled(n) {
                let f = canonical_form(&g).unwrap();
                for p in &perms {
                    assert_eq!(canonical_form(&g.permuted(p)).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn classes_match_brute_force_for_order_6() {
        // Equal forms iff equal brute-force minima, over a sample of labeled 6-graphs.
        use std::collections::HashMap;
        let mut fwd: HashMap<Vec<u64>, Vec<u64>> = HashMap::new();
        let mut back: HashMap<Vec<u64>, Vec<u64>> = HashMap::new();
        for g in all_labeled(6).into_iter().step_by(7) {
            let f = canonical_form(&g).unwrap().bits;
            let b = brute_min(&g);
            assert_eq!(fwd.entry(f.clone()).or_insert_with(|| b.clone()), &b);
            assert_eq!(back.entry(b).or_insert(f.clone()), &f);
        }
    }

    #[test]
    fn symmetric_families_are_cheap() {
        let k = Graph::complete(40);
        assert_eq!(canonical_form(&k).unwrap().to_graph(), k);
        let g = family(FamilyId::Gnr, &[20, 7]).unwrap();
        assert!(is_isomorphic(&g, &g.permuted(&(0..40).rev().collect::<Vec<_>>())).unwrap());
        let pet = crate::graph::from_graph6("IheA@GUAo").unwrap();
        canonical_form(&pet).unwrap();
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn invariant_under_relabeling(seed in any::<u64>(), n in 6usize..=8) {
            use rand::seq::SliceRandom;
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::new(n);
            for j in 1..n {
                for i in 0..j {
                    if rng.random_bool(0.5) {
                        g.add_edge(i, j);
                    }
                }
            }
            let f = canonical_form(&g).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            for _ in 0..1000 / 16 {
                perm.shuffle(&mut rng);
                prop_assert_eq!(&canonical_form(&g.permuted(&perm)).unwrap(), &f);
            }
        }
    }

    #[test]
    fn thousand_relabelings_of_one_graph() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        let mut g = Graph::new(8);
        for j in 1..8 {
            for i in 0..j {
                if rng.random_bool(0.5) {
                    g.add_edge(i, j);
                }
            }
        }
        let f = canonical_form(&g).unwrap();
        let mut perm: Vec<usize> = (0..8).collect();
        for _ in 0..1000 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.permuted(&perm)).unwrap(), f);
        }
    }
}
