//! Simple undirected graphs on vertices `0..n` stored as neighbor bitsets.

mod canon;
mod family;
mod graph6;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use family::{family, FamilyId};
pub use graph6::{from_graph6, to_graph6};

use std::fmt;

/// Largest supported order: one `u64` word per neighborhood.
pub const MAX_ORDER: usize = 64;

/// A labeled simple graph. Row `v` holds the neighbor set of `v` as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    ///
    /// Panics unless `1 <= order <= 64`.
    pub fn new(order: usize) -> Self {
        assert!(
            (1..=MAX_ORDER).contains(&order),
            "graph order {order} outside 1..={MAX_ORDER}"
        );
        Graph {
            order,
            rows: vec![0; order],
        }
    }

    /// Builds a graph from an edge list. Panics on loops or out-of-range endpoints.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(order);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Graph::new(order);
        let all = g.vertex_mask();
        for v in 0..order {
            g.rows[v] = all & !bit(v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Bitmask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        if self.order == 64 {
            u64::MAX
        } else {
            bit(self.order) - 1
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(
            u < self.order && v < self.order,
            "edge ({u},{v}) out of range"
        );
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(
            u < self.order && v < self.order,
            "edge ({u},{v}) out of range"
        );
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    /// Neighbor set of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> BitIter {
        BitIter(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// Degree sequence sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in BitIter(self.rows[u] & !((bit(u) << 1) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Graph on the same vertices with exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph {
            order: self.order,
            rows: (0..self.order)
                .map(|v| !self.rows[v] & all & !bit(v))
                .collect(),
        }
    }

    /// `self ∪ other`, with the vertices of `other` shifted by `self.order()`.
    ///
    /// Panics if the combined order exceeds 64.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order;
        let total = n + other.order;
        assert!(
            total <= MAX_ORDER,
            "union order {total} exceeds {MAX_ORDER}"
        );
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << n));
        Graph { order: total, rows }
    }

    /// `self ∇ other`: the disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.order;
        let mut g = self.disjoint_union(other);
        let left = self.vertex_mask();
        let right = g.vertex_mask() & !left;
        for v in 0..n {
            g.rows[v] |= right;
        }
        for v in n..g.order {
            g.rows[v] |= left;
        }
        g
    }

    /// Subgraph induced on `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Subgraph induced on the vertex bitmask `mask`, in increasing vertex order.
    pub fn induced_mask(&self, mask: u64) -> Graph {
        let vs: Vec<usize> = BitIter(mask).collect();
        self.induced(&vs)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut g = Graph::new(self.order);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Graph with one extra vertex (labeled `order`) adjacent to the vertex set `mask`.
    pub fn with_vertex(&self, mask: u64) -> Graph {
        let n = self.order;
        assert!(n < MAX_ORDER);
        assert_eq!(mask & !self.vertex_mask(), 0);
        let mut rows = self.rows.clone();
        for v in BitIter(mask) {
            rows[v] |= bit(n);
        }
        rows.push(mask);
        Graph { order: n + 1, rows }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}
