//! Constructors for the named graph families.
//!
//! Vertex order is fixed: clique vertices come first, then independent sets,
//! following the order in which the parts appear in each description below.

use std::fmt;
use std::str::FromStr;

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// `K_n`.
    Complete,
    /// `nK_1`.
    Empty,
    /// `P_n`: path `0-1-...-(n-1)`.
    Path,
    /// `C_n`, `n >= 3`.
    Cycle,
    /// `K_{1,n-1}`: centre 0, leaves `1..n`.
    Star,
    /// `K_{a,b}`: part `0..a`, then part `a..a+b`.
    CompleteBipartite,
    /// `K_{p_1,...,p_t}`: parts laid out consecutively.
    CompleteMultipartite,
    /// `K_n - e`: the edge 0–1 removed.
    CompleteMinusEdge,
    /// `K_{n-1}+e`: clique `0..n-1` and vertex `n-1` pendant at 0.
    CompletePlusPendant,
    /// `K_{1,n-1}+e`: star plus the leaf edge 1–2.
    StarPlusEdge,
    /// `K_{n/2,n/2}+e`: balanced bipartite plus the edge 0–1 inside the first part.
    BalancedBipartitePlusEdge,
    /// `K_{n-3} ∇ (K_2 ∪ K_1)`: clique `0..n-3`, edge `(n-3, n-2)`, vertex `n-1`.
    Eq1Graph,
    /// `K_1 ∇ 2K_{(n-1)/2}`: the two cliques first, apex last.
    ConeTwoCliques,
    /// `\overline{K}_{n/3} ∇ 2K_{n/3}`: the two cliques first, independent set last.
    SplitJoin,
    /// `G_{n,r}` on `2n` vertices: two copies of `K_r ∇ (n-r)K_1` whose independent
    /// sets are completely joined. Layout: clique A, independent B, independent C,
    /// clique D.
    Gnr,
    /// `C_5` on `v_1 v_2 v_3 v_4 u` (vertices 0..4, `u` = 4).
    J1,
    /// `J1` plus the chord `u–v_2`.
    J2,
    /// Path `v_1 v_2 v_3 v_4` plus `u` adjacent to all four.
    J3,
}

impl FamilyId {
    pub const ALL: [FamilyId; 18] = [
        FamilyId::Complete,
        FamilyId::Empty,
        FamilyId::Path,
        FamilyId::Cycle,
        FamilyId::Star,
        FamilyId::CompleteBipartite,
        FamilyId::CompleteMultipartite,
        FamilyId::CompleteMinusEdge,
        FamilyId::CompletePlusPendant,
        FamilyId::StarPlusEdge,
        FamilyId::BalancedBipartitePlusEdge,
        FamilyId::Eq1Graph,
        FamilyId::ConeTwoCliques,
        FamilyId::SplitJoin,
        FamilyId::Gnr,
        FamilyId::J1,
        FamilyId::J2,
        FamilyId::J3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Complete => "complete",
            FamilyId::Empty => "empty",
            FamilyId::Path => "path",
            FamilyId::Cycle => "cycle",
            FamilyId::Star => "star",
            FamilyId::CompleteBipartite => "complete_bipartite",
            FamilyId::CompleteMultipartite => "complete_multipartite",
            FamilyId::CompleteMinusEdge => "complete_minus_edge",
            FamilyId::CompletePlusPendant => "complete_plus_pendant",
            FamilyId::StarPlusEdge => "star_plus_edge",
            FamilyId::BalancedBipartitePlusEdge => "balanced_bipartite_plus_edge",
            FamilyId::Eq1Graph => "eq1_graph",
            FamilyId::ConeTwoCliques => "cone_two_cliques",
            FamilyId::SplitJoin => "split_join",
            FamilyId::Gnr => "gnr",
            FamilyId::J1 => "j1",
            FamilyId::J2 => "j2",
            FamilyId::J3 => "j3",
        }
    }

    /// Parameter signature and constraints, for help output.
    pub fn signature(self) -> &'static str {
        match self {
            FamilyId::Complete => "n (n >= 1)",
            FamilyId::Empty => "n (n >= 1)",
            FamilyId::Path => "n (n >= 1)",
            FamilyId::Cycle => "n (n >= 3)",
            FamilyId::Star => "n (n >= 2)",
            FamilyId::CompleteBipartite => "a b (a, b >= 1)",
            FamilyId::CompleteMultipartite => "p_1 ... p_t (t >= 1, p_i >= 1)",
            FamilyId::CompleteMinusEdge => "n (n >= 2)",
            FamilyId::CompletePlusPendant => "n (n >= 3)",
            FamilyId::StarPlusEdge => "n (n >= 3)",
            FamilyId::BalancedBipartitePlusEdge => "n (n even, n >= 4)",
            FamilyId::Eq1Graph => "n (n >= 4)",
            FamilyId::ConeTwoCliques => "n (n odd, n >= 3)",
            FamilyId::SplitJoin => "n (n divisible by 3, n >= 3)",
            FamilyId::Gnr => "n r (1 <= r <= n-1; order 2n)",
            FamilyId::J1 | FamilyId::J2 | FamilyId::J3 => "(none; order 5)",
        }
    }

    /// Short aliases accepted on the command line in addition to [`FamilyId::name`].
    fn aliases(self) -> &'static [&'static str] {
        match self {
            FamilyId::Complete => &["K"],
            FamilyId::Path => &["P"],
            FamilyId::Cycle => &["C"],
            FamilyId::CompleteBipartite => &["K_bipartite"],
            FamilyId::CompleteMultipartite => &["K_multipartite"],
            FamilyId::Gnr => &["G_nr"],
            _ => &[],
        }
    }
}

impl serde::Serialize for FamilyId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name() == s || id.aliases().contains(&s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

fn bad(id: FamilyId, reason: impl Into<String>) -> Error {
    Error::FamilyParams {
        family: id.name().to_string(),
        reason: reason.into(),
    }
}

fn arity(id: FamilyId, params: &[usize], k: usize) -> Result<()> {
    if params.len() != k {
        return Err(bad(
            id,
            format!("expected {k} parameter(s), got {}", params.len()),
        ));
    }
    Ok(())
}

fn order_ok(id: FamilyId, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(bad(id, format!("order {n} below minimum {min}")));
    }
    if n > MAX_ORDER {
        return Err(bad(id, format!("order {n} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

fn multipartite(parts: &[usize]) -> Graph {
    let mut g = Graph::new(parts[0]);
    for &p in &parts[1..] {
        g = g.join(&Graph::new(p));
    }
    g
}

/// Builds the family member `id` at `params`.
pub fn family(id: FamilyId, params: &[usize]) -> Result<Graph> {
    use FamilyId::*;
    let one = |min: usize| -> Result<usize> {
        arity(id, params, 1)?;
        order_ok(id, params[0], min)?;
        Ok(params[0])
    };
    let g = match id {
        Complete => Graph::complete(one(1)?),
        Empty => Graph::new(one(1)?),
        Path => {
            let n = one(1)?;
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        Cycle => {
            let n = one(3)?;
            let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Star => {
            let n = one(2)?;
            Graph::new(1).join(&Graph::new(n - 1))
        }
        CompleteBipartite => {
            arity(id, params, 2)?;
            let (a, b) = (params[0], params[1]);
            if a == 0 || b == 0 {
                return Err(bad(id, "parts must be non-empty"));
            }
            order_ok(id, a + b, 2)?;
            Graph::new(a).join(&Graph::new(b))
        }
        CompleteMultipartite => {
            if params.is_empty() || params.contains(&0) {
                return Err(bad(id, "need at least one part, all non-empty"));
            }
            order_ok(id, params.iter().sum(), 1)?;
            multipartite(params)
        }
        CompleteMinusEdge => {
            let mut g = Graph::complete(one(2)?);
            g.remove_edge(0, 1);
            g
        }
        CompletePlusPendant => {
            let n = one(3)?;
            let mut g = Graph::complete(n - 1).disjoint_union(&Graph::new(1));
            g.add_edge(0, n - 1);
            g
        }
        StarPlusEdge => {
            let n = one(3)?;
            let mut g = Graph::new(1).join(&Graph::new(n - 1));
            g.add_edge(1, 2);
            g
        }
        BalancedBipartitePlusEdge => {
            let n = one(4)?;
            if n % 2 != 0 {
                return Err(bad(id, format!("order {n} is odd")));
            }
            let mut g = Graph::new(n / 2).join(&Graph::new(n / 2));
            g.add_edge(0, 1);
            g
        }
        Eq1Graph => {
            let n = one(4)?;
            Graph::complete(n - 3).join(&Graph::complete(2).disjoint_union(&Graph::new(1)))
        }
        ConeTwoCliques => {
            let n = one(3)?;
            if n % 2 == 0 {
                return Err(bad(id, format!("order {n} is even")));
            }
            let h = (n - 1) / 2;
            Graph::complete(h)
                .disjoint_union(&Graph::complete(h))
                .join(&Graph::new(1))
        }
        SplitJoin => {
            let n = one(3)?;
            if n % 3 != 0 {
                return Err(bad(id, format!("order {n} not divisible by 3")));
            }
            let t = n / 3;
            Graph::complete(t)
                .disjoint_union(&Graph::complete(t))
                .join(&Graph::new(t))
        }
        Gnr => {
            arity(id, params, 2)?;
            let (n, r) = (params[0], params[1]);
            if n < 2 || r == 0 || r >= n {
                return Err(bad(id, format!("need 1 <= r <= n-1, got n={n}, r={r}")));
            }
            order_ok(id, 2 * n, 4)?;
            let s = n - r;
            // A = 0..r, B = r..n, C = n..n+s, D = n+s..2n
            let mut g = Graph::new(2 * n);
            let (a, b, c, d) = (0..r, r..n, n..n + s, n + s..2 * n);
            for (x, y) in [(a.clone(), a.clone()), (d.clone(), d.clone())] {
                for u in x {
                    for v in y.clone() {
                        if u < v {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
            for (x, y) in [(a, b.clone()), (b, c.clone()), (c, d)] {
                for u in x {
                    for v in y.clone() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        }
        J1 => {
            arity(id, params, 0)?;
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
        }
        J2 => {
            arity(id, params, 0)?;
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 1)])
        }
        J3 => {
            arity(id, params, 0)?;
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
        }
    };
    Ok(g)
}
