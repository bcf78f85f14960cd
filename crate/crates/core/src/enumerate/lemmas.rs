//! Property suites run over enumerated graphs. Each returns the violations it
//! found; an empty list means the property held on every input.

use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{catalog, k_max, CatalogEntry};
use crate::error::Result;
use crate::graph::{family, is_isomorphic, CanonicalForm, FamilyId, Graph};
use crate::spectrum::{
    charpoly, complement_charpoly, complement_spectrum, extract_spectrum, join_charpoly,
    join_spectrum, laplacian, laplacian_spectrum, submatrix_divisibility_check, CharPoly,
    ExactSpectrum,
};
use crate::structure::{
    components, contains_induced, diameter, induced_diameter, is_cograph, is_connected,
};

use super::{canonical_forms, graph6_of};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LemmaViolation {
    pub lemma: String,
    pub graph6: String,
    pub detail: String,
}

fn violation(lemma: &str, graph6: String, detail: String) -> LemmaViolation {
    LemmaViolation {
        lemma: lemma.to_string(),
        graph6,
        detail,
    }
}

/// A graph with its Laplacian data computed once.
#[derive(Clone, Debug)]
pub struct GraphRecord {
    pub form: CanonicalForm,
    pub graph: Graph,
    pub graph6: String,
    pub charpoly: CharPoly,
    pub spectrum: ExactSpectrum,
    pub connected: bool,
}

pub fn analyze(forms: &[CanonicalForm]) -> Vec<GraphRecord> {
    forms
        .par_iter()
        .map(|form| {
            let graph = form.to_graph();
            let (charpoly, spectrum) = laplacian_spectrum(&graph);
            GraphRecord {
                form: form.clone(),
                graph6: graph6_of(&graph),
                connected: is_connected(&graph),
                graph,
                charpoly,
                spectrum,
            }
        })
        .collect()
}

fn check_each<F>(records: &[GraphRecord], f: F) -> Vec<LemmaViolation>
where
    F: Fn(&GraphRecord) -> Option<LemmaViolation> + Send + Sync,
{
    records.par_iter().filter_map(f).collect()
}

pub const ZERO_MULTIPLICITY: &str = "zero-multiplicity-counts-components";
pub const TWO_EIGENVALUES: &str = "two-eigenvalues-iff-equal-cliques";
pub const COMPLEMENT: &str = "complement-spectrum";
pub const JOIN: &str = "join-spectrum";
pub const DIAMETER: &str = "diameter-below-distinct-count";
pub const COGRAPH: &str = "cograph-equivalences";
pub const DIVISIBILITY: &str = "principal-submatrix-divisibility";
pub const INTEGRALITY: &str = "high-multiplicity-integrality";
pub const FORBIDDEN: &str = "forbidden-induced-j1-j2-j3";
pub const COMPLEMENT_DISCONNECTED: &str = "member-complement-disconnected";
pub const MEMBER_COGRAPH: &str = "member-is-cograph";
pub const GNR_COMPLEMENT: &str = "gnr-complement-connected";

/// `m(0)` equals the number of components.
pub fn zero_multiplicity(records: &[GraphRecord]) -> Vec<LemmaViolation> {
    check_each(records, |r| {
        let (m0, w) = (r.spectrum.multiplicity(0), components(&r.graph).count());
        (m0 != w).then(|| {
            violation(
                ZERO_MULTIPLICITY,
                r.graph6.clone(),
                format!("m(0)={m0}, components={w}"),
            )
        })
    })
}

/// Disjoint union of at least one `K_b` (`b >= 2`, all equal) and any number
/// of isolated vertices.
pub fn is_equal_cliques_plus_isolated(g: &Graph) -> bool {
    let mut size = None;
    for block in components(g).blocks() {
        let b = block.len();
        if b == 1 {
            continue;
        }
        let complete = block.iter().all(|&v| g.degree(v) == b - 1);
        if !complete || size.is_some_and(|s| s != b) {
            return false;
        }
        size = Some(b);
    }
    size.is_some()
}

/// Exactly two distinct eigenvalues iff equal cliques plus isolated vertices.
pub fn two_eigenvalues(records: &[GraphRecord]) -> Vec<LemmaViolation> {
    check_each(records, |r| {
        let two = r.spectrum.distinct_count() == 2;
        let shape = is_equal_cliques_plus_isolated(&r.graph);
        (two != shape).then(|| {
            violation(
                TWO_EIGENVALUES,
                r.graph6.clone(),
                format!(
                    "distinct={}, equal-cliques-shape={shape}",
                    r.spectrum.distinct_count()
                ),
            )
        })
    })
}

/// The complement formula against direct computation; integral spectra go
/// through the eigenvalue formula, every spectrum through the polynomial one.
pub fn complement_formula(records: &[GraphRecord]) -> Vec<LemmaViolation> {
    check_each(records, |r| {
        let direct = charpoly(&laplacian(&r.graph.complement()));
        if complement_charpoly(&r.charpoly) != direct {
            return Some(violation(
                COMPLEMENT,
                r.graph6.clone(),
                format!("polynomial form, direct {direct}"),
            ));
        }
        if r.spectrum.is_integral() {
            let predicted = complement_spectrum(&r.spectrum).expect("integral");
            let actual = extract_spectrum(&direct);
            if predicted != actual {
                return Some(violation(
                    COMPLEMENT,
                    r.graph6.clone(),
                    format!("predicted {predicted}, direct {actual}"),
                ));
            }
        }
        None
    })
}

/// The join formula on every pair of graphs whose orders sum to `total`.
pub fn join_formula(total: usize, cache: Option<&Path>) -> Result<Vec<LemmaViolation>> {
    let mut out = Vec::new();
    for a in 1..=total / 2 {
        let left = analyze(&canonical_forms(a, cache)?);
        let right = if 2 * a == total {
            left.clone()
        } else {
            analyze(&canonical_forms(total - a, cache)?)
        };
        let found: Vec<LemmaViolation> = left
            .par_iter()
            .flat_map_iter(|g| right.iter().map(move |h| (g, h)))
            .filter_map(|(g, h)| {
                let direct = charpoly(&laplacian(&g.graph.join(&h.graph)));
                let label = format!("{} ∇ {}", g.graph6, h.graph6);
                if join_charpoly(&g.charpoly, &h.charpoly) != direct {
                    return Some(violation(
                        JOIN,
                        label,
                        format!("polynomial form, direct {direct}"),
                    ));
                }
                if g.spectrum.is_integral() && h.spectrum.is_integral() {
                    let predicted = join_spectrum(&g.spectrum, &h.spectrum).expect("integral");
                    let actual = extract_spectrum(&direct);
                    if predicted != actual {
                        return Some(violation(
                            JOIN,
                            label,
                            format!("predicted {predicted}, direct {actual}"),
                        ));
                    }
                }
                None
            })
            .collect();
        out.extend(found);
    }
    Ok(out)
}

/// `d(G) <= s - 1` for connected graphs on at least three vertices.
pub fn diameter_bound(records: &[GraphRecord]) -> Vec<LemmaViolation> {
    check_each(records, |r| {
        if !r.connected || r.graph.order() < 3 {
            return None;
        }
        let d = diameter(&r.graph).finite().expect("connected");
        let s = r.spectrum.distinct_count();
        (d + 1 > s).then(|| {
            violation(
                DIAMETER,
                r.graph6.clone(),
                format!("diameter {d}, distinct eigenvalues {s}"),
            )
        })
    })
}

/// The four cograph characterizations agree: complement-reducible recursion,
/// no induced `P_4`, every connected induced subgraph on two or more vertices
/// has a disconnected complement, every connected induced subgraph has
/// diameter at most 2.
pub fn cograph_equivalences(records: &[GraphRecord]) -> Vec<LemmaViolation> {
    let p4 = family(FamilyId::Path, &[4]).expect("P_4");
    check_each(records, |r| {
        let g = &r.graph;
        let recursive = is_cograph(g);
        let p4_free = contains_induced(g, &p4).is_none();
        let co = g.complement();
        let mut co_split = true;
        let mut small_diam = true;
        for mask in 1..=g.vertex_mask() {
            if let Some(d) = induced_diameter(g, mask).finite() {
                small_diam &= d <= 2;
                if mask.count_ones() >= 2 {
                    co_split &= induced_diameter(&co, mask).finite().is_none();
                }
            }
        }
        let agree = recursive == p4_free && p4_free == co_split && co_split == small_diam;
        (!agree).then(|| {
            violation(
                COGRAPH,
                r.graph6.clone(),
                format!("recursive={recursive}, p4-free={p4_free}, complements-split={co_split}, diameter<=2={small_diam}"),
            )
        })
    })
}

/// A non-integral eigenvalue of multiplicity `k` with `2k >= n` is impossible
/// in a connected graph.
pub fn integrality(records: &[GraphRecord]) -> Vec<LemmaViolation> {
    check_each(records, |r| {
        if !r.connected {
            return None;
        }
        let n = r.graph.order();
        r.spectrum
            .residual_factors()
            .into_iter()
            .find(|(_, k)| 2 * k >= n)
            .map(|(f, k)| {
                violation(
                    INTEGRALITY,
                    r.graph6.clone(),
                    format!("roots of {f} have multiplicity {k}"),
                )
            })
    })
}

/// Every nonzero integer eigenvalue `α` with `m(α) = n - m`, `1 <= m <= n - 2`,
/// passes [`submatrix_divisibility_check`]. Applies to orders `n >= 6`.
pub fn submatrix_divisibility(entries: &[CatalogEntry]) -> Result<Vec<LemmaViolation>> {
    let checks: Vec<(usize, i64, usize)> = entries
        .iter()
        .enumerate()
        .filter(|(_, e)| e.order() >= 6)
        .flat_map(|(i, e)| {
            let n = e.order();
            e.predicted_spectrum
                .integer_part()
                .iter()
                .filter(move |&&(a, k)| a != 0 && k >= 2 && k < n)
                .map(move |&(a, k)| (i, a, n - k))
                .collect::<Vec<_>>()
        })
        .collect();
    let results: Vec<Result<Option<LemmaViolation>>> = checks
        .par_iter()
        .map(|&(i, alpha, m)| {
            let e = &entries[i];
            Ok(
                (!submatrix_divisibility_check(&e.graph, alpha, m)?).then(|| {
                    violation(
                        DIVISIBILITY,
                        graph6_of(&e.graph),
                        format!(
                            "{}: (x-{alpha})^2 fails on some order-{} principal submatrix",
                            e.label,
                            m + 2
                        ),
                    )
                }),
            )
        })
        .collect();
    results.into_iter().filter_map(Result::transpose).collect()
}

/// Members of `𝒢(n, n-3)`, `n >= 6`, contain no induced `J_1`, `J_2`, `J_3`;
/// unless isomorphic to a `G_{n/2,r}` they have a disconnected complement and
/// are cographs. `gnr` lists the order-`n` instances.
pub fn member_structure(records: &[&GraphRecord], gnr: &[Graph]) -> Vec<LemmaViolation> {
    let patterns: Vec<(&str, Graph)> = [FamilyId::J1, FamilyId::J2, FamilyId::J3]
        .into_iter()
        .map(|id| (id.name(), family(id, &[]).expect("fixed graph")))
        .collect();
    records
        .par_iter()
        .flat_map_iter(|r| {
            let mut out = Vec::new();
            for (name, j) in &patterns {
                if let Some(w) = contains_induced(&r.graph, j) {
                    out.push(violation(
                        FORBIDDEN,
                        r.graph6.clone(),
                        format!("induced {name} on {w:?}"),
                    ));
                }
            }
            let is_gnr = gnr
                .iter()
                .any(|h| is_isomorphic(h, &r.graph).unwrap_or(false));
            if !is_gnr {
                if is_connected(&r.graph.complement()) {
                    out.push(violation(
                        COMPLEMENT_DISCONNECTED,
                        r.graph6.clone(),
                        "complement is connected".into(),
                    ));
                }
                if !is_cograph(&r.graph) {
                    out.push(violation(
                        MEMBER_COGRAPH,
                        r.graph6.clone(),
                        "contains an induced P_4".into(),
                    ));
                }
            }
            out
        })
        .collect()
}

/// The `G_{n/2,r}` instances of order `n` (empty for odd `n`).
pub fn gnr_instances(n: usize) -> Vec<Graph> {
    if n % 2 == 1 || n < 4 {
        return Vec::new();
    }
    (1..n / 2)
        .map(|r| family(FamilyId::Gnr, &[n / 2, r]).expect("valid parameters"))
        .collect()
}

/// `G_{n/2,r}` has a connected complement.
pub fn gnr_complement_connected(n: usize) -> Vec<LemmaViolation> {
    gnr_instances(n)
        .into_iter()
        .enumerate()
        .filter(|(_, g)| !is_connected(&g.complement()))
        .map(|(i, g)| {
            violation(
                GNR_COMPLEMENT,
                graph6_of(&g),
                format!("G_{{{},{}}}", n / 2, i + 1),
            )
        })
        .collect()
}

/// Catalog entries of every supported `k` at order `n`.
pub fn all_catalog_entries(n: usize) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for k in n.saturating_sub(3)..n {
        out.extend(catalog(n, k)?);
    }
    Ok(out)
}

/// Checks that `k_max` of every catalog(n, n-3) entry is forced to `n - 3`.
pub fn catalog_multiplicity(entries: &[CatalogEntry]) -> Vec<LemmaViolation> {
    entries
        .iter()
        .filter(|e| e.class.is_some())
        .filter_map(|e| {
            let (_, s) = laplacian_spectrum(&e.graph);
            let k = k_max(&s);
            (k + 3 != e.order()).then(|| {
                violation(
                    "catalog-multiplicity",
                    graph6_of(&e.graph),
                    format!("{}: k_max {k}", e.label),
                )
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_cliques_shape() {
        let g = Graph::complete(3)
            .disjoint_union(&Graph::complete(3))
            .disjoint_union(&Graph::new(2));
        assert!(is_equal_cliques_plus_isolated(&g));
        assert!(!is_equal_cliques_plus_isolated(&Graph::new(4)));
        let h = Graph::complete(3).disjoint_union(&Graph::complete(2));
        assert!(!is_equal_cliques_plus_isolated(&h));
        assert!(!is_equal_cliques_plus_isolated(
            &family(FamilyId::Path, &[3]).unwrap()
        ));
    }

    #[test]
    fn suites_clean_at_five() {
        let recs = analyze(&canonical_forms(5, None).unwrap());
        assert!(zero_multiplicity(&recs).is_empty());
        assert!(two_eigenvalues(&recs).is_empty());
        assert!(complement_formula(&recs).is_empty());
        assert!(diameter_bound(&recs).is_empty());
        assert!(cograph_equivalences(&recs).is_empty());
        assert!(integrality(&recs).is_empty());
        assert!(join_formula(5, None).unwrap().is_empty());
    }

    #[test]
    fn divisibility_and_gnr_complements() {
        for n in 6..=8 {
            assert!(submatrix_divisibility(&all_catalog_entries(n).unwrap())
                .unwrap()
                .is_empty());
            assert!(gnr_complement_connected(n).is_empty());
        }
    }

    #[test]
    fn suites_detect_planted_failures() {
        let c5 = family(FamilyId::Cycle, &[5]).unwrap();
        let rec = analyze(&[crate::graph::canonical_form(&c5).unwrap()]);
        let refs: Vec<&GraphRecord> = rec.iter().collect();
        let v = member_structure(&refs, &[]);
        assert!(v.iter().any(|x| x.lemma == FORBIDDEN));
        assert!(v.iter().any(|x| x.lemma == MEMBER_COGRAPH));
        assert!(v.iter().any(|x| x.lemma == COMPLEMENT_DISCONNECTED));
    }
}
