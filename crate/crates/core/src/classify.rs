//! Membership in `𝒢(n, k)`, the five classes of `𝒢(n, n-3)` and the catalog of
//! their members with predicted spectra.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{family, is_isomorphic, to_graph6, FamilyId, Graph};
use crate::spectrum::{laplacian_spectrum, CharPoly, ExactSpectrum, Poly};
use crate::structure::is_connected;

/// The five classes of `𝒢(n, n-3)`, `n >= 6`, by spectrum shape.
///
/// With `α` the eigenvalue of multiplicity `n - 3`:
/// * `G1`: `[α^{n-3}, β^2, 0]`, `α > β`
/// * `G2`: `[β^2, α^{n-3}, 0]`, `β > α`
/// * `G3`: `[α^{n-3}, β, γ, 0]`, `α > β > γ`
/// * `G4`: `[β, α^{n-3}, γ, 0]`
/// * `G5`: `[β, γ, α^{n-3}, 0]`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    G1,
    G2,
    G3,
    G4,
    G5,
}

impl ClassId {
    pub const ALL: [ClassId; 5] = [
        ClassId::G1,
        ClassId::G2,
        ClassId::G3,
        ClassId::G4,
        ClassId::G5,
    ];

    /// Class from the number of distinct eigenvalues and the number of
    /// distinct eigenvalues exceeding `α`.
    fn from_shape(distinct: usize, above: usize) -> Option<ClassId> {
        match (distinct, above) {
            (3, 0) => Some(ClassId::G1),
            (3, 1) => Some(ClassId::G2),
            (4, 0) => Some(ClassId::G3),
            (4, 1) => Some(ClassId::G4),
            (4, 2) => Some(ClassId::G5),
            _ => None,
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Outcome of classifying a connected graph against `𝒢(n, n-3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    Member(ClassId),
    /// Member at `n = 4` or `5`, where the five-class partition does not apply.
    SmallOrder,
    NotMember,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Class::Member(c) => c.fmt(f),
            Class::SmallOrder => f.write_str("small-order"),
            Class::NotMember => f.write_str("not-member"),
        }
    }
}

impl Serialize for Class {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// How "has an eigenvalue of multiplicity `k`" is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MembershipRule {
    /// The largest multiplicity of a nonzero eigenvalue is exactly `k`.
    #[default]
    MaxMultiplicity,
    /// Some nonzero eigenvalue has multiplicity exactly `k`.
    AnyMultiplicity,
}

impl MembershipRule {
    pub fn admits(self, s: &ExactSpectrum, k: usize) -> bool {
        match self {
            MembershipRule::MaxMultiplicity => k_max(s) == k,
            MembershipRule::AnyMultiplicity => s.nonzero_multiplicities().contains(&k),
        }
    }
}

/// Largest multiplicity of a nonzero eigenvalue; residual roots count with
/// their exact multiplicities.
pub fn k_max(s: &ExactSpectrum) -> usize {
    s.max_nonzero_multiplicity()
}

/// Which part of the classification produced a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogSource {
    /// `𝒢(n, n-1)`.
    OneBelow,
    /// `𝒢(n, n-2)`.
    TwoBelow,
    /// `𝒢(n, n-3)`, `n >= 6`.
    Class(ClassId),
    /// The computed lists for `𝒢(4, 1)` and `𝒢(5, 2)`.
    SmallOrder,
}

impl fmt::Display for CatalogSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSource::OneBelow => f.write_str("k=n-1"),
            CatalogSource::TwoBelow => f.write_str("k=n-2"),
            CatalogSource::Class(c) => write!(f, "k=n-3/{c}"),
            CatalogSource::SmallOrder => f.write_str("k=n-3/small-order"),
        }
    }
}

impl Serialize for CatalogSource {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn graph_as_graph6<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    match to_graph6(g) {
        Ok(text) => s.serialize_str(&text),
        Err(e) => Err(serde::ser::Error::custom(e)),
    }
}

/// A family member at concrete parameters together with its predicted spectrum.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub label: String,
    pub family: FamilyId,
    pub params: Vec<usize>,
    pub class: Option<ClassId>,
    pub source: CatalogSource,
    #[serde(rename = "graph6", serialize_with = "graph_as_graph6")]
    pub graph: Graph,
    pub predicted_spectrum: ExactSpectrum,
}

impl CatalogEntry {
    fn new(
        label: String,
        id: FamilyId,
        params: Vec<usize>,
        source: CatalogSource,
        ints: &[(i64, usize)],
        residual: Option<Poly>,
    ) -> Result<CatalogEntry> {
        let graph = family(id, &params)?;
        let predicted_spectrum = ExactSpectrum::from_parts(ints, residual);
        debug_assert_eq!(predicted_spectrum.order(), graph.order());
        let class = match source {
            CatalogSource::Class(c) => Some(c),
            _ => None,
        };
        Ok(CatalogEntry {
            label,
            family: id,
            params,
            class,
            source,
            graph,
            predicted_spectrum,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// Complete multipartite graph with `ones` singleton parts followed by `rest`.
fn multipartite_params(ones: usize, rest: &[usize]) -> Vec<usize> {
    let mut p = vec![1; ones];
    p.extend_from_slice(rest);
    p
}

/// Every candidate entry of `catalog(n, k)` before isomorphism deduplication.
fn candidates(n: usize, k: usize) -> Result<Vec<CatalogEntry>> {
    use CatalogSource as S;
    use ClassId::*;
    use FamilyId::*;

    let unsupported = || Error::UnsupportedCatalog { n, k };
    if !(4..=crate::graph::MAX_ORDER).contains(&n) || k + 3 < n || k >= n {
        return Err(unsupported());
    }
    let ni = n as i64;
    let mut out = Vec::new();
    if k == n - 1 {
        out.push(CatalogEntry::new(
            format!("K_{n}"),
            Complete,
            vec![n],
            S::OneBelow,
            &[(ni, n - 1), (0, 1)],
            None,
        )?);
        return Ok(out);
    }
    if k == n - 2 {
        if n.is_multiple_of(2) {
            let h = n / 2;
            out.push(CatalogEntry::new(
                format!("K_{{{h},{h}}}"),
                CompleteBipartite,
                vec![h, h],
                S::TwoBelow,
                &[(ni, 1), (h as i64, n - 2), (0, 1)],
                None,
            )?);
        }
        out.push(CatalogEntry::new(
            format!("K_{{1,{}}}", n - 1),
            Star,
            vec![n],
            S::TwoBelow,
            &[(ni, 1), (1, n - 2), (0, 1)],
            None,
        )?);
        out.push(CatalogEntry::new(
            format!("K_{n}-e"),
            CompleteMinusEdge,
            vec![n],
            S::TwoBelow,
            &[(ni, n - 2), (ni - 2, 1), (0, 1)],
            None,
        )?);
        return Ok(out);
    }

    match n {
        4 => {
            out.push(CatalogEntry::new(
                "P_4".into(),
                Path,
                vec![4],
                S::SmallOrder,
                &[(2, 1), (0, 1)],
                Some(Poly::from_i64(&[2, -4, 1])),
            )?);
            out.push(CatalogEntry::new(
                "K_{1,3}+e".into(),
                StarPlusEdge,
                vec![4],
                S::SmallOrder,
                &[(4, 1), (3, 1), (1, 1), (0, 1)],
                None,
            )?);
        }
        5 => {
            out.push(CatalogEntry::new(
                "C_5".into(),
                Cycle,
                vec![5],
                S::SmallOrder,
                &[(0, 1)],
                Some(Poly::from_i64(&[5, -5, 1]).pow(2)),
            )?);
            out.push(CatalogEntry::new(
                "K_1∇C_4".into(),
                CompleteMultipartite,
                vec![1, 2, 2],
                S::SmallOrder,
                &[(5, 2), (3, 2), (0, 1)],
                None,
            )?);
            out.push(CatalogEntry::new(
                "K_2∇3K_1".into(),
                CompleteMultipartite,
                vec![1, 1, 3],
                S::SmallOrder,
                &[(5, 2), (2, 2), (0, 1)],
                None,
            )?);
        }
        _ => {
            let m = n - 3;
            // G1
            out.push(CatalogEntry::new(
                format!("3K_1∇K_{m}"),
                CompleteMultipartite,
                multipartite_params(m, &[3]),
                S::Class(G1),
                &[(ni, m), (ni - 3, 2), (0, 1)],
                None,
            )?);
            out.push(CatalogEntry::new(
                format!("C_4∇K_{}", n - 4),
                CompleteMultipartite,
                multipartite_params(n - 4, &[2, 2]),
                S::Class(G1),
                &[(ni, m), (ni - 2, 2), (0, 1)],
                None,
            )?);
            // G2
            out.push(CatalogEntry::new(
                format!("K_2∇{}K_1", n - 2),
                CompleteMultipartite,
                multipartite_params(2, &[n - 2]),
                S::Class(G2),
                &[(ni, 2), (2, m), (0, 1)],
                None,
            )?);
            if n % 2 == 1 {
                let a = (n - 1) / 2;
                out.push(CatalogEntry::new(
                    format!("K_1∇K_{{{a},{a}}}"),
                    CompleteMultipartite,
                    vec![1, a, a],
                    S::Class(G2),
                    &[(ni, 2), ((ni + 1) / 2, m), (0, 1)],
                    None,
                )?);
            }
            if n.is_multiple_of(3) {
                let t = n / 3;
                out.push(CatalogEntry::new(
                    format!("K_{{{t},{t},{t}}}"),
                    CompleteMultipartite,
                    vec![t, t, t],
                    S::Class(G2),
                    &[(ni, 2), (2 * ni / 3, m), (0, 1)],
                    None,
                )?);
            }
            // G3
            out.push(CatalogEntry::new(
                format!("K_{m}∇(K_2∪K_1)"),
                Eq1Graph,
                vec![n],
                S::Class(G3),
                &[(ni, m), (ni - 1, 1), (ni - 3, 1), (0, 1)],
                None,
            )?);
            // G4
            if n % 2 == 1 {
                let a = (n - 1) / 2;
                out.push(CatalogEntry::new(
                    format!("K_1∇2K_{a}"),
                    ConeTwoCliques,
                    vec![n],
                    S::Class(G4),
                    &[(ni, 1), ((ni + 1) / 2, m), (1, 1), (0, 1)],
                    None,
                )?);
            }
            if n.is_multiple_of(3) {
                let t = n / 3;
                out.push(CatalogEntry::new(
                    format!("{t}K_1∇2K_{t}"),
                    SplitJoin,
                    vec![n],
                    S::Class(G4),
                    &[(ni, 1), (2 * ni / 3, m), (ni / 3, 1), (0, 1)],
                    None,
                )?);
            }
            out.push(CatalogEntry::new(
                format!("K_{}+e", n - 1),
                CompletePlusPendant,
                vec![n],
                S::Class(G4),
                &[(ni, 1), (ni - 1, m), (1, 1), (0, 1)],
                None,
            )?);
            if n.is_multiple_of(2) {
                let h = n / 2;
                let hi = h as i64;
                for r in 1..h {
                    let ri = r as i64;
                    let quad = Poly::from_i64(&[2 * (hi - ri) * (hi - ri), -(3 * hi - 2 * ri), 1]);
                    out.push(CatalogEntry::new(
                        format!("G_{{{h},{r}}}"),
                        Gnr,
                        vec![h, r],
                        S::Class(G4),
                        &[(hi, n - 3), (0, 1)],
                        Some(quad),
                    )?);
                }
            }
            // G5
            out.push(CatalogEntry::new(
                format!("K_{{2,{}}}", n - 2),
                CompleteBipartite,
                vec![2, n - 2],
                S::Class(G5),
                &[(ni, 1), (ni - 2, 1), (2, m), (0, 1)],
                None,
            )?);
            if n.is_multiple_of(2) {
                let h = n / 2;
                out.push(CatalogEntry::new(
                    format!("K_{{{h},{h}}}+e"),
                    BalancedBipartitePlusEdge,
                    vec![n],
                    S::Class(G5),
                    &[(ni, 1), (h as i64 + 2, 1), (h as i64, m), (0, 1)],
                    None,
                )?);
            }
            out.push(CatalogEntry::new(
                format!("K_{{1,{}}}+e", n - 1),
                StarPlusEdge,
                vec![n],
                S::Class(G5),
                &[(ni, 1), (3, 1), (1, m), (0, 1)],
                None,
            )?);
        }
    }
    Ok(out)
}

/// Known members of `𝒢(n, k)` for `k ∈ {n-1, n-2, n-3}`, pairwise
/// non-isomorphic, in class order. Where two families coincide the first one
/// listed is kept.
pub fn catalog(n: usize, k: usize) -> Result<Vec<CatalogEntry>> {
    let mut kept: Vec<CatalogEntry> = Vec::new();
    for e in candidates(n, k)? {
        let mut dup = false;
        for other in &kept {
            if is_isomorphic(&e.graph, &other.graph)? {
                dup = true;
                break;
            }
        }
        if !dup {
            kept.push(e);
        }
    }
    Ok(kept)
}

/// A catalog candidate whose computed spectrum differs from its prediction.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumMismatch {
    pub label: String,
    pub k: usize,
    pub predicted: ExactSpectrum,
    pub computed: ExactSpectrum,
}

/// Checks every catalog candidate of order `n` (all three `k`, before
/// deduplication) against its computed exact spectrum.
pub fn verify_catalog_spectra(n: usize) -> Result<Vec<SpectrumMismatch>> {
    let mut all = Vec::new();
    for k in n.saturating_sub(3)..n {
        for e in candidates(n, k)? {
            all.push((k, e));
        }
    }
    Ok(all
        .into_par_iter()
        .filter_map(|(k, e)| {
            let (_, computed) = laplacian_spectrum(&e.graph);
            (computed != e.predicted_spectrum).then_some(SpectrumMismatch {
                label: e.label,
                k,
                predicted: e.predicted_spectrum,
                computed,
            })
        })
        .collect())
}

/// Catalog entry recognized in a classified graph.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyMatch {
    pub label: String,
    pub family: FamilyId,
    pub params: Vec<usize>,
    pub source: CatalogSource,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub order: usize,
    pub charpoly: CharPoly,
    pub spectrum: ExactSpectrum,
    pub distinct_count: usize,
    pub k_max: usize,
    pub class: Class,
    pub matched_family: Option<FamilyMatch>,
}

/// Classifies a connected graph on at least 4 vertices under [`MembershipRule::MaxMultiplicity`].
pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    classify_with(g, MembershipRule::default())
}

pub fn classify_with(g: &Graph, rule: MembershipRule) -> Result<ClassificationReport> {
    let n = g.order();
    if n < 4 {
        return Err(Error::OrderOutOfRange {
            order: n,
            min: 4,
            max: crate::graph::MAX_ORDER,
        });
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let (charpoly, spectrum) = laplacian_spectrum(g);
    let km = k_max(&spectrum);
    let distinct = spectrum.distinct_count();
    let class = if !rule.admits(&spectrum, n - 3) {
        Class::NotMember
    } else if n < 6 {
        Class::SmallOrder
    } else {
        let alpha = spectrum
            .integer_part()
            .iter()
            .find(|&&(v, m)| v != 0 && m == n - 3)
            .map(|&(v, _)| v)
            .ok_or(Error::NonIntegralMultiple(n - 3))?;
        match ClassId::from_shape(distinct, spectrum.distinct_above(alpha)) {
            Some(c) => Class::Member(c),
            None => Class::NotMember,
        }
    };
    let mut matched_family = None;
    for k in [n - 1, n - 2, n - 3] {
        if !rule.admits(&spectrum, k) {
            continue;
        }
        for e in catalog(n, k)? {
            if e.predicted_spectrum == spectrum && is_isomorphic(&e.graph, g)? {
                matched_family = Some(FamilyMatch {
                    label: e.label,
                    family: e.family,
                    params: e.params,
                    source: e.source,
                });
                break;
            }
        }
        if matched_family.is_some() {
            break;
        }
    }
    Ok(ClassificationReport {
        order: n,
        charpoly,
        spectrum,
        distinct_count: distinct,
        k_max: km,
        class,
        matched_family,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilyId::*;

    fn f(id: FamilyId, p: &[usize]) -> Graph {
        family(id, p).unwrap()
    }

    #[test]
    fn k_max_examples() {
        let s = |g: &Graph| laplacian_spectrum(g).1;
        assert_eq!(k_max(&s(&f(Cycle, &[4]))), 2);
        assert_eq!(k_max(&s(&f(Path, &[4]))), 1);
        assert_eq!(k_max(&s(&Graph::complete(6))), 5);
        assert_eq!(k_max(&s(&f(Cycle, &[5]))), 2);
    }

    #[test]
    fn literal_rule_admits_c4_at_four() {
        let (_, s) = laplacian_spectrum(&f(Cycle, &[4]));
        assert!(!MembershipRule::MaxMultiplicity.admits(&s, 1));
        assert!(MembershipRule::AnyMultiplicity.admits(&s, 1));
    }

    #[test]
    fn classify_examples() {
        let r = classify(&f(CompleteMultipartite, &[1, 1, 1, 3])).unwrap();
        assert_eq!(r.class, Class::Member(ClassId::G1));
        assert_eq!(r.matched_family.unwrap().label, "3K_1∇K_3");

        let r = classify(&f(CompleteBipartite, &[2, 4])).unwrap();
        assert_eq!(r.class, Class::Member(ClassId::G5));
        assert_eq!(r.matched_family.unwrap().family, CompleteBipartite);

        let r = classify(&f(Path, &[4])).unwrap();
        assert_eq!(r.class, Class::SmallOrder);
        assert_eq!(r.matched_family.unwrap().label, "P_4");

        let r = classify(&Graph::complete(6)).unwrap();
        assert_eq!(r.k_max, 5);
        assert_eq!(r.class, Class::NotMember);
        assert_eq!(r.matched_family.unwrap().source, CatalogSource::OneBelow);

        let c4_k2 = f(Cycle, &[4]).join(&Graph::complete(2));
        assert_eq!(classify(&c4_k2).unwrap().class, Class::Member(ClassId::G1));

        let r = classify(&f(Gnr, &[4, 1])).unwrap();
        assert_eq!(r.class, Class::Member(ClassId::G4));
        assert_eq!(r.distinct_count, 4);
    }

    #[test]
    fn classify_rejects_bad_input() {
        assert!(matches!(
            classify(&Graph::complete(3)),
            Err(Error::OrderOutOfRange { .. })
        ));
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(matches!(classify(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn catalog_shapes() {
        assert_eq!(catalog(7, 6).unwrap().len(), 1);
        assert_eq!(catalog(5, 2).unwrap().len(), 3);
        assert_eq!(catalog(4, 1).unwrap().len(), 2);
        let eight: Vec<_> = catalog(8, 5)
            .unwrap()
            .into_iter()
            .map(|e| e.label)
            .collect();
        for r in 1..4 {
            assert!(eight.contains(&format!("G_{{4,{r}}}")), "{eight:?}");
        }
        assert!(catalog(8, 3).is_err());
        assert!(catalog(3, 1).is_err());
    }

    #[test]
    fn catalog_is_pairwise_non_isomorphic() {
        for n in 4..=12 {
            for k in n - 3..n {
                let c = catalog(n, k).unwrap();
                for (i, a) in c.iter().enumerate() {
                    assert_eq!(a.predicted_spectrum.order(), n);
                    for b in &c[i + 1..] {
                        assert!(
                            !is_isomorphic(&a.graph, &b.graph).unwrap(),
                            "{} ~ {}",
                            a.label,
                            b.label
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn predicted_spectra_small() {
        for n in 4..=14 {
            assert!(verify_catalog_spectra(n).unwrap().is_empty(), "n={n}");
        }
    }

    #[test]
    fn catalog_members_round_trip_through_classify() {
        for n in 6..=9 {
            for e in catalog(n, n - 3).unwrap() {
                let r = classify(&e.graph).unwrap();
                assert_eq!(r.k_max, n - 3, "{}", e.label);
                assert_eq!(r.class, Class::Member(e.class.unwrap()), "{}", e.label);
                assert_eq!(r.matched_family.unwrap().label, e.label);
            }
        }
    }
}
