use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;

use serde::Serialize;

use super::lemmas::{self, GraphRecord, LemmaViolation};
use super::{canonical_forms, graph6_of};
use crate::classify::{catalog, MembershipRule};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm};
use crate::spectrum::CharPoly;

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Skip the cospectral-mate search.
    pub skip_dls: bool,
    /// Directory of cached canonical graph sets.
    pub cache: Option<PathBuf>,
    pub rule: MembershipRule,
    /// Skip the lemma property suites.
    pub skip_lemmas: bool,
}

/// A catalog member sharing its characteristic polynomial with another
/// connected graph of the same order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DlsViolation {
    pub charpoly: CharPoly,
    pub graphs: Vec<String>,
}

/// Per-order verification report. Lists are in canonical-form order.
#[derive(Clone, Debug, Serialize)]
pub struct EnumerationSummary {
    pub order: usize,
    pub total_graphs: usize,
    pub connected_graphs: usize,
    pub found_members: Vec<String>,
    pub catalog_members: Vec<String>,
    pub set_equal: bool,
    /// Found by enumeration but absent from the catalog.
    pub found_not_in_catalog: Vec<String>,
    /// In the catalog but not found by enumeration.
    pub catalog_not_found: Vec<String>,
    pub dls_checked: bool,
    pub dls_violations: Vec<DlsViolation>,
    pub lemmas_checked: Vec<String>,
    pub lemma_violations: Vec<LemmaViolation>,
}

impl EnumerationSummary {
    /// Set equality holds and nothing was violated.
    pub fn passed(&self) -> bool {
        self.set_equal && self.dls_violations.is_empty() && self.lemma_violations.is_empty()
    }
}

fn graph6_list(forms: &BTreeSet<CanonicalForm>) -> Vec<String> {
    forms.iter().map(|f| graph6_of(&f.to_graph())).collect()
}

/// Enumerates the connected graphs of order `n` (`4 <= n <= 9`), compares
/// the members of `𝒢(n, n-3)` with the catalog, searches for cospectral
/// mates of every catalog member and runs the lemma suites at this order.
pub fn verify_theorem(n: usize, opts: &VerifyOptions) -> Result<EnumerationSummary> {
    if !(4..=super::MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            order: n,
            min: 4,
            max: super::MAX_ENUM_ORDER,
        });
    }
    let cache = opts.cache.as_deref();
    let records = lemmas::analyze(&canonical_forms(n, cache)?);
    let connected: Vec<&GraphRecord> = records.iter().filter(|r| r.connected).collect();

    let members: Vec<&GraphRecord> = connected
        .iter()
        .copied()
        .filter(|r| opts.rule.admits(&r.spectrum, n - 3))
        .collect();
    let found: BTreeSet<CanonicalForm> = members.iter().map(|r| r.form.clone()).collect();
    let target = catalog(n, n - 3)?;
    let expected: BTreeSet<CanonicalForm> = target
        .iter()
        .map(|e| canonical_form(&e.graph))
        .collect::<Result<_>>()?;

    let mut dls_violations = Vec::new();
    if !opts.skip_dls {
        let mut buckets: HashMap<&CharPoly, Vec<&GraphRecord>> = HashMap::new();
        for r in &connected {
            buckets.entry(&r.charpoly).or_default().push(r);
        }
        let mut seen = BTreeSet::new();
        for e in lemmas::all_catalog_entries(n)? {
            let p = crate::spectrum::laplacian_spectrum(&e.graph).0;
            let bucket = buckets.get(&p).map(Vec::as_slice).unwrap_or(&[]);
            if bucket.len() >= 2 && seen.insert(p.clone()) {
                dls_violations.push(DlsViolation {
                    charpoly: p,
                    graphs: bucket.iter().map(|r| r.graph6.clone()).collect(),
                });
            }
        }
        dls_violations.sort_by(|a, b| a.graphs.cmp(&b.graphs));
    }

    let mut lemma_violations = Vec::new();
    let mut lemmas_checked = Vec::new();
    if !opts.skip_lemmas {
        let mut run = |id: &str, v: Vec<LemmaViolation>| {
            lemmas_checked.push(id.to_string());
            lemma_violations.extend(v);
        };
        let owned: Vec<GraphRecord> = connected.iter().map(|r| (*r).clone()).collect();
        run(
            lemmas::ZERO_MULTIPLICITY,
            lemmas::zero_multiplicity(&records),
        );
        run(lemmas::TWO_EIGENVALUES, lemmas::two_eigenvalues(&records));
        run(lemmas::COMPLEMENT, lemmas::complement_formula(&owned));
        run(lemmas::JOIN, lemmas::join_formula(n, cache)?);
        run(lemmas::DIAMETER, lemmas::diameter_bound(&owned));
        run(lemmas::COGRAPH, lemmas::cograph_equivalences(&records));
        run(lemmas::INTEGRALITY, lemmas::integrality(&owned));
        if n >= 6 {
            let entries = lemmas::all_catalog_entries(n)?;
            run(
                lemmas::DIVISIBILITY,
                lemmas::submatrix_divisibility(&entries)?,
            );
            let gnr = lemmas::gnr_instances(n);
            let structure = lemmas::member_structure(&members, &gnr);
            run(lemmas::FORBIDDEN, structure);
            run(lemmas::COMPLEMENT_DISCONNECTED, Vec::new());
            run(lemmas::MEMBER_COGRAPH, Vec::new());
            run(lemmas::GNR_COMPLEMENT, lemmas::gnr_complement_connected(n));
        }
        lemma_violations.sort();
    }

    Ok(EnumerationSummary {
        order: n,
        total_graphs: records.len(),
        connected_graphs: connected.len(),
        found_members: graph6_list(&found),
        catalog_members: graph6_list(&expected),
        set_equal: found == expected,
        found_not_in_catalog: graph6_list(&found.difference(&expected).cloned().collect()),
        catalog_not_found: graph6_list(&expected.difference(&found).cloned().collect()),
        dls_checked: !opts.skip_dls,
        dls_violations,
        lemmas_checked,
        lemma_violations,
    })
}
