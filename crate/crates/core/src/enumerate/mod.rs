//! Isomorphism-free enumeration of small graphs and the exhaustive
//! verification harness built on it.

mod cache;
pub mod lemmas;
mod verify;

use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, to_graph6, CanonicalForm, Graph};
use crate::spectrum::{laplacian_spectrum, CharPoly};
use crate::structure::is_connected;

pub use cache::CACHE_ENV;
pub use verify::{verify_theorem, DlsViolation, EnumerationSummary, VerifyOptions};

/// Largest order the enumerator accepts.
pub const MAX_ENUM_ORDER: usize = 9;

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ENUM_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange {
            order: n,
            min: 1,
            max: MAX_ENUM_ORDER,
        })
    }
}

/// Cache directory named by the `LAPMULT_CACHE_DIR` environment variable, if set.
pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

/// Canonical forms of every unlabeled graph of order `n`, sorted.
pub fn canonical_forms(n: usize, cache: Option<&Path>) -> Result<Vec<CanonicalForm>> {
    check_order(n)?;
    if let Some(dir) = cache {
        if let Some(forms) = cache::load(dir, n) {
            return Ok(forms);
        }
    }
    let forms = if n == 1 {
        vec![canonical_form(&Graph::new(1))?]
    } else {
        augment(&canonical_forms(n - 1, cache)?)?
    };
    if let Some(dir) = cache {
        cache::store(dir, n, &forms)?;
    }
    Ok(forms)
}

/// Extends every graph by one vertex in all `2^(n-1)` ways and deduplicates.
///
/// Every graph of order `n` arises this way by deleting its last vertex, so
/// keeping disconnected parents is required even when only connected
/// children are wanted.
fn augment(parents: &[CanonicalForm]) -> Result<Vec<CanonicalForm>> {
    let merged = parents
        .par_iter()
        .try_fold(
            HashSet::new,
            |mut seen, form| -> Result<HashSet<CanonicalForm>> {
                let g = form.to_graph();
                for mask in 0..1u64 << g.order() {
                    seen.insert(canonical_form(&g.with_vertex(mask))?);
                }
                Ok(seen)
            },
        )
        .try_reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return Ok(b.into_iter().chain(a).collect());
            }
            a.extend(b);
            Ok(a)
        })?;
    let mut forms: Vec<_> = merged.into_iter().collect();
    forms.par_sort_unstable();
    Ok(forms)
}

/// Every unlabeled graph of order `n` (`1 <= n <= 9`) exactly once, as
/// canonical representatives sorted by canonical form.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    all_graphs_with(n, None)
}

pub fn all_graphs_with(n: usize, cache: Option<&Path>) -> Result<Vec<Graph>> {
    Ok(canonical_forms(n, cache)?
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

/// The connected graphs among [`all_graphs`].
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    connected_graphs_with(n, None)
}

pub fn connected_graphs_with(n: usize, cache: Option<&Path>) -> Result<Vec<Graph>> {
    Ok(all_graphs_with(n, cache)?
        .into_iter()
        .filter(is_connected)
        .collect())
}

/// Connected graphs of order `n` grouped by Laplacian characteristic
/// polynomial; each list is in canonical order.
pub fn spectrum_buckets(n: usize) -> Result<BTreeMap<CharPoly, Vec<String>>> {
    let graphs = connected_graphs(n)?;
    let keyed: Vec<(CharPoly, String)> = graphs
        .par_iter()
        .map(|g| (laplacian_spectrum(g).0, graph6_of(g)))
        .collect();
    let mut out: BTreeMap<CharPoly, Vec<String>> = BTreeMap::new();
    for (p, s) in keyed {
        out.entry(p).or_default().push(s);
    }
    Ok(out)
}

/// graph6 text of a graph within the enumerator's order range.
pub(crate) fn graph6_of(g: &Graph) -> String {
    to_graph6(g).expect("enumerated orders fit graph6")
}
