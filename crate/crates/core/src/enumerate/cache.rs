//! On-disk cache of canonical graph sets, one file per order.
//!
//! Layout: a four-line header (format tag with version, order, count,
//! SHA-256 of the body) followed by one graph6 line per canonical graph.
//! Files whose header or digest do not match are ignored and regenerated.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, from_graph6, CanonicalForm};

pub const CACHE_ENV: &str = "LAPMULT_CACHE_DIR";

const MAGIC: &str = "lapmult-graph-set 1";

fn path_for(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("order-{n}.g6"))
}

fn body_of(forms: &[CanonicalForm]) -> String {
    let mut body = String::new();
    for f in forms {
        body.push_str(&super::graph6_of(&f.to_graph()));
        body.push('\n');
    }
    body
}

fn digest(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

pub(super) fn load(dir: &Path, n: usize) -> Option<Vec<CanonicalForm>> {
    let text = fs::read_to_string(path_for(dir, n)).ok()?;
    let mut parts = text.splitn(5, '\n');
    let magic = parts.next()?;
    let order = parts
        .next()?
        .strip_prefix("order ")?
        .parse::<usize>()
        .ok()?;
    let count = parts
        .next()?
        .strip_prefix("count ")?
        .parse::<usize>()
        .ok()?;
    let sum = parts.next()?.strip_prefix("sha256 ")?;
    let body = parts.next().unwrap_or("");
    if magic != MAGIC || order != n || sum != digest(body) {
        return None;
    }
    let mut forms = Vec::with_capacity(count);
    for line in body.lines() {
        let g = from_graph6(line).ok()?;
        if g.order() != n {
            return None;
        }
        let f = canonical_form(&g).ok()?;
        if f.to_graph() != g {
            return None;
        }
        forms.push(f);
    }
    let sorted = forms.windows(2).all(|w| w[0] < w[1]);
    (forms.len() == count && sorted).then_some(forms)
}

pub(super) fn store(dir: &Path, n: usize, forms: &[CanonicalForm]) -> Result<()> {
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let body = body_of(forms);
    let target = path_for(dir, n);
    let tmp = dir.join(format!(".order-{n}.g6.{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp).map_err(io)?;
        write!(
            f,
            "{MAGIC}\norder {n}\ncount {}\nsha256 {}\n{body}",
            forms.len(),
            digest(&body)
        )
        .map_err(io)?;
        f.sync_all().map_err(io)?;
    }
    fs::rename(&tmp, &target).map_err(io)
}
