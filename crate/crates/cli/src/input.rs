use std::fs;
use std::path::PathBuf;

use clap::Args;
use lapmult_core::{family, from_graph6, to_graph6, Error, FamilyId, Graph, Result};
use serde_json::{json, Value};

/// Exactly one graph source.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// A graph in graph6 format.
    #[arg(long, value_name = "STR")]
    graph6: Option<String>,
    /// File with one graph6 string per line; blank lines and lines starting with '#' are skipped.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// A named family and its integer parameters, e.g. `--family gnr 4 1`.
    #[arg(long, value_name = "NAME ARGS", num_args = 1..)]
    family: Option<Vec<String>>,
}

pub struct Labeled {
    pub descriptor: Value,
    pub graph: Graph,
}

impl GraphInput {
    pub fn load(&self) -> Result<Vec<Labeled>> {
        if let Some(s) = &self.graph6 {
            return Ok(vec![Labeled {
                descriptor: json!({ "graph6": s }),
                graph: from_graph6(s)?,
            }]);
        }
        if let Some(path) = &self.file {
            let text = fs::read_to_string(path).map_err(|e| Error::Graph6 {
                offset: 0,
                reason: format!("cannot read {}: {e}", path.display()),
            })?;
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let graph = from_graph6(line).map_err(|e| match e {
                    Error::Graph6 { offset, reason } => Error::Graph6 {
                        offset,
                        reason: format!("{}:{}: {reason}", path.display(), i + 1),
                    },
                    other => other,
                })?;
                out.push(Labeled {
                    descriptor: json!({ "file": path.display().to_string(), "line": i + 1, "graph6": line }),
                    graph,
                });
            }
            return Ok(out);
        }
        let spec = self.family.as_ref().expect("clap enforces one input");
        let id: FamilyId = spec[0].parse()?;
        let params = spec[1..]
            .iter()
            .map(|p| {
                p.parse::<usize>().map_err(|_| Error::FamilyParams {
                    family: id.name().to_string(),
                    reason: format!("parameter {p:?} is not a non-negative integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let graph = family(id, &params)?;
        let descriptor = json!({
            "family": id.name(),
            "params": params,
            "graph6": to_graph6(&graph).ok(),
        });
        Ok(vec![Labeled { descriptor, graph }])
    }
}
