//! `lapmult`: exact Laplacian spectra, classification and exhaustive
//! verification from the command line. Every command prints one JSON report
//! with sorted keys.

mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use lapmult_core::classify::{classify_with, verify_catalog_spectra, ClassificationReport};
use lapmult_core::enumerate::{cache_dir_from_env, MAX_ENUM_ORDER};
use lapmult_core::spectrum::{numeric_eigenvalues, EIGENVALUE_TOL};
use lapmult_core::{
    catalog, k_max, laplacian, laplacian_spectrum, verify_theorem, Error, FamilyId, MembershipRule,
    VerifyOptions,
};
use serde_json::{json, Value};

use input::GraphInput;

const EXIT_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "lapmult",
    version,
    about = "Laplacian eigenvalue multiplicity toolkit"
)]
struct Cli {
    /// Print only a one-line verdict instead of the full report.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, clap::ValueEnum)]
enum Rule {
    /// Largest nonzero multiplicity equals k.
    Max,
    /// Some nonzero eigenvalue has multiplicity exactly k.
    Any,
}

impl From<Rule> for MembershipRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Max => MembershipRule::MaxMultiplicity,
            Rule::Any => MembershipRule::AnyMultiplicity,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact Laplacian spectrum with a numeric cross-check.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Membership in G(n, n-3), class and matching catalog family.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "max")]
        rule: Rule,
    },
    /// Catalog of G(n, k) for k in {n-1, n-2, n-3} with predicted and computed spectra.
    Catalog {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive verification at order n.
    Verify {
        #[arg(long)]
        n: usize,
        /// Skip the cospectral-mate search.
        #[arg(long)]
        skip_dls: bool,
        /// Skip the lemma property suites.
        #[arg(long)]
        skip_lemmas: bool,
        /// Allow n = 9.
        #[arg(long)]
        stretch_n9: bool,
        /// Worker threads (defaults to all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Cache directory for enumerated graph sets (overrides LAPMULT_CACHE_DIR).
        #[arg(long, value_name = "PATH")]
        cache: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "max")]
        rule: Rule,
    },
    /// List the graph families with their parameters.
    Families,
}

/// Result of one command: report payload, one-line verdict, exit status.
struct Outcome {
    input: Value,
    result: Value,
    verdict: String,
    status: u8,
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::CanonBudget(_) | Error::Cache(_) | Error::NonIntegralMultiple(_) => EXIT_LIMIT,
        _ => EXIT_BAD_INPUT,
    }
}

fn spectrum_json(g: &lapmult_core::Graph) -> lapmult_core::Result<Value> {
    let (p, s) = laplacian_spectrum(g);
    let numeric = numeric_eigenvalues(&laplacian(g))?;
    let mut agrees = true;
    for &(v, m) in s.integer_part() {
        let close = numeric
            .iter()
            .filter(|x| (**x - v as f64).abs() <= EIGENVALUE_TOL)
            .count();
        agrees &= close == m;
    }
    Ok(json!({
        "order": g.order(),
        "charpoly": p.to_string(),
        "integer_part": s.integer_part(),
        "residual": s.residual().map(|r| r.to_string()),
        "residual_factors": s.residual_factors().iter().map(|(f, m)| json!({"factor": f.to_string(), "multiplicity": m})).collect::<Vec<_>>(),
        "quadratic_pair": s.quadratic_pair(),
        "distinct_count": s.distinct_count(),
        "k_max": k_max(&s),
        "numeric_eigenvalues": numeric,
        "numeric_agrees": agrees,
    }))
}

fn run(cmd: &Command) -> Result<Outcome, (Value, Error)> {
    let none = Value::Null;
    match cmd {
        Command::Spectrum { input } => {
            let graphs = input.load().map_err(|e| (none.clone(), e))?;
            let mut results = Vec::new();
            let mut agrees = true;
            for g in &graphs {
                let r = spectrum_json(&g.graph).map_err(|e| (g.descriptor.clone(), e))?;
                agrees &= r["numeric_agrees"].as_bool().unwrap_or(false);
                results.push(r);
            }
            let verdict = results
                .iter()
                .map(|r| r["charpoly"].as_str().unwrap_or("").to_string())
                .collect::<Vec<_>>()
                .join("; ");
            Ok(single_or_list(
                graphs.iter().map(|g| g.descriptor.clone()).collect(),
                results,
                verdict,
                if agrees { 0 } else { EXIT_FAILED },
            ))
        }
        Command::Classify { input, rule } => {
            let graphs = input.load().map_err(|e| (none.clone(), e))?;
            let mut results = Vec::new();
            let mut verdicts = Vec::new();
            for g in &graphs {
                let r: ClassificationReport = classify_with(&g.graph, (*rule).into())
                    .map_err(|e| (g.descriptor.clone(), e))?;
                let matched = r
                    .matched_family
                    .as_ref()
                    .map_or("no catalog match".to_string(), |m| m.label.clone());
                verdicts.push(format!("{} (k_max {}, {matched})", r.class, r.k_max));
                results.push(serde_json::to_value(&r).expect("serializable"));
            }
            Ok(single_or_list(
                graphs.iter().map(|g| g.descriptor.clone()).collect(),
                results,
                verdicts.join("; "),
                0,
            ))
        }
        Command::Catalog { n, k } => {
            let input = json!({ "n": n, "k": k });
            let entries = catalog(*n, *k).map_err(|e| (input.clone(), e))?;
            let mismatches = verify_catalog_spectra(*n).map_err(|e| (input.clone(), e))?;
            let mut rows = Vec::new();
            let mut all_match = true;
            for e in &entries {
                let (_, computed) = laplacian_spectrum(&e.graph);
                let matches = computed == e.predicted_spectrum;
                all_match &= matches;
                let mut row = serde_json::to_value(e).map_err(|err| {
                    (
                        input.clone(),
                        Error::FamilyParams {
                            family: e.family.name().into(),
                            reason: err.to_string(),
                        },
                    )
                })?;
                row["computed_spectrum"] = serde_json::to_value(&computed).expect("serializable");
                row["match"] = json!(matches);
                rows.push(row);
            }
            let status = if all_match && mismatches.is_empty() {
                0
            } else {
                EXIT_FAILED
            };
            Ok(Outcome {
                input,
                verdict: format!(
                    "catalog n={n} k={k}: {} entries, {}",
                    rows.len(),
                    if status == 0 {
                        "all spectra match"
                    } else {
                        "SPECTRUM MISMATCH"
                    }
                ),
                result: json!({ "entries": rows, "candidate_mismatches": mismatches }),
                status,
            })
        }
        Command::Verify {
            n,
            skip_dls,
            skip_lemmas,
            stretch_n9,
            jobs,
            cache,
            rule,
        } => {
            let cache = cache.clone().or_else(cache_dir_from_env);
            let input = json!({
                "n": n,
                "skip_dls": skip_dls,
                "skip_lemmas": skip_lemmas,
                "cache": cache.as_ref().map(|p| p.display().to_string()),
                "rule": format!("{rule:?}").to_lowercase(),
            });
            let limit = if *stretch_n9 {
                MAX_ENUM_ORDER
            } else {
                MAX_ENUM_ORDER - 1
            };
            if *n > limit || *n < 4 {
                return Err((
                    input,
                    Error::OrderOutOfRange {
                        order: *n,
                        min: 4,
                        max: limit,
                    },
                ));
            }
            if let Some(j) = jobs {
                // a second initialization only happens in tests; ignore it
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads((*j).max(1))
                    .build_global();
            }
            let opts = VerifyOptions {
                skip_dls: *skip_dls,
                skip_lemmas: *skip_lemmas,
                cache,
                rule: (*rule).into(),
            };
            let summary = verify_theorem(*n, &opts).map_err(|e| (input.clone(), e))?;
            let passed = summary.passed();
            Ok(Outcome {
                input,
                verdict: format!(
                    "verify n={n}: {} (members {}/{}, set_equal {}, dls violations {}, lemma violations {})",
                    if passed { "PASS" } else { "FAIL" },
                    summary.found_members.len(),
                    summary.catalog_members.len(),
                    summary.set_equal,
                    summary.dls_violations.len(),
                    summary.lemma_violations.len()
                ),
                result: serde_json::to_value(&summary).expect("serializable"),
                status: if passed { 0 } else { EXIT_FAILED },
            })
        }
        Command::Families => {
            let rows: Vec<Value> = FamilyId::ALL
                .iter()
                .map(|id| json!({ "name": id.name(), "params": id.signature() }))
                .collect();
            Ok(Outcome {
                input: none,
                verdict: FamilyId::ALL
                    .iter()
                    .map(|id| id.name())
                    .collect::<Vec<_>>()
                    .join(" "),
                result: json!(rows),
                status: 0,
            })
        }
    }
}

fn single_or_list(
    mut inputs: Vec<Value>,
    mut results: Vec<Value>,
    verdict: String,
    status: u8,
) -> Outcome {
    if inputs.len() == 1 {
        Outcome {
            input: inputs.remove(0),
            result: results.remove(0),
            verdict,
            status,
        }
    } else {
        Outcome {
            input: json!(inputs),
            result: json!(results),
            verdict,
            status,
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Spectrum { .. } => "spectrum",
        Command::Classify { .. } => "classify",
        Command::Catalog { .. } => "catalog",
        Command::Verify { .. } => "verify",
        Command::Families => "families",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let name = command_name(&cli.command);
    let (report, verdict, status) = match run(&cli.command) {
        Ok(o) => (
            json!({ "command": name, "version": env!("CARGO_PKG_VERSION"), "input": o.input, "result": o.result, "status": "ok" }),
            o.verdict,
            o.status,
        ),
        Err((input, e)) => (
            json!({ "command": name, "version": env!("CARGO_PKG_VERSION"), "input": input, "error": e.to_string(), "status": "error" }),
            format!("error: {e}"),
            exit_for(&e),
        ),
    };
    let mut report = report;
    report["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
    let text = if cli.quiet {
        verdict.clone()
    } else {
        serde_json::to_string_pretty(&report).expect("serializable")
    };
    // A closed downstream pipe is not an error worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if status == EXIT_BAD_INPUT || status == EXIT_LIMIT {
        eprintln!("{verdict}");
    }
    ExitCode::from(status)
}
