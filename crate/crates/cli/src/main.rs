use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use tjoin_core::coloring::{
    find_six_edge_coloring, packing_from_coloring, verify_coloring, verify_packing, Color,
    SolveOutcome, SolverConfig, DEFAULT_BUDGET,
};
use tjoin_core::cuts::{analyze_cuts, CutOptions, DEFAULT_CUT_CAP};
use tjoin_core::discharging::{audit, discharge, AuditOptions, AuditReport, Verdict};
use tjoin_core::ecoloring::{
    canonicalize_trigon, find_e_coloring, find_mate, EColorOutcome, MateOptions,
    DEFAULT_ECOLOR_BUDGET,
};
use tjoin_core::plane_graph::{classify, find_multigons, parse_plane_graph, PlaneMultigraph};
use tjoin_core::reductions::{
    apply_swap, check_swap_cut_property, match_catalog, run_lifter, SwapSpec,
};
use tjoin_core::workbench::{generate, InstanceSpec};

#[derive(Parser)]
#[command(
    name = "tjoin",
    version,
    about = "Six T-joins in plane multigraphs: analysis workbench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Clone, Copy)]
struct Global {
    /// `json` prints one compact JSON document; `text` pretty-prints it
    /// (and emits `planegraph v1` text for `generate`).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest vertex count for exhaustive cut enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_CUT_CAP)]
    cut_cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named instance, e.g. `dk4` or `doubled-prism(5)`.
    Generate { spec: InstanceSpec },
    /// Faces, multigons and the face classification.
    Analyze { input: String },
    /// Minimum odd cuts and T-cut parity.
    Cuts {
        input: String,
        /// Also list odd cuts of at most this size.
        #[arg(long)]
        max_size: Option<usize>,
        /// Restrict the listing to non-trivial cuts.
        #[arg(long)]
        nontrivial: bool,
    },
    /// Find and verify a 6-edge-coloring.
    Color(SolveArgs),
    /// Six disjoint T-joins from a 6-edge-coloring (requires T = V).
    Pack(SolveArgs),
    /// Find an e-coloring for one edge.
    Ecolor {
        input: String,
        #[arg(long)]
        edge: usize,
        /// Rewrite into the canonical trigon shape.
        #[arg(long)]
        canonicalize: bool,
        #[arg(long, default_value_t = DEFAULT_ECOLOR_BUDGET)]
        budget: u64,
    },
    /// Search for a mate of an e-coloring.
    Mate {
        input: String,
        #[arg(long)]
        edge: usize,
        #[arg(long)]
        color: Color,
        /// After an unsuccessful search, look for a proper coloring.
        #[arg(long)]
        extract_proper: bool,
        #[arg(long, default_value_t = DEFAULT_ECOLOR_BUDGET)]
        budget: u64,
    },
    /// Apply a swap given as JSON, e.g. '{"vertices":[0,1,2,3]}'.
    Swap {
        input: String,
        #[arg(long)]
        spec: String,
        /// Compare every cut before and after.
        #[arg(long)]
        check_cuts: bool,
    },
    /// Match every structural lemma.
    Catalog {
        input: String,
        /// Only list violated matches.
        #[arg(long)]
        violations: bool,
        /// Run the lifter of every violated match that has one.
        #[arg(long)]
        lift: bool,
    },
    /// Charges before and after the discharging rules.
    Discharge {
        input: String,
        /// Report charges in quarter units (the default).
        #[arg(long, conflicts_with = "units")]
        quarters: bool,
        /// Report charges in units.
        #[arg(long)]
        units: bool,
    },
    /// Hypotheses, catalog, discharging and a verdict. Exit 0 consistent, 2 ANOMALY.
    Audit { input: String },
    /// Audit every `.pg` / `.json` file in a directory concurrently.
    Batch { dir: PathBuf },
}

#[derive(Args)]
struct SolveArgs {
    input: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    exhaustive: bool,
}

/// A file path, or `gen:<spec>` for a generated instance.
fn load(input: &str) -> Result<PlaneMultigraph> {
    if let Some(spec) = input.strip_prefix("gen:") {
        let spec: InstanceSpec = spec.parse().map_err(anyhow::Error::msg)?;
        return Ok(generate(&spec)?);
    }
    let text = std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    parse_plane_graph(&text).with_context(|| format!("parsing {input}"))
}

fn emit(global: Global, v: &impl Serialize) -> Result<()> {
    let s = match global.format {
        Format::Json => serde_json::to_string(v)?,
        Format::Text => serde_json::to_string_pretty(v)?,
    };
    write_out(&format!("{s}\n"))
}

/// Writes to stdout; a closed pipe ends output quietly.
fn write_out(s: &str) -> Result<()> {
    use std::io::Write;
    match std::io::stdout().lock().write_all(s.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn solver(global: Global, a: &SolveArgs) -> SolverConfig {
    SolverConfig {
        budget: a.budget,
        seed: global.seed,
        exhaustive: a.exhaustive,
    }
}

fn analyze(g: &PlaneMultigraph) -> Value {
    let faces: Vec<usize> = g.faces().iter().map(|f| f.degree()).collect();
    let classification = match classify(g) {
        Ok(c) => serde_json::to_value(&c).unwrap_or(Value::Null),
        Err(e) => json!({ "error": e.to_string() }),
    };
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "faces": g.face_count(),
        "euler": g.euler_characteristic(),
        "face_degrees": faces,
        "multigons": find_multigons(g),
        "classification": classification,
    })
}

fn discharge_json(g: &PlaneMultigraph, units: bool) -> Result<Value> {
    let c = classify(g)?;
    let d = discharge(&c);
    let mut v = serde_json::to_value(&d)?;
    if units {
        scale_charges(&mut v);
    }
    v["scale"] = json!(if units { "units" } else { "quarters" });
    Ok(v)
}

/// Rewrites every `charge`, `amount` and `*_total` field from quarters to units.
fn scale_charges(v: &mut Value) {
    match v {
        Value::Object(map) => {
            for (k, x) in map.iter_mut() {
                let scaled = k == "charge" || k == "amount" || k.ends_with("_total");
                match x {
                    Value::Number(n) if scaled => {
                        *x = json!(n.as_f64().unwrap_or(0.0) / 4.0);
                    }
                    _ => scale_charges(x),
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(scale_charges),
        _ => {}
    }
}

#[derive(Serialize)]
struct BatchEntry {
    file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn batch(dir: &Path, opts: AuditOptions) -> Result<(Vec<BatchEntry>, u8)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| matches!(p.extension().and_then(|x| x.to_str()), Some("pg" | "json")))
        .collect();
    files.sort();
    let entries: Vec<BatchEntry> = files
        .par_iter()
        .map(|p| {
            let file = p.display().to_string();
            match load(&file) {
                Ok(g) => {
                    let rep: AuditReport = audit(&g, &opts);
                    BatchEntry {
                        file,
                        verdict: Some(rep.verdict),
                        violations: Some(rep.violations.len()),
                        error: None,
                    }
                }
                Err(e) => BatchEntry {
                    file,
                    verdict: None,
                    violations: None,
                    error: Some(format!("{e:#}")),
                },
            }
        })
        .collect();
    let code = if entries.iter().any(|e| e.verdict == Some(Verdict::Anomaly)) {
        2
    } else if entries.iter().any(|e| e.error.is_some()) {
        1
    } else {
        0
    };
    Ok((entries, code))
}

fn run(cli: Cli) -> Result<u8> {
    let global = cli.global;
    match cli.command {
        Command::Generate { spec } => {
            let g = generate(&spec)?;
            match global.format {
                Format::Text => write_out(&g.serialize_text())?,
                Format::Json => write_out(&format!("{}\n", g.serialize_json()))?,
            }
        }
        Command::Analyze { input } => emit(global, &analyze(&load(&input)?))?,
        Command::Cuts {
            input,
            max_size,
            nontrivial,
        } => {
            let g = load(&input)?;
            let rep = analyze_cuts(
                &g,
                &CutOptions {
                    cap: global.cut_cap,
                    max_size,
                    nontrivial_only: nontrivial,
                },
            )?;
            emit(global, &rep)?;
        }
        Command::Color(a) => {
            let g = load(&a.input)?;
            let out = find_six_edge_coloring(&g, &solver(global, &a))?;
            if let Some(col) = out.coloring() {
                verify_coloring(&g, col)?;
            }
            emit(global, &out)?;
            if !matches!(out, SolveOutcome::Found { .. }) {
                return Ok(3);
            }
        }
        Command::Pack(a) => {
            let g = load(&a.input)?;
            let out = find_six_edge_coloring(&g, &solver(global, &a))?;
            let Some(col) = out.coloring() else {
                emit(global, &out)?;
                return Ok(3);
            };
            let p = packing_from_coloring(&g, col)?;
            verify_packing(&g, &p.terminals, &p)?;
            emit(global, &p)?;
        }
        Command::Ecolor {
            input,
            edge,
            canonicalize,
            budget,
        } => {
            let g = load(&input)?;
            let out = find_e_coloring(&g, edge, budget)?;
            match (&out, canonicalize) {
                (EColorOutcome::Found { coloring, .. }, true) => {
                    let canon = canonicalize_trigon(&g, coloring)?;
                    emit(global, &json!({ "search": out, "canonical": canon }))?;
                }
                _ => emit(global, &out)?,
            }
        }
        Command::Mate {
            input,
            edge,
            color,
            extract_proper,
            budget,
        } => {
            let g = load(&input)?;
            let EColorOutcome::Found { coloring, .. } = find_e_coloring(&g, edge, budget)? else {
                bail!("no e-coloring found for edge {edge}");
            };
            let opts = MateOptions {
                cap: global.cut_cap,
                extract_proper,
            };
            let out = find_mate(&g, &coloring, color, &opts)?;
            emit(global, &json!({ "e_coloring": coloring, "mate": out }))?;
        }
        Command::Swap {
            input,
            spec,
            check_cuts,
        } => {
            let g = load(&input)?;
            let spec: SwapSpec = serde_json::from_str(&spec).context("parsing --spec")?;
            let out = apply_swap(&g, &spec)?;
            let cuts = if check_cuts {
                Some(check_swap_cut_property(
                    &g,
                    &out.graph,
                    spec.k(),
                    global.cut_cap,
                )?)
            } else {
                None
            };
            emit(
                global,
                &json!({
                    "swap": out,
                    "graph": out.graph.to_file(),
                    "cut_check": cuts,
                }),
            )?;
        }
        Command::Catalog {
            input,
            violations,
            lift,
        } => {
            let g = load(&input)?;
            let cat = match_catalog(&g, global.cut_cap);
            let matches: Vec<_> = cat
                .matches
                .iter()
                .filter(|m| !violations || m.violated())
                .collect();
            let lifts: Option<Vec<Value>> = lift.then(|| {
                let cfg = SolverConfig {
                    seed: global.seed,
                    ..SolverConfig::default()
                };
                cat.violations()
                    .filter(|m| m.lemma.has_lifter())
                    .map(|m| match run_lifter(&g, m, &cfg) {
                        Ok(r) => serde_json::to_value(r).unwrap_or(Value::Null),
                        Err(e) => json!({ "lemma": m.lemma, "error": e.to_string() }),
                    })
                    .collect()
            });
            emit(
                global,
                &json!({ "matches": matches, "skipped": cat.skipped, "lifts": lifts }),
            )?;
        }
        Command::Discharge {
            input,
            quarters: _,
            units,
        } => emit(global, &discharge_json(&load(&input)?, units)?)?,
        Command::Audit { input } => {
            let g = load(&input)?;
            let rep = audit(
                &g,
                &AuditOptions {
                    cut_cap: global.cut_cap,
                },
            );
            emit(global, &rep)?;
            if rep.verdict == Verdict::Anomaly {
                return Ok(2);
            }
        }
        Command::Batch { dir } => {
            let (entries, code) = batch(
                &dir,
                AuditOptions {
                    cut_cap: global.cut_cap,
                },
            )?;
            emit(global, &entries)?;
            return Ok(code);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
