mod args;
mod output;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use aztec::boundary::{boundary_entry, log_partition_function, recurrence_partition_function};
use aztec::closed_form::{closed_form_entry, has_closed_form, inverse_kasteleyn, Method};
use aztec::dpp::{EdgeEvent, EdgeProcess};
use aztec::oracle::KMatrix;
use aztec::render::{render_density, render_tiling, RenderSpec};
use aztec::sampler::{empirical_edge_freq, DominoType, Shuffler, TilingConfiguration};
use aztec::verify::{run, run_all, VerifyOptions, CRITERIA};
use aztec::{face_weights, AztecError, DiamondGraph, Field, GaussRational, Precision, C64};
use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command, EntryMethod, SchemeArgs};
use output::{complex, edge_json, real, vertex_json, ScalarJson};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] AztecError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{0}")]
    Failed(String),
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let precision = cli.precision.map(Precision::from).unwrap_or_else(Precision::from_env);
    match dispatch(cli.command, precision) {
        Ok(v) => {
            let text = serde_json::to_string_pretty(&v).expect("JSON values always serialize");
            // A closed pipe downstream is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn dispatch(cmd: Command, precision: Precision) -> CliResult<Value> {
    match cmd {
        Command::Partition { scheme } => partition(&scheme, precision),
        Command::InverseEntry { scheme, white, black, method } => match precision {
            Precision::Double => inverse_entry::<C64>(&scheme, white, black, method),
            Precision::Exact => inverse_entry::<GaussRational>(&scheme, white, black, method),
        },
        Command::BoundaryEntry { scheme, i, j } => {
            let s = scheme.scheme()?;
            let v = match precision {
                Precision::Double => {
                    let b = boundary_entry::<C64>(&s, scheme.n, i, j)?;
                    (b.white, b.black, complex(&b.ratio))
                }
                Precision::Exact => {
                    let b = boundary_entry::<GaussRational>(&s, scheme.n, i, j)?;
                    (b.white, b.black, complex(&b.ratio))
                }
            };
            Ok(json!({
                "white": vertex_json(v.0),
                "black": vertex_json(v.1),
                "ratio": v.2,
                "method": Method::ClosedForm,
            }))
        }
        Command::Density { scheme, svg, scale } => match precision {
            Precision::Double => density::<C64>(&scheme, svg.as_deref(), scale),
            Precision::Exact => density::<GaussRational>(&scheme, svg.as_deref(), scale),
        },
        Command::JointProb { scheme, edges } => match precision {
            Precision::Double => joint_prob::<C64>(&scheme, edges),
            Precision::Exact => joint_prob::<GaussRational>(&scheme, edges),
        },
        Command::Sample { scheme, seed, count, edge, render, palette, scale, save } => {
            let s = scheme.scheme()?;
            let shuffler = Shuffler::new(&s, scheme.n)?;
            let first = shuffler.sample_indexed(seed, 0)?;
            let mut out = json!({
                "scheme": s.to_string(),
                "n": scheme.n,
                "seed": seed,
                "dominoes": domino_counts(&first),
                "log_weight": real(first.log_weight(&s)),
                "method": Method::Empirical,
            });
            if let Some(path) = &render {
                write_file(path, &render_tiling(&first, &RenderSpec { palette: palette.into(), scale }))?;
                out["svg"] = json!(path);
            }
            if let Some(path) = &save {
                write_file(path, &serde_json::to_string(&first).expect("tilings serialize"))?;
                out["saved"] = json!(path);
            }
            if let Some(e) = edge {
                let samples = shuffler.sample_many(count, seed)?;
                let f = empirical_edge_freq(&samples, e)?;
                out["edge"] = edge_json(&e);
                out["frequency"] = real(f.frequency);
                out["std_error"] = real(f.std_error);
                out["count"] = json!(f.count);
            }
            Ok(out)
        }
        Command::Render { input, out, palette, scale } => {
            let text = fs::read_to_string(&input)
                .map_err(|source| CliError::Io { path: input.display().to_string(), source })?;
            let raw: TilingConfiguration = serde_json::from_str(&text)
                .map_err(|source| CliError::Json { path: input.display().to_string(), source })?;
            let t = TilingConfiguration::new(raw.order(), raw.edges().to_vec())?;
            write_file(&out, &render_tiling(&t, &RenderSpec { palette: palette.into(), scale }))?;
            Ok(json!({ "svg": out, "n": t.order(), "dominoes": domino_counts(&t) }))
        }
        Command::Verify { figures, only } => {
            let opts = VerifyOptions { figures_dir: figures };
            let results = if only.is_empty() {
                run_all(&opts)
            } else {
                for id in &only {
                    if !CRITERIA.contains(id) {
                        return Err(CliError::Failed(format!("no acceptance criterion {id}")));
                    }
                }
                only.iter().map(|&id| run(id, &opts)).collect()
            };
            for c in &results {
                eprintln!("{c}");
            }
            let failed: Vec<u8> = results.iter().filter(|c| !c.passed).map(|c| c.id).collect();
            if failed.is_empty() {
                Ok(json!({ "passed": true, "criteria": results }))
            } else {
                Err(CliError::Failed(format!("acceptance criteria failed: {failed:?}")))
            }
        }
    }
}

fn partition(args: &SchemeArgs, precision: Precision) -> CliResult<Value> {
    let s = args.scheme()?;
    let log_z = log_partition_function(&face_weights::<C64>(&s, args.n)?)?;
    let mut out = json!({ "log_Z": real(log_z), "method": Method::ClosedForm });
    match precision {
        Precision::Exact => {
            let z = recurrence_partition_function(&face_weights::<GaussRational>(&s, args.n)?)?;
            out["Z"] = output::exact_real(&z.re);
            out["exact"] = json!(z.re.to_string());
        }
        Precision::Double => {
            let z = recurrence_partition_function(&face_weights::<C64>(&s, args.n)?)?;
            out["Z"] = real(z.re);
        }
    }
    Ok(out)
}

fn inverse_entry<F: Field + ScalarJson>(
    args: &SchemeArgs,
    white: aztec::KCoord,
    black: aztec::KCoord,
    method: EntryMethod,
) -> CliResult<Value> {
    let s = args.scheme()?;
    let n = args.n;
    let use_closed = match method {
        EntryMethod::Auto => has_closed_form(&s, n),
        EntryMethod::ClosedForm => true,
        EntryMethod::Oracle => false,
    };
    let (v, m): (F, Method) = if use_closed {
        (closed_form_entry(&s, n, white, black)?, Method::ClosedForm)
    } else {
        let k = KMatrix::<F>::assemble(&DiamondGraph::build(n)?, &s)?;
        (k.invert()?.entry(white, black)?, Method::Oracle)
    };
    let mut out = complex(&v);
    out["method"] = json!(m);
    Ok(out)
}

fn density<F: Field + ScalarJson>(args: &SchemeArgs, svg: Option<&Path>, scale: f64) -> CliResult<Value> {
    let s = args.scheme()?;
    let (inv, method) = inverse_kasteleyn::<F>(&s, args.n)?;
    let k = KMatrix::<F>::assemble(inv.graph(), &s)?;
    let field = EdgeProcess::new(&k, &inv)?.density_field()?;
    if let Some(path) = svg {
        let probs = field.iter().map(|(e, p)| (e, p.to_c64().re));
        write_file(path, &render_density(args.n, probs, &RenderSpec { scale, ..RenderSpec::default() }))?;
    }
    let edges: Vec<Value> = field
        .iter()
        .map(|(e, p)| {
            let mut v = edge_json(e);
            v["type"] = json!(DominoType::of(e.direction()));
            v["p"] = complex(p)["re"].clone();
            v
        })
        .collect();
    Ok(json!({
        "n": args.n,
        "method": method,
        "max_vertex_sum_error": real(field.vertex_sum_error()),
        "edges": edges,
    }))
}

fn joint_prob<F: Field + ScalarJson>(args: &SchemeArgs, edges: Vec<aztec::Edge>) -> CliResult<Value> {
    let s = args.scheme()?;
    let ev = EdgeEvent::new(edges)?;
    let (inv, method) = inverse_kasteleyn::<F>(&s, args.n)?;
    let k = KMatrix::<F>::assemble(inv.graph(), &s)?;
    let p = EdgeProcess::new(&k, &inv)?.joint_probability(&ev)?;
    let mut out = json!({ "p": complex(&p)["re"].clone(), "method": method });
    if F::EXACT {
        out["exact"] = complex(&p)["exact"]["re"].clone();
    }
    Ok(out)
}

fn domino_counts(t: &TilingConfiguration) -> Value {
    let mut counts = [0usize; 4];
    for (_, d, _) in t.dominoes() {
        counts[d.index()] += 1;
    }
    let mut map = serde_json::Map::new();
    for d in DominoType::ALL {
        map.insert(format!("{d:?}"), json!(counts[d.index()]));
    }
    Value::Object(map)
}
