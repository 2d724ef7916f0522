//! `zfkit`: zero forcing computations and verification campaigns.
//!
//! Exit status is 0 on success, 1 when a verification campaign reports
//! discrepancies, and 2 on usage or input errors.

mod input;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use input::{read_stream, GraphSource};
use zfkit::enumerate::{graphs_of_order, one_vertex_extensions};
use zfkit::forcing::{
    closure, failed_zero_forcing_number, failed_zero_forcing_number_brute_force, min_fort,
    zero_forcing_number,
};
use zfkit::io::{parse_vertex_list, to_graph6};
use zfkit::structure::{
    cut_vertices, find_cherries, has_pendant_triangle, has_pendant_v, modules_of_order_2,
};
use zfkit::verify::{self, gap_construction, predict_f, Campaign, CampaignParams, Prediction};
use zfkit::{Graph, VertexSet};

#[derive(Parser, Debug)]
#[command(
    name = "zfkit",
    version,
    about = "Zero forcing and failed zero forcing on small graphs"
)]
struct Cli {
    /// Also print a human-readable summary to stderr
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the result here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Forcing closure of a blue set, with the round-by-round trace
    Closure {
        #[command(flatten)]
        source: GraphSource,
        /// Comma-separated blue vertices, e.g. `0,2,4`
        #[arg(long, value_name = "LIST", allow_hyphen_values = false)]
        blue: String,
    },
    /// Zero forcing number Z(G)
    Zf {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Failed zero forcing number F(G)
    Fzf {
        #[command(flatten)]
        source: GraphSource,
        /// Use the descending subset search instead of the fort search
        #[arg(long)]
        brute_force: bool,
    },
    /// A minimum fort
    Fort {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Cherries, pendant triangles, pendant Vs, order-2 modules, cut vertices
    Detect {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Predict F from structural rules
    Classify {
        #[command(flatten)]
        source: GraphSource,
        /// Also compute F and check the prediction
        #[arg(long)]
        exact: bool,
    },
    /// One-vertex extensions up to isomorphism, each with its F
    Extend {
        #[command(flatten)]
        source: GraphSource,
        /// Include the extension by an isolated vertex
        #[arg(long)]
        allow_isolated: bool,
    },
    /// The gap construction pair G, H on n vertices
    Gap {
        #[arg(long)]
        n: usize,
    },
    /// Run a verification campaign and emit its JSON report
    Verify {
        /// figure1, theorem21, f0f1, isolated, module_nminus2,
        /// disconnected_formula, exceptions16, extension_argument,
        /// fort_duality or gap
        campaign: String,
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Scan graph6 records from this file (`-` for stdin) instead of
        /// generating graphs
        #[arg(long, value_name = "PATH")]
        stream: Option<String>,
        /// Record wall-clock time in the report
        #[arg(long)]
        timing: bool,
    },
    /// Print one graph6 line per isomorphism class
    Enumerate {
        /// Largest order
        #[arg(long)]
        n: usize,
        /// Smallest order (defaults to `--n`)
        #[arg(long)]
        min_n: Option<usize>,
        #[arg(long)]
        connected: bool,
    },
}

struct Outcome {
    body: String,
    pretty: String,
    status: u8,
}

impl Outcome {
    fn ok(body: String, pretty: String) -> Self {
        Outcome {
            body,
            pretty,
            status: 0,
        }
    }
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json");
    s.push('\n');
    s
}

fn set_json(s: VertexSet) -> Value {
    json!(s.to_vec())
}

/// Applies `f` to every source graph; one output line per graph.
fn per_graph(
    source: &GraphSource,
    mut f: impl FnMut(&Graph) -> Result<(String, String)>,
) -> Result<Outcome> {
    let mut body = String::new();
    let mut pretty = String::new();
    for g in source.graphs()? {
        let (b, p) = f(&g)?;
        body.push_str(&b);
        pretty.push_str(&p);
    }
    Ok(Outcome::ok(body, pretty))
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("ZFKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| anyhow!("ZFKIT_THREADS must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("configuring worker threads")
}

fn run(cli: &Cli) -> Result<Outcome> {
    configure_threads()?;
    match &cli.command {
        Command::Closure { source, blue } => per_graph(source, |g| {
            let s = parse_vertex_list(blue, g.order())?;
            let r = closure(g, s);
            let v = json!({
                "final": set_json(r.final_set),
                "trace": r.trace.steps,
                "stalled": r.stalled_immediately,
                "forces_all": r.final_set == g.vertices(),
            });
            let p = format!(
                "blue {s} -> {} in {} forces{}\n",
                r.final_set,
                r.trace.len(),
                if r.stalled_immediately {
                    " (stalled)"
                } else {
                    ""
                }
            );
            Ok((json_line(&v), p))
        }),
        Command::Zf { source } => per_graph(source, |g| {
            let z = zero_forcing_number(g);
            Ok((format!("{z}\n"), format!("Z = {z}\n")))
        }),
        Command::Fzf {
            source,
            brute_force,
        } => per_graph(source, |g| {
            let f = if *brute_force {
                failed_zero_forcing_number_brute_force(g)
            } else {
                failed_zero_forcing_number(g)
            };
            Ok((format!("{f}\n"), format!("F = {f} (n = {})\n", g.order())))
        }),
        Command::Fort { source } => per_graph(source, |g| {
            let t = min_fort(g);
            let v = json!({ "fort": set_json(t), "size": t.len(), "F": g.order() - t.len() });
            Ok((
                json_line(&v),
                format!("minimum fort {t}, size {}\n", t.len()),
            ))
        }),
        Command::Detect { source } => per_graph(source, |g| {
            let cherries = find_cherries(g);
            let modules = modules_of_order_2(g);
            let tri = has_pendant_triangle(g);
            let pv = has_pendant_v(g);
            let cuts = cut_vertices(g);
            let v = json!({
                "counts": {
                    "cherry": cherries.len(),
                    "pendant_triangle": tri.is_some() as usize,
                    "pendant_v": pv.is_some() as usize,
                    "module2": modules.len(),
                    "cut_vertex": cuts.len(),
                },
                "cherries": cherries,
                "pendant_triangle": tri,
                "pendant_v": pv,
                "modules_of_order_2": modules,
                "cut_vertices": set_json(cuts),
            });
            let p = format!(
                "cherries {}, pendant triangle {}, pendant V {}, order-2 modules {}, cut vertices {cuts}\n",
                cherries.len(),
                tri.is_some(),
                pv.is_some(),
                modules.len()
            );
            Ok((json_line(&v), p))
        }),
        Command::Classify { source, exact } => per_graph(source, |g| {
            let pred = predict_f(g);
            let mut v = json!({ "prediction": pred });
            let mut p = format!("{pred:?}");
            if *exact {
                let f = failed_zero_forcing_number(g);
                let consistent = match pred {
                    Prediction::Exact { value, .. } => value == f,
                    Prediction::LowerBound { value, .. } => f >= value,
                    Prediction::Compute => true,
                };
                v["F"] = json!(f);
                v["consistent"] = json!(consistent);
                write!(p, ", F = {f}").unwrap();
            }
            p.push('\n');
            Ok((json_line(&v), p))
        }),
        Command::Extend {
            source,
            allow_isolated,
        } => per_graph(source, |g| {
            let n = g.order();
            let exts: Vec<Value> = one_vertex_extensions(g, !allow_isolated)
                .iter()
                .map(|h| {
                    json!({
                        "graph6": to_graph6(h),
                        "neighborhood": set_json(h.neighbors(n)),
                        "F": failed_zero_forcing_number(h),
                    })
                })
                .collect();
            let mut p = String::new();
            for e in &exts {
                writeln!(
                    p,
                    "{:<12} N(v{n}) = {:<20} F = {}",
                    e["graph6"].as_str().unwrap(),
                    e["neighborhood"].to_string(),
                    e["F"]
                )
                .unwrap();
            }
            Ok((
                json_line(&json!({ "count": exts.len(), "extensions": exts })),
                p,
            ))
        }),
        Command::Gap { n } => {
            let pair = gap_construction(*n)?;
            let fg = failed_zero_forcing_number_brute_force(&pair.g);
            let fh = failed_zero_forcing_number_brute_force(&pair.h);
            let v = json!({
                "n": n,
                "G": to_graph6(&pair.g),
                "H": to_graph6(&pair.h),
                "F_G": fg,
                "F_H": fh,
                "expected_F_G": verify::expectations::gap_expected_fg(*n),
                "expected_F_H": verify::expectations::gap_expected_fh(*n),
                "difference": fg as i64 - fh as i64,
            });
            let p = format!("n = {n}: F(G) = {fg}, F(H) = {fh}\n");
            Ok(Outcome::ok(json_line(&v), p))
        }
        Command::Verify {
            campaign,
            min_n,
            max_n,
            stream,
            timing,
        } => {
            let c: Campaign = campaign.parse()?;
            let params = CampaignParams {
                min_n: *min_n,
                max_n: *max_n,
            };
            let start = Instant::now();
            let mut report = match stream {
                Some(p) => verify::run_campaign_on_stream(c, params, &read_stream(p)?)?,
                None => verify::run_campaign(c, params)?,
            };
            if *timing {
                report.runtime_secs = Some(start.elapsed().as_secs_f64());
            }
            let status = if report.is_clean() { 0 } else { 1 };
            Ok(Outcome {
                body: report.to_json(),
                pretty: report.pretty(),
                status,
            })
        }
        Command::Enumerate {
            n,
            min_n,
            connected,
        } => {
            let lo = min_n.unwrap_or(*n);
            if lo > *n {
                bail!("--min-n {lo} exceeds --n {n}");
            }
            let mut body = String::new();
            let mut counts = String::new();
            for k in lo..=*n {
                let s = graphs_of_order(k, *connected)?;
                writeln!(counts, "n = {k}: {} graphs", s.len()).unwrap();
                for g in &s {
                    body.push_str(&to_graph6(g));
                    body.push('\n');
                }
            }
            Ok(Outcome::ok(body, counts))
        }
    }
}

fn emit(cli: &Cli, out: &Outcome) -> Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, &out.body).with_context(|| format!("writing {path}"))?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(out.body.as_bytes())?;
            stdout.flush()?;
        }
    }
    if cli.pretty {
        eprint!("{}", out.pretty);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli).and_then(|out| emit(&cli, &out).map(|_| out.status)) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
