//! `mcflow`: command-line driver.
//!
//! Every command reads a network document (see `mcflow::document`) and
//! writes its result to stdout, or to `--out`. Exit status: 0 success,
//! 1 negative verdict (`decide`), 2 input error, 3 budget exceeded. Errors
//! are reported on stderr as `{"error": kind, "message": text}`.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mcflow::bench::bench_sweep;
use mcflow::cuts::{disjoint_capacity, enumerate_cuts, fold_order, pairwise_bound, total_capacity};
use mcflow::cycles::{cycle_basis, cycle_basis_with_tree, decide_with_system, Decision};
use mcflow::document::{vector_to_value, NetworkDocument};
use mcflow::gluing::{brute_force_with_budget, feasible_flows_with_budget, Outcome};
use mcflow::num::{format_rational, parse_rational};
use mcflow::ratio::{int_ratio_max, ratio_max, RatioProblem};
use mcflow::{EnhancedNetwork, Error, Vector};
use render::{csv_writer, finish, Layer};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "mcflow", version, about = "Feasible flow regions of multicommodity networks with vector capacities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Replace polygonal capacities by their integer points before enumerating.
    #[arg(long, global = true)]
    discretize: bool,
    /// Work limit for enumeration and branching.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a network file.
    Validate { file: PathBuf },
    /// List every s–t cut with its capacity.
    Cuts { file: PathBuf },
    /// Intersection of all cut capacities.
    TotalCapacity { file: PathBuf },
    /// Intersection of the pairwise capacities of all cut pairs.
    PairwiseCapacity { file: PathBuf },
    /// Feasible flow values by gluing local flows over cuts.
    MutualCapacity {
        file: PathBuf,
        /// Include every realizing assignment.
        #[arg(long)]
        realizations: bool,
    },
    /// Feasible flow values by exhaustive enumeration.
    BruteForce {
        file: PathBuf,
        #[arg(long)]
        realizations: bool,
    },
    /// Closed-form capacity of a network of internally disjoint paths.
    DisjointCapacity { file: PathBuf },
    /// Is there a flow with the given value?
    Decide {
        file: PathBuf,
        /// Flow value, e.g. "2,1/2".
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        /// Spanning forest to use instead of the breadth-first one.
        #[arg(long, value_delimiter = ',')]
        tree: Option<Vec<String>>,
    },
    /// Fundamental cycles and their signed arc membership.
    CycleBasis {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        tree: Option<Vec<String>>,
    },
    /// Largest feasible multiple of a ratio vector.
    RatioMax {
        file: PathBuf,
        #[arg(long)]
        ratio: String,
        #[arg(long, default_value = "1")]
        upper: String,
        #[arg(long, default_value = "1/8")]
        eps: String,
        /// Largest integer multiple instead.
        #[arg(long)]
        integer: bool,
        /// Skip the downward-closure check of the capacities.
        #[arg(long)]
        assume_reducible: bool,
        /// Write the witness flow (JSON) here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Gluing versus brute force on the three-arc chain.
    Bench {
        /// Accepted for compatibility; the chain is the only benchmark.
        #[arg(long)]
        chain: bool,
        #[arg(long = "U", alias = "u", value_delimiter = ',', default_value = "1,2,4,8")]
        u: Vec<u32>,
        /// Include wall-clock times (makes the output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// SVG plot of a 2-commodity region.
    Plot {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = PlotRegion::Total)]
        region: PlotRegion,
        #[arg(long, default_value = "#4477aa")]
        fill: String,
        #[arg(long, default_value = "#222222")]
        stroke: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotRegion {
    Total,
    Pairwise,
    Mutual,
    Disjoint,
    /// Total capacity, pairwise bound and (integer) feasible values together.
    All,
}

/// Successful output plus the exit status to report.
struct Report {
    text: String,
    status: u8,
}

impl From<String> for Report {
    fn from(text: String) -> Self {
        Report { text, status: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &report.text).map_err(|e| io_error(path, e)),
                None => {
                    print!("{}", report.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::from(report.status),
                Err(e) => fail(&e),
            }
        }
        Err(e) => fail(&e),
    }
}

fn fail(e: &Error) -> ExitCode {
    let payload = json!({ "error": error_kind(e), "message": e.to_string() });
    eprintln!("{payload}");
    ExitCode::from(match e {
        Error::BudgetExceeded(_) => 3,
        _ => 2,
    })
}

/// Variant name of the error, e.g. `BudgetExceeded`.
fn error_kind(e: &Error) -> String {
    let debug = format!("{e:?}");
    debug
        .split(|c: char| !c.is_alphanumeric())
        .next()
        .unwrap_or_default()
        .to_string()
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> Error {
    Error::Parse(format!("{}: {e}", path.display()))
}

fn load(cli: &Cli, path: &std::path::Path) -> Result<NetworkDocument, Error> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let mut doc = NetworkDocument::parse(&text)?;
    if cli.discretize {
        eprintln!("warning: polygonal capacities replaced by their integer points; results describe integer flows only");
        doc.network = doc.network.discretized()?;
    }
    Ok(doc)
}

fn parse_vector(text: &str) -> Result<Vector, Error> {
    let entries = text.split(',').map(|s| parse_rational(s.trim())).collect::<Result<Vec<_>, _>>()?;
    Ok(Vector::new(entries))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn region_output(cli: &Cli, label: &str, region: &mcflow::Region) -> Result<String, Error> {
    Ok(match cli.format {
        Format::Csv => render::region_csv(region),
        Format::Json => pretty(&render::region_json(region)),
        Format::Svg => svg_of(&[(label, region)], "#4477aa", "#222222")?,
    })
}

fn svg_of(layers: &[(&str, &mcflow::Region)], fill: &str, stroke: &str) -> Result<String, Error> {
    const PALETTE: [&str; 3] = ["#dddd88", "#88ccee", "#cc3311"];
    if let Some((_, r)) = layers.iter().find(|(_, r)| r.dim() != 2) {
        return Err(Error::PolygonDimension(r.dim()));
    }
    let layers: Vec<Layer<'_>> = layers
        .iter()
        .enumerate()
        .map(|(i, (label, region))| Layer {
            label,
            region,
            fill: if layers.len() == 1 { fill } else { PALETTE[i % PALETTE.len()] },
        })
        .collect();
    Ok(render::svg(&layers, stroke))
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let budget = cli.budget;
    match &cli.command {
        Command::Validate { file } => {
            let doc = load(cli, file)?;
            let net = &doc.network;
            let kind = match net.region_kind()? {
                Some(mcflow::RegionKind::Points) => "points",
                Some(mcflow::RegionKind::Polygons) => "polygons",
                None => "none",
            };
            Ok(match cli.format {
                Format::Json => pretty(&json!({
                    "valid": true,
                    "k": net.k(),
                    "nodes": net.nodes().len(),
                    "arcs": net.arcs().len(),
                    "capacities": kind,
                    "reducible_declared": doc.flags.reducible_declared,
                })),
                _ => format!(
                    "valid: k={}, {} nodes, {} arcs, capacities: {kind}\n",
                    net.k(),
                    net.nodes().len(),
                    net.arcs().len()
                ),
            }
            .into())
        }
        Command::Cuts { file } => {
            let net = load(cli, file)?.network;
            let cuts = fold_order(enumerate_cuts(&net));
            match cli.format {
                Format::Json => {
                    let items = cuts
                        .iter()
                        .map(|c| {
                            Ok(json!({
                                "index": c.index,
                                "s_side": c.s_side,
                                "forward": c.forward,
                                "backward": c.backward,
                                "capacity": render::region_json(&mcflow::cuts::cut_capacity(&net, c)?),
                            }))
                        })
                        .collect::<Result<Vec<_>, Error>>()?;
                    Ok(pretty(&Value::Array(items)).into())
                }
                Format::Csv => {
                    let mut w = csv_writer();
                    let cap_kind = net.region_kind()?.unwrap_or(mcflow::RegionKind::Points);
                    let mut head: Vec<String> = ["cut", "s_side", "forward", "backward"].map(String::from).to_vec();
                    if cap_kind == mcflow::RegionKind::Polygons {
                        head.extend(["piece", "vertex"].map(String::from));
                    } else {
                        head.push("point".into());
                    }
                    head.extend(render::coord_header(net.k()));
                    w.write_record(&head).expect("csv");
                    for c in &cuts {
                        let prefix = vec![
                            c.index.to_string(),
                            c.s_side.iter().cloned().collect::<Vec<_>>().join(" "),
                            c.forward.join(" "),
                            c.backward.join(" "),
                        ];
                        render::write_region_rows(&mut w, &mcflow::cuts::cut_capacity(&net, c)?, &prefix);
                    }
                    Ok(finish(w).into())
                }
                Format::Svg => Err(Error::InvalidParameter("cuts has no SVG form; use plot".into())),
            }
        }
        Command::TotalCapacity { file } => {
            let net = load(cli, file)?.network;
            Ok(region_output(cli, "total", &total_capacity(&net)?)?.into())
        }
        Command::PairwiseCapacity { file } => {
            let net = load(cli, file)?.network;
            Ok(region_output(cli, "pairwise", &pairwise_bound(&net)?)?.into())
        }
        Command::DisjointCapacity { file } => {
            let net = load(cli, file)?.network;
            Ok(region_output(cli, "disjoint", &disjoint_capacity(&net)?)?.into())
        }
        Command::MutualCapacity { file, realizations } => {
            let net = load(cli, file)?.network;
            let outcome = feasible_flows_with_budget(&net, budget.unwrap_or(mcflow::gluing::DEFAULT_BUDGET))?;
            Ok(flows_output(cli, &net, &outcome, *realizations)?.into())
        }
        Command::BruteForce { file, realizations } => {
            let net = load(cli, file)?.network;
            let outcome = brute_force_with_budget(&net, budget.unwrap_or(mcflow::gluing::DEFAULT_BUDGET))?;
            Ok(flows_output(cli, &net, &outcome, *realizations)?.into())
        }
        Command::Decide { file, value, tree } => {
            let net = load(cli, file)?.network;
            let f = parse_vector(value)?;
            let sys = system(&net, tree.as_deref())?;
            let decision = decide_with_system(&net, &sys, &f, budget.unwrap_or(mcflow::cycles::DEFAULT_BRANCH_BUDGET))?;
            let text = match (&decision, cli.format) {
                (Decision::Feasible(w), Format::Json) => pretty(&json!({
                    "value": vector_to_value(&f),
                    "feasible": true,
                    "witness": render::assignment_json(w),
                })),
                (Decision::Infeasible, Format::Json) => pretty(&json!({ "value": vector_to_value(&f), "feasible": false })),
                (Decision::Feasible(w), _) => format!("feasible\n{}", render::assignment_csv(w, net.k())),
                (Decision::Infeasible, _) => "infeasible\n".to_string(),
            };
            Ok(Report {
                text,
                status: if decision.is_feasible() { 0 } else { 1 },
            })
        }
        Command::CycleBasis { file, tree } => {
            let net = load(cli, file)?.network;
            let sys = system(&net, tree.as_deref())?;
            match cli.format {
                Format::Json => {
                    let cycles: Vec<Value> = sys
                        .basis
                        .iter()
                        .map(|c| json!({ "generator": c.generator, "arcs": c.arcs }))
                        .collect();
                    Ok(pretty(&json!({
                        "tree": sys.tree,
                        "cycles": cycles,
                        "st_path": sys.st_path,
                    }))
                    .into())
                }
                _ => {
                    let mut w = csv_writer();
                    let head: Vec<String> = std::iter::once("arc".to_string())
                        .chain(sys.basis.iter().enumerate().map(|(i, c)| format!("c{}[{}]", i + 1, c.generator)))
                        .collect();
                    w.write_record(&head).expect("csv");
                    for a in net.arcs() {
                        let row: Vec<String> = std::iter::once(a.id.clone())
                            .chain(sys.signs(&a.id).iter().map(i8::to_string))
                            .collect();
                        w.write_record(&row).expect("csv");
                    }
                    Ok(finish(w).into())
                }
            }
        }
        Command::RatioMax {
            file,
            ratio,
            upper,
            eps,
            integer,
            assume_reducible,
            witness,
        } => {
            let doc = load(cli, file)?;
            let net = &doc.network;
            let mut prob = RatioProblem::new(parse_vector(ratio)?, parse_rational(upper)?, parse_rational(eps)?);
            prob.assume_reducible = *assume_reducible || doc.flags.reducible_declared;
            if let Some(b) = budget {
                prob.budget = b;
            }
            let (summary, flow) = if *integer {
                let r = int_ratio_max(net, &prob)?;
                let s = &r.search;
                (
                    json!({
                        "best": r.best.to_string(),
                        "lower": render::rational_json(&s.lower),
                        "upper": render::rational_json(&s.upper),
                        "iterations": s.iterations,
                        "doublings": s.doublings,
                        "reducibility_assumed": s.reducibility_assumed,
                    }),
                    r.witness,
                )
            } else {
                let r = ratio_max(net, &prob)?;
                (
                    json!({
                        "lower": render::rational_json(&r.lower),
                        "upper": render::rational_json(&r.upper),
                        "iterations": r.iterations,
                        "doublings": r.doublings,
                        "reducibility_assumed": r.reducibility_assumed,
                    }),
                    r.witness,
                )
            };
            if let Some(path) = witness {
                fs::write(path, pretty(&render::assignment_json(&flow))).map_err(|e| io_error(path, e))?;
            }
            Ok(match cli.format {
                Format::Json => pretty(&summary),
                _ => {
                    let obj = summary.as_object().expect("object");
                    let mut text = String::new();
                    for key in ["best", "lower", "upper", "iterations", "doublings", "reducibility_assumed"] {
                        if let Some(v) = obj.get(key) {
                            let shown = v.as_str().map_or_else(|| v.to_string(), str::to_string);
                            text.push_str(&format!("{key}: {shown}\n"));
                        }
                    }
                    text
                }
            }
            .into())
        }
        Command::Bench { chain: _, u, timings } => {
            let report = bench_sweep(u)?;
            Ok(match cli.format {
                Format::Json => {
                    let rows: Vec<Value> = report
                        .rows
                        .iter()
                        .map(|r| {
                            let mut row = json!({
                                "U": r.u,
                                "first_cut_flows": r.first_cut_flows,
                                "gluing_semantic": r.gluing_semantic,
                                "gluing_actual": r.gluing_actual,
                                "gluing_steps": r.gluing_steps,
                                "brute_semantic": r.brute_semantic,
                                "brute_actual": r.brute_actual,
                                "feasible_values": r.feasible_values,
                            });
                            if *timings {
                                row["gluing_seconds"] = json!(r.gluing_time.as_secs_f64());
                                row["brute_seconds"] = json!(r.brute_time.as_secs_f64());
                            }
                            row
                        })
                        .collect();
                    pretty(&json!({
                        "rows": rows,
                        "gluing_exponent": round3(report.gluing_exponent),
                        "brute_exponent": round3(report.brute_exponent),
                    }))
                }
                _ => {
                    let mut w = csv_writer();
                    let mut head: Vec<&str> = vec![
                        "U",
                        "first_cut_flows",
                        "gluing_semantic",
                        "gluing_actual",
                        "brute_semantic",
                        "brute_actual",
                        "feasible_values",
                    ];
                    if *timings {
                        head.extend(["gluing_seconds", "brute_seconds"]);
                    }
                    w.write_record(&head).expect("csv");
                    for r in &report.rows {
                        let mut row = vec![
                            r.u.to_string(),
                            r.first_cut_flows.to_string(),
                            r.gluing_semantic.to_string(),
                            r.gluing_actual.to_string(),
                            r.brute_semantic.to_string(),
                            r.brute_actual.to_string(),
                            r.feasible_values.to_string(),
                        ];
                        if *timings {
                            row.push(format!("{:.6}", r.gluing_time.as_secs_f64()));
                            row.push(format!("{:.6}", r.brute_time.as_secs_f64()));
                        }
                        w.write_record(&row).expect("csv");
                    }
                    let mut text = finish(w);
                    if report.rows.len() >= 2 {
                        text.push_str(&format!(
                            "# exponents in U+1: gluing {:.3}, brute force {:.3}\n",
                            report.gluing_exponent, report.brute_exponent
                        ));
                    }
                    text
                }
            }
            .into())
        }
        Command::Plot {
            file,
            region,
            fill,
            stroke,
        } => {
            let net = load(cli, file)?.network;
            let mutual = || -> Result<mcflow::Region, Error> {
                let values = feasible_flows_with_budget(&net, budget.unwrap_or(mcflow::gluing::DEFAULT_BUDGET))?
                    .family
                    .values();
                mcflow::Region::points(net.k(), values)
            };
            let text = match region {
                PlotRegion::Total => svg_of(&[("total", &total_capacity(&net)?)], fill, stroke)?,
                PlotRegion::Pairwise => svg_of(&[("pairwise", &pairwise_bound(&net)?)], fill, stroke)?,
                PlotRegion::Disjoint => svg_of(&[("disjoint", &disjoint_capacity(&net)?)], fill, stroke)?,
                PlotRegion::Mutual => svg_of(&[("mutual", &mutual()?)], fill, stroke)?,
                PlotRegion::All => {
                    let total = total_capacity(&net)?;
                    let pairwise = pairwise_bound(&net)?;
                    let values = mutual()?;
                    svg_of(&[("total", &total), ("pairwise", &pairwise), ("mutual", &values)], fill, stroke)?
                }
            };
            Ok(text.into())
        }
    }
}

fn round3(x: f64) -> f64 {
    (x * 1000.0).round() / 1000.0
}

fn system(net: &EnhancedNetwork, tree: Option<&[String]>) -> Result<mcflow::cycles::CycleSystem, Error> {
    match tree {
        Some(ids) => cycle_basis_with_tree(net, &ids.iter().map(String::as_str).collect::<Vec<_>>()),
        None => cycle_basis(net),
    }
}

fn flows_output(cli: &Cli, net: &EnhancedNetwork, outcome: &Outcome, realizations: bool) -> Result<String, Error> {
    let family = &outcome.family;
    let counters = &outcome.counters;
    Ok(match cli.format {
        Format::Json => {
            let mut v = json!({
                "values": render::values_json(&family.values()),
                "flows": family.len(),
                "counters": {
                    "semantic": counters.semantic,
                    "actual": counters.actual,
                    "steps": counters.steps,
                },
            });
            if realizations {
                let by_value: serde_json::Map<String, Value> = family
                    .by_value()
                    .iter()
                    .map(|(val, flows)| {
                        let key = val.entries().iter().map(format_rational).collect::<Vec<_>>().join(",");
                        let list = flows.iter().map(|f| render::assignment_json(&f.assignment)).collect();
                        (key, Value::Array(list))
                    })
                    .collect();
                v["realizations"] = Value::Object(by_value);
            }
            pretty(&v)
        }
        Format::Svg => svg_of(&[("mutual", &mcflow::Region::points(net.k(), family.values())?)], "#4477aa", "#222222")?,
        Format::Csv => {
            let mut w = csv_writer();
            let arcs: Vec<String> = net.arcs().iter().map(|a| a.id.clone()).collect();
            let mut head = render::coord_header(net.k());
            head.push("realizations".into());
            if realizations {
                head.push("flow".into());
                head.extend(arcs.iter().cloned());
            }
            w.write_record(&head).expect("csv");
            for (val, flows) in family.by_value() {
                let mut row = render::coords(&val);
                row.push(flows.len().to_string());
                if !realizations {
                    w.write_record(&row).expect("csv");
                    continue;
                }
                for (i, f) in flows.iter().enumerate() {
                    let mut full = row.clone();
                    full.push(i.to_string());
                    full.extend(arcs.iter().map(|a| {
                        f.assignment
                            .get(a)
                            .map(|x| format!("({})", render::coords(x).join(" ")))
                            .unwrap_or_default()
                    }));
                    w.write_record(&full).expect("csv");
                }
            }
            let mut text = finish(w);
            text.push_str(&format!(
                "# flows {}, semantic comparisons {}, actual comparisons {}\n",
                family.len(),
                counters.semantic,
                counters.actual
            ));
            text
        }
    })
}
