//! Command-line front end. Every subcommand writes an [`ExperimentReport`].

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::apps::{
    congestion_report, gossip, sequential_baseline, spread_origins, Demands, ExperimentReport,
    GossipPlan, TranscriptSummary,
};
use crate::cds::{
    approx_vertex_connectivity, cds_pack_centralized, run_distributed, CdsPacking, CdsParams,
};
use crate::error::{Error, Result};
use crate::graph::{
    diameter, gen_gnp, gen_lower_bound_graph, gen_structured, load_graph, save_graph, Graph,
    Structured,
};
use crate::oracles::{
    edge_connectivity, verify_dominating_packing, verify_spanning_packing, vertex_connectivity,
};
use crate::packing::TreePacking;
use crate::sim::{Model, SimConfig};
use crate::st::{st_pack_general, ExactEstimator, StParams};
use crate::tester::{
    test_cds_partition_centralized, test_cds_partition_distributed, ClassPartition,
    DEFAULT_ANNOUNCE_FACTOR,
};

#[derive(Parser, Debug)]
#[command(
    name = "connpack",
    version,
    about = "Tree packings, connectivity oracles and a CONGEST simulator"
)]
struct Cli {
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = ModelArg::Vcongest)]
    model: ModelArg,
    #[arg(long, global = true, default_value_t = 0.1)]
    epsilon: f64,
    /// Fail on any message over the bit budget.
    #[arg(long, global = true)]
    strict_bits: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    Vcongest,
    Econgest,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Gen(GenArgs),
    /// Exact vertex and edge connectivity.
    Oracle(GraphArg),
    /// Fractional dominating-tree packing.
    CdsPack(CdsArgs),
    /// Fractional spanning-tree packing.
    StPack(StArgs),
    /// Vertex-connectivity approximation by guess-and-test.
    ApproxVc(ApproxArgs),
    /// Test whether every class of a partition is a connected dominating set.
    TestPacking(TestArgs),
    /// Disseminate messages over a tree packing.
    Gossip(GossipArgs),
    /// Fixed-seed calibration runs over the standard graph set.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct GraphArg {
    #[arg(long)]
    graph: PathBuf,
    /// Relabel arbitrary vertex ids to 0..n.
    #[arg(long)]
    remap: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Gnp,
    Clique,
    Cycle,
    Path,
    Star,
    Hypercube,
    CliqueChain,
    CliqueRing,
    Grid,
    LowerBound,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    dim: Option<u32>,
    /// Clique count (chain, ring).
    #[arg(long)]
    c: Option<usize>,
    /// Clique size (chain, ring).
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    /// Lower-bound family: path count.
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    /// Lower-bound family: clique width.
    #[arg(long)]
    w: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    x: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    y: Vec<usize>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct CdsArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long)]
    k_guess: usize,
    /// Run the message-level pipeline on the simulator.
    #[arg(long)]
    distributed: bool,
    #[arg(long)]
    layers: Option<usize>,
    #[arg(long)]
    classes: Option<usize>,
    #[arg(long, default_value_t = 0.25)]
    t_factor: f64,
    /// Also write the packing alone to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct StArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Edge-partition size; chosen from the connectivity when absent.
    #[arg(long)]
    eta: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ApproxArgs {
    #[command(flatten)]
    graph: GraphArg,
    #[arg(long, default_value_t = DEFAULT_ANNOUNCE_FACTOR)]
    announce_factor: usize,
}

#[derive(Args, Debug)]
struct TestArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Packing JSON with a `classes` field.
    #[arg(long, conflicts_with = "labels")]
    packing: Option<PathBuf>,
    /// One class number (1-based) per line, line i for vertex i.
    #[arg(long)]
    labels: Option<PathBuf>,
    #[arg(long)]
    distributed: bool,
    #[arg(long, default_value_t = DEFAULT_ANNOUNCE_FACTOR)]
    announce_factor: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PlanArg {
    Random,
    RoundRobin,
}

#[derive(Args, Debug)]
struct GossipArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Packing JSON with a `trees` field.
    #[arg(long)]
    packing: PathBuf,
    #[arg(long)]
    messages: usize,
    #[arg(long, value_enum, default_value_t = PlanArg::Random)]
    plan: PlanArg,
    /// Also time the one-message-at-a-time single-tree baseline.
    #[arg(long)]
    baseline: bool,
    /// Route the messages as broadcasts and report congestion; needs the vertex connectivity for the ratio.
    #[arg(long)]
    congestion: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Runs per graph.
    #[arg(long, default_value_t = 3)]
    runs: usize,
}

struct Globals {
    seed: u64,
    model: Model,
    epsilon: f64,
    strict: bool,
}

impl Globals {
    fn sim(&self, n: usize) -> SimConfig {
        let mut cfg = SimConfig::new(n, self.seed);
        cfg.model = self.model;
        cfg.strict = self.strict;
        cfg
    }
}

/// Runs the CLI on `argv` (program name first) and returns the exit code:
/// 0 on success, 1 when a result fails validation or a run errors, 2 on usage errors.
pub fn cli_main(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let globals = Globals {
        seed: cli.seed,
        model: match cli.model {
            ModelArg::Vcongest => Model::VCongest,
            ModelArg::Econgest => Model::ECongest,
        },
        epsilon: cli.epsilon,
        strict: cli.strict_bits,
    };
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a, &globals),
        Command::Oracle(a) => cmd_oracle(a),
        Command::CdsPack(a) => cmd_cds(a, &globals),
        Command::StPack(a) => cmd_st(a, &globals),
        Command::ApproxVc(a) => cmd_approx(a, &globals),
        Command::TestPacking(a) => cmd_test(a, &globals),
        Command::Gossip(a) => cmd_gossip(a, &globals),
        Command::Bench(a) => cmd_bench(a, &globals),
    };
    let mut report = match result {
        Ok(r) => r,
        Err(e @ (Error::InvalidParam(_) | Error::Ids(_) | Error::Parse { .. })) => {
            eprintln!("error: {e}");
            return 2;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    report.set("seed", cli.seed);
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    match &cli.json_out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: {e}");
                return 1;
            }
        }
        None => print!("{text}"),
    }
    if report.valid {
        0
    } else {
        1
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParam(format!("--{flag} is required for this family")))
}

fn read_graph(a: &GraphArg) -> Result<Graph> {
    load_graph(&a.graph, a.remap)
}

fn read_json(path: &Path) -> Result<Value> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

fn cmd_gen(a: &GenArgs, gl: &Globals) -> Result<ExperimentReport> {
    let structured = |s: Structured| gen_structured(&s);
    let g = match a.family {
        Family::Gnp => gen_gnp(need(a.n, "n")?, need(a.p, "p")?, gl.seed),
        Family::Clique => structured(Structured::Clique(need(a.n, "n")?))?,
        Family::Cycle => structured(Structured::Cycle(need(a.n, "n")?))?,
        Family::Path => structured(Structured::Path(need(a.n, "n")?))?,
        Family::Star => structured(Structured::Star(need(a.n, "n")?))?,
        Family::Hypercube => structured(Structured::Hypercube(need(a.dim, "dim")?))?,
        Family::CliqueChain => structured(Structured::CliqueChain {
            c: need(a.c, "c")?,
            s: need(a.s, "s")?,
        })?,
        Family::CliqueRing => structured(Structured::CliqueRing {
            c: need(a.c, "c")?,
            s: need(a.s, "s")?,
        })?,
        Family::Grid => structured(Structured::Grid {
            rows: need(a.rows, "rows")?,
            cols: need(a.cols, "cols")?,
        })?,
        Family::LowerBound => {
            let xs: BTreeSet<usize> = a.x.iter().copied().collect();
            let ys: BTreeSet<usize> = a.y.iter().copied().collect();
            gen_lower_bound_graph(
                need(a.h, "h")?,
                need(a.ell, "ell")?,
                need(a.w, "w")?,
                &xs,
                &ys,
            )?
            .graph
        }
    };
    save_graph(&g, &a.out)?;
    let mut r = ExperimentReport::new("gen");
    r.set("family", format!("{:?}", a.family));
    r.push_run(json!({"n": g.n(), "m": g.m(), "out": a.out}));
    Ok(r)
}

fn cmd_oracle(a: &GraphArg) -> Result<ExperimentReport> {
    let g = read_graph(a)?;
    let mut r = ExperimentReport::new("oracle");
    r.set("graph", &a.graph);
    r.push_run(json!({
        "n": g.n(),
        "m": g.m(),
        "min_degree": g.min_degree(),
        "diameter": diameter(&g),
        "vertex_connectivity": vertex_connectivity(&g),
        "edge_connectivity": edge_connectivity(&g),
    }));
    Ok(r)
}

fn cds_params(a: &CdsArgs, g: &Globals) -> CdsParams {
    CdsParams {
        seed: g.seed,
        t_factor: a.t_factor,
        layers: a.layers,
        classes: a.classes,
        ..CdsParams::default()
    }
}

fn cmd_cds(a: &CdsArgs, gl: &Globals) -> Result<ExperimentReport> {
    let g = read_graph(&a.graph)?;
    let params = cds_params(a, gl);
    let mut r = ExperimentReport::new("cds-pack");
    r.set("graph", &a.graph.graph);
    r.set("k_guess", a.k_guess);
    r.set("distributed", a.distributed);
    r.set("params", &params);
    let (packing, transcript) = if a.distributed {
        let out = run_distributed(&g, a.k_guess, &params, &gl.sim(g.n()))?;
        (out.packing, Some(TranscriptSummary::from(&out.transcript)))
    } else {
        (cds_pack_centralized(&g, a.k_guess, &params)?, None)
    };
    let verdict = verify_dominating_packing(&g, &packing.trees);
    r.valid = verdict.valid;
    if let Some(path) = &a.out {
        std::fs::write(path, serde_json::to_string_pretty(&packing)? + "\n")?;
    }
    r.push_run(json!({"packing": packing, "verifier": verdict, "transcript": transcript}));
    Ok(r)
}

fn cmd_st(a: &StArgs, gl: &Globals) -> Result<ExperimentReport> {
    let g = read_graph(&a.graph)?;
    let params = StParams::with_epsilon(gl.epsilon);
    let packing = st_pack_general(&g, &params, gl.seed, a.eta, &ExactEstimator)?;
    let verdict = verify_spanning_packing(&g, &packing.trees);
    let mut r = ExperimentReport::new("st-pack");
    r.set("graph", &a.graph.graph);
    r.set("epsilon", gl.epsilon);
    r.valid = verdict.valid;
    if let Some(path) = &a.out {
        std::fs::write(path, serde_json::to_string_pretty(&packing)? + "\n")?;
    }
    r.push_run(json!({
        "total_weight": verdict.total_weight,
        "max_edge_load": verdict.max_edge_load,
        "trees": packing.trees.len(),
        "lambda_used": packing.lambda_used,
        "eta": packing.eta,
        "alpha": packing.alpha,
        "beta": packing.beta,
        "iterations": packing.iterations,
        "max_z": packing.max_z,
        "promised_weight": packing.promised_weight,
        "verifier": verdict,
    }));
    Ok(r)
}

fn cmd_approx(a: &ApproxArgs, gl: &Globals) -> Result<ExperimentReport> {
    let g = read_graph(&a.graph)?;
    let out = approx_vertex_connectivity(&g, &CdsParams::with_seed(gl.seed), a.announce_factor)?;
    let mut r = ExperimentReport::new("approx-vc");
    r.set("graph", &a.graph.graph);
    r.set("announce_factor", a.announce_factor);
    r.push_run(json!({
        "k_lower": out.k_lower,
        "accepted_guess": out.accepted_guess,
        "guesses": out.guesses,
    }));
    Ok(r)
}

fn partition_from(a: &TestArgs, n: usize) -> Result<ClassPartition> {
    if let Some(path) = &a.packing {
        let p: CdsPacking = serde_json::from_value(read_json(path)?)?;
        let mut hosted = vec![Vec::new(); n];
        for (i, members) in p.classes.iter().enumerate() {
            for &x in members {
                let slot: &mut Vec<(u32, u32)> = hosted
                    .get_mut(x)
                    .ok_or_else(|| Error::Validation(format!("class member {x} out of range")))?;
                slot.push((i as u32 + 1, 1));
            }
        }
        return Ok(ClassPartition {
            t: p.classes.len(),
            hosted,
        });
    }
    let path = a
        .labels
        .as_ref()
        .ok_or_else(|| Error::InvalidParam("one of --packing or --labels is required".into()))?;
    let text = std::fs::read_to_string(path)?;
    let labels = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            l.trim().parse::<u32>().map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })
        })
        .collect::<Result<Vec<u32>>>()?;
    if labels.len() != n {
        return Err(Error::Validation(format!(
            "{} labels for {n} vertices",
            labels.len()
        )));
    }
    let t = labels.iter().copied().max().unwrap_or(0) as usize;
    ClassPartition::from_labels(t, &labels)
}

fn cmd_test(a: &TestArgs, gl: &Globals) -> Result<ExperimentReport> {
    let g = read_graph(&a.graph)?;
    let part = partition_from(a, g.n())?;
    let mut r = ExperimentReport::new("test-packing");
    r.set("graph", &a.graph.graph);
    r.set("distributed", a.distributed);
    r.set("announce_factor", a.announce_factor);
    if a.distributed {
        let (outcome, tr, consistent) =
            test_cds_partition_distributed(&g, &part, &gl.sim(g.n()), a.announce_factor)?;
        r.push_run(json!({"outcome": outcome, "consistent": consistent, "transcript": TranscriptSummary::from(&tr)}));
    } else {
        let outcome = test_cds_partition_centralized(&g, &part, gl.seed, a.announce_factor);
        r.push_run(json!({"outcome": outcome}));
    }
    Ok(r)
}

fn cmd_gossip(a: &GossipArgs, gl: &Globals) -> Result<ExperimentReport> {
    let g = read_graph(&a.graph)?;
    let value = read_json(&a.packing)?;
    let trees: TreePacking = serde_json::from_value(value.get("trees").cloned().unwrap_or(value))?;
    if trees.trees.is_empty() {
        return Err(Error::Validation("packing has no trees".into()));
    }
    let origins = spread_origins(g.n(), a.messages);
    let plan = match a.plan {
        PlanArg::Random => GossipPlan::random(origins.clone(), trees.len(), gl.seed),
        PlanArg::RoundRobin => GossipPlan::round_robin(origins.clone(), trees.len()),
    };
    let cfg = gl.sim(g.n());
    let out = gossip(&g, &trees, &plan, &cfg)?;
    let mut r = ExperimentReport::new("gossip");
    r.set("graph", &a.graph.graph);
    r.set("messages", a.messages);
    r.set("plan", format!("{:?}", a.plan));
    r.valid = out.complete;
    let baseline = if a.baseline {
        Some(sequential_baseline(&g, &trees.trees[0], &origins, &cfg)?)
    } else {
        None
    };
    let congestion = if a.congestion {
        let k = vertex_connectivity(&g);
        Some(congestion_report(
            &g,
            &trees,
            &Demands::Broadcast(origins),
            gl.seed,
            Some(k),
        )?)
    } else {
        None
    };
    r.push_run(json!({
        "rounds": out.rounds,
        "complete": out.complete,
        "missing": out.missing,
        "trees": trees.len(),
        "baseline_rounds": baseline,
        "congestion": congestion,
        "transcript": TranscriptSummary::from(&out.transcript),
    }));
    Ok(r)
}

fn cmd_bench(a: &BenchArgs, gl: &Globals) -> Result<ExperimentReport> {
    let mut r = ExperimentReport::new("bench");
    r.set("runs", a.runs);
    r.set("epsilon", gl.epsilon);
    let calibration: Vec<(String, Graph)> = vec![
        ("K32".into(), gen_structured(&Structured::Clique(32))?),
        ("K64".into(), gen_structured(&Structured::Clique(64))?),
        (
            "hypercube6".into(),
            gen_structured(&Structured::Hypercube(6))?,
        ),
        ("gnp300".into(), gen_gnp(300, 0.08, 11)),
    ];
    let mut valid_runs = Vec::new();
    let mut ratios = Vec::new();
    for (name, g) in &calibration {
        let k = vertex_connectivity(g);
        let lambda = edge_connectivity(g);
        for run in 0..a.runs {
            let seed = gl.seed.wrapping_add(run as u64);
            let p = cds_pack_centralized(g, k, &CdsParams::with_seed(seed))?;
            let v = verify_dominating_packing(g, &p.trees);
            valid_runs.push(if v.valid { 1.0 } else { 0.0 });
            let approx = approx_vertex_connectivity(
                g,
                &CdsParams::with_seed(seed),
                DEFAULT_ANNOUNCE_FACTOR,
            )?;
            ratios.push(k as f64 / approx.k_lower as f64);
            let st = st_pack_general(
                g,
                &StParams::with_epsilon(gl.epsilon),
                seed,
                None,
                &ExactEstimator,
            )?;
            let sv = verify_spanning_packing(g, &st.trees);
            r.valid &= sv.valid;
            r.push_run(json!({
                "graph": name,
                "seed": seed,
                "k": k,
                "lambda": lambda,
                "cds_t": p.t,
                "cds_valid": v.valid,
                "cds_max_load": v.max_vertex_load,
                "approx_k_lower": approx.k_lower,
                "st_weight": sv.total_weight,
                "st_iterations": st.iterations,
                "st_valid": sv.valid,
            }));
        }
    }
    r.aggregate("cds_valid_fraction", &valid_runs);
    r.aggregate("approx_ratio", &ratios);
    Ok(r)
}
