//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use common::{brute_edge_connectivity, brute_vertex_connectivity};
use connpack::apps::{gossip, sequential_baseline, spread_origins, GossipPlan};
use connpack::cds::{
    approx_vertex_connectivity, cds_pack_centralized, cds_pack_centralized_with_assignment,
    cds_pack_distributed, CdsParams,
};
use connpack::graph::{
    diameter, gen_gnp, gen_lower_bound_graph, gen_structured, is_connected, Structured,
};
use connpack::oracles::{
    edge_connectivity, verify_dominating_packing, verify_spanning_packing, vertex_connectivity,
};
use connpack::rng::mix64;
use connpack::sim::{identify_components, Extremum, SimConfig};
use connpack::st::{edge_partition, st_pack_general, target_trees, ExactEstimator, StParams};
use connpack::tester::{
    split_class, test_cds_partition_centralized, test_cds_partition_distributed, ClassPartition,
    Verdict, DEFAULT_ANNOUNCE_FACTOR,
};
use connpack::{Graph, TreePacking};

// Envelope constants, fitted once on the calibration runs below (largest
// observed ratio) and frozen with 20% headroom.
const CDS_ENVELOPE: f64 = 1.2 * 82.22;
const TESTER_ENVELOPE: f64 = 1.2 * 8.557;
const PRIMITIVE_ENVELOPE: f64 = 1.2 * 0.2940;
const GOSSIP_ENVELOPE: f64 = 1.2 * 0.1087;

struct Named {
    name: String,
    graph: Graph,
    k: usize,
}

fn structured(kind: Structured) -> Graph {
    gen_structured(&kind).unwrap()
}

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

/// Cliques, sparse random graphs with connectivity 8..=24, a hypercube and two
/// lower-bound instances.
fn calibration_set() -> Vec<Named> {
    let mut out = Vec::new();
    let mut push = |name: String, graph: Graph| {
        let k = vertex_connectivity(&graph);
        out.push(Named { name, graph, k });
    };
    push("K32".into(), structured(Structured::Clique(32)));
    push("K64".into(), structured(Structured::Clique(64)));
    let mut found = 0;
    for (i, p) in [0.06, 0.08, 0.1, 0.12]
        .into_iter()
        .cycle()
        .enumerate()
        .take(40)
    {
        let g = gen_gnp(300, p, 1000 + i as u64);
        if !is_connected(&g) {
            continue;
        }
        let k = vertex_connectivity(&g);
        if (8..=24).contains(&k) && found < 3 {
            found += 1;
            push(format!("gnp(300,{p})#{i}"), g);
        }
    }
    push("Q6".into(), structured(Structured::Hypercube(6)));
    let lb = gen_lower_bound_graph(4, 2, 6, &set(&[2, 3]), &set(&[1, 3])).unwrap();
    push("G(X,Y) shared".into(), lb.graph);
    let lb = gen_lower_bound_graph(4, 2, 6, &set(&[1, 2]), &set(&[3, 4])).unwrap();
    push("G(X,Y) disjoint".into(), lb.graph);
    out
}

struct Report {
    failed: Vec<usize>,
}

impl Report {
    fn line(&mut self, id: usize, pass: bool, detail: String) {
        println!(
            "{} criterion {id}: {detail}",
            if pass { "PASS" } else { "FAIL" }
        );
        if !pass {
            self.failed.push(id);
        }
    }
}

fn ln(x: usize) -> f64 {
    (x as f64).ln()
}

fn criterion_1_3(cal: &[Named], rep: &mut Report) {
    let mut worst_rate: f64 = 1.0;
    let mut membership_ok = true;
    let mut parts = Vec::new();
    for named in cal {
        let g = &named.graph;
        let mut valid = 0;
        for seed in 0..100 {
            let p = cds_pack_centralized(g, named.k, &CdsParams::with_seed(seed)).unwrap();
            valid += usize::from(verify_dominating_packing(g, &p.trees).valid);
            membership_ok &= p.max_membership <= 3 * p.layers;
            if seed == 0 {
                parts.push(format!("{}:t={}", named.name, p.t));
            }
        }
        worst_rate = worst_rate.min(valid as f64 / 100.0);
    }
    // runtime at the top of the size range
    let big = gen_gnp(2000, 0.05, 7);
    // the guess sits below the single-class threshold; keep the layered run
    let guess = big.min_degree();
    let mut slowest = Duration::ZERO;
    let mut classes = 0;
    for seed in 0..3 {
        let params = CdsParams { small_k_fallback: false, ..CdsParams::with_seed(seed) };
        let start = Instant::now();
        let p = cds_pack_centralized(&big, guess, &params).unwrap();
        slowest = slowest.max(start.elapsed());
        classes = p.t;
        membership_ok &= p.max_membership <= 3 * p.layers;
    }
    rep.line(
        1,
        worst_rate >= 0.99 && slowest <= Duration::from_secs(5),
        format!(
            "worst valid rate {worst_rate:.2} over 100 seeds per graph [{}]; n=2000 run with t={classes} {:.2}s (limit 5s)",
            parts.join(", "),
            slowest.as_secs_f64()
        ),
    );
    rep.line(
        3,
        membership_ok,
        "every real node hosts at most 3L classes in every run".into(),
    );
}

fn criterion_2(cal: &[Named], rep: &mut Report) {
    let mut ok = true;
    let mut worst_ratio: f64 = 0.0;
    let mut detail = Vec::new();
    for named in cal {
        let n = named.graph.n();
        let mut lo = usize::MAX;
        let mut hi = 0;
        for seed in 0..20 {
            let out = approx_vertex_connectivity(
                &named.graph,
                &CdsParams::with_seed(seed),
                DEFAULT_ANNOUNCE_FACTOR,
            )
            .unwrap();
            let t = out.k_lower;
            ok &= t <= named.k && t as f64 >= named.k as f64 / (16.0 * ln(n));
            worst_ratio = worst_ratio.max(named.k as f64 / t as f64 / ln(n));
            lo = lo.min(t);
            hi = hi.max(t);
        }
        detail.push(format!("{}: k={} t∈[{lo},{hi}]", named.name, named.k));
    }
    rep.line(
        2,
        ok,
        format!(
            "k/(t·ln n) at most {worst_ratio:.2} (limit 16); {}",
            detail.join(", ")
        ),
    );
}

fn criterion_4(rep: &mut Report) {
    // A ring of small cliques: a class that skips one clique still dominates but
    // is split, so the merge layers have work to do. Explicit thin-class params.
    let g = structured(Structured::CliqueRing { c: 30, s: 3 });
    let mut samples = 0;
    let mut fast = 0;
    let mut monotone = true;
    let mut dominated_runs = 0;
    let mut seed = 0;
    while samples < 300 && seed < 3000 {
        let layers = if seed % 2 == 0 { 4 } else { 6 };
        let params = CdsParams {
            classes: Some(10),
            layers: Some(layers),
            ..CdsParams::with_seed(seed)
        };
        seed += 1;
        let p = cds_pack_centralized(&g, 10, &params).unwrap();
        if !p.dominated_after_base {
            continue;
        }
        dominated_runs += 1;
        for w in p.m_history.windows(2) {
            monotone &= w[1] <= w[0];
            if w[0] > 0 {
                samples += 1;
                fast += usize::from(w[1] as f64 <= 0.95 * w[0] as f64);
            }
        }
    }
    let rate = fast as f64 / samples.max(1) as f64;
    rep.line(
        4,
        monotone && samples >= 200 && rate >= 0.2,
        format!(
            "clique ring c=30 s=3, t=10, L∈{{4,6}}: excess non-increasing in {dominated_runs} dominated runs: \
             {monotone}; Pr[drop ≥ 5%] = {rate:.2} over {samples} (seed, layer) samples (need ≥ 0.2, ≥ 200)"
        ),
    );
}

fn criterion_5(rep: &mut Report) {
    let mut graphs: Vec<(String, Graph)> = vec![
        ("K6".into(), structured(Structured::Clique(6))),
        ("K8".into(), structured(Structured::Clique(8))),
        ("Q6".into(), structured(Structured::Hypercube(6))),
    ];
    let mut i = 0;
    while graphs.len() < 6 {
        let g = gen_gnp(120, 0.06 + 0.02 * (i % 3) as f64, 40 + i);
        i += 1;
        if is_connected(&g) && (4..=12).contains(&edge_connectivity(&g)) {
            graphs.push((format!("gnp(120)#{i}"), g));
        }
    }
    let params = StParams::with_epsilon(0.1);
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, g) in &graphs {
        let lambda = edge_connectivity(g);
        let need = target_trees(lambda) as f64 / 1.6 - 1e-9;
        let mut least = f64::INFINITY;
        for seed in 0..20 {
            let p = st_pack_general(g, &params, seed, None, &ExactEstimator).unwrap();
            let r = verify_spanning_packing(g, &p.trees);
            let within_cap = p.parts.iter().all(|s| s.iterations <= s.cap);
            ok &= r.valid && r.max_edge_load <= 1.0 + 1e-9 && r.total_weight >= need && within_cap;
            least = least.min(r.total_weight);
        }
        detail.push(format!(
            "{name}: λ={lambda} weight≥{least:.3} (need {need:.3})"
        ));
    }
    let big = loop {
        let g = gen_gnp(1000, 0.02, 77 + i);
        i += 1;
        if is_connected(&g) {
            break g;
        }
    };
    let start = Instant::now();
    let p = st_pack_general(&big, &params, 0, None, &ExactEstimator).unwrap();
    let elapsed = start.elapsed();
    ok &= verify_spanning_packing(&big, &p.trees).valid && elapsed <= Duration::from_secs(10);
    rep.line(
        5,
        ok,
        format!(
            "{}; n=1000 (λ={}) run {:.2}s (limit 10s)",
            detail.join(", "),
            p.lambda_used,
            elapsed.as_secs_f64()
        ),
    );
}

fn criterion_6(rep: &mut Report) {
    let (n, p, eps, eta) = (2000, 0.93, 0.5, 2);
    let g = gen_gnp(n, p, 2024);
    let lambda = edge_connectivity(&g);
    let target = 60.0 * ln(n) / (eps * eps);
    let share = lambda as f64 / eta as f64;
    let (lo, hi) = (share * (1.0 - eps), share * (1.0 + eps));
    let mut good = 0;
    let mut seen = (usize::MAX, 0);
    for seed in 0..100 {
        let part = edge_partition(&g, eta, seed).unwrap();
        let within = part.subgraphs.iter().all(|s| {
            let l = edge_connectivity(s);
            seen = (seen.0.min(l), seen.1.max(l));
            (lo..=hi).contains(&(l as f64))
        });
        good += usize::from(within);
    }
    rep.line(
        6,
        good >= 95,
        format!(
            "gnp({n},{p}) λ={lambda} (λ·ε²/ln n target {target:.0}), η={eta}: {good}/100 seeds inside \
             [{lo:.0}, {hi:.0}], observed [{}, {}]",
            seen.0, seen.1
        ),
    );
}

fn criterion_7(rep: &mut Report) {
    let mut valid = 0;
    let mut false_failures = 0;
    let mut corrupted = 0;
    let mut detected = 0;
    let mut rounds: BTreeMap<usize, usize> = BTreeMap::new();
    let mut seed = 0u64;
    while (valid < 500 || corrupted < 500) && seed < 5000 {
        let g = gen_gnp(80, 0.35, 3000 + seed);
        seed += 1;
        if !is_connected(&g) {
            continue;
        }
        let params = CdsParams {
            classes: Some(3),
            ..CdsParams::with_seed(seed)
        };
        let (_, ca) = cds_pack_centralized_with_assignment(&g, 16, &params).unwrap();
        let part = ClassPartition::from_assignment(&ca);
        if !part.is_valid_cds_partition(&g) {
            continue;
        }
        if valid < 500 {
            valid += 1;
            let out =
                test_cds_partition_centralized(&g, &part, mix64(seed), DEFAULT_ANNOUNCE_FACTOR);
            false_failures += usize::from(!out.passed());
        }
        if corrupted < 500 {
            let class = 1 + (seed % 3) as u32;
            if let Some((bad, _)) = split_class(&g, &part, class, seed) {
                corrupted += 1;
                let out =
                    test_cds_partition_centralized(&g, &bad, mix64(seed), DEFAULT_ANNOUNCE_FACTOR);
                if out.verdict == Verdict::ConnectivityFailure {
                    detected += 1;
                    *rounds.entry(out.detection_round.unwrap_or(0)).or_default() += 1;
                }
            }
        }
    }
    // Splits with no round-0 witness: on a ring of 3-cliques where every clique
    // holds one vertex of each class, a class loses two 2-clique stretches, so
    // no closed neighbourhood sees both of its pieces.
    let (ring_c, ring_s) = (30, 3);
    let ring = structured(Structured::CliqueRing {
        c: ring_c,
        s: ring_s,
    });
    let mut hard = 0;
    let mut hard_detected = 0;
    let mut hard_rounds: BTreeMap<usize, usize> = BTreeMap::new();
    for trial in 0..500u64 {
        let word = |i: u64| mix64(trial.wrapping_mul(0x9e37) ^ i);
        let mut labels = vec![0u32; ring.n()];
        for j in 0..ring_c {
            let shift = (word(j as u64) % ring_s as u64) as usize;
            for a in 0..ring_s {
                labels[j * ring_s + a] = ((a + shift) % ring_s) as u32 + 1;
            }
        }
        let class = 1 + (word(100) % ring_s as u64) as u32;
        let first = (word(101) % ring_c as u64) as usize;
        let second = (first + 8 + (word(102) % 12) as usize) % ring_c;
        for (i, j) in [first, first + 1, second, second + 1]
            .into_iter()
            .enumerate()
        {
            let j = j % ring_c;
            let v = (0..ring_s)
                .map(|a| j * ring_s + a)
                .find(|&v| labels[v] == class)
                .unwrap();
            let other = 1 + ((class as u64 + word(200 + i as u64) % 2) % ring_s as u64) as u32;
            labels[v] = other;
        }
        let part = ClassPartition::from_labels(ring_s, &labels).unwrap();
        assert!(
            part.undominated(&ring).is_none() && part.component_counts(&ring)[class as usize] == 2
        );
        hard += 1;
        let out =
            test_cds_partition_centralized(&ring, &part, mix64(trial), DEFAULT_ANNOUNCE_FACTOR);
        if out.verdict == Verdict::ConnectivityFailure {
            hard_detected += 1;
            *hard_rounds
                .entry(out.detection_round.unwrap_or(0))
                .or_default() += 1;
        }
    }
    // domination failures: a class confined to one vertex of a sparse graph
    let mut dom_cases = 0;
    let mut dom_detected = 0;
    for s in 0..200u64 {
        let g = gen_gnp(60, 0.1, 9000 + s);
        if !is_connected(&g) {
            continue;
        }
        let mut labels = vec![1u32; g.n()];
        labels[(s as usize) % g.n()] = 2;
        let part = ClassPartition::from_labels(2, &labels).unwrap();
        if part.undominated(&g).is_none() {
            continue;
        }
        dom_cases += 1;
        let out = test_cds_partition_centralized(&g, &part, s, DEFAULT_ANNOUNCE_FACTOR);
        let (dist, _, _) = test_cds_partition_distributed(
            &g,
            &part,
            &SimConfig::new(g.n(), s),
            DEFAULT_ANNOUNCE_FACTOR,
        )
        .unwrap();
        dom_detected += usize::from(
            out.verdict == Verdict::DominationFailure && dist.verdict == Verdict::DominationFailure,
        );
    }
    let rate = detected as f64 / corrupted.max(1) as f64;
    let hard_rate = hard_detected as f64 / hard as f64;
    rep.line(
        7,
        valid >= 500
            && false_failures == 0
            && corrupted >= 500
            && rate >= 0.99
            && hard_rate >= 0.99
            && dom_cases > 0
            && dom_detected == dom_cases,
        format!(
            "{false_failures} false failures on {valid} valid packings; {detected}/{corrupted} splits \
             detected (detection round histogram {rounds:?}); {hard_detected}/{hard} ring splits without \
             a round-0 witness detected (histogram {hard_rounds:?}); {dom_detected}/{dom_cases} domination failures"
        ),
    );
}

fn fit_line(name: &str, ratios: &[f64], frozen: f64) -> (bool, String) {
    let fitted = ratios.iter().copied().fold(0.0, f64::max);
    (
        fitted <= frozen,
        format!(
            "{name}: max ratio {fitted:.4} vs frozen {frozen:.4} over {} runs",
            ratios.len()
        ),
    )
}

fn criterion_8(cal: &[Named], rep: &mut Report) {
    let mut cds_ratios = Vec::new();
    let mut tester_ratios = Vec::new();
    let mut primitive_ratios = Vec::new();
    let mut violations = 0;
    let mut per_graph = Vec::new();
    for named in cal {
        let g = &named.graph;
        let n = g.n();
        let d = diameter(g).unwrap();
        let l = ln(n);
        let cds_bound =
            (n as f64 * l / named.k as f64).min(d as f64 + (n as f64 * l).sqrt()) * l.powi(3);
        for seed in 0..3 {
            let cfg = SimConfig::new(n, seed);
            let params = CdsParams::with_seed(seed);
            let (p, tr) = cds_pack_distributed(g, named.k, &params, &cfg).unwrap();
            violations += tr.violations.len();
            cds_ratios.push(tr.charged_rounds as f64 / cds_bound);
            if seed == 0 {
                per_graph.push(format!(
                    "{}:{:.1}",
                    named.name,
                    tr.charged_rounds as f64 / cds_bound
                ));
            }

            let (_, ca) = cds_pack_centralized_with_assignment(g, named.k, &params).unwrap();
            let part = ClassPartition::from_assignment(&ca);
            let nv = part.virtual_count();
            let d_prime = p
                .classes
                .iter()
                .map(|members| diameter(&g.induced(members)).unwrap_or(n).max(1))
                .max()
                .unwrap_or(1);
            let (_, ttr, _) =
                test_cds_partition_distributed(g, &part, &cfg, DEFAULT_ANNOUNCE_FACTOR).unwrap();
            violations += ttr.violations.len();
            let lv = ln(nv);
            let tester_bound = (d_prime as f64).min(d as f64 + (nv as f64).sqrt()) * lv.powi(3);
            tester_ratios.push(ttr.charged_rounds as f64 / tester_bound);

            // component identification on a random half of the edges
            let keep = |a: usize, b: usize| mix64(seed ^ (a.min(b) * n + a.max(b)) as u64) % 2 == 0;
            let values: Vec<u64> = (0..n as u64).collect();
            let (_, ptr) = identify_components(g, keep, &values, 16, Extremum::Min, &cfg).unwrap();
            let charge = &ptr.primitive_charges[0];
            let sub_d = charge.actual_rounds.max(1) as f64;
            let primitive_bound = sub_d.min(d as f64 + (n as f64).sqrt()) * l;
            primitive_ratios.push(ptr.charged_rounds as f64 / primitive_bound);
        }
    }
    let (a, sa) = fit_line("cds-pack", &cds_ratios, CDS_ENVELOPE);
    let (b, sb) = fit_line("tester", &tester_ratios, TESTER_ENVELOPE);
    let (c, sc) = fit_line("component primitive", &primitive_ratios, PRIMITIVE_ENVELOPE);
    rep.line(
        8,
        a && b && c && violations == 0,
        format!(
            "{sa} (seed-0 ratios {}); {sb}; {sc}; {violations} bit violations",
            per_graph.join(", ")
        ),
    );
}

fn criterion_9(rep: &mut Report) {
    let g = structured(Structured::Clique(32));
    let n = g.n();
    let mut ratios = Vec::new();
    let mut speedups = Vec::new();
    let mut sequential = Vec::new();
    let mut complete = true;
    let mut t_seen = usize::MAX;
    for seed in 0..20 {
        let p = cds_pack_centralized(&g, 31, &CdsParams::with_seed(seed)).unwrap();
        let t = p.trees.len();
        t_seen = t_seen.min(t);
        let messages = 10 * t;
        let cfg = SimConfig::new(n, seed);
        let origins = spread_origins(n, messages);
        let plan = GossipPlan::random(origins.clone(), t, seed);
        let out = gossip(&g, &p.trees, &plan, &cfg).unwrap();
        complete &= out.complete;
        let bound = (messages + n) as f64 / t as f64 * ln(n).powi(2);
        ratios.push(out.rounds as f64 / bound);
        // the same messages pipelined over the first tree alone
        let single = TreePacking {
            trees: vec![p.trees.trees[0].clone()],
        };
        let one = GossipPlan::round_robin(origins.clone(), 1);
        let base = gossip(&g, &single, &one, &cfg).unwrap().rounds;
        speedups.push(base as f64 / out.rounds as f64);
        let seq = sequential_baseline(&g, &p.trees.trees[0], &origins, &cfg).unwrap();
        sequential.push(seq as f64 / out.rounds as f64);
    }
    let (fit_ok, fit) = fit_line("rounds/((N+n)/t·ln²n)", &ratios, GOSSIP_ENVELOPE);
    let worst = speedups.iter().copied().fold(f64::INFINITY, f64::min);
    let worst_seq = sequential.iter().copied().fold(f64::INFINITY, f64::min);
    rep.line(
        9,
        complete && fit_ok && t_seen >= 4 && worst >= 2.0,
        format!(
            "K32, t≥{t_seen}, N=10t: all delivered: {complete}; {fit}; speedup over one pipelined tree ≥ {worst:.2} \
             (need 2), over one-at-a-time on one tree ≥ {worst_seq:.2}"
        ),
    );
}

fn criterion_10(rep: &mut Report) {
    let mut graphs = 0;
    let mut mismatches = 0;
    let mut seed = 0u64;
    while graphs < 10_000 {
        let n = 2 + (seed % 7) as usize;
        let p = 0.15 + 0.8 * ((mix64(seed) >> 11) as f64 / (1u64 << 53) as f64);
        let g = gen_gnp(n, p, seed);
        seed += 1;
        graphs += 1;
        if vertex_connectivity(&g) != brute_vertex_connectivity(&g)
            || edge_connectivity(&g) != brute_edge_connectivity(&g)
        {
            mismatches += 1;
        }
    }
    let mut params = 0;
    let mut lb_bad = Vec::new();
    for h in 2..=5 {
        for ell in 1..=2 {
            for w in 5..=8 {
                for shared in [true, false] {
                    let half = h / 2;
                    let (xs, ys) = if shared {
                        (
                            (1..=half.max(1)).collect::<BTreeSet<_>>(),
                            (half.max(1)..=h).collect(),
                        )
                    } else {
                        (
                            (1..=half).collect::<BTreeSet<_>>(),
                            (half + 1..=h).collect(),
                        )
                    };
                    let lb = gen_lower_bound_graph(h, ell, w, &xs, &ys).unwrap();
                    let k = vertex_connectivity(&lb.graph);
                    params += 1;
                    let ok = if shared { k == 4 } else { k >= w };
                    if !ok {
                        lb_bad.push(format!("h={h} ell={ell} w={w} shared={shared}: κ={k}"));
                    }
                }
            }
        }
    }
    rep.line(
        10,
        mismatches == 0 && params >= 50 && lb_bad.is_empty(),
        format!(
            "{mismatches} oracle mismatches on {graphs} graphs with n ≤ 8; \
             {} of {params} lower-bound parameterizations off ({})",
            lb_bad.len(),
            lb_bad.join("; ")
        ),
    );
}

fn main() {
    let mut rep = Report { failed: Vec::new() };
    let only: Option<BTreeSet<usize>> = std::env::var("ACCEPTANCE_ONLY")
        .ok()
        .map(|s| s.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let want = |id: usize| only.as_ref().is_none_or(|s| s.contains(&id));
    let cal = calibration_set();
    let timed = |id: usize, rep: &mut Report, f: &dyn Fn(&mut Report)| {
        if want(id) {
            let start = Instant::now();
            f(rep);
            eprintln!(
                "  (criterion {id} took {:.1}s)",
                start.elapsed().as_secs_f64()
            );
        }
    };
    timed(1, &mut rep, &|r| criterion_1_3(&cal, r));
    timed(2, &mut rep, &|r| criterion_2(&cal, r));
    timed(4, &mut rep, &criterion_4);
    timed(5, &mut rep, &criterion_5);
    timed(6, &mut rep, &criterion_6);
    timed(7, &mut rep, &criterion_7);
    timed(8, &mut rep, &|r| criterion_8(&cal, r));
    timed(9, &mut rep, &criterion_9);
    timed(10, &mut rep, &criterion_10);
    if !rep.failed.is_empty() {
        println!("acceptance: failed criteria {:?}", rep.failed);
        std::process::exit(1);
    }
    println!("acceptance: all criteria passed");
}
