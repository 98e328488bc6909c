//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use vramsey::catalogue::{all_graphs, graphs_up_to};
use vramsey::colorer::Branch;
use vramsey::ramsey::is_r_ramsey;
use vramsey::randcon::{
    construct_f_free_dense, estimate_copy_count, sample_copy_hypergraph, verify_cover_inequality,
    ConstructionParams,
};
use vramsey::{
    articulation_points, block_decomposition, contains_copy, find_b_or_color, forest_decomposition,
    is_a_degenerate, verify_coloring, Graph,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn pigeonhole() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    let mut bad = Vec::new();
    for s in [2usize, 3] {
        for r in 1..=3usize {
            let threshold = r * (s - 1) + 1;
            for n in 1..=threshold + 1 {
                cases += 1;
                let got = is_r_ramsey(&Graph::complete(n), &Graph::complete(s), r)
                    .expect("ramsey check")
                    .is_ramsey();
                if got != Some(n >= threshold) {
                    bad.push(format!("K{n}/K{s}/r={r}: {got:?}"));
                }
            }
        }
    }
    let t = start.elapsed();
    outcome(
        bad.is_empty() && t < Duration::from_secs(10),
        format!("{}/{cases} agree in {:.2?} {:?}", cases - bad.len(), t, bad),
    )
}

fn two_triangles() -> Graph {
    Graph::complete(3).disjoint_union(&Graph::complete(3))
}

fn dichotomy() -> Outcome {
    let start = Instant::now();
    let pairs = [
        ("K3/bowtie", Graph::complete(3), Graph::bowtie()),
        ("K2/P3", Graph::complete(2), Graph::path(3)),
        ("K3/2K3", Graph::complete(3), two_triangles()),
    ];
    let levels = graphs_up_to(8);
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for (name, a, b) in &pairs {
        let ell = common::min_forest_oracle(b, a).expect("pattern is degenerate");
        let r = ell * (2 * (a.n() - 1) * (b.n() - 2) + 1);
        for g in levels.iter().skip(1).flatten().filter(|g| g.is_connected()) {
            checked += 1;
            let cert = match find_b_or_color(g, a, b) {
                Ok(c) => c,
                Err(e) => {
                    bad.push(format!("{name} on {}: {e}", vramsey::write_graph6(g)));
                    continue;
                }
            };
            let direct = contains_copy(b, g);
            let ok = match &cert.branch {
                Branch::Embedding { embedding } => direct && embedding.is_valid(b, g),
                Branch::Coloring { coloring } => {
                    !direct && verify_coloring(g, a, coloring) && coloring.palette_size() <= r
                }
            };
            if !ok {
                bad.push(format!("{name} on {}", vramsey::write_graph6(g)));
            }
        }
    }
    let t = start.elapsed();
    outcome(
        bad.is_empty() && t < Duration::from_secs(300),
        format!("{}/{checked} certificates sound in {:.2?} {:?}", checked - bad.len(), t, &bad[..bad.len().min(5)]),
    )
}

fn with_pendant_tree(base: &Graph, attach: usize, tree: &[(usize, usize)]) -> Graph {
    let extra = tree.iter().flat_map(|&(u, v)| [u, v]).max().unwrap_or(0) + 1;
    let mut g = base.disjoint_union(&Graph::empty(extra));
    let off = base.n();
    g.add_edge(attach, off).unwrap();
    for &(u, v) in tree {
        g.add_edge(off + u, off + v).unwrap();
    }
    g
}

fn theorem_desk_scale() -> Outcome {
    let k7 = Graph::complete(7);
    let mut k8_minus = Graph::empty(8);
    for (u, v) in Graph::complete(8).edges().filter(|&e| e != (0, 1)) {
        k8_minus.add_edge(u, v).unwrap();
    }
    let mut bridged = k7.disjoint_union(&k7);
    bridged.add_edge(0, 7).unwrap();
    let corpus = vec![
        k7.clone(),
        Graph::complete(8),
        k8_minus,
        bridged,
        with_pendant_tree(&k7, 0, &[]),
        with_pendant_tree(&k7, 3, &[(0, 1), (1, 2)]),
        with_pendant_tree(&k7, 6, &[(0, 1), (0, 2), (0, 3)]),
        with_pendant_tree(&k7, 2, &[(0, 1), (1, 2), (1, 3), (3, 4)]),
    ];
    let (a, b) = (Graph::complete(2), Graph::path(3));
    let mut ramsey = 0;
    let mut bad = Vec::new();
    for g in &corpus {
        let is_ramsey = is_r_ramsey(g, &a, 6).expect("ramsey check").is_ramsey();
        if is_ramsey != Some(true) {
            bad.push(format!("{} not 6-Ramsey", vramsey::write_graph6(g)));
            continue;
        }
        ramsey += 1;
        match find_b_or_color(g, &a, &b) {
            Ok(c) if c.is_embedding() && c.check(g, &a, &b) => {}
            _ => bad.push(vramsey::write_graph6(g)),
        }
    }
    outcome(bad.is_empty(), format!("{ramsey}/{} Ramsey corpus graphs embed P3 {:?}", corpus.len(), bad))
}

fn structural_oracles() -> Outcome {
    let patterns = [("K3", Graph::complete(3)), ("P4", Graph::path(4)), ("C4", Graph::cycle(4))];
    let mut graphs = 0usize;
    let mut bad = Vec::new();
    for n in 1..=7 {
        for g in all_graphs(n) {
            graphs += 1;
            let g6 = vramsey::write_graph6(&g);
            if articulation_points(&g) != common::articulation_oracle(&g) {
                bad.push(format!("cut vertices {g6}"));
            }
            let blocks: BTreeSet<Vec<(usize, usize)>> = block_decomposition(&g)
                .blocks
                .iter()
                .map(|b| b.edges.clone())
                .collect();
            if blocks != common::block_oracle(&g) {
                bad.push(format!("blocks {g6}"));
            }
            for (name, a) in &patterns {
                let deg = is_a_degenerate(&g, a).degenerate;
                if deg != common::degenerate_oracle(&g, a) {
                    bad.push(format!("degenerate {name} {g6}"));
                    continue;
                }
                if deg {
                    let f = forest_decomposition(&g, a);
                    let want = common::min_forest_oracle(&g, a);
                    let ok = f.as_ref().is_some_and(|f| {
                        f.proven_minimal && Some(f.size()) == want && f.verify(&g, a).is_ok()
                    });
                    if !ok {
                        bad.push(format!("forest {name} {g6}"));
                    }
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{graphs} graphs x 3 patterns, mismatches {:?}", &bad[..bad.len().min(5)]))
}

fn cover_inequality() -> Outcome {
    let k3 = Graph::complete(3);
    let pairs = [
        ("C4/K3", Graph::cycle(4), k3.clone()),
        ("K4/K3", Graph::complete(4), k3.clone()),
        ("diamond/K3", Graph::diamond(), k3.clone()),
        ("C5/K3", Graph::cycle(5), k3.clone()),
        ("C4/P3", Graph::cycle(4), Graph::path(3)),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, bp, a) in &pairs {
        let r = verify_cover_inequality(bp, a).expect("cover enumeration");
        pass &= r.violations.is_empty();
        if *name == "C4/K3" {
            pass &= r.equality_cases > 0;
        }
        parts.push(format!(
            "{name}: {} in scope, {} violations, min slack {:?}",
            r.in_scope,
            r.violations.len(),
            r.min_slack
        ));
    }
    outcome(pass, parts.join("; "))
}

fn construction_runs() -> (Outcome, Vec<String>) {
    let start = Instant::now();
    let (a, k4) = (Graph::complete(3), Graph::complete(4));
    let mut free = 0;
    let mut budget = 0;
    let mut dense = 0;
    let mut reports = Vec::new();
    for n in [100usize, 200] {
        for seed in 0..5u64 {
            let (g, report) = construct_f_free_dense(n, &a, std::slice::from_ref(&k4), 0.3, seed).expect("construction");
            free += usize::from(!contains_copy(&k4, &g));
            budget += usize::from(report.deleted.len() as f64 <= (n as f64).sqrt());
            dense += usize::from(report.density.fraction >= 0.99);
            reports.push(serde_json::to_string(&report).unwrap());
        }
    }
    let t = start.elapsed();
    (
        outcome(
            free == 10 && budget >= 8 && dense >= 8 && t < Duration::from_secs(120),
            format!("K4-free {free}/10, deletions <= sqrt(n) {budget}/10, density >= 0.99 {dense}/10, {t:.2?} (engineering tolerances)"),
        ),
        reports,
    )
}

fn claim_trend() -> (Outcome, Vec<String>) {
    let (c4, k3) = (Graph::cycle(4), Graph::complete(3));
    let s60 = estimate_copy_count(&c4, &k3, 60, 0.3, 100, 1).expect("count at 60");
    let s120 = estimate_copy_count(&c4, &k3, 120, 0.3, 100, 1).expect("count at 120");
    let ratio = s120.mean / s60.mean;
    let pass = s60.within_sqrt_fraction >= 0.9 && s120.within_sqrt_fraction >= 0.9 && ratio <= 2.0;
    (
        outcome(
            pass,
            format!(
                "within sqrt(n): {:.2} at 60, {:.2} at 120; means {:.2}, {:.2}; ratio {:.2}",
                s60.within_sqrt_fraction, s120.within_sqrt_fraction, s60.mean, s120.mean, ratio
            ),
        ),
        vec![serde_json::to_string(&s60).unwrap(), serde_json::to_string(&s120).unwrap()],
    )
}

fn sampling() -> (Outcome, Vec<String>) {
    let k3 = Graph::complete(3);
    let mut bad = Vec::new();
    let mut sizes = Vec::new();
    let mut reports = Vec::new();
    let mut mean = 0.0;
    let mut sd = 0.0;
    for seed in 0..20u64 {
        let params = ConstructionParams::new(100, 3, 0.3, 6, seed).unwrap();
        let s = sample_copy_hypergraph(&params, &k3).unwrap();
        let t = s.total_copies as f64;
        mean = t * params.p;
        sd = (t * params.p * (1.0 - params.p)).sqrt();
        if (s.copies.len() as f64 - mean).abs() > 5.0 * sd {
            bad.push(seed);
        }
        sizes.push(s.copies.len());
        reports.push(serde_json::to_string(&s).unwrap());
    }
    let avg = sizes.iter().sum::<usize>() as f64 / sizes.len() as f64;
    let avg_ok = (avg - mean).abs() <= 5.0 * sd / (sizes.len() as f64).sqrt();
    let base = ConstructionParams::new(100, 3, 0.3, 6, 0).unwrap();
    let zero = sample_copy_hypergraph(&base.clone().with_probability(0.0).unwrap(), &k3).unwrap();
    let one = sample_copy_hypergraph(&base.with_probability(1.0).unwrap(), &k3).unwrap();
    let ends_ok = zero.copies.is_empty() && one.copies.len() as u64 == one.total_copies && one.total_copies == 161_700;
    (
        outcome(
            bad.is_empty() && avg_ok && ends_ok,
            format!("Tp = {mean:.2}, sd = {sd:.2}, average {avg:.2}, outside 5 sd: {bad:?}, endpoints exact: {ends_ok}"),
        ),
        reports,
    )
}

fn determinism(first: &[String]) -> Outcome {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let again: Vec<String> = single.install(|| {
        let mut v = construction_runs().1;
        v.extend(claim_trend().1);
        v.extend(sampling().1);
        v
    });
    let same = again.len() == first.len() && again.iter().zip(first).all(|(x, y)| x == y);
    outcome(same, format!("{} reports re-run on one thread, identical: {same}", first.len()))
}

fn main() {
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut run = |id: usize, name: &'static str, f: &dyn Fn() -> Outcome| {
        let o = f();
        println!("criterion {id} [{name}]: {} - {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push((id, name, o));
    };
    run(1, "pigeonhole law", &pigeonhole);
    run(2, "dichotomy soundness", &dichotomy);
    run(3, "desk-scale theorem", &theorem_desk_scale);
    run(4, "structural oracles", &structural_oracles);
    run(5, "cover inequality", &cover_inequality);
    let reports = std::cell::RefCell::new(Vec::new());
    run(6, "construction end-to-end", &|| {
        let (o, r) = construction_runs();
        reports.borrow_mut().extend(r);
        o
    });
    run(7, "copy-count trend", &|| {
        let (o, r) = claim_trend();
        reports.borrow_mut().extend(r);
        o
    });
    run(8, "sampling correctness", &|| {
        let (o, r) = sampling();
        reports.borrow_mut().extend(r);
        o
    });
    run(9, "determinism", &|| determinism(&reports.borrow()));
    let failed: Vec<usize> = results.iter().filter(|r| !r.2.pass).map(|r| r.0).collect();
    println!(
        "acceptance: {}/{} criteria passed",
        results.len() - failed.len(),
        results.len()
    );
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
