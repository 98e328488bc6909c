//! Random copy-hypergraph construction of F-free dense graphs, plus the
//! counting tools used to check it empirically.
//!
//! Each of the `T` copies of `A` on `[n]` is kept independently with
//! probability `p = n^(1 - a + eps)`; the union of the kept copies is the
//! random graph. Every copy of the core `B'` of each forbidden graph is then
//! destroyed by deleting one vertex.

use std::collections::{BTreeSet, HashSet};

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use rayon::prelude::*;
use serde::Serialize;

use crate::degeneracy::{extract_core, is_a_degenerate};
use crate::embed::{automorphism_count, contains_copy, enumerate_copies, Copy, Embedding, Search, DEFAULT_COPY_LIMIT};
use crate::error::{Error, Result};
use crate::format::write_graph6;
use crate::graph::{Edge, Graph};

/// Edge cap for exhaustive trace-cover enumeration.
pub const MAX_COVER_EDGES: usize = 12;

/// Largest `T` for which the sampler will materialise every copy.
pub const MAX_ENUMERATED_COPIES: u64 = 5_000_000;

/// Generator for Monte Carlo trial `trial`. The sampler of a single run uses
/// stream 0, trials use streams `1..`, so no two draws share a stream.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64 + 1);
    rng
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstructionParams {
    pub n: usize,
    /// Order of the pattern.
    pub a: usize,
    pub eps: f64,
    /// Edge count of the core used in the `eps < 1/(2k)` condition.
    pub k_edges: usize,
    pub p: f64,
    /// `n^(1 - a + eps)` before clamping to 1. `p_clamped` is set whenever
    /// this reaches 1, where the asymptotic argument says nothing.
    pub p_unclamped: f64,
    pub p_clamped: bool,
    pub delta0: f64,
    pub delta: f64,
    /// Subset size `floor(n^(1 - delta0))` for the density check.
    #[serde(rename = "N")]
    pub big_n: usize,
    /// `C` in the `C * sqrt(n)` deletion budget.
    pub deletion_multiplier: f64,
    pub seed: u64,
    /// Whether `eps < 1/(2k)` holds. Runs outside it are allowed but flagged.
    pub eps_within_theory: bool,
}

impl ConstructionParams {
    pub fn new(n: usize, a: usize, eps: f64, k_edges: usize, seed: u64) -> Result<Self> {
        if !(eps.is_finite() && eps > 0.0) {
            return Err(Error::ParamOutOfRange(format!("eps = {eps} must be positive")));
        }
        if a < 2 {
            return Err(Error::ParamOutOfRange("pattern needs at least 2 vertices".into()));
        }
        if n < a {
            return Err(Error::ParamOutOfRange(format!("n = {n} is smaller than |A| = {a}")));
        }
        let nf = n as f64;
        let p_unclamped = nf.powf(1.0 - a as f64 + eps);
        let delta0 = eps / (2.0 * (a as f64 - 1.0));
        let big_n = (nf.powf(1.0 - delta0) + 1e-9).floor() as usize;
        if big_n < a {
            return Err(Error::ParamOutOfRange(format!("N = {big_n} is smaller than |A| = {a}")));
        }
        Ok(ConstructionParams {
            n,
            a,
            eps,
            k_edges,
            p: p_unclamped.min(1.0),
            p_unclamped,
            p_clamped: p_unclamped >= 1.0,
            delta0,
            delta: delta0 / 2.0,
            big_n,
            deletion_multiplier: 1.0,
            seed,
            eps_within_theory: k_edges == 0 || eps < 1.0 / (2.0 * k_edges as f64),
        })
    }

    /// Overrides `p`, e.g. to probe the endpoints 0 and 1.
    pub fn with_probability(mut self, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::ParamOutOfRange(format!("p = {p} not in [0, 1]")));
        }
        self.p = p;
        self.p_unclamped = p;
        self.p_clamped = false;
        Ok(self)
    }

    pub fn with_deletion_multiplier(mut self, c: f64) -> Self {
        self.deletion_multiplier = c;
        self
    }

    pub fn deletion_budget(&self) -> f64 {
        self.deletion_multiplier * (self.n as f64).sqrt()
    }
}

/// Number of copies of `a` in `K_n`: the falling factorial over `aut(a)`.
pub fn total_copies(n: usize, a: &Graph) -> Result<u64> {
    let mut falling: u128 = 1;
    for i in 0..a.n() {
        falling = falling
            .checked_mul((n - i) as u128)
            .ok_or_else(|| Error::TooLarge("copy count overflows".into()))?;
    }
    let t = falling / automorphism_count(a) as u128;
    u64::try_from(t).map_err(|_| Error::TooLarge(format!("{t} copies do not fit in 64 bits")))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CopyHypergraphSample {
    pub params: ConstructionParams,
    pub total_copies: u64,
    /// Sorted by `(vertices, edges)`.
    pub copies: Vec<Copy>,
}

pub fn sample_copy_hypergraph(params: &ConstructionParams, a: &Graph) -> Result<CopyHypergraphSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    sample_with(params, a, &mut rng)
}

fn sample_with<R: Rng>(params: &ConstructionParams, a: &Graph, rng: &mut R) -> Result<CopyHypergraphSample> {
    if a.n() != params.a {
        return Err(Error::ParamOutOfRange(format!(
            "params are for |A| = {} but the pattern has {} vertices",
            params.a,
            a.n()
        )));
    }
    let t = total_copies(params.n, a)?;
    let k = if params.p >= 1.0 {
        t
    } else if params.p <= 0.0 || t == 0 {
        0
    } else {
        Binomial::new(t, params.p)
            .map_err(|e| Error::ParamOutOfRange(e.to_string()))?
            .sample(rng)
    };
    let mut copies = if 2 * k > t {
        if t > MAX_ENUMERATED_COPIES {
            return Err(Error::TooLarge(format!("{k} of {t} copies requested")));
        }
        let all = enumerate_copies(a, &Graph::complete(params.n), None, None).copies;
        debug_assert_eq!(all.len() as u64, t);
        if k == t {
            all
        } else {
            index::sample(rng, t as usize, k as usize)
                .into_iter()
                .map(|i| all[i].clone())
                .collect()
        }
    } else {
        // A uniform injection gives each copy with probability aut(A)/n!_a,
        // so rejecting repeats yields K distinct copies uniformly.
        let mut seen = HashSet::with_capacity(k as usize);
        while (seen.len() as u64) < k {
            let mut map = index::sample(rng, params.n, a.n()).into_vec();
            map.shuffle(rng);
            seen.insert(Embedding::new(a, map).copy());
        }
        seen.into_iter().collect()
    };
    copies.sort();
    Ok(CopyHypergraphSample {
        params: params.clone(),
        total_copies: t,
        copies,
    })
}

/// Graph on `[n]` whose edges are the union of the sampled copies' edges.
pub fn union_graph(sample: &CopyHypergraphSample) -> Graph {
    let mut g = Graph::empty(sample.params.n);
    for c in &sample.copies {
        for &(u, v) in &c.edges {
            g.add_edge(u, v).expect("copy edges lie in [n]");
        }
    }
    g
}

/// A subgraph of `B'` spanned by an edge set, embeddable into `A`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Trace {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceCover {
    pub traces: Vec<Trace>,
    pub v_sizes: Vec<usize>,
    pub overlap_sizes: Vec<usize>,
    pub sum_v: usize,
    pub size: usize,
}

impl TraceCover {
    fn new(traces: Vec<Trace>) -> Self {
        let v_sizes: Vec<usize> = traces.iter().map(|t| t.vertices.len()).collect();
        let overlap_sizes = (0..traces.len())
            .map(|i| {
                let others: BTreeSet<usize> = traces
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .flat_map(|(_, t)| t.vertices.iter().copied())
                    .collect();
                traces[i].vertices.iter().filter(|v| others.contains(v)).count()
            })
            .collect();
        TraceCover {
            sum_v: v_sizes.iter().sum(),
            size: traces.len(),
            traces,
            v_sizes,
            overlap_sizes,
        }
    }
}

/// All inclusion-minimal covers of `E(b_prime)` by `a`-embeddable traces,
/// ordered by size and then by trace list.
pub fn enumerate_min_trace_covers(b_prime: &Graph, a: &Graph, max_ell: Option<usize>) -> Result<Vec<TraceCover>> {
    let edges: Vec<Edge> = b_prime.edges().collect();
    let k = edges.len();
    if k > MAX_COVER_EDGES {
        return Err(Error::TooLarge(format!(
            "{k} edges exceeds the cover enumeration cap of {MAX_COVER_EDGES}"
        )));
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    let full: u32 = (1 << k) - 1;
    let mut traces: Vec<(u32, Trace)> = Vec::new();
    for mask in 1..=full {
        let es: Vec<Edge> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let (sub, _) = b_prime.edge_subgraph(&es, &[])?;
        if contains_copy(&sub, a) {
            let vertices: BTreeSet<usize> = es.iter().flat_map(|&(u, v)| [u, v]).collect();
            traces.push((
                mask,
                Trace {
                    vertices: vertices.into_iter().collect(),
                    edges: es,
                },
            ));
        }
    }
    let masks: Vec<u32> = traces.iter().map(|t| t.0).collect();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut chosen = Vec::new();
    cover_search(&masks, full, 0, &mut chosen, max_ell, &mut found);
    let mut covers: Vec<(usize, Vec<usize>)> = found.into_iter().map(|c| (c.len(), c)).collect();
    covers.sort();
    Ok(covers
        .into_iter()
        .map(|(_, c)| TraceCover::new(c.into_iter().map(|i| traces[i].1.clone()).collect()))
        .collect())
}

/// Branches on the lowest uncovered edge. A partial cover in which some trace
/// has no private edge can never become minimal, so it is pruned.
fn cover_search(
    masks: &[u32],
    full: u32,
    covered: u32,
    chosen: &mut Vec<usize>,
    max_ell: Option<usize>,
    found: &mut BTreeSet<Vec<usize>>,
) {
    if covered == full {
        let mut c = chosen.clone();
        c.sort_unstable();
        found.insert(c);
        return;
    }
    if max_ell.is_some_and(|m| chosen.len() >= m) {
        return;
    }
    let low = (!covered & full).trailing_zeros();
    for (i, &m) in masks.iter().enumerate() {
        if m >> low & 1 == 0 || chosen.contains(&i) {
            continue;
        }
        chosen.push(i);
        if all_private(masks, chosen) {
            cover_search(masks, full, covered | m, chosen, max_ell, found);
        }
        chosen.pop();
    }
}

fn all_private(masks: &[u32], chosen: &[usize]) -> bool {
    chosen.iter().enumerate().all(|(x, &i)| {
        let others = chosen
            .iter()
            .enumerate()
            .filter(|&(y, _)| y != x)
            .fold(0u32, |acc, (_, &j)| acc | masks[j]);
        masks[i] & !others != 0
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverInequalityReport {
    /// `|V(B')|`.
    pub b: usize,
    pub edges: usize,
    pub covers: usize,
    /// Covers with at least two traces, each overlapping the rest in at
    /// least two vertices.
    pub in_scope: usize,
    pub violations: Vec<TraceCover>,
    /// Minimum of `sum_v - (b + size)` over in-scope covers.
    pub min_slack: Option<i64>,
    pub minimizing_cover: Option<TraceCover>,
    pub equality_cases: usize,
    /// Whether every cover with at least two traces has all overlaps >= 2.
    pub all_overlaps_at_least_two: bool,
    /// Smallest cover size that is at least 2.
    pub min_cover_size: Option<usize>,
}

pub fn verify_cover_inequality(b_prime: &Graph, a: &Graph) -> Result<CoverInequalityReport> {
    let covers = enumerate_min_trace_covers(b_prime, a, None)?;
    let b = b_prime.n();
    let mut report = CoverInequalityReport {
        b,
        edges: b_prime.edge_count(),
        covers: covers.len(),
        in_scope: 0,
        violations: Vec::new(),
        min_slack: None,
        minimizing_cover: None,
        equality_cases: 0,
        all_overlaps_at_least_two: true,
        min_cover_size: None,
    };
    for c in covers.iter().filter(|c| c.size >= 2) {
        report.min_cover_size = Some(report.min_cover_size.map_or(c.size, |m| m.min(c.size)));
        if c.overlap_sizes.iter().any(|&s| s < 2) {
            report.all_overlaps_at_least_two = false;
            continue;
        }
        report.in_scope += 1;
        let slack = c.sum_v as i64 - (b + c.size) as i64;
        if slack < 0 {
            report.violations.push(c.clone());
        }
        if slack == 0 {
            report.equality_cases += 1;
        }
        if report.min_slack.is_none_or(|m| slack < m) {
            report.min_slack = Some(slack);
            report.minimizing_cover = Some(c.clone());
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityEstimate {
    pub subset_size: usize,
    pub trials: usize,
    /// Trials whose subset contained a copy of the pattern.
    pub hits: usize,
    pub fraction: f64,
}

/// Fraction of `trials` uniform `subset_size`-subsets of `g` that contain a
/// copy of `a`.
pub fn estimate_density(g: &Graph, a: &Graph, subset_size: usize, trials: usize, seed: u64) -> Result<DensityEstimate> {
    if subset_size > g.n() {
        return Err(Error::ParamOutOfRange(format!(
            "subset size {subset_size} exceeds n = {}",
            g.n()
        )));
    }
    let hits = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let mut rng = trial_rng(seed, t);
            let mut mask = vec![false; g.n()];
            for v in index::sample(&mut rng, g.n(), subset_size) {
                mask[v] = true;
            }
            Search::new(a, g).within(&mask).exists()
        })
        .count();
    Ok(DensityEstimate {
        subset_size,
        trials,
        hits,
        fraction: if trials == 0 { 0.0 } else { hits as f64 / trials as f64 },
    })
}

#[derive(Clone, Copy, Debug)]
pub struct ConstructConfig {
    pub deletion_multiplier: f64,
    pub copy_limit: usize,
    pub density_trials: usize,
}

impl Default for ConstructConfig {
    fn default() -> Self {
        ConstructConfig {
            deletion_multiplier: 1.0,
            copy_limit: DEFAULT_COPY_LIMIT,
            density_trials: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreReport {
    pub member: String,
    pub core: String,
    pub core_edges: usize,
    /// Copies of the core in the sampled graph.
    pub copies: usize,
    /// Vertices deleted while processing this core.
    pub deletions: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstructionReport {
    pub params: ConstructionParams,
    pub total_copies: u64,
    pub sampled_copies: usize,
    pub union_edges: usize,
    pub cores: Vec<CoreReport>,
    /// Deleted vertices of `[n]`, in deletion order.
    pub deleted: Vec<usize>,
    pub deletion_budget: f64,
    pub within_budget: bool,
    /// `new -> old` labels of the surviving vertices.
    pub survivors: Vec<usize>,
    pub output_n: usize,
    pub output_edges: usize,
    pub output_graph6: String,
    pub f_free: bool,
    pub density: DensityEstimate,
    pub warnings: Vec<String>,
}

pub fn construct_f_free_dense(
    n: usize,
    a: &Graph,
    family: &[Graph],
    eps: f64,
    seed: u64,
) -> Result<(Graph, ConstructionReport)> {
    construct_f_free_dense_with(n, a, family, eps, seed, &ConstructConfig::default())
}

pub fn construct_f_free_dense_with(
    n: usize,
    a: &Graph,
    family: &[Graph],
    eps: f64,
    seed: u64,
    config: &ConstructConfig,
) -> Result<(Graph, ConstructionReport)> {
    let mut cores = Vec::with_capacity(family.len());
    for b in family {
        if is_a_degenerate(b, a).degenerate {
            return Err(Error::NotApplicable { graph: write_graph6(b) });
        }
        cores.push(extract_core(b, a)?);
    }
    let k = cores.iter().map(Graph::edge_count).max().unwrap_or(0);
    let params = ConstructionParams::new(n, a.n(), eps, k, seed)?.with_deletion_multiplier(config.deletion_multiplier);
    let sample = sample_copy_hypergraph(&params, a)?;
    let g = union_graph(&sample);

    let mut deleted_mask = vec![false; n];
    let mut deleted = Vec::new();
    let mut core_reports = Vec::with_capacity(cores.len());
    for (b, core) in family.iter().zip(&cores) {
        let found = enumerate_copies(core, &g, None, Some(config.copy_limit));
        if found.truncated {
            return Err(Error::EnumerationTruncated { limit: config.copy_limit });
        }
        let before = deleted.len();
        for c in &found.copies {
            if c.vertices.iter().all(|&v| !deleted_mask[v]) {
                let v = c.vertices[0];
                deleted_mask[v] = true;
                deleted.push(v);
            }
        }
        core_reports.push(CoreReport {
            member: write_graph6(b),
            core: write_graph6(core),
            core_edges: core.edge_count(),
            copies: found.copies.len(),
            deletions: deleted.len() - before,
        });
    }
    let keep: Vec<usize> = (0..n).filter(|&v| !deleted_mask[v]).collect();
    let (out, survivors) = g.induced_subgraph(&keep)?;
    let f_free = family.iter().all(|b| !contains_copy(b, &out));

    let subset = params.big_n.min(out.n());
    let density = estimate_density(&out, a, subset, config.density_trials, seed)?;

    let budget = params.deletion_budget();
    let within_budget = deleted.len() as f64 <= budget;
    let mut warnings = Vec::new();
    if params.p_clamped {
        warnings.push(format!("p = {} clamped to 1; asymptotic guarantees do not apply", params.p_unclamped));
    }
    if !params.eps_within_theory {
        warnings.push(format!("eps = {} is not below 1/(2k) for k = {k}", params.eps));
    }
    if !within_budget {
        warnings.push(format!("{} deletions exceed the budget {budget:.3}", deleted.len()));
    }
    if subset < params.big_n {
        warnings.push(format!("density sampled at {subset} < N = {} vertices", params.big_n));
    }
    if !f_free {
        warnings.push("output still contains a family member".into());
    }
    let report = ConstructionReport {
        total_copies: sample.total_copies,
        sampled_copies: sample.copies.len(),
        union_edges: g.edge_count(),
        cores: core_reports,
        deleted,
        deletion_budget: budget,
        within_budget,
        survivors,
        output_n: out.n(),
        output_edges: out.edge_count(),
        output_graph6: write_graph6(&out),
        f_free,
        density,
        warnings,
        params,
    };
    Ok((out, report))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CopyCountStats {
    pub n: usize,
    pub eps: f64,
    pub p: f64,
    pub trials: usize,
    /// Copies of `B'` in each trial's sampled graph, in trial order.
    pub counts: Vec<usize>,
    pub mean: f64,
    pub max: usize,
    pub sqrt_n: f64,
    /// Fraction of trials with at most `sqrt(n)` copies.
    pub within_sqrt_fraction: f64,
    pub exceed_fraction: f64,
    pub min_cover_size: Option<usize>,
    /// `min_cover_size * eps`: the exponent in the expected-count bound.
    pub exponent_bound: Option<f64>,
}

pub fn estimate_copy_count(
    b_prime: &Graph,
    a: &Graph,
    n: usize,
    eps: f64,
    trials: usize,
    seed: u64,
) -> Result<CopyCountStats> {
    estimate_copy_count_with(b_prime, a, n, eps, trials, seed, DEFAULT_COPY_LIMIT)
}

pub fn estimate_copy_count_with(
    b_prime: &Graph,
    a: &Graph,
    n: usize,
    eps: f64,
    trials: usize,
    seed: u64,
    copy_limit: usize,
) -> Result<CopyCountStats> {
    let params = ConstructionParams::new(n, a.n(), eps, b_prime.edge_count(), seed)?;
    let counts = (0..trials)
        .into_par_iter()
        .map(|t| {
            let sample = sample_with(&params, a, &mut trial_rng(seed, t))?;
            let found = enumerate_copies(b_prime, &union_graph(&sample), None, Some(copy_limit));
            if found.truncated {
                return Err(Error::EnumerationTruncated { limit: copy_limit });
            }
            Ok(found.len())
        })
        .collect::<Result<Vec<usize>>>()?;
    let min_cover_size = if b_prime.edge_count() <= MAX_COVER_EDGES {
        verify_cover_inequality(b_prime, a)?.min_cover_size
    } else {
        None
    };
    let sqrt_n = (n as f64).sqrt();
    let within = counts.iter().filter(|&&x| x as f64 <= sqrt_n).count();
    let frac = |k: usize| if trials == 0 { 0.0 } else { k as f64 / trials as f64 };
    Ok(CopyCountStats {
        n,
        eps,
        p: params.p,
        trials,
        mean: frac(counts.iter().sum()),
        max: counts.iter().copied().max().unwrap_or(0),
        sqrt_n,
        within_sqrt_fraction: frac(within),
        exceed_fraction: frac(trials - within),
        min_cover_size,
        exponent_bound: min_cover_size.map(|l| l as f64 * eps),
        counts,
    })
}
