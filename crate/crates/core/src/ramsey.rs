//! Exact desk-scale decisions: vertex r-Ramseyness and eps-density.
//!
//! `G` is r-Ramsey for `A` iff the hypergraph of vertex sets of copies of `A`
//! has no r-coloring without a monochromatic hyperedge, so the search only
//! needs the distinct vertex sets.

use serde::Serialize;

use crate::embed::{Copy, Search, DEFAULT_COPY_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexColoring};
use crate::randcon::{estimate_density, DensityEstimate};

/// Default node cap for the coloring search.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Largest subset space the exact density check will walk.
pub const EXACT_SUBSET_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CopyHypergraph {
    pub n: usize,
    /// Sorted, deduplicated vertex sets.
    pub hyperedges: Vec<Vec<usize>>,
    /// One copy per hyperedge.
    #[serde(skip)]
    pub witnesses: Vec<Copy>,
}

pub fn copy_hypergraph(g: &Graph, a: &Graph, limit: usize) -> Result<CopyHypergraph> {
    let found = Search::new(a, g).copies(Some(limit));
    if found.truncated {
        return Err(Error::EnumerationTruncated { limit });
    }
    let mut pairs: Vec<(Vec<usize>, Copy)> = found
        .copies
        .into_iter()
        .map(|c| (c.vertices.clone(), c))
        .collect();
    pairs.sort();
    pairs.dedup_by(|x, y| x.0 == y.0);
    let (hyperedges, witnesses) = pairs.into_iter().unzip();
    Ok(CopyHypergraph {
        n: g.n(),
        hyperedges,
        witnesses,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct RamseyConfig {
    pub copy_limit: usize,
    pub node_budget: u64,
}

impl Default for RamseyConfig {
    fn default() -> Self {
        RamseyConfig {
            copy_limit: DEFAULT_COPY_LIMIT,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "decision", rename_all = "snake_case")]
pub enum RamseyDecision {
    Ramsey,
    NotRamsey { witness: VertexColoring },
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyOutcome {
    #[serde(flatten)]
    pub decision: RamseyDecision,
    pub colors: usize,
    pub hyperedges: usize,
    pub nodes: u64,
}

impl RamseyOutcome {
    pub fn is_ramsey(&self) -> Option<bool> {
        match self.decision {
            RamseyDecision::Ramsey => Some(true),
            RamseyDecision::NotRamsey { .. } => Some(false),
            RamseyDecision::Unknown => None,
        }
    }
}

pub fn is_r_ramsey(g: &Graph, a: &Graph, r: usize) -> Result<RamseyOutcome> {
    is_r_ramsey_with(g, a, r, &RamseyConfig::default())
}

pub fn is_r_ramsey_with(g: &Graph, a: &Graph, r: usize, config: &RamseyConfig) -> Result<RamseyOutcome> {
    if r == 0 {
        return Err(Error::ParamOutOfRange("r must be at least 1".into()));
    }
    if a.n() == 0 {
        return Err(Error::UnsupportedPattern("empty pattern".into()));
    }
    if a.n() >= 2 && !a.isolated_vertices().is_empty() {
        return Err(Error::UnsupportedPattern(
            "patterns with isolated vertices are not supported".into(),
        ));
    }
    let h = copy_hypergraph(g, a, config.copy_limit)?;
    let mut search = ColoringSearch::new(&h, r, config.node_budget);
    let decision = match search.run() {
        Some(true) => {
            let mut colors = vec![0usize; g.n()];
            for (pos, &v) in search.order.iter().enumerate() {
                colors[v] = search.color[pos];
            }
            let witness = VertexColoring::new(colors);
            debug_assert!(crate::colorer::verify_coloring(g, a, &witness));
            RamseyDecision::NotRamsey { witness }
        }
        Some(false) => RamseyDecision::Ramsey,
        None => RamseyDecision::Unknown,
    };
    Ok(RamseyOutcome {
        decision,
        colors: r,
        hyperedges: h.hyperedges.len(),
        nodes: search.nodes,
    })
}

/// Backtracking over colorings of the hypergraph's vertices with
/// max-used-color-plus-one symmetry breaking.
struct ColoringSearch {
    order: Vec<usize>,
    /// Hyperedges (as positions in `order`) completed at each position.
    closing: Vec<Vec<Vec<usize>>>,
    color: Vec<usize>,
    r: usize,
    nodes: u64,
    budget: u64,
}

impl ColoringSearch {
    fn new(h: &CopyHypergraph, r: usize, budget: u64) -> Self {
        let mut weight = vec![0usize; h.n];
        for e in &h.hyperedges {
            for &v in e {
                weight[v] += 1;
            }
        }
        let mut order: Vec<usize> = (0..h.n).collect();
        order.sort_by(|&x, &y| weight[y].cmp(&weight[x]).then(x.cmp(&y)));
        let mut pos = vec![0usize; h.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut closing = vec![Vec::new(); h.n];
        for e in &h.hyperedges {
            let ps: Vec<usize> = e.iter().map(|&v| pos[v]).collect();
            let last = *ps.iter().max().expect("nonempty hyperedge");
            closing[last].push(ps);
        }
        ColoringSearch {
            order,
            closing,
            color: vec![0; h.n],
            r,
            nodes: 0,
            budget,
        }
    }

    /// `Some(true)`: a good coloring exists (left in `self.color`).
    /// `Some(false)`: none exists. `None`: budget exhausted.
    fn run(&mut self) -> Option<bool> {
        self.assign(0, 0)
    }

    fn assign(&mut self, pos: usize, used: usize) -> Option<bool> {
        if pos == self.order.len() {
            return Some(true);
        }
        let top = (used + 1).min(self.r);
        for c in 0..top {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.color[pos] = c;
            let clash = self.closing[pos]
                .iter()
                .any(|e| e.iter().all(|&p| self.color[p] == c));
            if clash {
                continue;
            }
            if self.assign(pos + 1, used.max(c + 1))? {
                return Some(true);
            }
        }
        Some(false)
    }
}

/// `floor(eps * n)`, tolerant of binary rounding just below an integer.
pub fn subset_size(eps: f64, n: usize) -> usize {
    (eps * n as f64 + 1e-9).floor() as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensityMode {
    Exact,
    Sampled { trials: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum DensityReport {
    Exact {
        subset_size: usize,
        dense: bool,
        subsets_checked: u64,
        /// A subset of the requested size with no copy of `A`.
        witness_subset: Option<Vec<usize>>,
    },
    Sampled(DensityEstimate),
}

pub fn is_eps_dense(g: &Graph, a: &Graph, eps: f64, mode: DensityMode) -> Result<DensityReport> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::ParamOutOfRange(format!("eps = {eps} not in (0, 1]")));
    }
    let n = g.n();
    let s = subset_size(eps, n);
    if s == 0 {
        return Err(Error::ParamOutOfRange(format!("floor(eps * {n}) = 0")));
    }
    match mode {
        DensityMode::Sampled { trials, seed } => {
            Ok(DensityReport::Sampled(estimate_density(g, a, s, trials, seed)?))
        }
        DensityMode::Exact => {
            let space = binomial(n, s);
            if space > EXACT_SUBSET_CAP as u128 {
                return Err(Error::SubsetSpaceTooLarge {
                    n,
                    k: s,
                    cap: EXACT_SUBSET_CAP,
                });
            }
            let mut idx: Vec<usize> = (0..s).collect();
            let mut mask = vec![false; n];
            let mut checked = 0u64;
            loop {
                mask.iter_mut().for_each(|m| *m = false);
                for &i in &idx {
                    mask[i] = true;
                }
                checked += 1;
                if !Search::new(a, g).within(&mask).exists() {
                    return Ok(DensityReport::Exact {
                        subset_size: s,
                        dense: false,
                        subsets_checked: checked,
                        witness_subset: Some(idx),
                    });
                }
                if !next_combination(&mut idx, n) {
                    break;
                }
            }
            Ok(DensityReport::Exact {
                subset_size: s,
                dense: true,
                subsets_checked: checked,
                witness_subset: None,
            })
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return acc;
        }
    }
    acc
}

/// Advances a sorted k-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
