//! Certifying dichotomy: given a host `G`, a pattern `A` and an A-degenerate
//! graph `B` with minimum A-forest size `l`, return either a copy of `B` in
//! `G` or a coloring of `G` with at most `l * (2(a-1)(b-2) + 1)` colors and
//! no monochromatic copy of `A`.
//!
//! The recursion peels the last glued piece `B_m` (attached at `x`, which
//! plays role `k` of `A`):
//!
//! * `U` = vertices `v` of the current host with fewer than `b - 1` copies of
//!   `A` that have `v` in role `k` and pairwise meet only at `v`;
//! * `G[U]` is colored with a fresh palette by degeneracy-coloring the graph
//!   of arcs `v -> u`, `u` in a maximal such star family at `v` inside `G[U]`;
//! * the rest recurses with `B_1..B_{m-1}`. A returned copy of that prefix is
//!   completed through one of the `b - 1` star copies at the image of `x`.
//!
//! Once only pairwise-disjoint pieces remain, a maximal family of disjoint
//! copies of `A` either holds enough copies to host every piece or yields a
//! `2M + 1` coloring.

use std::collections::HashMap;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::degeneracy::{forest_decomposition_with, ForestConfig, Piece};
use crate::embed::{Copy, Embedding, Search, DEFAULT_COPY_LIMIT};
use crate::error::{Error, Result};
use crate::format::write_graph6;
use crate::graph::{Graph, VertexColoring};

/// Default node budget for one exact star-family packing query.
pub const DEFAULT_PACK_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug)]
pub struct ColorerConfig {
    pub copy_limit: usize,
    pub pack_budget: u64,
    pub forest: ForestConfig,
}

impl Default for ColorerConfig {
    fn default() -> Self {
        ColorerConfig {
            copy_limit: DEFAULT_COPY_LIMIT,
            pack_budget: DEFAULT_PACK_BUDGET,
            forest: ForestConfig::default(),
        }
    }
}

/// Copies of `A` through `center` in role `role`, pairwise meeting only at
/// `center`. Each member is an embedding with `map[role] == center`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarFamily {
    pub center: usize,
    pub role: usize,
    pub members: Vec<Embedding>,
}

impl StarFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn copies(&self) -> Vec<Copy> {
        self.members.iter().map(Embedding::copy).collect()
    }

    pub fn is_valid(&self, g: &Graph, a: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        self.members.iter().all(|e| {
            e.is_valid(a, g)
                && e.map[self.role] == self.center
                && e.image_vertices
                    .iter()
                    .filter(|&&u| u != self.center)
                    .all(|&u| !std::mem::replace(&mut seen[u], true))
        })
    }
}

/// Petals of the pinned copies at `center`: the vertex set minus the center,
/// deduplicated, each with one witness embedding.
fn petals(
    g: &Graph,
    a: &Graph,
    role: usize,
    center: usize,
    mask: Option<&[bool]>,
    limit: usize,
) -> Result<Vec<(Vec<usize>, Embedding)>> {
    let mut s = Search::new(a, g).pinned(role, center);
    if let Some(m) = mask {
        s = s.within(m);
    }
    let found = s.copies(Some(limit));
    if found.truncated {
        return Err(Error::EnumerationTruncated { limit });
    }
    let mut by_set: HashMap<Vec<usize>, Embedding> = HashMap::new();
    for (copy, emb) in found.copies.into_iter().zip(found.embeddings) {
        let petal: Vec<usize> = copy.vertices.into_iter().filter(|&u| u != center).collect();
        by_set.entry(petal).or_insert(emb);
    }
    let mut out: Vec<_> = by_set.into_iter().collect();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Decides whether `t` copies of `a` with `v` in role `role` can be chosen
/// pairwise meeting only at `v`, returning such a family when they can.
pub fn star_family_at_least(
    g: &Graph,
    a: &Graph,
    role: usize,
    v: usize,
    t: usize,
) -> Result<Option<StarFamily>> {
    star_family_at_least_in(g, a, role, v, t, None, &ColorerConfig::default())
}

pub fn star_family_at_least_in(
    g: &Graph,
    a: &Graph,
    role: usize,
    v: usize,
    t: usize,
    mask: Option<&[bool]>,
    config: &ColorerConfig,
) -> Result<Option<StarFamily>> {
    if role >= a.n() {
        return Err(Error::InvalidVertex {
            vertex: role,
            n: a.n(),
        });
    }
    if v >= g.n() {
        return Err(Error::InvalidVertex { vertex: v, n: g.n() });
    }
    let family = |chosen: Vec<Embedding>| StarFamily {
        center: v,
        role,
        members: chosen,
    };
    if t == 0 {
        return Ok(Some(family(Vec::new())));
    }
    let petals = petals(g, a, role, v, mask, config.copy_limit)?;
    let mut packer = Packer {
        petals: &petals,
        used: vec![false; g.n()],
        chosen: Vec::new(),
        nodes: 0,
        budget: config.pack_budget,
        petal_size: a.n() - 1,
    };
    match packer.pack(0, t) {
        ControlFlow::Break(true) => Ok(Some(family(
            packer.chosen.iter().map(|&i| petals[i].1.clone()).collect(),
        ))),
        ControlFlow::Break(false) => Err(Error::EnumerationTruncated {
            limit: config.pack_budget as usize,
        }),
        ControlFlow::Continue(()) => Ok(None),
    }
}

/// Exact search for `need` pairwise-disjoint petals.
struct Packer<'p> {
    petals: &'p [(Vec<usize>, Embedding)],
    used: Vec<bool>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
    petal_size: usize,
}

impl Packer<'_> {
    /// `Break(true)` on success, `Break(false)` on budget exhaustion.
    fn pack(&mut self, from: usize, need: usize) -> ControlFlow<bool> {
        if need == 0 {
            return ControlFlow::Break(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return ControlFlow::Break(false);
        }
        if self.petals.len() - from < need {
            return ControlFlow::Continue(());
        }
        if self.petal_size > 0 {
            let mut free: Vec<usize> = self.petals[from..]
                .iter()
                .flat_map(|(p, _)| p.iter().copied())
                .filter(|&u| !self.used[u])
                .collect();
            free.sort_unstable();
            free.dedup();
            if free.len() < need * self.petal_size {
                return ControlFlow::Continue(());
            }
        }
        for i in from..self.petals.len() {
            if self.petals.len() - i < need {
                break;
            }
            let petal = &self.petals[i].0;
            if petal.iter().any(|&u| self.used[u]) {
                continue;
            }
            for &u in petal {
                self.used[u] = true;
            }
            self.chosen.push(i);
            self.pack(i + 1, need - 1)?;
            self.chosen.pop();
            for &u in petal {
                self.used[u] = false;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Greedy maximal star family at `v` using only vertices in `mask`.
fn greedy_star_family(
    g: &Graph,
    a: &Graph,
    role: usize,
    v: usize,
    mask: &[bool],
    config: &ColorerConfig,
) -> Result<StarFamily> {
    let mut used = vec![false; g.n()];
    let mut members = Vec::new();
    for (petal, emb) in petals(g, a, role, v, Some(mask), config.copy_limit)? {
        if petal.iter().all(|&u| !used[u]) {
            for &u in &petal {
                used[u] = true;
            }
            members.push(emb);
        }
    }
    Ok(StarFamily {
        center: v,
        role,
        members,
    })
}

/// A maximal family of pairwise vertex-disjoint copies of `a` in `g`.
pub fn greedy_disjoint_family(g: &Graph, a: &Graph) -> Vec<Copy> {
    let all = vec![true; g.n()];
    disjoint_family_in(g, a, &all)
        .iter()
        .map(Embedding::copy)
        .collect()
}

fn disjoint_family_in(g: &Graph, a: &Graph, mask: &[bool]) -> Vec<Embedding> {
    let mut free = mask.to_vec();
    let mut out = Vec::new();
    if a.n() == 0 {
        return out;
    }
    while let Some(e) = Search::new(a, g).within(&free).first() {
        for &u in &e.image_vertices {
            free[u] = false;
        }
        out.push(e);
    }
    out
}

/// Smallest-last vertex order; the second value is the degeneracy.
pub fn smallest_last_order(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); g.max_degree() + 1];
    for v in (0..n).rev() {
        buckets[deg[v]].push(v);
    }
    let mut removal = Vec::with_capacity(n);
    let mut degeneracy = 0;
    let mut low = 0;
    while removal.len() < n {
        low = low.min(buckets.len() - 1);
        let v = loop {
            match buckets[low].pop() {
                Some(v) if !removed[v] && deg[v] == low => break v,
                Some(_) => {}
                None => low += 1,
            }
        };
        removed[v] = true;
        degeneracy = degeneracy.max(low);
        removal.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                buckets[deg[w]].push(w);
                low = low.min(deg[w]);
            }
        }
    }
    removal.reverse();
    (removal, degeneracy)
}

pub fn degeneracy(g: &Graph) -> usize {
    smallest_last_order(g).1
}

/// Greedy coloring along the smallest-last order: proper, with at most
/// `degeneracy + 1` colors.
pub fn degeneracy_coloring(g: &Graph) -> VertexColoring {
    let (order, _) = smallest_last_order(g);
    let mut colors = vec![usize::MAX; g.n()];
    let mut taken: Vec<bool> = Vec::new();
    for v in order {
        taken.clear();
        taken.resize(g.degree(v) + 1, false);
        for &w in g.neighbors(v) {
            let c = colors[w];
            if c < taken.len() {
                taken[c] = true;
            }
        }
        colors[v] = taken.iter().position(|&t| !t).expect("a free color");
    }
    VertexColoring::new(colors)
}

/// A monochromatic copy of `a` under `c`, if there is one.
pub fn monochromatic_copy(g: &Graph, a: &Graph, c: &VertexColoring) -> Option<Copy> {
    assert_eq!(c.len(), g.n(), "coloring must cover every vertex");
    let mut palette: Vec<usize> = c.colors().to_vec();
    palette.sort_unstable();
    palette.dedup();
    palette.into_iter().find_map(|color| {
        let mask = c.class_mask(color);
        Search::new(a, g).within(&mask).first().map(|e| e.copy())
    })
}

/// True when no copy of `a` in `g` is monochromatic under `c`.
pub fn verify_coloring(g: &Graph, a: &Graph, c: &VertexColoring) -> bool {
    monochromatic_copy(g, a, c).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum Branch {
    Embedding { embedding: Embedding },
    Coloring { coloring: VertexColoring },
}

/// How the certificate was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// The recursive construction produced the branch.
    Recursive,
    /// The construction produced a valid coloring but a direct search found
    /// `B` anyway; the copy is reported instead.
    DirectSearch,
    /// `a < 2` or `b < 3`, handled without the recursion.
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelCase {
    Glued,
    Disjoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelStats {
    pub depth: usize,
    pub case: LevelCase,
    /// Pieces of the forest still in play at this level.
    pub pieces: usize,
    pub host_vertices: usize,
    /// `|U|` for glued levels; vertices outside the disjoint family otherwise.
    pub u_size: usize,
    pub colors_used: usize,
    /// Largest out-degree of the auxiliary digraph (glued levels).
    pub max_out_degree: usize,
    /// Disjoint-family size (disjoint levels).
    pub family_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyCertificate {
    #[serde(flatten)]
    pub branch: Branch,
    pub route: Route,
    pub forest_size: usize,
    pub pattern_order: usize,
    pub forest_order: usize,
    /// `l * (2(a-1)(b-2) + 1)`.
    pub color_bound: usize,
    pub palette_size: usize,
    pub verified: bool,
    pub levels: Vec<LevelStats>,
}

impl RamseyCertificate {
    pub fn is_embedding(&self) -> bool {
        matches!(self.branch, Branch::Embedding { .. })
    }

    /// Re-runs the branch verifier from scratch.
    pub fn check(&self, g: &Graph, a: &Graph, b: &Graph) -> bool {
        match &self.branch {
            Branch::Embedding { embedding } => embedding.is_valid(b, g),
            Branch::Coloring { coloring } => {
                coloring.len() == g.n()
                    && coloring.palette_size() <= self.color_bound
                    && verify_coloring(g, a, coloring)
            }
        }
    }
}

/// Per-level palette bound `2(a-1)(b-2) + 1`.
pub fn level_bound(a: usize, b: usize) -> usize {
    2 * a.saturating_sub(1) * b.saturating_sub(2) + 1
}

pub fn find_b_or_color(g: &Graph, a: &Graph, b: &Graph) -> Result<RamseyCertificate> {
    find_b_or_color_with(g, a, b, &ColorerConfig::default())
}

pub fn find_b_or_color_with(
    g: &Graph,
    a: &Graph,
    b: &Graph,
    config: &ColorerConfig,
) -> Result<RamseyCertificate> {
    let forest = forest_decomposition_with(b, a, &config.forest).ok_or_else(|| {
        Error::NotDegenerate {
            graph: write_graph6(b),
        }
    })?;
    let ell = forest.size();
    let bound = ell * level_bound(a.n(), b.n());

    let (branch, route, levels) = if a.n() < 2 || b.n() < 3 {
        let (branch, route) = trivial(g, a, b)?;
        (branch, route, Vec::new())
    } else {
        // Disjoint pieces can always move to the front without breaking the
        // attachment condition.
        let mut pieces: Vec<Piece> = forest.pieces.clone();
        pieces.sort_by_key(|p| p.attachment.is_some());
        let mut run = Run {
            g,
            a,
            b,
            pieces,
            config,
            levels: Vec::new(),
        };
        let all = vec![true; g.n()];
        let outcome = run.solve(&all, ell, 0)?;
        let levels = run.levels;
        match outcome {
            Outcome::Copy(map) => {
                let map: Vec<usize> = map
                    .into_iter()
                    .map(|m| m.ok_or_else(|| Error::Internal("partial embedding of B".into())))
                    .collect::<Result<_>>()?;
                let embedding = Embedding::new(b, map);
                (Branch::Embedding { embedding }, Route::Recursive, levels)
            }
            Outcome::Colors(colors) => match Search::new(b, g).first() {
                Some(embedding) => (Branch::Embedding { embedding }, Route::DirectSearch, levels),
                None => {
                    let coloring = VertexColoring::new(colors).compacted();
                    (Branch::Coloring { coloring }, Route::Recursive, levels)
                }
            },
        }
    };

    let palette_size = match &branch {
        Branch::Coloring { coloring } => coloring.palette_size(),
        Branch::Embedding { .. } => 0,
    };
    let mut cert = RamseyCertificate {
        branch,
        route,
        forest_size: ell,
        pattern_order: a.n(),
        forest_order: b.n(),
        color_bound: bound,
        palette_size,
        verified: false,
        levels,
    };
    if !cert.check(g, a, b) {
        return Err(Error::Internal("certificate failed verification".into()));
    }
    cert.verified = true;
    Ok(cert)
}

fn trivial(g: &Graph, a: &Graph, b: &Graph) -> Result<(Branch, Route)> {
    if let Some(embedding) = Search::new(b, g).first() {
        return Ok((Branch::Embedding { embedding }, Route::Trivial));
    }
    let coloring = VertexColoring::uniform(g.n());
    if verify_coloring(g, a, &coloring) {
        Ok((Branch::Coloring { coloring }, Route::Trivial))
    } else {
        Err(Error::UnsupportedPattern(
            "no A-avoiding coloring exists for a pattern on fewer than two vertices".into(),
        ))
    }
}

enum Outcome {
    /// Partial map from `B` vertices to host vertices (the current prefix).
    Copy(Vec<Option<usize>>),
    /// Colors for host vertices in the current mask; `usize::MAX` elsewhere.
    Colors(Vec<usize>),
}

struct Run<'a> {
    g: &'a Graph,
    a: &'a Graph,
    b: &'a Graph,
    pieces: Vec<Piece>,
    config: &'a ColorerConfig,
    levels: Vec<LevelStats>,
}

impl Run<'_> {
    fn solve(&mut self, mask: &[bool], m: usize, depth: usize) -> Result<Outcome> {
        if self.pieces[..m].iter().all(|p| p.attachment.is_none()) {
            self.disjoint(mask, m, depth)
        } else {
            self.glued(mask, m, depth)
        }
    }

    fn disjoint(&mut self, mask: &[bool], m: usize, depth: usize) -> Result<Outcome> {
        let g = self.g;
        let family = disjoint_family_in(g, self.a, mask);
        let host_vertices = mask.iter().filter(|&&x| x).count();
        let mut stats = LevelStats {
            depth,
            case: LevelCase::Disjoint,
            pieces: m,
            host_vertices,
            u_size: 0,
            colors_used: 0,
            max_out_degree: 0,
            family_size: family.len(),
        };
        if family.len() >= m {
            let mut map = vec![None; self.b.n()];
            for (piece, copy) in self.pieces[..m].iter().zip(&family) {
                for (i, &y) in piece.vertices.iter().enumerate() {
                    map[y] = Some(copy.map[piece.witness[i]]);
                }
            }
            self.levels.push(stats);
            return Ok(Outcome::Copy(map));
        }
        let mut colors = vec![usize::MAX; g.n()];
        for (i, copy) in family.iter().enumerate() {
            let (first, rest) = copy.image_vertices.split_first().expect("nonempty copy");
            colors[*first] = 2 * i;
            for &u in rest {
                colors[u] = 2 * i + 1;
            }
        }
        let leftover = 2 * family.len();
        for v in 0..g.n() {
            if mask[v] && colors[v] == usize::MAX {
                colors[v] = leftover;
                stats.u_size += 1;
            }
        }
        stats.colors_used = used_colors(&colors);
        self.levels.push(stats);
        Ok(Outcome::Colors(colors))
    }

    fn glued(&mut self, mask: &[bool], m: usize, depth: usize) -> Result<Outcome> {
        let (g, a) = (self.g, self.a);
        let b_order = self.b.n();
        let piece = self.pieces[m - 1].clone();
        let x = piece
            .attachment
            .ok_or_else(|| Error::Internal("glued piece without attachment".into()))?;
        let psi = lex_smallest_embedding(&piece.to_graph(), a)?;
        let xi = piece.index_of(x).expect("attachment in piece");
        let role = psi[xi];

        // U: vertices that do not carry b-1 petal-disjoint copies in role k.
        let mut in_u = vec![false; g.n()];
        let mut stars: HashMap<usize, StarFamily> = HashMap::new();
        for v in (0..g.n()).filter(|&v| mask[v]) {
            match star_family_at_least_in(g, a, role, v, b_order - 1, Some(mask), self.config)? {
                Some(fam) => {
                    stars.insert(v, fam);
                }
                None => in_u[v] = true,
            }
        }
        let u_list: Vec<usize> = (0..g.n()).filter(|&v| in_u[v]).collect();

        // Auxiliary digraph on U, colored through its underlying graph.
        let out_cap = (a.n() - 1) * (b_order - 2);
        let mut gamma = Graph::empty(u_list.len());
        let mut max_out = 0;
        for (i, &v) in u_list.iter().enumerate() {
            let fam = greedy_star_family(g, a, role, v, &in_u, self.config)?;
            if fam.len() > b_order - 2 {
                return Err(Error::Internal(format!(
                    "star family of size {} inside U at {v}",
                    fam.len()
                )));
            }
            let mut outs: Vec<usize> = fam
                .members
                .iter()
                .flat_map(|e| e.image_vertices.iter().copied())
                .filter(|&u| u != v)
                .collect();
            outs.sort_unstable();
            outs.dedup();
            if outs.len() > out_cap {
                return Err(Error::Internal(format!(
                    "out-degree {} exceeds {out_cap}",
                    outs.len()
                )));
            }
            max_out = max_out.max(outs.len());
            for u in outs {
                let j = u_list.binary_search(&u).expect("petal inside U");
                gamma.add_edge(i, j)?;
            }
        }
        let gamma_colors = degeneracy_coloring(&gamma);
        let u_palette = gamma_colors.palette_size();
        if u_palette > level_bound(a.n(), b_order) {
            return Err(Error::Internal(format!("U needed {u_palette} colors")));
        }
        self.levels.push(LevelStats {
            depth,
            case: LevelCase::Glued,
            pieces: m,
            host_vertices: mask.iter().filter(|&&x| x).count(),
            u_size: u_list.len(),
            colors_used: u_palette,
            max_out_degree: max_out,
            family_size: 0,
        });

        let rest: Vec<bool> = (0..g.n()).map(|v| mask[v] && !in_u[v]).collect();
        match self.solve(&rest, m - 1, depth + 1)? {
            Outcome::Colors(mut colors) => {
                let offset = colors
                    .iter()
                    .filter(|&&c| c != usize::MAX)
                    .max()
                    .map_or(0, |c| c + 1);
                for (i, &v) in u_list.iter().enumerate() {
                    colors[v] = offset + gamma_colors.color(i);
                }
                Ok(Outcome::Colors(colors))
            }
            Outcome::Copy(mut map) => {
                let v = map[x].ok_or_else(|| Error::Internal("attachment unmapped".into()))?;
                let fam = stars
                    .get(&v)
                    .ok_or_else(|| Error::Internal(format!("{v} lies in U")))?;
                let mut taken = vec![false; g.n()];
                for &u in map.iter().flatten() {
                    taken[u] = true;
                }
                let spare = fam
                    .members
                    .iter()
                    .find(|e| e.image_vertices.iter().all(|&u| u == v || !taken[u]))
                    .ok_or_else(|| Error::Internal("no free star copy".into()))?;
                for (i, &y) in piece.vertices.iter().enumerate() {
                    map[y] = Some(spare.map[psi[i]]);
                }
                Ok(Outcome::Copy(map))
            }
        }
    }
}

fn used_colors(colors: &[usize]) -> usize {
    let mut c: Vec<usize> = colors.iter().copied().filter(|&c| c != usize::MAX).collect();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn lex_smallest_embedding(piece: &Graph, a: &Graph) -> Result<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    let _ = Search::new(piece, a).for_each(|m| {
        if best.as_deref().is_none_or(|b| m < b) {
            best = Some(m.to_vec());
        }
        ControlFlow::Continue(())
    });
    best.ok_or_else(|| Error::Internal("piece does not embed into A".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_queries() {
        let bow = Graph::bowtie();
        let k3 = Graph::complete(3);
        for role in 0..3 {
            let fam = star_family_at_least(&bow, &k3, role, 2, 2).unwrap().unwrap();
            assert_eq!(fam.len(), 2);
            assert!(fam.is_valid(&bow, &k3));
            assert!(star_family_at_least(&bow, &k3, role, 0, 2).unwrap().is_none());
            assert!(star_family_at_least(&Graph::cycle(4), &k3, role, 1, 1)
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn star_query_reports_truncation() {
        let cfg = ColorerConfig {
            copy_limit: 2,
            ..ColorerConfig::default()
        };
        let r = star_family_at_least_in(&Graph::complete(6), &Graph::complete(3), 0, 0, 3, None, &cfg);
        assert!(matches!(r, Err(Error::EnumerationTruncated { .. })));
    }

    #[test]
    fn disjoint_families() {
        let k3 = Graph::complete(3);
        assert_eq!(greedy_disjoint_family(&Graph::complete(6), &k3).len(), 2);
        assert!(greedy_disjoint_family(&Graph::cycle(4), &k3).is_empty());
        let two = k3.disjoint_union(&k3);
        assert_eq!(greedy_disjoint_family(&two, &k3).len(), 2);
    }

    #[test]
    fn degeneracy_colorings() {
        let c = degeneracy_coloring(&Graph::empty(4));
        assert_eq!(c.palette_size(), 1);
        let c5 = Graph::cycle(5);
        let c = degeneracy_coloring(&c5);
        assert!(c.is_proper(&c5));
        assert!(c.palette_size() <= 3);
        assert_eq!(degeneracy(&Graph::complete(5)), 4);
        assert_eq!(degeneracy(&Graph::path(7)), 1);
    }

    #[test]
    fn coloring_verifier() {
        let k3 = Graph::complete(3);
        let mono = VertexColoring::uniform(3);
        assert!(!verify_coloring(&k3, &k3, &mono));
        assert_eq!(monochromatic_copy(&k3, &k3, &mono).unwrap().vertices, vec![0, 1, 2]);
        assert!(verify_coloring(&k3, &k3, &VertexColoring::new(vec![0, 1, 2])));
        let c6 = Graph::cycle(6);
        let k2 = Graph::complete(2);
        assert!(verify_coloring(&c6, &k2, &VertexColoring::new(vec![0, 1, 0, 1, 0, 1])));
        assert!(!verify_coloring(&c6, &k2, &VertexColoring::uniform(6)));
    }

    #[test]
    fn bowtie_in_itself() {
        let bow = Graph::bowtie();
        let cert = find_b_or_color(&bow, &Graph::complete(3), &bow).unwrap();
        assert!(cert.is_embedding());
        assert!(cert.verified);
    }

    #[test]
    fn k4_has_no_bowtie() {
        let cert = find_b_or_color(&Graph::complete(4), &Graph::complete(3), &Graph::bowtie()).unwrap();
        assert_eq!(cert.color_bound, 26);
        match &cert.branch {
            Branch::Coloring { coloring } => {
                assert!(coloring.palette_size() <= 26);
                assert!(verify_coloring(&Graph::complete(4), &Graph::complete(3), coloring));
            }
            other => panic!("expected coloring, got {other:?}"),
        }
    }

    #[test]
    fn k7_contains_p3_recursively() {
        let cert = find_b_or_color(&Graph::complete(7), &Graph::complete(2), &Graph::path(3)).unwrap();
        assert_eq!(cert.color_bound, 6);
        assert!(cert.is_embedding());
        assert_eq!(cert.route, Route::Recursive);
    }

    #[test]
    fn not_degenerate_is_rejected() {
        let r = find_b_or_color(&Graph::complete(5), &Graph::complete(3), &Graph::complete(4));
        assert!(matches!(r, Err(Error::NotDegenerate { .. })));
    }
}
