//! A-degeneracy, minimum A-forest decompositions, and the non-embeddable core.
//!
//! `B` is A-degenerate when every block of `B` is a subgraph of `A`. An
//! A-forest decomposition orders pieces `B_1..B_l`, each a subgraph of `A`,
//! so that every later piece meets the union of the earlier ones in at most
//! one vertex.
//!
//! No cycle can cross a <=1-vertex attachment, so every block lies inside a
//! single piece. The exact search therefore groups whole blocks (and isolated
//! vertices) rather than individual edges.

use std::collections::HashMap;

use serde::Serialize;

use crate::blocks::{block_decomposition, Block};
use crate::embed::{contains_copy, Search};
use crate::error::{Error, Result};
use crate::format::write_graph6;
use crate::graph::{Edge, Graph};

/// Default node budget for the exact minimum-size search.
pub const DEFAULT_FOREST_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegeneracyCheck {
    pub degenerate: bool,
    /// A block of `B` that is not a subgraph of `A`, when one exists.
    pub offending_block: Option<Block>,
}

/// Every block (and every isolated vertex) of `b` must embed into `a`.
pub fn is_a_degenerate(b: &Graph, a: &Graph) -> DegeneracyCheck {
    let offending = items_of(b)
        .into_iter()
        .find(|item| !contains_copy(&item.to_graph(), a));
    DegeneracyCheck {
        degenerate: offending.is_none(),
        offending_block: offending,
    }
}

fn items_of(b: &Graph) -> Vec<Block> {
    let d = block_decomposition(b);
    let mut items = d.blocks;
    items.extend(d.isolated.into_iter().map(|v| Block {
        vertices: vec![v],
        edges: Vec::new(),
    }));
    items
}

/// One piece `B_i` of an A-forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Piece {
    /// Sorted.
    pub vertices: Vec<usize>,
    /// Sorted.
    pub edges: Vec<Edge>,
    /// The single vertex shared with earlier pieces, if any.
    pub attachment: Option<usize>,
    /// `witness[i]` is the vertex of `A` playing `vertices[i]`.
    pub witness: Vec<usize>,
}

impl Piece {
    /// The piece on `0..vertices.len()`, labeled in the order of `vertices`.
    pub fn to_graph(&self) -> Graph {
        let pos = |x: usize| self.vertices.binary_search(&x).expect("endpoint in piece");
        Graph::from_edges(
            self.vertices.len(),
            self.edges.iter().map(|&(u, v)| (pos(u), pos(v))),
        )
        .expect("piece edges are simple")
    }

    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestDecomposition {
    pub pieces: Vec<Piece>,
    /// False when the exact search ran out of budget and a block-per-piece
    /// decomposition was returned instead.
    pub proven_minimal: bool,
    pub search_nodes: u64,
}

impl ForestDecomposition {
    pub fn size(&self) -> usize {
        self.pieces.len()
    }

    /// Re-checks every structural property against `b` and `a`.
    pub fn verify(&self, b: &Graph, a: &Graph) -> std::result::Result<(), String> {
        let mut edge_owner: HashMap<Edge, usize> = HashMap::new();
        let mut covered = vec![false; b.n()];
        for (i, piece) in self.pieces.iter().enumerate() {
            for &(u, v) in &piece.edges {
                if !b.has_edge(u, v) {
                    return Err(format!("piece {i}: ({u}, {v}) is not an edge of B"));
                }
                if piece.index_of(u).is_none() || piece.index_of(v).is_none() {
                    return Err(format!("piece {i}: edge endpoint missing from vertex set"));
                }
                if let Some(j) = edge_owner.insert((u, v), i) {
                    return Err(format!("edge ({u}, {v}) in pieces {j} and {i}"));
                }
            }
            let shared: Vec<usize> = piece
                .vertices
                .iter()
                .copied()
                .filter(|&v| covered[v])
                .collect();
            if shared.len() > 1 {
                return Err(format!("piece {i} meets earlier pieces in {shared:?}"));
            }
            if shared.first().copied() != piece.attachment {
                return Err(format!("piece {i}: wrong attachment"));
            }
            for &v in &piece.vertices {
                covered[v] = true;
            }
            let pg = piece.to_graph();
            let emb = crate::embed::Embedding::new(&pg, piece.witness.clone());
            if !emb.is_valid(&pg, a) {
                return Err(format!("piece {i}: witness is not an embedding into A"));
            }
        }
        if edge_owner.len() != b.edge_count() {
            return Err("pieces do not cover every edge".into());
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(format!("vertex {v} is in no piece"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ForestConfig {
    pub budget: u64,
}

impl Default for ForestConfig {
    fn default() -> Self {
        ForestConfig {
            budget: DEFAULT_FOREST_BUDGET,
        }
    }
}

/// Minimum-size A-forest of `b`, or `None` when `b` is not A-degenerate.
pub fn forest_decomposition(b: &Graph, a: &Graph) -> Option<ForestDecomposition> {
    forest_decomposition_with(b, a, &ForestConfig::default())
}

pub fn forest_decomposition_with(
    b: &Graph,
    a: &Graph,
    config: &ForestConfig,
) -> Option<ForestDecomposition> {
    if !is_a_degenerate(b, a).degenerate {
        return None;
    }
    let items = items_of(b);
    if items.is_empty() {
        return Some(ForestDecomposition {
            pieces: Vec::new(),
            proven_minimal: true,
            search_nodes: 0,
        });
    }
    let mut search = GroupSearch::new(b, a, &items, config.budget);
    let exact = if items.len() < 64 {
        search.solve()
    } else {
        None
    };
    let proven_minimal = exact.is_some();
    let groups = exact.unwrap_or_else(|| tree_order(b, &items));
    let mut pieces: Vec<Piece> = Vec::with_capacity(groups.len());
    let mut covered = vec![false; b.n()];
    for group in groups {
        let (vertices, edges) = merge(&items, group);
        let attachment = vertices.iter().copied().find(|&v| covered[v]);
        for &v in &vertices {
            covered[v] = true;
        }
        let mut piece = Piece {
            vertices,
            edges,
            attachment,
            witness: Vec::new(),
        };
        piece.witness = Search::new(&piece.to_graph(), a)
            .first()
            .expect("piece embeds into A")
            .map;
        pieces.push(piece);
    }
    Some(ForestDecomposition {
        pieces,
        proven_minimal,
        search_nodes: search.nodes,
    })
}

fn merge(items: &[Block], group: u64) -> (Vec<usize>, Vec<Edge>) {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, item) in items.iter().enumerate() {
        if group >> i & 1 == 1 {
            vertices.extend_from_slice(&item.vertices);
            edges.extend_from_slice(&item.edges);
        }
    }
    vertices.sort_unstable();
    vertices.dedup();
    edges.sort_unstable();
    (vertices, edges)
}

/// One item per piece, ordered by a breadth-first walk of the block-cut tree.
fn tree_order(b: &Graph, items: &[Block]) -> Vec<u64> {
    assert!(items.len() < 64, "fallback ordering supports < 64 items");
    let mut placed = vec![false; items.len()];
    let mut covered = vec![false; b.n()];
    let mut out = Vec::new();
    while let Some(start) = placed.iter().position(|&p| !p) {
        let mut queue = std::collections::VecDeque::from([start]);
        placed[start] = true;
        while let Some(i) = queue.pop_front() {
            out.push(1u64 << i);
            for &v in &items[i].vertices {
                covered[v] = true;
            }
            for (j, other) in items.iter().enumerate() {
                if !placed[j] && other.vertices.iter().any(|&v| covered[v]) {
                    placed[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    out
}

/// Exact minimum-size grouping of items into an ordered A-forest.
struct GroupSearch<'a> {
    a: &'a Graph,
    b: &'a Graph,
    items: &'a [Block],
    item_bits: Vec<Vec<u64>>,
    full: u64,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    remaining: HashMap<u64, u32>,
    embeds: HashMap<u64, bool>,
}

const INF: u32 = u32::MAX;

impl<'a> GroupSearch<'a> {
    fn new(b: &'a Graph, a: &'a Graph, items: &'a [Block], budget: u64) -> Self {
        let words = b.n().div_ceil(64).max(1);
        let item_bits = items
            .iter()
            .map(|it| {
                let mut bits = vec![0u64; words];
                for &v in &it.vertices {
                    bits[v / 64] |= 1 << (v % 64);
                }
                bits
            })
            .collect();
        let full = if items.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << items.len()) - 1
        };
        GroupSearch {
            a,
            b,
            items,
            item_bits,
            full,
            budget,
            nodes: 0,
            exhausted: false,
            remaining: HashMap::new(),
            embeds: HashMap::new(),
        }
    }

    fn union_bits(&self, mask: u64) -> Vec<u64> {
        let mut acc = vec![0u64; self.item_bits.first().map_or(1, Vec::len)];
        for (i, bits) in self.item_bits.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (x, y) in acc.iter_mut().zip(bits) {
                    *x |= y;
                }
            }
        }
        acc
    }

    fn overlap(x: &[u64], y: &[u64]) -> u32 {
        x.iter().zip(y).map(|(a, b)| (a & b).count_ones()).sum()
    }

    fn group_embeds(&mut self, group: u64) -> bool {
        if let Some(&hit) = self.embeds.get(&group) {
            return hit;
        }
        let bits = self.union_bits(group);
        let nv: u32 = bits.iter().map(|w| w.count_ones()).sum();
        let ne: usize = (0..self.items.len())
            .filter(|&i| group >> i & 1 == 1)
            .map(|i| self.items[i].edges.len())
            .sum();
        let ok = if nv as usize > self.a.n() || ne > self.a.edge_count() {
            false
        } else {
            let (vertices, edges) = merge(self.items, group);
            let (g, _) = self
                .b
                .edge_subgraph(&edges, &vertices)
                .expect("item edges belong to B");
            contains_copy(&g, self.a)
        };
        self.embeds.insert(group, ok);
        ok
    }

    /// Valid next groups from `mask`: nonempty subsets of the unused items that
    /// meet the placed vertices in at most one vertex and embed into A.
    fn next_groups(&mut self, mask: u64) -> Option<Vec<u64>> {
        let rest = self.full & !mask;
        let placed = self.union_bits(mask);
        let mut out = Vec::new();
        let mut sub = rest;
        while sub != 0 {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return None;
            }
            if Self::overlap(&self.union_bits(sub), &placed) <= 1 && self.group_embeds(sub) {
                out.push(sub);
            }
            sub = (sub - 1) & rest;
        }
        Some(out)
    }

    fn best(&mut self, mask: u64) -> Option<u32> {
        if mask == self.full {
            return Some(0);
        }
        if let Some(&v) = self.remaining.get(&mask) {
            return Some(v);
        }
        let mut best = INF;
        for g in self.next_groups(mask)? {
            let r = self.best(mask | g)?;
            if r != INF {
                best = best.min(r + 1);
            }
        }
        self.remaining.insert(mask, best);
        Some(best)
    }

    /// Lexicographically smallest minimum sequence of groups, or `None` on
    /// budget exhaustion.
    fn solve(&mut self) -> Option<Vec<u64>> {
        let total = self.best(0)?;
        if total == INF {
            return None;
        }
        let mut mask = 0u64;
        let mut out = Vec::new();
        while mask != self.full {
            let need = self.best(mask)?;
            let mut choice: Option<(Vec<usize>, Vec<Edge>, u64)> = None;
            for g in self.next_groups(mask)? {
                let r = self.best(mask | g)?;
                if r == INF || r + 1 != need {
                    continue;
                }
                let (vs, es) = merge(self.items, g);
                let better = match &choice {
                    None => true,
                    Some((cv, ce, _)) => (&vs, &es) < (cv, ce),
                };
                if better {
                    choice = Some((vs, es, g));
                }
            }
            let (_, _, g) = choice?;
            out.push(g);
            mask |= g;
        }
        Some(out)
    }
}

/// A smallest block of `b` (by vertex count, then block order) that is not a
/// subgraph of `a`. Blocks are 2-connected, so every inclusion-minimal cover of
/// its edges by subgraphs of `a` has each piece overlapping the rest in at
/// least two vertices.
pub fn extract_core(b: &Graph, a: &Graph) -> Result<Graph> {
    items_of(b)
        .into_iter()
        .filter(|item| !contains_copy(&item.to_graph(), a))
        .min_by_key(|item| item.vertices.len())
        .map(|item| item.to_graph())
        .ok_or_else(|| Error::IsDegenerate {
            graph: write_graph6(b),
        })
}
