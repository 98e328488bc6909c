//! Articulation points and the block-cut tree.
//!
//! A block is a maximal 2-vertex-connected subgraph; a bridge counts as a
//! block on its own. Blocks partition the edge set and pairwise share at most
//! one vertex, which is then a cut vertex.

use serde::Serialize;

use crate::graph::{edge, Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Sorted.
    pub vertices: Vec<usize>,
    /// Sorted, each with the smaller endpoint first.
    pub edges: Vec<Edge>,
}

impl Block {
    /// The block as a standalone graph on `0..vertices.len()`, labeled in the
    /// order of `self.vertices`.
    pub fn to_graph(&self) -> Graph {
        let pos = |x: usize| self.vertices.binary_search(&x).expect("endpoint in block");
        Graph::from_edges(
            self.vertices.len(),
            self.edges.iter().map(|&(u, v)| (pos(u), pos(v))),
        )
        .expect("block edges are simple")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Ordered by smallest contained edge.
    pub blocks: Vec<Block>,
    /// Sorted.
    pub cut_vertices: Vec<usize>,
    /// Vertices of degree zero: leaves of the block-cut tree with no block.
    pub isolated: Vec<usize>,
    /// Block-cut tree adjacency as `(block index, cut vertex)` pairs.
    pub tree: Vec<(usize, usize)>,
}

/// Vertices whose removal increases the number of connected components.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    block_decomposition(g).cut_vertices
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut clock = 0usize;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut raw_blocks: Vec<Vec<Edge>> = Vec::new();
    let mut isolated = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = clock;
            clock += 1;
            isolated.push(root);
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        let mut root_children = 0;
        frames.push((root, UNSEEN, 0));

        while let Some(frame) = frames.last_mut() {
            let (v, parent, i) = *frame;
            if i < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[i];
                if disc[w] == UNSEEN {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push(edge(e.0, e.1));
                    if e == (parent, v) {
                        break;
                    }
                }
                raw_blocks.push(block);
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let mut blocks: Vec<Block> = raw_blocks
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            Block { vertices, edges }
        })
        .collect();
    blocks.sort_by(|a, b| a.edges[0].cmp(&b.edges[0]));

    let tree = blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| {
            b.vertices
                .iter()
                .filter(|&&v| is_cut[v])
                .map(move |&v| (i, v))
                .collect::<Vec<_>>()
        })
        .collect();

    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        isolated,
        tree,
    }
}
