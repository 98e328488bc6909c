//! Fixtures shared by the benchmarks.

use vramsey::randcon::{sample_copy_hypergraph, union_graph, ConstructionParams};
use vramsey::Graph;

/// Union of a seeded sample of triangle copies on `n` vertices, with the
/// per-copy probability chosen so the graph has roughly `triangles` copies.
pub fn triangle_union(n: usize, triangles: f64, seed: u64) -> Graph {
    let params = ConstructionParams::new(n, 3, 0.3, 6, seed).expect("valid params");
    let total = (n * (n - 1) * (n - 2) / 6) as f64;
    let params = params.with_probability((triangles / total).min(1.0)).expect("probability");
    union_graph(&sample_copy_hypergraph(&params, &Graph::complete(3)).expect("sample"))
}

/// `k` copies of `K_m` chained in a path by single edges.
pub fn clique_chain(k: usize, m: usize) -> Graph {
    let mut g = Graph::empty(0);
    for i in 0..k {
        g = g.disjoint_union(&Graph::complete(m));
        if i > 0 {
            g.add_edge(i * m - 1, i * m).expect("chain edge");
        }
    }
    g
}
