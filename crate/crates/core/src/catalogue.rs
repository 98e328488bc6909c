//! Exhaustive catalogue of small graphs, one per isomorphism class.
//!
//! Built by vertex augmentation: every graph on `k + 1` vertices is some graph
//! on `k` vertices plus a new vertex joined to a subset of the old ones.
//! Candidates are deduplicated by a canonical adjacency code. Intended for
//! oracle tests with `n <= 9`.

use std::collections::HashSet;

use crate::graph::Graph;

/// Largest order the canonical code supports (`n(n-1)/2 <= 64`).
pub const MAX_ORDER: usize = 11;

/// Canonical code: the lexicographically largest column-major upper-triangle
/// bit string over all relabelings that respect a degree-based refinement.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_ORDER, "canonical_code supports n <= {MAX_ORDER}");
    if n <= 1 {
        return 0;
    }
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        nd.sort_unstable_by(|a, b| b.cmp(a));
        (std::cmp::Reverse(g.degree(v)), nd.into_iter().map(std::cmp::Reverse).collect::<Vec<_>>())
    };
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| key(v));
    // class id per position
    let mut class_of_pos = vec![0usize; n];
    let mut class_of_vertex = vec![0usize; n];
    for i in 1..n {
        class_of_pos[i] = class_of_pos[i - 1] + usize::from(key(verts[i]) != key(verts[i - 1]));
    }
    for i in 0..n {
        class_of_vertex[verts[i]] = class_of_pos[i];
    }

    let total = n * (n - 1) / 2;
    let mut best: Option<u64> = None;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(g, &class_of_pos, &class_of_vertex, total, &mut perm, &mut used, 0, 0, &mut best);
    best.unwrap_or(0)
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    class_of_pos: &[usize],
    class_of_vertex: &[usize],
    total: usize,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    code: u64,
    bits: usize,
    best: &mut Option<u64>,
) {
    let n = g.n();
    if let Some(b) = *best {
        let prefix = if bits == 0 { 0 } else { b >> (total - bits) };
        if code < prefix {
            return;
        }
    }
    let j = perm.len();
    if j == n {
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    }
    for v in 0..n {
        if used[v] || class_of_vertex[v] != class_of_pos[j] {
            continue;
        }
        let mut c = code;
        for &u in perm.iter() {
            c = (c << 1) | u64::from(g.has_edge(u, v));
        }
        used[v] = true;
        perm.push(v);
        search(g, class_of_pos, class_of_vertex, total, perm, used, c, bits + j, best);
        perm.pop();
        used[v] = false;
    }
}

/// The graph whose column-major upper-triangle bit string is `code`.
pub fn from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                g.add_edge(i, j).expect("valid code");
            }
            k += 1;
        }
    }
    g
}

/// `levels[k]` holds one graph per isomorphism class on `k` vertices, for
/// `k = 0..=max_n`.
pub fn graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= MAX_ORDER);
    let mut levels = vec![vec![Graph::empty(0)]];
    for k in 0..max_n {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next = Vec::new();
        for g in &levels[k] {
            for subset in 0u32..(1 << k) {
                let mut h = g.disjoint_union(&Graph::empty(1));
                for u in 0..k {
                    if subset >> u & 1 == 1 {
                        h.add_edge(u, k).expect("new vertex edge");
                    }
                }
                let code = canonical_code(&h);
                if seen.insert(code) {
                    next.push(from_code(k + 1, code));
                }
            }
        }
        next.sort_by_key(|g| (g.edge_count(), canonical_code(g)));
        levels.push(next);
    }
    levels
}

/// Every isomorphism class of graphs on exactly `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    graphs_up_to(n).pop().unwrap_or_default()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        // OEIS A000088 and A001349.
        let levels = graphs_up_to(6);
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = levels
            .iter()
            .skip(1)
            .map(|l| l.iter().filter(|g| g.is_connected()).count())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn code_is_relabeling_invariant() {
        let g = Graph::bowtie();
        let h = Graph::from_edges(5, [(4, 3), (4, 0), (3, 0), (0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert_ne!(canonical_code(&g), canonical_code(&Graph::cycle(5)));
        let c = canonical_code(&g);
        assert_eq!(canonical_code(&from_code(5, c)), c);
    }
}
