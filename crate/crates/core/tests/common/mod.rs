//! Brute-force oracles shared by the integration suites. Everything here
//! works on bitmasks over at most 8 vertices and is written without reusing
//! the library's search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use vramsey::Graph;

pub fn masks(g: &Graph) -> Vec<u16> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect()
}

/// Is the subgraph induced on `alive` connected (an empty set counts as not)?
pub fn connected_within(adj: &[u16], alive: u16) -> bool {
    if alive == 0 {
        return false;
    }
    let start = alive.trailing_zeros();
    let mut seen = 1u16 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & alive & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == alive
}

pub fn component_count(adj: &[u16], alive: u16) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        let start = rest.trailing_zeros();
        let mut seen = 1u16 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & alive & !seen;
            seen |= new;
            frontier |= new;
        }
        rest &= !seen;
        count += 1;
    }
    count
}

/// Vertices whose removal increases the number of components.
pub fn articulation_oracle(g: &Graph) -> Vec<usize> {
    let adj = masks(g);
    let all: u16 = ((1u32 << g.n()) - 1) as u16;
    let base = component_count(&adj, all);
    (0..g.n())
        .filter(|&v| component_count(&adj, all & !(1 << v)) > base)
        .collect()
}

/// Blocks as sorted edge lists: edges are merged when they lie on a common
/// simple cycle, and every remaining edge is a bridge.
pub fn block_oracle(g: &Graph) -> BTreeSet<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let idx = |u: usize, v: usize| {
        let e = (u.min(v), u.max(v));
        edges.iter().position(|&f| f == e).unwrap()
    };
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    // Cycles rooted at their smallest vertex.
    fn extend(g: &Graph, path: &mut Vec<usize>, on: &mut Vec<bool>, cycles: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                cycles.push(path.clone());
            }
            if w > start && !on[w] {
                on[w] = true;
                path.push(w);
                extend(g, path, on, cycles);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut cycles = Vec::new();
    for s in 0..g.n() {
        let mut on = vec![false; g.n()];
        on[s] = true;
        extend(g, &mut vec![s], &mut on, &mut cycles);
    }
    for c in &cycles {
        let first = idx(c[0], c[1]);
        for i in 0..c.len() {
            let e = idx(c[i], c[(i + 1) % c.len()]);
            let (x, y) = (find(&mut parent, first), find(&mut parent, e));
            parent[x] = y;
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<(usize, usize)>> = Default::default();
    for (i, &e) in edges.iter().enumerate() {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(e);
    }
    classes.into_values().collect()
}

/// Does the graph given by `adj` restricted to `verts` (with edge list
/// `edges`) embed into `a`? Brute force over injections.
pub fn embeds_small(edges: &[(usize, usize)], verts: &[usize], a: &Graph) -> bool {
    if verts.len() > a.n() {
        return false;
    }
    let mut map = vec![usize::MAX; 16];
    let mut used = vec![false; a.n()];
    fn go(i: usize, verts: &[usize], edges: &[(usize, usize)], a: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if i == verts.len() {
            return edges.iter().all(|&(u, v)| a.has_edge(map[u], map[v]));
        }
        for t in 0..a.n() {
            if !used[t] {
                used[t] = true;
                map[verts[i]] = t;
                if go(i + 1, verts, edges, a, map, used) {
                    return true;
                }
                used[t] = false;
            }
        }
        false
    }
    go(0, verts, edges, a, &mut map, &mut used)
}

fn bits(m: u16) -> Vec<usize> {
    (0..16).filter(|i| m >> i & 1 == 1).collect()
}

/// Every 2-connected subgraph (any edge subset spanning at least 3 vertices
/// that stays connected after deleting any one vertex) and every single edge
/// and isolated vertex must embed into `a`.
pub fn degenerate_oracle(g: &Graph, a: &Graph) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    assert!(m <= 24);
    if g.isolated_vertices().iter().any(|_| a.n() == 0) {
        return false;
    }
    if m > 0 && a.edge_count() == 0 {
        return false;
    }
    for sub in 1u32..(1 << m) {
        if sub.count_ones() < 3 {
            continue;
        }
        let mut adj = vec![0u16; g.n()];
        let mut vm = 0u16;
        let mut es = Vec::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if sub >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
                vm |= 1 << u | 1 << v;
                es.push((u, v));
            }
        }
        if !connected_within(&adj, vm) {
            continue;
        }
        if bits(vm).iter().any(|&v| !connected_within(&adj, vm & !(1 << v))) {
            continue;
        }
        if !embeds_small(&es, &bits(vm), a) {
            return false;
        }
    }
    true
}

/// Minimum number of pieces in a sequence `B_1, ..., B_l` covering `g`, each
/// embeddable into `a` and meeting the union of the earlier ones in at most
/// one vertex. Pieces are arbitrary sets of edges and isolated vertices.
pub fn min_forest_oracle(g: &Graph, a: &Graph) -> Option<usize> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let iso = g.isolated_vertices();
    let ground = edges.len() + iso.len();
    assert!(ground <= 16);
    let full: u32 = (1 << ground) - 1;
    let size = 1usize << ground;
    let mut vmask = vec![0u16; size];
    let mut ok = vec![false; size];
    for s in 1..size {
        let mut es = Vec::new();
        for i in 0..ground {
            if s >> i & 1 == 1 {
                if i < edges.len() {
                    let (u, v) = edges[i];
                    vmask[s] |= 1 << u | 1 << v;
                    es.push((u, v));
                } else {
                    vmask[s] |= 1 << iso[i - edges.len()];
                }
            }
        }
        ok[s] = embeds_small(&es, &bits(vmask[s]), a);
    }
    const INF: usize = usize::MAX;
    let mut best = vec![INF; size];
    best[full as usize] = 0;
    for placed in (0..full).rev() {
        let rest = full & !placed;
        let pv = vmask[placed as usize];
        let mut sub = rest;
        while sub != 0 {
            let s = sub as usize;
            if ok[s] && (vmask[s] & pv).count_ones() <= 1 && best[(placed | sub) as usize] != INF {
                best[placed as usize] = best[placed as usize].min(best[(placed | sub) as usize] + 1);
            }
            sub = (sub - 1) & rest;
        }
    }
    (best[0] != INF).then_some(best[0])
}
