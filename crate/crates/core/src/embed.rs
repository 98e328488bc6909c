//! Subgraph isomorphism (not induced): embeddings and copies of a pattern in a
//! host graph.
//!
//! An *embedding* is an injective map from pattern vertices to host vertices
//! that sends edges to edges. A *copy* is the image subgraph of an embedding;
//! embeddings that differ by a pattern automorphism produce the same copy.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::graph::{edge, Edge, Graph};

/// Default cap on the number of distinct copies collected by one enumeration.
pub const DEFAULT_COPY_LIMIT: usize = 100_000;

/// Image subgraph of a pattern in a host, identified by its vertex and edge sets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Copy {
    /// Sorted.
    pub vertices: Vec<usize>,
    /// Sorted.
    pub edges: Vec<Edge>,
}

impl Copy {
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// `map[i]` is the host vertex playing pattern vertex `i`.
    pub map: Vec<usize>,
    pub image_vertices: Vec<usize>,
    pub image_edges: Vec<Edge>,
}

impl Embedding {
    pub fn new(pattern: &Graph, map: Vec<usize>) -> Self {
        let copy = image_of(pattern, &map);
        Embedding {
            map,
            image_vertices: copy.vertices,
            image_edges: copy.edges,
        }
    }

    pub fn pattern_n(&self) -> usize {
        self.map.len()
    }

    pub fn copy(&self) -> Copy {
        Copy {
            vertices: self.image_vertices.clone(),
            edges: self.image_edges.clone(),
        }
    }

    /// Injective, total, edge-preserving, and with consistent image sets.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        let mut seen = self.map.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.map.len() {
            return false;
        }
        if !pattern
            .edges()
            .all(|(u, v)| host.has_edge(self.map[u], self.map[v]))
        {
            return false;
        }
        let expect = image_of(pattern, &self.map);
        expect.vertices == self.image_vertices && expect.edges == self.image_edges
    }
}

fn image_of(pattern: &Graph, map: &[usize]) -> Copy {
    let mut vertices = map.to_vec();
    vertices.sort_unstable();
    let mut edges: Vec<Edge> = pattern.edges().map(|(u, v)| edge(map[u], map[v])).collect();
    edges.sort_unstable();
    Copy { vertices, edges }
}

#[derive(Clone, Debug, Default)]
pub struct CopyEnumeration {
    /// Sorted by `(vertices, edges)`.
    pub copies: Vec<Copy>,
    /// One witness embedding per copy, aligned with `copies`.
    pub embeddings: Vec<Embedding>,
    /// Set when more copies exist than the limit allowed to collect.
    pub truncated: bool,
}

impl CopyEnumeration {
    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }
}

/// A configured pattern-in-host search.
///
/// Pattern vertices are matched in a connected order that greedily maximises
/// back-edges; candidates for each vertex are drawn from the host neighborhood
/// of an already-matched pattern neighbor and filtered by degree and by
/// adjacency to every matched neighbor.
#[derive(Clone, Copy)]
pub struct Search<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    pin: Option<(usize, usize)>,
    allowed: Option<&'a [bool]>,
}

impl<'a> Search<'a> {
    pub fn new(pattern: &'a Graph, host: &'a Graph) -> Self {
        Search {
            pattern,
            host,
            pin: None,
            allowed: None,
        }
    }

    /// Only embeddings with `map[role] == vertex`.
    pub fn pinned(mut self, role: usize, vertex: usize) -> Self {
        assert!(role < self.pattern.n(), "role out of range");
        assert!(vertex < self.host.n(), "host vertex out of range");
        self.pin = Some((role, vertex));
        self
    }

    /// Only host vertices with `allowed[v]` may be used.
    pub fn within(mut self, allowed: &'a [bool]) -> Self {
        assert_eq!(allowed.len(), self.host.n());
        self.allowed = Some(allowed);
        self
    }

    /// Calls `f` with every embedding map until it breaks.
    pub fn for_each<F>(&self, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let p = self.pattern;
        let h = self.host;
        if p.n() > h.n() {
            return ControlFlow::Continue(());
        }
        if let Some((_, v)) = self.pin {
            if self.allowed.is_some_and(|a| !a[v]) {
                return ControlFlow::Continue(());
            }
        }
        let plan = Plan::new(p, self.pin.map(|(k, _)| k));
        let mut state = State {
            map: vec![usize::MAX; p.n()],
            used: vec![false; h.n()],
        };
        self.extend(&plan, 0, &mut state, &mut f)
    }

    fn extend<F>(&self, plan: &Plan, depth: usize, st: &mut State, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == plan.order.len() {
            return f(&st.map);
        }
        let pv = plan.order[depth];
        let back = &plan.back[depth];
        let need_deg = self.pattern.degree(pv);

        let fixed: Option<usize> = match self.pin {
            Some((k, v)) if k == pv => Some(v),
            _ => None,
        };
        let anchor_nbrs: Option<&[usize]> = back.first().map(|&b| self.host.neighbors(st.map[b]));

        let mut try_candidate = |c: usize, st: &mut State| -> ControlFlow<()> {
            if st.used[c]
                || self.host.degree(c) < need_deg
                || self.allowed.is_some_and(|a| !a[c])
                || !back.iter().all(|&b| self.host.has_edge(st.map[b], c))
            {
                return ControlFlow::Continue(());
            }
            st.used[c] = true;
            st.map[pv] = c;
            let r = self.extend(plan, depth + 1, st, f);
            st.used[c] = false;
            st.map[pv] = usize::MAX;
            r
        };

        match (fixed, anchor_nbrs) {
            (Some(v), _) => try_candidate(v, st),
            (None, Some(nbrs)) => {
                for &c in nbrs {
                    try_candidate(c, st)?;
                }
                ControlFlow::Continue(())
            }
            (None, None) => {
                for c in 0..self.host.n() {
                    try_candidate(c, st)?;
                }
                ControlFlow::Continue(())
            }
        }
    }

    pub fn first(&self) -> Option<Embedding> {
        let mut found = None;
        let _ = self.for_each(|m| {
            found = Some(m.to_vec());
            ControlFlow::Break(())
        });
        found.map(|m| Embedding::new(self.pattern, m))
    }

    pub fn exists(&self) -> bool {
        self.for_each(|_| ControlFlow::Break(())).is_break()
    }

    pub fn count_embeddings(&self) -> u64 {
        let mut count = 0u64;
        let _ = self.for_each(|_| {
            count += 1;
            ControlFlow::Continue(())
        });
        count
    }

    /// Distinct copies, at most `limit` of them (see [`CopyEnumeration::truncated`]).
    pub fn copies(&self, limit: Option<usize>) -> CopyEnumeration {
        let limit = limit.unwrap_or(usize::MAX);
        let mut found: BTreeMap<Copy, Vec<usize>> = BTreeMap::new();
        let mut truncated = false;
        let _ = self.for_each(|m| {
            let copy = image_of(self.pattern, m);
            if !found.contains_key(&copy) {
                if found.len() == limit {
                    truncated = true;
                    return ControlFlow::Break(());
                }
                found.insert(copy, m.to_vec());
            }
            ControlFlow::Continue(())
        });
        let (copies, maps): (Vec<Copy>, Vec<Vec<usize>>) = found.into_iter().unzip();
        let embeddings = maps
            .into_iter()
            .map(|m| Embedding::new(self.pattern, m))
            .collect();
        CopyEnumeration {
            copies,
            embeddings,
            truncated,
        }
    }
}

struct State {
    map: Vec<usize>,
    used: Vec<bool>,
}

/// Matching order plus, for each position, the earlier positions' pattern
/// vertices adjacent to it.
struct Plan {
    order: Vec<usize>,
    back: Vec<Vec<usize>>,
}

impl Plan {
    fn new(p: &Graph, start: Option<usize>) -> Self {
        let n = p.n();
        let mut placed = vec![false; n];
        let mut links = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        for step in 0..n {
            let next = match (step, start) {
                (0, Some(k)) => k,
                _ => (0..n)
                    .filter(|&v| !placed[v])
                    .max_by(|&a, &b| {
                        (links[a], p.degree(a))
                            .cmp(&(links[b], p.degree(b)))
                            .then(b.cmp(&a))
                    })
                    .expect("unplaced vertex"),
            };
            placed[next] = true;
            for &w in p.neighbors(next) {
                links[w] += 1;
            }
            order.push(next);
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                order[..i]
                    .iter()
                    .copied()
                    .filter(|&u| p.has_edge(u, v))
                    .collect()
            })
            .collect();
        Plan { order, back }
    }
}

/// Number of edge-preserving bijections of `g` onto itself.
pub fn automorphism_count(g: &Graph) -> u64 {
    Search::new(g, g).count_embeddings()
}

/// All distinct copies of `pattern` in `host`, optionally restricted to those
/// admitting an embedding with `map[role] == vertex`.
pub fn enumerate_copies(
    pattern: &Graph,
    host: &Graph,
    pin: Option<(usize, usize)>,
    limit: Option<usize>,
) -> CopyEnumeration {
    let mut s = Search::new(pattern, host);
    if let Some((k, v)) = pin {
        s = s.pinned(k, v);
    }
    s.copies(limit)
}

pub fn contains_copy(pattern: &Graph, host: &Graph) -> bool {
    Search::new(pattern, host).exists()
}
