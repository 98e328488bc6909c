//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph. Vertex ids are `0..n`.
///
/// Neighbor lists are kept sorted, so two graphs with the same vertex count and
/// the same edge set compare equal regardless of insertion order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `{u, v}`. Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::MalformedInput(format!("loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(true)
            }
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges in lexicographic order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The subgraph induced by `vertices`, relabeled to `0..k` in increasing
    /// order of original id. The second value maps new ids to old ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidVertex { vertex: bad, n });
        }
        let mut index = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut sub = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            let row: Vec<usize> = self.adj[v]
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect();
            sub.m += row.iter().filter(|&&j| j > i).count();
            sub.adj[i] = row;
        }
        Ok((sub, keep))
    }

    /// The subgraph spanned by a set of edges of `self`, relabeled like
    /// [`Graph::induced_subgraph`] over the edge endpoints plus `extra`.
    pub fn edge_subgraph(&self, edges: &[Edge], extra: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut verts: BTreeSet<usize> = extra.iter().copied().collect();
        for &(u, v) in edges {
            verts.insert(u);
            verts.insert(v);
        }
        let keep: Vec<usize> = verts.into_iter().collect();
        let pos = |x: usize| keep.binary_search(&x).unwrap();
        let mut sub = Graph::empty(keep.len());
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::MalformedInput(format!("({u}, {v}) is not an edge")));
            }
            sub.add_edge(pos(u), pos(v))?;
        }
        Ok((sub, keep))
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = self.clone();
        g.adj
            .extend(other.adj.iter().map(|ns| ns.iter().map(|&w| w + off).collect()));
        g.m += other.m;
        g
    }

    /// Returns a copy with `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    // Named families.

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| v != u).collect();
        }
        g.m = n * n.saturating_sub(1) / 2;
        g
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    /// Two triangles sharing vertex 2: `{0,1,2}` and `{2,3,4}`.
    pub fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).expect("valid")
    }

    /// `K4` minus the edge `{0, 3}`.
    pub fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("valid")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// A total vertex coloring with non-negative integer colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColoring {
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(colors: Vec<usize>) -> Self {
        VertexColoring { colors }
    }

    pub fn uniform(n: usize) -> Self {
        VertexColoring { colors: vec![0; n] }
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors in use.
    pub fn palette_size(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Renumbers colors to `0..palette_size`, preserving their relative order.
    pub fn compacted(&self) -> VertexColoring {
        let used: Vec<usize> = self
            .colors
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        VertexColoring {
            colors: self
                .colors
                .iter()
                .map(|c| used.binary_search(c).unwrap())
                .collect(),
        }
    }

    /// Vertices holding color `c`, as a membership mask.
    pub fn class_mask(&self, c: usize) -> Vec<bool> {
        self.colors.iter().map(|&x| x == c).collect()
    }

    /// True when no edge of `g` is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_ignores_insertion_order() {
        let a = Graph::from_edges(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        let b = Graph::from_edges(4, [(3, 2), (2, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 3);
    }

    #[test]
    fn loops_and_out_of_range_rejected() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::MalformedInput(_))
        ));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::InvalidVertex { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn induced_subgraphs_of_small_families() {
        let (k3, map) = Graph::complete(4).induced_subgraph(&[3, 0, 2]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(map, vec![0, 2, 3]);

        let c5 = Graph::cycle(5);
        assert_eq!(c5.induced_subgraph(&[1, 2]).unwrap().0, Graph::complete(2));
        assert_eq!(c5.induced_subgraph(&[1, 3]).unwrap().0, Graph::empty(2));
        assert_eq!(
            c5.induced_subgraph(&[1, 7]),
            Err(Error::InvalidVertex { vertex: 7, n: 5 })
        );
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let g = Graph::bowtie();
        let all: Vec<usize> = (0..g.n()).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap().0, g);
    }

    #[test]
    fn coloring_palette() {
        let c = VertexColoring::new(vec![4, 1, 4, 9]);
        assert_eq!(c.palette_size(), 3);
        assert_eq!(c.compacted().colors(), &[1, 0, 1, 2]);
    }

    #[test]
    fn disjoint_union_shifts_ids() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(g.n(), 6);
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(g.has_edge(4, 5));
    }
}
