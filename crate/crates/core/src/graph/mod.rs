//! Simple undirected graphs on dense vertex ids `0..n`, plus recognition
//! and width routines used by the solvers.

mod bipartite;
mod cliques;
mod cograph;
mod cover;
mod format;
mod interval;
mod pathwidth;
mod split;

pub use bipartite::Bipartition;
pub use cliques::{maximal_cliques, maximum_clique, omega};
pub use cograph::{recognize_cograph, CoTree};
pub use cover::{vertex_cover, CoverMode, EXACT_COVER_LIMIT};
pub use interval::{is_chordal, recognize_interval};
pub use pathwidth::{pathwidth_exact, vertex_separation_of, PathDecomposition, PATHWIDTH_LIMIT};
pub use split::{recognize_split, SplitPartition};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds edge `uv`, rejecting loops, duplicates and out-of-range ids.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::BadParameters(format!("loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::BadParameters(format!("duplicate edge {u}-{v}"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(())
            }
        }
    }

    /// Adds a fresh vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_iter(self.n(), self.adj[v].iter().copied())
    }

    /// Adjacency as one bit mask per vertex; `None` above 64 vertices.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|nb| nb.iter().fold(0u64, |acc, &v| acc | 1 << v))
                .collect(),
        )
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&self.vertices())
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::new(self.n());
        let mut out = Vec::new();
        for s in within {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if within.contains(w) && seen.insert(w) {
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.n() == 0 || !self.is_connected() {
            Err(Error::NotConnected)
        } else {
            Ok(())
        }
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// Subgraph induced by `vertices`, relabelled in ascending id order.
    /// Returns the subgraph and the map from new ids to old ids.
    pub fn induced_subgraph(&self, vertices: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = vertices.iter().collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut h = Graph::new(old.len());
        for (i, &v) in old.iter().enumerate() {
            h.adj[i] = self.adj[v]
                .iter()
                .filter(|&&w| new_id[w] != usize::MAX)
                .map(|&w| new_id[w])
                .collect();
        }
        h.m = h.adj.iter().map(Vec::len).sum::<usize>() / 2;
        (h, old)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut h = Graph::new(n);
        for u in 0..n {
            h.adj[u] = (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect();
        }
        h.m = n * n.saturating_sub(1) / 2 - self.m;
        h
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut h = self.clone();
        h.adj
            .extend(other.adj.iter().map(|nb| nb.iter().map(|&v| v + off).collect()));
        h.m += other.m;
        h
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut h = self.disjoint_union(other);
        for u in 0..off {
            for v in off..h.n() {
                h.adj[u].push(v);
                h.adj[v].push(u);
            }
        }
        for nb in &mut h.adj {
            nb.sort_unstable();
        }
        h.m += off * other.n();
        h
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let vs: Vec<usize> = set.to_vec();
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|u| self.adj[u].iter().all(|&v| !set.contains(v)))
    }

    /// True iff the neighborhood of `v` is a clique.
    pub fn is_simplicial(&self, v: usize) -> bool {
        let nb = &self.adj[v];
        nb.iter()
            .enumerate()
            .all(|(i, &a)| nb[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Breadth-first distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = std::collections::VecDeque::from([s]);
        dist[s] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Named graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = path(n);
        g.add_edge(0, n - 1).unwrap();
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    /// `rows × cols` grid, vertex `(r, c)` has id `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Graph {
        let mut g = Graph::new(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    g.add_edge(v, v + 1).unwrap();
                }
                if r + 1 < rows {
                    g.add_edge(v, v + cols).unwrap();
                }
            }
        }
        g
    }

    pub fn hypercube(d: usize) -> Graph {
        let n = 1usize << d;
        let mut g = Graph::new(n);
        for u in 0..n {
            for b in 0..d {
                let v = u ^ (1 << b);
                if u < v {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }
}
