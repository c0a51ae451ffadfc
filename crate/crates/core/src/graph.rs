//! Simple undirected graphs on contiguous vertex ids, with bitset adjacency.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Immutable after construction. Adjacency rows are bitsets, so `adjacent`
/// is O(1) and neighborhood algebra is word-parallel.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse into one edge. Disconnected graphs are allowed.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut adj = vec![VertexSet::empty(n); n];
        let mut edge_count = 0;
        for &(u, v) in pairs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if adj[u].insert(v) {
                adj[v].insert(u);
                edge_count += 1;
            }
        }
        Ok(Graph { adj, edge_count })
    }

    /// Graph whose adjacency rows are given directly. Rows must be symmetric
    /// and loop-free.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Graph {
        let edge_count = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, row)| !row.contains(u) && row.iter().all(|v| adj[v].contains(u))));
        Graph { adj, edge_count }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n())
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, vertices: I) -> Result<VertexSet> {
        let mut set = self.empty_set();
        for v in vertices {
            self.check_vertex(v)?;
            set.insert(v);
        }
        Ok(set)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n() {
            if let Some(v) = s.iter().find(|&v| v >= self.n()) {
                return Err(Error::InvalidVertex { vertex: v, n: self.n() });
            }
            return Err(Error::InvalidParameter(format!(
                "vertex set built for {} vertices used on a graph with {}",
                s.universe(),
                self.n()
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = self.adj[v].clone();
        set.insert(v);
        set
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// True iff every two members of `s` are adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Number of edges on a shortest `u`–`v` path, or `None` if unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    pub fn diameter(&self) -> Result<usize> {
        Ok(self.farthest_pair()?.2)
    }

    /// The lexicographically first pair `(u, v)`, `u < v`, realizing the
    /// diameter, together with that distance. A single vertex yields
    /// `(0, 0, 0)`.
    pub fn farthest_pair(&self) -> Result<(usize, usize, usize)> {
        let mut best = (0, 0, 0);
        for u in self.vertices() {
            let dist = self.distances_from(u);
            for (v, d) in dist.iter().enumerate().skip(u + 1) {
                let d = d.ok_or(Error::Disconnected)?;
                if d > best.2 {
                    best = (u, v, d);
                }
            }
        }
        Ok(best)
    }

    /// Vertices whose closed neighborhood is a clique.
    pub fn simplicial_vertices(&self) -> VertexSet {
        let mut out = self.empty_set();
        for v in self.vertices() {
            if self.is_clique(&self.adj[v]) {
                out.insert(v);
            }
        }
        out
    }

    /// The subgraph induced by `s`, relabeled to `0..|s|` in ascending order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Relabeling)> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let to_host = s.to_vec();
        let mut to_sub = vec![None; self.n()];
        for (i, &v) in to_host.iter().enumerate() {
            to_sub[v] = Some(i);
        }
        let rows = to_host
            .iter()
            .map(|&v| {
                VertexSet::from_vertices(
                    to_host.len(),
                    self.adj[v].iter().filter_map(|w| to_sub[w]),
                )
            })
            .collect();
        Ok((Graph::from_rows(rows), Relabeling { to_host, to_sub }))
    }

    /// Convenience: the graph with one vertex deleted.
    pub fn without_vertex(&self, v: usize) -> Result<(Graph, Relabeling)> {
        self.check_vertex(v)?;
        let mut keep = self.vertex_set();
        keep.remove(v);
        self.induced_subgraph(&keep)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// Vertex correspondence between a host graph and an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    to_host: Vec<usize>,
    to_sub: Vec<Option<usize>>,
}

impl Relabeling {
    pub fn to_host(&self, sub_vertex: usize) -> usize {
        self.to_host[sub_vertex]
    }

    pub fn to_sub(&self, host_vertex: usize) -> Option<usize> {
        self.to_sub.get(host_vertex).copied().flatten()
    }

    pub fn host_vertices(&self) -> &[usize] {
        &self.to_host
    }

    pub fn set_to_host(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.to_sub.len(), s.iter().map(|v| self.to_host[v]))
    }

    /// Maps host vertices into the subgraph, dropping those not present.
    pub fn set_to_sub(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.to_host.len(), s.iter().filter_map(|v| self.to_sub(v)))
    }
}
