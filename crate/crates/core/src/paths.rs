//! Induced paths: validation and enumeration.
//!
//! Enumeration is a depth-first search that only ever appends a neighbor of
//! the current endpoint that is non-adjacent to every earlier path vertex, so
//! each emitted sequence is induced by construction. Neighbors are tried in
//! ascending id order, which makes the output lexicographic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A vertex sequence `v_0, …, v_p` whose consecutive members are adjacent and
/// whose other pairs are not.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InducedPath {
    vertices: Vec<usize>,
}

impl InducedPath {
    /// Wraps `vertices` after checking it is an induced path of `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<InducedPath> {
        for &v in &vertices {
            g.check_vertex(v)?;
        }
        if !is_induced_path(g, &vertices) {
            return Err(Error::InvalidParameter(format!(
                "{vertices:?} is not an induced path"
            )));
        }
        Ok(InducedPath { vertices })
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> InducedPath {
        InducedPath { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Length in edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_set(&self, universe: usize) -> VertexSet {
        VertexSet::from_vertices(universe, self.vertices.iter().copied())
    }

    pub fn reversed(&self) -> InducedPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        InducedPath { vertices }
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < g.n()) && is_induced_path(g, &self.vertices)
    }
}

/// Checks the induced-path conditions directly, pair by pair.
pub fn is_induced_path(g: &Graph, vertices: &[usize]) -> bool {
    if vertices.is_empty() {
        return false;
    }
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

struct Frame {
    candidates: Vec<usize>,
    cursor: usize,
}

/// Streaming enumeration of the induced `source`–`target` paths with at most
/// `max_len` edges, in lexicographic order.
pub struct InducedPaths<'g> {
    g: &'g Graph,
    target: usize,
    max_len: usize,
    dist_to_target: Vec<Option<usize>>,
    path: Vec<usize>,
    // forbidden[i]: union of N[p_0..p_{i-1}], i.e. vertices that may not
    // follow p_i on the path.
    forbidden: Vec<VertexSet>,
    frames: Vec<Frame>,
}

impl<'g> InducedPaths<'g> {
    fn candidates(&self, last: usize, forbidden: &VertexSet) -> Vec<usize> {
        if self.g.adjacent(last, self.target) {
            // Anything but the target would leave `target` adjacent to an
            // interior vertex.
            return if forbidden.contains(self.target) {
                Vec::new()
            } else {
                vec![self.target]
            };
        }
        self.g.neighbors(last).difference(forbidden).to_vec()
    }
}

impl Iterator for InducedPaths<'_> {
    type Item = InducedPath;

    fn next(&mut self) -> Option<InducedPath> {
        loop {
            let frame = self.frames.last_mut()?;
            if frame.cursor == frame.candidates.len() {
                self.frames.pop();
                self.path.pop();
                self.forbidden.pop();
                continue;
            }
            let w = frame.candidates[frame.cursor];
            frame.cursor += 1;

            let edges = self.path.len();
            if w == self.target {
                let mut vertices = self.path.clone();
                vertices.push(w);
                return Some(InducedPath::new_unchecked(vertices));
            }
            let remaining = match self.dist_to_target[w] {
                Some(d) => d,
                None => continue,
            };
            if edges + remaining > self.max_len {
                continue;
            }
            let last = *self.path.last().unwrap();
            let mut forbidden = self.forbidden.last().unwrap().clone();
            forbidden.union_with(self.g.neighbors(last));
            forbidden.insert(last);
            let candidates = self.candidates(w, &forbidden);
            self.path.push(w);
            self.forbidden.push(forbidden);
            self.frames.push(Frame { candidates, cursor: 0 });
        }
    }
}

/// Every induced path from `u` to `v` with at most `max_len` edges, each
/// exactly once, in lexicographic order of vertex sequences.
pub fn induced_paths_between(
    g: &Graph,
    u: usize,
    v: usize,
    max_len: usize,
) -> Result<InducedPaths<'_>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    if max_len == 0 {
        return Err(Error::InvalidParameter("max_len must be at least 1".into()));
    }
    let mut it = InducedPaths {
        g,
        target: v,
        max_len,
        dist_to_target: g.distances_from(v),
        path: vec![u],
        forbidden: vec![g.empty_set()],
        frames: Vec::new(),
    };
    let candidates = it.candidates(u, &g.empty_set());
    it.frames.push(Frame { candidates, cursor: 0 });
    Ok(it)
}

/// Depth-first walk over all induced paths that start at `start`, in
/// lexicographic order. `visit` sees each path (including the single vertex)
/// and returns whether to keep extending it; returning `Break` stops the walk.
pub(crate) fn walk_induced_paths_from<B>(
    g: &Graph,
    start: usize,
    visit: &mut dyn FnMut(&[usize]) -> std::ops::ControlFlow<B, bool>,
) -> Option<B> {
    use std::ops::ControlFlow;

    fn rec<B>(
        g: &Graph,
        path: &mut Vec<usize>,
        forbidden: &VertexSet,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<B, bool>,
    ) -> Option<B> {
        match visit(path) {
            ControlFlow::Break(b) => return Some(b),
            ControlFlow::Continue(false) => return None,
            ControlFlow::Continue(true) => {}
        }
        let last = *path.last().unwrap();
        let mut next_forbidden = forbidden.clone();
        if path.len() >= 2 {
            let prev = path[path.len() - 2];
            next_forbidden.union_with(g.neighbors(prev));
            next_forbidden.insert(prev);
        }
        for w in g.neighbors(last).difference(&next_forbidden).iter() {
            if path.contains(&w) {
                continue;
            }
            path.push(w);
            let found = rec(g, path, &next_forbidden, visit);
            path.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    let mut path = vec![start];
    rec(g, &mut path, &g.empty_set(), visit)
}

/// Some induced path on exactly `m` vertices (the lexicographically first),
/// or `None` if `g` has none.
pub fn contains_induced_path(g: &Graph, m: usize) -> Result<Option<InducedPath>> {
    use std::ops::ControlFlow;
    if m < 2 {
        return Err(Error::InvalidParameter("induced path must have at least 2 vertices".into()));
    }
    for start in g.vertices() {
        let found = walk_induced_paths_from(g, start, &mut |p| {
            if p.len() == m {
                ControlFlow::Break(p.to_vec())
            } else {
                ControlFlow::Continue(true)
            }
        });
        if let Some(vertices) = found {
            return Ok(Some(InducedPath::new_unchecked(vertices)));
        }
    }
    Ok(None)
}
