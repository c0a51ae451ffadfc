//! Chordality via lexicographic breadth-first search.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// An induced cycle on at least four vertices, listed in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HoleWitness {
    cycle: Vec<usize>,
}

impl HoleWitness {
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Re-checks the witness: length ≥ 4, distinct vertices, cyclically
    /// consecutive pairs adjacent, every other pair non-adjacent.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let c = &self.cycle;
        let len = c.len();
        if len < 4 || c.iter().any(|&v| v >= g.n()) {
            return false;
        }
        for i in 0..len {
            for j in i + 1..len {
                let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                if c[i] == c[j] || g.adjacent(c[i], c[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// Perfect elimination ordering: each vertex's neighbors that come later
    /// in the ordering form a clique.
    Chordal { peo: Vec<usize> },
    NotChordal { hole: HoleWitness },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// LexBFS visit order. Among unvisited vertices the lexicographically largest
/// label wins; ties go to the smallest id.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let next = (0..n)
            .filter(|&v| !visited[v])
            .fold(None, |best: Option<usize>, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .unwrap();
        visited[next] = true;
        order.push(next);
        for w in g.neighbors(next) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    order
}

/// True iff, for every vertex, its neighbors later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    first_elimination_failure(g, order).is_none()
}

// Returns (v, a, b): a, b are later neighbors of v that are not adjacent.
fn first_elimination_failure(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let mut position = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| position[w] > i).collect();
        for (x, &a) in later.iter().enumerate() {
            for &b in &later[x + 1..] {
                if !g.adjacent(a, b) {
                    return Some((v, a, b));
                }
            }
        }
    }
    None
}

/// Decides chordality, returning a perfect elimination ordering (the reverse
/// of a LexBFS order) or an induced cycle of length at least four.
pub fn is_chordal(g: &Graph) -> Chordality {
    let mut peo = lex_bfs(g);
    peo.reverse();
    match first_elimination_failure(g, &peo) {
        None => Chordality::Chordal { peo },
        Some((v, a, b)) => {
            let hole = hole_through(g, v, a, b)
                .or_else(|| find_hole(g))
                .expect("LexBFS ordering failed but no hole found");
            Chordality::NotChordal { hole }
        }
    }
}

/// Looks for a hole `center, a, …, b`: a shortest `a`–`b` path that avoids
/// every other neighbor of `center` closes an induced cycle.
fn hole_through(g: &Graph, center: usize, a: usize, b: usize) -> Option<HoleWitness> {
    let mut blocked = g.closed_neighborhood(center);
    blocked.remove(a);
    blocked.remove(b);
    let mut parent = vec![usize::MAX; g.n()];
    parent[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for y in g.neighbors(x) {
            if !blocked.contains(y) && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[b] == usize::MAX {
        return None;
    }
    let mut cycle = vec![center];
    let mut tail = vec![b];
    let mut x = b;
    while x != a {
        x = parent[x];
        tail.push(x);
    }
    tail.reverse();
    cycle.extend(tail);
    let hole = HoleWitness { cycle };
    debug_assert!(hole.is_valid_in(g));
    Some(hole)
}

fn find_hole(g: &Graph) -> Option<HoleWitness> {
    for v in g.vertices() {
        let nbrs = g.neighbors(v).to_vec();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !g.adjacent(a, b) {
                    if let Some(h) = hole_through(g, v, a, b) {
                        return Some(h);
                    }
                }
            }
        }
    }
    None
}
