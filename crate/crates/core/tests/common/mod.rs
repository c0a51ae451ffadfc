//! Brute-force reference routines. They work on explicit vertex subsets and
//! share no code with the library's search routines.

#![allow(dead_code)]

use lk_convexity::{Graph, VertexSet};

pub fn subset(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn degree_in(g: &Graph, v: usize, s: &[usize]) -> usize {
    s.iter().filter(|&&w| g.adjacent(v, w)).count()
}

fn edges_in(g: &Graph, s: &[usize]) -> usize {
    s.iter().map(|&v| degree_in(g, v, s)).sum::<usize>() / 2
}

fn connected_in(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() {
        return true;
    }
    let mut seen = vec![s[0]];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        for &y in s {
            if g.adjacent(x, y) && !seen.contains(&y) {
                seen.push(y);
            }
        }
        i += 1;
    }
    seen.len() == s.len()
}

/// `G[s]` is a path with ends `u` and `v` (a tree with max degree 2 whose
/// leaves are `u` and `v`).
pub fn is_path_between(g: &Graph, s: &[usize], u: usize, v: usize) -> bool {
    if !s.contains(&u) || !s.contains(&v) || u == v {
        return false;
    }
    if !connected_in(g, s) || edges_in(g, s) != s.len() - 1 {
        return false;
    }
    s.iter().all(|&x| {
        let d = degree_in(g, x, s);
        if x == u || x == v {
            d == 1
        } else {
            d == 2
        }
    })
}

/// `G[s]` is a path (any ends).
pub fn is_path(g: &Graph, s: &[usize]) -> bool {
    s.len() >= 2
        && connected_in(g, s)
        && edges_in(g, s) == s.len() - 1
        && s.iter().all(|&x| degree_in(g, x, s) <= 2)
}

/// `G[s]` is a cycle of length at least 4.
pub fn is_hole(g: &Graph, s: &[usize]) -> bool {
    s.len() >= 4 && connected_in(g, s) && s.iter().all(|&x| degree_in(g, x, s) == 2)
}

pub fn has_hole(g: &Graph) -> bool {
    (0u64..1 << g.n()).any(|m| is_hole(g, &subset(g.n(), m)))
}

/// Vertex sets of all induced `u`–`v` paths with at most `max_len` edges.
pub fn path_sets_between(g: &Graph, u: usize, v: usize, max_len: usize) -> Vec<Vec<usize>> {
    (0u64..1 << g.n())
        .map(|m| subset(g.n(), m))
        .filter(|s| s.len() <= max_len + 1 && is_path_between(g, s, u, v))
        .collect()
}

pub fn interval(g: &Graph, u: usize, v: usize, k: usize) -> VertexSet {
    let mut out = VertexSet::from_vertices(g.n(), [u, v]);
    if u != v {
        for s in path_sets_between(g, u, v, k) {
            for x in s {
                out.insert(x);
            }
        }
    }
    out
}

/// Closed under every induced path of length ≤ `k` between two members.
pub fn is_convex(g: &Graph, s: &VertexSet, k: usize) -> bool {
    let members = s.to_vec();
    members.iter().all(|&u| {
        members
            .iter()
            .all(|&v| u >= v || interval(g, u, v, k).is_subset(s))
    })
}

pub fn simplicial(g: &Graph) -> Vec<usize> {
    g.vertices()
        .filter(|&x| {
            let mut closed: Vec<usize> = g.neighbors(x).iter().collect();
            closed.push(x);
            closed
                .iter()
                .all(|&a| closed.iter().all(|&b| a == b || g.adjacent(a, b)))
        })
        .collect()
}

/// All induced gems `(vertex set of the base, apex)` with base order ≥ `min_n`.
pub fn gems(g: &Graph, min_n: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    for apex in g.vertices() {
        let nbrs: Vec<usize> = g.neighbors(apex).iter().collect();
        for m in 0u64..1 << nbrs.len() {
            let s: Vec<usize> = (0..nbrs.len()).filter(|&i| m >> i & 1 == 1).map(|i| nbrs[i]).collect();
            if s.len() > min_n && is_path(g, &s) {
                out.push((s, apex));
            }
        }
    }
    out.sort();
    out
}

/// Some 4-vertex induced `x0`–`xn` path avoiding `apex`.
pub fn solved(g: &Graph, x0: usize, xn: usize, apex: usize) -> bool {
    path_sets_between(g, x0, xn, 3)
        .iter()
        .any(|s| s.len() == 4 && !s.contains(&apex))
}
