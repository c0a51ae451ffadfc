//! Named fixtures, parametric families, and seeded random ensembles.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest vertex count accepted by [`all_connected_graphs`].
pub const MAX_EXHAUSTIVE_N: usize = 7;

/// Seed for the random generators. Equal seeds and parameters give equal
/// graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed(pub u64);

impl Seed {
    /// Independent generator for the `index`-th member of an ensemble.
    pub fn rng(self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.0);
        rng.set_stream(index);
        rng
    }
}

/// The 7-vertex chordal graph with extreme points {1, 7} whose l^3 hull of
/// {1, 7} needs two interval steps. Figure labels 1..7 map to ids 0..6.
pub fn figure2_graph() -> Graph {
    const EDGES: [(usize, usize); 11] = [
        (1, 2),
        (1, 3),
        (2, 3),
        (2, 4),
        (2, 5),
        (3, 4),
        (4, 5),
        (4, 6),
        (5, 6),
        (5, 7),
        (6, 7),
    ];
    let pairs: Vec<_> = EDGES.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edge_list(7, &pairs).unwrap()
}

/// The n-gem: path `x_0 … x_n` on ids `0..=n` plus apex `n + 1`.
pub fn gem(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("gem needs n >= 3, got {n}")));
    }
    let apex = n + 1;
    let mut pairs: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
    pairs.extend((0..=n).map(|i| (i, apex)));
    Graph::from_edge_list(n + 2, &pairs)
}

/// Path on `n` vertices (`n - 1` edges).
pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &pairs).expect("path needs n >= 1")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs n >= 3");
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &pairs).expect("complete graph needs n >= 1")
}

/// K_{1,n-1}: center 0.
pub fn star(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edge_list(n, &pairs).expect("star needs n >= 1")
}

/// A random connected trivially perfect (chordal, P_4-free) graph.
///
/// Built recursively: a connected piece is a universal vertex over an
/// arbitrary piece on one vertex fewer; an arbitrary piece is a disjoint
/// union of connected pieces.
pub fn random_trivially_perfect(n: usize, seed: Seed) -> Graph {
    assert!(n >= 1, "need at least one vertex");
    let mut rng = seed.rng(0);
    let mut pairs = Vec::new();
    let vertices: Vec<usize> = (0..n).collect();
    build_connected_tp(&vertices, &mut rng, &mut pairs);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let pairs: Vec<_> = pairs.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

fn build_connected_tp(vs: &[usize], rng: &mut ChaCha8Rng, pairs: &mut Vec<(usize, usize)>) {
    let (&hub, rest) = vs.split_first().unwrap();
    pairs.extend(rest.iter().map(|&v| (hub, v)));
    let mut rest = rest;
    while !rest.is_empty() {
        let size = rng.gen_range(1..=rest.len());
        let (part, tail) = rest.split_at(size);
        build_connected_tp(part, rng, pairs);
        rest = tail;
    }
}

/// A random connected chordal graph.
///
/// Vertex `i` attaches to a clique inside the closed neighborhood of a
/// random earlier vertex `p`: `p` itself, plus each neighbor of `p` with
/// probability `density` provided it keeps the set a clique. Every new vertex
/// is simplicial when added, so `n-1, …, 1, 0` is a perfect elimination
/// ordering. With `density = 0` the result is a tree.
pub fn random_connected_chordal(n: usize, density: f64, seed: Seed) -> Graph {
    assert!(n >= 1, "need at least one vertex");
    extend_chordal(&Graph::from_edge_list(1, &[]).unwrap(), n - 1, density, seed)
}

/// Grows a connected chordal `base` by `extra` vertices using the same
/// attachment rule as [`random_connected_chordal`]. Base ids are kept; new
/// vertices follow them.
pub fn extend_chordal(base: &Graph, extra: usize, density: f64, seed: Seed) -> Graph {
    assert!((0.0..=1.0).contains(&density), "density must lie in [0, 1]");
    let n = base.n() + extra;
    let mut rng = seed.rng(0);
    let mut rows: Vec<VertexSet> = base
        .vertices()
        .map(|v| VertexSet::from_vertices(n, base.neighbors(v).iter()))
        .collect();
    rows.resize(n, VertexSet::empty(n));
    for i in base.n()..n {
        let p = rng.gen_range(0..i);
        let mut clique = vec![p];
        let mut nbrs = rows[p].to_vec();
        nbrs.shuffle(&mut rng);
        for w in nbrs {
            if rng.gen_bool(density) && clique.iter().all(|&c| rows[c].contains(w)) {
                clique.push(w);
            }
        }
        for c in clique {
            rows[i].insert(c);
            rows[c].insert(i);
        }
    }
    Graph::from_rows(rows)
}

/// A random connected chordal graph as the intersection graph of subtrees
/// of a random host tree on `host_size` nodes. Each vertex's subtree grows
/// from a random node by up to `max_subtree` steps. Disconnected draws are
/// discarded and redrawn from the same stream.
///
/// With `path_host` the host tree is a path and the result is an interval
/// graph.
pub fn random_subtree_chordal(
    n: usize,
    host_size: usize,
    max_subtree: usize,
    path_host: bool,
    seed: Seed,
) -> Graph {
    assert!(n >= 1 && host_size >= 1, "need at least one vertex and one host node");
    let mut rng = seed.rng(0);
    loop {
        let mut tree = vec![Vec::new(); host_size];
        for t in 1..host_size {
            let parent = if path_host { t - 1 } else { rng.gen_range(0..t) };
            tree[t].push(parent);
            tree[parent].push(t);
        }
        let subtrees: Vec<VertexSet> = (0..n)
            .map(|_| {
                let mut sub = VertexSet::empty(host_size);
                let mut frontier = vec![rng.gen_range(0..host_size)];
                sub.insert(frontier[0]);
                for _ in 0..rng.gen_range(0..=max_subtree) {
                    let from = frontier[rng.gen_range(0..frontier.len())];
                    let Some(&to) = tree[from].choose(&mut rng) else {
                        break;
                    };
                    if sub.insert(to) {
                        frontier.push(to);
                    }
                }
                sub
            })
            .collect();
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !subtrees[u].is_disjoint(&subtrees[v]) {
                    pairs.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &pairs).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// A random connected chordal graph that contains an induced gem.
///
/// Starts from an m-gem (4 ≤ m ≤ n - 2, at most 6) and adds the remaining
/// vertices one at a time. Each new vertex sees a random contiguous stretch
/// of the gem's base, the apex with probability 0.7, and each earlier added
/// vertex with probability 0.5; draws that would create a hole are redrawn.
/// Base ids are `0..=m`, the apex is `m + 1`.
pub fn random_gem_seeded(n: usize, seed: Seed) -> Graph {
    assert!(n >= 6, "a gem with n >= 4 needs six vertices");
    let mut rng = seed.rng(0);
    let m = rng.gen_range(4..=(n - 2).min(6));
    let mut pairs: Vec<(usize, usize)> = gem(m).unwrap().edges().collect();
    for y in m + 2..n {
        loop {
            let a = rng.gen_range(0..=m);
            let b = rng.gen_range(a..=(a + 3).min(m));
            let mut candidate = pairs.clone();
            candidate.extend((a..=b).map(|x| (x, y)));
            if rng.gen_bool(0.7) {
                candidate.push((m + 1, y));
            }
            candidate.extend((m + 2..y).filter(|_| rng.gen_bool(0.5)).map(|z| (z, y)));
            let g = Graph::from_edge_list(y + 1, &candidate).unwrap();
            if crate::chordal::is_chordal(&g).is_chordal() {
                pairs = candidate;
                break;
            }
        }
    }
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// A random connected graph: a random spanning tree plus each remaining pair
/// independently with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: Seed) -> Graph {
    assert!(n >= 1, "need at least one vertex");
    let mut rng = seed.rng(0);
    let mut pairs = Vec::new();
    for i in 1..n {
        pairs.push((rng.gen_range(0..i), i));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let pairs: Vec<_> = pairs.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Every connected labeled graph on `n` vertices, ordered by edge-subset
/// bitmask (bit `i` ↔ the `i`-th pair in lexicographic order).
pub fn all_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_EXHAUSTIVE_N {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_N}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let chosen: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &chosen).unwrap();
        g.is_connected().then_some(g)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::{is_chordal, is_perfect_elimination_ordering};
    use crate::paths::contains_induced_path;

    #[test]
    fn figure2_shape() {
        let g = figure2_graph();
        assert_eq!((g.n(), g.edge_count()), (7, 11));
        assert_eq!(g.simplicial_vertices().to_vec(), vec![0, 6]);
        assert!(crate::paths::is_induced_path(&g, &[0, 2, 3, 5, 6]));
    }

    #[test]
    fn gem_sizes() {
        let g3 = gem(3).unwrap();
        assert_eq!((g3.n(), g3.edge_count()), (5, 7));
        let g4 = gem(4).unwrap();
        assert_eq!((g4.n(), g4.edge_count()), (6, 9));
        for n in 3..10 {
            assert_eq!(gem(n).unwrap().edge_count(), 2 * n + 1);
        }
        assert!(gem(2).is_err());
    }

    #[test]
    fn families() {
        assert_eq!(path(4).edge_count(), 3);
        assert_eq!(cycle(5).edge_count(), 5);
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(star(4).edge_count(), 3);
        assert_eq!(path(1).n(), 1);
    }

    #[test]
    fn trivially_perfect_is_chordal_p4_free() {
        for s in 0..50 {
            for n in 1..12 {
                let g = random_trivially_perfect(n, Seed(s));
                assert!(g.is_connected());
                assert!(is_chordal(&g).is_chordal());
                if n >= 4 {
                    assert_eq!(contains_induced_path(&g, 4).unwrap(), None);
                }
            }
        }
        assert_eq!(random_trivially_perfect(1, Seed(3)).n(), 1);
        assert_eq!(random_trivially_perfect(9, Seed(7)), random_trivially_perfect(9, Seed(7)));
    }

    #[test]
    fn random_chordal_has_construction_peo() {
        for s in 0..50 {
            let g = random_connected_chordal(12, 0.6, Seed(s));
            assert!(g.is_connected());
            let peo: Vec<usize> = (0..12).rev().collect();
            assert!(is_perfect_elimination_ordering(&g, &peo));
            assert!(is_chordal(&g).is_chordal());
        }
        let tree = random_connected_chordal(10, 0.0, Seed(5));
        assert_eq!(tree.edge_count(), 9);
        assert_eq!(
            random_connected_chordal(10, 0.5, Seed(5)),
            random_connected_chordal(10, 0.5, Seed(5))
        );
    }

    #[test]
    fn subtree_and_gem_seeded_are_chordal() {
        for s in 0..40 {
            for path_host in [false, true] {
                let g = random_subtree_chordal(10, 6, 3, path_host, Seed(s));
                assert!(g.is_connected() && is_chordal(&g).is_chordal());
                assert_eq!(g, random_subtree_chordal(10, 6, 3, path_host, Seed(s)));
            }
            let g = random_gem_seeded(6 + s as usize % 7, Seed(s));
            assert!(g.is_connected() && is_chordal(&g).is_chordal());
            assert!(crate::recognize::enumerate_gems(&g, 4).unwrap().next().is_some());
        }
    }

    #[test]
    fn extension_keeps_base() {
        let base = gem(4).unwrap();
        let g = extend_chordal(&base, 4, 0.5, Seed(9));
        assert_eq!(g.n(), 10);
        for (u, v) in base.edges() {
            assert!(g.adjacent(u, v));
        }
        let (sub, _) = g.induced_subgraph(&g.set_of(0..6).unwrap()).unwrap();
        assert_eq!(sub, base);
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_connected_graphs(1).unwrap().count(), 1);
        assert_eq!(all_connected_graphs(2).unwrap().count(), 1);
        assert_eq!(all_connected_graphs(3).unwrap().count(), 4);
        assert_eq!(all_connected_graphs(4).unwrap().count(), 38);
        assert!(all_connected_graphs(8).is_err());
    }
}
