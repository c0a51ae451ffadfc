//! The l^k-convexity: intervals over induced paths of length at most `k`,
//! their iterates, hulls, convex sets, and extreme points.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paths::induced_paths_between;
use crate::vertex_set::VertexSet;

/// Default refusal threshold for routines that enumerate all vertex subsets.
pub const DEFAULT_MAX_N: usize = 16;

/// The path-length bound `k` (in edges) of the convexity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConvexityParams {
    k: usize,
}

impl ConvexityParams {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
        }
        Ok(ConvexityParams { k })
    }

    /// The monophonic convexity on `n` vertices: no induced path is longer
    /// than `n - 1` edges.
    pub fn monophonic(n: usize) -> Self {
        ConvexityParams { k: n.saturating_sub(1).max(2) }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `k` clamped to `n - 1`; intervals do not change beyond that.
    pub fn effective_k(&self, n: usize) -> usize {
        self.k.min(n.saturating_sub(1)).max(1)
    }

    pub fn is_clamped(&self, n: usize) -> bool {
        self.k > n.saturating_sub(1)
    }
}

/// Source of pairwise intervals `I[u, v]` for `u < v`.
pub trait PairIntervals {
    fn graph(&self) -> &Graph;
    fn pair(&mut self, u: usize, v: usize) -> &VertexSet;
}

fn compute_interval(g: &Graph, k: usize, u: usize, v: usize) -> VertexSet {
    let mut out = g.empty_set();
    out.insert(u);
    out.insert(v);
    for path in induced_paths_between(g, u, v, k).expect("valid pair") {
        for &x in path.vertices() {
            out.insert(x);
        }
    }
    out
}

/// Pair intervals computed on first use and kept for the lifetime of the
/// cache (one hull computation, typically).
pub struct LazyIntervals<'g> {
    g: &'g Graph,
    k: usize,
    cache: Vec<Option<VertexSet>>,
}

impl<'g> LazyIntervals<'g> {
    pub fn new(g: &'g Graph, p: ConvexityParams) -> Self {
        LazyIntervals {
            g,
            k: p.effective_k(g.n()),
            cache: vec![None; g.n() * g.n()],
        }
    }
}

impl PairIntervals for LazyIntervals<'_> {
    fn graph(&self) -> &Graph {
        self.g
    }

    fn pair(&mut self, u: usize, v: usize) -> &VertexSet {
        let (u, v) = (u.min(v), u.max(v));
        let (g, k) = (self.g, self.k);
        self.cache[u * g.n() + v].get_or_insert_with(|| compute_interval(g, k, u, v))
    }
}

/// All pair intervals, computed up front. Immutable, so it can be shared
/// across threads.
#[derive(Clone, Debug)]
pub struct IntervalTable<'g> {
    g: &'g Graph,
    params: ConvexityParams,
    table: Vec<VertexSet>,
}

impl<'g> IntervalTable<'g> {
    pub fn new(g: &'g Graph, p: ConvexityParams) -> Self {
        let n = g.n();
        let k = p.effective_k(n);
        let mut table = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                table.push(if u < v {
                    compute_interval(g, k, u, v)
                } else {
                    VertexSet::empty(0)
                });
            }
        }
        IntervalTable { g, params: p, table }
    }

    pub fn params(&self) -> ConvexityParams {
        self.params
    }

    pub fn get(&self, u: usize, v: usize) -> &VertexSet {
        let (u, v) = (u.min(v), u.max(v));
        &self.table[u * self.g.n() + v]
    }

    pub fn interval_of_set(&self, w: &VertexSet) -> VertexSet {
        interval_of_set_via(&mut &*self, w)
    }

    pub fn is_convex(&self, s: &VertexSet) -> bool {
        violation_via(&mut &*self, s).is_none()
    }

    pub fn hull(&self, s: &VertexSet) -> HullTrace {
        hull_via(&mut &*self, s)
    }
}

impl PairIntervals for &IntervalTable<'_> {
    fn graph(&self) -> &Graph {
        self.g
    }

    fn pair(&mut self, u: usize, v: usize) -> &VertexSet {
        self.get(u, v)
    }
}

pub(crate) fn interval_of_set_via<S: PairIntervals>(src: &mut S, w: &VertexSet) -> VertexSet {
    let mut out = w.clone();
    let members = w.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            out.union_with(src.pair(u, v));
        }
    }
    out
}

/// First pair (in ascending order) whose interval leaves `s`, with the
/// smallest escaped vertex.
pub(crate) fn violation_via<S: PairIntervals>(
    src: &mut S,
    s: &VertexSet,
) -> Option<(usize, usize, usize)> {
    let members = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let iv = src.pair(u, v);
            if !iv.is_subset(s) {
                let escaped = iv.difference(s).first().unwrap();
                return Some((u, v, escaped));
            }
        }
    }
    None
}

pub(crate) fn hull_via<S: PairIntervals>(src: &mut S, s: &VertexSet) -> HullTrace {
    let mut iterates = vec![s.clone()];
    loop {
        let current = iterates.last().unwrap();
        let next = interval_of_set_via(src, current);
        if &next == current {
            break;
        }
        iterates.push(next);
    }
    HullTrace { iterates }
}

fn require_nonempty(g: &Graph, s: &VertexSet) -> Result<()> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(())
}

/// The chain `W = I^0 ⊆ I^1 ⊆ … ⊆ I^j` of interval iterates, ending at the
/// first fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullTrace {
    iterates: Vec<VertexSet>,
}

impl HullTrace {
    pub fn iterates(&self) -> &[VertexSet] {
        &self.iterates
    }

    /// The hull: the last iterate.
    pub fn fixed_point(&self) -> &VertexSet {
        self.iterates.last().unwrap()
    }

    /// Minimal `j` with `I^j = I^{j+1}`.
    pub fn steps(&self) -> usize {
        self.iterates.len() - 1
    }

    pub fn into_fixed_point(mut self) -> VertexSet {
        self.iterates.pop().unwrap()
    }

    /// `{"iterates":[[…],…],"steps":j}` with ids shifted by `offset`.
    pub fn to_json(&self, offset: usize) -> serde_json::Value {
        serde_json::json!({
            "iterates": self.iterates.iter().map(|s| shifted(s, offset)).collect::<Vec<_>>(),
            "steps": self.steps(),
        })
    }
}

impl Serialize for HullTrace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json(0).serialize(serializer)
    }
}

pub(crate) fn shifted(s: &VertexSet, offset: usize) -> Vec<usize> {
    s.iter().map(|v| v + offset).collect()
}

/// `I[u, v]`: `u`, `v`, and every vertex on an induced `u`–`v` path with at
/// most `k` edges. `I[u, u] = {u}`.
pub fn interval(g: &Graph, p: ConvexityParams, u: usize, v: usize) -> Result<VertexSet> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return g.set_of([u]);
    }
    Ok(compute_interval(g, p.effective_k(g.n()), u, v))
}

/// `I[W]`: the union of `I[u, v]` over all pairs of `W`.
pub fn interval_of_set(g: &Graph, p: ConvexityParams, w: &VertexSet) -> Result<VertexSet> {
    require_nonempty(g, w)?;
    Ok(interval_of_set_via(&mut LazyIntervals::new(g, p), w))
}

/// Iterates `I[·]` from `s` to its fixed point, the convex hull of `s`.
pub fn hull(g: &Graph, p: ConvexityParams, s: &VertexSet) -> Result<HullTrace> {
    require_nonempty(g, s)?;
    Ok(hull_via(&mut LazyIntervals::new(g, p), s))
}

/// True iff `I[u, v] ⊆ s` for every pair of `s`. The empty set is convex.
pub fn is_convex(g: &Graph, p: ConvexityParams, s: &VertexSet) -> bool {
    convexity_violation(g, p, s).is_none()
}

/// A witness `(u, v, x)` that `s` is not convex: `u, v ∈ s` and `x ∈ I[u, v]`
/// lies outside `s`.
pub fn convexity_violation(
    g: &Graph,
    p: ConvexityParams,
    s: &VertexSet,
) -> Option<(usize, usize, usize)> {
    violation_via(&mut LazyIntervals::new(g, p), s)
}

/// Extreme points of a convex set: the vertices `x` with `s \ {x}` convex,
/// which are exactly the simplicial vertices of `G[s]`.
pub fn extreme_points(g: &Graph, p: ConvexityParams, s: &VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    let mut src = LazyIntervals::new(g, p);
    if let Some((u, v, escaped)) = violation_via(&mut src, s) {
        return Err(Error::NotConvex { u, v, escaped });
    }
    let ext = simplicial_within(g, s);
    if cfg!(debug_assertions) {
        for x in s {
            let mut rest = s.clone();
            rest.remove(x);
            let definitional = violation_via(&mut src, &rest).is_none();
            assert_eq!(
                definitional,
                ext.contains(x),
                "extreme/simplicial mismatch at vertex {x} of {s}"
            );
        }
    }
    Ok(ext)
}

/// Simplicial vertices of `G[s]`, in host ids.
pub fn simplicial_within(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut out = g.empty_set();
    for x in s {
        let local = g.neighbors(x).intersection(s);
        if g.is_clique(&local) {
            out.insert(x);
        }
    }
    out
}

/// Every convex set of `g`, ordered by size and then lexicographically.
/// Refuses graphs with more than `max_n` vertices.
pub fn enumerate_convex_sets(g: &Graph, p: ConvexityParams, max_n: usize) -> Result<Vec<VertexSet>> {
    if g.n() > max_n {
        return Err(Error::CapExceeded { n: g.n(), cap: max_n });
    }
    let table = IntervalTable::new(g, p);
    Ok(convex_sets_in(&table))
}

pub(crate) fn convex_sets_in(table: &IntervalTable<'_>) -> Vec<VertexSet> {
    let n = table.g.n();
    let mut out = Vec::new();
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            let s = VertexSet::from_vertices(n, combo);
            if table.is_convex(&s) {
                out.push(s);
            }
        }
    }
    out
}
