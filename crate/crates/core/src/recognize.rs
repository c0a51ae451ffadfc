//! Structural recognizers for l^2- and l^3-convex geometries, and the
//! chordal-plus-diameter filter that every l^k-convex geometry passes.
//!
//! * l^2: chordal and without an induced path on four vertices.
//! * l^3: chordal, diameter at most 3, and every induced n-gem (n ≥ 4) is
//!   solved, i.e. some induced path of length exactly 3 joins the two ends of
//!   the gem's base without passing through its apex.
//!
//! Each negative answer carries a certificate that can be re-checked against
//! the graph. The gem condition is tested lazily as gems are enumerated, so
//! the l^3 recognizer is exponential only on inputs that really contain many
//! induced gems.

use std::collections::VecDeque;

use serde::Serialize;

use crate::chordal::{is_chordal, Chordality, HoleWitness};
use crate::convexity::ConvexityParams;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paths::{contains_induced_path, induced_paths_between, is_induced_path, InducedPath};
use crate::vertex_set::VertexSet;

/// An induced n-gem: an induced path `x_0 … x_n` (n ≥ 3) plus an apex
/// adjacent to every path vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GemWitness {
    base: InducedPath,
    apex: usize,
}

impl GemWitness {
    pub fn new(g: &Graph, base: Vec<usize>, apex: usize) -> Result<GemWitness> {
        g.check_vertex(apex)?;
        for &v in &base {
            g.check_vertex(v)?;
        }
        let w = GemWitness {
            base: InducedPath::new_unchecked(base),
            apex,
        };
        if !w.is_valid_in(g) {
            return Err(Error::InvalidWitness(format!(
                "base {:?} with apex {apex} is not an induced gem",
                w.base.vertices()
            )));
        }
        Ok(w)
    }

    pub fn base(&self) -> &InducedPath {
        &self.base
    }

    pub fn apex(&self) -> usize {
        self.apex
    }

    /// `n`: the number of edges of the base path.
    pub fn order(&self) -> usize {
        self.base.len()
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.base.first(), self.base.last())
    }

    pub fn vertex_set(&self, universe: usize) -> VertexSet {
        let mut s = self.base.vertex_set(universe);
        s.insert(self.apex);
        s
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let base = self.base.vertices();
        base.len() >= 4
            && self.apex < g.n()
            && base.iter().all(|&x| x < g.n())
            && is_induced_path(g, base)
            && !self.base.contains(self.apex)
            && base.iter().all(|&x| g.adjacent(x, self.apex))
    }

    pub fn to_json(&self, offset: usize) -> serde_json::Value {
        serde_json::json!({
            "base": self.base.vertices().iter().map(|v| v + offset).collect::<Vec<_>>(),
            "apex": self.apex + offset,
        })
    }
}

struct Frame {
    candidates: Vec<usize>,
    cursor: usize,
}

/// Streaming enumeration of induced gems whose base has at least `min_n`
/// edges. Each gem appears once, with the base oriented so that its first
/// vertex is smaller than its last. Output is ordered lexicographically by
/// base, then by apex.
pub struct Gems<'g> {
    g: &'g Graph,
    min_n: usize,
    next_start: usize,
    path: Vec<usize>,
    // forbidden[i]: union of N[p_0..p_{i-1}]
    forbidden: Vec<VertexSet>,
    // common[i]: vertices adjacent to all of p_0..p_i
    common: Vec<VertexSet>,
    frames: Vec<Frame>,
    pending: VecDeque<GemWitness>,
}

impl Iterator for Gems<'_> {
    type Item = GemWitness;

    fn next(&mut self) -> Option<GemWitness> {
        loop {
            if let Some(w) = self.pending.pop_front() {
                return Some(w);
            }
            let Some(frame) = self.frames.last_mut() else {
                if self.next_start >= self.g.n() {
                    return None;
                }
                let s = self.next_start;
                self.next_start += 1;
                self.path = vec![s];
                self.forbidden = vec![self.g.empty_set()];
                self.common = vec![self.g.neighbors(s).clone()];
                self.frames = vec![Frame {
                    candidates: self.g.neighbors(s).to_vec(),
                    cursor: 0,
                }];
                continue;
            };
            if frame.cursor == frame.candidates.len() {
                self.frames.pop();
                self.path.pop();
                self.forbidden.pop();
                self.common.pop();
                continue;
            }
            let w = frame.candidates[frame.cursor];
            frame.cursor += 1;

            let common = self.common.last().unwrap().intersection(self.g.neighbors(w));
            if common.is_empty() {
                continue;
            }
            let last = *self.path.last().unwrap();
            let mut forbidden = self.forbidden.last().unwrap().clone();
            forbidden.union_with(self.g.neighbors(last));
            forbidden.insert(last);

            self.path.push(w);
            if self.path.len() > self.min_n && self.path[0] < w {
                for apex in &common {
                    self.pending.push_back(GemWitness {
                        base: InducedPath::new_unchecked(self.path.clone()),
                        apex,
                    });
                }
            }
            self.frames.push(Frame {
                candidates: self.g.neighbors(w).difference(&forbidden).to_vec(),
                cursor: 0,
            });
            self.forbidden.push(forbidden);
            self.common.push(common);
        }
    }
}

/// All induced gems with a base of at least `min_n` edges (`min_n ≥ 3`).
pub fn enumerate_gems(g: &Graph, min_n: usize) -> Result<Gems<'_>> {
    if min_n < 3 {
        return Err(Error::InvalidParameter(format!("min_n must be at least 3, got {min_n}")));
    }
    Ok(Gems {
        g,
        min_n,
        next_start: 0,
        path: Vec::new(),
        forbidden: Vec::new(),
        common: Vec::new(),
        frames: Vec::new(),
        pending: VecDeque::new(),
    })
}

/// Looks for an induced path of length exactly 3 from `x_0` to `x_n` that
/// avoids the apex, anywhere in `g`. Returns the lexicographically first one.
pub fn is_gem_solved(g: &Graph, w: &GemWitness) -> Result<Option<InducedPath>> {
    if !w.is_valid_in(g) {
        return Err(Error::InvalidWitness(format!(
            "base {:?} with apex {} is not an induced gem",
            w.base.vertices(),
            w.apex
        )));
    }
    let (x0, xn) = w.ends();
    Ok(induced_paths_between(g, x0, xn, 3)?.find(|p| p.len() == 3 && !p.contains(w.apex)))
}

/// A gem together with the path that solves it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolvedGem {
    pub gem: GemWitness,
    pub solving_path: InducedPath,
}

impl SolvedGem {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let p = &self.solving_path;
        self.gem.is_valid_in(g)
            && p.is_valid_in(g)
            && p.len() == 3
            && (p.first(), p.last()) == self.gem.ends()
            && !p.contains(self.gem.apex)
    }

    pub fn to_json(&self, offset: usize) -> serde_json::Value {
        let mut v = self.gem.to_json(offset);
        v["solving_path"] = serde_json::json!(self
            .solving_path
            .vertices()
            .iter()
            .map(|x| x + offset)
            .collect::<Vec<_>>());
        v
    }
}

/// Why a recognizer said no.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Hole(HoleWitness),
    P4(InducedPath),
    FarPair { u: usize, v: usize, distance: usize },
    UnsolvedGem(GemWitness),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Hole(_) => "hole",
            Certificate::P4(_) => "p4",
            Certificate::FarPair { .. } => "far_pair",
            Certificate::UnsolvedGem(_) => "unsolved_gem",
        }
    }

    /// Re-checks the certificate against `g` from first principles.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        match self {
            Certificate::Hole(h) => h.is_valid_in(g),
            Certificate::P4(p) => p.is_valid_in(g) && p.len() == 3,
            Certificate::FarPair { u, v, distance } => {
                *u < g.n() && *v < g.n() && g.distances_from(*u)[*v] == Some(*distance)
            }
            Certificate::UnsolvedGem(w) => {
                w.order() >= 4 && matches!(is_gem_solved(g, w), Ok(None))
            }
        }
    }

    pub fn to_json(&self, offset: usize) -> serde_json::Value {
        let ids = |vs: &[usize]| vs.iter().map(|v| v + offset).collect::<Vec<_>>();
        let mut body = match self {
            Certificate::Hole(h) => serde_json::json!({ "cycle": ids(h.cycle()) }),
            Certificate::P4(p) => serde_json::json!({ "path": ids(p.vertices()) }),
            Certificate::FarPair { u, v, distance } => serde_json::json!({
                "u": u + offset,
                "v": v + offset,
                "distance": distance,
            }),
            Certificate::UnsolvedGem(w) => w.to_json(offset),
        };
        body["kind"] = self.kind().into();
        body
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionVerdict {
    pub accepted: bool,
    pub certificate: Option<Certificate>,
    /// On l^3 acceptance: every gem examined, each with its solving path.
    pub solved_gems: Vec<SolvedGem>,
}

impl RecognitionVerdict {
    fn accept() -> Self {
        RecognitionVerdict {
            accepted: true,
            certificate: None,
            solved_gems: Vec::new(),
        }
    }

    fn reject(c: Certificate) -> Self {
        RecognitionVerdict {
            accepted: false,
            certificate: Some(c),
            solved_gems: Vec::new(),
        }
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        match &self.certificate {
            Some(c) => !self.accepted && c.is_valid_in(g),
            None => self.accepted && self.solved_gems.iter().all(|s| s.is_valid_in(g)),
        }
    }

    pub fn to_json(&self, offset: usize) -> serde_json::Value {
        serde_json::json!({
            "accepted": self.accepted,
            "certificate": self.certificate.as_ref().map(|c| c.to_json(offset)),
            "solved_gems": self.solved_gems.iter().map(|s| s.to_json(offset)).collect::<Vec<_>>(),
        })
    }
}

impl Serialize for RecognitionVerdict {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json(0).serialize(serializer)
    }
}

fn chordal_or_hole(g: &Graph) -> std::result::Result<(), Certificate> {
    match is_chordal(g) {
        Chordality::Chordal { .. } => Ok(()),
        Chordality::NotChordal { hole } => Err(Certificate::Hole(hole)),
    }
}

fn diameter_within(g: &Graph, bound: usize) -> Result<std::result::Result<(), Certificate>> {
    let (u, v, distance) = g.farthest_pair()?;
    Ok(if distance > bound {
        Err(Certificate::FarPair { u, v, distance })
    } else {
        Ok(())
    })
}

/// l^2-convex geometry test: chordal and P_4-free.
pub fn recognize_l2(g: &Graph) -> Result<RecognitionVerdict> {
    g.require_connected()?;
    if let Err(c) = chordal_or_hole(g) {
        return Ok(RecognitionVerdict::reject(c));
    }
    if let Some(p4) = contains_induced_path(g, 4)? {
        return Ok(RecognitionVerdict::reject(Certificate::P4(p4)));
    }
    Ok(RecognitionVerdict::accept())
}

/// l^3-convex geometry test. Conditions are checked in order (chordality,
/// diameter, gems) and the first failure is reported.
pub fn recognize_l3(g: &Graph) -> Result<RecognitionVerdict> {
    g.require_connected()?;
    if let Err(c) = chordal_or_hole(g) {
        return Ok(RecognitionVerdict::reject(c));
    }
    if let Err(c) = diameter_within(g, 3)? {
        return Ok(RecognitionVerdict::reject(c));
    }
    let mut solved_gems = Vec::new();
    for gem in enumerate_gems(g, 4)? {
        match is_gem_solved(g, &gem)? {
            Some(solving_path) => solved_gems.push(SolvedGem { gem, solving_path }),
            None => return Ok(RecognitionVerdict::reject(Certificate::UnsolvedGem(gem))),
        }
    }
    Ok(RecognitionVerdict {
        accepted: true,
        certificate: None,
        solved_gems,
    })
}

/// Chordal with diameter at most `k`. Every l^k-convex geometry passes;
/// passing does not make a graph one.
pub fn necessary_conditions(g: &Graph, p: ConvexityParams) -> Result<RecognitionVerdict> {
    g.require_connected()?;
    if let Err(c) = chordal_or_hole(g) {
        return Ok(RecognitionVerdict::reject(c));
    }
    if let Err(c) = diameter_within(g, p.k())? {
        return Ok(RecognitionVerdict::reject(c));
    }
    Ok(RecognitionVerdict::accept())
}
