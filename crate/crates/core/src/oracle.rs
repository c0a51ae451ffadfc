//! Exhaustive convex-geometry check.
//!
//! A convexity is a convex geometry when every convex set is the hull of its
//! extreme points. This module enumerates every convex set and checks that
//! directly. Cost is exponential in the vertex count, hence the cap.

use rayon::prelude::*;
use serde::Serialize;

use crate::convexity::{
    convex_sets_in, extreme_points, hull, shifted, simplicial_within, ConvexityParams,
    IntervalTable,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A convex set that is not the hull of its extreme points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MkmViolation {
    pub set: VertexSet,
    pub ext: VertexSet,
    pub hull: VertexSet,
}

impl MkmViolation {
    /// Recomputes everything from scratch with the lazy (non-table) routines.
    pub fn is_valid_in(&self, g: &Graph, p: ConvexityParams) -> bool {
        let Ok(ext) = extreme_points(g, p, &self.set) else {
            return false;
        };
        let h = if ext.is_empty() {
            ext.clone()
        } else {
            hull(g, p, &ext).unwrap().into_fixed_point()
        };
        ext == self.ext && h == self.hull && h != self.set
    }

    pub fn to_json(&self, offset: usize) -> serde_json::Value {
        serde_json::json!({
            "set": shifted(&self.set, offset),
            "ext": shifted(&self.ext, offset),
            "hull": shifted(&self.hull, offset),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryVerdict {
    pub is_geometry: bool,
    pub certificate: Option<MkmViolation>,
}

impl GeometryVerdict {
    /// `{"geometry":bool,"certificate":{"set":[…],"ext":[…],"hull":[…]}|null}`
    pub fn to_json(&self, offset: usize) -> serde_json::Value {
        serde_json::json!({
            "geometry": self.is_geometry,
            "certificate": self.certificate.as_ref().map(|c| c.to_json(offset)),
        })
    }
}

impl Serialize for GeometryVerdict {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json(0).serialize(serializer)
    }
}

/// Result of probing one convex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MkmCheck {
    pub holds: bool,
    pub ext: VertexSet,
    pub hull: VertexSet,
    /// Interval iterations needed for the hull of `ext` to stabilize.
    pub steps: usize,
}

fn check_in_table(table: &IntervalTable<'_>, g: &Graph, s: &VertexSet) -> Option<MkmViolation> {
    let ext = simplicial_within(g, s);
    let h = if ext.is_empty() {
        ext.clone()
    } else {
        table.hull(&ext).into_fixed_point()
    };
    (h != *s).then(|| MkmViolation {
        set: s.clone(),
        ext,
        hull: h,
    })
}

fn prepare(g: &Graph, max_n: usize) -> Result<()> {
    if g.n() > max_n {
        return Err(Error::CapExceeded { n: g.n(), cap: max_n });
    }
    g.require_connected()
}

/// Decides whether `(g, l^k)` is a convex geometry. On failure the
/// certificate is the first violating convex set in enumeration order
/// (size, then lexicographic), independent of thread scheduling.
pub fn verify_geometry(g: &Graph, p: ConvexityParams, max_n: usize) -> Result<GeometryVerdict> {
    prepare(g, max_n)?;
    let table = IntervalTable::new(g, p);
    let sets = convex_sets_in(&table);
    let certificate = sets
        .par_iter()
        .find_map_first(|s| check_in_table(&table, g, s));
    Ok(GeometryVerdict {
        is_geometry: certificate.is_none(),
        certificate,
    })
}

/// Every violating convex set, in enumeration order.
pub fn all_violations(g: &Graph, p: ConvexityParams, max_n: usize) -> Result<Vec<MkmViolation>> {
    prepare(g, max_n)?;
    let table = IntervalTable::new(g, p);
    let sets = convex_sets_in(&table);
    Ok(sets
        .par_iter()
        .filter_map(|s| check_in_table(&table, g, s))
        .collect())
}

/// Checks a single convex set: its extreme points, their hull, and whether
/// that hull gives back the set.
pub fn mkm_check_set(g: &Graph, p: ConvexityParams, s: &VertexSet) -> Result<MkmCheck> {
    let ext = extreme_points(g, p, s)?;
    let (h, steps) = if ext.is_empty() {
        (ext.clone(), 0)
    } else {
        let trace = hull(g, p, &ext)?;
        let steps = trace.steps();
        (trace.into_fixed_point(), steps)
    };
    Ok(MkmCheck {
        holds: h == *s,
        ext,
        hull: h,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::DEFAULT_MAX_N;
    use crate::generators::{complete, figure2_graph, gem};

    fn k3() -> ConvexityParams {
        ConvexityParams::new(3).unwrap()
    }

    #[test]
    fn figure2_is_geometry() {
        let v = verify_geometry(&figure2_graph(), k3(), DEFAULT_MAX_N).unwrap();
        assert!(v.is_geometry);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"certificate":null,"geometry":true}"#);
    }

    #[test]
    fn figure2_minus_two_fails_on_whole_set() {
        let (h, map) = figure2_graph().without_vertex(1).unwrap();
        let v = verify_geometry(&h, k3(), DEFAULT_MAX_N).unwrap();
        assert!(!v.is_geometry);
        let cert = v.certificate.unwrap();
        assert_eq!(cert.set, h.vertex_set());
        let ends = h.set_of([map.to_sub(0).unwrap(), map.to_sub(6).unwrap()]).unwrap();
        assert_eq!(cert.ext, ends);
        assert_eq!(cert.hull, ends);
        assert!(cert.is_valid_in(&h, k3()));
    }

    #[test]
    fn cliques_are_geometries() {
        for n in 1..6 {
            for k in 2..5 {
                let p = ConvexityParams::new(k).unwrap();
                assert!(verify_geometry(&complete(n), p, DEFAULT_MAX_N).unwrap().is_geometry);
            }
        }
    }

    #[test]
    fn single_set_probes() {
        let g = figure2_graph();
        let s = g.set_of(0..6).unwrap();
        let c = mkm_check_set(&g, k3(), &s).unwrap();
        assert!(c.holds);
        assert_eq!(c.ext, g.set_of([0, 5]).unwrap());

        let c = mkm_check_set(&g, k3(), &g.vertex_set()).unwrap();
        assert!(c.holds);
        assert_eq!(c.ext, g.set_of([0, 6]).unwrap());
        assert_eq!(c.steps, 2);

        let gm = gem(4).unwrap();
        let c = mkm_check_set(&gm, k3(), &gm.vertex_set()).unwrap();
        assert!(!c.holds);
        assert_eq!(c.ext, gm.set_of([0, 4]).unwrap());
        assert_eq!(c.hull, gm.set_of([0, 4, 5]).unwrap());

        assert!(matches!(
            mkm_check_set(&g, k3(), &g.set_of([0, 6]).unwrap()),
            Err(Error::NotConvex { .. })
        ));
    }

    #[test]
    fn refusals() {
        let big = crate::generators::path(20);
        assert_eq!(
            verify_geometry(&big, k3(), DEFAULT_MAX_N),
            Err(Error::CapExceeded { n: 20, cap: 16 })
        );
        let split = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(verify_geometry(&split, k3(), DEFAULT_MAX_N), Err(Error::Disconnected));
    }

    #[test]
    fn all_violations_starts_with_first() {
        let g = gem(4).unwrap();
        let first = verify_geometry(&g, k3(), DEFAULT_MAX_N).unwrap().certificate.unwrap();
        let all = all_violations(&g, k3(), DEFAULT_MAX_N).unwrap();
        assert_eq!(all[0], first);
    }
}
