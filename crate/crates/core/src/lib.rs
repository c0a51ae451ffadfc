//! Convexity spaces on graphs whose convex sets are closed under induced
//! paths of length at most `k`.
//!
//! The crate provides the interval and hull operators of this convexity, its
//! extreme points, an exhaustive convex-geometry oracle, and structural
//! recognizers for the cases `k = 2` and `k = 3`, all with re-checkable
//! certificates.
//!
//! ```
//! use lk_convexity::{figure2_graph, hull, ConvexityParams};
//!
//! let g = figure2_graph();
//! let k3 = ConvexityParams::new(3).unwrap();
//! let trace = hull(&g, k3, &g.set_of([0, 6]).unwrap()).unwrap();
//! assert_eq!(trace.steps(), 2);
//! assert_eq!(trace.fixed_point(), &g.vertex_set());
//! ```

pub mod chordal;
pub mod convexity;
pub mod crosscheck;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod paths;
pub mod recognize;
pub mod vertex_set;

pub use chordal::{is_chordal, Chordality, HoleWitness};
pub use convexity::{
    convexity_violation, enumerate_convex_sets, extreme_points, hull, interval, interval_of_set,
    is_convex, ConvexityParams, HullTrace, IntervalTable, DEFAULT_MAX_N,
};
pub use error::{Error, Result};
pub use generators::{
    all_connected_graphs, complete, cycle, extend_chordal, figure2_graph, gem, path,
    random_connected, random_connected_chordal, random_gem_seeded, random_subtree_chordal,
    random_trivially_perfect, star, Seed,
};
pub use graph::{Graph, Relabeling};
pub use oracle::{mkm_check_set, verify_geometry, GeometryVerdict, MkmCheck, MkmViolation};
pub use paths::{contains_induced_path, induced_paths_between, InducedPath};
pub use recognize::{
    enumerate_gems, is_gem_solved, necessary_conditions, recognize_l2, recognize_l3, Certificate,
    GemWitness, RecognitionVerdict, SolvedGem,
};
pub use vertex_set::VertexSet;
