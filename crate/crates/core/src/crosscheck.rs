//! Recognizer-versus-oracle agreement runs over exhaustive and random
//! instance families.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chordal::is_chordal;
use crate::convexity::{ConvexityParams, DEFAULT_MAX_N};
use crate::error::{Error, Result};
use crate::generators::{
    all_connected_graphs, random_connected_chordal, random_gem_seeded, random_subtree_chordal,
    random_trivially_perfect, Seed,
};
use crate::graph::Graph;
use crate::oracle::verify_geometry;
use crate::recognize::{recognize_l2, recognize_l3};

/// Which structural test is compared against the exhaustive oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// `recognize_l2` vs the oracle at k = 2.
    L2,
    /// `recognize_l3` vs the oracle at k = 3.
    L3,
    /// chordality vs the oracle at k = n - 1 (monophonic convexity).
    Monophonic,
}

impl Target {
    pub fn params(self, n: usize) -> ConvexityParams {
        match self {
            Target::L2 => ConvexityParams::new(2).unwrap(),
            Target::L3 => ConvexityParams::new(3).unwrap(),
            Target::Monophonic => ConvexityParams::monophonic(n),
        }
    }

    pub fn recognize(self, g: &Graph) -> Result<bool> {
        Ok(match self {
            Target::L2 => recognize_l2(g)?.accepted,
            Target::L3 => recognize_l3(g)?.accepted,
            Target::Monophonic => is_chordal(g).is_chordal(),
        })
    }

    pub fn oracle(self, g: &Graph) -> Result<bool> {
        Ok(verify_geometry(g, self.params(g.n()), DEFAULT_MAX_N.max(g.n()))?.is_geometry)
    }
}

#[derive(Clone, Debug)]
pub struct CrosscheckConfig {
    pub target: Target,
    /// Run every connected labeled graph with `1..=n` vertices.
    pub exhaustive_n: Option<usize>,
    pub random_count: usize,
    /// Upper bound on the vertex count of random instances.
    pub random_size: usize,
    pub seed: Seed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: usize,
    pub origin: String,
    #[serde(skip)]
    pub graph: Graph,
    pub recognizer: bool,
    pub oracle: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub instances: usize,
    pub accepted: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrosscheckReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// The random ensemble, cycling through four chordal families by index:
/// clique-attachment graphs, gem-seeded graphs, interval graphs, and
/// trivially perfect graphs.
pub fn random_instance(index: usize, max_size: usize, seed: Seed) -> Graph {
    let mut rng = seed.rng(index as u64);
    let lo = max_size.min(4);
    let n = rng.gen_range(lo..=max_size);
    let sub = Seed(rng.gen());
    match index % 4 {
        1 if n >= 6 => random_gem_seeded(n, sub),
        2 => {
            let host = rng.gen_range(2..=n.max(2));
            let reach = rng.gen_range(1..=host);
            random_subtree_chordal(n, host, reach, true, sub)
        }
        3 => random_trivially_perfect(n, sub),
        _ => random_connected_chordal(n, rng.gen_range(0.2..0.95), sub),
    }
}

pub fn instances(config: &CrosscheckConfig) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    if let Some(max_n) = config.exhaustive_n {
        for n in 1..=max_n {
            for (i, g) in all_connected_graphs(n)?.enumerate() {
                out.push((format!("exhaustive n={n} #{i}"), g));
            }
        }
    }
    if config.random_count > 0 {
        if config.random_size == 0 || config.random_size > DEFAULT_MAX_N {
            return Err(Error::InvalidParameter(format!(
                "random size must lie in 1..={DEFAULT_MAX_N}"
            )));
        }
        for i in 0..config.random_count {
            out.push((
                format!("random seed={} #{i}", config.seed.0),
                random_instance(i, config.random_size, config.seed),
            ));
        }
    }
    Ok(out)
}

/// Runs both sides on every instance. Work is spread across threads; the
/// report lists mismatches in instance order.
pub fn run(config: &CrosscheckConfig) -> Result<CrosscheckReport> {
    let target = config.target;
    let all = instances(config)?;
    let outcomes: Vec<(bool, bool)> = all
        .par_iter()
        .map(|(_, g)| Ok((target.recognize(g)?, target.oracle(g)?)))
        .collect::<Result<_>>()?;
    let mut report = CrosscheckReport {
        instances: all.len(),
        ..Default::default()
    };
    for (index, ((origin, g), (recognizer, oracle))) in all.into_iter().zip(outcomes).enumerate() {
        if recognizer {
            report.accepted += 1;
        }
        if recognizer != oracle {
            report.mismatches.push(Mismatch {
                index,
                origin,
                graph: g,
                recognizer,
                oracle,
            });
        }
    }
    Ok(report)
}
