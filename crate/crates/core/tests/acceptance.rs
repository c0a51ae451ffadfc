//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each, and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lk_convexity::crosscheck::{self, CrosscheckConfig, Target};
use lk_convexity::{
    enumerate_convex_sets, enumerate_gems, extreme_points, figure2_graph, gem, hull, interval,
    interval_of_set, is_convex, necessary_conditions, path, random_connected,
    random_connected_chordal, recognize_l3, verify_geometry, Certificate, ConvexityParams, Graph,
    Seed, VertexSet, DEFAULT_MAX_N,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    check(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn k(k: usize) -> ConvexityParams {
    ConvexityParams::new(k).unwrap()
}

/// Figure labels (1-based) to a vertex set of the Figure-2 graph.
fn labels(g: &Graph, ids: &[usize]) -> VertexSet {
    g.set_of(ids.iter().map(|v| v - 1)).unwrap()
}

fn mirror(s: &VertexSet) -> VertexSet {
    // 1↔7, 2↔5, 3↔6, 4 fixed (0-based)
    const MAP: [usize; 7] = [6, 4, 5, 3, 1, 2, 0];
    VertexSet::from_vertices(7, s.iter().map(|v| MAP[v]))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let g = figure2_graph();
    let k3 = k(3);
    let v = g.vertex_set();
    check(extreme_points(&g, k3, &v).unwrap() == labels(&g, &[1, 7]), || "Ext(V) != {1,7}".into())?;
    let ends = labels(&g, &[1, 7]);
    check(
        interval_of_set(&g, k3, &ends).unwrap() == labels(&g, &[1, 2, 5, 7]),
        || "I[{1,7}] != {1,2,5,7}".into(),
    )?;
    let trace = hull(&g, k3, &ends).unwrap();
    check(trace.fixed_point() == &v && trace.steps() == 2, || {
        format!("hull({{1,7}}) = {} after {} steps", trace.fixed_point(), trace.steps())
    })?;

    let listed: Vec<VertexSet> = [
        &[1, 2, 3, 4][..],
        &[1, 2, 3, 4, 5],
        &[1, 2, 3, 4, 5, 6],
        &[2, 3, 4, 5],
        &[2, 3, 4, 5, 6],
    ]
    .iter()
    .map(|ids| labels(&g, ids))
    .collect();
    let mut nontrivial: BTreeSet<VertexSet> = listed.iter().cloned().collect();
    nontrivial.extend(listed.iter().map(mirror));

    let sets = enumerate_convex_sets(&g, k3, DEFAULT_MAX_N).unwrap();
    let mut seen = BTreeSet::new();
    for s in &sets {
        let allowed = s.is_empty() || *s == v || g.is_clique(s) || nontrivial.contains(s);
        check(allowed, || format!("unexpected convex set {{{}}}", shift(s)))?;
        if nontrivial.contains(s) {
            seen.insert(s.clone());
        }
    }
    check(seen == nontrivial, || "a listed convex set (or its mirror) is missing".into())?;
    // every clique is convex
    for mask in 1u64..(1 << 7) {
        let s = VertexSet::from_mask(7, mask);
        if g.is_clique(&s) {
            check(sets.contains(&s), || format!("clique {{{}}} not enumerated", shift(&s)))?;
        }
    }
    within(start.elapsed(), Duration::from_secs(1))
}

fn shift(s: &VertexSet) -> String {
    s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let g = figure2_graph();
    let k3 = k(3);
    check(recognize_l3(&g).unwrap().accepted, || "recognizer rejects Figure 2".into())?;
    check(verify_geometry(&g, k3, DEFAULT_MAX_N).unwrap().is_geometry, || {
        "oracle rejects Figure 2".into()
    })?;
    for removed in [2, 5] {
        let (h, map) = g.without_vertex(removed - 1).unwrap();
        let rec = recognize_l3(&h).unwrap();
        check(!rec.accepted, || format!("recognizer accepts G-{removed}"))?;
        let far = matches!(rec.certificate, Some(Certificate::FarPair { .. }));
        check(far && rec.is_valid_in(&h), || format!("G-{removed}: bad certificate {rec:?}"))?;
        let oracle = verify_geometry(&h, k3, DEFAULT_MAX_N).unwrap();
        check(!oracle.is_geometry, || format!("oracle accepts G-{removed}"))?;
        let ends = h.set_of([map.to_sub(0).unwrap(), map.to_sub(6).unwrap()]).unwrap();
        let cert = oracle.certificate.unwrap();
        check(cert.set == h.vertex_set() && cert.ext == ends && cert.hull == ends, || {
            format!("G-{removed}: unexpected oracle certificate {cert:?}")
        })?;
        let trace = hull(&h, k3, &ends).unwrap();
        check(trace.fixed_point() == &ends, || format!("G-{removed}: hull({{1,7}}) grew"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))
}

fn crosscheck_clean(config: CrosscheckConfig) -> Result<usize, String> {
    let report = crosscheck::run(&config).map_err(|e| e.to_string())?;
    if let Some(m) = report.mismatches.first() {
        return Err(format!(
            "{} mismatches; first: {} {:?} (recognizer {}, oracle {})",
            report.mismatches.len(),
            m.origin,
            m.graph,
            m.recognizer,
            m.oracle
        ));
    }
    Ok(report.instances)
}

fn exhaustive(target: Target) -> CrosscheckConfig {
    CrosscheckConfig {
        target,
        exhaustive_n: Some(6),
        random_count: 0,
        random_size: 12,
        seed: Seed(42),
    }
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let count = crosscheck_clean(exhaustive(Target::L2))?;
    // 1 + 1 + 4 + 38 + 728 + 26704 connected labeled graphs on 1..=6 vertices
    check(count == 27476, || format!("expected 27476 instances, ran {count}"))?;
    within(start.elapsed(), Duration::from_secs(5 * 60))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let count = crosscheck_clean(CrosscheckConfig {
        random_count: 500,
        ..exhaustive(Target::L3)
    })?;
    check(count == 27476 + 500, || format!("ran {count} instances"))?;
    within(start.elapsed(), Duration::from_secs(15 * 60))
}

fn criterion_5() -> Outcome {
    crosscheck_clean(exhaustive(Target::Monophonic)).map(|_| ())
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    loop {
        let s = VertexSet::from_vertices(n, (0..n).filter(|_| rng.gen_bool(0.3)));
        if !s.is_empty() {
            return s;
        }
    }
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for case in 0..1000 {
        let n = rng.gen_range(2..=12);
        let g = if case % 2 == 0 {
            random_connected(n, rng.gen_range(0.1..0.6), Seed(rng.gen()))
        } else {
            random_connected_chordal(n, rng.gen_range(0.2..0.9), Seed(rng.gen()))
        };
        let kk = rng.gen_range(2..=n.max(2));
        let p = k(kk);
        let s = random_subset(&mut rng, n);
        let mut t = s.clone();
        t.union_with(&random_subset(&mut rng, n));
        let ctx = || format!("case {case}: {g:?}, k={kk}, S={s}");

        let hs = hull(&g, p, &s).unwrap();
        let hull_s = hs.fixed_point();
        check(s.is_subset(hull_s), || format!("{}: not extensive", ctx()))?;
        check(hull(&g, p, hull_s).unwrap().steps() == 0, || format!("{}: not idempotent", ctx()))?;
        check(is_convex(&g, p, hull_s), || format!("{}: hull not convex", ctx()))?;
        let ht = hull(&g, p, &t).unwrap();
        check(hull_s.is_subset(ht.fixed_point()), || format!("{}: not monotone", ctx()))?;

        // extreme points are exactly the x with S \ {x} convex
        let ext = extreme_points(&g, p, hull_s).unwrap();
        for x in hull_s {
            let mut rest = hull_s.clone();
            rest.remove(x);
            check(ext.contains(x) == is_convex(&g, p, &rest), || {
                format!("{}: extreme/simplicial disagree at {x}", ctx())
            })?;
        }

        // cliques are convex
        for x in g.vertices() {
            let mut clique = g.set_of([x]).unwrap();
            for y in g.neighbors(x) {
                if clique.iter().all(|c| g.adjacent(c, y)) {
                    clique.insert(y);
                }
            }
            check(is_convex(&g, p, &clique), || format!("{}: clique {clique} not convex", ctx()))?;
        }

        // intersection of two convex sets is convex
        let a = hull_s.clone();
        let b = hull(&g, p, &random_subset(&mut rng, n)).unwrap().into_fixed_point();
        check(is_convex(&g, p, &a.intersection(&b)), || {
            format!("{}: intersection of {a} and {b} not convex", ctx())
        })?;
        if n <= 10 && case % 10 == 0 {
            let sets = enumerate_convex_sets(&g, p, DEFAULT_MAX_N).unwrap();
            for _ in 0..20 {
                let x = &sets[rng.gen_range(0..sets.len())];
                let y = &sets[rng.gen_range(0..sets.len())];
                check(sets.binary_search(&x.intersection(y)).is_ok(), || {
                    format!("{}: {x} ∩ {y} missing from convex sets", ctx())
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let k3 = k(3);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 100 {
        attempts += 1;
        check(attempts < 100_000, || "could not sample enough instances".into())?;
        let n = rng.gen_range(3..=10);
        let g = random_connected_chordal(n, rng.gen_range(0.3..0.95), Seed(rng.gen()));
        if !necessary_conditions(&g, k3).unwrap().accepted {
            continue;
        }
        accepted += 1;
        for s in enumerate_convex_sets(&g, k3, DEFAULT_MAX_N).unwrap() {
            if s.is_empty() {
                continue;
            }
            let (h, _) = g.induced_subgraph(&s).unwrap();
            if h.is_connected() {
                let d = h.diameter().unwrap();
                check(d <= 3, || format!("{g:?}: convex set {s} has diameter {d}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let limit = Duration::from_secs(1);

    let start = Instant::now();
    let g4 = gem(4).unwrap();
    let v = recognize_l3(&g4).unwrap();
    check(
        matches!(v.certificate, Some(Certificate::UnsolvedGem(_))) && v.is_valid_in(&g4),
        || format!("gem(4): {v:?}"),
    )?;
    within(start.elapsed(), limit)?;

    let start = Instant::now();
    check(recognize_l3(&gem(3).unwrap()).unwrap().accepted, || "gem(3) rejected".into())?;
    within(start.elapsed(), limit)?;

    let start = Instant::now();
    check(recognize_l3(&path(4)).unwrap().accepted, || "P_4 rejected".into())?;
    within(start.elapsed(), limit)?;

    let start = Instant::now();
    let g5 = gem(5).unwrap();
    let count = enumerate_gems(&g5, 4).unwrap().count();
    check(count == 3, || format!("gem(5) yields {count} gems"))?;
    within(start.elapsed(), limit)?;

    // I[x_0, x_4] in gem(4)
    check(interval(&g4, k(3), 0, 4).unwrap() == g4.set_of([0, 4, 5]).unwrap(), || {
        "gem(4) end interval".into()
    })
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 figure-2 values and convex-set list", criterion_1),
        ("2 non-hereditary demonstration", criterion_2),
        ("3 l2 recognizer == oracle, all connected n<=6", criterion_3),
        ("4 l3 recognizer == oracle, n<=6 + 500 random chordal n<=12", criterion_4),
        ("5 monophonic oracle == chordality, n<=6", criterion_5),
        ("6 hull laws, C2, cliques, extreme points (1000 cases)", criterion_6),
        ("7 connected convex sets have diameter <= 3 (100 instances)", criterion_7),
        ("8 gem machinery", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(()) => println!("PASS  criterion {name}  ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}  ({:.2?}): {why}", start.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
