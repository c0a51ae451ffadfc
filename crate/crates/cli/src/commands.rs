use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use lk_convexity::crosscheck::{self, CrosscheckConfig, Target};
use lk_convexity::io::{read_graph, write_graph, Format};
use lk_convexity::oracle::all_violations;
use lk_convexity::vertex_set::parse_ids;
use lk_convexity::*;
use serde_json::json;

use crate::report::{InputDigest, Outcome};
use crate::{Command, Family, GraphInput};

pub struct Context {
    pub verbose: bool,
}

pub struct Output {
    pub outcome: Outcome,
    pub input: Option<InputDigest>,
    pub result: serde_json::Value,
    pub text: String,
}

/// An operational failure: bad input, bad arguments, refused work. Exit 2.
#[derive(Debug)]
pub struct CliError(String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

fn fail<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError(msg.into()))
}

type CliResult<T> = std::result::Result<T, CliError>;
type CmdResult = CliResult<Output>;

struct Loaded {
    graph: Graph,
    offset: usize,
    digest: InputDigest,
}

impl Loaded {
    fn open(path: &Path) -> CliResult<Self> {
        let parsed = match read_graph(path) {
            Err(e) => return fail(format!("cannot read {}: {e}", path.display())),
            Ok(Err(e)) => return fail(format!("{}: {e}", path.display())),
            Ok(Ok(p)) => p,
        };
        let digest = InputDigest {
            path: path.display().to_string(),
            format: match parsed.format {
                Format::Canonical => "canonical",
                Format::Dimacs => "dimacs",
            }
            .into(),
            vertices: parsed.graph.n(),
            edges: parsed.graph.edge_count(),
        };
        Ok(Loaded {
            offset: parsed.format.label_offset(),
            graph: parsed.graph,
            digest,
        })
    }

    fn label(&self, v: usize) -> usize {
        v + self.offset
    }

    fn labels(&self, vs: impl IntoIterator<Item = usize>) -> Vec<usize> {
        vs.into_iter().map(|v| self.label(v)).collect()
    }

    fn set_text(&self, s: &VertexSet) -> String {
        format!("{{{}}}", join(&self.labels(s.iter()), ","))
    }

    fn path_text(&self, vs: &[usize]) -> String {
        join(&self.labels(vs.iter().copied()), "-")
    }

    fn parse_vertices(&self, text: &str) -> CliResult<Vec<usize>> {
        let labels = parse_ids(text).map_err(|e| CliError(format!("bad vertex list {text:?}: {e}")))?;
        labels
            .into_iter()
            .map(|l| match l.checked_sub(self.offset) {
                Some(v) if v < self.graph.n() => Ok(v),
                _ => fail(format!("vertex {l} is not in the graph")),
            })
            .collect()
    }

    fn parse_set(&self, text: &str) -> CliResult<VertexSet> {
        let vs = self.parse_vertices(text)?;
        if vs.is_empty() {
            return fail("the vertex set is empty");
        }
        Ok(self.graph.set_of(vs)?)
    }

    fn output(self, outcome: Outcome, result: serde_json::Value, text: String) -> Output {
        Output {
            outcome,
            input: Some(self.digest),
            result,
            text,
        }
    }
}

fn join(vs: &[usize], sep: &str) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep)
}

fn params(ctx: &Context, k: usize, n: usize) -> CliResult<ConvexityParams> {
    let p = ConvexityParams::new(k)?;
    if ctx.verbose && p.is_clamped(n) {
        eprintln!("note: k = {k} exceeds n - 1 = {}; using {}", n.saturating_sub(1), p.effective_k(n));
    }
    Ok(p)
}

fn default_cap() -> CliResult<usize> {
    match std::env::var("CONVEXITY_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError(format!("CONVEXITY_MAX_N must be a number, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

pub fn run(ctx: &Context, command: Command) -> CmdResult {
    match command {
        Command::Recognize { file, k } => recognize(&file, k),
        Command::Interval { input, pair } => interval_cmd(ctx, &input, &pair),
        Command::Hull { input, set } => hull_cmd(ctx, &input, &set),
        Command::Extremes { input, set } => extremes(ctx, &input, set.as_deref()),
        Command::Gems { file, min_n } => gems(&file, min_n),
        Command::Oracle { input, max_n, all } => oracle(ctx, &input, max_n, all),
        Command::Crosscheck {
            k,
            exhaustive_n,
            random,
            size,
            seed,
            dump_dir,
        } => crosscheck_cmd(ctx, k, exhaustive_n, random, size, seed, dump_dir),
        Command::Generate {
            family,
            n,
            seed,
            density,
            dimacs,
            out,
        } => generate(family, n, seed, density, dimacs, out),
        Command::DemoNonHereditary => demo(),
    }
}

fn certificate_text(l: &Loaded, c: &Certificate) -> String {
    match c {
        Certificate::Hole(h) => format!("induced cycle {}", l.path_text(h.cycle())),
        Certificate::P4(p) => format!("induced P4 {}", l.path_text(p.vertices())),
        Certificate::FarPair { u, v, distance } => {
            format!("vertices {} and {} at distance {distance}", l.label(*u), l.label(*v))
        }
        Certificate::UnsolvedGem(w) => format!(
            "unsolved gem, base {} apex {}",
            l.path_text(w.base().vertices()),
            l.label(w.apex())
        ),
    }
}

fn recognize(file: &Path, k: u8) -> CmdResult {
    let l = Loaded::open(file)?;
    let verdict = if k == 2 {
        recognize_l2(&l.graph)?
    } else {
        recognize_l3(&l.graph)?
    };
    if !verdict.is_valid_in(&l.graph) {
        return fail("internal error: recognizer output failed re-validation");
    }
    let mut text = String::new();
    match &verdict.certificate {
        None => {
            writeln!(text, "accepted: l^{k} convex geometry").unwrap();
            for s in &verdict.solved_gems {
                writeln!(
                    text,
                    "  gem base {} apex {} solved by {}",
                    l.path_text(s.gem.base().vertices()),
                    l.label(s.gem.apex()),
                    l.path_text(s.solving_path.vertices())
                )
                .unwrap();
            }
        }
        Some(c) => writeln!(text, "rejected: {}", certificate_text(&l, c)).unwrap(),
    }
    let result = json!({ "k": k, "verdict": verdict.to_json(l.offset) });
    Ok(l.output(Outcome::from_bool(verdict.accepted), result, text))
}

fn interval_cmd(ctx: &Context, input: &GraphInput, pair: &str) -> CmdResult {
    let l = Loaded::open(&input.file)?;
    let p = params(ctx, input.k, l.graph.n())?;
    let [u, v] = l.parse_vertices(pair)?[..] else {
        return fail(format!("--pair needs exactly two vertices, got {pair:?}"));
    };
    let s = interval(&l.graph, p, u, v)?;
    let text = format!("I[{},{}] = {}\n", l.label(u), l.label(v), l.set_text(&s));
    let result = json!({
        "k": input.k,
        "pair": [l.label(u), l.label(v)],
        "interval": l.labels(s.iter()),
    });
    Ok(l.output(Outcome::Affirmative, result, text))
}

fn hull_cmd(ctx: &Context, input: &GraphInput, set: &str) -> CmdResult {
    let l = Loaded::open(&input.file)?;
    let p = params(ctx, input.k, l.graph.n())?;
    let s = l.parse_set(set)?;
    let trace = hull(&l.graph, p, &s)?;
    let mut text = String::new();
    for (j, it) in trace.iterates().iter().enumerate() {
        writeln!(text, "I^{j} = {}", l.set_text(it)).unwrap();
    }
    writeln!(text, "hull = {} (steps = {})", l.set_text(trace.fixed_point()), trace.steps()).unwrap();
    let result = json!({
        "k": input.k,
        "set": l.labels(s.iter()),
        "hull": l.labels(trace.fixed_point().iter()),
        "trace": trace.to_json(l.offset),
    });
    Ok(l.output(Outcome::Affirmative, result, text))
}

fn extremes(ctx: &Context, input: &GraphInput, set: Option<&str>) -> CmdResult {
    let l = Loaded::open(&input.file)?;
    let p = params(ctx, input.k, l.graph.n())?;
    let s = match set {
        Some(text) => l.parse_set(text)?,
        None => l.graph.vertex_set(),
    };
    if let Some((u, v, x)) = convexity_violation(&l.graph, p, &s) {
        if !interval(&l.graph, p, u, v)?.contains(x) || s.contains(x) {
            return fail("internal error: convexity violation failed re-validation");
        }
        let text = format!(
            "not convex: {} lies in I[{},{}] but not in the set\n",
            l.label(x),
            l.label(u),
            l.label(v)
        );
        let result = json!({
            "k": input.k,
            "set": l.labels(s.iter()),
            "convex": false,
            "violation": { "pair": [l.label(u), l.label(v)], "escaped": l.label(x) },
        });
        return Ok(l.output(Outcome::Negative, result, text));
    }
    let ext = extreme_points(&l.graph, p, &s)?;
    let text = format!("Ext = {}\n", l.set_text(&ext));
    let result = json!({
        "k": input.k,
        "set": l.labels(s.iter()),
        "convex": true,
        "extreme_points": l.labels(ext.iter()),
    });
    Ok(l.output(Outcome::Affirmative, result, text))
}

fn gems(file: &Path, min_n: usize) -> CmdResult {
    let l = Loaded::open(file)?;
    let mut text = String::new();
    let mut listed = Vec::new();
    let mut solved_count = 0;
    for w in enumerate_gems(&l.graph, min_n)? {
        let solving = is_gem_solved(&l.graph, &w)?;
        let mut entry = w.to_json(l.offset);
        write!(text, "gem base {} apex {}: ", l.path_text(w.base().vertices()), l.label(w.apex())).unwrap();
        match &solving {
            Some(path) => {
                let check = SolvedGem { gem: w.clone(), solving_path: path.clone() };
                if !check.is_valid_in(&l.graph) {
                    return fail("internal error: solving path failed re-validation");
                }
                solved_count += 1;
                writeln!(text, "solved by {}", l.path_text(path.vertices())).unwrap();
                entry["solving_path"] = json!(l.labels(path.vertices().iter().copied()));
            }
            None => {
                writeln!(text, "unsolved").unwrap();
                entry["solving_path"] = serde_json::Value::Null;
            }
        }
        listed.push(entry);
    }
    let total = listed.len();
    writeln!(text, "{total} gems, {solved_count} solved, {} unsolved", total - solved_count).unwrap();
    let result = json!({
        "min_n": min_n,
        "gems": listed,
        "total": total,
        "solved": solved_count,
        "unsolved": total - solved_count,
    });
    Ok(l.output(Outcome::Affirmative, result, text))
}

fn oracle(ctx: &Context, input: &GraphInput, max_n: Option<usize>, all: bool) -> CmdResult {
    let l = Loaded::open(&input.file)?;
    let p = params(ctx, input.k, l.graph.n())?;
    let cap = match max_n {
        Some(c) => c,
        None => default_cap()?,
    };
    let violations = if all {
        all_violations(&l.graph, p, cap)?
    } else {
        verify_geometry(&l.graph, p, cap)?.certificate.into_iter().collect()
    };
    if violations.iter().any(|c| !c.is_valid_in(&l.graph, p)) {
        return fail("internal error: oracle certificate failed re-validation");
    }
    let verdict = GeometryVerdict {
        is_geometry: violations.is_empty(),
        certificate: violations.first().cloned(),
    };
    let mut text = String::new();
    if verdict.is_geometry {
        writeln!(text, "convex geometry (k = {})", input.k).unwrap();
    } else {
        writeln!(text, "not a convex geometry (k = {})", input.k).unwrap();
        for c in &violations {
            writeln!(
                text,
                "  S = {}: Ext(S) = {}, hull(Ext(S)) = {}",
                l.set_text(&c.set),
                l.set_text(&c.ext),
                l.set_text(&c.hull)
            )
            .unwrap();
        }
    }
    let mut result = json!({ "k": input.k, "verdict": verdict.to_json(l.offset) });
    if all {
        result["violations"] = violations.iter().map(|c| c.to_json(l.offset)).collect();
    }
    Ok(l.output(Outcome::from_bool(verdict.is_geometry), result, text))
}

fn crosscheck_cmd(
    ctx: &Context,
    k: u8,
    exhaustive_n: Option<u8>,
    random: usize,
    size: usize,
    seed: u64,
    dump_dir: Option<PathBuf>,
) -> CmdResult {
    let config = CrosscheckConfig {
        target: if k == 2 { Target::L2 } else { Target::L3 },
        exhaustive_n: exhaustive_n.map(usize::from),
        random_count: random,
        random_size: size,
        seed: Seed(seed),
    };
    if ctx.verbose {
        eprintln!("note: cross-checking {config:?}");
    }
    let report = crosscheck::run(&config)?;
    let mut dumped = Vec::new();
    if let Some(dir) = &dump_dir {
        if !report.mismatches.is_empty() {
            std::fs::create_dir_all(dir).map_err(|e| CliError(format!("cannot create {}: {e}", dir.display())))?;
        }
        for m in &report.mismatches {
            let path = dir.join(format!("mismatch-{}.txt", m.index));
            let body = format!("# {}\n{}", m.origin, write_graph(&m.graph, Format::Canonical));
            std::fs::write(&path, body).map_err(|e| CliError(format!("cannot write {}: {e}", path.display())))?;
            dumped.push(path.display().to_string());
        }
    }
    let mut text = format!(
        "{} instances, {} accepted by the recognizer, {} mismatches\n",
        report.instances,
        report.accepted,
        report.mismatches.len()
    );
    for m in &report.mismatches {
        writeln!(text, "  {}: recognizer {}, oracle {}", m.origin, m.recognizer, m.oracle).unwrap();
    }
    for p in &dumped {
        writeln!(text, "  wrote {p}").unwrap();
    }
    let result = json!({
        "k": k,
        "instances": report.instances,
        "accepted": report.accepted,
        "mismatches": report.mismatches,
        "dumped": dumped,
    });
    Ok(Output {
        outcome: Outcome::from_bool(report.is_clean()),
        input: None,
        result,
        text,
    })
}

fn generate(family: Family, n: usize, seed: u64, density: f64, dimacs: bool, out: Option<PathBuf>) -> CmdResult {
    let min = match family {
        Family::Figure2 => 0,
        Family::Gem => 3,
        Family::Cycle => 3,
        _ => 1,
    };
    if n < min {
        return fail(format!("{family:?} needs n >= {min}"));
    }
    if !(0.0..=1.0).contains(&density) {
        return fail("density must lie in [0, 1]");
    }
    let seed = Seed(seed);
    let g = match family {
        Family::Figure2 => figure2_graph(),
        Family::Gem => gem(n)?,
        Family::Path => path(n),
        Family::Cycle => cycle(n),
        Family::Complete => complete(n),
        Family::Star => star(n),
        Family::TriviallyPerfect => random_trivially_perfect(n, seed),
        Family::Chordal => random_connected_chordal(n, density, seed),
        Family::Random => random_connected(n, density, seed),
    };
    let format = if dimacs { Format::Dimacs } else { Format::Canonical };
    let body = write_graph(&g, format);
    let text = match &out {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| CliError(format!("cannot write {}: {e}", path.display())))?;
            format!("wrote {} ({} vertices, {} edges)\n", path.display(), g.n(), g.edge_count())
        }
        None => body.clone(),
    };
    let result = json!({
        "vertices": g.n(),
        "edges": g.edge_count(),
        "format": if dimacs { "dimacs" } else { "canonical" },
        "out": out.map(|p| p.display().to_string()),
        "graph": body,
    });
    Ok(Output {
        outcome: Outcome::Affirmative,
        input: None,
        result,
        text,
    })
}

/// One row of the non-hereditary demonstration, in 1-based figure labels.
fn demo_row(host: &Graph, removed: Option<usize>) -> CliResult<(serde_json::Value, String, bool)> {
    let k3 = ConvexityParams::new(3)?;
    let (g, map) = match removed {
        Some(v) => host.without_vertex(v)?,
        None => host.induced_subgraph(&host.vertex_set())?,
    };
    let label = |v: usize| map.to_host(v) + 1;
    let labels = |s: &VertexSet| map.set_to_host(s).iter().map(|v| v + 1).collect::<Vec<_>>();
    let verdict = recognize_l3(&g)?;
    let geometry = verify_geometry(&g, k3, DEFAULT_MAX_N)?;
    if !verdict.is_valid_in(&g) || geometry.certificate.as_ref().is_some_and(|c| !c.is_valid_in(&g, k3)) {
        return fail("internal error: certificate failed re-validation");
    }
    let name = match removed {
        Some(v) => format!("figure2 - {{{}}}", v + 1),
        None => "figure2".to_string(),
    };
    let mut text = format!(
        "{name}: recognizer {}, oracle {}",
        if verdict.accepted { "accepts" } else { "rejects" },
        if geometry.is_geometry { "geometry" } else { "not a geometry" }
    );
    let mut cert = serde_json::Value::Null;
    if let Some(Certificate::FarPair { u, v, distance }) = &verdict.certificate {
        write!(text, "; far pair {},{} at distance {distance}", label(*u), label(*v)).unwrap();
        cert = json!({ "kind": "far_pair", "u": label(*u), "v": label(*v), "distance": distance });
    } else if let Some(c) = &verdict.certificate {
        write!(text, "; certificate {}", c.kind()).unwrap();
        cert = json!({ "kind": c.kind() });
    }
    let mut mkm = serde_json::Value::Null;
    if let Some(c) = &geometry.certificate {
        write!(
            text,
            "; Ext(V) = {{{}}}, hull(Ext(V)) = {{{}}}",
            join(&labels(&c.ext), ","),
            join(&labels(&c.hull), ",")
        )
        .unwrap();
        mkm = json!({ "set": labels(&c.set), "ext": labels(&c.ext), "hull": labels(&c.hull) });
    }
    text.push('\n');
    let expected_accept = !matches!(removed, Some(1) | Some(4));
    let far_pair_ok = expected_accept || matches!(verdict.certificate, Some(Certificate::FarPair { .. }));
    let ok = verdict.accepted == expected_accept && geometry.is_geometry == verdict.accepted && far_pair_ok;
    let row = json!({
        "graph": name,
        "accepted": verdict.accepted,
        "geometry": geometry.is_geometry,
        "certificate": cert,
        "oracle_certificate": mkm,
        "as_expected": ok,
    });
    Ok((row, text, ok))
}

fn demo() -> CmdResult {
    let g = figure2_graph();
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut all_ok = true;
    for removed in [None, Some(1), Some(4), Some(2)] {
        let (row, line, ok) = demo_row(&g, removed)?;
        rows.push(row);
        text.push_str(&line);
        all_ok &= ok;
    }
    writeln!(
        text,
        "{}",
        if all_ok {
            "pattern reproduced: deleting a vertex can destroy the l^3 convex geometry property"
        } else {
            "pattern NOT reproduced"
        }
    )
    .unwrap();
    let result = json!({ "rows": rows, "reproduced": all_ok });
    Ok(Output {
        outcome: Outcome::from_bool(all_ok),
        input: None,
        result,
        text,
    })
}
