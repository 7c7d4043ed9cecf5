//! Acceptance run: one line per criterion, nonzero exit on any failure.

use std::time::Instant;

use num_rational::Rational64;
use rand::Rng;
use sgcover::barbell::{eulerian_scdc, gbarbell_scdc, gcycle_cover, one_two_cover, validate_gbarbell, OneTwoCover};
use sgcover::decomp::{cover_0123, tree_graph_barbell};
use sgcover::engine::{
    chained_bound, exact_scc_signed, scc_upper_cover, theorem_bounds, verify_cover, Branch, CoverOptions, UpperCover,
};
use sgcover::format::parse_instance;
use sgcover::generate::{random_even_eulerian, random_gbarbell, random_instance, random_tree_graph, rng, BarbellShape, GenSpec};
use sgcover::graph::Dsu;
use sgcover::switching::{negativeness_exact, switch, verify_minimal_signature};
use sgcover::unsigned::{circuit_cover_bridgeless, exact_scc_unsigned};
use sgcover::{fixtures, EdgeId, Limits, SignedGraph};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail }
    } else {
        let shown: Vec<&String> = failures.iter().take(3).collect();
        Outcome {
            pass: false,
            detail: format!("{detail}; {} failures, first: {shown:?}", failures.len()),
        }
    }
}

fn components_without(g: &SignedGraph, skip: &[EdgeId]) -> usize {
    let mut dsu = Dsu::new(g.vertex_count());
    let mut parts = g.vertex_count();
    for e in g.edge_ids() {
        if !skip.contains(&e) && dsu.union(g.edge(e).u, g.edge(e).v) {
            parts -= 1;
        }
    }
    parts
}

/// Bridges, partner sets and bridge classes by plain component counting.
struct CutOracle {
    both_sides_negative: Vec<EdgeId>,
    odd_side: Vec<EdgeId>,
    partner_union: Vec<EdgeId>,
}

fn cut_oracle(g: &SignedGraph) -> CutOracle {
    let base = components_without(g, &[]);
    let bridges: Vec<EdgeId> = g.edge_ids().filter(|&e| components_without(g, &[e]) > base).collect();
    let mut both_sides_negative = Vec::new();
    let mut odd_side = Vec::new();
    for &b in &bridges {
        let mut dsu = Dsu::new(g.vertex_count());
        for f in g.edge_ids().filter(|&f| f != b) {
            dsu.union(g.edge(f).u, g.edge(f).v);
        }
        let ru = dsu.find(g.edge(b).u);
        let (mut nu, mut nv) = (0, 0);
        for f in g.edge_ids().filter(|&f| f != b && g.is_negative(f)) {
            if dsu.find(g.edge(f).u) == ru {
                nu += 1;
            } else if dsu.find(g.edge(f).u) == dsu.find(g.edge(b).v) {
                nv += 1;
            }
        }
        if nu > 0 && nv > 0 {
            both_sides_negative.push(b);
        }
        if nu % 2 == 1 || nv % 2 == 1 {
            odd_side.push(b);
        }
    }
    let mut partner_union = Vec::new();
    for e in g.negative_edges() {
        partner_union.push(e);
        if g.edge(e).is_loop() || bridges.contains(&e) {
            continue;
        }
        for f in g.edge_ids() {
            if f != e && !bridges.contains(&f) && components_without(g, &[e, f]) > base {
                partner_union.push(f);
            }
        }
    }
    partner_union.sort_unstable();
    partner_union.dedup();
    CutOracle {
        both_sides_negative,
        odd_side,
        partner_union,
    }
}

/// Bounds recomputed on the graph without its positive loops.
fn stripped_bounds(r: &Run, k: i64) -> sgcover::engine::BoundReport {
    let e = r.g.edge_count() - r.out.positive_loops.len();
    theorem_bounds(e as i64, r.g.vertex_count() as i64, r.eps, k).unwrap()
}

struct Run {
    g: SignedGraph,
    eps: i64,
    out: UpperCover,
}

/// Corpus of seeded s-bridgeless instances with negativeness at least 2.
fn corpus(count: usize, seed: u64, even: bool, limits: &Limits) -> (Vec<SignedGraph>, usize) {
    let mut r = rng(seed);
    let mut out = Vec::new();
    let mut skipped = 0;
    while out.len() < count {
        let n = r.gen_range(2..=10);
        let m = r.gen_range((n + 1).min(20)..=20);
        let neg = r.gen_range(2..=m.min(8));
        let mut spec = GenSpec::new(n, m, neg);
        spec.s_bridgeless = true;
        spec.min_negativeness = 2;
        spec.g_bridgeless_even = even;
        spec.max_attempts = 200;
        match random_instance(&spec, r.gen(), limits) {
            Ok(g) => out.push(g),
            Err(_) => skipped += 1,
        }
    }
    (out, skipped)
}

fn run_all(graphs: &[SignedGraph], limits: &Limits) -> (Vec<Run>, Vec<String>) {
    let mut runs = Vec::new();
    let mut failures = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let eps = match negativeness_exact(g, limits) {
            Ok(c) => c.epsilon_n as i64,
            Err(e) => {
                failures.push(format!("#{i}: {e}"));
                continue;
            }
        };
        match scc_upper_cover(g, limits, CoverOptions::default()) {
            Ok(out) => runs.push(Run { g: g.clone(), eps, out }),
            Err(e) => failures.push(format!("#{i}: {e}")),
        }
    }
    (runs, failures)
}

fn le(len: usize, bound: Rational64) -> bool {
    Rational64::from_integer(len as i64) <= bound
}

fn criterion_1(runs: &[Run], gen_failures: &[String], secs: f64, count: usize) -> Outcome {
    let mut failures = gen_failures.to_vec();
    let mut with_loops = 0;
    for (i, r) in runs.iter().enumerate() {
        if !verify_cover(&r.g, &r.out.cover, None).valid {
            failures.push(format!("#{i}: invalid cover"));
        }
        with_loops += !r.out.positive_loops.is_empty() as usize;
        let b = stripped_bounds(r, 3);
        if !le(r.out.stripped_length, b.bound_general) {
            failures.push(format!("#{i}: length {} > {}", r.out.stripped_length, b.bound_general));
        }
    }
    if secs > 60.0 {
        failures.push(format!("runtime {secs:.1}s over 60s"));
    }
    outcome(
        &failures,
        format!("{count} instances ({with_loops} with positive loops stripped), {secs:.1}s"),
    )
}

fn criterion_2(runs: &[Run], gen_failures: &[String]) -> Outcome {
    let mut failures = gen_failures.to_vec();
    for (i, r) in runs.iter().enumerate() {
        let b = stripped_bounds(r, 2);
        if r.out.branch != (Branch::Pair { k: 2 }) {
            failures.push(format!("#{i}: branch {:?}", r.out.branch));
        }
        if !le(r.out.stripped_length, b.bound_even) {
            failures.push(format!("#{i}: length {} > {}", r.out.stripped_length, b.bound_even));
        }
    }
    outcome(&failures, format!("{} g-bridgeless even instances", runs.len()))
}

fn criterion_3(sets: &[&[Run]]) -> Outcome {
    let mut failures = Vec::new();
    let mut n = 0;
    for runs in sets {
        for (i, r) in runs.iter().enumerate() {
            n += 1;
            let b = stripped_bounds(r, 3);
            if !le(r.out.stripped_length, b.corollary_bound) {
                failures.push(format!("#{i}: length {} > {}", r.out.stripped_length, b.corollary_bound));
            }
        }
    }
    outcome(&failures, format!("{n} instances"))
}

fn exactly_twice(g: &SignedGraph, host: &[EdgeId], f: &sgcover::CoverFamily) -> Result<(), String> {
    let report = verify_cover(g, f, None);
    if !report.member_issues.is_empty() {
        return Err(format!("member issues {:?}", report.member_issues));
    }
    for e in g.edge_ids() {
        let want = if host.contains(&e) { 2 } else { 0 };
        if report.multiplicities[e] != want {
            return Err(format!("e{e} covered {} times", report.multiplicities[e]));
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut r = rng(44);
    for i in 0..200 {
        let n = r.gen_range(1..=10);
        let len = r.gen_range(n..=40);
        let g = random_even_eulerian(n, len, &mut r);
        let all: Vec<EdgeId> = g.edge_ids().collect();
        match eulerian_scdc(&g, &all) {
            Ok(f) => {
                if let Err(e) = exactly_twice(&g, &all, &f) {
                    failures.push(format!("eulerian #{i}: {e}"));
                }
            }
            Err(e) => failures.push(format!("eulerian #{i}: {e}")),
        }
    }
    for i in 0..100 {
        let shape = BarbellShape {
            pieces: r.gen_range(1..=5),
            piece_size: r.gen_range(1..=4),
            piece_len: r.gen_range(1..=8),
            max_path: 3,
        };
        let (g, cert) = random_gbarbell(shape, &mut r).unwrap();
        match gbarbell_scdc(&g, &cert) {
            Ok(f) => {
                if let Err(e) = exactly_twice(&g, &cert.host, &f) {
                    failures.push(format!("barbell #{i}: {e}"));
                }
            }
            Err(e) => failures.push(format!("barbell #{i}: {e}")),
        }
    }
    outcome(&failures, "200 eulerian graphs, 100 generalized barbells".into())
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    let mut r = rng(55);
    for i in 0..150 {
        // circuit pieces: leaf pieces exactly once
        let size = r.gen_range(1..=4);
        let shape = BarbellShape {
            pieces: r.gen_range(1..=6),
            piece_size: size,
            piece_len: size,
            max_path: 3,
        };
        let (g, cert) = random_gbarbell(shape, &mut r).unwrap();
        match gcycle_cover(&g, &cert) {
            Ok(f) => {
                let report = verify_cover(&g, &f, None);
                let q = &cert.quotient;
                let qall: Vec<EdgeId> = q.quotient.edge_ids().collect();
                let deg = q.quotient.degrees_of(&qall);
                let mut bad = !report.member_issues.is_empty();
                for (p, piece) in cert.pieces.iter().enumerate() {
                    for &e in piece {
                        let m = report.multiplicities[e];
                        bad |= if deg[p] == 1 { m != 1 } else { !(1..=2).contains(&m) };
                    }
                }
                for &e in &cert.connector_edges() {
                    bad |= report.multiplicities[e] > 1;
                }
                if bad {
                    failures.push(format!("leaf bands #{i}"));
                }
            }
            Err(e) => failures.push(format!("leaf bands #{i}: {e}")),
        }
    }
    for i in 0..150 {
        let shape = BarbellShape {
            pieces: r.gen_range(1..=5),
            piece_size: r.gen_range(1..=4),
            piece_len: r.gen_range(1..=8),
            max_path: 3,
        };
        let (g, cert) = random_gbarbell(shape, &mut r).unwrap();
        match one_two_cover(&g, &cert) {
            Ok(OneTwoCover::Decomposition(cs)) => {
                let mut m = vec![0; g.edge_count()];
                for c in &cs {
                    if !c.is_balanced_in(&g) || c.check(&g).is_err() {
                        failures.push(format!("one-two #{i}: bad decomposition member"));
                    }
                    for &e in c.edges() {
                        m[e] += 1;
                    }
                }
                if g.edge_ids().any(|e| m[e] != cert.host.contains(&e) as usize) {
                    failures.push(format!("one-two #{i}: not a decomposition"));
                }
            }
            Ok(OneTwoCover::CoverWithSpares { cover, c1, c2 }) => {
                let report = verify_cover(&g, &cover, None);
                let mut bad = !report.member_issues.is_empty();
                for e in g.edge_ids() {
                    let m = report.multiplicities[e];
                    bad |= if cert.host.contains(&e) { !(1..=2).contains(&m) } else { m != 0 };
                }
                bad |= c1.is_balanced_in(&g) || c2.is_balanced_in(&g) || c1.check(&g).is_err() || c2.check(&g).is_err();
                bad |= c1.edges().iter().any(|e| c2.edges().contains(e));
                bad |= c1.edges().iter().chain(c2.edges()).any(|&e| report.multiplicities[e] != 1);
                if bad {
                    failures.push(format!("one-two #{i}: band violated"));
                }
            }
            Err(e) => failures.push(format!("one-two #{i}: {e}")),
        }
    }
    outcome(&failures, "150 circuit-piece barbells, 150 {1,2}-covers".into())
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut r = rng(66);
    let mut even_checked = 0;
    for i in 0..250 {
        let n = r.gen_range(1..=9);
        let k = r.gen_range(2..=6);
        let h = random_tree_graph(n, k, &mut r);
        let oracle = cut_oracle(&h);
        if k % 2 == 0 {
            even_checked += 1;
            match tree_graph_barbell(&h) {
                Ok(cert) => {
                    if validate_gbarbell(&h, &cert).is_err() {
                        failures.push(format!("#{i}: host fails validation"));
                    }
                    let need = oracle.odd_side.iter().chain(&oracle.partner_union);
                    if let Some(e) = need.clone().find(|e| !cert.host.contains(e)) {
                        failures.push(format!("#{i}: host misses e{e}"));
                    }
                }
                Err(e) => failures.push(format!("#{i}: {e}")),
            }
        }
        match cover_0123(&h) {
            Ok(f) => {
                let report = verify_cover(&h, &f, None);
                let m = &report.multiplicities;
                let mut bad = !report.member_issues.is_empty() || m.iter().any(|&x| x > 3);
                bad |= oracle.both_sides_negative.iter().chain(&oracle.partner_union).any(|&e| m[e] == 0);
                bad |= h.negative_edges().iter().any(|&e| h.edge(e).is_loop() && m[e] != 2);
                if bad {
                    failures.push(format!("#{i}: contract violated"));
                }
            }
            Err(e) => failures.push(format!("#{i}: {e}")),
        }
    }
    outcome(&failures, format!("250 tree-plus-negatives graphs ({even_checked} even)"))
}

fn golden(name: &str) -> SignedGraph {
    let path = format!("{}/tests/golden/{name}.sg", env!("CARGO_MANIFEST_DIR"));
    parse_instance(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn criterion_7(sets: &[&[Run]], limits: &Limits) -> Outcome {
    let mut failures = Vec::new();
    let mut compared = 0;
    for runs in sets {
        for (i, r) in runs.iter().enumerate() {
            if r.g.edge_count() > 12 {
                continue;
            }
            compared += 1;
            match exact_scc_signed(&r.g, limits) {
                Ok(Some(f)) if f.length() <= r.out.length => {}
                Ok(Some(f)) => failures.push(format!("#{i}: exact {} > {}", f.length(), r.out.length)),
                Ok(None) => failures.push(format!("#{i}: oracle found no cover")),
                Err(e) => failures.push(format!("#{i}: {e}")),
            }
        }
    }
    let values = std::fs::read_to_string(format!("{}/tests/golden/exact_values.txt", env!("CARGO_MANIFEST_DIR"))).unwrap();
    for line in values.lines().filter(|l| !l.trim().is_empty()) {
        let (name, want) = line.split_once(' ').unwrap();
        let got = match exact_scc_signed(&golden(name), limits) {
            Ok(Some(f)) => f.length().to_string(),
            Ok(None) => "none".into(),
            Err(e) => e.to_string(),
        };
        if got != want.trim() {
            failures.push(format!("{name}: exact {got}, golden {want}"));
        }
    }
    outcome(&failures, format!("{compared} instances with at most 12 edges, golden values"))
}

fn criterion_8(graphs: &[&SignedGraph], limits: &Limits) -> Outcome {
    let mut failures = Vec::new();
    let mut n = 0;
    for (i, g) in graphs.iter().enumerate() {
        if g.vertex_count() > 8 {
            continue;
        }
        let eps = negativeness_exact(g, limits).unwrap();
        let switched = switch(g, &eps.optimal_switch).unwrap();
        for (tag, h) in [("input", (*g).clone()), ("switched", switched)] {
            n += 1;
            let minimal = verify_minimal_signature(&h, limits).unwrap();
            if minimal != (h.negative_edges().len() == eps.epsilon_n) {
                failures.push(format!("#{i} {tag}: cut test {minimal}, counts {} vs {}", h.negative_edges().len(), eps.epsilon_n));
            }
        }
    }
    outcome(&failures, format!("{n} signatures"))
}

fn criterion_9(runs: &[Run]) -> Outcome {
    let mut failures = Vec::new();
    let mut r = rng(99);
    for (i, run) in runs.iter().enumerate() {
        let s: Vec<usize> = (0..run.g.vertex_count()).filter(|_| r.gen_bool(0.5)).collect();
        let h = switch(&run.g, &s).unwrap();
        let report = verify_cover(&h, &run.out.cover, None);
        if !report.valid || report.length != run.out.length {
            failures.push(format!("#{i}: {}", report.summary()));
        }
    }
    outcome(&failures, format!("{} random switchings", runs.len()))
}

fn criterion_10(limits: &Limits) -> Outcome {
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for (name, g) in [
        ("triangle", fixtures::triangle(0)),
        ("theta", fixtures::theta()),
        ("K4", fixtures::k4_positive()),
        ("Petersen", fixtures::petersen()),
    ] {
        match circuit_cover_bridgeless(&g, limits) {
            Ok(r) if le(r.length, r.bound()) => notes.push(format!("{name} {}", r.length)),
            Ok(r) => failures.push(format!("{name}: {} > {}", r.length, r.bound())),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let theta = exact_scc_unsigned(&fixtures::theta(), limits).map(|f| f.length());
    if theta != Ok(4) {
        failures.push(format!("theta exact {theta:?}"));
    }
    let petersen = exact_scc_unsigned(&fixtures::petersen(), limits).map(|f| f.length());
    match petersen {
        Ok(p) if p <= 24 => notes.push(format!("Petersen exact {p}")),
        other => failures.push(format!("Petersen exact {other:?}")),
    }
    outcome(&failures, notes.join(", "))
}

fn criterion_11(runs: &[Run]) -> Outcome {
    let mut failures = Vec::new();
    let mut tight = 0;
    for (i, r) in runs.iter().enumerate() {
        let Some(p) = &r.out.prune else {
            failures.push(format!("#{i}: no pruned part"));
            continue;
        };
        tight += p.equality as usize;
        if p.pruned_length as i64 > p.bound {
            failures.push(format!("#{i}: {} > {}", p.pruned_length, p.bound));
        }
    }
    outcome(&failures, format!("{} pruned families, {tight} with length = |E(G2)|", runs.len()))
}

/// Three times each closed-form bound, in integers.
fn thrice_bounds(e: i64, v: i64, eps: i64) -> (i64, i64) {
    let general = 3 * e + 9 * v + (2 * e + 4 * eps - 21).min(3 * v + 6 * eps - 24);
    let even = 3 * e + 6 * v + (2 * e + eps - 12).min(3 * v + 3 * eps - 15);
    (general, even)
}

fn criterion_12() -> Outcome {
    let mut failures = Vec::new();
    let mut r = rng(12);
    for _ in 0..10_000 {
        let (e, v, eps) = (r.gen_range(0..10_000), r.gen_range(0..10_000), r.gen_range(0..10_000));
        let (g3, e3) = thrice_bounds(e, v, eps);
        let three = Rational64::from_integer(3);
        if chained_bound(e, v, eps, 3) * three != Rational64::from_integer(g3)
            || chained_bound(e, v, eps, 2) * three != Rational64::from_integer(e3)
        {
            failures.push(format!("({e}, {v}, {eps})"));
        }
    }
    outcome(&failures, "10000 triples".into())
}

fn main() {
    let limits = Limits::default();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();

    let start = Instant::now();
    let (general, _) = corpus(520, 2024, false, &limits);
    let (runs_general, fail_general) = run_all(&general, &limits);
    let secs = start.elapsed().as_secs_f64();
    results.push((1, "general bound", criterion_1(&runs_general, &fail_general, secs, general.len())));

    let (even, _) = corpus(220, 4048, true, &limits);
    let (runs_even, fail_even) = run_all(&even, &limits);
    results.push((2, "even bound", criterion_2(&runs_even, &fail_even)));
    results.push((3, "corollary bound", criterion_3(&[&runs_general, &runs_even])));
    results.push((4, "double covers", criterion_4()));
    results.push((5, "multiplicity bands", criterion_5()));
    results.push((6, "tree-graph contracts", criterion_6()));
    results.push((7, "oracle domination", criterion_7(&[&runs_general, &runs_even], &limits)));
    let all: Vec<&SignedGraph> = general.iter().chain(&even).collect();
    results.push((8, "negativeness consistency", criterion_8(&all, &limits)));
    results.push((9, "switching invariance", criterion_9(&runs_general)));
    results.push((10, "unsigned contract", criterion_10(&limits)));
    results.push((11, "pruned length", criterion_11(&runs_general)));
    results.push((12, "bound identity", criterion_12()));

    let mut ok = true;
    for (n, name, o) in &results {
        ok &= o.pass;
        println!("criterion {n:>2} {name}: {} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if !ok {
        std::process::exit(1);
    }
}
