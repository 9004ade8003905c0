//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Every expected value comes from `bitpath-oracle`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bitpath::{oracle_of, random_graph, random_instance, run_bench, BenchParams, BenchReport};
use bitpath_core::{
    build_hierarchy, enumerate_paths, format_path, hierarchical_shortest_path, hierarchical_weighted_path, meet_layers,
    shortest_path_length, shortest_paths, shortest_weighted_path, Direction, EdgeForm, Graph, Path, SearchOptions,
};
use bitpath_oracle::{all_shortest_paths, all_simple_paths_from, bfs_distance, dijkstra_distance, walk_endpoints};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn all_paths() -> SearchOptions {
    SearchOptions {
        max_paths: usize::MAX,
        ..SearchOptions::default()
    }
}

fn g0() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 0)]).unwrap()
}

fn golden_fixture() -> Outcome {
    let started = Instant::now();
    let h = build_hierarchy(g0(), 1).unwrap();
    let rows = |level: usize, incoming: bool| -> Vec<String> {
        let g = h.graph(level);
        (0..g.order())
            .map(|v| {
                if incoming { g.incoming_row(v) } else { g.outgoing_row(v) }
                    .unwrap()
                    .to_string()
            })
            .collect()
    };
    let expected: [(usize, bool, &[&str]); 6] = [
        (1, false, &["(1,1,0)", "(0,1,1)", "(1,0,0)"]),
        (1, true, &["(1,0,1)", "(1,1,0)", "(0,1,0)"]),
        (2, false, &["(1,1)", "(1,0)"]),
        (2, true, &["(1,1)", "(1,0)"]),
        (3, false, &["(1)"]),
        (3, true, &["(1)"]),
    ];
    let rows_ok = h.depth() == 4 && expected.iter().all(|&(l, inc, want)| rows(l, inc) == want);

    let flat = shortest_paths(h.base(), 1, 4, 16).unwrap();
    let hier = hierarchical_shortest_path(&h, 1, 4, &SearchOptions::default()).unwrap();
    let text = |ps: &[Path]| ps.iter().map(|p| format_path(p, true).unwrap()).collect::<Vec<_>>();
    let query_ok = [&flat, &hier]
        .iter()
        .all(|r| r.hop_length == Some(2) && text(&r.paths) == ["2->4->5"] && r.path_count == 1);
    let elapsed = started.elapsed();
    outcome(
        rows_ok && query_ok && elapsed < Duration::from_secs(1),
        format!("rows O1..I3 exact: {rows_ok}; 2->4->5 length 2 (flat, hierarchical): {query_ok}; {elapsed:.2?} (limit 1 s)"),
    )
}

fn advance_sweep() -> Outcome {
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(2);
    let (mut checks, mut mismatches) = (0usize, 0usize);
    for i in 0..200 {
        let order = rng.gen_range(1..=32);
        let g = random_graph(&mut rng, order, [0.05, 0.1, 0.2][i % 3], false, i % 4 == 3);
        let o = oracle_of(&g);
        for v in 0..order {
            let mut form = EdgeForm::vertex(v, order).unwrap();
            for k in 0..=order {
                if k > 0 {
                    form = g.advance(&form, 1, Direction::Forward).unwrap();
                }
                let want = walk_endpoints(&o, v, k).unwrap();
                checks += 1;
                if form.support().collect::<Vec<_>>() != want {
                    mismatches += 1;
                }
            }
        }
    }
    let elapsed = started.elapsed();
    outcome(
        mismatches == 0 && elapsed < Duration::from_secs(60),
        format!("200 graphs V<=32, {checks} (source, k) rows, {mismatches} mismatches; {elapsed:.2?} (limit 60 s)"),
    )
}

fn flat_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(3);
    let mut mismatches = 0;
    let n = 1002;
    for i in 0..n {
        let (g, v1, v2) = random_instance(&mut rng, i, 64, false);
        let o = oracle_of(&g);
        if shortest_path_length(&g, v1, v2).unwrap() != bfs_distance(&o, v1, v2).unwrap() {
            mismatches += 1;
        }
    }
    outcome(
        mismatches == 0,
        format!("{n} instances V<=64, densities 0.05/0.15/0.35, {mismatches} mismatches"),
    )
}

fn enumeration_completeness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let (mut queries, mut mismatches) = (0, 0);
    for i in 0..200 {
        let order = rng.gen_range(1..=16);
        let g = random_graph(&mut rng, order, [0.1, 0.2, 0.35][i % 3], false, i % 4 == 3);
        let o = oracle_of(&g);
        for v1 in 0..order {
            for v2 in 0..order {
                queries += 1;
                let want = all_shortest_paths(&o, v1, v2, 1 << 20).unwrap();
                let got = shortest_path_length(&g, v1, v2).unwrap().map(|k| {
                    let meet = meet_layers(&g, v1, v2, k).unwrap();
                    let mut ps: Vec<Vec<usize>> = enumerate_paths(&g, &meet, usize::MAX)
                        .unwrap()
                        .into_iter()
                        .map(Path::into_vertices)
                        .collect();
                    ps.sort();
                    (k, ps)
                });
                let want = want.map(|(k, mut ps)| {
                    ps.sort();
                    (k, ps)
                });
                if got != want {
                    mismatches += 1;
                }
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("200 graphs V<=16, {queries} pairs, path sets vs brute force, {mismatches} mismatches"),
    )
}

fn hierarchical_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let (mut mismatches, mut fallbacks, mut split) = (0, 0, 0);
    let n = 1000;
    for i in 0..n {
        let (g, v1, v2) = random_instance(&mut rng, i, 64, false);
        split += usize::from(i % 4 == 3);
        let flat = shortest_paths(&g, v1, v2, usize::MAX).unwrap();
        let h = build_hierarchy(g, 1).unwrap();
        let hier = hierarchical_shortest_path(&h, v1, v2, &all_paths()).unwrap();
        fallbacks += usize::from(hier.fallback);
        if (hier.hop_length, &hier.paths, hier.path_count) != (flat.hop_length, &flat.paths, flat.path_count) {
            mismatches += 1;
        }
    }
    outcome(
        mismatches == 0,
        format!("{n} instances V<=64 ({split} split in two), {mismatches} mismatches, {fallbacks} fallbacks to flat"),
    )
}

fn weighted_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    let (mut mismatches, mut fallbacks) = (0, 0);
    let n = 1000;
    for i in 0..n {
        let (g, v1, v2) = random_instance(&mut rng, i, 32, true);
        let want = dijkstra_distance(&oracle_of(&g), v1, v2).unwrap();
        let flat = shortest_weighted_path(&g, v1, v2, usize::MAX).unwrap();
        let h = build_hierarchy(g, 1).unwrap();
        let hier = hierarchical_weighted_path(&h, v1, v2, &all_paths()).unwrap();
        fallbacks += usize::from(hier.fallback);
        if flat.cost != want || hier.cost != want || hier.paths != flat.paths {
            mismatches += 1;
        }
    }

    let (mut bound_checks, mut bound_failures) = (0usize, 0usize);
    for i in 0..100 {
        let order = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, order, [0.1, 0.15, 0.2][i % 3], true, false);
        let o = oracle_of(&g);
        let h = build_hierarchy(g, 1).unwrap();
        for v in 0..order {
            for p in all_simple_paths_from(&o, v, 1 << 22).unwrap() {
                let fine = o.path_cost(&p).unwrap();
                for level in 1..h.depth() {
                    let image = Path::new(p.iter().map(|&u| h.class_at(level, u)).collect());
                    bound_checks += 1;
                    if h.graph(level).path_cost(&image).is_none_or(|c| c > fine) {
                        bound_failures += 1;
                    }
                }
            }
        }
    }
    outcome(
        mismatches == 0 && bound_failures == 0,
        format!(
            "{n} weighted instances V<=32 w in 1..9, {mismatches} mismatches, {fallbacks} fallbacks; \
             coarse cost <= fine cost on {bound_checks} (path, level) pairs, {bound_failures} failures"
        ),
    )
}

fn performance() -> Outcome {
    let params = BenchParams {
        verify: 10,
        seed: 7,
        ..BenchParams::new(100_000, 3, 100)
    };
    let r = run_bench(&params);
    let (lo, hi) = r.path_count_range().unwrap_or((0, 0));
    let pass =
        r.answered() == 100 && r.mean_time() < Duration::from_secs(1) && r.verified() == 10 && r.mismatches() == 0;
    let detail = format!(
        "modmul N=100000 k=3: 100 queries, mean {:.2?} (limit 1 s), median {:.2?}, max {:.2?}; \
         {} oracle-checked, {} mismatches; path counts {lo}..={hi}; {} fallbacks",
        r.mean_time(),
        r.median_time(),
        r.max_time(),
        r.verified(),
        r.mismatches(),
        r.fallbacks()
    );
    outcome(pass, detail)
}

fn scaling() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;
    let mut csv = String::from(BenchReport::CSV_HEADER);
    csv.push('\n');
    for n in [1_000, 10_000, 100_000] {
        let params = BenchParams {
            verify: 30,
            seed: 8,
            ..BenchParams::new(n, 3, 30)
        };
        let r = run_bench(&params);
        csv.push_str(&r.csv_rows());
        pass &= r.verified() == 30 && r.mismatches() == 0 && r.answered() == 30;
        let answered: Vec<_> = r.records.iter().filter(|q| q.hops.is_some()).collect();
        let units: f64 = answered
            .iter()
            .map(|q| q.hops.unwrap() as f64 * r.log2_order())
            .sum::<f64>()
            / answered.len() as f64;
        let micros = r.mean_time().as_secs_f64() * 1e6;
        lines.push(format!(
            "    N={n}: mean hops*log2(V) {units:.1}, mean time {micros:.0} us, us per unit {:.1}, {} mismatches",
            micros / units,
            r.mismatches()
        ));
    }
    let path = std::env::temp_dir().join("bitpath-scaling.csv");
    let written = std::fs::write(&path, &csv).is_ok();
    pass &= written && csv.lines().count() == 91;
    outcome(
        pass,
        format!(
            "30 oracle-checked queries per N, CSV at {}\n{}",
            path.display(),
            lines.join("\n")
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("1 golden worked example", golden_fixture),
        ("2 advance vs walk oracle", advance_sweep),
        ("3 flat length vs BFS", flat_equivalence),
        ("4 enumeration completeness", enumeration_completeness),
        ("5 hierarchical equivalence", hierarchical_equivalence),
        ("6 weighted equivalence", weighted_equivalence),
    ];
    let mut failed = 0;
    let mut report = |name: &str, o: Outcome| {
        failed += usize::from(!o.pass);
        println!(
            "{} criterion {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    };
    for (name, run) in criteria {
        report(name, run());
    }
    report("7 performance at N=100000", performance());
    report("8 scaling report", scaling());
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        println!("all 8 criteria passed");
        ExitCode::SUCCESS
    }
}
