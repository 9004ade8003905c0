//! Timed random queries on generated graphs.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use bitpath_core::{
    build_hierarchy, choose_start_level, hierarchical_shortest_path, QueryResult, SearchOptions, VertexId,
};
use bitpath_oracle::{count_shortest_paths, AdjacencyList};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::generate::generate_modmul;
use crate::verify::oracle_of;

#[derive(Debug, Clone)]
pub struct BenchParams {
    pub n: usize,
    pub k: usize,
    pub queries: usize,
    pub seed: u64,
    /// How many of the queries (the first ones) to check against the oracle.
    pub verify: usize,
    pub min_order: usize,
    pub options: SearchOptions,
}

impl BenchParams {
    pub fn new(n: usize, k: usize, queries: usize) -> Self {
        BenchParams {
            n,
            k,
            queries,
            seed: 0,
            verify: 0,
            min_order: 1,
            options: SearchOptions {
                max_paths: 16,
                ..SearchOptions::default()
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QueryRecord {
    pub from: VertexId,
    pub to: VertexId,
    pub hops: Option<usize>,
    pub path_count: u64,
    pub time: Duration,
    pub fallback: bool,
    /// `None` when the query was not checked.
    pub verified: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub vertices: usize,
    pub edges: usize,
    pub depth: usize,
    pub start_level: usize,
    pub build_time: Duration,
    pub records: Vec<QueryRecord>,
}

/// Checks one answer: distance and number of shortest paths against BFS, and
/// every listed path is a distinct shortest path.
pub fn check_answer(oracle: &AdjacencyList, from: VertexId, to: VertexId, r: &QueryResult) -> bool {
    let expect = count_shortest_paths(oracle, from, to).expect("endpoints are in range");
    match (expect, r.hop_length) {
        (None, None) => r.paths.is_empty() && r.path_count == 0,
        (Some((d, count)), Some(h)) => {
            let valid = |p: &[VertexId]| {
                p.len() == h + 1
                    && p.first() == Some(&from)
                    && p.last() == Some(&to)
                    && p.windows(2).all(|e| oracle.has_edge(e[0], e[1]))
            };
            d == h
                && count == r.path_count
                && r.paths.iter().all(|p| valid(p.vertices()))
                && r.paths.windows(2).all(|w| w[0] < w[1])
                && (r.truncated || r.paths.len() as u64 == count)
        }
        _ => false,
    }
}

fn distinct_pair(rng: &mut StdRng, n: usize) -> (VertexId, VertexId) {
    let from = rng.gen_range(0..n);
    let to = rng.gen_range(0..n - 1);
    (from, if to >= from { to + 1 } else { to })
}

pub fn run_bench(params: &BenchParams) -> BenchReport {
    let g = generate_modmul(params.n, params.k);
    let (vertices, edges) = (g.order(), g.edge_count());
    let oracle = (params.verify > 0).then(|| oracle_of(&g));
    let started = Instant::now();
    let h = build_hierarchy(g, params.min_order).expect("min_order is positive");
    let build_time = started.elapsed();

    let mut rng = StdRng::seed_from_u64(params.seed);
    let records = (0..params.queries)
        .map(|q| {
            let (from, to) = distinct_pair(&mut rng, params.n);
            let started = Instant::now();
            let r = hierarchical_shortest_path(&h, from, to, &params.options).expect("endpoints are in range");
            let time = started.elapsed();
            let verified = oracle
                .as_ref()
                .filter(|_| q < params.verify)
                .map(|o| check_answer(o, from, to, &r));
            QueryRecord {
                from,
                to,
                hops: r.hop_length,
                path_count: r.path_count,
                time,
                fallback: r.fallback,
                verified,
            }
        })
        .collect();

    BenchReport {
        n: params.n,
        k: params.k,
        seed: params.seed,
        vertices,
        edges,
        depth: h.depth(),
        start_level: choose_start_level(&h),
        build_time,
        records,
    }
}

impl BenchReport {
    fn sorted_times(&self) -> Vec<Duration> {
        let mut t: Vec<Duration> = self.records.iter().map(|r| r.time).collect();
        t.sort();
        t
    }

    pub fn mean_time(&self) -> Duration {
        let total: Duration = self.records.iter().map(|r| r.time).sum();
        total.checked_div(self.records.len() as u32).unwrap_or_default()
    }

    pub fn median_time(&self) -> Duration {
        let t = self.sorted_times();
        match t.len() {
            0 => Duration::ZERO,
            n if n % 2 == 1 => t[n / 2],
            n => (t[n / 2 - 1] + t[n / 2]) / 2,
        }
    }

    pub fn max_time(&self) -> Duration {
        self.records.iter().map(|r| r.time).max().unwrap_or_default()
    }

    pub fn answered(&self) -> usize {
        self.records.iter().filter(|r| r.hops.is_some()).count()
    }

    /// Smallest and largest number of shortest paths over answered queries.
    pub fn path_count_range(&self) -> Option<(u64, u64)> {
        let counts = self.records.iter().filter(|r| r.hops.is_some()).map(|r| r.path_count);
        counts.clone().min().zip(counts.max())
    }

    pub fn fallbacks(&self) -> usize {
        self.records.iter().filter(|r| r.fallback).count()
    }

    pub fn verified(&self) -> usize {
        self.records.iter().filter(|r| r.verified.is_some()).count()
    }

    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| r.verified == Some(false)).count()
    }

    pub fn log2_order(&self) -> f64 {
        (self.vertices as f64).log2()
    }

    pub const CSV_HEADER: &'static str = "n,k,query,from,to,hops,hops_x_log2v,path_count,time_us,fallback,verified";

    /// One line per query, no header.
    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for (i, r) in self.records.iter().enumerate() {
            let (hops, scaled) = match r.hops {
                Some(h) => (h.to_string(), format!("{:.3}", h as f64 * self.log2_order())),
                None => (String::new(), String::new()),
            };
            let verified = r.verified.map(|v| v.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                self.n,
                self.k,
                i,
                r.from,
                r.to,
                hops,
                scaled,
                r.path_count,
                r.time.as_micros(),
                r.fallback,
                verified
            )
            .unwrap();
        }
        out
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "modmul n={} k={} (0-based, self-loops dropped): {} vertices, {} edges, seed {}",
            self.n, self.k, self.vertices, self.edges, self.seed
        )
        .unwrap();
        writeln!(
            out,
            "hierarchy: {} levels, start level {}, built in {:.3?}",
            self.depth, self.start_level, self.build_time
        )
        .unwrap();
        writeln!(
            out,
            "queries: {} ({} answered), mean {:.3?}, median {:.3?}, max {:.3?}",
            self.records.len(),
            self.answered(),
            self.mean_time(),
            self.median_time(),
            self.max_time()
        )
        .unwrap();
        if let Some((lo, hi)) = self.path_count_range() {
            writeln!(out, "shortest-path count per query: {lo}..={hi}").unwrap();
        }
        writeln!(out, "fallbacks to flat search: {}", self.fallbacks()).unwrap();
        writeln!(
            out,
            "oracle-checked: {}, mismatches: {}",
            self.verified(),
            self.mismatches()
        )
        .unwrap();
        out
    }
}

/// Reports for several sizes, each with its own graph and hierarchy.
pub fn run_scaling(sizes: &[usize], base: &BenchParams) -> Vec<BenchReport> {
    sizes
        .iter()
        .map(|&n| run_bench(&BenchParams { n, ..base.clone() }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_bench_is_fully_checked() {
        let params = BenchParams {
            verify: 5,
            ..BenchParams::new(10, 2, 5)
        };
        let r = run_bench(&params);
        assert_eq!(r.records.len(), 5);
        assert_eq!(r.verified(), 5);
        assert_eq!(r.mismatches(), 0);
        assert!(r.records.iter().all(|q| q.from != q.to));
        assert!(r.path_count_range().is_some_and(|(lo, _)| lo >= 1));
        assert_eq!(r.csv_rows().lines().count(), 5);
        assert!(r.summary().contains("fallbacks to flat search"));
    }

    #[test]
    fn aggregates() {
        let mut r = run_bench(&BenchParams::new(10, 2, 0));
        let rec = |ms| QueryRecord {
            from: 0,
            to: 1,
            hops: Some(1),
            path_count: ms,
            time: Duration::from_millis(ms),
            fallback: ms == 3,
            verified: None,
        };
        r.records = vec![rec(1), rec(3), rec(8), rec(4)];
        assert_eq!(r.mean_time(), Duration::from_millis(4));
        assert_eq!(r.median_time(), Duration::from_micros(3500));
        assert_eq!(r.max_time(), Duration::from_millis(8));
        assert_eq!(r.path_count_range(), Some((1, 8)));
        assert_eq!(r.fallbacks(), 1);
    }

    #[test]
    fn same_seed_same_pairs() {
        let a = run_bench(&BenchParams::new(50, 3, 10));
        let b = run_bench(&BenchParams::new(50, 3, 10));
        let pairs = |r: &BenchReport| r.records.iter().map(|q| (q.from, q.to)).collect::<Vec<_>>();
        assert_eq!(pairs(&a), pairs(&b));
    }
}
