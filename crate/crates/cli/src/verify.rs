//! Random cross-checks of the bit-row searches against the oracle crate.

use bitpath_core::{
    build_hierarchy, hierarchical_shortest_path, hierarchical_weighted_path, shortest_paths, shortest_weighted_path,
    Graph, Path, QueryResult, SearchOptions, VertexId,
};
use bitpath_oracle::{all_shortest_paths, bfs_distance, dijkstra_distance, AdjacencyList, OracleReport};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Edge probabilities cycled through by [`random_instance`].
pub const DENSITIES: [f64; 3] = [0.05, 0.15, 0.35];

const PATH_CAP: usize = 1 << 14;

pub fn oracle_of(g: &Graph) -> AdjacencyList {
    if g.is_weighted() {
        AdjacencyList::from_weighted_edges(g.order(), g.weighted_edges())
    } else {
        AdjacencyList::from_edges(g.order(), g.edges())
    }
}

/// A random digraph with self-loops allowed. When `split` is set, no edge
/// crosses between the lower and upper half of the vertex range.
pub fn random_graph(rng: &mut StdRng, order: usize, density: f64, weighted: bool, split: bool) -> Graph {
    let half = order / 2;
    let mut edges = Vec::new();
    for u in 0..order {
        for v in 0..order {
            if split && (u < half) != (v < half) {
                continue;
            }
            if rng.gen_bool(density) {
                edges.push((u, v, if weighted { rng.gen_range(1..=9) } else { 1 }));
            }
        }
    }
    if weighted {
        Graph::from_weighted_edges(order, edges).unwrap()
    } else {
        Graph::from_edges(order, edges.into_iter().map(|(u, v, _)| (u, v))).unwrap()
    }
}

/// The `i`-th instance of a seeded sequence: order in `1..=max_v`, density
/// cycling through [`DENSITIES`], every fourth one split in two, and a
/// random query pair.
pub fn random_instance(rng: &mut StdRng, i: usize, max_v: usize, weighted: bool) -> (Graph, VertexId, VertexId) {
    let order = rng.gen_range(1..=max_v);
    let g = random_graph(rng, order, DENSITIES[i % DENSITIES.len()], weighted, i % 4 == 3);
    let (v1, v2) = (rng.gen_range(0..order), rng.gen_range(0..order));
    (g, v1, v2)
}

fn as_u64(x: Option<usize>) -> Option<u64> {
    x.map(|v| v as u64)
}

fn unweighted_report(name: String, o: &AdjacencyList, v1: VertexId, v2: VertexId, r: &QueryResult) -> OracleReport {
    let expected = bfs_distance(o, v1, v2).unwrap();
    let (paths_compared, paths_match) = match all_shortest_paths(o, v1, v2, PATH_CAP) {
        Ok(Some((_, want))) => {
            let got: Vec<Vec<VertexId>> = r.paths.iter().map(|p| p.vertices().to_vec()).collect();
            (true, !r.truncated && got == want && r.path_count == want.len() as u64)
        }
        Ok(None) => (true, r.paths.is_empty()),
        Err(_) => (false, false),
    };
    OracleReport {
        instance: name,
        from: v1,
        to: v2,
        expected: as_u64(expected),
        actual: as_u64(r.hop_length),
        paths_compared,
        paths_match,
    }
}

/// Checks flat and hierarchical answers on `instances` random graphs with
/// at most `max_v` vertices. Unweighted runs compare distances and full path
/// sets against BFS and brute force; weighted runs compare costs against
/// Dijkstra and the two path sets against each other.
pub fn run_verify(instances: usize, max_v: usize, weighted: bool, seed: u64) -> Vec<OracleReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let opts = SearchOptions {
        max_paths: usize::MAX,
        ..SearchOptions::default()
    };
    let mut reports = Vec::with_capacity(2 * instances);
    for i in 0..instances {
        let (g, v1, v2) = random_instance(&mut rng, i, max_v.max(1), weighted);
        let o = oracle_of(&g);
        let h = build_hierarchy(g.clone(), 1).unwrap();
        if weighted {
            let expected = dijkstra_distance(&o, v1, v2).unwrap();
            let flat = shortest_weighted_path(&g, v1, v2, usize::MAX).unwrap();
            let hier = hierarchical_weighted_path(&h, v1, v2, &opts).unwrap();
            let cost_ok = |p: &[Path], cost: Option<u64>| p.iter().all(|p| o.path_cost(p.vertices()) == cost);
            let same = flat.paths == hier.paths && flat.hop_length == hier.hop_length;
            reports.push(OracleReport {
                instance: format!("weighted #{i} V={} flat", g.order()),
                from: v1,
                to: v2,
                expected,
                actual: flat.cost,
                paths_compared: true,
                paths_match: cost_ok(&flat.paths, expected),
            });
            reports.push(OracleReport {
                instance: format!("weighted #{i} V={} hierarchical", g.order()),
                from: v1,
                to: v2,
                expected,
                actual: hier.cost,
                paths_compared: true,
                paths_match: same && cost_ok(&hier.paths, expected),
            });
        } else {
            let flat = shortest_paths(&g, v1, v2, usize::MAX).unwrap();
            let hier = hierarchical_shortest_path(&h, v1, v2, &opts).unwrap();
            reports.push(unweighted_report(
                format!("#{i} V={} flat", g.order()),
                &o,
                v1,
                v2,
                &flat,
            ));
            reports.push(unweighted_report(
                format!("#{i} V={} hierarchical", g.order()),
                &o,
                v1,
                v2,
                &hier,
            ));
        }
    }
    reports
}
