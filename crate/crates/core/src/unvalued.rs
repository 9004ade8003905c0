//! Flat shortest-path search on unweighted graphs.
//!
//! The length search grows the exact-`k` frontier `v1 + k` until it meets
//! `v2`. The paths themselves come from the layer meet: for a fixed length
//! `k`, layer `j` holds the vertices that are `j` hops from the source and
//! `k - j` hops from the target. A walk of length `k` exists iff every layer
//! is non-null, and a depth-first read of the layers yields every such walk.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::form::EdgeForm;
use crate::graph::{Direction, Graph, Path, VertexId};

/// Default cap on the number of paths returned by a query.
pub const DEFAULT_MAX_PATHS: usize = 1024;

/// The per-position intersections of the forward and backward frontiers for
/// one fixed walk length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerMeet {
    source: VertexId,
    target: VertexId,
    layers: Vec<EdgeForm>,
    feasible: bool,
}

impl LayerMeet {
    /// Wraps precomputed layers; feasibility is recomputed from them.
    pub(crate) fn from_layers(source: VertexId, target: VertexId, layers: Vec<EdgeForm>) -> Self {
        let feasible = !layers.is_empty() && layers.iter().all(|l| !l.is_null());
        LayerMeet {
            source,
            target,
            layers,
            feasible,
        }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    /// Walk length `k`; there are `k + 1` layers.
    pub fn hops(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layers(&self) -> &[EdgeForm] {
        &self.layers
    }

    pub fn layer(&self, j: usize) -> &EdgeForm {
        &self.layers[j]
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible
    }
}

/// Outcome of a shortest-path query.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QueryResult {
    /// `None` when the target is unreachable.
    pub hop_length: Option<usize>,
    /// Shortest paths in lexicographic order, at most `max_paths` of them.
    pub paths: Vec<Path>,
    /// More shortest paths exist than were listed.
    pub truncated: bool,
    /// Total number of shortest paths (saturating).
    pub path_count: u64,
    /// The hierarchical search gave up and answered with the flat search.
    pub fallback: bool,
}

impl QueryResult {
    pub fn unreachable() -> Self {
        QueryResult::default()
    }

    pub(crate) fn trivial(v: VertexId) -> Self {
        QueryResult {
            hop_length: Some(0),
            paths: vec![Path::single(v)],
            truncated: false,
            path_count: 1,
            fallback: false,
        }
    }

    pub fn is_reachable(&self) -> bool {
        self.hop_length.is_some()
    }
}

/// Exact frontiers `v1 + 0, v1 + 1, …, v1 + k` up to the first one holding
/// `v2`, or `None` once the set of reached vertices stops growing.
pub(crate) fn forward_frontiers(g: &Graph, v1: VertexId, v2: VertexId) -> Option<Vec<EdgeForm>> {
    let start = EdgeForm::vertex(v1, g.order()).ok()?;
    if v1 == v2 {
        return Some(vec![start]);
    }
    let mut reached = start.clone();
    let mut frontiers = vec![start];
    loop {
        let next = g.step_unchecked(frontiers.last().unwrap(), Direction::Forward);
        if next.contains(v2) {
            frontiers.push(next);
            return Some(frontiers);
        }
        // The exact-k frontier can oscillate forever (think of a 2-cycle);
        // only the cumulative reached set is guaranteed to stabilise.
        if next.is_subset(&reached).unwrap_or(true) {
            return None;
        }
        reached.or_unchecked(&next);
        frontiers.push(next);
    }
}

/// Layers from forward frontiers `F_0..F_k`: `Res[k] = F_k ∧ v2`, then
/// `Res[j] = (Res[j+1] - 1) ∧ F_j`.
///
/// This equals `F_j ∧ (v2 - (k - j))`: a vertex of `F_j` with a successor in
/// `v2 - (k-j-1)` has that successor in `F_{j+1}` as well.
pub(crate) fn meet_from_frontiers(g: &Graph, v1: VertexId, v2: VertexId, forward: Vec<EdgeForm>) -> LayerMeet {
    let k = forward.len() - 1;
    let mut layers = forward;
    let mut target = EdgeForm::zeros(g.order());
    target.insert(v2);
    layers[k].and_unchecked(&target);
    for j in (0..k).rev() {
        let back = g.step_unchecked(&layers[j + 1], Direction::Backward);
        layers[j].and_unchecked(&back);
    }
    LayerMeet::from_layers(v1, v2, layers)
}

/// Length of the shortest path from `v1` to `v2` (0 when they coincide).
pub fn shortest_path_length(g: &Graph, v1: VertexId, v2: VertexId) -> Result<Option<usize>> {
    g.check_vertex(v1)?;
    g.check_vertex(v2)?;
    Ok(forward_frontiers(g, v1, v2).map(|f| f.len() - 1))
}

/// Layers of all `k`-hop walks from `v1` to `v2`.
pub fn meet_layers(g: &Graph, v1: VertexId, v2: VertexId, k: usize) -> Result<LayerMeet> {
    g.check_vertex(v1)?;
    g.check_vertex(v2)?;
    let mut forward = Vec::with_capacity(k + 1);
    forward.push(EdgeForm::vertex(v1, g.order())?);
    for _ in 0..k {
        let next = g.step_unchecked(forward.last().unwrap(), Direction::Forward);
        if next.is_null() {
            // Every later layer is null too.
            forward.resize(k + 1, EdgeForm::zeros(g.order()));
            break;
        }
        forward.push(next);
    }
    Ok(meet_from_frontiers(g, v1, v2, forward))
}

/// Every walk read off `meet`, in lexicographic order, at most `max_paths`.
pub fn enumerate_paths(g: &Graph, meet: &LayerMeet, max_paths: usize) -> Result<Vec<Path>> {
    if !meet.is_feasible() {
        return Err(Error::InfeasibleMeet { hops: meet.hops() });
    }
    if let Some(bad) = meet.layers.iter().find(|l| l.len() != g.order()) {
        return Err(Error::DimensionMismatch {
            left: bad.len(),
            right: g.order(),
        });
    }
    Ok(read_layers(g, meet, max_paths))
}

/// Depth-first read of the layers. Candidates for position `d + 1` are the
/// successors of the vertex chosen at `d` that lie in layer `d + 1`, tried in
/// ascending order. Every layer vertex lies on some walk, so no branch dies.
pub(crate) fn read_layers(g: &Graph, meet: &LayerMeet, limit: usize) -> Vec<Path> {
    let k = meet.hops();
    let layers = &meet.layers;
    let mut out = Vec::new();
    if limit == 0 || !layers[0].contains(meet.source) {
        return out;
    }
    let mut path = vec![meet.source];
    let mut cursor = vec![0usize];
    while let Some(&u) = path.last() {
        let d = path.len() - 1;
        if d == k {
            let found = Path::new(path.clone());
            if u == meet.target && found.is_walk_of(g) {
                out.push(found);
                if out.len() >= limit {
                    break;
                }
            }
            path.pop();
            cursor.pop();
            continue;
        }
        let succ = g.successors(u);
        let next = succ[cursor[d]..]
            .iter()
            .position(|&w| layers[d + 1].contains(w))
            .map(|i| cursor[d] + i);
        match next {
            Some(i) => {
                cursor[d] = i + 1;
                path.push(succ[i]);
                cursor.push(0);
            }
            None => {
                path.pop();
                cursor.pop();
            }
        }
    }
    out
}

/// Number of walks described by `meet`, saturating at `u64::MAX`.
pub fn count_paths(g: &Graph, meet: &LayerMeet) -> u64 {
    if !meet.is_feasible() {
        return 0;
    }
    let k = meet.hops();
    let mut next = vec![0u64; g.order()];
    next[meet.target] = 1;
    for j in (0..k).rev() {
        let mut cur = vec![0u64; g.order()];
        for u in meet.layers[j].support() {
            cur[u] = g.successors(u).iter().fold(0u64, |acc, &w| acc.saturating_add(next[w]));
        }
        next = cur;
    }
    next[meet.source]
}

/// All shortest paths from `v1` to `v2`, at most `max_paths` listed.
pub fn shortest_paths(g: &Graph, v1: VertexId, v2: VertexId, max_paths: usize) -> Result<QueryResult> {
    g.check_vertex(v1)?;
    g.check_vertex(v2)?;
    let Some(frontiers) = forward_frontiers(g, v1, v2) else {
        return Ok(QueryResult::unreachable());
    };
    let meet = meet_from_frontiers(g, v1, v2, frontiers);
    Ok(result_from_meet(g, &meet, max_paths))
}

pub(crate) fn result_from_meet(g: &Graph, meet: &LayerMeet, max_paths: usize) -> QueryResult {
    let paths = read_layers(g, meet, max_paths);
    let path_count = count_paths(g, meet);
    QueryResult {
        hop_length: Some(meet.hops()),
        truncated: path_count > paths.len() as u64,
        paths,
        path_count,
        fallback: false,
    }
}

/// `a->b->c`, with ids shifted by one when `one_based` is set.
pub fn format_path(p: &Path, one_based: bool) -> Result<String> {
    if p.is_empty() {
        return Err(Error::EmptyPath);
    }
    let shift = usize::from(one_based);
    let mut out = String::new();
    for (i, v) in p.vertices().iter().enumerate() {
        if i > 0 {
            out.push_str("->");
        }
        let _ = write!(out, "{}", v + shift);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{g0, oracle_of, random_graph};
    use bitpath_oracle::{all_shortest_paths, bfs_distance, brute_force_walks};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn paths(v: &[&[usize]]) -> Vec<Path> {
        v.iter().map(|p| Path::new(p.to_vec())).collect()
    }

    #[test]
    fn length_examples() {
        let g = g0();
        assert_eq!(shortest_path_length(&g, 1, 4), Ok(Some(2)));
        assert_eq!(shortest_path_length(&g, 3, 3), Ok(Some(0)));
        let empty = Graph::from_edges(2, []).unwrap();
        assert_eq!(shortest_path_length(&empty, 0, 1), Ok(None));
        assert!(shortest_path_length(&empty, 0, 2).is_err());
    }

    #[test]
    fn two_cycle_terminates() {
        // Exact frontiers alternate {1}, {0}, {1}, … and never repeat back to back.
        let g = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(shortest_path_length(&g, 0, 2), Ok(None));
    }

    #[test]
    fn meet_examples() {
        let g = g0();
        let meet = meet_layers(&g, 1, 4, 2).unwrap();
        assert!(meet.is_feasible());
        assert_eq!(meet.layer(1), &EdgeForm::from_bits(&[0, 0, 0, 1, 0]));
        assert!(!meet_layers(&g, 1, 4, 1).unwrap().is_feasible());
        let zero = meet_layers(&g, 2, 2, 0).unwrap();
        assert!(zero.is_feasible());
        assert_eq!(zero.layers(), &[EdgeForm::vertex(2, 5).unwrap()]);
        assert!(!meet_layers(&g, 2, 3, 0).unwrap().is_feasible());
    }

    #[test]
    fn enumerate_examples() {
        let g = g0();
        let meet = meet_layers(&g, 1, 4, 2).unwrap();
        assert_eq!(enumerate_paths(&g, &meet, 10).unwrap(), paths(&[&[1, 3, 4]]));

        let cycle = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let meet = meet_layers(&cycle, 0, 2, 2).unwrap();
        let expect = brute_force_walks(&oracle_of(&cycle), 0, 2, 2, 100).unwrap();
        assert_eq!(expect, vec![vec![0, 1, 2]]);
        assert_eq!(enumerate_paths(&cycle, &meet, 10).unwrap(), paths(&[&[0, 1, 2]]));

        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let meet = meet_layers(&diamond, 0, 3, 2).unwrap();
        let expect = brute_force_walks(&oracle_of(&diamond), 0, 3, 2, 100).unwrap();
        assert_eq!(expect, vec![vec![0, 1, 3], vec![0, 2, 3]]);
        assert_eq!(
            enumerate_paths(&diamond, &meet, 10).unwrap(),
            paths(&[&[0, 1, 3], &[0, 2, 3]])
        );
        assert_eq!(enumerate_paths(&diamond, &meet, 1).unwrap(), paths(&[&[0, 1, 3]]));
        assert_eq!(count_paths(&diamond, &meet), 2);

        let bad = meet_layers(&g, 1, 4, 1).unwrap();
        assert_eq!(enumerate_paths(&g, &bad, 10), Err(Error::InfeasibleMeet { hops: 1 }));
    }

    #[test]
    fn non_minimal_lengths_yield_walks() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        let meet = meet_layers(&g, 0, 0, 4).unwrap();
        assert_eq!(enumerate_paths(&g, &meet, 10).unwrap(), paths(&[&[0, 1, 0, 1, 0]]));
    }

    #[test]
    fn query_examples() {
        let g = g0();
        let r = shortest_paths(&g, 1, 4, DEFAULT_MAX_PATHS).unwrap();
        assert_eq!(r.hop_length, Some(2));
        assert_eq!(r.paths, paths(&[&[1, 3, 4]]));
        assert_eq!(r.path_count, 1);
        assert!(!r.truncated);

        let r = shortest_paths(&g, 3, 3, 5).unwrap();
        assert_eq!((r.hop_length, r.paths), (Some(0), paths(&[&[3]])));

        let empty = Graph::from_edges(2, []).unwrap();
        let r = shortest_paths(&empty, 0, 1, 5).unwrap();
        assert_eq!(r, QueryResult::unreachable());
        assert!(r.paths.is_empty());
    }

    #[test]
    fn truncation_is_flagged() {
        // Complete bipartite layering 0 -> {1..=4} -> 5: four shortest paths.
        let edges = (1..=4).flat_map(|m| [(0, m), (m, 5)]);
        let g = Graph::from_edges(6, edges).unwrap();
        let r = shortest_paths(&g, 0, 5, 3).unwrap();
        assert_eq!(r.paths.len(), 3);
        assert_eq!(r.path_count, 4);
        assert!(r.truncated);
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_path(&Path::new(vec![1, 3, 4]), true).unwrap(), "2->4->5");
        assert_eq!(format_path(&Path::single(0), false).unwrap(), "0");
        assert_eq!(format_path(&Path::default(), false), Err(Error::EmptyPath));
    }

    #[test]
    fn meet_matches_definition_and_bfs() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=40);
            let p = [0.02, 0.1, 0.3][rng.gen_range(0..3)];
            let g = random_graph(&mut rng, n, p);
            let oracle = oracle_of(&g);
            let (v1, v2) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let len = shortest_path_length(&g, v1, v2).unwrap();
            assert_eq!(len, bfs_distance(&oracle, v1, v2).unwrap());
            assert_eq!(len, shortest_path_length(&g.transpose(), v2, v1).unwrap());
            for k in 0..=n.min(8) {
                let meet = meet_layers(&g, v1, v2, k).unwrap();
                let src = EdgeForm::vertex(v1, n).unwrap();
                let dst = EdgeForm::vertex(v2, n).unwrap();
                for j in 0..=k {
                    let fwd = g.advance(&src, j, Direction::Forward).unwrap();
                    let bwd = g.advance(&dst, k - j, Direction::Backward).unwrap();
                    assert_eq!(meet.layer(j), &fwd.and(&bwd).unwrap());
                }
            }
        }
    }

    #[test]
    fn minimal_length_layers_are_all_or_nothing() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..100 {
            let n = rng.gen_range(1..=16);
            let g = random_graph(&mut rng, n, 0.15);
            for v1 in 0..n {
                for v2 in 0..n {
                    if let Some(k) = shortest_path_length(&g, v1, v2).unwrap() {
                        let meet = meet_layers(&g, v1, v2, k).unwrap();
                        assert!(meet.layers().iter().all(|l| !l.is_null()));
                        if k > 0 {
                            let short = meet_layers(&g, v1, v2, k - 1).unwrap();
                            assert!(short.layers().iter().all(|l| l.is_null()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..100 {
            let n = rng.gen_range(1..=12);
            let g = random_graph(&mut rng, n, 0.25);
            let oracle = oracle_of(&g);
            let (v1, v2) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let got = shortest_paths(&g, v1, v2, usize::MAX).unwrap();
            match all_shortest_paths(&oracle, v1, v2, 1 << 16).unwrap() {
                None => assert!(!got.is_reachable()),
                Some((d, expect)) => {
                    assert_eq!(got.hop_length, Some(d));
                    let got: Vec<Vec<usize>> = got.paths.into_iter().map(Path::into_vertices).collect();
                    assert_eq!(got, expect);
                }
            }
        }
    }
}
