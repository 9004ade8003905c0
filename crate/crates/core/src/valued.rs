//! Shortest paths under positive integer weights.
//!
//! Rational weights are brought to integers by scaling with the lcm of their
//! denominators. The flat search first finds the fewest-hop walks, then keeps
//! trying longer hop counts while a cheaper walk is still possible: with
//! every weight at least 1, a walk of `k` hops costs at least `k`, so hop
//! counts beyond the best cost found so far cannot help. Each hop count is a
//! layered dynamic program over exact hop counts.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexId};
use crate::hierarchy::{thicken_min_weight, Hierarchy, Partition, SearchOptions};
use crate::unvalued::shortest_path_length;

const UNREACHED: u64 = u64::MAX;

/// A non-negative rational in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RationalWeight {
    numerator: i64,
    denominator: u64,
}

impl RationalWeight {
    pub fn new(numerator: i64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = numerator.unsigned_abs().gcd(&denominator).max(1);
        Ok(RationalWeight {
            numerator: numerator / g as i64,
            denominator: denominator / g,
        })
    }

    pub fn integer(n: i64) -> Self {
        RationalWeight {
            numerator: n,
            denominator: 1,
        }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }
}

impl fmt::Display for RationalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Scales every weight by the lcm of the denominators. Returns the integer
/// weights and the scale. Zero and negative weights are rejected.
pub fn rationalize_weights(weights: &[RationalWeight]) -> Result<(Vec<u64>, u64)> {
    if let Some(w) = weights.iter().find(|w| w.numerator <= 0) {
        return Err(Error::NonPositiveWeight {
            numerator: w.numerator,
            denominator: w.denominator,
        });
    }
    let mut scale: u64 = 1;
    for w in weights {
        scale = (scale / scale.gcd(&w.denominator))
            .checked_mul(w.denominator)
            .ok_or(Error::Overflow)?;
    }
    let scaled = weights
        .iter()
        .map(|w| {
            (w.numerator as u64)
                .checked_mul(scale / w.denominator)
                .ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((scaled, scale))
}

/// Best costs for walks of exactly `hops` hops between two fixed vertices.
///
/// `forward[j][u]` is the cheapest `j`-hop walk from the source to `u`;
/// `backward[j][u]` the cheapest `(hops - j)`-hop walk from `u` to the target
/// among vertices reachable at position `j`. `u64::MAX` marks "none".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopCostTable {
    source: VertexId,
    target: VertexId,
    cost: u64,
    forward: Vec<Vec<u64>>,
    backward: Vec<Vec<u64>>,
}

impl HopCostTable {
    pub fn cost(&self) -> u64 {
        self.cost
    }

    pub fn hops(&self) -> usize {
        self.forward.len() - 1
    }

    pub fn forward(&self, j: usize, u: VertexId) -> Option<u64> {
        Some(self.forward[j][u]).filter(|&c| c != UNREACHED)
    }

    pub fn backward(&self, j: usize, u: VertexId) -> Option<u64> {
        Some(self.backward[j][u]).filter(|&c| c != UNREACHED)
    }
}

/// Layered dynamic program restricted to the `(position, vertex)` pairs
/// accepted by `allowed`.
fn layered_costs(
    g: &Graph,
    v1: VertexId,
    v2: VertexId,
    hops: usize,
    allowed: impl Fn(usize, VertexId) -> bool,
) -> Option<HopCostTable> {
    let n = g.order();
    if !allowed(0, v1) {
        return None;
    }
    let mut forward = vec![vec![UNREACHED; n]; hops + 1];
    forward[0][v1] = 0;
    for j in 1..=hops {
        let (done, rest) = forward.split_at_mut(j);
        let (prev, cur) = (&done[j - 1], &mut rest[0]);
        let mut any = false;
        for (u, &base) in prev.iter().enumerate() {
            if base == UNREACHED {
                continue;
            }
            for (&w, c) in g.successors(u).iter().zip(edge_costs(g, u)) {
                if allowed(j, w) {
                    let nc = base.saturating_add(c);
                    if nc < cur[w] {
                        cur[w] = nc;
                        any = true;
                    }
                }
            }
        }
        if !any {
            return None;
        }
    }
    let cost = forward[hops][v2];
    if cost == UNREACHED {
        return None;
    }
    let mut backward = vec![vec![UNREACHED; n]; hops + 1];
    backward[hops][v2] = 0;
    for j in (0..hops).rev() {
        for u in 0..n {
            if forward[j][u] == UNREACHED {
                continue;
            }
            let best = g
                .successors(u)
                .iter()
                .zip(edge_costs(g, u))
                .filter(|&(&w, _)| backward[j + 1][w] != UNREACHED)
                .map(|(&w, c)| c.saturating_add(backward[j + 1][w]))
                .min();
            if let Some(b) = best {
                backward[j][u] = b;
            }
        }
    }
    Some(HopCostTable {
        source: v1,
        target: v2,
        cost,
        forward,
        backward,
    })
}

fn edge_costs(g: &Graph, u: VertexId) -> impl Iterator<Item = u64> + '_ {
    let w = g.successor_weights(u);
    (0..g.successors(u).len()).map(move |i| w.map_or(1, |w| w[i]))
}

/// Every walk realising `table.cost()`, lexicographic, at most `limit`.
fn optimal_walks(g: &Graph, table: &HopCostTable, limit: usize) -> Vec<Path> {
    let k = table.hops();
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    let mut path = vec![table.source];
    let mut spent = vec![0u64];
    let mut cursor = vec![0usize];
    while let Some(&u) = path.last() {
        let d = path.len() - 1;
        if d == k {
            let found = Path::new(path.clone());
            if u == table.target && g.path_cost(&found) == Some(table.cost) {
                out.push(found);
                if out.len() >= limit {
                    break;
                }
            }
            path.pop();
            spent.pop();
            cursor.pop();
            continue;
        }
        let succ = g.successors(u);
        let costs: Vec<u64> = edge_costs(g, u).collect();
        let next = (cursor[d]..succ.len()).find(|&i| {
            let rest = table.backward[d + 1][succ[i]];
            rest != UNREACHED && spent[d] + costs[i] + rest == table.cost
        });
        match next {
            Some(i) => {
                cursor[d] = i + 1;
                path.push(succ[i]);
                spent.push(spent[d] + costs[i]);
                cursor.push(0);
            }
            None => {
                path.pop();
                spent.pop();
                cursor.pop();
            }
        }
    }
    out
}

/// Number of optimal walks in `table`, saturating.
fn count_optimal(g: &Graph, table: &HopCostTable) -> u64 {
    let k = table.hops();
    let on_optimal = |j: usize, u: VertexId| {
        let (f, b) = (table.forward[j][u], table.backward[j][u]);
        f != UNREACHED && b != UNREACHED && f + b == table.cost
    };
    let mut next = vec![0u64; g.order()];
    next[table.target] = 1;
    for j in (0..k).rev() {
        let mut cur = vec![0u64; g.order()];
        for u in (0..g.order()).filter(|&u| on_optimal(j, u)) {
            cur[u] = g
                .successors(u)
                .iter()
                .zip(edge_costs(g, u))
                .filter(|&(&w, c)| on_optimal(j + 1, w) && table.forward[j][u] + c == table.forward[j + 1][w])
                .fold(0u64, |acc, (&w, _)| acc.saturating_add(next[w]));
        }
        next = cur;
    }
    next[table.source]
}

/// Cheapest walk of exactly `hops` hops, with the tables to enumerate every
/// such walk; `None` when no `hops`-hop walk exists.
pub fn min_cost_at_hops(g: &Graph, v1: VertexId, v2: VertexId, hops: usize) -> Result<Option<(u64, HopCostTable)>> {
    if !g.is_weighted() {
        return Err(Error::MissingWeights);
    }
    g.check_vertex(v1)?;
    g.check_vertex(v2)?;
    Ok(layered_costs(g, v1, v2, hops, |_, _| true).map(|t| (t.cost, t)))
}

/// Outcome of a weighted query. Costs are in scaled integer units; divide
/// by `scale` to get the original rational cost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedQueryResult {
    pub cost: Option<u64>,
    /// Fewest hops among the cheapest walks.
    pub hop_length: Option<usize>,
    /// Cheapest walks with `hop_length` hops, lexicographic.
    pub paths: Vec<Path>,
    pub truncated: bool,
    pub path_count: u64,
    pub scale: u64,
    pub fallback: bool,
}

impl Default for WeightedQueryResult {
    fn default() -> Self {
        WeightedQueryResult {
            cost: None,
            hop_length: None,
            paths: Vec::new(),
            truncated: false,
            path_count: 0,
            scale: 1,
            fallback: false,
        }
    }
}

impl WeightedQueryResult {
    pub fn unreachable() -> Self {
        Self::default()
    }

    fn trivial(v: VertexId) -> Self {
        WeightedQueryResult {
            cost: Some(0),
            hop_length: Some(0),
            paths: vec![Path::single(v)],
            path_count: 1,
            ..Self::default()
        }
    }

    pub fn with_scale(mut self, scale: u64) -> Self {
        self.scale = scale;
        self
    }

    pub fn is_reachable(&self) -> bool {
        self.cost.is_some()
    }
}

/// Cheapest walks from `v1` to `v2`.
pub fn shortest_weighted_path(g: &Graph, v1: VertexId, v2: VertexId, max_paths: usize) -> Result<WeightedQueryResult> {
    if !g.is_weighted() {
        return Err(Error::MissingWeights);
    }
    let Some(min_hops) = shortest_path_length(g, v1, v2)? else {
        return Ok(WeightedQueryResult::unreachable());
    };
    if v1 == v2 {
        return Ok(WeightedQueryResult::trivial(v1));
    }

    // dist[u]: cheapest walk of exactly `k` hops from v1 to u.
    let n = g.order();
    let mut dist = vec![UNREACHED; n];
    dist[v1] = 0;
    let step = |dist: &Vec<u64>| {
        let mut next = vec![UNREACHED; n];
        for u in (0..n).filter(|&u| dist[u] != UNREACHED) {
            for (&w, c) in g.successors(u).iter().zip(edge_costs(g, u)) {
                next[w] = next[w].min(dist[u].saturating_add(c));
            }
        }
        next
    };
    for _ in 0..min_hops {
        dist = step(&dist);
    }
    let mut best = dist[v2];
    let mut best_hops = min_hops;
    let mut k = min_hops + 1;
    while k as u64 <= best {
        dist = step(&dist);
        if dist[v2] < best {
            best = dist[v2];
            best_hops = k;
        }
        k += 1;
    }

    let table = layered_costs(g, v1, v2, best_hops, |_, _| true).expect("hop count was realised above");
    let paths = optimal_walks(g, &table, max_paths);
    let path_count = count_optimal(g, &table);
    Ok(WeightedQueryResult {
        cost: Some(best),
        hop_length: Some(best_hops),
        truncated: path_count > paths.len() as u64,
        paths,
        path_count,
        ..WeightedQueryResult::default()
    })
}

/// Quotient of a weighted graph; each class edge costs the cheapest fine
/// edge between the two classes.
pub fn thicken_valued(g: &Graph, p: &Partition) -> Result<Graph> {
    if !g.is_weighted() {
        return Err(Error::MissingWeights);
    }
    thicken_min_weight(g, p)
}

/// Cheapest cost from every vertex to `target`, by repeated relaxation.
fn costs_to(g: &Graph, target: VertexId) -> Vec<u64> {
    let mut best = vec![UNREACHED; g.order()];
    best[target] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for (u, w, c) in g.weighted_edges() {
            if best[w] != UNREACHED && best[w] + c < best[u] {
                best[u] = best[w] + c;
                changed = true;
            }
        }
    }
    best
}

/// Coarse walks from `from` to `to` of total cost exactly `cost`, in
/// lexicographic order. `None` when more than `limit` walks exist or the
/// search visits more than `work` states.
fn walks_of_cost(
    g: &Graph,
    from: VertexId,
    to: VertexId,
    cost: u64,
    lower: &[u64],
    limit: usize,
    mut work: usize,
) -> Option<Vec<Path>> {
    let mut out = Vec::new();
    let mut path = vec![from];
    let mut left = vec![cost];
    let mut cursor = vec![0usize];
    while let Some(&u) = path.last() {
        let d = path.len() - 1;
        work = work.checked_sub(1)?;
        if u == to && left[d] == 0 {
            out.push(Path::new(path.clone()));
            if out.len() > limit {
                return None;
            }
        }
        let succ = g.successors(u);
        let costs: Vec<u64> = edge_costs(g, u).collect();
        let next = (cursor[d]..succ.len()).find(|&i| {
            let w = succ[i];
            costs[i] <= left[d] && lower[w] != UNREACHED && lower[w] <= left[d] - costs[i]
        });
        match next {
            Some(i) => {
                cursor[d] = i + 1;
                let rest = left[d] - costs[i];
                path.push(succ[i]);
                left.push(rest);
                cursor.push(0);
            }
            None => {
                path.pop();
                left.pop();
                cursor.pop();
            }
        }
    }
    Some(out)
}

/// Cheapest walks in the input graph of a weighted hierarchy.
///
/// Coarse walks between the endpoint classes at the start level are taken in
/// increasing coarse cost. Since every quotient edge costs the cheapest edge
/// it stands for, a coarse walk's cost bounds from below the cost of any of
/// its refinements. Each coarse walk is refined by a layered dynamic program
/// on the input graph confined to the walk's classes; the search stops once
/// the coarse cost exceeds the best refined cost.
pub fn hierarchical_weighted_path(
    h: &Hierarchy,
    v1: VertexId,
    v2: VertexId,
    opts: &SearchOptions,
) -> Result<WeightedQueryResult> {
    if h.levels().iter().any(|l| !l.graph().is_weighted()) {
        return Err(Error::MissingWeights);
    }
    let base = h.base();
    base.check_vertex(v1)?;
    base.check_vertex(v2)?;
    if v1 == v2 {
        return Ok(WeightedQueryResult::trivial(v1));
    }
    let start = opts.start_level(h);
    let coarse = h.graph(start);
    let (c1, c2) = (h.class_at(start, v1), h.class_at(start, v2));
    let lower = costs_to(coarse, c2);
    if lower[c1] == UNREACHED {
        return Ok(WeightedQueryResult::unreachable());
    }
    let fallback = || -> Result<WeightedQueryResult> {
        let mut r = shortest_weighted_path(base, v1, v2, opts.max_paths)?;
        r.fallback = true;
        Ok(r)
    };

    // A cheapest path is simple: at most order - 1 edges, none above the max weight.
    let max_weight = base.weighted_edges().map(|e| e.2).max().unwrap_or(1);
    let ceiling = (base.order() as u64 - 1).saturating_mul(max_weight);
    let work = opts.budget.saturating_mul(64);

    let mut best: Option<(u64, usize)> = None;
    let mut paths: Vec<Path> = Vec::new();
    let mut path_count = 0u64;
    let mut band = lower[c1];
    while band <= ceiling {
        if best.is_some_and(|(cost, _)| band > cost) {
            break;
        }
        let Some(candidates) = walks_of_cost(coarse, c1, c2, band, &lower, opts.budget, work) else {
            return fallback();
        };
        for walk in candidates {
            let classes = walk.vertices();
            let table = layered_costs(base, v1, v2, walk.hops(), |j, w| h.class_at(start, w) == classes[j]);
            let Some(table) = table else { continue };
            let key = (table.cost, table.hops());
            if best.is_none_or(|b| key < b) {
                best = Some(key);
                paths.clear();
                path_count = 0;
            }
            if best == Some(key) {
                paths.extend(optimal_walks(base, &table, opts.max_paths.saturating_add(1)));
                path_count = path_count.saturating_add(count_optimal(base, &table));
            }
        }
        band += 1;
    }
    let Some((cost, hops)) = best else {
        return Ok(WeightedQueryResult::unreachable());
    };
    paths.sort();
    paths.truncate(opts.max_paths);
    Ok(WeightedQueryResult {
        cost: Some(cost),
        hop_length: Some(hops),
        truncated: path_count > paths.len() as u64,
        paths,
        path_count,
        ..WeightedQueryResult::default()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{oracle_of, G0_EDGES};
    use crate::hierarchy::{build_hierarchy, pair_partition};
    use bitpath_oracle::{all_simple_paths_from, brute_force_walks, dijkstra_distance, AdjacencyList};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rw(n: i64, d: u64) -> RationalWeight {
        RationalWeight::new(n, d).unwrap()
    }

    // a=0, b=1, c=2
    fn triangle() -> Graph {
        Graph::from_weighted_edges(3, [(0, 1, 5), (0, 2, 1), (2, 1, 1)]).unwrap()
    }

    fn random_weighted(rng: &mut StdRng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if rng.gen_bool(p) {
                    edges.push((u, v, rng.gen_range(1..=9)));
                }
            }
        }
        Graph::from_weighted_edges(n, edges).unwrap()
    }

    fn min_walk_cost(o: &AdjacencyList, v1: usize, v2: usize, hops: usize) -> Option<u64> {
        brute_force_walks(o, v1, v2, hops, 1 << 20)
            .unwrap()
            .iter()
            .map(|w| o.path_cost(w).unwrap())
            .min()
    }

    #[test]
    fn rational_reduction() {
        assert_eq!(rw(6, 4), rw(3, 2));
        assert_eq!(rw(3, 2).to_string(), "3/2");
        assert_eq!(rw(4, 2).to_string(), "2");
        assert_eq!(RationalWeight::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn rationalize_examples() {
        assert_eq!(
            rationalize_weights(&[rw(1, 2), rw(1, 4), rw(3, 2)]),
            Ok((vec![2, 1, 6], 4))
        );
        assert_eq!(rationalize_weights(&[rw(3, 1), rw(7, 1)]), Ok((vec![3, 7], 1)));
        assert!(matches!(
            rationalize_weights(&[rw(0, 1)]),
            Err(Error::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            rationalize_weights(&[rw(-2, 3)]),
            Err(Error::NonPositiveWeight { .. })
        ));
    }

    #[test]
    fn hop_cost_examples() {
        let g = triangle();
        let o = oracle_of(&g);
        assert_eq!(min_walk_cost(&o, 0, 1, 1), Some(5));
        assert_eq!(min_walk_cost(&o, 0, 1, 2), Some(2));
        assert_eq!(min_cost_at_hops(&g, 0, 1, 1).unwrap().unwrap().0, 5);
        assert_eq!(min_cost_at_hops(&g, 0, 1, 2).unwrap().unwrap().0, 2);
        assert_eq!(min_cost_at_hops(&g, 1, 1, 0).unwrap().unwrap().0, 0);
        assert!(min_cost_at_hops(&g, 0, 1, 0).unwrap().is_none());
        let bare = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(min_cost_at_hops(&bare, 0, 1, 1), Err(Error::MissingWeights));
    }

    #[test]
    fn weighted_query_examples() {
        let g = triangle();
        let r = shortest_weighted_path(&g, 0, 1, 10).unwrap();
        assert_eq!(dijkstra_distance(&oracle_of(&g), 0, 1), Ok(Some(2)));
        assert_eq!(r.cost, Some(2));
        assert_eq!(r.hop_length, Some(2));
        assert_eq!(r.paths, vec![Path::new(vec![0, 2, 1])]);

        let unit = Graph::from_edges(5, G0_EDGES).unwrap().with_unit_weights();
        let r = shortest_weighted_path(&unit, 1, 4, 10).unwrap();
        assert_eq!((r.cost, r.hop_length), (Some(2), Some(2)));
        assert_eq!(r.paths, vec![Path::new(vec![1, 3, 4])]);

        let r = shortest_weighted_path(&g, 2, 2, 10).unwrap();
        assert_eq!(
            (r.cost, r.hop_length, r.paths),
            (Some(0), Some(0), vec![Path::single(2)])
        );
        assert!(!shortest_weighted_path(&g, 1, 0, 10).unwrap().is_reachable());
    }

    #[test]
    fn thicken_valued_examples() {
        // 1 -> 3 (4), 2 -> 3 (2), classes {1,2}, {3}  (zero-based 0,1 | 2)
        let g = Graph::from_weighted_edges(3, [(0, 2, 4), (1, 2, 2)]).unwrap();
        let p = Partition::from_class_map(vec![0, 0, 1]).unwrap();
        let q = thicken_valued(&g, &p).unwrap();
        assert_eq!(q.weight(0, 1), Some(2));
        assert_eq!(thicken_valued(&g, &Partition::singletons(3)).unwrap(), g);
        let intra = Graph::from_weighted_edges(2, [(0, 1, 3)]).unwrap();
        let q = thicken_valued(&intra, &pair_partition(2)).unwrap();
        assert_eq!(q.weight(0, 0), Some(3));
        assert!(thicken_valued(&g.without_weights(), &p).is_err());
    }

    #[test]
    fn hierarchical_weighted_examples() {
        let unit = Graph::from_edges(5, G0_EDGES).unwrap().with_unit_weights();
        let h = build_hierarchy(unit, 1).unwrap();
        for start in 0..h.depth() {
            let opts = SearchOptions {
                start_level: Some(start),
                ..SearchOptions::default()
            };
            let r = hierarchical_weighted_path(&h, 1, 4, &opts).unwrap();
            assert_eq!(r.cost, Some(2));
            assert_eq!(r.paths, vec![Path::new(vec![1, 3, 4])]);
        }
        let h = build_hierarchy(triangle(), 3).unwrap();
        assert_eq!(h.depth(), 1);
        let r = hierarchical_weighted_path(&h, 0, 1, &SearchOptions::default()).unwrap();
        assert_eq!(r.cost, Some(2));
    }

    #[test]
    fn scale_invariance() {
        let mut rng = StdRng::seed_from_u64(8);
        for _ in 0..50 {
            let n = rng.gen_range(2..=12);
            let g = random_weighted(&mut rng, n, 0.3);
            let factor = rng.gen_range(2..=5);
            let scaled = Graph::from_weighted_edges(n, g.weighted_edges().map(|(u, v, w)| (u, v, w * factor))).unwrap();
            let (v1, v2) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let a = shortest_weighted_path(&g, v1, v2, 100).unwrap();
            let b = shortest_weighted_path(&scaled, v1, v2, 100).unwrap();
            assert_eq!(a.cost.map(|c| c * factor), b.cost);
            assert_eq!(a.paths, b.paths);
        }
    }

    #[test]
    fn matches_dijkstra_and_enumeration() {
        let mut rng = StdRng::seed_from_u64(12);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let g = random_weighted(&mut rng, n, 0.3);
            let o = oracle_of(&g);
            let (v1, v2) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let r = shortest_weighted_path(&g, v1, v2, usize::MAX).unwrap();
            assert_eq!(r.cost, dijkstra_distance(&o, v1, v2).unwrap());
            if let (Some(cost), Some(hops)) = (r.cost, r.hop_length) {
                let expect: Vec<Path> = brute_force_walks(&o, v1, v2, hops, 1 << 20)
                    .unwrap()
                    .into_iter()
                    .filter(|w| o.path_cost(w) == Some(cost))
                    .map(Path::new)
                    .collect();
                assert_eq!(r.paths, expect);
                assert_eq!(r.path_count, expect.len() as u64);
                for shorter in 0..hops {
                    assert!(min_walk_cost(&o, v1, v2, shorter).is_none_or(|c| c > cost));
                }
            }
            let h = build_hierarchy(g.clone(), 1).unwrap();
            for start in [None, Some(h.depth() - 1)] {
                let opts = SearchOptions {
                    max_paths: usize::MAX,
                    start_level: start,
                    ..SearchOptions::default()
                };
                let hr = hierarchical_weighted_path(&h, v1, v2, &opts).unwrap();
                assert_eq!((hr.cost, hr.hop_length), (r.cost, r.hop_length));
                assert_eq!(hr.paths, r.paths);
                assert_eq!(hr.path_count, r.path_count);
            }
        }
    }

    #[test]
    fn coarse_cost_bounds_fine_cost() {
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..30 {
            let n = rng.gen_range(1..=10);
            let g = random_weighted(&mut rng, n, 0.2);
            let o = oracle_of(&g);
            let h = build_hierarchy(g.clone(), 1).unwrap();
            for v in 0..n {
                for p in all_simple_paths_from(&o, v, 1 << 20).unwrap() {
                    let fine = o.path_cost(&p).unwrap();
                    for i in 1..h.depth() {
                        let image = Path::new(p.iter().map(|&u| h.class_at(i, u)).collect());
                        assert!(h.graph(i).path_cost(&image).unwrap() <= fine);
                    }
                }
            }
        }
    }
}
