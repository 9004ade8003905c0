//! Naive reference implementations used to check the bit-row search.
//!
//! Nothing here shares code or data layout with `bitpath-core`: graphs are
//! plain adjacency lists built from edge triples, and every routine is the
//! textbook version, such as queue-based BFS or binary-heap Dijkstra.
//! Speed is not a goal.
#![no_std]

extern crate alloc;

use alloc::collections::{BTreeMap, BinaryHeap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

/// A walk as its vertex sequence.
pub type Walk = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    VertexOutOfRange {
        vertex: usize,
        order: usize,
    },
    /// Dijkstra was asked to run on a graph built without weights.
    MissingWeights,
    /// Enumeration produced more than `cap` results.
    CapExceeded {
        cap: usize,
    },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            OracleError::MissingWeights => f.write_str("graph has no edge weights"),
            OracleError::CapExceeded { cap } => write!(f, "more than {cap} results"),
        }
    }
}

impl core::error::Error for OracleError {}

/// Directed graph as a vector of successor lists.
#[derive(Debug, Clone)]
pub struct AdjacencyList {
    succ: Vec<Vec<(usize, u64)>>,
    weighted: bool,
}

impl AdjacencyList {
    /// Unweighted graph; every edge counts as cost 1 where a cost is needed.
    pub fn from_edges<I>(order: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut succ = vec![Vec::new(); order];
        for (u, v) in edges {
            succ[u].push((v, 1));
        }
        for list in &mut succ {
            list.sort_unstable();
            list.dedup();
        }
        AdjacencyList { succ, weighted: false }
    }

    pub fn from_weighted_edges<I>(order: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut succ = vec![Vec::new(); order];
        for (u, v, w) in edges {
            succ[u].push((v, w));
        }
        for list in &mut succ {
            list.sort_unstable();
        }
        AdjacencyList { succ, weighted: true }
    }

    pub fn order(&self) -> usize {
        self.succ.len()
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    pub fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.succ[u].iter().map(|&(v, _)| v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.succ[u].iter().any(|&(w, _)| w == v)
    }

    /// Cheapest weight among parallel `u -> v` edges.
    pub fn weight(&self, u: usize, v: usize) -> Option<u64> {
        self.succ[u].iter().filter(|&&(w, _)| w == v).map(|&(_, c)| c).min()
    }

    /// Sum of edge weights along `path`, or `None` if some step is not an edge.
    pub fn path_cost(&self, path: &[usize]) -> Option<u64> {
        path.windows(2).map(|pair| self.weight(pair[0], pair[1])).sum()
    }

    fn check(&self, v: usize) -> Result<(), OracleError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(OracleError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }
}

/// Hop distance by breadth-first search.
pub fn bfs_distance(g: &AdjacencyList, from: usize, to: usize) -> Result<Option<usize>, OracleError> {
    g.check(from)?;
    g.check(to)?;
    let mut dist = vec![usize::MAX; g.order()];
    let mut queue = VecDeque::new();
    dist[from] = 0;
    queue.push_back(from);
    while let Some(u) = queue.pop_front() {
        if u == to {
            return Ok(Some(dist[u]));
        }
        for w in g.successors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok(None)
}

/// Hop distances from `from` to every vertex (`None` when unreachable).
pub fn bfs_all(g: &AdjacencyList, from: usize) -> Result<Vec<Option<usize>>, OracleError> {
    g.check(from)?;
    let mut dist = vec![None; g.order()];
    let mut queue = VecDeque::new();
    dist[from] = Some(0);
    queue.push_back(from);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or(0);
        for w in g.successors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// Hop distance and number of shortest paths (saturating), by BFS with
/// per-vertex path counters.
pub fn count_shortest_paths(g: &AdjacencyList, from: usize, to: usize) -> Result<Option<(usize, u64)>, OracleError> {
    g.check(to)?;
    let dist = bfs_all(g, from)?;
    let Some(d) = dist[to] else { return Ok(None) };
    let mut order: Vec<usize> = (0..g.order()).filter(|&v| dist[v].is_some_and(|x| x <= d)).collect();
    order.sort_by_key(|&v| dist[v]);
    let mut ways = vec![0u64; g.order()];
    ways[from] = 1;
    for u in order {
        let du = dist[u].unwrap();
        for w in g.successors(u) {
            if dist[w] == Some(du + 1) {
                ways[w] = ways[w].saturating_add(ways[u]);
            }
        }
    }
    Ok(Some((d, ways[to])))
}

/// Vertices at the end of some walk of exactly `hops` hops from `from`,
/// ascending, by expanding the endpoint set one hop at a time.
pub fn walk_endpoints(g: &AdjacencyList, from: usize, hops: usize) -> Result<Vec<usize>, OracleError> {
    g.check(from)?;
    let mut current = BTreeMap::new();
    current.insert(from, ());
    for _ in 0..hops {
        let mut next = BTreeMap::new();
        for &u in current.keys() {
            for w in g.successors(u) {
                next.insert(w, ());
            }
        }
        current = next;
    }
    Ok(current.into_keys().collect())
}

/// Weighted distance by Dijkstra with a binary heap.
pub fn dijkstra_distance(g: &AdjacencyList, from: usize, to: usize) -> Result<Option<u64>, OracleError> {
    g.check(from)?;
    g.check(to)?;
    if !g.weighted {
        return Err(OracleError::MissingWeights);
    }
    let mut dist = vec![u64::MAX; g.order()];
    let mut heap = BinaryHeap::new();
    dist[from] = 0;
    heap.push(Reverse((0u64, from)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        if u == to {
            return Ok(Some(d));
        }
        for &(w, c) in &g.succ[u] {
            let nd = d + c;
            if nd < dist[w] {
                dist[w] = nd;
                heap.push(Reverse((nd, w)));
            }
        }
    }
    Ok(None)
}

/// Every walk of exactly `exact_hops` hops from `from` to `to`, in
/// lexicographic order. Fails with [`OracleError::CapExceeded`] instead of
/// truncating when more than `cap` walks exist.
pub fn brute_force_walks(
    g: &AdjacencyList,
    from: usize,
    to: usize,
    exact_hops: usize,
    cap: usize,
) -> Result<Vec<Walk>, OracleError> {
    g.check(from)?;
    g.check(to)?;
    let mut out = Vec::new();
    let mut walk = vec![from];
    extend_walks(g, to, exact_hops, cap, &mut walk, &mut out)?;
    Ok(out)
}

fn extend_walks(
    g: &AdjacencyList,
    to: usize,
    hops: usize,
    cap: usize,
    walk: &mut Vec<usize>,
    out: &mut Vec<Walk>,
) -> Result<(), OracleError> {
    let last = *walk.last().unwrap();
    if walk.len() == hops + 1 {
        if last == to {
            if out.len() == cap {
                return Err(OracleError::CapExceeded { cap });
            }
            out.push(walk.clone());
        }
        return Ok(());
    }
    let next: Vec<usize> = g.successors(last).collect();
    for w in next {
        walk.push(w);
        extend_walks(g, to, hops, cap, walk, out)?;
        walk.pop();
    }
    Ok(())
}

/// Whether some walk of exactly `hops` hops joins `from` to `to`.
///
/// Depth-first search over (vertex, remaining hops) states, remembering
/// states already known to fail.
pub fn walk_exists(g: &AdjacencyList, from: usize, to: usize, hops: usize) -> Result<bool, OracleError> {
    g.check(from)?;
    g.check(to)?;
    let mut dead = BTreeMap::new();
    Ok(walk_search(g, from, to, hops, &mut dead))
}

fn walk_search(g: &AdjacencyList, u: usize, to: usize, left: usize, dead: &mut BTreeMap<(usize, usize), ()>) -> bool {
    if left == 0 {
        return u == to;
    }
    if dead.contains_key(&(u, left)) {
        return false;
    }
    let next: Vec<usize> = g.successors(u).collect();
    for w in next {
        if walk_search(g, w, to, left - 1, dead) {
            return true;
        }
    }
    dead.insert((u, left), ());
    false
}

/// All shortest paths by BFS distance plus brute-force enumeration.
pub fn all_shortest_paths(
    g: &AdjacencyList,
    from: usize,
    to: usize,
    cap: usize,
) -> Result<Option<(usize, Vec<Walk>)>, OracleError> {
    match bfs_distance(g, from, to)? {
        None => Ok(None),
        Some(d) => Ok(Some((d, brute_force_walks(g, from, to, d, cap)?))),
    }
}

/// Every simple path starting at `from` (including the trivial one), capped.
pub fn all_simple_paths_from(g: &AdjacencyList, from: usize, cap: usize) -> Result<Vec<Walk>, OracleError> {
    g.check(from)?;
    let mut out = Vec::new();
    let mut on_path = vec![false; g.order()];
    let mut path = vec![from];
    on_path[from] = true;
    simple_paths(g, cap, &mut path, &mut on_path, &mut out)?;
    Ok(out)
}

fn simple_paths(
    g: &AdjacencyList,
    cap: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<Walk>,
) -> Result<(), OracleError> {
    if out.len() == cap {
        return Err(OracleError::CapExceeded { cap });
    }
    out.push(path.clone());
    let last = *path.last().unwrap();
    let next: Vec<usize> = g.successors(last).collect();
    for w in next {
        if on_path[w] {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        simple_paths(g, cap, path, on_path, out)?;
        path.pop();
        on_path[w] = false;
    }
    Ok(())
}

/// One oracle-versus-subject comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub instance: String,
    pub from: usize,
    pub to: usize,
    pub expected: Option<u64>,
    pub actual: Option<u64>,
    /// Whether path sets were compared in addition to distances.
    pub paths_compared: bool,
    pub paths_match: bool,
}

impl OracleReport {
    pub fn matches(&self) -> bool {
        self.expected == self.actual && (!self.paths_compared || self.paths_match)
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}->{}: oracle {:?} subject {:?} {}",
            self.instance,
            self.from,
            self.to,
            self.expected,
            self.actual,
            if self.matches() { "ok" } else { "MISMATCH" }
        )
    }
}
