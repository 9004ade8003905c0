//! Multilevel search over a stack of quotient graphs.
//!
//! A thickening of `G` under a partition of its vertices is the quotient
//! graph on the classes, with an edge `a -> b` whenever some member of `a`
//! has an edge to some member of `b` (self-loops included). Every path of
//! length `k` in `G` maps classwise onto a path of length `k` in the
//! quotient, so shortest distances can only shrink going up, and every fine
//! shortest path is the refinement of some coarse path of the same length.
//!
//! [`build_hierarchy`] stacks thickenings until the order drops to a floor.
//! [`hierarchical_shortest_path`] looks for coarse candidates at a start
//! level and refines them one level at a time down to the input graph.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::form::EdgeForm;
use crate::graph::{Direction, Graph, Path, VertexId};
use crate::unvalued::{
    self, meet_layers, read_layers, shortest_path_length, LayerMeet, QueryResult, DEFAULT_MAX_PATHS,
};

/// An equivalence relation on `0..order`, as a class map plus member lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<VertexId>,
    members: Vec<Vec<VertexId>>,
}

impl Partition {
    /// Classes must be numbered `0..c` with none left empty.
    pub fn from_class_map(class_of: Vec<VertexId>) -> Result<Self> {
        let count = class_of.iter().max().map_or(0, |&c| c + 1);
        let mut members = vec![Vec::new(); count];
        for (v, &c) in class_of.iter().enumerate() {
            members[c].push(v);
        }
        if members.iter().any(Vec::is_empty) {
            return Err(Error::MalformedPartition("class numbering has gaps"));
        }
        Ok(Partition { class_of, members })
    }

    /// Every vertex in its own class.
    pub fn singletons(order: usize) -> Self {
        Partition {
            class_of: (0..order).collect(),
            members: (0..order).map(|v| vec![v]).collect(),
        }
    }

    /// Number of vertices partitioned.
    pub fn order(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_count(&self) -> usize {
        self.members.len()
    }

    pub fn class_of(&self, v: VertexId) -> VertexId {
        self.class_of[v]
    }

    pub fn class_map(&self) -> &[VertexId] {
        &self.class_of
    }

    /// Members of class `c`, ascending.
    pub fn members(&self, c: VertexId) -> &[VertexId] {
        &self.members[c]
    }
}

/// `{0,1}, {2,3}, …`, with a trailing singleton when `order` is odd.
pub fn pair_partition(order: usize) -> Partition {
    Partition::from_class_map((0..order).map(|v| v / 2).collect()).expect("pairing numbers classes contiguously")
}

/// How the vertices of one level are grouped to form the next.
pub trait PartitionStrategy {
    fn partition(&self, g: &Graph) -> Partition;
}

/// Groups consecutive vertex ids two by two.
#[derive(Clone, Copy, Debug, Default)]
pub struct ConsecutivePairs;

impl PartitionStrategy for ConsecutivePairs {
    fn partition(&self, g: &Graph) -> Partition {
        pair_partition(g.order())
    }
}

/// Quotient graph of `g` under `p`, unweighted.
pub fn thicken(g: &Graph, p: &Partition) -> Result<Graph> {
    check_partition(g, p)?;
    let mut edges: Vec<_> = g.edges().map(|(u, v)| (p.class_of(u), p.class_of(v))).collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(p.class_count(), edges)
}

/// Quotient keeping, for each class pair, the cheapest generating edge.
pub(crate) fn thicken_min_weight(g: &Graph, p: &Partition) -> Result<Graph> {
    check_partition(g, p)?;
    let mut best: BTreeMap<(VertexId, VertexId), u64> = BTreeMap::new();
    for (u, v, w) in g.weighted_edges() {
        best.entry((p.class_of(u), p.class_of(v)))
            .and_modify(|c| *c = (*c).min(w))
            .or_insert(w);
    }
    Graph::from_weighted_edges(p.class_count(), best.into_iter().map(|((a, b), w)| (a, b, w)))
}

/// The quotient used when stacking levels: valued iff `g` is weighted.
fn quotient(g: &Graph, p: &Partition) -> Result<Graph> {
    if g.is_weighted() {
        thicken_min_weight(g, p)
    } else {
        thicken(g, p)
    }
}

fn check_partition(g: &Graph, p: &Partition) -> Result<()> {
    if p.order() != g.order() {
        return Err(Error::MalformedPartition("partition order differs from graph order"));
    }
    Ok(())
}

/// One graph of a hierarchy, with the partition of the level below it that
/// produced it (`None` for level 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    graph: Graph,
    partition: Option<Partition>,
    index: usize,
}

impl Level {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn partition(&self) -> Option<&Partition> {
        self.partition.as_ref()
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Indicator form, over the next finer level, of the members of `coarse`.
    pub fn dumb_refinement(&self, coarse: VertexId) -> Result<EdgeForm> {
        let p = self.partition.as_ref().ok_or(Error::LevelOutOfRange {
            level: self.index.wrapping_sub(1),
            depth: self.index + 1,
        })?;
        self.graph.check_vertex(coarse)?;
        EdgeForm::from_indices(p.order(), p.members(coarse).iter().copied())
    }

    /// OR of the dumb refinements of every class in `form`.
    pub fn dumb_refinement_of_form(&self, form: &EdgeForm) -> Result<EdgeForm> {
        self.graph.check_form(form)?;
        let p = self.partition.as_ref().ok_or(Error::LevelOutOfRange {
            level: self.index.wrapping_sub(1),
            depth: self.index + 1,
        })?;
        EdgeForm::from_indices(p.order(), form.support().flat_map(|c| p.members(c).iter().copied()))
    }
}

/// A chain of thickenings `G_0 = G, G_1, …, G_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hierarchy {
    levels: Vec<Level>,
    // class_at[i][v]: class of input vertex v at level i.
    class_at: Vec<Vec<VertexId>>,
}

impl Hierarchy {
    /// Rebuilds a hierarchy from its input graph and per-level partitions,
    /// recomputing every quotient.
    pub fn from_partitions(base: Graph, partitions: Vec<Partition>) -> Result<Self> {
        let mut h = Hierarchy::single(base);
        for p in partitions {
            let next = quotient(h.levels.last().unwrap().graph(), &p)?;
            h.push(next, p);
        }
        Ok(h)
    }

    /// Assembles a hierarchy from stored graphs and partitions, checking that
    /// each graph is the quotient of the one below it.
    pub fn from_parts(graphs: Vec<Graph>, partitions: Vec<Partition>) -> Result<Self> {
        if graphs.is_empty() || partitions.len() + 1 != graphs.len() {
            return Err(Error::InconsistentHierarchy("need one partition per level above 0"));
        }
        let mut graphs = graphs.into_iter();
        let mut h = Hierarchy::single(graphs.next().unwrap());
        for (g, p) in graphs.zip(partitions) {
            let expect = quotient(h.levels.last().unwrap().graph(), &p)?;
            if expect != g {
                return Err(Error::InconsistentHierarchy(
                    "level is not the quotient of the level below",
                ));
            }
            h.push(g, p);
        }
        Ok(h)
    }

    fn single(base: Graph) -> Self {
        let class_at = vec![(0..base.order()).collect()];
        Hierarchy {
            levels: vec![Level {
                graph: base,
                partition: None,
                index: 0,
            }],
            class_at,
        }
    }

    fn push(&mut self, graph: Graph, partition: Partition) {
        let below = self.class_at.last().unwrap();
        let map = below.iter().map(|&c| partition.class_of(c)).collect();
        self.class_at.push(map);
        let index = self.levels.len();
        self.levels.push(Level {
            graph,
            partition: Some(partition),
            index,
        });
    }

    /// Number of levels, including level 0.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> Result<&Level> {
        self.levels.get(i).ok_or(Error::LevelOutOfRange {
            level: i,
            depth: self.depth(),
        })
    }

    pub fn base(&self) -> &Graph {
        &self.levels[0].graph
    }

    pub fn graph(&self, i: usize) -> &Graph {
        &self.levels[i].graph
    }

    /// Class at level `level` of input vertex `v`.
    pub fn class_at(&self, level: usize, v: VertexId) -> VertexId {
        self.class_at[level][v]
    }

    /// Estimated probability that two vertices of level `i` share a
    /// successor: `2x - x²` with `x = e_i / V_i²`.
    pub fn collision_estimate(&self, i: usize) -> f64 {
        let g = self.graph(i);
        let v = g.order() as f64;
        let x = g.edge_count() as f64 / (v * v);
        2.0 * x - x * x
    }

    fn partition(&self, i: usize) -> &Partition {
        self.levels[i]
            .partition
            .as_ref()
            .expect("levels above 0 carry a partition")
    }
}

/// Stacks consecutive-pair thickenings until the order is at most `min_order`.
pub fn build_hierarchy(g: Graph, min_order: usize) -> Result<Hierarchy> {
    build_hierarchy_with(g, min_order, &ConsecutivePairs)
}

/// Like [`build_hierarchy`] with a custom grouping. Stacking also stops when
/// the strategy no longer reduces the order.
pub fn build_hierarchy_with(g: Graph, min_order: usize, strategy: &dyn PartitionStrategy) -> Result<Hierarchy> {
    if min_order == 0 {
        return Err(Error::ZeroMinOrder);
    }
    let mut h = Hierarchy::single(g);
    loop {
        let top = h.levels.last().unwrap().graph();
        if top.order() <= min_order {
            break;
        }
        let p = strategy.partition(top);
        if p.class_count() >= top.order() {
            break;
        }
        let next = quotient(top, &p)?;
        h.push(next, p);
    }
    Ok(h)
}

/// Deepest level whose collision estimate is below one half (0 if none is).
pub fn choose_start_level(h: &Hierarchy) -> usize {
    (0..h.depth())
        .rev()
        .find(|&i| h.collision_estimate(i) < 0.5)
        .unwrap_or(0)
}

/// All refinements of `coarse_path` (a walk at level `level`) into level
/// `level - 1`, from `v1` to `v2`, in lexicographic order, at most
/// `max_paths`. An empty list means the coarse path has no refinement.
pub fn refine_path(
    h: &Hierarchy,
    level: usize,
    coarse_path: &Path,
    v1: VertexId,
    v2: VertexId,
    max_paths: usize,
) -> Result<Vec<Path>> {
    if level == 0 || level >= h.depth() {
        return Err(Error::LevelOutOfRange {
            level,
            depth: h.depth(),
        });
    }
    if coarse_path.is_empty() {
        return Err(Error::EmptyPath);
    }
    if !coarse_path.is_walk_of(h.graph(level)) {
        return Err(Error::InvalidPath);
    }
    let fine = h.graph(level - 1);
    fine.check_vertex(v1)?;
    fine.check_vertex(v2)?;
    let p = h.partition(level);
    let classes = coarse_path.vertices();
    for (v, c) in [(v1, classes[0]), (v2, classes[classes.len() - 1])] {
        if p.class_of(v) != c {
            return Err(Error::ClassMismatch { vertex: v, class: c });
        }
    }
    let mut paths = refine_once(fine, p, classes, v1, v2, max_paths);
    paths.sort();
    Ok(paths)
}

/// Forward sweep `F_j = (F_{j-1} + 1) ∧ d(c_j)` from `v1`, backward sweep
/// `Res_j = (Res_{j+1} - 1) ∧ F_j` from `v2`, then a depth-first read.
fn refine_once(
    fine: &Graph,
    p: &Partition,
    classes: &[VertexId],
    v1: VertexId,
    v2: VertexId,
    limit: usize,
) -> Vec<Path> {
    let k = classes.len() - 1;
    let mut layers = Vec::with_capacity(k + 1);
    let mut start = EdgeForm::zeros(fine.order());
    start.insert(v1);
    layers.push(start);
    for &c in &classes[1..] {
        let next = fine.step_within(layers.last().unwrap(), Direction::Forward, |w| p.class_of(w) == c);
        if next.is_null() {
            return Vec::new();
        }
        layers.push(next);
    }
    if !backward_sweep(fine, &mut layers, v2) {
        return Vec::new();
    }
    read_layers(fine, &LayerMeet::from_layers(v1, v2, layers), limit)
}

/// Narrows forward layers to the vertices that also reach `v2` on time.
/// Returns false if some layer empties.
fn backward_sweep(g: &Graph, layers: &mut [EdgeForm], v2: VertexId) -> bool {
    let k = layers.len() - 1;
    if !layers[k].contains(v2) {
        return false;
    }
    let mut end = EdgeForm::zeros(g.order());
    end.insert(v2);
    layers[k] = end;
    for j in (0..k).rev() {
        let back = g.step_within(&layers[j + 1], Direction::Backward, |u| layers[j].contains(u));
        if back.is_null() {
            return false;
        }
        layers[j] = back;
    }
    true
}

/// Whether a walk of exactly `k` hops joins `v1` to `v2` in the input graph,
/// decided by pushing the layer meet of the start level down through the
/// hierarchy: at each finer level the sweeps are confined to the dumb
/// refinements of the coarser layers.
fn corridor_feasible(h: &Hierarchy, start: usize, k: usize, v1: VertexId, v2: VertexId) -> bool {
    let coarse = h.graph(start);
    let Ok(meet) = meet_layers(coarse, h.class_at(start, v1), h.class_at(start, v2), k) else {
        return false;
    };
    if !meet.is_feasible() {
        return false;
    }
    let mut corridor: Vec<EdgeForm> = meet.layers().to_vec();
    for level in (1..=start).rev() {
        let fine = h.graph(level - 1);
        let p = h.partition(level);
        let (a, b) = (h.class_at(level - 1, v1), h.class_at(level - 1, v2));
        let mut layers = Vec::with_capacity(k + 1);
        let mut first = EdgeForm::zeros(fine.order());
        first.insert(a);
        layers.push(first);
        for allowed in &corridor[1..] {
            let next = fine.step_within(layers.last().unwrap(), Direction::Forward, |w| {
                allowed.contains(p.class_of(w))
            });
            if next.is_null() {
                return false;
            }
            layers.push(next);
        }
        if !backward_sweep(fine, &mut layers, b) {
            return false;
        }
        corridor = layers;
    }
    true
}

/// Knobs for the hierarchical queries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Cap on listed paths.
    pub max_paths: usize,
    /// Most candidates tolerated at any level for one length before falling
    /// back to the flat search.
    pub budget: usize,
    /// Level to search first; `None` uses [`choose_start_level`].
    pub start_level: Option<usize>,
}

pub const DEFAULT_BUDGET: usize = 4096;

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_paths: DEFAULT_MAX_PATHS,
            budget: DEFAULT_BUDGET,
            start_level: None,
        }
    }
}

impl SearchOptions {
    pub(crate) fn start_level(&self, h: &Hierarchy) -> usize {
        self.start_level
            .unwrap_or_else(|| choose_start_level(h))
            .min(h.depth() - 1)
    }
}

/// Shortest paths from `v1` to `v2` in the input graph of `h`.
///
/// For `k` from the start-level distance upwards: skip `k` when no `k`-hop
/// walk survives refinement of the start-level layer meet; otherwise list the
/// `k`-hop coarse paths between the endpoint classes and refine each of them
/// level by level. The first `k` with a surviving refinement is the answer.
/// Exceeding `budget` candidates at any level answers with the flat search
/// instead and sets [`QueryResult::fallback`].
pub fn hierarchical_shortest_path(
    h: &Hierarchy,
    v1: VertexId,
    v2: VertexId,
    opts: &SearchOptions,
) -> Result<QueryResult> {
    let base = h.base();
    base.check_vertex(v1)?;
    base.check_vertex(v2)?;
    if v1 == v2 {
        return Ok(QueryResult::trivial(v1));
    }
    let start = opts.start_level(h);
    let (c1, c2) = (h.class_at(start, v1), h.class_at(start, v2));
    // A fine path projects onto a coarse one of the same length, so the
    // coarse distance is a lower bound and coarse unreachability is final.
    let Some(lower) = shortest_path_length(h.graph(start), c1, c2)? else {
        return Ok(QueryResult::unreachable());
    };
    let fallback = || -> Result<QueryResult> {
        let mut r = unvalued::shortest_paths(base, v1, v2, opts.max_paths)?;
        r.fallback = true;
        Ok(r)
    };

    // A shortest path is simple, hence at most order - 1 hops.
    for k in lower..base.order() {
        if !corridor_feasible(h, start, k, v1, v2) {
            continue;
        }
        let meet = meet_layers(h.graph(start), c1, c2, k)?;
        let mut candidates = read_layers(h.graph(start), &meet, opts.budget.saturating_add(1));
        if candidates.len() > opts.budget {
            return fallback();
        }
        for level in (1..=start).rev() {
            let fine = h.graph(level - 1);
            let p = h.partition(level);
            let (a, b) = (h.class_at(level - 1, v1), h.class_at(level - 1, v2));
            let mut refined = Vec::new();
            for coarse in &candidates {
                let room = opts.budget + 1 - refined.len();
                refined.extend(refine_once(fine, p, coarse.vertices(), a, b, room));
                if refined.len() > opts.budget {
                    return fallback();
                }
            }
            candidates = refined;
        }
        if candidates.is_empty() {
            continue;
        }
        candidates.sort();
        let path_count = candidates.len() as u64;
        let truncated = candidates.len() > opts.max_paths;
        candidates.truncate(opts.max_paths);
        return Ok(QueryResult {
            hop_length: Some(k),
            paths: candidates,
            truncated,
            path_count,
            fallback: false,
        });
    }
    Ok(QueryResult::unreachable())
}
