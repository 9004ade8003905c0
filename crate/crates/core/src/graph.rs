//! Directed graphs as outgoing/incoming rows, and the stepping operators.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::form::EdgeForm;

/// Zero-based vertex index.
pub type VertexId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Follow outgoing rows (`e + 1`).
    Forward,
    /// Follow incoming rows (`e - 1`).
    Backward,
}

/// A directed graph of fixed order, immutable once built.
///
/// Row `v` of the outgoing family is the set of successors of `v`; row `v`
/// of the incoming family is the set of its predecessors. Rows are kept as
/// sorted index lists (one contiguous buffer per family) and are expanded to
/// [`EdgeForm`]s on demand; incoming rows are always obtained by transposing
/// the outgoing ones. Self-loops are allowed, parallel edges are not.
///
/// A weighted graph carries one positive integer cost per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    out_offsets: Vec<usize>,
    out_targets: Vec<VertexId>,
    out_weights: Option<Vec<u64>>,
    in_offsets: Vec<usize>,
    in_sources: Vec<VertexId>,
}

impl Graph {
    /// Unweighted graph from an edge list. Duplicate edges are rejected.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let edges = edges.into_iter().map(|(u, v)| (u, v, 1)).collect();
        Self::build(order, edges, false)
    }

    /// Weighted graph from `(from, to, cost)` triples; every cost must be ≥ 1.
    pub fn from_weighted_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, u64)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        if let Some(&(from, to, _)) = edges.iter().find(|e| e.2 == 0) {
            return Err(Error::ZeroWeight { from, to });
        }
        Self::build(order, edges, true)
    }

    /// Unweighted graph whose outgoing row `v` is `rows[v]`.
    pub fn from_rows(rows: &[EdgeForm]) -> Result<Self> {
        let order = rows.len();
        let mut edges = Vec::new();
        for (u, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::DimensionMismatch {
                    left: row.len(),
                    right: order,
                });
            }
            edges.extend(row.support().map(|v| (u, v, 1)));
        }
        Self::build(order, edges, false)
    }

    fn build(order: usize, mut edges: Vec<(VertexId, VertexId, u64)>, weighted: bool) -> Result<Self> {
        for &(u, v, _) in &edges {
            for x in [u, v] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
        }
        edges.sort_unstable_by_key(|&(u, v, _)| (u, v));
        if let Some(pair) = edges.windows(2).find(|p| (p[0].0, p[0].1) == (p[1].0, p[1].1)) {
            return Err(Error::DuplicateEdge {
                from: pair[0].0,
                to: pair[0].1,
            });
        }

        let mut out_offsets = vec![0; order + 1];
        let mut in_offsets = vec![0; order + 1];
        for &(u, v, _) in &edges {
            out_offsets[u + 1] += 1;
            in_offsets[v + 1] += 1;
        }
        for i in 0..order {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        let out_targets: Vec<_> = edges.iter().map(|e| e.1).collect();
        let out_weights = weighted.then(|| edges.iter().map(|e| e.2).collect());

        // Edges are sorted by source, so filling buckets in order leaves each
        // incoming row sorted too.
        let mut in_sources = vec![0; edges.len()];
        let mut cursor = in_offsets.clone();
        for &(u, v, _) in &edges {
            in_sources[cursor[v]] = u;
            cursor[v] += 1;
        }

        Ok(Graph {
            order,
            out_offsets,
            out_targets,
            out_weights,
            in_offsets,
            in_sources,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.out_targets.len()
    }

    pub fn is_weighted(&self) -> bool {
        self.out_weights.is_some()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// Successors of `u` in ascending order. Panics if `u` is out of range.
    pub fn successors(&self, u: VertexId) -> &[VertexId] {
        &self.out_targets[self.out_offsets[u]..self.out_offsets[u + 1]]
    }

    /// Predecessors of `v` in ascending order. Panics if `v` is out of range.
    pub fn predecessors(&self, v: VertexId) -> &[VertexId] {
        &self.in_sources[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    /// Costs aligned with [`Graph::successors`], when the graph is weighted.
    pub fn successor_weights(&self, u: VertexId) -> Option<&[u64]> {
        self.out_weights
            .as_ref()
            .map(|w| &w[self.out_offsets[u]..self.out_offsets[u + 1]])
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order && self.successors(u).binary_search(&v).is_ok()
    }

    /// Cost of `u -> v`: the stored weight, 1 on an unweighted graph, `None`
    /// if there is no such edge.
    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<u64> {
        if u >= self.order {
            return None;
        }
        let i = self.successors(u).binary_search(&v).ok()?;
        Some(self.successor_weights(u).map_or(1, |w| w[i]))
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.order).flat_map(move |u| self.successors(u).iter().map(move |&v| (u, v)))
    }

    /// Edges with their costs (1 everywhere on an unweighted graph).
    pub fn weighted_edges(&self) -> impl Iterator<Item = (VertexId, VertexId, u64)> + '_ {
        (0..self.order).flat_map(move |u| {
            let w = self.successor_weights(u);
            self.successors(u)
                .iter()
                .enumerate()
                .map(move |(i, &v)| (u, v, w.map_or(1, |w| w[i])))
        })
    }

    /// The outgoing row `o_v`.
    pub fn outgoing_row(&self, v: VertexId) -> Result<EdgeForm> {
        self.check_vertex(v)?;
        EdgeForm::from_indices(self.order, self.successors(v).iter().copied())
    }

    /// The incoming row `i_v`.
    pub fn incoming_row(&self, v: VertexId) -> Result<EdgeForm> {
        self.check_vertex(v)?;
        EdgeForm::from_indices(self.order, self.predecessors(v).iter().copied())
    }

    /// The same vertices with every edge reversed (weights follow their edge).
    pub fn transpose(&self) -> Graph {
        let edges = self.weighted_edges().map(|(u, v, w)| (v, u, w)).collect();
        Self::build(self.order, edges, self.is_weighted()).expect("transpose of a valid graph")
    }

    /// Copy of this graph with every edge weighted 1.
    pub fn with_unit_weights(&self) -> Graph {
        let mut g = self.clone();
        g.out_weights = Some(vec![1; g.out_targets.len()]);
        g
    }

    /// Copy of this graph without weights.
    pub fn without_weights(&self) -> Graph {
        let mut g = self.clone();
        g.out_weights = None;
        g
    }

    /// `e + 1`: the OR of the outgoing rows of every vertex in `e`.
    pub fn step_forward(&self, e: &EdgeForm) -> Result<EdgeForm> {
        self.step(e, Direction::Forward)
    }

    /// `e - 1`: the OR of the incoming rows of every vertex in `e`.
    pub fn step_backward(&self, e: &EdgeForm) -> Result<EdgeForm> {
        self.step(e, Direction::Backward)
    }

    pub fn step(&self, e: &EdgeForm, direction: Direction) -> Result<EdgeForm> {
        self.check_form(e)?;
        Ok(self.step_unchecked(e, direction))
    }

    pub(crate) fn step_unchecked(&self, e: &EdgeForm, direction: Direction) -> EdgeForm {
        let mut next = EdgeForm::zeros(self.order);
        for u in e.support() {
            let row = match direction {
                Direction::Forward => self.successors(u),
                Direction::Backward => self.predecessors(u),
            };
            for &w in row {
                next.insert(w);
            }
        }
        next
    }

    /// One step keeping only the vertices accepted by `keep`, i.e. the step
    /// ANDed with the indicator form of `keep`.
    pub(crate) fn step_within(&self, e: &EdgeForm, direction: Direction, keep: impl Fn(VertexId) -> bool) -> EdgeForm {
        let mut next = EdgeForm::zeros(self.order);
        for u in e.support() {
            let row = match direction {
                Direction::Forward => self.successors(u),
                Direction::Backward => self.predecessors(u),
            };
            for &w in row {
                if keep(w) {
                    next.insert(w);
                }
            }
        }
        next
    }

    /// `e ± k`: `k` successive steps; `k = 0` returns `e` unchanged.
    pub fn advance(&self, e: &EdgeForm, k: usize, direction: Direction) -> Result<EdgeForm> {
        self.check_form(e)?;
        let mut form = e.clone();
        for _ in 0..k {
            if form.is_null() {
                break;
            }
            form = self.step_unchecked(&form, direction);
        }
        Ok(form)
    }

    pub(crate) fn check_form(&self, e: &EdgeForm) -> Result<()> {
        if e.len() == self.order {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: e.len(),
                right: self.order,
            })
        }
    }

    /// Total cost of `path`, or `None` if it is not a walk of this graph.
    pub fn path_cost(&self, path: &Path) -> Option<u64> {
        if path.is_empty() || path.vertices().iter().any(|&v| v >= self.order) {
            return None;
        }
        path.vertices().windows(2).map(|p| self.weight(p[0], p[1])).sum()
    }
}

/// A sequence of vertices in which consecutive vertices are joined by edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<VertexId>);

impl Path {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        Path(vertices)
    }

    pub fn single(v: VertexId) -> Self {
        Path(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of edges; 0 for a single vertex (and for the empty path).
    pub fn hops(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn first(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<VertexId> {
        self.0.last().copied()
    }

    /// True when every consecutive pair is an edge of `g`.
    pub fn is_walk_of(&self, g: &Graph) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&v| v < g.order()) && self.0.windows(2).all(|p| g.has_edge(p[0], p[1]))
    }
}

impl From<Vec<VertexId>> for Path {
    fn from(vertices: Vec<VertexId>) -> Self {
        Path(vertices)
    }
}
