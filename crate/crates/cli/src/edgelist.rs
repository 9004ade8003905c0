//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! 5          <- order
//! 1 2        <- edge, or "1 2 3/2" with a positive rational weight
//! ```
//!
//! Either every edge carries a weight or none does. Rational weights are
//! scaled to integers; the scale travels alongside the graph.

use std::collections::HashSet;
use std::fmt::Write as _;

use bitpath_core::{rationalize_weights, Graph, RationalWeight, VertexId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing order header")]
    MissingHeader,
    #[error("expected a single vertex count, found {0:?}")]
    BadHeader(String),
    #[error("expected \"u v\" or \"u v w\", found {0} fields")]
    FieldCount(usize),
    #[error("not a vertex id: {0:?}")]
    BadVertex(String),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: String, order: usize },
    #[error("duplicate edge {from} {to}")]
    DuplicateEdge { from: String, to: String },
    #[error("some edges are weighted and some are not")]
    MixedWeights,
    #[error("not a rational weight: {0:?}")]
    BadWeight(String),
    #[error("weight must be positive, found {0}")]
    NonPositiveWeight(String),
    #[error("weights do not fit in 64 bits once scaled")]
    Overflow,
}

/// A parsed document: the graph, plus the factor its integer weights were
/// multiplied by (1 for unweighted graphs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    pub scale: u64,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses `"3"`, `"-2"` or `"3/2"`.
pub fn parse_rational(s: &str) -> Option<RationalWeight> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.parse().ok()?, d.parse().ok()?),
        None => (s.parse().ok()?, 1),
    };
    RationalWeight::new(n, d).ok()
}

pub fn parse_edge_list(text: &str, one_based: bool) -> Result<EdgeList, ParseError> {
    let offset = usize::from(one_based);
    let mut order = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut weights: Vec<RationalWeight> = Vec::new();
    let mut weighted = None;
    let mut seen = HashSet::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let Some(order) = order else {
            match fields.as_slice() {
                [n] => {
                    order = Some(
                        n.parse::<usize>()
                            .map_err(|_| err(line, ParseErrorKind::BadHeader(content.trim().into())))?,
                    )
                }
                _ => return Err(err(line, ParseErrorKind::BadHeader(content.trim().into()))),
            }
            continue;
        };
        if !(2..=3).contains(&fields.len()) {
            return Err(err(line, ParseErrorKind::FieldCount(fields.len())));
        }
        let vertex = |s: &str| -> Result<VertexId, ParseError> {
            let id: usize = s.parse().map_err(|_| err(line, ParseErrorKind::BadVertex(s.into())))?;
            id.checked_sub(offset).filter(|&v| v < order).ok_or_else(|| {
                err(
                    line,
                    ParseErrorKind::VertexOutOfRange {
                        vertex: s.into(),
                        order,
                    },
                )
            })
        };
        let (u, v) = (vertex(fields[0])?, vertex(fields[1])?);
        let has_weight = fields.len() == 3;
        if *weighted.get_or_insert(has_weight) != has_weight {
            return Err(err(line, ParseErrorKind::MixedWeights));
        }
        if !seen.insert((u, v)) {
            return Err(err(
                line,
                ParseErrorKind::DuplicateEdge {
                    from: fields[0].into(),
                    to: fields[1].into(),
                },
            ));
        }
        if has_weight {
            let w = parse_rational(fields[2]).ok_or_else(|| err(line, ParseErrorKind::BadWeight(fields[2].into())))?;
            if w.numerator() <= 0 {
                return Err(err(line, ParseErrorKind::NonPositiveWeight(fields[2].into())));
            }
            weights.push(w);
        }
        edges.push((u, v));
    }

    let order = order.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?;
    let built = if weighted == Some(true) {
        let (ints, scale) = rationalize_weights(&weights).map_err(|_| err(last_line, ParseErrorKind::Overflow))?;
        let triples = edges.iter().zip(ints).map(|(&(u, v), w)| (u, v, w));
        Graph::from_weighted_edges(order, triples).map(|graph| EdgeList { graph, scale })
    } else {
        Graph::from_edges(order, edges).map(|graph| EdgeList { graph, scale: 1 })
    };
    Ok(built.expect("records were validated line by line"))
}

/// Canonical text: order header, then edges by ascending `(u, v)`, weights
/// as reduced rationals `w / scale`.
pub fn write_edge_list(g: &Graph, scale: u64, one_based: bool) -> String {
    let offset = usize::from(one_based);
    let mut out = format!("{}\n", g.order());
    for (u, v, w) in g.weighted_edges() {
        write!(out, "{} {}", u + offset, v + offset).unwrap();
        if g.is_weighted() {
            let w = RationalWeight::new(w as i64, scale).expect("scale is positive");
            write!(out, " {w}").unwrap();
        }
        out.push('\n');
    }
    out
}
