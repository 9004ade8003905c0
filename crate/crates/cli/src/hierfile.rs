//! Text container for a built hierarchy.
//!
//! ```text
//! bitpath-hierarchy 1
//! scale 1
//! levels 3
//! level 0
//! <edge list of level 0>
//! level 1
//! classes 0 0 1 1 2
//! <edge list of level 1>
//! ...
//! ```
//!
//! `classes` maps each vertex of the level below to its vertex at this level.
//! Weights are stored as the scaled integers; `scale` converts them back.
//! Loading checks that every stored level is the quotient of the one below.

use std::fmt::Write as _;

use bitpath_core::{Graph, Hierarchy, Partition, VertexId};
use thiserror::Error;

use crate::edgelist::{parse_edge_list, write_edge_list, ParseError};

pub const MAGIC: &str = "bitpath-hierarchy";
pub const VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum HierarchyFileError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("level {level}, {source}")]
    Level {
        level: usize,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Core(#[from] bitpath_core::Error),
}

fn format_err(line: usize, message: impl Into<String>) -> HierarchyFileError {
    HierarchyFileError::Format {
        line,
        message: message.into(),
    }
}

pub fn write_hierarchy(h: &Hierarchy, scale: u64) -> String {
    let mut out = format!("{MAGIC} {VERSION}\nscale {scale}\nlevels {}\n", h.depth());
    for level in h.levels() {
        writeln!(out, "level {}", level.index()).unwrap();
        if let Some(p) = level.partition() {
            out.push_str("classes");
            for c in p.class_map() {
                write!(out, " {c}").unwrap();
            }
            out.push('\n');
        }
        out.push_str(&write_edge_list(level.graph(), 1, false));
    }
    out
}

/// Returns the hierarchy and the weight scale of its input graph.
pub fn read_hierarchy(text: &str) -> Result<(Hierarchy, u64), HierarchyFileError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut at = 0;
    let mut next_keyed = |key: &str| -> Result<(usize, Vec<&str>), HierarchyFileError> {
        let line = at + 1;
        let fields: Vec<&str> = lines
            .get(at)
            .ok_or_else(|| format_err(line, format!("expected {key:?}")))?
            .split_whitespace()
            .collect();
        if fields.first() != Some(&key) {
            return Err(format_err(line, format!("expected {key:?}")));
        }
        at += 1;
        Ok((line, fields[1..].to_vec()))
    };

    let (line, version) = next_keyed(MAGIC)?;
    if version != [VERSION.to_string().as_str()] {
        return Err(format_err(line, format!("unsupported version {version:?}")));
    }
    let number = |line: usize, fields: &[&str]| -> Result<u64, HierarchyFileError> {
        match fields {
            [n] => n.parse().map_err(|_| format_err(line, format!("not a number: {n:?}"))),
            _ => Err(format_err(line, "expected one number")),
        }
    };
    let (line, f) = next_keyed("scale")?;
    let scale = number(line, &f)?;
    if scale == 0 {
        return Err(format_err(line, "scale must be positive"));
    }
    let (line, f) = next_keyed("levels")?;
    let depth = number(line, &f)? as usize;
    if depth == 0 {
        return Err(format_err(line, "need at least one level"));
    }

    let mut graphs: Vec<Graph> = Vec::new();
    let mut partitions = Vec::new();
    let mut i = at;
    for level in 0..depth {
        let header = lines.get(i).copied().unwrap_or("");
        if header.split_whitespace().collect::<Vec<_>>() != ["level", level.to_string().as_str()] {
            return Err(format_err(i + 1, format!("expected \"level {level}\"")));
        }
        i += 1;
        if level > 0 {
            let fields: Vec<&str> = lines.get(i).copied().unwrap_or("").split_whitespace().collect();
            if fields.first() != Some(&"classes") {
                return Err(format_err(i + 1, "expected \"classes\""));
            }
            let map = fields[1..]
                .iter()
                .map(|s| s.parse::<VertexId>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| format_err(i + 1, "bad class id"))?;
            partitions.push(Partition::from_class_map(map)?);
            i += 1;
        }
        let start = i;
        while i < lines.len() && !lines[i].starts_with("level ") {
            i += 1;
        }
        let doc = parse_edge_list(&lines[start..i].join("\n"), false).map_err(|mut source| {
            source.line += start;
            HierarchyFileError::Level { level, source }
        })?;
        graphs.push(doc.graph);
    }
    if i < lines.len() {
        return Err(format_err(i + 1, "trailing content after the last level"));
    }
    Ok((Hierarchy::from_parts(graphs, partitions)?, scale))
}
