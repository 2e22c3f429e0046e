use std::fmt::Write as _;
use std::path::Path;

use super::{read_file, IngestError};
use crate::exact::StaticGraph;
use crate::graph_core::VertexId;

/// Reads a METIS graph file. Ids in the file are 1-based and shifted to
/// 0-based. Weights and vertex sizes announced by the `fmt`/`ncon` header
/// fields are skipped; edge directions are ignored, self-loops and repeated
/// edges dropped.
pub fn parse_metis(path: impl AsRef<Path>) -> Result<StaticGraph, IngestError> {
    parse_metis_str(&read_file(path.as_ref())?)
}

pub fn parse_metis_str(text: &str) -> Result<StaticGraph, IngestError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('%'));

    let (header_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| IngestError::parse(1, "missing METIS header"))?;
    let fields: Vec<u64> = header
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| IngestError::parse(header_line, format!("bad header field {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    if !(2..=4).contains(&fields.len()) {
        return Err(IngestError::parse(
            header_line,
            "header must be `n m [fmt [ncon]]`",
        ));
    }
    let n = fields[0] as usize;
    if n > VertexId::MAX as usize {
        return Err(IngestError::parse(header_line, "vertex count too large"));
    }
    let fmt = fields.get(2).copied().unwrap_or(0);
    if fmt > 111 || fmt % 10 > 1 || fmt / 10 % 10 > 1 {
        return Err(IngestError::parse(
            header_line,
            format!("unsupported fmt {fmt}"),
        ));
    }
    let has_sizes = fmt / 100 == 1;
    let has_vweights = fmt / 10 % 10 == 1;
    let has_eweights = fmt % 10 == 1;
    let ncon = if has_vweights {
        fields.get(3).copied().unwrap_or(1) as usize
    } else {
        0
    };
    let skip = has_sizes as usize + ncon;
    let stride = 1 + has_eweights as usize;

    let mut pairs = Vec::new();
    let mut vertex = 0usize;
    for (line_no, line) in lines {
        if vertex == n {
            if line.trim().is_empty() {
                continue;
            }
            return Err(IngestError::parse(
                line_no,
                format!("more than {n} vertex lines"),
            ));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < skip || !(tokens.len() - skip).is_multiple_of(stride) {
            return Err(IngestError::parse(line_no, "malformed adjacency line"));
        }
        for t in tokens[skip..].iter().step_by(stride) {
            let w: u64 = t
                .parse()
                .map_err(|_| IngestError::parse(line_no, format!("bad vertex id {t:?}")))?;
            if w == 0 || w > n as u64 {
                return Err(IngestError::parse(
                    line_no,
                    format!("vertex id {w} outside 1..={n}"),
                ));
            }
            pairs.push((vertex as VertexId, (w - 1) as VertexId));
        }
        vertex += 1;
    }
    Ok(StaticGraph::from_pairs_lossy(n, pairs))
}

/// Writes `g` in unweighted METIS format with sorted adjacency lines.
pub fn write_metis(g: &StaticGraph) -> String {
    let mut adj = vec![Vec::new(); g.n()];
    for &(u, v) in g.edges() {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    let mut out = format!("{} {}\n", g.n(), g.m());
    for list in &mut adj {
        list.sort_unstable();
        let mut first = true;
        for &v in list.iter() {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{}", v + 1).expect("writing to a String");
        }
        out.push('\n');
    }
    out
}
