use std::fmt::Write as _;
use std::path::Path;

use super::{read_file, EditKind, EditOp, EditSequence, IngestError};
use crate::graph_core::VertexId;

/// Reads an edit file: an optional `n <N>` header, then one `+ u v` or
/// `- u v` per line with 0-based ids. `#` starts a comment; blank lines are
/// skipped. Without a header `n` is one more than the largest id.
pub fn parse_edits(path: impl AsRef<Path>) -> Result<EditSequence, IngestError> {
    let path = path.as_ref();
    let mut seq = parse_edits_str(&read_file(path)?)?;
    seq.provenance = path.display().to_string();
    Ok(seq)
}

fn parse_id(token: &str, line: usize) -> Result<VertexId, IngestError> {
    match token.parse::<i64>() {
        Ok(x) if x < 0 => Err(IngestError::NegativeVertex { line }),
        Ok(x) if x > VertexId::MAX as i64 - 1 => {
            Err(IngestError::parse(line, format!("vertex id {x} too large")))
        }
        Ok(x) => Ok(x as VertexId),
        Err(_) => Err(IngestError::parse(line, format!("bad vertex id {token:?}"))),
    }
}

pub fn parse_edits_str(text: &str) -> Result<EditSequence, IngestError> {
    let mut declared_n: Option<usize> = None;
    let mut ops = Vec::new();
    let mut max_id: Option<VertexId> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line
            .strip_prefix('n')
            .filter(|r| r.starts_with(char::is_whitespace))
        {
            if declared_n.is_some() || !ops.is_empty() {
                return Err(IngestError::parse(
                    line_no,
                    "header must precede all updates",
                ));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| IngestError::parse(line_no, format!("bad vertex count {rest:?}")))?;
            declared_n = Some(n);
            continue;
        }
        let kind = match line.as_bytes()[0] {
            b'+' => EditKind::Insert,
            b'-' => EditKind::Delete,
            _ => return Err(IngestError::parse(line_no, "expected `+ u v` or `- u v`")),
        };
        let tokens: Vec<&str> = line[1..].split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(IngestError::parse(
                line_no,
                format!("expected 2 vertex ids, found {}", tokens.len()),
            ));
        }
        let u = parse_id(tokens[0], line_no)?;
        let v = parse_id(tokens[1], line_no)?;
        if let Some(n) = declared_n {
            if u as usize >= n || v as usize >= n {
                return Err(IngestError::parse(
                    line_no,
                    format!("vertex id outside 0..{n}"),
                ));
            }
        }
        max_id = max_id.max(Some(u.max(v)));
        ops.push(EditOp { kind, u, v });
    }
    let n = declared_n.unwrap_or_else(|| max_id.map_or(0, |m| m as usize + 1));
    Ok(EditSequence {
        n,
        ops,
        provenance: String::new(),
    })
}

/// Serializes with an explicit header so the vertex count survives.
pub fn write_edits(seq: &EditSequence) -> String {
    let mut out = String::with_capacity(16 * seq.ops.len() + 16);
    writeln!(out, "n {}", seq.n).expect("writing to a String");
    for op in &seq.ops {
        writeln!(out, "{op}").expect("writing to a String");
    }
    out
}
