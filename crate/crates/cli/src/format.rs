//! Graph interchange formats: the planar_code byte stream used by the
//! standard fullerene generators, and a plain rotation text format.

use fullerene::error::{Error, Result};
use fullerene::PlanarGraph;

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// Decodes a planar_code stream (header optional) into one graph per record.
///
/// Record layout: one byte vertex count n (1..=255), then for each vertex its
/// clockwise neighbor list as 1-based bytes terminated by 0.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<PlanarGraph>> {
    let mut pos = 0;
    if bytes.starts_with(PLANAR_CODE_HEADER) {
        pos = PLANAR_CODE_HEADER.len();
    }
    let mut graphs = Vec::new();
    while pos < bytes.len() {
        let n = bytes[pos] as usize;
        if n == 0 {
            return Err(Error::TruncatedRecord(pos));
        }
        pos += 1;
        let mut adjacency: Vec<Vec<usize>> = Vec::with_capacity(n);
        for _ in 0..n {
            let mut nbrs = Vec::new();
            loop {
                let Some(&b) = bytes.get(pos) else {
                    return Err(Error::TruncatedRecord(pos));
                };
                pos += 1;
                if b == 0 {
                    break;
                }
                let v = b as usize;
                if v > n {
                    return Err(Error::NeighborOutOfRange { value: v, max: n });
                }
                nbrs.push(v - 1);
            }
            adjacency.push(nbrs);
        }
        graphs.push(PlanarGraph::build_from_rotation(&adjacency)?);
    }
    Ok(graphs)
}

/// Encodes graphs as a planar_code stream with header.
pub fn emit_planar_code(graphs: &[&PlanarGraph]) -> Result<Vec<u8>> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for g in graphs {
        let n = g.vertex_count();
        if n == 0 || n > 255 {
            return Err(Error::UnsupportedVertexCount(n));
        }
        out.push(n as u8);
        for v in 0..n {
            for u in g.rotation_neighbors(v) {
                out.push(u as u8 + 1);
            }
            out.push(0);
        }
    }
    Ok(out)
}

/// Parses the rotation text format: one `id: n1 n2 n3 ...` line per vertex,
/// clockwise, 0-based ids. Blank lines and `#` comments are skipped.
pub fn parse_rotation_text(text: &str) -> Result<PlanarGraph> {
    let mut rows: Vec<(usize, Vec<usize>, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((id_part, rest)) = line.split_once(':') else {
            return Err(Error::ParseError { line: lineno, message: "missing ':'".into() });
        };
        let id: usize = id_part.trim().parse().map_err(|_| Error::ParseError {
            line: lineno,
            message: format!("bad vertex id '{}'", id_part.trim()),
        })?;
        let nbrs: Vec<usize> = rest
            .split_whitespace()
            .map(|tok| {
                tok.parse().map_err(|_| Error::ParseError {
                    line: lineno,
                    message: format!("bad neighbor id '{tok}'"),
                })
            })
            .collect::<Result<_>>()?;
        rows.push((id, nbrs, lineno));
    }
    let n = rows.len();
    let mut adjacency: Vec<Option<Vec<usize>>> = vec![None; n];
    for (id, nbrs, lineno) in rows {
        if id >= n || adjacency[id].is_some() {
            return Err(Error::ParseError {
                line: lineno,
                message: format!("vertex id {id} out of range or repeated"),
            });
        }
        if let Some(&bad) = nbrs.iter().find(|&&u| u >= n) {
            return Err(Error::ParseError {
                line: lineno,
                message: format!("neighbor id {bad} out of range"),
            });
        }
        adjacency[id] = Some(nbrs);
    }
    let adjacency: Vec<Vec<usize>> = adjacency.into_iter().map(|r| r.unwrap()).collect();
    PlanarGraph::build_from_rotation(&adjacency)
}

pub fn emit_rotation_text(g: &PlanarGraph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        let nbrs: Vec<String> =
            g.rotation_neighbors(v).iter().map(|u| u.to_string()).collect();
        out.push_str(&format!("{v}: {}\n", nbrs.join(" ")));
    }
    out
}

/// Splits a byte stream into graphs, auto-detecting the format: planar_code
/// if the header is present or the content is not valid UTF-8 text.
pub fn parse_auto(bytes: &[u8]) -> Result<Vec<PlanarGraph>> {
    if bytes.starts_with(PLANAR_CODE_HEADER) {
        return parse_planar_code(bytes);
    }
    match std::str::from_utf8(bytes) {
        Ok(text) if text.contains(':') => Ok(vec![parse_rotation_text(text)?]),
        _ => parse_planar_code(bytes),
    }
}
