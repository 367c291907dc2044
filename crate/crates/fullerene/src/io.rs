//! Reading and writing embedded cubic graphs.
//!
//! Two formats are supported:
//!
//! * **Text rotation** — human-writable: the first significant line holds the
//!   vertex count `n`, followed by one line `v: a b c` per vertex listing its
//!   neighbors counterclockwise. `#` starts a comment; blank lines are
//!   ignored. The format is for cubic graphs (exactly three neighbors per
//!   line).
//! * **Planar code** — the compact binary format spoken by standard plane
//!   graph generators: the ASCII header `>>planar_code<<`, then one record
//!   per graph: a vertex-count byte `n` (so `n ≤ 255`), then for each vertex
//!   its neighbors in rotation order as 1-based bytes, each list
//!   0-terminated. Arbitrary degrees are allowed and multiple records form a
//!   stream.
//!
//! Both directions compose to the identity: writing a graph and reading it
//! back reproduces the same rotation system, vertex labels included.

use thiserror::Error;

use crate::graph::EmbeddedGraph;

/// The byte header that introduces a planar-code stream.
pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// Errors from parsing or serializing graph files.
#[derive(Debug, Error)]
pub enum IoError {
    /// A line of a text rotation file could not be parsed.
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    /// The neighbor lists do not form a consistent rotation system (or are
    /// not cubic, for the text format).
    #[error("rotation system inconsistent: {0}")]
    RotationInconsistent(String),
    /// A planar-code stream does not start with `>>planar_code<<`.
    #[error("missing or malformed planar-code header")]
    BadHeader,
    /// A planar-code record ended before all neighbor lists were complete.
    #[error("planar-code record truncated at byte {at}")]
    TruncatedRecord { at: usize },
    /// A graph is too large for the single-byte planar-code vertex count.
    #[error("graph with {n} vertices exceeds the planar-code limit of 255")]
    TooLarge { n: usize },
}

/// Strips a trailing comment and surrounding whitespace.
fn significant(line: &str) -> &str {
    let body = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    body.trim()
}

/// Parses a text rotation file (see the module docs for the format).
pub fn read_text_rotation(bytes: &[u8]) -> Result<EmbeddedGraph, IoError> {
    let text = std::str::from_utf8(bytes).map_err(|e| IoError::Parse {
        line: 0,
        reason: format!("file is not valid UTF-8: {e}"),
    })?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, significant(l)))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, first) = lines.next().ok_or(IoError::Parse {
        line: 0,
        reason: "empty file: expected a vertex count".into(),
    })?;
    let n: usize = first.parse().map_err(|_| IoError::Parse {
        line: line_no,
        reason: format!("expected a vertex count, found {first:?}"),
    })?;

    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    for _ in 0..n {
        let (line_no, line) = lines.next().ok_or(IoError::Parse {
            line: 0,
            reason: format!("expected {n} vertex lines, file ended early"),
        })?;
        let (head, tail) = line.split_once(':').ok_or(IoError::Parse {
            line: line_no,
            reason: "expected \"v: a b c\"".into(),
        })?;
        let v: usize = head.trim().parse().map_err(|_| IoError::Parse {
            line: line_no,
            reason: format!("expected a vertex id, found {:?}", head.trim()),
        })?;
        if v >= n {
            return Err(IoError::Parse {
                line: line_no,
                reason: format!("vertex id {v} out of range 0..{n}"),
            });
        }
        if rotation[v].is_some() {
            return Err(IoError::Parse {
                line: line_no,
                reason: format!("vertex {v} listed twice"),
            });
        }
        let mut nbrs = Vec::with_capacity(3);
        for tok in tail.split_whitespace() {
            let w: usize = tok.parse().map_err(|_| IoError::Parse {
                line: line_no,
                reason: format!("expected a neighbor id, found {tok:?}"),
            })?;
            if w >= n {
                return Err(IoError::Parse {
                    line: line_no,
                    reason: format!("neighbor id {w} out of range 0..{n}"),
                });
            }
            nbrs.push(w);
        }
        if nbrs.len() != 3 {
            return Err(IoError::RotationInconsistent(format!(
                "vertex {v} has {} neighbors, the text format holds cubic graphs",
                nbrs.len()
            )));
        }
        rotation[v] = Some(nbrs);
    }
    if let Some((line_no, extra)) = lines.next() {
        return Err(IoError::Parse {
            line: line_no,
            reason: format!("unexpected content after {n} vertex lines: {extra:?}"),
        });
    }
    let rotation: Vec<Vec<usize>> = rotation
        .into_iter()
        .map(|r| r.expect("all vertices listed"))
        .collect();
    EmbeddedGraph::from_rotation(rotation)
        .map_err(|e| IoError::RotationInconsistent(e.to_string()))
}

/// Serializes a cubic embedded graph in the text rotation format.
pub fn write_text_rotation(g: &EmbeddedGraph) -> Result<String, IoError> {
    let mut out = String::new();
    out.push_str(&format!("{}\n", g.n()));
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        if nbrs.len() != 3 {
            return Err(IoError::RotationInconsistent(format!(
                "vertex {v} has degree {}, the text format holds cubic graphs",
                nbrs.len()
            )));
        }
        out.push_str(&format!("{v}: {} {} {}\n", nbrs[0], nbrs[1], nbrs[2]));
    }
    Ok(out)
}

/// Parses a planar-code stream into its graphs. An empty stream after the
/// header yields an empty list.
pub fn read_planar_code(bytes: &[u8]) -> Result<Vec<EmbeddedGraph>, IoError> {
    if bytes.len() < PLANAR_CODE_HEADER.len() || &bytes[..PLANAR_CODE_HEADER.len()] != PLANAR_CODE_HEADER
    {
        return Err(IoError::BadHeader);
    }
    let mut at = PLANAR_CODE_HEADER.len();
    let mut graphs = Vec::new();
    while at < bytes.len() {
        let n = bytes[at] as usize;
        at += 1;
        if n == 0 {
            return Err(IoError::RotationInconsistent(
                "record claims zero vertices".into(),
            ));
        }
        let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n);
        for _ in 0..n {
            let mut nbrs = Vec::new();
            loop {
                if at >= bytes.len() {
                    return Err(IoError::TruncatedRecord { at });
                }
                let b = bytes[at] as usize;
                at += 1;
                if b == 0 {
                    break;
                }
                if b > n {
                    return Err(IoError::RotationInconsistent(format!(
                        "neighbor id {b} out of range 1..={n}"
                    )));
                }
                nbrs.push(b - 1);
            }
            rotation.push(nbrs);
        }
        graphs.push(
            EmbeddedGraph::from_rotation(rotation)
                .map_err(|e| IoError::RotationInconsistent(e.to_string()))?,
        );
    }
    Ok(graphs)
}

/// Serializes graphs as one planar-code stream.
pub fn write_planar_code(graphs: &[&EmbeddedGraph]) -> Result<Vec<u8>, IoError> {
    let mut out = Vec::from(PLANAR_CODE_HEADER);
    for g in graphs {
        let n = g.n();
        if n == 0 || n > 255 {
            return Err(IoError::TooLarge { n });
        }
        out.push(n as u8);
        for v in 0..n {
            for &w in g.neighbors(v) {
                out.push((w + 1) as u8);
            }
            out.push(0);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::nanotube;

    #[test]
    fn text_round_trip_preserves_rotations() {
        for r in 0..=2 {
            let g = nanotube(r);
            let text = write_text_rotation(&g).expect("cubic graph serializes");
            let back = read_text_rotation(text.as_bytes()).expect("parses");
            assert_eq!(back.rotation(), g.rotation(), "r={r}");
            // A second round trip is byte-identical.
            assert_eq!(write_text_rotation(&back).expect("serializes"), text);
        }
    }

    #[test]
    fn text_reader_accepts_comments_and_blank_lines() {
        let text = "# a dodecahedron would be bigger; this is one tetrahedron-like stub\n\n4\n0: 1 2 3\n1: 0 3 2  # reversed\n2: 0 1 3\n3: 0 2 1\n";
        let g = read_text_rotation(text.as_bytes()).expect("parses");
        assert_eq!(g.n(), 4);
        assert!(g.is_cubic());
    }

    #[test]
    fn text_reader_rejects_wrong_degree_with_rotation_error() {
        let text = "3\n0: 1 2\n1: 0 2\n2: 0 1\n";
        match read_text_rotation(text.as_bytes()) {
            Err(IoError::RotationInconsistent(_)) => {}
            other => panic!("expected RotationInconsistent, got {other:?}"),
        }
    }

    #[test]
    fn text_reader_reports_line_numbers() {
        let text = "4\n0: 1 2 3\n1: 0 3 2\nnot a vertex line\n3: 0 2 1\n";
        match read_text_rotation(text.as_bytes()) {
            Err(IoError::Parse { line: 4, .. }) => {}
            other => panic!("expected Parse at line 4, got {other:?}"),
        }
    }

    #[test]
    fn text_reader_rejects_dangling_neighbor_lists() {
        // Vertex 0 lists 1, but 1 does not list 0.
        let text = "4\n0: 1 2 3\n1: 2 3 2\n2: 0 1 3\n3: 0 2 1\n";
        assert!(matches!(
            read_text_rotation(text.as_bytes()),
            Err(IoError::RotationInconsistent(_))
        ));
    }

    #[test]
    fn planar_code_round_trip() {
        let gs: Vec<EmbeddedGraph> = (0..=2).map(nanotube).collect();
        let refs: Vec<&EmbeddedGraph> = gs.iter().collect();
        let bytes = write_planar_code(&refs).expect("serializes");
        let back = read_planar_code(&bytes).expect("parses");
        assert_eq!(back.len(), 3);
        for (g, b) in gs.iter().zip(&back) {
            assert_eq!(g.rotation(), b.rotation());
        }
    }

    #[test]
    fn planar_code_header_is_required() {
        assert!(matches!(
            read_planar_code(b"planar_code<<"),
            Err(IoError::BadHeader)
        ));
    }

    #[test]
    fn planar_code_empty_stream_is_empty_list() {
        let gs = read_planar_code(PLANAR_CODE_HEADER).expect("parses");
        assert!(gs.is_empty());
    }

    #[test]
    fn planar_code_truncation_is_reported() {
        let g = nanotube(0);
        let bytes = write_planar_code(&[&g]).expect("serializes");
        match read_planar_code(&bytes[..bytes.len() - 5]) {
            Err(IoError::TruncatedRecord { .. }) => {}
            other => panic!("expected TruncatedRecord, got {other:?}"),
        }
    }
}
