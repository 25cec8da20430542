//! graph6 and edge-list text codecs.
//!
//! graph6 is the one-graph-per-line ASCII format emitted by the standard
//! small-graph generators: a size header N(n) followed by the upper-triangle
//! adjacency bits in column order, six bits per byte, each byte offset by 63.
//! The optional `>>graph6<<` stream header is tolerated and skipped.
//!
//! The edge-list format is the secondary codec: a `"n m"` header line, then
//! `m` lines `"u v"`.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("malformed header at byte {offset}: {reason}")]
    MalformedHeader { offset: usize, reason: String },
    #[error("truncated bit stream at byte {offset}: need {need} bytes, have {have}")]
    Truncated {
        offset: usize,
        need: usize,
        have: usize,
    },
    #[error("vertex count {n} exceeds cap {cap} (header at byte {offset})")]
    OverCap { n: usize, cap: usize, offset: usize },
    #[error("invalid byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Strip the optional `>>graph6<<` stream header from the start of a line,
/// returning the remainder (which may be empty).
pub fn strip_stream_header(line: &str) -> &str {
    line.strip_prefix(">>graph6<<").unwrap_or(line)
}

fn size_header(bytes: &[u8]) -> Result<(usize, usize), CodecError> {
    let b0 = *bytes.first().ok_or(CodecError::MalformedHeader {
        offset: 0,
        reason: "empty line".into(),
    })?;
    if !(63..=126).contains(&b0) {
        return Err(CodecError::MalformedHeader {
            offset: 0,
            reason: format!("byte {b0:#04x} outside graph6 range"),
        });
    }
    if b0 != 126 {
        return Ok((b0 as usize - 63, 1));
    }
    // 126 prefix: 3 six-bit groups; 126 126 prefix: 6 groups.
    let (skip, groups) = if bytes.get(1) == Some(&126) {
        (2, 6)
    } else {
        (1, 3)
    };
    if bytes.len() < skip + groups {
        return Err(CodecError::Truncated {
            offset: bytes.len(),
            need: skip + groups,
            have: bytes.len(),
        });
    }
    let mut n = 0usize;
    for (i, &b) in bytes[skip..skip + groups].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(CodecError::MalformedHeader {
                offset: skip + i,
                reason: format!("byte {b:#04x} outside graph6 range"),
            });
        }
        n = (n << 6) | (b as usize - 63);
    }
    Ok((n, skip + groups))
}

/// Decode one graph6 line (without the stream header) into a `Graph`,
/// enforcing the vertex cap.
pub fn from_graph6(line: &str, cap: usize) -> Result<Graph, CodecError> {
    let line = strip_stream_header(line).trim_end_matches(['\r', '\n']);
    let bytes = line.as_bytes();
    let (n, header_len) = size_header(bytes)?;
    if n > cap {
        return Err(CodecError::OverCap { n, cap, offset: 0 });
    }
    let pair_bits = n * n.saturating_sub(1) / 2;
    let need = header_len + pair_bits.div_ceil(6);
    if bytes.len() < need {
        return Err(CodecError::Truncated {
            offset: bytes.len(),
            need,
            have: bytes.len(),
        });
    }
    let mut edges = Vec::new();
    let mut pos = 0usize; // bit position in the triangle stream
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header_len + pos / 6];
            if !(63..=126).contains(&byte) {
                return Err(CodecError::InvalidByte {
                    byte,
                    offset: header_len + pos / 6,
                });
            }
            if (byte - 63) >> (5 - pos % 6) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Encode a graph as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut used = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.edge(i, j));
            used += 1;
            if used == 6 {
                out.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (acc << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parse the edge-list text format: header `"n m"`, then `m` lines `"u v"`.
/// `lines` is consumed exactly `m + 1` lines deep. Line numbers in errors are
/// 1-based within the section.
pub fn from_edge_list<'a, I>(lines: &mut I, cap: usize) -> Result<Graph, CodecError>
where
    I: Iterator<Item = &'a str>,
{
    let header = lines.next().ok_or(CodecError::EdgeList {
        line: 1,
        reason: "missing \"n m\" header".into(),
    })?;
    let mut it = header.split_whitespace();
    let parse = |tok: Option<&str>, what: &str| -> Result<usize, CodecError> {
        tok.ok_or(CodecError::EdgeList {
            line: 1,
            reason: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| CodecError::EdgeList {
            line: 1,
            reason: format!("bad {what}"),
        })
    };
    let n = parse(it.next(), "vertex count")?;
    let m = parse(it.next(), "edge count")?;
    if n > cap {
        return Err(CodecError::OverCap { n, cap, offset: 0 });
    }
    let mut edges = Vec::with_capacity(m);
    for k in 0..m {
        let line_no = k + 2;
        let line = lines.next().ok_or(CodecError::EdgeList {
            line: line_no,
            reason: "missing edge line".into(),
        })?;
        let mut it = line.split_whitespace();
        let endpoint = |tok: Option<&str>| -> Result<usize, CodecError> {
            tok.ok_or(CodecError::EdgeList {
                line: line_no,
                reason: "expected \"u v\"".into(),
            })?
            .parse()
            .map_err(|_| CodecError::EdgeList {
                line: line_no,
                reason: "bad endpoint".into(),
            })
        };
        edges.push((endpoint(it.next())?, endpoint(it.next())?));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Format a graph in the edge-list text format.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = from_graph6("@", 64).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(to_graph6(&g), "@");
    }

    #[test]
    fn k2_hand_decoded() {
        // 'A' encodes n=2; '_' is 63+32, i.e. bit pattern 100000: edge (0,1).
        let g = from_graph6("A_", 64).unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.edge(0, 1));
        assert_eq!(to_graph6(&g), "A_");
    }

    #[test]
    fn c5_round_trips() {
        let c5 = Graph::cycle(5);
        let enc = to_graph6(&c5);
        // Frozen against the reference codec in tests/codec_reference.rs.
        assert_eq!(enc, "Dhc");
        assert_eq!(from_graph6(&enc, 64).unwrap(), c5);
    }

    #[test]
    fn stream_header_tolerated() {
        assert_eq!(from_graph6(">>graph6<<A_", 64).unwrap().n(), 2);
    }

    #[test]
    fn error_offsets() {
        assert_eq!(
            from_graph6("", 64),
            Err(CodecError::MalformedHeader {
                offset: 0,
                reason: "empty line".into()
            })
        );
        // n=5 needs 10 bits = 2 data bytes; provide 1.
        assert_eq!(
            from_graph6("Dh", 64),
            Err(CodecError::Truncated {
                offset: 2,
                need: 3,
                have: 2
            })
        );
        assert_eq!(
            from_graph6("D", 4),
            Err(CodecError::OverCap {
                n: 5,
                cap: 4,
                offset: 0
            })
        );
        // 0x20 is below the graph6 byte range.
        assert!(matches!(
            from_graph6(" D", 64),
            Err(CodecError::MalformedHeader { offset: 0, .. })
        ));
    }

    #[test]
    fn long_form_header() {
        let g = Graph::cycle(70);
        let enc = to_graph6(&g);
        assert_eq!(enc.as_bytes()[0], 126);
        assert_eq!(from_graph6(&enc, 128).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(5);
        let text = to_edge_list(&g);
        let parsed = from_edge_list(&mut text.lines(), 64).unwrap();
        assert_eq!(parsed, g);

        let bad = "3 1\n0 3\n";
        assert!(matches!(
            from_edge_list(&mut bad.lines(), 64),
            Err(CodecError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
        let short = "3 2\n0 1\n";
        assert!(matches!(
            from_edge_list(&mut short.lines(), 64),
            Err(CodecError::EdgeList { line: 3, .. })
        ));
    }
}
