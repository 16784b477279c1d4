//! graph6 reader and writer (McKay's format), one graph per line.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty graph6 input")]
    Empty,
    #[error("invalid byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated graph6 input at offset {offset}")]
    Truncated { offset: usize },
    #[error("trailing data at offset {offset}")]
    Trailing { offset: usize },
    #[error("nonzero padding bits at offset {offset}")]
    Padding { offset: usize },
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, ParseError> {
    match bytes.get(offset) {
        None => Err(ParseError::Truncated { offset }),
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(ParseError::InvalidByte { offset, byte: b }),
    }
}

/// Parses one graph6 line. Edges are indexed in lexicographic `(u, v)` order.
///
/// A leading `>>graph6<<` header and surrounding whitespace are ignored;
/// reported offsets are relative to the trimmed input.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }

    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | sextet(bytes, i)? as usize;
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = n << 6 | sextet(bytes, i)? as usize;
        }
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let mut edges = Vec::new();
    let mut k = 0usize;
    for _ in 0..needed {
        let chunk = sextet(bytes, pos)?;
        for shift in (0..6).rev() {
            let bit = chunk >> shift & 1 == 1;
            if k < bits {
                if bit {
                    // column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
                    let v = (((8 * k + 1) as f64).sqrt() as usize).div_ceil(2);
                    let v = fix_column(k, v);
                    let u = k - v * (v - 1) / 2;
                    edges.push((u, v));
                }
            } else if bit {
                return Err(ParseError::Padding { offset: pos });
            }
            k += 1;
        }
        pos += 1;
    }
    if pos != bytes.len() {
        return Err(ParseError::Trailing { offset: pos });
    }
    Ok(Graph::from_edges_sorted(n, edges).expect("graph6 encodes a simple graph"))
}

/// Column `v` such that `v(v-1)/2 <= k < v(v+1)/2`, correcting float error.
fn fix_column(k: usize, mut v: usize) -> usize {
    while v * (v - 1) / 2 > k {
        v -= 1;
    }
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    v
}

/// Encodes a graph as a graph6 line (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut chunk = 0u8;
    let mut filled = 0;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            k += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    debug_assert_eq!(k, bits);
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses every non-empty line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, ParseError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}
