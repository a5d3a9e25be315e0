//! graph6 text encoding: one graph per ASCII line, payload bytes 63..=126.
//!
//! Layout: a header byte `n + 63` (short form, n <= 62), then the upper
//! triangle of the adjacency matrix in column order — bit (u,v) for
//! v = 1..n, u = 0..v — packed big-endian into 6-bit groups, each group
//! offset by 63. Padding bits are zero.

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_N};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed header byte {0:#04x}")]
    MalformedHeader(u8),
    #[error("order {0} not supported (this crate handles 1..=32)")]
    UnsupportedOrder(usize),
    #[error("payload byte {0:#04x} outside 63..=126")]
    InvalidByte(u8),
    #[error("payload too short: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage: expected {expected} payload bytes, found {found}")]
    TrailingGarbage { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    NonzeroPadding,
}

impl From<Graph6Error> for Error {
    fn from(e: Graph6Error) -> Error {
        Error::Graph6(e.to_string())
    }
}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2 + 5) / 6
}

/// Parses one graph6 line (without the trailing newline).
pub fn graph_from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    let &header = bytes.first().ok_or(Graph6Error::Empty)?;
    if header == b'~' {
        // long-form order, necessarily > 62
        return Err(Graph6Error::UnsupportedOrder(63).into());
    }
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::MalformedHeader(header).into());
    }
    let n = (header - 63) as usize;
    if n == 0 || n > MAX_N {
        return Err(Graph6Error::UnsupportedOrder(n).into());
    }
    let expected = payload_len(n);
    let payload = &bytes[1..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: payload.len() }.into());
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingGarbage { expected, found: payload.len() }.into());
    }
    for &b in payload {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte(b).into());
        }
    }

    let mut g = Graph::empty(n)?;
    let mut pos = 0usize;
    for v in 1..n {
        for u in 0..v {
            let group = (payload[pos / 6] - 63) as u32;
            if group >> (5 - pos % 6) & 1 != 0 {
                g.add_edge(u, v)?;
            }
            pos += 1;
        }
    }
    // everything after the last data bit must be zero padding
    let total_bits = expected * 6;
    for p in pos..total_bits {
        if (payload[p / 6] - 63) >> (5 - p % 6) & 1 != 0 {
            return Err(Graph6Error::NonzeroPadding.into());
        }
    }
    Ok(g)
}

/// Encodes a graph as its minimal-length graph6 line (no newline).
pub fn graph_to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0usize;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses newline-separated graph6 lines, skipping blank lines.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|line| !line.trim().is_empty())
        .map(graph_from_graph6)
        .collect()
}
