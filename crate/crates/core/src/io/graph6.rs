//! graph6, short form only (1 <= n <= 62).
//!
//! The first byte is `n + 63`. The body packs the upper-triangle adjacency
//! bits in column order `a(0,1), a(0,2), a(1,2), a(0,3), ...`, six bits per
//! byte most significant first, each byte offset by 63. Pad bits are zero.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} outside 63..=126")]
    InvalidByte { byte: u8, offset: usize },
    #[error("order {0} not supported (short form covers 1..=62)")]
    UnsupportedOrder(usize),
    #[error("body has {found} bytes, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("line {line}: {source}")]
    Stream {
        line: usize,
        source: Box<Graph6Error>,
    },
    #[error("read failed: {0}")]
    Io(String),
}

fn body_len(n: usize) -> usize {
    (n * (n.saturating_sub(1)) / 2).div_ceil(6)
}

/// Decodes one record. A leading `>>graph6<<` header and one trailing line
/// ending are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut data = text.strip_prefix(HEADER).unwrap_or(text);
    data = data.strip_suffix(b"\n").unwrap_or(data);
    data = data.strip_suffix(b"\r").unwrap_or(data);
    let (&first, body) = data.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in data.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { byte, offset });
        }
    }
    let n = (first - 63) as usize;
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: body.len(),
        });
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[k / 6] - 63;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Encodes without header or line ending.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Reads newline-separated records, skipping blank lines. The optional
/// header may appear on the first record.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> Result<Vec<Graph>, Graph6Error> {
    let mut graphs = Vec::new();
    for (i, line) in reader.split(b'\n').enumerate() {
        let line = line.map_err(|e| Graph6Error::Io(e.to_string()))?;
        let line = line.strip_suffix(b"\r").unwrap_or(&line);
        if line.iter().all(u8::is_ascii_whitespace) {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| Graph6Error::Stream {
            line: i + 1,
            source: Box::new(e),
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}
