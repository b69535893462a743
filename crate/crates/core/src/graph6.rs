//! graph6 text encoding.
//!
//! Orders up to 62 use the one-byte size prefix; 63 and 64 use the `~` plus
//! three bytes form. Edge bits run over the upper triangle column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six to a byte, zero padded.

use thiserror::Error;

use crate::graph::{bit, Graph, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("truncated size prefix")]
    TruncatedSize,
    #[error("order {0} not supported (must be 1..=64)")]
    UnsupportedOrder(usize),
    #[error("edge data too short: expected {expected} bytes, found {found}")]
    TooShort { expected: usize, found: usize },
    #[error("trailing garbage: expected {expected} bytes of edge data, found {found}")]
    TrailingGarbage { expected: usize, found: usize },
    #[error("non-zero padding bits in final byte")]
    NonZeroPadding,
}

fn edge_bytes(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + edge_bytes(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.adj(j) & bit(i) != 0);
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 string. A leading `>>graph6<<` header and a trailing
/// line terminator are tolerated.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::InvalidChar { offset, byte });
    }

    let (n, body) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            // eight-byte form covers orders beyond 258047
            return Err(Graph6Error::UnsupportedOrder(usize::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedSize);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder(n));
    }

    let expected = edge_bytes(n);
    if body.len() < expected {
        return Err(Graph6Error::TooShort {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            expected,
            found: body.len(),
        });
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    let used = k % 6;
    if used > 0 && (body[expected - 1] - 63) & ((1 << (6 - used)) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }
    Ok(Graph::from_rows_unchecked(adj))
}
