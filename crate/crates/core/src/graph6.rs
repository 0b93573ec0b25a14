//! graph6 text encoding, short form (order at most 62).
//!
//! One byte `order + 63`, then the upper-triangle adjacency bits in column
//! order `x(0,1), x(0,2), x(1,2), x(0,3), …`, packed big-endian into 6-bit
//! groups, zero padded, each group offset by 63.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("order {0} needs the long graph6 form, which is not supported")]
    OrderTooLarge(usize),
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    MalformedByte { offset: usize, byte: u8 },
    #[error("expected {expected} payload bytes for order {order}, found {found}")]
    Truncated {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("{0} unexpected bytes after the payload")]
    TrailingBytes(usize),
}

fn payload_len(order: usize) -> usize {
    (order * order.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one graph6 line; surrounding whitespace is ignored.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim().as_bytes();
    let (&head, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::MalformedByte { offset, byte });
        }
    }
    let n = (head - 63) as usize;
    if n > MAX_GRAPH6_ORDER {
        // 126 marks the long form
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let expected = payload_len(n);
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            order: n,
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingBytes(payload.len() - expected));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = payload[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(adj))
}

/// Heuristic used for input auto-detection: a single token of graph6 bytes.
pub fn looks_like_graph6(text: &str) -> bool {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match (lines.next(), lines.next()) {
        (Some(line), None) => {
            let line = line.trim();
            !line.contains(' ') && line.bytes().all(|b| (63..=126).contains(&b))
        }
        _ => false,
    }
}
