//! Canonical codes for small graphs.
//!
//! The code is the lexicographically smallest upper-triangle adjacency
//! bitstring, in graph6 column order `x(0,1), x(0,2), x(1,2), x(0,3), …`,
//! over all vertex orders that list the color classes of a stable color
//! refinement in a fixed invariant order. Two graphs get the same code iff
//! they are isomorphic.
//!
//! The search places vertices position by position and drops a branch as
//! soon as its partial bitstring exceeds the best complete one. Twin
//! vertices (same neighborhood apart from each other) are interchangeable
//! by an automorphism fixing everything already placed, so only one twin per
//! class is tried at each position.

use std::fmt;

use thiserror::Error;

use crate::graph::{bits, Graph};
use crate::graph6;

/// Largest order accepted by [`canonical_code`].
pub const MAX_CANON_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("order {order} exceeds the canonical-labeling bound of {max}")]
pub struct CanonError {
    pub order: usize,
    pub max: usize,
}

/// Canonical form of a graph: its order and adjacency bitstring, first bit
/// most significant so integer order matches lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    order: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![0u64; n];
        let total = n * n.saturating_sub(1) / 2;
        let mut pos = total;
        for j in 1..n {
            for i in 0..j {
                pos -= 1;
                if self.bits >> pos & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Graph::from_rows(adj)
    }

    /// graph6 text of the canonical representative.
    pub fn to_graph6(&self) -> String {
        graph6::encode(&self.to_graph()).expect("canonical orders fit graph6")
    }

    /// The code as bytes (its graph6 text).
    pub fn to_bytes(&self) -> Vec<u8> {
        self.to_graph6().into_bytes()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, CanonError> {
    canonical_form(g).map(|(code, _)| code)
}

/// Canonical code with the vertex order that realizes it: `order[p]` is the
/// vertex placed at position `p`.
pub fn canonical_form(g: &Graph) -> Result<(CanonicalCode, Vec<usize>), CanonError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(CanonError {
            order: n,
            max: MAX_CANON_ORDER,
        });
    }
    let adj = g.rows();
    let color = refine(adj);
    let mut cell_of_pos: Vec<u32> = color.clone();
    cell_of_pos.sort_unstable();
    let mut search = Search {
        adj,
        color: &color,
        cell_of_pos: &cell_of_pos,
        cols: vec![0; n],
        cur: vec![0; n],
        best: Vec::new(),
        best_perm: Vec::new(),
    };
    search.run(0, 0);
    let mut code = 0u128;
    for j in 1..n {
        code = code << j | search.best[j] as u128;
    }
    Ok((
        CanonicalCode {
            order: n as u8,
            bits: code,
        },
        search.best_perm,
    ))
}

/// Stable color refinement starting from degrees; colors are ranks of
/// isomorphism-invariant signatures.
fn refine(adj: &[u64]) -> Vec<u32> {
    let n = adj.len();
    let mut color: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let mut classes = rank(&mut color);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut around: Vec<u32> = bits(adj[v]).map(|w| color[w]).collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = sigs
            .iter_mut()
            .map(|s| sorted.binary_search(s).expect("present") as u32)
            .collect();
        let count = sorted.len();
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

/// Replaces values by their rank among distinct values; returns the count.
fn rank(values: &mut [u32]) -> usize {
    let mut distinct = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for v in values.iter_mut() {
        *v = distinct.binary_search(v).expect("present") as u32;
    }
    distinct.len()
}

struct Search<'a> {
    adj: &'a [u64],
    color: &'a [u32],
    cell_of_pos: &'a [u32],
    /// `cols[j]`: adjacency of position `j` to positions `0..j`, position 0
    /// in the most significant of the `j` bits.
    cols: Vec<u16>,
    cur: Vec<usize>,
    best: Vec<u16>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, j: usize, placed: u64) {
        let n = self.adj.len();
        if j == n {
            if self.best.is_empty() || self.cols < self.best {
                self.best = self.cols.clone();
                self.best_perm = self.cur.clone();
            }
            return;
        }
        let want = self.cell_of_pos[j];
        let mut tried: u64 = 0;
        for v in 0..n {
            if placed >> v & 1 == 1 || self.color[v] != want {
                continue;
            }
            let twin_tried =
                bits(tried).any(|u| self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u));
            if twin_tried {
                continue;
            }
            tried |= 1 << v;
            let mut col = 0u16;
            for i in 0..j {
                col = col << 1 | (self.adj[v] >> self.cur[i] & 1) as u16;
            }
            self.cols[j] = col;
            self.cur[j] = v;
            if !self.best.is_empty() && self.cols[..=j] > self.best[..=j] {
                continue;
            }
            self.run(j + 1, placed | 1 << v);
        }
    }
}
