//! Brute-force reference computations used by the integration tests.
//!
//! Everything here works from the public edge list alone and shares no code
//! with the engine.

#![allow(dead_code)]

use wedge_core::Graph;

/// Invariants obtained by visiting every edge subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Subsets {
    pub alpha_prime: usize,
    pub i_prime: usize,
    pub gamma_prime: usize,
    pub upper_gamma_prime: usize,
}

/// Exhaustive over all `2^m` subsets; meant for `m <= 22` or so.
pub fn subset_oracle(g: &Graph) -> Subsets {
    let pairs = g.edge_pairs();
    let m = pairs.len();
    assert!(m <= 24, "subset oracle is exponential in the edge count");
    // closed neighborhoods as edge masks
    let closed: Vec<u32> = pairs
        .iter()
        .map(|&(a, b)| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(c, d))| a == c || a == d || b == c || b == d)
                .fold(0u32, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };

    let count = 1usize << m;
    let mut dom = vec![0u32; count];
    let mut used = vec![0u64; count];
    let mut clash = vec![false; count];
    let mut out = Subsets {
        alpha_prime: 0,
        i_prime: usize::MAX,
        gamma_prime: usize::MAX,
        upper_gamma_prime: 0,
    };
    for s in 0..count {
        if s > 0 {
            let low = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            let (a, b) = pairs[low];
            let ends = 1u64 << a | 1u64 << b;
            dom[s] = dom[rest] | closed[low];
            clash[s] = clash[rest] || used[rest] & ends != 0;
            used[s] = used[rest] | ends;
        }
        let size = s.count_ones() as usize;
        let dominating = dom[s] == full;
        if !clash[s] {
            out.alpha_prime = out.alpha_prime.max(size);
            if dominating {
                out.i_prime = out.i_prime.min(size);
            }
        }
        if dominating && is_minimal(s as u32, &closed) {
            out.gamma_prime = out.gamma_prime.min(size);
            out.upper_gamma_prime = out.upper_gamma_prime.max(size);
        }
    }
    out
}

fn is_minimal(s: u32, closed: &[u32]) -> bool {
    let members: Vec<usize> = (0..closed.len()).filter(|&j| s >> j & 1 == 1).collect();
    members.iter().all(|&f| {
        let others = members
            .iter()
            .filter(|&&h| h != f)
            .fold(0u32, |acc, &h| acc | closed[h]);
        closed[f] & !others != 0
    })
}

/// All labeled graphs on `n` vertices as adjacency pairs, `n <= 7`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u64..1 << slots.len()).map(move |mask| {
        slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect()
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(n, &mut cur, &mut out);
    out
}

fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
    heap(k - 1, cur, out);
}

/// Smallest adjacency bitstring over all vertex permutations.
pub fn permutation_min_code(n: usize, pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in pairs {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    perms
        .iter()
        .map(|p| {
            let mut code = 0u64;
            for j in 1..n {
                for i in 0..j {
                    code = code << 1 | adj[p[i]][p[j]] as u64;
                }
            }
            code
        })
        .min()
        .unwrap_or(0)
}

/// Permutation-minimal code of one graph, `order <= 8`.
pub fn min_code(g: &Graph) -> u64 {
    let n = g.order();
    permutation_min_code(n, &g.edge_pairs(), &permutations(n))
}

/// Isomorphism classes of labeled graphs on `n` vertices that satisfy
/// `keep`, deduplicated by permutation-minimal codes.
pub fn classes<F>(n: usize, keep: F) -> std::collections::BTreeSet<u64>
where
    F: Fn(&Graph) -> bool,
{
    let perms = permutations(n);
    labeled_graphs(n)
        .filter(|pairs| keep(&Graph::from_edge_list(n, pairs).unwrap()))
        .map(|pairs| permutation_min_code(n, &pairs, &perms))
        .collect()
}

/// Connectivity by repeated neighbor expansion.
pub fn connected(n: usize, pairs: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in pairs {
            if seen[a] != seen[b] {
                seen[a] = true;
                seen[b] = true;
                changed = true;
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn graph(n: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, pairs).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    graph(n, &pairs)
}

pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    graph(n, &pairs)
}

pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    graph(n, &pairs)
}

pub fn biclique(r: usize, s: usize) -> Graph {
    let pairs: Vec<_> = (0..r)
        .flat_map(|a| (r..r + s).map(move |b| (a, b)))
        .collect();
    graph(r + s, &pairs)
}

pub fn star(leaves: usize) -> Graph {
    let pairs: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    graph(leaves + 1, &pairs)
}
