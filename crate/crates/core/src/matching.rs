//! Exact matching invariants: the matching number α′, the lower matching
//! number i′ (smallest maximal matching), and the equimatchable /
//! randomly-matchable decisions built on them.
//!
//! Both numbers are computed by branch-and-bound over vertex subsets with a
//! per-call memo keyed on the set of still-available vertices.

use std::collections::HashMap;

use crate::graph::{bits, Edge, EdgeSet, Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchingProfile {
    pub alpha_prime: usize,
    pub i_prime: usize,
    pub has_perfect: bool,
}

/// True iff `set` is a matching that cannot be extended by any edge of `g`.
pub fn is_maximal_matching(g: &Graph, set: &EdgeSet) -> Result<bool, GraphError> {
    g.check_edges(set)?;
    if !set.is_matching() {
        return Ok(false);
    }
    let covered = set.iter().fold(0u64, |m, e| m | 1 << e.u() | 1 << e.v());
    Ok(g.edges()
        .iter()
        .all(|e| (covered >> e.u() | covered >> e.v()) & 1 == 1))
}

/// α′(G).
pub fn maximum_matching_size(g: &Graph) -> usize {
    let mut memo = HashMap::new();
    max_matching(g.rows(), g.all_vertices(), &mut memo) as usize
}

/// i′(G), the size of a smallest maximal matching.
pub fn minimum_maximal_matching_size(g: &Graph) -> usize {
    let mut memo = HashMap::new();
    min_maximal(g.rows(), g.all_vertices(), &mut memo) as usize
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && maximum_matching_size(g) == g.order() / 2
}

/// Every maximal matching is maximum.
pub fn is_equimatchable(g: &Graph) -> bool {
    minimum_maximal_matching_size(g) == maximum_matching_size(g)
}

/// Every maximal matching is perfect.
pub fn is_randomly_matchable(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && minimum_maximal_matching_size(g) * 2 == g.order()
}

pub fn matching_profile(g: &Graph) -> MatchingProfile {
    let alpha_prime = maximum_matching_size(g);
    MatchingProfile {
        alpha_prime,
        i_prime: minimum_maximal_matching_size(g),
        has_perfect: g.order().is_multiple_of(2) && alpha_prime * 2 == g.order(),
    }
}

/// Every matching of `g`, including the empty one, in a deterministic order.
pub fn all_matchings(g: &Graph) -> Vec<EdgeSet> {
    fn walk(edges: &[Edge], from: usize, used: u64, cur: &mut Vec<Edge>, out: &mut Vec<EdgeSet>) {
        out.push(cur.iter().copied().collect());
        for (i, e) in edges.iter().enumerate().skip(from) {
            let ends = 1u64 << e.u() | 1 << e.v();
            if used & ends == 0 {
                cur.push(*e);
                walk(edges, i + 1, used | ends, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(g.edges(), 0, 0, &mut Vec::new(), &mut out);
    out
}

/// Drops vertices with no neighbor inside `avail`.
fn strip_isolated(adj: &[u64], mut avail: u64) -> u64 {
    for v in bits(avail) {
        if adj[v] & avail == 0 {
            avail &= !(1 << v);
        }
    }
    avail
}

fn min_degree_vertex(adj: &[u64], avail: u64) -> usize {
    bits(avail)
        .min_by_key(|&v| (adj[v] & avail).count_ones())
        .expect("nonempty vertex set")
}

// Some maximum matching covers any given non-isolated vertex, so it suffices
// to branch on the partner of a minimum-degree vertex.
fn max_matching(adj: &[u64], avail: u64, memo: &mut HashMap<u64, u32>) -> u32 {
    let avail = strip_isolated(adj, avail);
    if avail == 0 {
        return 0;
    }
    if let Some(&known) = memo.get(&avail) {
        return known;
    }
    let ceiling = avail.count_ones() / 2;
    let v = min_degree_vertex(adj, avail);
    let mut best = 0;
    for u in bits(adj[v] & avail) {
        let rest = avail & !(1 << v | 1 << u);
        best = best.max(1 + max_matching(adj, rest, memo));
        if best == ceiling {
            break;
        }
    }
    memo.insert(avail, best);
    best
}

// Every maximal matching of G[avail] covers an endpoint of any edge uv, so
// branch over the edges at u or v.
fn min_maximal(adj: &[u64], avail: u64, memo: &mut HashMap<u64, u32>) -> u32 {
    let avail = strip_isolated(adj, avail);
    if avail == 0 {
        return 0;
    }
    if let Some(&known) = memo.get(&avail) {
        return known;
    }
    let v = min_degree_vertex(adj, avail);
    let u = bits(adj[v] & avail)
        .min_by_key(|&w| (adj[w] & avail).count_ones())
        .expect("v is not isolated");
    let mut best = u32::MAX;
    let mut branch = |a: usize, b: usize, best: &mut u32| {
        let rest = avail & !(1 << a | 1 << b);
        *best = (*best).min(1 + min_maximal(adj, rest, memo));
    };
    for w in bits(adj[v] & avail) {
        branch(v, w, &mut best);
        if best == 1 {
            break;
        }
    }
    if best > 1 {
        for w in bits(adj[u] & avail & !(1 << v)) {
            branch(u, w, &mut best);
            if best == 1 {
                break;
            }
        }
    }
    memo.insert(avail, best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, pairs: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, pairs).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        graph(n, &pairs)
    }

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n, &pairs)
    }

    fn biclique(r: usize, s: usize) -> Graph {
        let pairs: Vec<_> = (0..r)
            .flat_map(|a| (r..r + s).map(move |b| (a, b)))
            .collect();
        graph(r + s, &pairs)
    }

    fn set(pairs: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_pairs(pairs).unwrap()
    }

    #[test]
    fn maximal_matching_examples() {
        let c6 = cycle(6);
        assert!(is_maximal_matching(&c6, &set(&[(0, 1), (3, 4)])).unwrap());
        assert!(!is_maximal_matching(&c6, &set(&[(0, 1)])).unwrap());
        assert!(!is_maximal_matching(&complete(4), &set(&[(0, 1), (0, 2)])).unwrap());
        assert!(is_maximal_matching(&c6, &set(&[(0, 3)])).is_err());
    }

    #[test]
    fn alpha_prime_examples() {
        assert_eq!(maximum_matching_size(&complete(4)), 2);
        assert_eq!(maximum_matching_size(&cycle(7)), 3);
        assert_eq!(maximum_matching_size(&biclique(2, 3)), 2);
        assert_eq!(maximum_matching_size(&Graph::empty(0).unwrap()), 0);
        assert_eq!(maximum_matching_size(&Graph::empty(3).unwrap()), 0);
    }

    #[test]
    fn i_prime_examples() {
        assert_eq!(minimum_maximal_matching_size(&biclique(1, 6)), 1);
        assert_eq!(minimum_maximal_matching_size(&complete(5)), 2);
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(minimum_maximal_matching_size(&p4), 1);
        assert_eq!(minimum_maximal_matching_size(&cycle(6)), 2);
    }

    #[test]
    fn perfect_matching_examples() {
        assert!(has_perfect_matching(&cycle(6)));
        assert!(!has_perfect_matching(&cycle(5)));
        assert!(!has_perfect_matching(&biclique(2, 3)));
    }

    #[test]
    fn equimatchable_examples() {
        assert!(is_equimatchable(&cycle(7)));
        assert!(is_equimatchable(&cycle(5)));
        assert!(!is_equimatchable(&cycle(6)));
        assert!(is_equimatchable(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn randomly_matchable_examples() {
        assert!(is_randomly_matchable(&complete(6)));
        assert!(is_randomly_matchable(&biclique(3, 3)));
        assert!(!is_randomly_matchable(&cycle(6)));
        assert!(is_randomly_matchable(&Graph::empty(0).unwrap()));
        assert!(!is_randomly_matchable(&Graph::empty(2).unwrap()));
    }

    #[test]
    fn invariants_add_over_components() {
        // C5 plus a disjoint P4
        let g = graph(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 6),
                (6, 7),
                (7, 8),
            ],
        );
        assert_eq!(maximum_matching_size(&g), 2 + 2);
        assert_eq!(minimum_maximal_matching_size(&g), 2 + 1);
    }

    #[test]
    fn matchings_of_a_path() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        // {}, {01}, {01,23}, {12}, {23}
        let all = all_matchings(&p4);
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(EdgeSet::is_matching));
    }
}
