//! Finite simple graphs over dense vertex ids, plus the structural predicates
//! and transformations the rest of the engine is built on.
//!
//! Adjacency is stored as one `u64` row per vertex, which bounds the order at
//! [`MAX_ORDER`]. Edges are kept in a sorted list; the position of an edge in
//! [`Graph::edges`] is its stable index for the edge-set engine.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Largest supported graph order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("pair {index}: self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("pair {index}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        order: usize,
    },
    #[error("pair {index}: duplicate edge {edge}")]
    DuplicateEdge { index: usize, edge: Edge },
    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("edge {0} does not belong to the graph")]
    ForeignEdge(Edge),
    #[error("edge {0} is not a member of the edge set")]
    NotAMember(Edge),
    #[error("expected {expected} multiplicities, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("edges must join two distinct vertices, got {0} {0}")]
    Loop(usize),
}

/// An unordered pair of distinct vertices, stored smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        Ok(Self {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub(crate) fn new_unchecked(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b);
        Self {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// True when the two edges are distinct and share an endpoint.
    pub fn is_adjacent_to(self, other: Edge) -> bool {
        self != other && (other.contains(self.u) || other.contains(self.v))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A set of edges. Operations that take a host graph check membership.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from vertex pairs; duplicates collapse.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        pairs
            .iter()
            .map(|&(a, b)| Edge::new(a, b))
            .collect::<Result<_, _>>()
            .map(Self)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.contains(&e)
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: Edge) -> bool {
        self.0.remove(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// True when no two members share an endpoint.
    pub fn is_matching(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.iter().all(|e| seen.insert(e.u) && seen.insert(e.v))
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Two-coloring of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: BTreeSet<usize>,
    pub right: BTreeSet<usize>,
}

/// Clique/independent-set partition witnessing that a graph is split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: BTreeSet<usize>,
    pub independent: BTreeSet<usize>,
}

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    edges: Vec<Edge>,
}

#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        check_order(order)?;
        Ok(Self {
            adj: vec![0; order],
            edges: Vec::new(),
        })
    }

    /// Builds a graph from a list of vertex pairs. Errors carry the 0-based
    /// position of the offending pair.
    pub fn from_edge_list(order: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        check_order(order)?;
        let mut adj = vec![0u64; order];
        for (index, &(a, b)) in pairs.iter().enumerate() {
            for vertex in [a, b] {
                if vertex >= order {
                    return Err(GraphError::VertexOutOfRange {
                        index,
                        vertex,
                        order,
                    });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { index, vertex: a });
            }
            if adj[a] >> b & 1 == 1 {
                return Err(GraphError::DuplicateEdge {
                    index,
                    edge: Edge::new_unchecked(a, b),
                });
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Self::from_rows(adj))
    }

    /// Rows must be symmetric with a zero diagonal.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row >> u & 1, 0, "self-loop at {u}");
            for v in bits(row >> u) {
                if v > 0 {
                    edges.push(Edge::new_unchecked(u, u + v));
                }
            }
        }
        Self { adj, edges }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in increasing order; the position is the edge's index.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && b < self.order() && self.adj[a] >> b & 1 == 1
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn all_vertices(&self) -> u64 {
        if self.order() == 64 {
            u64::MAX
        } else {
            (1u64 << self.order()) - 1
        }
    }

    /// Vertex pairs of all edges, in index order.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| e.endpoints()).collect()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![0u64; self.order()];
        for e in &self.edges {
            let (a, b) = (perm[e.u], perm[e.v]);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Self::from_rows(adj)
    }

    /// Subgraph induced by the vertices in `keep`, renumbered in increasing
    /// order. Returns the map from new ids to old ids.
    pub fn induced_subgraph(&self, keep: &BTreeSet<usize>) -> (Self, Vec<usize>) {
        let map: Vec<usize> = keep.iter().copied().filter(|&v| v < self.order()).collect();
        let mut adj = vec![0u64; map.len()];
        for (i, &a) in map.iter().enumerate() {
            for (j, &b) in map.iter().enumerate() {
                if self.adj[a] >> b & 1 == 1 {
                    adj[i] |= 1 << j;
                }
            }
        }
        (Self::from_rows(adj), map)
    }

    /// Checks that every member of `set` is an edge of this graph.
    pub fn check_edges(&self, set: &EdgeSet) -> Result<(), GraphError> {
        match set.iter().find(|&e| !self.contains_edge(e)) {
            Some(e) => Err(GraphError::ForeignEdge(e)),
            None => Ok(()),
        }
    }

    /// Connected components with maps from component ids to original ids,
    /// ordered by smallest original vertex.
    pub fn components(&self) -> Vec<(Graph, Vec<usize>)> {
        self.component_masks()
            .into_iter()
            .map(|mask| self.induced_subgraph(&bits(mask).collect()))
            .collect()
    }

    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Order 0 counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    /// A 2-coloring when one exists. Within each component the smallest
    /// vertex goes to `left`.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut side = vec![u8::MAX; self.order()];
        for start in 0..self.order() {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let (left, right) = (0..self.order()).partition(|&v| side[v] == 0);
        Some(Bipartition { left, right })
    }

    pub fn girth(&self) -> Girth {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] >= best {
                    break;
                }
                for w in self.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Vertices incident to some edge of `set` (the set S(X)).
    pub fn covered_vertices(&self, set: &EdgeSet) -> Result<BTreeSet<usize>, GraphError> {
        self.check_edges(set)?;
        Ok(set.iter().flat_map(|e| [e.u, e.v]).collect())
    }

    /// `set` together with every edge sharing an endpoint with a member.
    pub fn closed_edge_neighborhood(&self, set: &EdgeSet) -> Result<EdgeSet, GraphError> {
        let covered = self.covered_mask(set)?;
        Ok(self
            .edges
            .iter()
            .copied()
            .filter(|e| (covered >> e.u | covered >> e.v) & 1 == 1)
            .collect())
    }

    /// Same vertex set, edges `E(G) - N_e[set]`. Isolated vertices stay.
    pub fn remove_edge_neighborhood(&self, set: &EdgeSet) -> Result<Graph, GraphError> {
        let covered = self.covered_mask(set)?;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &row)| {
                if covered >> v & 1 == 1 {
                    0
                } else {
                    row & !covered
                }
            })
            .collect();
        Ok(Self::from_rows(adj))
    }

    fn covered_mask(&self, set: &EdgeSet) -> Result<u64, GraphError> {
        self.check_edges(set)?;
        Ok(set.iter().fold(0u64, |m, e| m | 1 << e.u | 1 << e.v))
    }

    /// Cartesian product. Vertex `(g, h)` gets id `g * other.order() + h`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph, GraphError> {
        let (n, m) = (self.order(), other.order());
        check_order(n * m)?;
        let mut adj = vec![0u64; n * m];
        for g in 0..n {
            for h in 0..m {
                let id = g * m + h;
                for h2 in other.neighbors(h) {
                    adj[id] |= 1 << (g * m + h2);
                }
                for g2 in self.neighbors(g) {
                    adj[id] |= 1 << (g2 * m + h);
                }
            }
        }
        Ok(Self::from_rows(adj))
    }

    /// Replaces vertex `i` by `multiplicities[i]` pairwise nonadjacent copies,
    /// each joined to every copy of every neighbor of `i`. Copies of vertex
    /// `i` occupy a contiguous id block, blocks in increasing `i`.
    pub fn blowup(&self, multiplicities: &[usize]) -> Result<Graph, GraphError> {
        if multiplicities.len() != self.order() {
            return Err(GraphError::LengthMismatch {
                expected: self.order(),
                actual: multiplicities.len(),
            });
        }
        let total: usize = multiplicities.iter().sum();
        check_order(total)?;
        let mut start = Vec::with_capacity(self.order());
        let mut block = Vec::with_capacity(self.order());
        let mut next = 0;
        for &m in multiplicities {
            start.push(next);
            block.push(if m == 0 { 0 } else { ((1u64 << m) - 1) << next });
            next += m;
        }
        let mut adj = vec![0u64; total];
        for (i, &m) in multiplicities.iter().enumerate() {
            let joined = self.neighbors(i).fold(0u64, |acc, j| acc | block[j]);
            for copy in 0..m {
                adj[start[i] + copy] = joined;
            }
        }
        Ok(Self::from_rows(adj))
    }

    /// Some clique/independent partition when the graph is split.
    ///
    /// Uses the degree-sequence test: with degrees sorted decreasingly and
    /// `k` the largest index with `d_k >= k - 1`, the graph is split iff
    /// `sum_{i<=k} d_i = k(k-1) + sum_{i>k} d_i`, and then the `k` highest
    /// degree vertices form a clique.
    pub fn split_partition(&self) -> Option<SplitPartition> {
        let mut order: Vec<usize> = (0..self.order()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let deg: Vec<usize> = order.iter().map(|&v| self.degree(v)).collect();
        let k = (0..deg.len()).rfind(|&i| deg[i] >= i).map_or(0, |i| i + 1);
        let head: usize = deg[..k].iter().sum();
        let tail: usize = deg[k..].iter().sum();
        if head != k * k.saturating_sub(1) + tail {
            return None;
        }
        let clique: BTreeSet<usize> = order[..k].iter().copied().collect();
        let independent = order[k..].iter().copied().collect();
        let part = SplitPartition {
            clique,
            independent,
        };
        debug_assert!(self.is_split_partition(&part));
        Some(part)
    }

    /// Checks the partition conditions directly.
    pub fn is_split_partition(&self, part: &SplitPartition) -> bool {
        let k: Vec<usize> = part.clique.iter().copied().collect();
        let i: Vec<usize> = part.independent.iter().copied().collect();
        let all_present = k.len() + i.len() == self.order()
            && part.clique.is_disjoint(&part.independent)
            && k.iter().chain(&i).all(|&v| v < self.order());
        all_present
            && k.iter()
                .enumerate()
                .all(|(x, &a)| k[x + 1..].iter().all(|&b| self.has_edge(a, b)))
            && i.iter()
                .enumerate()
                .all(|(x, &a)| i[x + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    /// Vertices adjacent to at least one degree-1 vertex.
    pub fn support_vertices(&self) -> BTreeSet<usize> {
        (0..self.order())
            .filter(|&v| self.degree(v) == 1)
            .flat_map(|leaf| self.neighbors(leaf))
            .collect()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|e| self.adj[e.u] & self.adj[e.v] == 0)
    }

    /// Pairwise distances; `usize::MAX` marks unreachable pairs.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        (0..self.order())
            .map(|root| {
                let mut dist = vec![usize::MAX; self.order()];
                dist[root] = 0;
                let mut queue = VecDeque::from([root]);
                while let Some(v) = queue.pop_front() {
                    for w in self.neighbors(v) {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[v] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                dist
            })
            .collect()
    }
}

fn check_order(order: usize) -> Result<(), GraphError> {
    if order > MAX_ORDER {
        Err(GraphError::OrderTooLarge {
            order,
            max: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}
