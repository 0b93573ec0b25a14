//! Edge dominating sets: membership, private edge neighbors, minimality,
//! γ′ and Γ′ with witnesses, and enumeration of all minimal edge dominating
//! sets.
//!
//! Every search here branches on the first undominated edge `e`. A set that
//! dominates `e` contains some edge of N_e[e]; branch `i` takes the `i`-th
//! such edge and forbids the earlier ones, so each edge dominating set is
//! reached along exactly one path. A branch dies as soon as some chosen edge
//! has no edge left that only it dominates, because adding edges can never
//! give that edge a private neighbor back.

use std::ops::ControlFlow;

use crate::edge_index::{mask_bits, EdgeIndex, Mask};
use crate::graph::{Edge, EdgeSet, Graph, GraphError};

/// γ′ and Γ′ of a graph with minimal edge dominating sets realizing them.
///
/// With `exact == false` the search stopped early: `min_witness` and
/// `max_witness` are minimal edge dominating sets of different sizes, so
/// `gamma_prime` is exact but `upper_gamma_prime` is only a lower bound on Γ′.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdsCertificate {
    pub gamma_prime: usize,
    pub upper_gamma_prime: usize,
    pub min_witness: EdgeSet,
    pub max_witness: EdgeSet,
    pub is_wed: bool,
    pub exact: bool,
}

/// Result of [`enumerate_minimal_eds`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub visited: usize,
    /// True when every minimal edge dominating set was visited.
    pub complete: bool,
    pub min_size: Option<usize>,
    pub max_size: Option<usize>,
}

pub fn is_edge_dominating(g: &Graph, set: &EdgeSet) -> Result<bool, GraphError> {
    let idx = EdgeIndex::new(g);
    let mask = idx.mask_of(set)?;
    Ok(idx.neighborhood(mask) == idx.full)
}

/// N_e[f] − N_e[F − {f}]. The edge `f` may be its own private neighbor.
pub fn private_edge_neighbors(g: &Graph, set: &EdgeSet, f: Edge) -> Result<EdgeSet, GraphError> {
    if !set.contains(f) {
        return Err(GraphError::NotAMember(f));
    }
    let idx = EdgeIndex::new(g);
    let mask = idx.mask_of(set)?;
    let i = g.edge_index(f).ok_or(GraphError::ForeignEdge(f))?;
    let others = idx.neighborhood(mask & !(1 << i));
    Ok(idx.set_of(idx.closed[i] & !others))
}

/// Edge dominating, and every member has a private edge neighbor.
pub fn is_minimal_eds(g: &Graph, set: &EdgeSet) -> Result<bool, GraphError> {
    let idx = EdgeIndex::new(g);
    let mask = idx.mask_of(set)?;
    Ok(is_minimal_mask(&idx, mask))
}

fn is_minimal_mask(idx: &EdgeIndex, mask: Mask) -> bool {
    let (dom, dom2) = coverage(idx, mask);
    dom == idx.full && mask_bits(mask).all(|f| idx.closed[f] & !dom2 != 0)
}

/// Edges dominated at least once and at least twice by `mask`.
fn coverage(idx: &EdgeIndex, mask: Mask) -> (Mask, Mask) {
    mask_bits(mask).fold((0, 0), |(once, twice), f| {
        let c = idx.closed[f];
        (once | c, twice | (once & c))
    })
}

/// Visits distinct minimal edge dominating sets until the visitor breaks,
/// `limit` sets have been visited, or the enumeration is exhausted.
pub fn enumerate_minimal_eds<V>(g: &Graph, mut visitor: V, limit: usize) -> EnumerationSummary
where
    V: FnMut(&EdgeSet) -> ControlFlow<()>,
{
    let idx = EdgeIndex::new(g);
    let mut summary = EnumerationSummary {
        visited: 0,
        complete: false,
        min_size: None,
        max_size: None,
    };
    if limit == 0 {
        return summary;
    }
    let flow = for_each_minimal(&idx, &mut |mask| {
        let size = mask.count_ones() as usize;
        summary.visited += 1;
        summary.min_size = Some(summary.min_size.map_or(size, |m| m.min(size)));
        summary.max_size = Some(summary.max_size.map_or(size, |m| m.max(size)));
        visitor(&idx.set_of(mask))?;
        if summary.visited >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    summary.complete = flow.is_continue();
    summary
}

/// Mask-level enumeration of all minimal edge dominating sets.
pub(crate) fn for_each_minimal<V>(idx: &EdgeIndex, visit: &mut V) -> ControlFlow<()>
where
    V: FnMut(Mask) -> ControlFlow<()>,
{
    let mut search = Search { idx, visit };
    search.run(0, 0, 0, 0)
}

/// γ′ with a minimum edge dominating set.
pub(crate) fn minimum_eds(idx: &EdgeIndex) -> Mask {
    let mut best: Option<Mask> = None;
    min_search(idx, 0, 0, 0, &mut best);
    best.expect("the full edge set dominates")
}

fn min_search(idx: &EdgeIndex, chosen: Mask, dom: Mask, forbidden: Mask, best: &mut Option<Mask>) {
    if dom == idx.full {
        if best.is_none_or(|b| chosen.count_ones() < b.count_ones()) {
            *best = Some(chosen);
        }
        return;
    }
    let size = chosen.count_ones();
    if let Some(b) = best {
        if size + lower_bound(idx, dom) >= b.count_ones() {
            return;
        }
    }
    let e = (!dom & idx.full).trailing_zeros() as usize;
    let mut forbidden = forbidden;
    for d in mask_bits(idx.closed[e] & !forbidden) {
        min_search(idx, chosen | 1 << d, dom | idx.closed[d], forbidden, best);
        forbidden |= 1 << d;
    }
}

/// Greedy set of undominated edges pairwise far apart: no single edge
/// dominates two of them, so each needs its own dominator.
fn lower_bound(idx: &EdgeIndex, dom: Mask) -> u32 {
    let mut left = idx.full & !dom;
    let mut count = 0;
    while left != 0 {
        let e = left.trailing_zeros() as usize;
        count += 1;
        // edges sharing a dominator with e lie in N_e[N_e[e]]
        left &= !idx.neighborhood(idx.closed[e]);
    }
    count
}

struct Search<'a, 'g, V> {
    idx: &'a EdgeIndex<'g>,
    visit: &'a mut V,
}

impl<V> Search<'_, '_, V>
where
    V: FnMut(Mask) -> ControlFlow<()>,
{
    fn run(&mut self, chosen: Mask, dom: Mask, dom2: Mask, forbidden: Mask) -> ControlFlow<()> {
        let idx = self.idx;
        if dom == idx.full {
            return (self.visit)(chosen);
        }
        let undominated = idx.full & !dom;
        if mask_bits(undominated).any(|g| idx.closed[g] & !forbidden == 0) {
            return ControlFlow::Continue(());
        }
        let e = undominated.trailing_zeros() as usize;
        let mut forbidden = forbidden;
        for d in mask_bits(idx.closed[e] & !forbidden) {
            let c = idx.closed[d];
            let next_dom = dom | c;
            let next_dom2 = dom2 | (dom & c);
            let next = chosen | 1 << d;
            if mask_bits(chosen).all(|f| idx.closed[f] & !next_dom2 != 0) {
                self.run(next, next_dom, next_dom2, forbidden)?;
            }
            forbidden |= 1 << d;
        }
        ControlFlow::Continue(())
    }
}

/// Largest minimal edge dominating set strictly larger than `floor` edges,
/// if any. With `first_only` the first such set found is returned.
pub(crate) fn larger_minimal_eds(idx: &EdgeIndex, floor: usize, first_only: bool) -> Option<Mask> {
    let mut best: Option<Mask> = None;
    let mut floor = floor as u32;
    let _ = max_search(idx, 0, 0, 0, 0, &mut floor, &mut best, first_only);
    best
}

#[allow(clippy::too_many_arguments)]
fn max_search(
    idx: &EdgeIndex,
    chosen: Mask,
    dom: Mask,
    dom2: Mask,
    forbidden: Mask,
    floor: &mut u32,
    best: &mut Option<Mask>,
    first_only: bool,
) -> ControlFlow<()> {
    if dom == idx.full {
        if chosen.count_ones() > *floor {
            *floor = chosen.count_ones();
            *best = Some(chosen);
            if first_only {
                return ControlFlow::Break(());
            }
        }
        return ControlFlow::Continue(());
    }
    let undominated = idx.full & !dom;
    // each further edge needs a private neighbor among the undominated edges
    if chosen.count_ones() + undominated.count_ones() <= *floor {
        return ControlFlow::Continue(());
    }
    if mask_bits(undominated).any(|g| idx.closed[g] & !forbidden == 0) {
        return ControlFlow::Continue(());
    }
    let e = undominated.trailing_zeros() as usize;
    let mut forbidden = forbidden;
    for d in mask_bits(idx.closed[e] & !forbidden) {
        let c = idx.closed[d];
        let next_dom2 = dom2 | (dom & c);
        if mask_bits(chosen).all(|f| idx.closed[f] & !next_dom2 != 0) {
            max_search(
                idx,
                chosen | 1 << d,
                dom | c,
                next_dom2,
                forbidden,
                floor,
                best,
                first_only,
            )?;
        }
        forbidden |= 1 << d;
    }
    ControlFlow::Continue(())
}

/// Exact γ′ and Γ′ with witnesses. With `early_exit`, the search for Γ′
/// stops at the first minimal edge dominating set larger than γ′.
pub fn eds_certificate(g: &Graph, early_exit: bool) -> EdsCertificate {
    let idx = EdgeIndex::new(g);
    let min = minimum_eds(&idx);
    let gamma = min.count_ones() as usize;
    let larger = larger_minimal_eds(&idx, gamma, early_exit);
    let max = larger.unwrap_or(min);
    EdsCertificate {
        gamma_prime: gamma,
        upper_gamma_prime: max.count_ones() as usize,
        min_witness: idx.set_of(min),
        max_witness: idx.set_of(max),
        is_wed: larger.is_none(),
        exact: !early_exit || larger.is_none(),
    }
}

/// γ′(G) = Γ′(G).
///
/// Graphs that are not equimatchable are rejected through the matching
/// numbers first; otherwise a minimal edge dominating set larger than a
/// minimum one is searched for.
pub fn is_wed(g: &Graph) -> bool {
    if !crate::matching::is_equimatchable(g) {
        return false;
    }
    eds_certificate(g, true).is_wed
}
