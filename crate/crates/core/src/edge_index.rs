//! Bitmask view of a graph's edge set used by the search engines.

use crate::graph::{EdgeSet, Graph, GraphError};

pub(crate) type Mask = u128;

/// Largest edge count the mask engines handle.
pub const MAX_EDGES: usize = 128;

#[inline]
pub(crate) fn mask_bits(mut mask: Mask) -> impl Iterator<Item = usize> {
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

pub(crate) struct EdgeIndex<'g> {
    pub graph: &'g Graph,
    /// `closed[i]` is N_e[e_i] as a mask.
    pub closed: Vec<Mask>,
    pub full: Mask,
}

impl<'g> EdgeIndex<'g> {
    /// Panics when the graph has more than [`MAX_EDGES`] edges.
    pub fn new(graph: &'g Graph) -> Self {
        let m = graph.size();
        assert!(
            m <= MAX_EDGES,
            "edge-set engine supports at most {MAX_EDGES} edges, graph has {m}"
        );
        let mut incident = vec![0 as Mask; graph.order()];
        for (i, e) in graph.edges().iter().enumerate() {
            incident[e.u()] |= 1 << i;
            incident[e.v()] |= 1 << i;
        }
        let closed = graph
            .edges()
            .iter()
            .map(|e| incident[e.u()] | incident[e.v()])
            .collect();
        let full = if m == MAX_EDGES {
            Mask::MAX
        } else {
            (1 << m) - 1
        };
        Self {
            graph,
            closed,
            full,
        }
    }

    pub fn mask_of(&self, set: &EdgeSet) -> Result<Mask, GraphError> {
        set.iter().try_fold(0 as Mask, |acc, e| {
            self.graph
                .edge_index(e)
                .map(|i| acc | 1 << i)
                .ok_or(GraphError::ForeignEdge(e))
        })
    }

    pub fn set_of(&self, mask: Mask) -> EdgeSet {
        mask_bits(mask).map(|i| self.graph.edges()[i]).collect()
    }

    /// N_e[F] for a mask F.
    pub fn neighborhood(&self, mask: Mask) -> Mask {
        mask_bits(mask).fold(0, |acc, i| acc | self.closed[i])
    }
}
