//! Isomorphism-free enumeration of small graphs, and per-graph reports.
//!
//! Graphs are generated order by order: every graph on `k + 1` vertices
//! arises from a graph on `k` vertices by adding one vertex joined to some
//! subset of the old ones. Children are reduced to canonical codes and
//! deduplicated, so each level holds one representative per class.
//!
//! Connected graphs are grown from connected parents only, which loses
//! nothing: deleting a non-cut vertex (a leaf of a spanning tree) keeps a
//! graph connected. Triangle-free, minimum girth, bipartite and split are
//! closed under vertex deletion, so they prune children during generation.
//! The remaining conditions are applied when a level is reported.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::domination::eds_certificate;
use crate::edge_index::MAX_EDGES;
use crate::graph::{Girth, Graph};
use crate::matching::matching_profile;

pub const MAX_CENSUS_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("max order must be at least 1")]
    ZeroOrder,
    #[error("max order {max_order} exceeds the census bound of {limit}")]
    OrderBound { max_order: usize, limit: usize },
    #[error("{size} edges exceed the engine bound of {max}")]
    TooManyEdges { size: usize, max: usize },
    #[error("inconsistent invariants: {0}")]
    Inconsistent(String),
}

/// Which graphs a census visits. All flags combine conjunctively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusFilter {
    pub max_order: usize,
    pub connected: bool,
    pub triangle_free: bool,
    pub bipartite: bool,
    pub nonbipartite: bool,
    /// Forests have infinite girth and pass any minimum.
    pub min_girth: Option<usize>,
    /// Forests fail any maximum.
    pub max_girth: Option<usize>,
    pub split_only: bool,
}

impl CensusFilter {
    pub fn new(max_order: usize) -> Self {
        Self {
            max_order,
            connected: false,
            triangle_free: false,
            bipartite: false,
            nonbipartite: false,
            min_girth: None,
            max_girth: None,
            split_only: false,
        }
    }

    pub fn connected(max_order: usize) -> Self {
        Self {
            connected: true,
            ..Self::new(max_order)
        }
    }

    fn check(&self) -> Result<(), CensusError> {
        if self.max_order == 0 {
            return Err(CensusError::ZeroOrder);
        }
        if self.max_order > MAX_CENSUS_ORDER {
            return Err(CensusError::OrderBound {
                max_order: self.max_order,
                limit: MAX_CENSUS_ORDER,
            });
        }
        Ok(())
    }

    /// Girth bound enforced during generation (3 means none).
    fn girth_floor(&self) -> usize {
        let tf = if self.triangle_free { 4 } else { 3 };
        self.min_girth.unwrap_or(3).max(tf)
    }

    /// Whole-graph test of every condition.
    pub fn accepts(&self, g: &Graph) -> bool {
        let order_ok = g.order() >= 1 && g.order() <= self.max_order;
        let girth = g.girth();
        let bip = g.is_bipartite().is_some();
        order_ok
            && (!self.connected || g.is_connected())
            && girth.is_at_least(self.girth_floor())
            && self.max_girth.is_none_or(|m| girth <= Girth::Finite(m))
            && (!self.bipartite || bip)
            && (!self.nonbipartite || !bip)
            && (!self.split_only || g.split_partition().is_some())
    }

    fn reportable(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected())
            && (!self.nonbipartite || g.is_bipartite().is_none())
            && self.max_girth.is_none_or(|m| g.girth() <= Girth::Finite(m))
    }

    fn children(&self, parent: &Graph) -> Vec<CanonicalCode> {
        let k = parent.order();
        let floor = self.girth_floor();
        let dist = (floor > 3).then(|| parent.distances());
        let first = if self.connected { 1 } else { 0 };
        let mut out = Vec::new();
        for nbrs in first..1u64 << k {
            if let Some(dist) = &dist {
                let close = crate::graph::bits(nbrs).any(|a| {
                    crate::graph::bits(nbrs >> (a + 1) << (a + 1))
                        .any(|b| dist[a][b] != usize::MAX && dist[a][b] + 2 < floor)
                });
                if close {
                    continue;
                }
            }
            let mut rows = parent.rows().to_vec();
            for v in crate::graph::bits(nbrs) {
                rows[v] |= 1 << k;
            }
            rows.push(nbrs);
            let child = Graph::from_rows(rows);
            if self.bipartite && child.is_bipartite().is_none() {
                continue;
            }
            if self.split_only && child.split_partition().is_none() {
                continue;
            }
            out.push(canonical_code(&child).expect("census orders are canonizable"));
        }
        out
    }
}

/// Canonical codes of every graph passing `filter`, sorted by order and then
/// by code.
pub fn collect(filter: &CensusFilter) -> Result<Vec<CanonicalCode>, CensusError> {
    filter.check()?;
    let k1 = Graph::empty(1).expect("order 1");
    let mut level = vec![canonical_code(&k1).expect("order 1")];
    let mut out = Vec::new();
    for order in 1..=filter.max_order {
        if order > 1 {
            let parents = std::mem::take(&mut level);
            let mut next: Vec<CanonicalCode> = parents
                .par_iter()
                .flat_map_iter(|code| filter.children(&code.to_graph()))
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            next.par_sort_unstable();
            level = next;
        }
        out.extend(
            level
                .iter()
                .filter(|code| filter.reportable(&code.to_graph()))
                .copied(),
        );
    }
    Ok(out)
}

/// Visits one canonically labeled representative per isomorphism class
/// passing `filter`, in order of increasing order and code. Returns the
/// number visited.
pub fn enumerate<V>(filter: &CensusFilter, mut visitor: V) -> Result<usize, CensusError>
where
    V: FnMut(&Graph, &CanonicalCode),
{
    let codes = collect(filter)?;
    for code in &codes {
        visitor(&code.to_graph(), code);
    }
    Ok(codes.len())
}

/// [`enumerate`] restricted to connected graphs.
pub fn enumerate_connected<V>(filter: &CensusFilter, visitor: V) -> Result<usize, CensusError>
where
    V: FnMut(&Graph, &CanonicalCode),
{
    let filter = CensusFilter {
        connected: true,
        ..*filter
    };
    enumerate(&filter, visitor)
}

/// Every invariant of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub order: usize,
    pub size: usize,
    pub girth: Girth,
    pub bipartite: bool,
    pub split: bool,
    pub alpha_prime: usize,
    pub i_prime: usize,
    pub gamma_prime: usize,
    pub upper_gamma_prime: usize,
    pub equimatchable: bool,
    pub randomly_matchable: bool,
    pub wed: bool,
    /// Absent above the canonical-labeling bound.
    pub canonical: Option<CanonicalCode>,
}

impl InvariantReport {
    /// `(key, value)` pairs in a fixed order.
    pub fn records(&self) -> Vec<(&'static str, String)> {
        vec![
            ("order", self.order.to_string()),
            ("size", self.size.to_string()),
            ("girth", self.girth.to_string()),
            ("bipartite", self.bipartite.to_string()),
            ("split", self.split.to_string()),
            ("alpha_prime", self.alpha_prime.to_string()),
            ("i_prime", self.i_prime.to_string()),
            ("gamma_prime", self.gamma_prime.to_string()),
            ("Gamma_prime", self.upper_gamma_prime.to_string()),
            ("equimatchable", self.equimatchable.to_string()),
            ("randomly_matchable", self.randomly_matchable.to_string()),
            ("wed", self.wed.to_string()),
            (
                "canonical",
                self.canonical
                    .map_or_else(|| "-".to_string(), |c| c.to_graph6()),
            ),
        ]
    }

    fn check(&self) -> Result<(), CensusError> {
        let fail = |what: &str| Err(CensusError::Inconsistent(what.to_string()));
        if self.gamma_prime != self.i_prime {
            return fail("gamma_prime != i_prime");
        }
        if !(self.i_prime <= self.alpha_prime && self.alpha_prime <= self.upper_gamma_prime) {
            return fail("i_prime <= alpha_prime <= Gamma_prime");
        }
        if 2 * self.alpha_prime > self.order {
            return fail("alpha_prime <= order / 2");
        }
        if self.wed && !self.equimatchable {
            return fail("wed implies equimatchable");
        }
        if self.wed != (self.gamma_prime == self.upper_gamma_prime) {
            return fail("wed iff gamma_prime = Gamma_prime");
        }
        Ok(())
    }
}

/// Computes the full report and checks the invariant chain before returning.
pub fn invariant_report(g: &Graph) -> Result<InvariantReport, CensusError> {
    if g.size() > MAX_EDGES {
        return Err(CensusError::TooManyEdges {
            size: g.size(),
            max: MAX_EDGES,
        });
    }
    let profile = matching_profile(g);
    let cert = eds_certificate(g, false);
    let equimatchable = profile.i_prime == profile.alpha_prime;
    let report = InvariantReport {
        order: g.order(),
        size: g.size(),
        girth: g.girth(),
        bipartite: g.is_bipartite().is_some(),
        split: g.split_partition().is_some(),
        alpha_prime: profile.alpha_prime,
        i_prime: profile.i_prime,
        gamma_prime: cert.gamma_prime,
        upper_gamma_prime: cert.upper_gamma_prime,
        equimatchable,
        randomly_matchable: equimatchable && profile.has_perfect,
        wed: cert.is_wed,
        canonical: canonical_code(g).ok(),
    };
    report.check()?;
    Ok(report)
}
