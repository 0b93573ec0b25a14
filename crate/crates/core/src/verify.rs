//! Bounded extensional checks of the structural characterizations.
//!
//! Each check runs over its hypothesis class up to a bound and compares the
//! classification of every graph against the claimed description. A verdict
//! only speaks for the graphs it examined; it records the bound it used.
//!
//! Witnesses are the well-edge-dominated members of the hypothesis class.
//! Trivial graphs (one vertex) are outside every class.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode, MAX_CANON_ORDER};
use crate::census::{collect, CensusError, CensusFilter};
use crate::domination::{eds_certificate, is_wed};
use crate::families::{build, hstar, standard, FamilyId, FamilySpec};
use crate::graph::Graph;
use crate::matching::{
    all_matchings, has_perfect_matching, is_randomly_matchable, minimum_maximal_matching_size,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("{theorem}: bound {bound} outside the supported range {min}..={max}")]
    Bound {
        theorem: TheoremId,
        bound: usize,
        min: usize,
        max: usize,
    },
    #[error("{0}: this check needs generated pairs or families and cannot read a graph stream")]
    NotStreamable(TheoremId),
    #[error("order {0} exceeds the canonical-labeling bound")]
    OrderTooLarge(usize),
    #[error(transparent)]
    Census(#[from] CensusError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    Kn,
    Krs,
    RandomlyMatchable,
    TriangleFree,
    Split,
    Cartesian,
    Girth5,
    MatchRemoval,
    GammaEqualsI,
    Factors,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Kn,
        TheoremId::Krs,
        TheoremId::RandomlyMatchable,
        TheoremId::TriangleFree,
        TheoremId::Split,
        TheoremId::Cartesian,
        TheoremId::Girth5,
        TheoremId::MatchRemoval,
        TheoremId::GammaEqualsI,
        TheoremId::Factors,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Kn => "kn",
            TheoremId::Krs => "krs",
            TheoremId::RandomlyMatchable => "randomly-matchable",
            TheoremId::TriangleFree => "triangle-free",
            TheoremId::Split => "split",
            TheoremId::Cartesian => "cartesian",
            TheoremId::Girth5 => "girth5",
            TheoremId::MatchRemoval => "match-removal",
            TheoremId::GammaEqualsI => "gamma-equals-i",
            TheoremId::Factors => "factors",
        }
    }

    /// Whether the bound limits factor orders instead of graph orders.
    pub fn bounds_factors(self) -> bool {
        matches!(self, TheoremId::Cartesian | TheoremId::Factors)
    }

    fn bound_range(self) -> (usize, usize) {
        match self {
            TheoremId::Kn | TheoremId::Krs => (1, MAX_CANON_ORDER),
            // products of two factors must stay canonizable
            TheoremId::Cartesian | TheoremId::Factors => (1, 4),
            _ => (1, crate::census::MAX_CENSUS_ORDER),
        }
    }

    fn census_filter(self, max_order: usize) -> Option<CensusFilter> {
        let base = CensusFilter::connected(max_order);
        Some(match self {
            TheoremId::RandomlyMatchable | TheoremId::MatchRemoval | TheoremId::GammaEqualsI => {
                base
            }
            TheoremId::TriangleFree => CensusFilter {
                triangle_free: true,
                nonbipartite: true,
                ..base
            },
            TheoremId::Split => CensusFilter {
                split_only: true,
                ..base
            },
            TheoremId::Girth5 => CensusFilter {
                min_girth: Some(5),
                ..base
            },
            TheoremId::Kn | TheoremId::Krs | TheoremId::Cartesian | TheoremId::Factors => {
                return None
            }
        })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name() == norm)
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

/// Outcome of one bounded check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem_id: TheoremId,
    /// Graph-order bound, or factor-order bound for product checks.
    pub max_order: usize,
    pub graphs_checked: usize,
    pub witnesses: Vec<CanonicalCode>,
    pub counterexamples: Vec<CanonicalCode>,
    pub holds: bool,
}

impl TheoremVerdict {
    fn assemble(theorem_id: TheoremId, max_order: usize, outcomes: Vec<Outcome>) -> Self {
        let graphs_checked = outcomes.len();
        let mut witnesses = BTreeSet::new();
        let mut counterexamples = BTreeSet::new();
        for o in outcomes {
            if o.witness {
                witnesses.insert(o.code());
            }
            if o.violation {
                counterexamples.insert(o.code());
            }
        }
        Self {
            theorem_id,
            max_order,
            graphs_checked,
            holds: counterexamples.is_empty(),
            witnesses: witnesses.into_iter().collect(),
            counterexamples: counterexamples.into_iter().collect(),
        }
    }
}

struct Outcome {
    graph: Graph,
    code: Option<CanonicalCode>,
    witness: bool,
    violation: bool,
}

impl Outcome {
    fn code(&self) -> CanonicalCode {
        self.code
            .unwrap_or_else(|| canonical_code(&self.graph).expect("checked orders are canonizable"))
    }
}

/// Runs the check for `id` with the given bound.
pub fn verify(id: TheoremId, bound: usize) -> Result<TheoremVerdict, VerifyError> {
    let (min, max) = id.bound_range();
    if bound < min || bound > max {
        return Err(VerifyError::Bound {
            theorem: id,
            bound,
            min,
            max,
        });
    }
    let outcomes = match id {
        TheoremId::Kn => (2..=bound)
            .into_par_iter()
            .map(|n| {
                let g = standard(FamilyId::Complete, &[n]).expect("n >= 2");
                let wed = is_wed(&g);
                outcome(g, None, wed, wed != (n <= 4))
            })
            .collect(),
        TheoremId::Krs => {
            let pairs: Vec<(usize, usize)> = (2..=bound)
                .flat_map(|r| (r + 1..=bound - r).map(move |s| (r, s)))
                .filter(|&(r, s)| r + s <= bound)
                .collect();
            pairs
                .into_par_iter()
                .map(|(r, s)| {
                    let g = standard(FamilyId::Biclique, &[r, s]).expect("r, s >= 1");
                    let wed = is_wed(&g);
                    outcome(g, None, wed, wed)
                })
                .collect()
        }
        TheoremId::Cartesian | TheoremId::Factors => product_outcomes(id, bound)?,
        _ => {
            let filter = id.census_filter(bound).expect("census-backed check");
            let ctx = Context::new(bound);
            let codes = collect(&filter)?;
            codes
                .into_par_iter()
                .map(|code| code.to_graph())
                .filter(|g| g.order() >= 2)
                .map(|g| ctx.judge(id, g))
                .collect()
        }
    };
    Ok(TheoremVerdict::assemble(id, bound, outcomes))
}

/// Runs a single-graph check over externally supplied graphs. Graphs outside
/// the hypothesis class are skipped; no deduplication is done.
pub fn verify_graphs<I>(id: TheoremId, graphs: I) -> Result<TheoremVerdict, VerifyError>
where
    I: IntoIterator<Item = Graph>,
{
    let graphs: Vec<Graph> = graphs.into_iter().collect();
    let max_order = graphs.iter().map(Graph::order).max().unwrap_or(0);
    if max_order > MAX_CANON_ORDER {
        return Err(VerifyError::OrderTooLarge(max_order));
    }
    if id.census_filter(1).is_none() {
        return Err(VerifyError::NotStreamable(id));
    }
    let filter = id.census_filter(MAX_CANON_ORDER).expect("checked above");
    let ctx = Context::new(max_order);
    let outcomes = graphs
        .into_par_iter()
        .filter(|g| g.order() >= 2 && filter.accepts(g))
        .map(|g| ctx.judge(id, g))
        .collect();
    Ok(TheoremVerdict::assemble(id, max_order, outcomes))
}

fn outcome(graph: Graph, code: Option<CanonicalCode>, witness: bool, violation: bool) -> Outcome {
    Outcome {
        graph,
        code,
        witness,
        violation,
    }
}

/// Canonical codes of the named graphs each characterization lists.
struct Context {
    triangle_free: BTreeSet<CanonicalCode>,
    split: BTreeSet<CanonicalCode>,
    girth5: BTreeSet<CanonicalCode>,
}

impl Context {
    fn new(max_order: usize) -> Self {
        let code = |g: &Graph| canonical_code(g).expect("small named graph");
        let cycle = |n| standard(FamilyId::Cycle, &[n]).expect("n >= 3");
        let k2 = standard(FamilyId::Complete, &[2]).expect("n >= 1");
        let mut split: BTreeSet<CanonicalCode> = [2, 3, 4]
            .iter()
            .map(|&n| code(&standard(FamilyId::Complete, &[n]).expect("n >= 1")))
            .collect();
        split.insert(code(&build(&FamilySpec::new(FamilyId::H3)).expect("fixed")));
        for extra in 1..=max_order.min(MAX_CANON_ORDER) {
            split.insert(code(&standard(FamilyId::Star, &[extra]).expect("n >= 1")));
            for family in [FamilyId::H1, FamilyId::H2] {
                let spec = FamilySpec::new(family).with("leaves", extra as i64);
                if spec.order().is_ok_and(|n| n <= MAX_CANON_ORDER) {
                    split.insert(code(&build(&spec).expect("leaves >= 1")));
                }
            }
        }
        Self {
            triangle_free: [code(&cycle(5)), code(&cycle(7)), code(&hstar())].into(),
            split,
            girth5: [code(&k2), code(&cycle(5)), code(&cycle(7))].into(),
        }
    }

    fn judge(&self, id: TheoremId, g: Graph) -> Outcome {
        let code = canonical_code(&g).expect("census orders are canonizable");
        let wed = is_wed(&g);
        let violation = match id {
            TheoremId::RandomlyMatchable => {
                let pm = has_perfect_matching(&g);
                let k4 = g.order() == 4 && is_complete(&g);
                let knn = is_balanced_biclique(&g);
                let k2n = is_complete(&g) && g.order().is_multiple_of(2);
                (wed && pm) != (k4 || knn) || is_randomly_matchable(&g) != (k2n || knn)
            }
            TheoremId::TriangleFree => wed != self.triangle_free.contains(&code),
            TheoremId::Split => wed != self.split.contains(&code),
            TheoremId::Girth5 => {
                let described = self.girth5.contains(&code) || support_side_is_partite_set(&g);
                wed != described
            }
            TheoremId::MatchRemoval => {
                wed && all_matchings(&g).iter().any(|m| {
                    let rest = g.remove_edge_neighborhood(m).expect("matching of g");
                    !is_wed(&rest)
                })
            }
            TheoremId::GammaEqualsI => {
                eds_certificate(&g, true).gamma_prime != minimum_maximal_matching_size(&g)
            }
            _ => unreachable!("single-graph checks only"),
        };
        let witness = match id {
            TheoremId::RandomlyMatchable => wed && has_perfect_matching(&g),
            _ => wed,
        };
        outcome(g, Some(code), witness, violation)
    }
}

fn product_outcomes(id: TheoremId, factor_max: usize) -> Result<Vec<Outcome>, VerifyError> {
    let factors: Vec<Graph> = collect(&CensusFilter::connected(factor_max))?
        .into_iter()
        .map(|c| c.to_graph())
        .filter(|g| g.order() >= 2)
        .collect();
    let pairs: Vec<(usize, usize)> = (0..factors.len())
        .flat_map(|i| (i..factors.len()).map(move |j| (i, j)))
        .collect();
    let k2 = standard(FamilyId::Complete, &[2]).expect("n >= 1");
    Ok(pairs
        .into_par_iter()
        .filter_map(|(i, j)| {
            let (g, h) = (&factors[i], &factors[j]);
            if id == TheoremId::Factors && (has_perfect_matching(g) || has_perfect_matching(h)) {
                return None;
            }
            let product = g.cartesian_product(h).expect("orders within bound");
            let wed = is_wed(&product);
            let violation = match id {
                TheoremId::Cartesian => wed != (*g == k2 && *h == k2),
                _ => wed && !(is_wed(g) && is_wed(h)),
            };
            Some(outcome(product, None, wed, violation))
        })
        .collect())
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.size() == n * n.saturating_sub(1) / 2
}

/// K_{n,n} with n >= 1.
fn is_balanced_biclique(g: &Graph) -> bool {
    match g.is_bipartite() {
        Some(part) => {
            let (a, b) = (part.left.len(), part.right.len());
            a == b && a >= 1 && g.size() == a * b
        }
        None => false,
    }
}

/// Bipartite, with one partite set equal to the set of support vertices.
fn support_side_is_partite_set(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    let Some(part) = g.is_bipartite() else {
        return false;
    };
    let support = g.support_vertices();
    support == part.left || support == part.right
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("GIRTH5".parse::<TheoremId>().unwrap(), TheoremId::Girth5);
        assert_eq!(
            "match_removal".parse::<TheoremId>().unwrap(),
            TheoremId::MatchRemoval
        );
        assert!(matches!(
            "bogus".parse::<TheoremId>(),
            Err(VerifyError::UnknownTheorem(_))
        ));
    }

    #[test]
    fn complete_graphs() {
        let v = verify(TheoremId::Kn, 7).unwrap();
        assert!(v.holds);
        assert_eq!(v.graphs_checked, 6);
        assert_eq!(v.witnesses.len(), 3);
    }

    #[test]
    fn bicliques() {
        let v = verify(TheoremId::Krs, 9).unwrap();
        assert!(v.holds);
        // (2,3) (2,4) (2,5) (2,6) (2,7) (3,4) (3,5) (3,6) (4,5)
        assert_eq!(v.graphs_checked, 9);
        assert!(v.witnesses.is_empty());
    }

    #[test]
    fn small_census_checks() {
        for id in [
            TheoremId::TriangleFree,
            TheoremId::Split,
            TheoremId::Girth5,
            TheoremId::RandomlyMatchable,
            TheoremId::GammaEqualsI,
            TheoremId::MatchRemoval,
        ] {
            let v = verify(id, 6).unwrap();
            assert!(v.holds, "{id}: {:?}", v.counterexamples);
        }
    }

    #[test]
    fn bounds_rejected() {
        assert!(matches!(
            verify(TheoremId::Cartesian, 5),
            Err(VerifyError::Bound { .. })
        ));
        assert!(matches!(
            verify(TheoremId::Split, 11),
            Err(VerifyError::Bound { .. })
        ));
        assert!(matches!(
            verify(TheoremId::Split, 0),
            Err(VerifyError::Bound { .. })
        ));
    }

    #[test]
    fn stream_verification_skips_outside_class() {
        let c5 = standard(FamilyId::Cycle, &[5]).unwrap();
        let k3 = standard(FamilyId::Complete, &[3]).unwrap();
        let c6 = standard(FamilyId::Cycle, &[6]).unwrap();
        let v = verify_graphs(TheoremId::TriangleFree, [c5.clone(), k3, c6]).unwrap();
        assert_eq!(v.graphs_checked, 1);
        assert_eq!(v.witnesses, vec![canonical_code(&c5).unwrap()]);
        assert!(v.holds);
        assert!(matches!(
            verify_graphs(TheoremId::Cartesian, [c5]),
            Err(VerifyError::NotStreamable(_))
        ));
    }

    #[test]
    fn girth5_description() {
        // a path P4 has support vertices {1, 2}, which split across the sides
        let p4 = standard(FamilyId::Path, &[4]).unwrap();
        assert!(!support_side_is_partite_set(&p4));
        // P5: support {1, 3} is one side
        let p5 = standard(FamilyId::Path, &[5]).unwrap();
        assert!(support_side_is_partite_set(&p5));
        assert!(is_wed(&p5));
        assert!(!is_wed(&p4));
    }
}
