//! Swap sets of graphs with small independence number, and exhaustive scans
//! over small connected graphs.

mod canon;
mod scan;

pub use canon::{
    canonical_form, connected_graphs_between, enumerate_connected_graphs, MAX_CANONICAL_VERTICES,
    MAX_ENUMERATION_VERTICES,
};
pub use scan::{
    alpha2_scan, alpha3_bound_check, conjecture_scan, Counterexample, ScanRecord, ScanReport, ThresholdRow,
};

use serde::Serialize;

use crate::certificate::{is_dominating, lex_least_matching, SwapCertificate};
use crate::error::{contract, Error, Result};
use crate::exact::{dd_m_exact, smallest_certificate_within, DEFAULT_NODE_BUDGET};
use crate::graph::Graph;
use crate::params::{independence_number, maximum_independent_set};
use crate::vertex_set::VertexSet;

fn require(g: &Graph, alpha: usize, min_n: usize) -> Result<VertexSet> {
    if g.n() < min_n {
        return Err(contract(format!("need at least {min_n} vertices, got {}", g.n())));
    }
    if !g.is_connected() {
        return Err(contract("graph must be connected"));
    }
    let a = independence_number(g)?;
    if a != alpha {
        return Err(contract(format!("independence number is {a}, expected {alpha}")));
    }
    maximum_independent_set(g)
}

/// Pair `a` with `b` if both dominate and a perfect matching joins them.
fn try_pair(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Option<SwapCertificate>> {
    if !a.is_disjoint(b) || !is_dominating(g, a) || !is_dominating(g, b) {
        return Ok(None);
    }
    Ok(lex_least_matching(g, a, b)?.map(|matching| SwapCertificate {
        d: a.clone(),
        d_prime: b.clone(),
        matching,
    }))
}

fn neighborhood_of(g: &Graph, s: &VertexSet) -> Vec<usize> {
    let mut out = VertexSet::new(g.n());
    for v in s {
        for &u in g.neighbors(v) {
            out.insert(u);
        }
    }
    out.difference(s).to_vec()
}

/// Certificate of size at most 2 for a connected graph with `α = 2` and
/// more than three vertices.
///
/// With `I = {u, v}` a maximum independent set, an independent pair in
/// `N(I)` is also maximal, hence dominating, and is matched to `I`.
/// Otherwise `N(I)` is a clique and two of its vertices that dominate and
/// match `I` are taken.
pub fn alpha2_swap(g: &Graph) -> Result<SwapCertificate> {
    let i = require(g, 2, 4)?;
    let nbrs = neighborhood_of(g, &i);
    let pairs = || {
        nbrs.iter()
            .enumerate()
            .flat_map(|(k, &y)| nbrs[k + 1..].iter().map(move |&z| (y, z)))
    };
    for (y, z) in pairs().filter(|&(y, z)| !g.has_edge(y, z)) {
        if let Some(c) = try_pair(g, &i, &VertexSet::from_vertices(g.n(), [y, z]))? {
            return Ok(c);
        }
    }
    for (w, x) in pairs() {
        if let Some(c) = try_pair(g, &i, &VertexSet::from_vertices(g.n(), [w, x]))? {
            return Ok(c);
        }
    }
    Err(Error::Construction(
        "no matched dominating pair next to the independent set".into(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Alpha3Path {
    /// The maximum independent set `I` matched onto a dominating `J`.
    IndependentMatching,
    /// Search confined to `I`, `J`, the vertices `Q` that `J` misses, and
    /// their neighbors.
    Restricted,
    /// Unrestricted exact search.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Alpha3Swap {
    pub certificate: SwapCertificate,
    pub path: Alpha3Path,
}

/// A swap certificate for a connected graph with `α = 3` and at least six
/// vertices.
///
/// Tries a maximum independent set `I` against every triple `J ⊆ N(I)` that
/// matches it; when no such `J` dominates, searches near the vertices the
/// first matched `J` misses, then falls back to exhaustive search.
///
/// Graphs with a strong stem have no swap set at all, so those inputs
/// return `Error::Construction` (the smallest is a triangle with one
/// vertex carrying two pendant leaves).
pub fn alpha3_swap_exists(g: &Graph) -> Result<Alpha3Swap> {
    let i = require(g, 3, 6)?;
    let nbrs = neighborhood_of(g, &i);
    let mut first_matched: Option<VertexSet> = None;
    for (a, &x) in nbrs.iter().enumerate() {
        for (b, &y) in nbrs.iter().enumerate().skip(a + 1) {
            for &z in &nbrs[b + 1..] {
                let j = VertexSet::from_vertices(g.n(), [x, y, z]);
                if lex_least_matching(g, &i, &j)?.is_none() {
                    continue;
                }
                if let Some(c) = try_pair(g, &i, &j)? {
                    return Ok(Alpha3Swap {
                        certificate: c,
                        path: Alpha3Path::IndependentMatching,
                    });
                }
                first_matched.get_or_insert(j);
            }
        }
    }
    if let Some(j) = first_matched {
        let mut allowed = i.union(&j);
        for q in g.vertices().filter(|&v| !j.iter().any(|u| u == v || g.has_edge(u, v))) {
            allowed.insert(q);
            for &u in g.neighbors(q) {
                allowed.insert(u);
            }
        }
        if let Some(c) = smallest_certificate_within(g, &allowed, g.n() / 2, DEFAULT_NODE_BUDGET)? {
            return Ok(Alpha3Swap {
                certificate: c,
                path: Alpha3Path::Restricted,
            });
        }
    }
    let r = dd_m_exact(g, DEFAULT_NODE_BUDGET)?;
    match r.certificate {
        Some(c) => Ok(Alpha3Swap {
            certificate: c,
            path: Alpha3Path::Exhaustive,
        }),
        None => Err(Error::Construction(format!("no swap set found ({:?})", r.status))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::families::{complete_minus_edge, net};

    #[test]
    fn alpha_two() {
        for g in [
            Graph::cycle(5),
            Graph::cycle(4),
            complete_minus_edge(4),
            complete_minus_edge(6),
        ] {
            let c = alpha2_swap(&g).unwrap();
            assert!(c.size() <= 2);
            assert!(verify_certificate(&g, &c));
        }
        let c = alpha2_swap(&Graph::cycle(5)).unwrap();
        assert_eq!((c.d.to_vec(), c.d_prime.to_vec()), (vec![0, 2], vec![1, 3]));
        assert!(alpha2_swap(&Graph::complete(4)).is_err());
        assert!(alpha2_swap(&Graph::path(3)).is_err());
    }

    #[test]
    fn alpha_three() {
        for g in [Graph::cycle(7), Graph::cycle(6), net()] {
            let r = alpha3_swap_exists(&g).unwrap();
            assert!(verify_certificate(&g, &r.certificate));
        }
        assert!(alpha3_swap_exists(&Graph::path(7)).is_err());
    }
}
