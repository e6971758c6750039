//! Exact domination and independence numbers, and stem classification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{low_bits, VertexSet};

/// Vertex-count caps for the exponential solvers. Neither may exceed 64.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_domination_vertices: usize,
    pub max_independence_vertices: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_domination_vertices: 30,
            max_independence_vertices: 40,
        }
    }
}

fn check_limit(g: &Graph, what: &'static str, limit: usize) -> Result<()> {
    let limit = limit.min(64);
    if g.n() > limit {
        return Err(Error::TooLarge { what, limit, n: g.n() });
    }
    Ok(())
}

pub fn domination_number(g: &Graph) -> Result<usize> {
    domination_number_with(g, &SearchLimits::default())
}

pub fn domination_number_with(g: &Graph, limits: &SearchLimits) -> Result<usize> {
    minimum_dominating_set_with(g, limits).map(|s| s.len())
}

/// A minimum dominating set, found by increasing-cardinality search that
/// branches on the closed neighborhood of the lowest undominated vertex.
pub fn minimum_dominating_set_with(g: &Graph, limits: &SearchLimits) -> Result<VertexSet> {
    check_limit(g, "domination number", limits.max_domination_vertices)?;
    let closed = g.closed_masks().expect("checked size");
    let all = low_bits(g.n());
    let widest = closed.iter().map(|m| m.count_ones()).max().unwrap_or(1);
    for k in 0..=g.n() {
        if let Some(mask) = dominate_within(&closed, all, 0, k, widest, all) {
            return Ok(VertexSet::from_mask(g.n(), mask));
        }
    }
    unreachable!("the full vertex set dominates")
}

/// Finds at most `k` vertices from `allowed` that, together with the already
/// `dominated` mask, dominate `all`. Returns the chosen mask.
pub(crate) fn dominate_within(
    closed: &[u64],
    all: u64,
    dominated: u64,
    k: usize,
    widest: u32,
    allowed: u64,
) -> Option<u64> {
    let missing = all & !dominated;
    if missing == 0 {
        return Some(0);
    }
    if k == 0 || missing.count_ones() > k as u32 * widest {
        return None;
    }
    let u = missing.trailing_zeros() as usize;
    let mut cands = closed[u] & allowed;
    while cands != 0 {
        let w = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        if let Some(rest) = dominate_within(closed, all, dominated | closed[w], k - 1, widest, allowed) {
            return Some(rest | 1 << w);
        }
    }
    None
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    independence_number_with(g, &SearchLimits::default())
}

pub fn independence_number_with(g: &Graph, limits: &SearchLimits) -> Result<usize> {
    check_limit(g, "independence number", limits.max_independence_vertices)?;
    let open = g.open_masks().expect("checked size");
    Ok(max_independent(&open, low_bits(g.n())))
}

/// The lexicographically least maximum independent set.
pub fn maximum_independent_set(g: &Graph) -> Result<VertexSet> {
    check_limit(
        g,
        "independence number",
        SearchLimits::default().max_independence_vertices,
    )?;
    let open = g.open_masks().expect("checked size");
    let mut need = max_independent(&open, low_bits(g.n()));
    let mut cand = low_bits(g.n());
    let mut chosen = 0u64;
    for v in 0..g.n() {
        if need == 0 {
            break;
        }
        if cand >> v & 1 == 0 {
            continue;
        }
        let later = cand & !low_bits(v + 1);
        let rest = later & !open[v];
        if 1 + max_independent(&open, rest) >= need {
            chosen |= 1 << v;
            need -= 1;
            cand = rest;
        } else {
            cand = later;
        }
    }
    Ok(VertexSet::from_mask(g.n(), chosen))
}

/// Size of a maximum independent set inside `cand`.
pub(crate) fn max_independent(open: &[u64], cand: u64) -> usize {
    if cand == 0 {
        return 0;
    }
    // Vertices of degree at most one in the candidate subgraph can be taken.
    let mut best_v = usize::MAX;
    let mut best_deg = 0;
    let mut bits = cand;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (open[v] & cand).count_ones();
        if d <= 1 {
            return 1 + max_independent(open, cand & !open[v] & !(1 << v));
        }
        if d > best_deg {
            best_deg = d;
            best_v = v;
        }
    }
    let v = best_v;
    let without = max_independent(open, cand & !(1 << v));
    let with_bound = (cand.count_ones() - best_deg) as usize;
    if without >= with_bound {
        return without;
    }
    without.max(1 + max_independent(open, cand & !open[v] & !(1 << v)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StemKind {
    NonStem,
    WeakStem,
    StrongStem,
}

/// Labels each vertex by how many degree-one neighbors it has: none, exactly
/// one, or at least two.
pub fn classify_stems(g: &Graph) -> Vec<StemKind> {
    g.vertices()
        .map(|v| match g.neighbors(v).iter().filter(|&&u| g.degree(u) == 1).count() {
            0 => StemKind::NonStem,
            1 => StemKind::WeakStem,
            _ => StemKind::StrongStem,
        })
        .collect()
}

/// `true` iff some vertex is adjacent to two or more leaves.
pub fn is_strong_graph(g: &Graph) -> bool {
    classify_stems(g).contains(&StemKind::StrongStem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::doubled_subdivided_triangle;

    fn brute_gamma(g: &Graph) -> usize {
        let closed = g.closed_masks().unwrap();
        (0u64..1 << g.n())
            .filter(|s| (0..g.n()).all(|v| closed[v] & s != 0))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        let open = g.open_masks().unwrap();
        (0u64..1 << g.n())
            .filter(|s| (0..g.n()).all(|v| s >> v & 1 == 0 || open[v] & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&Graph::cycle(4)).unwrap(), 2);
        assert_eq!(independence_number(&doubled_subdivided_triangle()).unwrap(), 6);
        assert_eq!(independence_number(&Graph::star(3)).unwrap(), 3);
        assert_eq!(independence_number(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn domination_examples() {
        assert_eq!(domination_number(&Graph::path(4)).unwrap(), 2);
        assert_eq!(domination_number(&Graph::star(3)).unwrap(), 1);
        assert_eq!(domination_number(&Graph::cycle(7)).unwrap(), 3);
        assert_eq!(brute_gamma(&Graph::cycle(7)), 3);
    }

    #[test]
    fn solvers_respect_caps() {
        assert!(matches!(
            domination_number(&Graph::path(31)),
            Err(Error::TooLarge { limit: 30, .. })
        ));
        assert!(independence_number(&Graph::path(41)).is_err());
        let relaxed = SearchLimits {
            max_domination_vertices: 40,
            max_independence_vertices: 64,
        };
        assert_eq!(domination_number_with(&Graph::path(31), &relaxed).unwrap(), 11);
        assert_eq!(independence_number_with(&Graph::path(64), &relaxed).unwrap(), 32);
    }

    #[test]
    fn lex_least_mis() {
        assert_eq!(
            maximum_independent_set(&Graph::cycle(6)).unwrap().to_vec(),
            vec![0, 2, 4]
        );
        assert_eq!(maximum_independent_set(&Graph::path(4)).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(
            maximum_independent_set(&Graph::star(3)).unwrap().to_vec(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn stems() {
        let s = classify_stems(&Graph::star(3));
        assert_eq!(s[0], StemKind::StrongStem);
        assert_eq!(classify_stems(&Graph::path(4))[1], StemKind::WeakStem);
        assert!(classify_stems(&Graph::cycle(4)).iter().all(|&k| k == StemKind::NonStem));
        assert!(is_strong_graph(&Graph::star(3)));
        assert!(!is_strong_graph(&Graph::path(5)));
        assert!(!is_strong_graph(&Graph::empty(1)));
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        // Deterministic pseudo-random graphs on up to 11 vertices.
        let mut state = 0x9e3779b97f4a7c15u64;
        for n in 1..=11 {
            for _ in 0..20 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state.is_multiple_of(3) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(n, edges).unwrap();
                assert_eq!(domination_number(&g).unwrap(), brute_gamma(&g));
                assert_eq!(independence_number(&g).unwrap(), brute_alpha(&g));
                let mis = maximum_independent_set(&g).unwrap();
                assert_eq!(mis.len(), brute_alpha(&g));
            }
        }
    }
}
