//! Domination, perfect matchings between vertex sets, and swap certificates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{contract, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// `true` iff every vertex is in `s` or adjacent to a member of `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    undominated(g, s).is_none()
}

/// Smallest vertex not dominated by `s`, if any.
pub fn undominated(g: &Graph, s: &VertexSet) -> Option<usize> {
    g.vertices()
        .find(|&v| !s.contains(v) && !g.neighbors(v).iter().any(|&u| s.contains(u)))
}

/// Pairs `(d, d')`: the first endpoint lies on the `d` side.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        Self { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.pairs.iter().map(|&(a, b)| (b, a)).collect())
    }
}

/// A perfect matching between `a` and `b` using edges of `g`, or `None`.
///
/// Greedy seed followed by augmenting-path search, both in increasing vertex
/// order, so the result is reproducible.
pub fn matching_between(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Option<Matching>> {
    check_sides(g, a, b)?;
    let left: Vec<usize> = a.to_vec();
    let mut mate_of_right = vec![usize::MAX; g.n()];
    let mut mate_of_left = vec![usize::MAX; g.n()];
    for &u in &left {
        if let Some(&w) = g
            .neighbors(u)
            .iter()
            .find(|&&w| b.contains(w) && mate_of_right[w] == usize::MAX)
        {
            mate_of_right[w] = u;
            mate_of_left[u] = w;
        }
    }
    for &u in &left {
        if mate_of_left[u] != usize::MAX {
            continue;
        }
        let mut visited = vec![false; g.n()];
        if !augment(g, b, u, &mut visited, &mut mate_of_left, &mut mate_of_right) {
            return Ok(None);
        }
    }
    Ok(Some(Matching::new(
        left.iter().map(|&u| (u, mate_of_left[u])).collect(),
    )))
}

fn augment(
    g: &Graph,
    b: &VertexSet,
    u: usize,
    visited: &mut [bool],
    mate_of_left: &mut [usize],
    mate_of_right: &mut [usize],
) -> bool {
    for &w in g.neighbors(u) {
        if !b.contains(w) || visited[w] {
            continue;
        }
        visited[w] = true;
        if mate_of_right[w] == usize::MAX || augment(g, b, mate_of_right[w], visited, mate_of_left, mate_of_right) {
            mate_of_right[w] = u;
            mate_of_left[u] = w;
            return true;
        }
    }
    false
}

fn check_sides(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<()> {
    if a.iter().chain(b.iter()).any(|v| v >= g.n()) {
        return Err(contract("vertex set exceeds the host graph"));
    }
    if !a.is_disjoint(b) {
        return Err(contract("matching sides must be disjoint"));
    }
    if a.len() != b.len() {
        return Err(contract("matching sides must have equal size"));
    }
    Ok(())
}

/// The lexicographically least perfect matching between `a` and `b`: the
/// partners of `a`'s members, taken in increasing order, form the least
/// sequence. Sets must fit in 64-bit masks.
pub fn lex_least_matching(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Option<Matching>> {
    check_sides(g, a, b)?;
    let open = g
        .open_masks()
        .ok_or_else(|| contract("lex-least matching needs at most 64 vertices"))?;
    let left = a.to_vec();
    let right = b.to_mask().unwrap_or(0);
    if !has_perfect_matching_masks(&open, &left, right) {
        return Ok(None);
    }
    let mut pairs = Vec::with_capacity(left.len());
    let mut free = right;
    for (i, &u) in left.iter().enumerate() {
        let mut cands = open[u] & free;
        loop {
            debug_assert!(cands != 0);
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if has_perfect_matching_masks(&open, &left[i + 1..], free & !(1 << w)) {
                pairs.push((u, w));
                free &= !(1 << w);
                break;
            }
        }
    }
    Ok(Some(Matching::new(pairs)))
}

/// Whether every vertex of `left` can be matched into distinct members of
/// `right` (a mask) along `open` adjacency. Used with `|left| = |right|`.
pub(crate) fn has_perfect_matching_masks(open: &[u64], left: &[usize], right: u64) -> bool {
    if left.len() != right.count_ones() as usize {
        return false;
    }
    saturating_matching_masks(open, left, right)
}

/// Whether `left` can be matched into `right` (not necessarily perfectly).
pub(crate) fn saturating_matching_masks(open: &[u64], left: &[usize], right: u64) -> bool {
    let mut mate = [u8::MAX; 64];
    let mut left_mate = [u8::MAX; 64];
    for li in 0..left.len() {
        let mut visited = 0u64;
        if !augment_mask(open, left, right, li, &mut visited, &mut mate, &mut left_mate) {
            return false;
        }
    }
    true
}

fn augment_mask(
    open: &[u64],
    left: &[usize],
    right: u64,
    li: usize,
    visited: &mut u64,
    mate: &mut [u8; 64],
    left_mate: &mut [u8; 64],
) -> bool {
    let mut cands = open[left[li]] & right & !*visited;
    while cands != 0 {
        let w = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        if *visited >> w & 1 == 1 {
            continue;
        }
        *visited |= 1 << w;
        if mate[w] == u8::MAX || augment_mask(open, left, right, mate[w] as usize, visited, mate, left_mate) {
            mate[w] = li as u8;
            left_mate[li] = w as u8;
            return true;
        }
    }
    false
}

/// `(D, D', M)`: two disjoint dominating sets and a perfect matching
/// between them. Each matching pair lists its `D` endpoint first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SwapCertificate {
    pub d: VertexSet,
    pub d_prime: VertexSet,
    pub matching: Matching,
}

impl SwapCertificate {
    /// Builds a certificate from matched pairs `(d, d')`.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let pairs: Vec<_> = pairs.into_iter().collect();
        Self {
            d: VertexSet::from_vertices(n, pairs.iter().map(|p| p.0)),
            d_prime: VertexSet::from_vertices(n, pairs.iter().map(|p| p.1)),
            matching: Matching::new(pairs),
        }
    }

    pub fn size(&self) -> usize {
        self.d.len()
    }

    /// Exchanges the roles of `D` and `D'`.
    pub fn swapped(&self) -> Self {
        Self {
            d: self.d_prime.clone(),
            d_prime: self.d.clone(),
            matching: self.matching.reversed(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Why a certificate fails against a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Violation {
    VertexOutOfRange { vertex: usize },
    SizeMismatch { d: usize, d_prime: usize, pairs: usize },
    NotDisjoint { vertex: usize },
    NotAnEdge { u: usize, v: usize },
    WrongSide { u: usize, v: usize },
    MatchedTwice { vertex: usize },
    Unmatched { vertex: usize },
    DNotDominating { vertex: usize },
    DPrimeNotDominating { vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} is not in the graph"),
            Self::SizeMismatch { d, d_prime, pairs } => {
                write!(f, "size mismatch: |D| = {d}, |D'| = {d_prime}, {pairs} matching pairs")
            }
            Self::NotDisjoint { vertex } => write!(f, "vertex {vertex} is in both D and D'"),
            Self::NotAnEdge { u, v } => write!(f, "matching pair {u}-{v} is not an edge"),
            Self::WrongSide { u, v } => {
                write!(f, "matching pair {u}-{v} does not run from D to D'")
            }
            Self::MatchedTwice { vertex } => write!(f, "vertex {vertex} is matched twice"),
            Self::Unmatched { vertex } => write!(f, "vertex {vertex} is unmatched"),
            Self::DNotDominating { vertex } => write!(f, "D does not dominate vertex {vertex}"),
            Self::DPrimeNotDominating { vertex } => {
                write!(f, "D' does not dominate vertex {vertex}")
            }
        }
    }
}

/// Checks every certificate invariant against `g`.
pub fn check_certificate(g: &Graph, c: &SwapCertificate) -> std::result::Result<(), Violation> {
    let n = g.n();
    let all =
        c.d.iter()
            .chain(c.d_prime.iter())
            .chain(c.matching.pairs.iter().flat_map(|&(u, v)| [u, v]));
    for v in all {
        if v >= n {
            return Err(Violation::VertexOutOfRange { vertex: v });
        }
    }
    let (d, dp, pairs) = (c.d.len(), c.d_prime.len(), c.matching.len());
    if d != dp || d != pairs {
        return Err(Violation::SizeMismatch { d, d_prime: dp, pairs });
    }
    if let Some(v) = c.d.intersection(&c.d_prime).iter().next() {
        return Err(Violation::NotDisjoint { vertex: v });
    }
    let mut matched = vec![false; n];
    for &(u, v) in &c.matching.pairs {
        if !g.has_edge(u, v) {
            return Err(Violation::NotAnEdge { u, v });
        }
        if !c.d.contains(u) || !c.d_prime.contains(v) {
            return Err(Violation::WrongSide { u, v });
        }
        for x in [u, v] {
            if std::mem::replace(&mut matched[x], true) {
                return Err(Violation::MatchedTwice { vertex: x });
            }
        }
    }
    if let Some(v) = c.d.iter().chain(c.d_prime.iter()).find(|&v| !matched[v]) {
        return Err(Violation::Unmatched { vertex: v });
    }
    let d = VertexSet::from_vertices(n, c.d.iter());
    let dp = VertexSet::from_vertices(n, c.d_prime.iter());
    if let Some(v) = undominated(g, &d) {
        return Err(Violation::DNotDominating { vertex: v });
    }
    if let Some(v) = undominated(g, &dp) {
        return Err(Violation::DPrimeNotDominating { vertex: v });
    }
    Ok(())
}

pub fn verify_certificate(g: &Graph, c: &SwapCertificate) -> bool {
    check_certificate(g, c).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    #[test]
    fn domination_examples() {
        let p4 = Graph::path(4);
        assert!(is_dominating(&p4, &set(4, &[1, 2])));
        assert!(!is_dominating(&p4, &set(4, &[0])));
        assert!(is_dominating(&Graph::cycle(4), &set(4, &[0, 2])));
    }

    #[test]
    fn matching_examples() {
        let p4 = Graph::path(4);
        let m = matching_between(&p4, &set(4, &[1, 2]), &set(4, &[0, 3]))
            .unwrap()
            .unwrap();
        assert_eq!(m.pairs, vec![(1, 0), (2, 3)]);
        let k13 = Graph::star(3);
        let m = matching_between(&k13, &set(4, &[0]), &set(4, &[1])).unwrap().unwrap();
        assert_eq!(m.pairs, vec![(0, 1)]);
        let m = matching_between(&p4, &set(4, &[0, 2]), &set(4, &[1, 3]))
            .unwrap()
            .unwrap();
        assert_eq!(m.pairs, vec![(0, 1), (2, 3)]);
        assert!(matching_between(&p4, &set(4, &[0, 3]), &set(4, &[1, 2]))
            .unwrap()
            .is_some());
        assert!(matching_between(&Graph::cycle(4), &set(4, &[0]), &set(4, &[2]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn matching_contract_errors() {
        let p4 = Graph::path(4);
        assert!(matching_between(&p4, &set(4, &[1]), &set(4, &[1])).is_err());
        assert!(matching_between(&p4, &set(4, &[1]), &set(4, &[0, 2])).is_err());
    }

    #[test]
    fn augmenting_path_needed() {
        // Greedy picks 0-2 first, forcing a reroute for 1.
        let g = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2)]).unwrap();
        let m = matching_between(&g, &set(4, &[0, 1]), &set(4, &[2, 3]))
            .unwrap()
            .unwrap();
        assert_eq!(m.pairs, vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn lex_least_prefers_small_partners() {
        let g = Graph::complete(4);
        let m = lex_least_matching(&g, &set(4, &[0, 1]), &set(4, &[2, 3]))
            .unwrap()
            .unwrap();
        assert_eq!(m.pairs, vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn certificate_examples() {
        let p4 = Graph::path(4);
        let good = SwapCertificate::from_pairs(4, [(1, 0), (2, 3)]);
        assert_eq!(check_certificate(&p4, &good), Ok(()));
        assert!(verify_certificate(&p4, &good.swapped()));

        let overlap = SwapCertificate {
            d: set(4, &[1, 2]),
            d_prime: set(4, &[1, 3]),
            matching: Matching::new(vec![(1, 1), (2, 3)]),
        };
        assert_eq!(
            check_certificate(&p4, &overlap),
            Err(Violation::NotDisjoint { vertex: 1 })
        );

        let c4 = Graph::cycle(4);
        let no_edge = SwapCertificate {
            d: set(4, &[0]),
            d_prime: set(4, &[2]),
            matching: Matching::default(),
        };
        assert!(!verify_certificate(&c4, &no_edge));
        assert!(matches!(
            check_certificate(&c4, &no_edge),
            Err(Violation::SizeMismatch { .. })
        ));
        let not_edge = SwapCertificate::from_pairs(4, [(0, 2)]);
        assert_eq!(
            check_certificate(&c4, &not_edge),
            Err(Violation::NotAnEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn json_schema() {
        let c = SwapCertificate::from_pairs(4, [(1, 0), (2, 3)]);
        assert_eq!(c.to_json(), r#"{"d":[1,2],"d_prime":[0,3],"matching":[[1,0],[2,3]]}"#);
        assert_eq!(SwapCertificate::from_json(&c.to_json()).unwrap(), c);
    }
}
