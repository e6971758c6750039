//! Exact swap numbers by exhaustive search.
//!
//! For `k = γ(G) ..= ⌊n/2⌋` the search walks dominating sets `D` of size `k`
//! in lexicographic order of their sorted member lists; for each it walks
//! candidate partners `D' ⊆ N(D) \ D` in the same order and tests for a
//! perfect matching. The first hit is the lexicographically least
//! certificate at the minimum size.

mod partition_oracle;

pub use partition_oracle::star_partition_weight_oracle;

use serde::{Serialize, Serializer};

use crate::certificate::{has_perfect_matching_masks, lex_least_matching, saturating_matching_masks, SwapCertificate};
use crate::error::{contract, Error, Result};
use crate::graph::Graph;
use crate::params::{dominate_within, is_strong_graph, minimum_dominating_set_with, SearchLimits};
use crate::vertex_set::{low_bits, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DdmStatus {
    Finite,
    Infinite,
    BudgetExceeded,
}

/// Outcome of a swap-number computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdmResult {
    pub status: DdmStatus,
    pub k: Option<usize>,
    pub certificate: Option<SwapCertificate>,
}

impl DdmResult {
    pub fn finite(certificate: SwapCertificate) -> Self {
        Self {
            status: DdmStatus::Finite,
            k: Some(certificate.size()),
            certificate: Some(certificate),
        }
    }

    pub fn infinite() -> Self {
        Self {
            status: DdmStatus::Infinite,
            k: None,
            certificate: None,
        }
    }

    pub fn budget_exceeded() -> Self {
        Self {
            status: DdmStatus::BudgetExceeded,
            k: None,
            certificate: None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.status == DdmStatus::Finite
    }

    /// `Some(k)` when finite; `None` for infinite or unknown.
    pub fn value(&self) -> Option<usize> {
        self.k
    }

    /// `"infinity"`, `"?"` or the number.
    pub fn display_value(&self) -> String {
        match self.status {
            DdmStatus::Finite => self.k.expect("finite result has k").to_string(),
            DdmStatus::Infinite => "infinity".into(),
            DdmStatus::BudgetExceeded => "?".into(),
        }
    }
}

impl Serialize for DdmResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("DdmResult", 3)?;
        s.serialize_field("status", &self.status)?;
        match self.status {
            DdmStatus::Finite => s.serialize_field("dd_m", &self.k)?,
            DdmStatus::Infinite => s.serialize_field("dd_m", "infinity")?,
            DdmStatus::BudgetExceeded => s.serialize_field("dd_m", &Option::<usize>::None)?,
        }
        s.serialize_field("certificate", &self.certificate)?;
        s.end()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ExactOptions {
    /// Maximum number of search nodes (partial `D` or `D'` candidates).
    pub node_budget: u64,
    /// Answer `Infinite` immediately for graphs with a strong stem.
    pub strong_shortcut: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
            strong_shortcut: true,
        }
    }
}

/// Largest graph the exact solver accepts.
pub const MAX_EXACT_VERTICES: usize = 64;

pub fn dd_m_exact(g: &Graph, node_budget: u64) -> Result<DdmResult> {
    dd_m_exact_with(
        g,
        &ExactOptions {
            node_budget,
            ..ExactOptions::default()
        },
    )
}

pub fn dd_m_exact_with(g: &Graph, opts: &ExactOptions) -> Result<DdmResult> {
    check_size(g)?;
    if opts.strong_shortcut && is_strong_graph(g) {
        return Ok(DdmResult::infinite());
    }
    let mut search = Search::new(g, opts.node_budget, low_bits(g.n()));
    let gamma = gamma_of(g)?;
    for k in gamma..=g.n() / 2 {
        match search.level(k) {
            Ok(Some((d, dp))) => return Ok(DdmResult::finite(search.certificate(d, dp)?)),
            Ok(None) => {}
            Err(Budget) => return Ok(DdmResult::budget_exceeded()),
        }
    }
    Ok(DdmResult::infinite())
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(contract("swap number of the empty graph"));
    }
    if g.n() > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge {
            what: "exact swap number",
            limit: MAX_EXACT_VERTICES,
            n: g.n(),
        });
    }
    Ok(())
}

fn gamma_of(g: &Graph) -> Result<usize> {
    let limits = SearchLimits {
        max_domination_vertices: MAX_EXACT_VERTICES,
        ..SearchLimits::default()
    };
    Ok(minimum_dominating_set_with(g, &limits)?.len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SwapSetAnswer {
    Yes(SwapCertificate),
    No,
    BudgetExceeded,
}

/// Whether `g` has a swap set; the certificate returned is a minimum one.
pub fn has_swap_set(g: &Graph, node_budget: u64) -> Result<SwapSetAnswer> {
    let r = dd_m_exact(g, node_budget)?;
    Ok(match r.status {
        DdmStatus::Finite => SwapSetAnswer::Yes(r.certificate.expect("finite has certificate")),
        DdmStatus::Infinite => SwapSetAnswer::No,
        DdmStatus::BudgetExceeded => SwapSetAnswer::BudgetExceeded,
    })
}

/// Lexicographically least certificate of size exactly `k` whose sets lie
/// inside `allowed`, if one exists.
pub fn certificate_of_size(
    g: &Graph,
    k: usize,
    allowed: &VertexSet,
    node_budget: u64,
) -> Result<Option<SwapCertificate>> {
    check_size(g)?;
    let allowed = allowed.to_mask().unwrap_or(0) & low_bits(g.n());
    let mut search = Search::new(g, node_budget, allowed);
    match search.level(k) {
        Ok(Some((d, dp))) => Ok(Some(search.certificate(d, dp)?)),
        Ok(None) => Ok(None),
        Err(Budget) => Err(Error::BudgetExceeded(node_budget)),
    }
}

/// Smallest certificate with both sets inside `allowed`, searching sizes
/// `1..=max_k`.
pub fn smallest_certificate_within(
    g: &Graph,
    allowed: &VertexSet,
    max_k: usize,
    node_budget: u64,
) -> Result<Option<SwapCertificate>> {
    for k in 1..=max_k.min(g.n() / 2) {
        if let Some(c) = certificate_of_size(g, k, allowed, node_budget)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

struct Budget;

struct Search {
    n: usize,
    all: u64,
    allowed: u64,
    closed: Vec<u64>,
    open: Vec<u64>,
    widest: u32,
    nodes: u64,
    budget: u64,
    k: usize,
}

impl Search {
    fn new(g: &Graph, budget: u64, allowed: u64) -> Self {
        let closed = g.closed_masks().expect("size checked");
        let widest = closed.iter().map(|m| m.count_ones()).max().unwrap_or(1);
        Self {
            n: g.n(),
            all: low_bits(g.n()),
            allowed,
            open: g.open_masks().expect("size checked"),
            closed,
            widest,
            nodes: 0,
            budget,
            k: 0,
        }
    }

    fn tick(&mut self) -> std::result::Result<(), Budget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Budget)
        } else {
            Ok(())
        }
    }

    fn level(&mut self, k: usize) -> std::result::Result<Option<(u64, u64)>, Budget> {
        if k == 0 || 2 * k > self.n {
            return Ok(None);
        }
        self.k = k;
        self.walk_d(0, 0, 0, k)
    }

    fn neighborhood(&self, set: u64) -> u64 {
        let mut out = 0;
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= self.open[v];
        }
        out
    }

    /// Dominating `D` candidates in lexicographic order.
    fn walk_d(
        &mut self,
        start: usize,
        d: u64,
        dominated: u64,
        remaining: usize,
    ) -> std::result::Result<Option<(u64, u64)>, Budget> {
        self.tick()?;
        if remaining == 0 {
            if dominated & self.all != self.all {
                return Ok(None);
            }
            return Ok(self.find_partner(d)?.map(|dp| (d, dp)));
        }
        let future = self.allowed & !low_bits(start);
        if (future.count_ones() as usize) < remaining
            || dominate_within(&self.closed, self.all, dominated, remaining, self.widest, future).is_none()
        {
            return Ok(None);
        }
        let mut cands = future;
        while cands != 0 {
            if (cands.count_ones() as usize) < remaining {
                break;
            }
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let d2 = d | 1 << v;
            // D must match into the vertices outside it.
            let left = bits_of(d2);
            if !saturating_matching_masks(&self.open, &left, self.allowed & !d2) {
                continue;
            }
            if let Some(hit) = self.walk_d(v + 1, d2, dominated | self.closed[v], remaining - 1)? {
                return Ok(Some(hit));
            }
        }
        Ok(None)
    }

    /// Lexicographically least `D'` for a fixed dominating `D`.
    fn find_partner(&mut self, d: u64) -> std::result::Result<Option<u64>, Budget> {
        let cands = self.neighborhood(d) & !d & self.allowed;
        if (cands.count_ones() as usize) < self.k
            || dominate_within(&self.closed, self.all, 0, self.k, self.widest, cands).is_none()
        {
            return Ok(None);
        }
        let d_list = bits_of(d);
        self.walk_partner(&d_list, d, cands, 0, 0, 0, self.k)
    }

    #[allow(clippy::too_many_arguments)]
    fn walk_partner(
        &mut self,
        d_list: &[usize],
        d: u64,
        cands: u64,
        start: usize,
        dp: u64,
        dominated: u64,
        remaining: usize,
    ) -> std::result::Result<Option<u64>, Budget> {
        self.tick()?;
        if remaining == 0 {
            let ok = dominated & self.all == self.all && has_perfect_matching_masks(&self.open, d_list, dp);
            return Ok(ok.then_some(dp));
        }
        let future = cands & !low_bits(start);
        if (future.count_ones() as usize) < remaining
            || dominate_within(&self.closed, self.all, dominated, remaining, self.widest, future).is_none()
        {
            return Ok(None);
        }
        let mut bits = future;
        while bits != 0 {
            if (bits.count_ones() as usize) < remaining {
                break;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let dp2 = dp | 1 << v;
            if !saturating_matching_masks(&self.open, &bits_of(dp2), d) {
                continue;
            }
            if let Some(hit) =
                self.walk_partner(d_list, d, cands, v + 1, dp2, dominated | self.closed[v], remaining - 1)?
            {
                return Ok(Some(hit));
            }
        }
        Ok(None)
    }

    fn certificate(&self, d: u64, dp: u64) -> Result<SwapCertificate> {
        let n = self.n;
        let d = VertexSet::from_mask(n, d);
        let dp = VertexSet::from_mask(n, dp);
        let g = graph_from_open(&self.open);
        let matching = lex_least_matching(&g, &d, &dp)?.expect("search verified a matching");
        Ok(SwapCertificate {
            d,
            d_prime: dp,
            matching,
        })
    }
}

fn graph_from_open(open: &[u64]) -> Graph {
    let edges = open
        .iter()
        .enumerate()
        .flat_map(|(u, &m)| bits_of(m & !low_bits(u + 1)).into_iter().map(move |v| (u, v)));
    Graph::from_edges(open.len(), edges).expect("adjacency masks describe a simple graph")
}

pub(crate) fn bits_of(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}
