//! Swap certificates on Cartesian products, built by tiling star-product
//! certificates over star partitions of spanning trees.

use serde::Serialize;

use crate::certificate::{check_certificate, SwapCertificate};
use crate::error::{contract, Error, Result};
use crate::graph::{cartesian_product, Graph};
use crate::tree::StarPartition;

/// Coordinates `(i, j)` refer to `(u_i, v_j)`, where `u_0` and `v_0` are
/// the star centers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarProductLayout {
    pub p: usize,
    pub q: usize,
    pub d_coords: Vec<(usize, usize)>,
    pub d_prime_coords: Vec<(usize, usize)>,
    pub matching_coords: Vec<((usize, usize), (usize, usize))>,
}

/// Certificate on `K_{1,p} □ K_{1,q}` of size `max(2, p + q - 1)`.
pub fn star_product_swap(p: usize, q: usize) -> Result<(Graph, SwapCertificate, StarProductLayout)> {
    if p < 1 || q < 1 {
        return Err(contract("star product needs p, q >= 1"));
    }
    let layout = star_layout(p, q);
    let prod = cartesian_product(&Graph::star(p), &Graph::star(q));
    let pairs = layout
        .matching_coords
        .iter()
        .map(|&((a, b), (c, d))| (prod.id(a, b), prod.id(c, d)));
    let cert = SwapCertificate::from_pairs(prod.graph.n(), pairs);
    Ok((prod.graph, cert, layout))
}

fn star_layout(p: usize, q: usize) -> StarProductLayout {
    if p < q {
        let t = star_layout(q, p);
        let flip = |(a, b): (usize, usize)| (b, a);
        return StarProductLayout {
            p,
            q,
            d_coords: t.d_coords.into_iter().map(flip).collect(),
            d_prime_coords: t.d_prime_coords.into_iter().map(flip).collect(),
            matching_coords: t.matching_coords.into_iter().map(|(x, y)| (flip(x), flip(y))).collect(),
        };
    }
    let matching: Vec<((usize, usize), (usize, usize))> = if p == 1 {
        vec![((0, 0), (1, 0)), ((1, 1), (0, 1))]
    } else {
        let mut m: Vec<_> = (1..=p - 2).map(|i| ((i, 0), (i, q))).collect();
        m.push(((p - 1, 0), (0, 0)));
        m.extend((1..=q).map(|i| ((p, i), (0, i))));
        m
    };
    StarProductLayout {
        p,
        q,
        d_coords: matching.iter().map(|&(x, _)| x).collect(),
        d_prime_coords: matching.iter().map(|&(_, y)| y).collect(),
        matching_coords: matching,
    }
}

/// Partition of a tree into induced stars with at least two vertices each.
///
/// Vertices are visited deepest first (rooted at 0); an unassigned vertex
/// makes its parent the center of a star with all of the parent's
/// unassigned children. A root left over joins a child's star as a leaf.
pub fn star_partition_order2(t: &Graph) -> Result<StarPartition> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.is_trivial() {
        return Err(Error::TrivialGraph);
    }
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &u in t.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                order.push(u);
            }
        }
    }
    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in order.iter().rev() {
        if v == 0 || block_of[v] != usize::MAX {
            continue;
        }
        let c = parent[v];
        let b = blocks.len();
        let mut block = vec![c];
        block_of[c] = b;
        for &u in t.neighbors(c) {
            if u != parent[c] && block_of[u] == usize::MAX {
                block_of[u] = b;
                block.push(u);
            }
        }
        blocks.push(block);
    }
    if block_of[0] == usize::MAX {
        let child = t.neighbors(0)[0];
        blocks[block_of[child]].push(0);
    }
    StarPartition::from_blocks(t, &blocks)
}

#[derive(Clone, Debug)]
pub struct TreeProductSwap {
    pub graph: Graph,
    pub certificate: SwapCertificate,
    /// `x_P · x_P' · (ℓ_P + ℓ_P' - 1)` for the two partitions used.
    pub formula_bound: usize,
}

/// Certificate on `t □ t'` from star partitions of both factors: each block
/// `S_i × S'_j` contains a star product and receives its certificate.
pub fn tree_product_swap(t: &Graph, t_prime: &Graph) -> Result<TreeProductSwap> {
    let p = star_partition_order2(t)?;
    let pp = star_partition_order2(t_prime)?;
    let prod = cartesian_product(t, t_prime);
    let mut pairs = Vec::new();
    for a in &p.parts {
        for b in &pp.parts {
            let layout = star_layout(a.leaves.len(), b.leaves.len());
            let pick = |part: &crate::tree::StarPart, k: usize| {
                if k == 0 {
                    part.center
                } else {
                    part.leaves[k - 1]
                }
            };
            for &((x, y), (z, w)) in &layout.matching_coords {
                pairs.push((prod.id(pick(a, x), pick(b, y)), prod.id(pick(a, z), pick(b, w))));
            }
        }
    }
    let widest = |s: &StarPartition| s.parts.iter().map(|x| x.leaves.len()).max().unwrap_or(0);
    let formula_bound = p.parts.len() * pp.parts.len() * (widest(&p) + widest(&pp) - 1);
    let certificate = SwapCertificate::from_pairs(prod.graph.n(), pairs);
    Ok(TreeProductSwap {
        graph: prod.graph,
        certificate,
        formula_bound,
    })
}

/// Certificate on `g □ h` via breadth-first spanning trees from vertex 0.
pub fn product_swap_general(g: &Graph, h: &Graph) -> Result<(Graph, SwapCertificate)> {
    for f in [g, h] {
        if f.is_trivial() {
            return Err(Error::TrivialGraph);
        }
        if !f.is_connected() {
            return Err(contract("product factors must be connected"));
        }
    }
    let built = tree_product_swap(&g.bfs_spanning_tree(0)?, &h.bfs_spanning_tree(0)?)?;
    let prod = cartesian_product(g, h).graph;
    check_certificate(&prod, &built.certificate)
        .map_err(|v| Error::Construction(format!("product certificate rejected: {v}")))?;
    Ok((prod, built.certificate))
}

/// One factor pair of the product scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductScanRow {
    pub g_id: String,
    pub h_id: String,
    pub ddm_product: String,
    pub gamma_g: usize,
    pub gamma_h: usize,
    /// `min(DD_m(G)·γ(H), γ(G)·DD_m(H))`, `"infinity"` when both factors
    /// lack swap sets.
    pub min_expr: String,
    /// `none`, `gamma` (below `γ(G)·γ(H)`), `min` (below `min_expr`) or
    /// `both`.
    pub violation_flag: String,
    pub constructed_size: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ProductScan {
    pub max_vertices: usize,
    /// Largest factor order enumerated.
    pub factor_cap: usize,
    pub rows: Vec<ProductScanRow>,
    pub construction_failures: Vec<String>,
}

impl ProductScan {
    pub fn violations(&self, flag: &str) -> usize {
        self.rows
            .iter()
            .filter(|r| r.violation_flag == flag || r.violation_flag == "both")
            .count()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("g_id\th_id\tddm_product\tgamma_g\tgamma_h\tmin_expr\tviolation_flag\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                r.g_id, r.h_id, r.ddm_product, r.gamma_g, r.gamma_h, r.min_expr, r.violation_flag
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scan serializes")
    }
}

struct Factor {
    graph: Graph,
    id: String,
    gamma: usize,
    ddm: Option<usize>,
}

/// Exact swap numbers of `G □ H` for every unordered pair of connected
/// factors with at least two vertices and `|G|·|H| ≤ max_vertices`, set
/// against `γ(G)·γ(H)` and `min(DD_m(G)·γ(H), γ(G)·DD_m(H))`. Factors are
/// enumerated up to eight vertices. Each pair also gets a
/// `product_swap_general` certificate, checked on the product.
pub fn product_question_scan(max_vertices: usize) -> Result<ProductScan> {
    use rayon::prelude::*;

    use crate::exact::{dd_m_exact, DEFAULT_NODE_BUDGET, MAX_EXACT_VERTICES};
    use crate::params::domination_number;
    use crate::small_alpha::{connected_graphs_between, MAX_ENUMERATION_VERTICES};

    if max_vertices > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge {
            what: "product scan",
            limit: MAX_EXACT_VERTICES,
            n: max_vertices,
        });
    }
    let factor_cap = (max_vertices / 2).min(MAX_ENUMERATION_VERTICES);
    let factors: Vec<Factor> = connected_graphs_between(2, factor_cap.max(1))?
        .into_iter()
        .map(|graph| {
            Ok(Factor {
                id: graph.to_graph6(),
                gamma: domination_number(&graph)?,
                ddm: dd_m_exact(&graph, DEFAULT_NODE_BUDGET)?.k,
                graph,
            })
        })
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..factors.len())
        .flat_map(|i| (i..factors.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| factors[i].graph.n() * factors[j].graph.n() <= max_vertices)
        .collect();
    let results: Vec<(ProductScanRow, Option<String>)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (g, h) = (&factors[i], &factors[j]);
            let prod = cartesian_product(&g.graph, &h.graph).graph;
            let exact = dd_m_exact(&prod, DEFAULT_NODE_BUDGET)?;
            let gg = g.gamma * h.gamma;
            let min_expr = [g.ddm.map(|k| k * h.gamma), h.ddm.map(|k| k * g.gamma)]
                .into_iter()
                .flatten()
                .min();
            let (below_gamma, below_min) = match exact.k {
                Some(k) => (k < gg, min_expr.is_some_and(|m| k < m)),
                None => (false, false),
            };
            let violation_flag = match (below_gamma, below_min) {
                (false, false) => "none",
                (true, false) => "gamma",
                (false, true) => "min",
                (true, true) => "both",
            };
            let (constructed_size, failure) = match product_swap_general(&g.graph, &h.graph) {
                Ok((_, c)) => (c.size(), None),
                Err(e) => (0, Some(format!("{} x {}: {e}", g.id, h.id))),
            };
            let row = ProductScanRow {
                g_id: g.id.clone(),
                h_id: h.id.clone(),
                ddm_product: exact.display_value(),
                gamma_g: g.gamma,
                gamma_h: h.gamma,
                min_expr: min_expr.map_or("infinity".into(), |m| m.to_string()),
                violation_flag: violation_flag.into(),
                constructed_size,
            };
            Ok((row, failure))
        })
        .collect::<Result<_>>()?;
    let mut scan = ProductScan {
        max_vertices,
        factor_cap,
        ..ProductScan::default()
    };
    for (row, failure) in results {
        scan.rows.push(row);
        scan.construction_failures.extend(failure);
    }
    Ok(scan)
}
