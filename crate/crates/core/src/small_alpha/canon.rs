//! Canonical labelings by individualization and refinement, and
//! enumeration of connected graphs up to isomorphism.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order `canonical_form` accepts (the encoding is a `u128` over
/// vertex pairs).
pub const MAX_CANONICAL_VERTICES: usize = 16;

/// Largest order `enumerate_connected_graphs` accepts.
pub const MAX_ENUMERATION_VERTICES: usize = 8;

/// Canonical relabeling of `g` and its pair-bit encoding. Two graphs are
/// isomorphic iff their encodings are equal.
pub fn canonical_form(g: &Graph) -> Result<(u128, Graph)> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::TooLarge {
            what: "canonical form",
            limit: MAX_CANONICAL_VERTICES,
            n,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
        .collect();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    if n > 0 {
        cells.push((0..n).collect());
    }
    let mut best: Option<(u128, Vec<usize>)> = None;
    search(&adj, refine(&adj, cells), &mut best);
    let (code, order) = best.unwrap_or((0, Vec::new()));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    Ok((code, g.relabel(&position)))
}

fn search(adj: &[u32], cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let code = encode(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(adj, refine(adj, next), best);
    }
}

/// Splits cells by neighbor counts into every cell until stable. Each split
/// orders the pieces by signature, so the result depends only on structure.
fn refine(adj: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u32> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut changed = false;
        let mut out = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                out.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let sig = masks.iter().map(|m| (adj[v] & m).count_ones()).collect();
                groups.entry(sig).or_default().push(v);
            }
            changed |= groups.len() > 1;
            out.extend(groups.into_values());
        }
        cells = out;
        if !changed {
            return cells;
        }
    }
}

fn encode(adj: &[u32], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = code << 1 | (adj[order[i]] >> order[j] & 1) as u128;
        }
    }
    code
}

/// One graph per isomorphism class of connected graphs on `n` vertices, in
/// canonical labeling, ordered by encoding.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending each class on `n - 1` vertices by a vertex joined to a
/// non-empty subset reaches every class.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooLarge {
            what: "connected graph enumeration",
            limit: MAX_ENUMERATION_VERTICES,
            n,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeMap<u128, Graph> = BTreeMap::new();
    level.insert(0, Graph::empty(1));
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            let old = size - 1;
            for subset in 1u32..1 << old {
                let edges = g
                    .edges()
                    .iter()
                    .copied()
                    .chain((0..old).filter(|&v| subset >> v & 1 == 1).map(|v| (v, old)));
                let grown = Graph::from_edges(size, edges).expect("new edges are distinct");
                let (code, canon) = canonical_form(&grown)?;
                next.entry(code).or_insert(canon);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// Connected graphs on `lo..=hi` vertices.
pub fn connected_graphs_between(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(enumerate_connected_graphs(n)?);
    }
    Ok(out)
}
