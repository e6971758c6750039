use std::collections::BTreeMap;

use crate::graph::Graph;

/// All non-isomorphic trees on `n` vertices, ordered by canonical form.
///
/// Trees on `n` vertices are grown from those on `n - 1` by attaching a
/// leaf, keeping one representative per canonical form.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    level.insert(tree_canonical_form(&Graph::empty(1)), Graph::empty(1));
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in t.vertices() {
                let edges = t.edges().iter().copied().chain([(v, size - 1)]);
                let grown = Graph::from_edges(size, edges).expect("adding a leaf keeps a tree");
                next.entry(tree_canonical_form(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// Isomorphism-invariant encoding of a tree: the least parenthesis string
/// over rootings at its center vertices.
pub fn tree_canonical_form(t: &Graph) -> String {
    centers(t)
        .into_iter()
        .map(|c| encode(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn encode(t: &Graph, v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| encode(t, u, v))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return t.vertices().collect();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = t.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in t.neighbors(v) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}
