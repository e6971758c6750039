//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            check_edge(n, u, v, &adj).map_err(Error::Contract)?;
            adj[u].push(v);
            adj[v].push(u);
            list.push((u.min(v), u.max(v)));
        }
        Ok(Self::assemble(n, adj, list))
    }

    fn assemble(n: usize, mut adj: Vec<Vec<usize>>, mut edges: Vec<(usize, usize)>) -> Self {
        for nb in &mut adj {
            nb.sort_unstable();
        }
        edges.sort_unstable();
        Self { n, adj, edges }
    }

    pub fn empty(n: usize) -> Self {
        Self::assemble(n, vec![Vec::new(); n], Vec::new())
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph edges are valid")
    }

    /// `K_{1,k}` with center 0 and leaves `1..=k`.
    pub fn star(k: usize) -> Self {
        Self::from_edges(k + 1, (1..=k).map(|i| (0, i))).expect("star edges are valid")
    }

    /// `P_cols □ P_rows`; vertex `(i, j)` (1-based column, row) has id
    /// `(i - 1) * rows + (j - 1)`.
    pub fn grid(cols: usize, rows: usize) -> Self {
        cartesian_product(&Self::path(cols), &Self::path(rows)).graph
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = VertexSet::from_vertices(self.n, self.adj[v].iter().copied());
        s.insert(v);
        s
    }

    /// Closed neighborhoods as bit masks, for graphs with at most 64 vertices.
    pub fn closed_masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| {
            (0..self.n)
                .map(|v| self.adj[v].iter().fold(1u64 << v, |m, &u| m | 1 << u))
                .collect()
        })
    }

    /// Open neighborhoods as bit masks, for graphs with at most 64 vertices.
    pub fn open_masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| {
            (0..self.n)
                .map(|v| self.adj[v].iter().fold(0u64, |m, &u| m | 1 << u))
                .collect()
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.n <= 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Breadth-first spanning tree rooted at `root`, neighbors visited in
    /// increasing order. Requires a connected graph.
    pub fn bfs_spanning_tree(&self, root: usize) -> Result<Graph> {
        if !self.is_connected() {
            return Err(Error::Contract("spanning tree of a disconnected graph".into()));
        }
        let mut seen = vec![false; self.n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut edges = Vec::with_capacity(self.n.saturating_sub(1));
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    edges.push((u, w));
                    queue.push_back(w);
                }
            }
        }
        Graph::from_edges(self.n, edges)
    }

    /// Subgraph induced by `keep` (in the given order); vertex `i` of the
    /// result is `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edges(keep.len(), edges).expect("induced subgraph of a simple graph")
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves simplicity")
    }

    /// Edge-list text: `n m` followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// graph6 encoding (n at most 62), used as a reproducible graph id.
    pub fn to_graph6(&self) -> String {
        assert!(self.n <= 62, "graph6 short form only");
        let mut bytes = vec![(self.n as u8) + 63];
        let mut acc = 0u8;
        let mut filled = 0;
        for v in 1..self.n {
            for u in 0..v {
                acc = acc << 1 | self.has_edge(u, v) as u8;
                filled += 1;
                if filled == 6 {
                    bytes.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(bytes).expect("graph6 is ASCII")
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        let bytes = text.trim().as_bytes();
        let bad = |m: &str| Error::Parse {
            line: 1,
            message: format!("graph6: {m}"),
        };
        let (&first, rest) = bytes.split_first().ok_or_else(|| bad("empty"))?;
        if !(63..=125).contains(&first) {
            return Err(bad("unsupported vertex count"));
        }
        let n = (first - 63) as usize;
        let mut bits = rest.iter().flat_map(|&b| {
            let x = b.wrapping_sub(63);
            (0..6).rev().map(move |i| x >> i & 1 == 1)
        });
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if bits.next().ok_or_else(|| bad("truncated"))? {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges)
    }
}

fn check_edge(n: usize, u: usize, v: usize, adj: &[Vec<usize>]) -> std::result::Result<(), String> {
    if u >= n || v >= n {
        return Err(format!("vertex out of range in edge {u} {v} (n = {n})"));
    }
    if u == v {
        return Err(format!("self-loop at vertex {u}"));
    }
    if adj[u].contains(&v) {
        return Err(format!("duplicate edge {u} {v}"));
    }
    Ok(())
}

/// Parses the edge-list format: a header line `n m`, then exactly `m` lines
/// `u v`. Blank trailing lines are ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header `n m`".into(),
    })?;
    let [n, m] = parse_pair(hline, header)?;
    let mut adj = vec![Vec::new(); n];
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines.next().ok_or(Error::Parse {
            line: hline + edges.len() + 1,
            message: format!("expected {m} edges, found {}", edges.len()),
        })?;
        let [u, v] = parse_pair(line, text)?;
        check_edge(n, u, v, &adj).map_err(|message| Error::Parse { line, message })?;
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u.min(v), u.max(v)));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: format!("more than the declared {m} edges"),
        });
    }
    Ok(Graph::assemble(n, adj, edges))
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, got `{text}`"),
        });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: `{f}`"),
        })?;
    }
    Ok(out)
}

/// A Cartesian product with its coordinate map.
#[derive(Clone, Debug)]
pub struct Product {
    pub graph: Graph,
    /// Vertex count of the second factor; `(a, b)` has id `a * stride + b`.
    pub stride: usize,
}

impl Product {
    pub fn id(&self, a: usize, b: usize) -> usize {
        a * self.stride + b
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.stride, v % self.stride)
    }
}

/// `g □ h`: `(a,b) ~ (c,d)` iff `a = c` and `bd ∈ E(h)`, or `ac ∈ E(g)` and
/// `b = d`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Product {
    let stride = h.n();
    let n = g.n() * stride;
    let mut edges = Vec::with_capacity(g.n() * h.edge_count() + h.n() * g.edge_count());
    for a in 0..g.n() {
        for &(b, d) in h.edges() {
            edges.push((a * stride + b, a * stride + d));
        }
    }
    for &(a, c) in g.edges() {
        for b in 0..stride {
            edges.push((a * stride + b, c * stride + b));
        }
    }
    Product {
        graph: Graph::from_edges(n, edges).expect("product of simple graphs is simple"),
        stride,
    }
}

/// `G` with a pendant vertex `n + i` attached to every vertex `i`.
pub fn hat_graph(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edges().iter().copied().chain((0..n).map(|i| (i, n + i)));
    Graph::from_edges(2 * n, edges).expect("hat graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_graph("4 3\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(g, Graph::path(4));
    }

    #[test]
    fn parses_trivial_graph() {
        let g = parse_graph("1 0\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let e = parse_graph("2 1\n0 0").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, ref message } if message.contains("self-loop")));
        let e = parse_graph("3 2\n0 1\n1 0").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, ref message } if message.contains("duplicate")));
        let e = parse_graph("3 1\n0 3").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, ref message } if message.contains("out of range")));
        let e = parse_graph("3 1\n0 x").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_graph("3 2\n0 1").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        let e = parse_graph("3 1\n0 1\n1 2").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::grid(3, 4);
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn product_p2_p2_is_c4() {
        let p = cartesian_product(&Graph::path(2), &Graph::path(2));
        assert_eq!(p.graph.n(), 4);
        assert_eq!(p.graph.edge_count(), 4);
        assert!((0..4).all(|v| p.graph.degree(v) == 2));
        assert!(p.graph.is_connected());
    }

    #[test]
    fn product_p2_p3_is_ladder() {
        let p = cartesian_product(&Graph::path(2), &Graph::path(3));
        assert_eq!(p.graph.n(), 6);
        assert_eq!(p.graph.edge_count(), 7);
    }

    #[test]
    fn trivial_factor_is_identity() {
        let g = Graph::cycle(5);
        assert_eq!(cartesian_product(&Graph::empty(1), &g).graph, g);
        assert_eq!(cartesian_product(&g, &Graph::empty(1)).graph, g);
    }

    #[test]
    fn hat_graphs() {
        assert_eq!(hat_graph(&Graph::empty(1)), Graph::path(2));
        let h = hat_graph(&Graph::path(2));
        assert_eq!(h.n(), 4);
        assert!(h.is_tree());
        assert_eq!((0..4).filter(|&v| h.degree(v) == 1).count(), 2);
    }

    #[test]
    fn graph6_roundtrip() {
        for g in [Graph::path(5), Graph::cycle(7), Graph::complete(4), Graph::grid(3, 3)] {
            assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
        }
        assert_eq!(Graph::complete(4).to_graph6(), "C~");
    }

    #[test]
    fn trees_and_spanning_trees() {
        assert!(Graph::path(5).is_tree());
        assert!(!Graph::cycle(5).is_tree());
        let t = Graph::grid(3, 3).bfs_spanning_tree(0).unwrap();
        assert!(t.is_tree());
        assert!(Graph::empty(2).bfs_spanning_tree(0).is_err());
    }
}
