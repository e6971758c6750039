//! Named graphs used throughout the examples and tests.

use crate::graph::Graph;

/// K₃ with every edge doubled and each of the six copies subdivided: nine
/// vertices, minimum degree two, α = 6.
pub fn doubled_subdivided_triangle() -> Graph {
    let mut edges = Vec::new();
    let mut next = 3;
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        for _ in 0..2 {
            edges.push((a, next));
            edges.push((next, b));
            next += 1;
        }
    }
    Graph::from_edges(9, edges).expect("valid construction")
}

/// Spider: center 0 with `legs` paths of `length` edges each.
pub fn spider(legs: usize, length: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..legs {
        let mut prev = 0;
        for _ in 0..length {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, edges).expect("valid construction")
}

/// Path `0 - 1 - ... - (spine-1)` with `leaves` extra pendant vertices on each
/// end of the spine.
pub fn double_broom(spine: usize, leaves: usize) -> Graph {
    assert!(spine >= 2);
    let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for end in [0, spine - 1] {
        for _ in 0..leaves {
            edges.push((end, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges).expect("valid construction")
}

/// The net: a triangle with one pendant vertex on each corner.
pub fn net() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).expect("valid construction")
}

/// `K_n` minus one edge.
pub fn complete_minus_edge(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&e| e != (0, 1));
    Graph::from_edges(n, edges).expect("valid construction")
}
