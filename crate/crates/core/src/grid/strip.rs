//! Swap certificates of size `3k + 2` on `P_3 □ P_{4k+1}`.
//!
//! The pattern is a left cap, `k - 3` copies of a four-column tile holding
//! three matched pairs, and a right cap. It was cut from an exhaustive
//! minimum certificate on the 3 × 17 strip; repeating the tile only creates
//! local configurations already present there.
//!
//! Each string is one row, bottom row first. `>`, `<`, `^` and `v` mark a
//! vertex of `D` and point at its partner in `D'`, which is marked `o`.

use crate::certificate::{check_certificate, SwapCertificate};
use crate::error::{contract, Error, Result};
use crate::graph::{cartesian_product, Graph};

const LEFT: [&str; 3] = ["^", "o", "."];
const TILE: [&str; 3] = [">o..", "..>o", ">o.."];
const RIGHT: [&str; 3] = [">o.o<.o..>o.", "..>o..v>o..^", ">o..>o..o<.o"];

/// Certificate on `P_3 □ P_{4k+1}`; vertex `(row, col)` has id
/// `row·(4k + 1) + col`.
pub fn p3_strip_swap(k: usize) -> Result<(Graph, SwapCertificate)> {
    if k < 3 {
        return Err(contract(format!("strip construction needs k >= 3, got {k}")));
    }
    let len = 4 * k + 1;
    let rows: Vec<Vec<u8>> = (0..3)
        .map(|r| {
            let mut row = LEFT[r].as_bytes().to_vec();
            for _ in 0..k - 3 {
                row.extend_from_slice(TILE[r].as_bytes());
            }
            row.extend_from_slice(RIGHT[r].as_bytes());
            row
        })
        .collect();
    debug_assert!(rows.iter().all(|r| r.len() == len));
    let id = |r: usize, c: usize| r * len + c;
    let mut pairs = Vec::with_capacity(3 * k + 2);
    for (r, row) in rows.iter().enumerate() {
        for (c, &ch) in row.iter().enumerate() {
            let partner = match ch {
                b'>' => (r, c + 1),
                b'<' => (r, c - 1),
                b'^' => (r + 1, c),
                b'v' => (r - 1, c),
                _ => continue,
            };
            pairs.push((id(r, c), id(partner.0, partner.1)));
        }
    }
    let graph = cartesian_product(&Graph::path(3), &Graph::path(len)).graph;
    let cert = SwapCertificate::from_pairs(graph.n(), pairs);
    check_certificate(&graph, &cert).map_err(|v| Error::Construction(format!("strip certificate rejected: {v}")))?;
    Ok((graph, cert))
}
