//! Swap certificates on grid graphs `P_m □ P_n`.
//!
//! Vertex `(i, j)` sits in column `i ∈ [1, m]` and row `j ∈ [1, n]` and has
//! id `(i - 1)·n + (j - 1)`, matching `Graph::grid(m, n)`.

mod dp;
mod strip;
mod tokens;

pub use dp::{gamma_grid_dp, MAX_DP_ROWS};
pub use strip::p3_strip_swap;
pub use tokens::{density_tsv, grid_density_report, grid_swap_construct, DensityRow, GridSwap, TokenBoard};

use crate::error::{contract, Result};

/// Whether `(x, y)` belongs to the diagonal perfect dominating set `S_t` of
/// the infinite grid, i.e. `2y ≡ x + 2t (mod 5)`. Every vertex of the
/// infinite grid has exactly one member in its closed neighborhood.
pub fn perfect_dom_member(x: i64, y: i64, t: i64) -> Result<bool> {
    if !(0..5).contains(&t) {
        return Err(contract(format!("t must be in 0..=4, got {t}")));
    }
    Ok((2 * y - x - 2 * t).rem_euclid(5) == 0)
}

/// Flat id of `(i, j)` on an `m × n` grid (1-based coordinates).
pub fn grid_id(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// Bound `⌊(n + 2)(m + 3) / 5⌋` on the swap number of `P_m □ P_n`.
pub fn grid_bound(m: usize, n: usize) -> usize {
    (n + 2) * (m + 3) / 5
}
