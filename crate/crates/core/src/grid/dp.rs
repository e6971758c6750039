use crate::error::{Error, Result};

pub const MAX_DP_ROWS: usize = 8;

const IN_SET: u8 = 0;
const DOMINATED: u8 = 1;
const OPEN: u8 = 2;

/// Domination number of the `rows × cols` grid by a cell-by-cell column
/// sweep. The frontier records, per row, whether the most recent cell is
/// in the set, dominated, or still waiting for its right neighbor.
pub fn gamma_grid_dp(rows: usize, cols: usize) -> Result<usize> {
    if rows > MAX_DP_ROWS {
        return Err(Error::TooLarge {
            what: "grid domination DP rows",
            limit: MAX_DP_ROWS,
            n: rows,
        });
    }
    if rows == 0 || cols == 0 {
        return Ok(0);
    }
    let states = 3usize.pow(rows as u32);
    let pow: Vec<usize> = (0..rows).map(|r| 3usize.pow(r as u32)).collect();
    let digit = |s: usize, r: usize| (s / pow[r] % 3) as u8;
    let with = |s: usize, r: usize, d: u8| s - digit(s, r) as usize * pow[r] + d as usize * pow[r];

    const INF: u32 = u32::MAX;
    let mut cur = vec![INF; states];
    // A virtual column of dominated, unchosen cells precedes the grid.
    cur[(0..rows).fold(0, |s, r| with(s, r, DOMINATED))] = 0;
    for _ in 0..cols {
        for r in 0..rows {
            let mut next = vec![INF; states];
            for (s, &cost) in cur.iter().enumerate() {
                if cost == INF {
                    continue;
                }
                let left = digit(s, r);
                let below = (r > 0).then(|| digit(s, r - 1));
                // Take the cell.
                let mut t = with(s, r, IN_SET);
                if below == Some(OPEN) {
                    t = with(t, r - 1, DOMINATED);
                }
                next[t] = next[t].min(cost + 1);
                // Skip it: the left cell must already be dominated.
                if left != OPEN {
                    let covered = left == IN_SET || below == Some(IN_SET);
                    let t = with(s, r, if covered { DOMINATED } else { OPEN });
                    next[t] = next[t].min(cost);
                }
            }
            cur = next;
        }
    }
    let best = cur
        .iter()
        .enumerate()
        .filter(|&(s, _)| (0..rows).all(|r| digit(s, r) != OPEN))
        .map(|(_, &c)| c)
        .min()
        .expect("taking every cell is feasible");
    Ok(best as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::params::domination_number;

    #[test]
    fn reference_values() {
        assert_eq!(gamma_grid_dp(3, 4).unwrap(), 4);
        assert_eq!(gamma_grid_dp(1, 4).unwrap(), 2);
        assert_eq!(gamma_grid_dp(3, 13).unwrap(), 10);
        assert!(gamma_grid_dp(9, 3).is_err());
    }

    #[test]
    fn agrees_with_search_on_small_grids() {
        for rows in 1..=6 {
            for cols in 1..=18 / rows {
                let g = Graph::grid(cols, rows);
                assert_eq!(
                    gamma_grid_dp(rows, cols).unwrap(),
                    domination_number(&g).unwrap(),
                    "{rows}x{cols}"
                );
            }
        }
    }
}
