//! Token placement on `P_m □ P_n` from the diagonal perfect dominating set
//! `S_3`. Black tokens shift one column right and white tokens one column
//! left; the shifted positions form `D'`.

use std::collections::BTreeSet;
use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::{gamma_grid_dp, grid_bound, grid_id, perfect_dom_member, MAX_DP_ROWS};
use crate::certificate::{check_certificate, SwapCertificate};
use crate::error::{contract, Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TokenBoard {
    pub m: usize,
    pub n: usize,
    pub black: BTreeSet<(usize, usize)>,
    pub white: BTreeSet<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Token {
    Black,
    White,
}

impl TokenBoard {
    fn new(m: usize, n: usize) -> Self {
        Self {
            m,
            n,
            black: BTreeSet::new(),
            white: BTreeSet::new(),
        }
    }

    fn get(&self, p: (usize, usize)) -> Option<Token> {
        if self.black.contains(&p) {
            Some(Token::Black)
        } else if self.white.contains(&p) {
            Some(Token::White)
        } else {
            None
        }
    }

    fn set(&mut self, p: (usize, usize), t: Option<Token>) {
        self.black.remove(&p);
        self.white.remove(&p);
        match t {
            Some(Token::Black) => self.black.insert(p),
            Some(Token::White) => self.white.insert(p),
            None => false,
        };
    }

    fn place_if_empty(&mut self, p: (usize, usize), t: Token) {
        if self.get(p).is_none() {
            self.set(p, Some(t));
        }
    }

    pub fn len(&self) -> usize {
        self.black.len() + self.white.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rows from `n` (top) down to 1; `B`, `W` or `.` per column.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for j in (1..=self.n).rev() {
            for i in 1..=self.m {
                out.push(match self.get((i, j)) {
                    Some(Token::Black) => 'B',
                    Some(Token::White) => 'W',
                    None => '.',
                });
            }
            out.push('\n');
        }
        out
    }

    /// Where each token moves: black one column right, white one left.
    fn moves(&self) -> impl Iterator<Item = ((usize, usize), Option<(usize, usize)>)> + '_ {
        let black = self
            .black
            .iter()
            .map(|&(i, j)| ((i, j), (i < self.m).then_some((i + 1, j))));
        let white = self.white.iter().map(|&(i, j)| ((i, j), (i > 1).then_some((i - 1, j))));
        black.chain(white)
    }

    /// Positions that break the construction: tokens that cannot move,
    /// collide after moving, and vertices left undominated before or after.
    fn defects(&self) -> BTreeSet<(usize, usize)> {
        let mut bad = BTreeSet::new();
        let mut after = BTreeSet::new();
        let mut landed: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
        for (from, to) in self.moves() {
            match to {
                Some(t) if self.get(t).is_none() => {
                    *landed.entry(t).or_default() += 1;
                    after.insert(t);
                }
                _ => {
                    bad.insert(from);
                }
            }
        }
        bad.extend(landed.iter().filter(|&(_, &c)| c > 1).map(|(&p, _)| p));
        let before: BTreeSet<(usize, usize)> = self.black.union(&self.white).copied().collect();
        for i in 1..=self.m {
            for j in 1..=self.n {
                for set in [&before, &after] {
                    if !self.closed(i, j).any(|p| set.contains(&p)) {
                        bad.insert((i, j));
                    }
                }
            }
        }
        bad
    }

    fn closed(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let (i, j) = (i as i64, j as i64);
        [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)]
            .into_iter()
            .map(move |(dx, dy)| (i + dx, j + dy))
            .filter(|&(x, y)| x >= 1 && y >= 1 && x <= self.m as i64 && y <= self.n as i64)
            .map(|(x, y)| (x as usize, y as usize))
    }

    fn certificate(&self) -> Option<SwapCertificate> {
        let pairs: Option<Vec<(usize, usize)>> = self
            .moves()
            .map(|(f, t)| t.map(|t| (grid_id(self.n, f.0, f.1), grid_id(self.n, t.0, t.1))))
            .collect();
        Some(SwapCertificate::from_pairs(self.m * self.n, pairs?))
    }
}

/// Tokens placed by the perfect-dominating-set rules, before any corner
/// adjustment.
fn base_board(m: usize, n: usize) -> TokenBoard {
    let s = |x: i64, y: i64| perfect_dom_member(x, y, 3).expect("t in range");
    let (mi, ni) = (m as i64, n as i64);
    let mut b = TokenBoard::new(m, n);
    for i in 1..=m {
        for j in 1..=n {
            if s(i as i64, j as i64) {
                b.set((i, j), Some(if i < m { Token::Black } else { Token::White }));
            }
        }
    }
    // Members just above and below the grid are projected onto rows n and 1;
    // in column m the projected token must move left, so it is white.
    for i in 1..=m {
        let color = if i < m { Token::Black } else { Token::White };
        if s(i as i64, ni + 1) {
            b.place_if_empty((i, n), color);
        }
        if s(i as i64, 0) {
            b.place_if_empty((i, 1), color);
        }
    }
    for j in 1..=n {
        let y = j as i64;
        if s(0, y) || s(-1, y) {
            b.place_if_empty((2, j), Token::White);
        }
        if s(mi + 1, y) {
            b.place_if_empty((m, j), Token::White);
        }
    }
    if s(0, ni + 1) {
        b.place_if_empty((2, n), Token::White);
    }
    if s(mi + 1, ni + 1) {
        b.place_if_empty((m, n), Token::White);
    }
    if s(mi + 1, 0) {
        // The bottom-right corner token goes to (m, 1), or to (m, 2) when the
        // black token at (m - 2, 1) would land on the same vertex.
        let target = if b.get((m - 2, 1)) == Some(Token::Black) {
            (m, 2)
        } else {
            (m, 1)
        };
        b.place_if_empty(target, Token::White);
    }
    b
}

/// Corner cells eligible for repair edits.
fn corner_cells(m: usize, n: usize, (ci, cj): (usize, usize)) -> Vec<(usize, usize)> {
    let cols: Vec<usize> = if ci == 1 {
        (1..=3).collect()
    } else {
        (m - 2..=m).collect()
    };
    let rows: Vec<usize> = if cj == 1 {
        (1..=3).collect()
    } else {
        (n - 2..=n).collect()
    };
    cols.iter().flat_map(|&i| rows.iter().map(move |&j| (i, j))).collect()
}

fn near(p: (usize, usize), c: (usize, usize)) -> bool {
    p.0.abs_diff(c.0) <= 4 && p.1.abs_diff(c.1) <= 4
}

/// Fixes defects near each corner with at most two single-cell edits inside
/// the corner's 3×3 block, preferring fewer edits and never adding tokens
/// beyond `budget`.
fn repair(board: &mut TokenBoard, budget: usize) -> Result<()> {
    let (m, n) = (board.m, board.n);
    for corner in [(1, 1), (1, n), (m, 1), (m, n)] {
        let local = |b: &TokenBoard| b.defects().into_iter().filter(|&p| near(p, corner)).count();
        if local(board) == 0 {
            continue;
        }
        let elsewhere = |b: &TokenBoard| b.defects().into_iter().filter(|&p| !near(p, corner)).count();
        let outside_before = elsewhere(board);
        let cells = corner_cells(m, n, corner);
        let options = [None, Some(Token::Black), Some(Token::White)];
        let edits: Vec<((usize, usize), Option<Token>)> = cells
            .iter()
            .flat_map(|&p| options.iter().map(move |&t| (p, t)))
            .filter(|&(p, t)| board.get(p) != t)
            .collect();
        let accept = |b: &TokenBoard| b.len() <= budget && local(b) == 0 && elsewhere(b) <= outside_before;
        let mut fixed = false;
        'search: for (a, &(p, t)) in edits.iter().enumerate() {
            let mut trial = board.clone();
            trial.set(p, t);
            if accept(&trial) {
                *board = trial;
                fixed = true;
                break;
            }
            for &(q, u) in &edits[a + 1..] {
                if q == p {
                    continue;
                }
                let mut trial2 = trial.clone();
                trial2.set(q, u);
                if accept(&trial2) {
                    *board = trial2;
                    fixed = true;
                    break 'search;
                }
            }
        }
        if !fixed {
            return Err(Error::Construction(format!(
                "no local repair at corner {corner:?} of the {m}x{n} grid"
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct GridSwap {
    pub graph: Graph,
    pub certificate: SwapCertificate,
    pub board: TokenBoard,
    /// Whether any corner needed a repair edit.
    pub repaired: bool,
}

/// Certificate on `P_m □ P_n` (m columns, n rows) of size at most
/// `⌊(n + 2)(m + 3) / 5⌋`, for `m ≥ n ≥ 8`.
pub fn grid_swap_construct(m: usize, n: usize) -> Result<GridSwap> {
    if n < 8 || m < n {
        return Err(contract(format!("grid construction needs m >= n >= 8, got {m}x{n}")));
    }
    let budget = grid_bound(m, n);
    let mut board = base_board(m, n);
    let repaired = !board.defects().is_empty();
    if repaired {
        repair(&mut board, budget)?;
    }
    let graph = Graph::grid(m, n);
    let certificate = board
        .certificate()
        .ok_or_else(|| Error::Construction("a token cannot move".into()))?;
    check_certificate(&graph, &certificate)
        .map_err(|v| Error::Construction(format!("{m}x{n} grid certificate rejected: {v}")))?;
    if certificate.size() > budget {
        return Err(Error::Construction(format!(
            "{m}x{n} grid certificate has size {} > {budget}",
            certificate.size()
        )));
    }
    Ok(GridSwap {
        graph,
        certificate,
        board,
        repaired,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityRow {
    pub m: usize,
    pub n: usize,
    pub size: usize,
    pub area_fifth: f64,
    pub bound: usize,
    /// Exact domination number when `n` is small enough for the column DP.
    pub gamma: Option<usize>,
    pub repaired: bool,
}

/// Construction size against `mn/5` and the bound for `8 ≤ n ≤ m ≤ max_mn`.
pub fn grid_density_report(max_mn: usize) -> Result<Vec<DensityRow>> {
    let shapes: Vec<(usize, usize)> = (8..=max_mn).flat_map(|m| (8..=m).map(move |n| (m, n))).collect();
    shapes
        .par_iter()
        .map(|&(m, n)| {
            let built = grid_swap_construct(m, n)?;
            let gamma = if n <= MAX_DP_ROWS {
                Some(gamma_grid_dp(n, m)?)
            } else {
                None
            };
            Ok(DensityRow {
                m,
                n,
                size: built.certificate.size(),
                area_fifth: (m * n) as f64 / 5.0,
                bound: grid_bound(m, n),
                gamma,
                repaired: built.repaired,
            })
        })
        .collect()
}

pub fn density_tsv(rows: &[DensityRow]) -> String {
    let mut out = String::from("m\tn\tsize\tmn_over_5\tbound\tgamma\trepaired\n");
    for r in rows {
        let gamma = r.gamma.map_or("-".into(), |g| g.to_string());
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{:.1}\t{}\t{}\t{}",
            r.m, r.n, r.size, r.area_fifth, r.bound, gamma, r.repaired
        );
    }
    out
}
