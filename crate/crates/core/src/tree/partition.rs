//! Minimum-weight simple star partitioning by dynamic programming.
//!
//! On a tree without strong stems an optimal partitioning uses only K₁ and
//! K₂ parts, so each vertex is in one of five states: paired with its
//! parent, paired with one child, or a singleton that has 0, 1 or ≥2
//! children in K₂ parts. Strong stems are handled by solving the weak
//! reduction and growing each stem's K₂ part into a star.

use super::{require_nontrivial_tree, weak_reduction, StarPartition};
use crate::error::Result;
use crate::graph::Graph;

const INF: u32 = u32::MAX / 4;

const WITH_PARENT: usize = 0;
const WITH_CHILD: usize = 1;
/// `SINGLE + c`: singleton with `c` (clamped to 2) paired children.
const SINGLE: usize = 2;

/// `S(T)` together with a partitioning achieving it.
pub fn s_weight(t: &Graph) -> Result<(usize, StarPartition)> {
    require_nontrivial_tree(t)?;
    let r = weak_reduction(t)?;
    let mut blocks: Vec<Vec<usize>> = solve_weak(&r.reduced)
        .into_iter()
        .map(|b| b.into_iter().map(|v| r.embedding[v]).collect())
        .collect();
    for &(stem, leaf) in &r.removed {
        let block = blocks
            .iter_mut()
            .find(|b| b.contains(&stem))
            .expect("every vertex lies in a block");
        block.push(leaf);
    }
    let p = StarPartition::from_blocks(t, &blocks)?;
    Ok((p.weight, p))
}

struct Rooted {
    order: Vec<usize>,
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
}

fn root_at(t: &Graph, root: usize) -> Rooted {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut children = vec![Vec::new(); n];
    let mut order = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &u in t.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                children[v].push(u);
                order.push(u);
            }
        }
    }
    Rooted {
        order,
        parent,
        children,
    }
}

fn add(a: u32, b: u32) -> u32 {
    (a + b).min(INF)
}

/// Cheapest state for a child outside a non-singleton parent's part.
fn outside(cost: &[u32; 5]) -> (u32, usize) {
    [WITH_CHILD, SINGLE + 2, SINGLE + 1]
        .into_iter()
        .map(|s| (cost[s], s))
        .min_by_key(|&(c, _)| c)
        .expect("non-empty")
}

/// Blocks of an optimal K₁/K₂ partitioning of a tree without strong stems.
fn solve_weak(t: &Graph) -> Vec<Vec<usize>> {
    if t.n() == 2 {
        return vec![vec![0, 1]];
    }
    let root = t.vertices().find(|&v| t.degree(v) > 1).expect("n ≥ 3");
    let rt = root_at(t, root);
    let mut cost = vec![[INF; 5]; t.n()];
    for &v in rt.order.iter().rev() {
        let kids = &rt.children[v];
        let mut c = [INF; 5];
        let base: u32 = kids.iter().fold(0, |acc, &ch| add(acc, outside(&cost[ch]).0));
        c[WITH_PARENT] = add(1, base);
        for (i, &ch) in kids.iter().enumerate() {
            let rest = kids
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(0, |acc, (_, &o)| add(acc, outside(&cost[o]).0));
            c[WITH_CHILD] = c[WITH_CHILD].min(add(rest, cost[ch][WITH_PARENT]));
        }
        let counts = singleton_table(kids, &cost);
        c[SINGLE..].copy_from_slice(&counts[kids.len()]);
        cost[v] = c;
    }

    let mut state = vec![usize::MAX; t.n()];
    state[root] = if cost[root][WITH_CHILD] <= cost[root][SINGLE + 2] {
        WITH_CHILD
    } else {
        SINGLE + 2
    };
    for &v in &rt.order {
        let kids = &rt.children[v];
        match state[v] {
            WITH_PARENT => {
                for &ch in kids {
                    state[ch] = outside(&cost[ch]).1;
                }
            }
            WITH_CHILD => {
                let target = cost[v][WITH_CHILD];
                let mut chosen = None;
                for (i, &ch) in kids.iter().enumerate() {
                    let rest = kids
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .fold(0, |acc, (_, &o)| add(acc, outside(&cost[o]).0));
                    if add(rest, cost[ch][WITH_PARENT]) == target {
                        chosen = Some(ch);
                        break;
                    }
                }
                let chosen = chosen.expect("optimal child exists");
                for &ch in kids {
                    state[ch] = if ch == chosen {
                        WITH_PARENT
                    } else {
                        outside(&cost[ch]).1
                    };
                }
            }
            s => {
                let table = singleton_table(kids, &cost);
                let mut want = s - SINGLE;
                for (i, &ch) in kids.iter().enumerate().rev() {
                    let before = &table[i];
                    let paired = cost[ch][WITH_CHILD];
                    let single = cost[ch][SINGLE + 2];
                    let take_single = before[want] != INF && add(before[want], single) == table[i + 1][want];
                    if take_single {
                        state[ch] = SINGLE + 2;
                        continue;
                    }
                    let prev = (0..3)
                        .find(|&c| (c + 1).min(2) == want && add(before[c], paired) == table[i + 1][want])
                        .expect("table is consistent");
                    state[ch] = WITH_CHILD;
                    want = prev;
                }
            }
        }
    }

    let mut blocks = Vec::new();
    for v in t.vertices() {
        match state[v] {
            WITH_PARENT => blocks.push(vec![rt.parent[v], v]),
            WITH_CHILD => {}
            _ => blocks.push(vec![v]),
        }
    }
    blocks
}

/// `table[i][c]`: cheapest cost of the first `i` children of a singleton
/// with `c` (clamped) of them paired.
fn singleton_table(kids: &[usize], cost: &[[u32; 5]]) -> Vec<[u32; 3]> {
    let mut table = vec![[0, INF, INF]];
    for &ch in kids {
        let f = table.last().expect("non-empty");
        let mut g = [INF; 3];
        for c in 0..3 {
            g[c] = g[c].min(add(f[c], cost[ch][SINGLE + 2]));
            let up = (c + 1).min(2);
            g[up] = g[up].min(add(f[c], cost[ch][WITH_CHILD]));
        }
        table.push(g);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_weights() {
        assert_eq!(s_weight(&Graph::path(4)).unwrap().0, 2);
        assert_eq!(s_weight(&Graph::path(2)).unwrap().0, 1);
        let (w, p) = s_weight(&Graph::star(3)).unwrap();
        assert_eq!(w, 3);
        assert_eq!(p.parts.len(), 1);
        assert_eq!(s_weight(&Graph::path(5)).unwrap().0, 2);
    }

    #[test]
    fn partitions_are_valid() {
        for n in 2..12 {
            let (w, p) = s_weight(&Graph::path(n)).unwrap();
            p.validate(&Graph::path(n)).unwrap();
            assert_eq!(w, p.weight);
        }
    }
}
