use crate::error::{contract, Error, Result};
use crate::graph::Graph;
use crate::tree::StarPartition;

const MAX_ORACLE_VERTICES: usize = 12;

/// Minimum-weight simple star partitioning by enumerating every set
/// partition of the vertices (restricted growth strings), pruning blocks
/// whose induced edges stop sharing a common endpoint.
pub fn star_partition_weight_oracle(t: &Graph) -> Result<(usize, StarPartition)> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.is_trivial() {
        return Err(Error::TrivialGraph);
    }
    if t.n() > MAX_ORACLE_VERTICES {
        return Err(Error::TooLarge {
            what: "partition oracle",
            limit: MAX_ORACLE_VERTICES,
            n: t.n(),
        });
    }
    let mut state = Enumeration {
        t,
        block_of: vec![0; t.n()],
        blocks: Vec::new(),
        best: None,
    };
    state.assign(0);
    let blocks = state
        .best
        .ok_or_else(|| contract("no simple star partitioning exists"))?;
    let p = StarPartition::from_blocks(t, &blocks)?;
    Ok((p.weight, p))
}

struct Enumeration<'a> {
    t: &'a Graph,
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    best: Option<Vec<Vec<usize>>>,
}

impl Enumeration<'_> {
    fn assign(&mut self, v: usize) {
        if v == self.t.n() {
            self.finish();
            return;
        }
        for b in 0..=self.blocks.len() {
            if b == self.blocks.len() {
                self.blocks.push(vec![v]);
            } else {
                self.blocks[b].push(v);
            }
            self.block_of[v] = b;
            if star_compatible(self.t, &self.blocks[b]) {
                self.assign(v + 1);
            }
            if self.blocks[b].len() == 1 {
                self.blocks.pop();
            } else {
                self.blocks[b].pop();
            }
        }
    }

    fn finish(&mut self) {
        let weight = self.t.n() - self.blocks.len();
        if let Some(best) = &self.best {
            if self.t.n() - best.len() <= weight {
                return;
            }
        }
        if self.blocks.iter().all(|b| induces_star(self.t, b)) && self.conditions_hold() {
            self.best = Some(self.blocks.clone());
        }
    }

    fn conditions_hold(&self) -> bool {
        let t = self.t;
        let size = |v: usize| self.blocks[self.block_of[v]].len();
        for v in t.vertices() {
            let leaves: Vec<usize> = t.neighbors(v).iter().copied().filter(|&u| t.degree(u) == 1).collect();
            if leaves.len() == 1 {
                let block = &self.blocks[self.block_of[v]];
                if block.len() != 2 || !block.contains(&leaves[0]) {
                    return false;
                }
            }
            if size(v) == 1 {
                let big = t.neighbors(v).iter().filter(|&&u| size(u) >= 2).count();
                if big < 2 {
                    return false;
                }
            }
        }
        true
    }
}

/// Edges induced by `block` all share one endpoint (necessary for any
/// superset to induce a star).
fn star_compatible(t: &Graph, block: &[usize]) -> bool {
    let edges = induced_edges(t, block);
    match edges.first() {
        None => true,
        Some(&(a, b)) => edges.iter().all(|&(x, y)| x == a || y == a) || edges.iter().all(|&(x, y)| x == b || y == b),
    }
}

fn induces_star(t: &Graph, block: &[usize]) -> bool {
    block.len() == 1
        || block.iter().any(|&c| block.iter().all(|&u| u == c || t.has_edge(c, u)))
            && induced_edges(t, block).len() == block.len() - 1
}

fn induced_edges(t: &Graph, block: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &u) in block.iter().enumerate() {
        for &v in &block[i + 1..] {
            if t.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_weights() {
        assert_eq!(star_partition_weight_oracle(&Graph::path(4)).unwrap().0, 2);
        assert_eq!(star_partition_weight_oracle(&Graph::path(2)).unwrap().0, 1);
        let (w, p) = star_partition_weight_oracle(&Graph::star(3)).unwrap();
        assert_eq!(w, 3);
        assert_eq!(p.parts.len(), 1);
        assert_eq!(p.parts[0].center, 0);
    }

    #[test]
    fn rejects_non_trees() {
        assert_eq!(star_partition_weight_oracle(&Graph::cycle(4)), Err(Error::NotATree));
        assert_eq!(star_partition_weight_oracle(&Graph::empty(1)), Err(Error::TrivialGraph));
    }
}
