//! Swap sets of trees via simple star partitionings.

mod enumerate;
mod labeling;
mod partition;

pub use enumerate::{enumerate_trees, tree_canonical_form};
pub use labeling::swap_set_from_partition;
pub use partition::s_weight;

use serde::{Deserialize, Serialize};

pub use crate::graph::hat_graph;

use crate::error::{contract, Error, Result};
use crate::exact::DdmResult;
use crate::graph::Graph;

/// One part of a star partitioning. K₁ parts have no leaves; the center of
/// a K₂ part is its lower-index endpoint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StarPart {
    pub center: usize,
    pub leaves: Vec<usize>,
}

impl StarPart {
    pub fn len(&self) -> usize {
        1 + self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.center).chain(self.leaves.iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarPartition {
    pub parts: Vec<StarPart>,
    pub weight: usize,
}

impl StarPartition {
    /// Builds a partition from vertex blocks, choosing centers. Fails if a
    /// block does not induce a star.
    pub fn from_blocks(t: &Graph, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut parts = Vec::with_capacity(blocks.len());
        for block in blocks {
            let mut block = block.clone();
            block.sort_unstable();
            let center = match block.len() {
                0 => return Err(contract("empty part")),
                1 | 2 => block[0],
                _ => *block
                    .iter()
                    .find(|&&c| block.iter().all(|&u| u == c || t.has_edge(c, u)))
                    .ok_or_else(|| contract(format!("part {block:?} does not induce a star")))?,
            };
            let leaves: Vec<usize> = block.iter().copied().filter(|&u| u != center).collect();
            if leaves.iter().any(|&u| !t.has_edge(center, u)) {
                return Err(contract(format!("part {block:?} does not induce a star")));
            }
            parts.push(StarPart { center, leaves });
        }
        parts.sort();
        let weight = parts.iter().map(|p| p.leaves.len()).sum();
        Ok(Self { parts, weight })
    }

    /// Part index of every vertex; `None` if the parts do not partition
    /// `0..n`.
    pub fn part_of(&self, n: usize) -> Option<Vec<usize>> {
        let mut owner = vec![usize::MAX; n];
        for (i, part) in self.parts.iter().enumerate() {
            for v in part.vertices() {
                if v >= n || owner[v] != usize::MAX {
                    return None;
                }
                owner[v] = i;
            }
        }
        owner.iter().all(|&o| o != usize::MAX).then_some(owner)
    }

    /// Checks that this is a simple star partitioning of `t`.
    pub fn validate(&self, t: &Graph) -> std::result::Result<(), String> {
        let owner = self.part_of(t.n()).ok_or("parts do not partition the vertex set")?;
        for part in &self.parts {
            let vs: Vec<usize> = part.vertices().collect();
            let edges = vs
                .iter()
                .enumerate()
                .flat_map(|(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v)))
                .filter(|&(u, v)| t.has_edge(u, v))
                .count();
            if edges != part.leaves.len() || part.leaves.iter().any(|&u| !t.has_edge(part.center, u)) {
                return Err(format!("part centered at {} is not a star", part.center));
            }
            if part.leaves.len() == 1 && part.leaves[0] < part.center {
                return Err(format!("K2 part centered at {} is not canonical", part.center));
            }
        }
        if self.weight != self.parts.iter().map(|p| p.leaves.len()).sum::<usize>() {
            return Err("weight does not match parts".into());
        }
        let size = |v: usize| self.parts[owner[v]].len();
        for v in t.vertices() {
            let leaves: Vec<usize> = t.neighbors(v).iter().copied().filter(|&u| t.degree(u) == 1).collect();
            if leaves.len() == 1 && (size(v) != 2 || owner[v] != owner[leaves[0]]) {
                return Err(format!("weak stem {v} is not paired with its leaf"));
            }
            if size(v) == 1 && t.neighbors(v).iter().filter(|&&u| size(u) >= 2).count() < 2 {
                return Err(format!("singleton {v} sees fewer than two larger parts"));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("partition serializes")
    }
}

/// A tree with all but one leaf removed from each strong stem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakReduction {
    pub reduced: Graph,
    /// `(stem, leaf)` pairs, in original labels.
    pub removed: Vec<(usize, usize)>,
    /// Original label of each reduced vertex.
    pub embedding: Vec<usize>,
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

fn require_nontrivial_tree(t: &Graph) -> Result<()> {
    require_tree(t)?;
    if t.is_trivial() {
        Err(Error::TrivialGraph)
    } else {
        Ok(())
    }
}

fn leaf_neighbors(t: &Graph, v: usize) -> Vec<usize> {
    t.neighbors(v).iter().copied().filter(|&u| t.degree(u) == 1).collect()
}

pub fn is_weak_tree(t: &Graph) -> Result<bool> {
    require_tree(t)?;
    Ok(!crate::params::is_strong_graph(t))
}

pub fn weak_reduction(t: &Graph) -> Result<WeakReduction> {
    require_tree(t)?;
    let mut keep = vec![true; t.n()];
    let mut removed = Vec::new();
    for v in t.vertices() {
        let leaves = leaf_neighbors(t, v);
        if leaves.len() >= 2 {
            for &u in &leaves[1..] {
                keep[u] = false;
                removed.push((v, u));
            }
        }
    }
    let embedding: Vec<usize> = t.vertices().filter(|&v| keep[v]).collect();
    Ok(WeakReduction {
        reduced: t.induced(&embedding),
        removed,
        embedding,
    })
}

pub fn dd_m_tree(t: &Graph) -> Result<DdmResult> {
    require_nontrivial_tree(t)?;
    if !is_weak_tree(t)? {
        return Ok(DdmResult::infinite());
    }
    let (_, p) = s_weight(t)?;
    Ok(DdmResult::finite(swap_set_from_partition(t, &p)?))
}

/// Whether `t` is the hat of a tree on half its vertices, which is when
/// γ, the swap number and α coincide.
pub fn four_way_equality(t: &Graph) -> Result<bool> {
    require_tree(t)?;
    if t.n() == 2 {
        return Ok(true);
    }
    if t.n() % 2 == 1 {
        return Ok(false);
    }
    let leaves = t.vertices().filter(|&v| t.degree(v) == 1).count();
    let covered = t
        .vertices()
        .filter(|&v| t.degree(v) > 1)
        .all(|v| leaf_neighbors(t, v).len() == 1);
    Ok(covered && 2 * leaves == t.n())
}

/// α(T) equals the swap number exactly for weak trees with `2·S(T) = n`.
pub fn alpha_equals_ddm(t: &Graph) -> Result<bool> {
    require_nontrivial_tree(t)?;
    Ok(is_weak_tree(t)? && 2 * s_weight(t)?.0 == t.n())
}

/// α(T) equals the eviction number exactly when the weak reduction `T'`
/// has `2·S(T') = |V(T')|`.
pub fn alpha_equals_eviction(t: &Graph) -> Result<bool> {
    require_nontrivial_tree(t)?;
    let r = weak_reduction(t)?;
    Ok(2 * s_weight(&r.reduced)?.0 == r.reduced.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::families::{double_broom, spider};

    #[test]
    fn weak_trees() {
        assert!(is_weak_tree(&Graph::path(6)).unwrap());
        assert!(!is_weak_tree(&Graph::star(3)).unwrap());
        assert!(is_weak_tree(&spider(3, 2)).unwrap());
        assert_eq!(is_weak_tree(&Graph::cycle(3)), Err(Error::NotATree));
    }

    #[test]
    fn reductions() {
        let r = weak_reduction(&Graph::star(3)).unwrap();
        assert_eq!(r.reduced, Graph::path(2));
        assert_eq!(r.removed, vec![(0, 2), (0, 3)]);
        assert_eq!(r.embedding, vec![0, 1]);
        let r = weak_reduction(&Graph::path(5)).unwrap();
        assert!(r.removed.is_empty());
        let r = weak_reduction(&double_broom(3, 3)).unwrap();
        assert_eq!(r.removed.len(), 4);
        assert_eq!(r.reduced.n(), 5);
        assert!(r.reduced.is_tree());
        assert_eq!(r.reduced.max_degree(), 2);
    }

    #[test]
    fn tree_swap_numbers() {
        let r = dd_m_tree(&Graph::path(4)).unwrap();
        assert_eq!(r.k, Some(2));
        assert!(verify_certificate(&Graph::path(4), r.certificate.as_ref().unwrap()));
        assert!(!dd_m_tree(&Graph::star(3)).unwrap().is_finite());
        assert_eq!(dd_m_tree(&Graph::empty(1)), Err(Error::TrivialGraph));
    }

    #[test]
    fn characterizations() {
        assert!(four_way_equality(&Graph::path(4)).unwrap());
        assert!(!four_way_equality(&Graph::path(5)).unwrap());
        assert!(!four_way_equality(&Graph::path(6)).unwrap());
        assert!(four_way_equality(&hat_graph(&Graph::path(3))).unwrap());
        assert!(alpha_equals_ddm(&Graph::path(4)).unwrap());
        assert!(!alpha_equals_ddm(&Graph::path(5)).unwrap());
        assert!(!alpha_equals_ddm(&Graph::star(3)).unwrap());
        assert!(alpha_equals_eviction(&Graph::path(4)).unwrap());
        assert!(alpha_equals_eviction(&Graph::star(3)).unwrap());
        assert!(!alpha_equals_eviction(&Graph::path(5)).unwrap());
    }

    #[test]
    fn partition_json_shape() {
        let (_, p) = s_weight(&Graph::path(4)).unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"parts":[{"center":0,"leaves":[1]},{"center":2,"leaves":[3]}],"weight":2}"#
        );
    }
}
