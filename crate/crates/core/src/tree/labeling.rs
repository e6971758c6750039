use super::{require_nontrivial_tree, StarPartition};
use crate::certificate::SwapCertificate;
use crate::error::{contract, Error, Result};
use crate::graph::Graph;
use crate::params::is_strong_graph;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Label {
    D,
    DPrime,
}

impl Label {
    fn flip(self) -> Self {
        match self {
            Label::D => Label::DPrime,
            Label::DPrime => Label::D,
        }
    }
}

/// Swap set of size `weight(p)` from a K₁/K₂ simple star partitioning of a
/// weak tree.
///
/// Each K₂ part becomes one matched pair. Singletons are visited in
/// increasing order and must see both labels among their paired neighbors;
/// when every neighbor is already labeled alike, the labels in the branch
/// through the lowest such neighbor are swapped, which keeps every earlier
/// singleton satisfied.
pub fn swap_set_from_partition(t: &Graph, p: &StarPartition) -> Result<SwapCertificate> {
    require_nontrivial_tree(t)?;
    if is_strong_graph(t) {
        return Err(contract("swap sets exist only for weak trees"));
    }
    p.validate(t).map_err(Error::Contract)?;
    if p.parts.iter().any(|part| part.leaves.len() > 1) {
        return Err(contract("partition has a part larger than K2"));
    }
    let n = t.n();
    let mut partner = vec![usize::MAX; n];
    for part in &p.parts {
        if let [leaf] = part.leaves[..] {
            partner[part.center] = leaf;
            partner[leaf] = part.center;
        }
    }
    let paired = |v: usize| partner[v] != usize::MAX;
    let mut label: Vec<Option<Label>> = vec![None; n];

    for x in t.vertices().filter(|&v| !paired(v)) {
        let nbrs: Vec<usize> = t.neighbors(x).iter().copied().filter(|&u| paired(u)).collect();
        for want in [Label::D, Label::DPrime] {
            if nbrs.iter().any(|&u| label[u] == Some(want)) {
                continue;
            }
            if let Some(&u) = nbrs.iter().find(|&&u| label[u].is_none()) {
                label[u] = Some(want);
                label[partner[u]] = Some(want.flip());
            }
        }
        let seen_d = nbrs.iter().any(|&u| label[u] == Some(Label::D));
        let seen_dp = nbrs.iter().any(|&u| label[u] == Some(Label::DPrime));
        if !(seen_d && seen_dp) {
            flip_branch(t, x, nbrs[0], &mut label);
        }
    }

    for part in &p.parts {
        if let [leaf] = part.leaves[..] {
            if label[part.center].is_none() {
                label[part.center] = Some(Label::D);
                label[leaf] = Some(Label::DPrime);
            }
        }
    }

    let pairs = t.vertices().filter_map(|v| match label[v] {
        Some(Label::D) => Some((v, partner[v])),
        _ => None,
    });
    Ok(SwapCertificate::from_pairs(n, pairs))
}

/// Swaps every assigned label in the component of `t - x` containing `start`.
fn flip_branch(t: &Graph, x: usize, start: usize, label: &mut [Option<Label>]) {
    let mut seen = vec![false; t.n()];
    seen[x] = true;
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        label[v] = label[v].map(Label::flip);
        for &u in t.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;
    use crate::tree::s_weight;

    #[test]
    fn paths() {
        let (_, p) = s_weight(&Graph::path(2)).unwrap();
        let c = swap_set_from_partition(&Graph::path(2), &p).unwrap();
        assert_eq!(c.d.to_vec(), vec![0]);
        assert_eq!(c.d_prime.to_vec(), vec![1]);
        for n in [4, 6, 9] {
            let t = Graph::path(n);
            let (w, p) = s_weight(&t).unwrap();
            let c = swap_set_from_partition(&t, &p).unwrap();
            assert_eq!(c.size(), w);
            assert!(verify_certificate(&t, &c));
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let (_, p) = s_weight(&Graph::star(3)).unwrap();
        assert!(swap_set_from_partition(&Graph::star(3), &p).is_err());
        let bogus = StarPartition::from_blocks(&Graph::path(4), &[vec![0], vec![1, 2], vec![3]]).unwrap();
        assert!(swap_set_from_partition(&Graph::path(4), &bogus).is_err());
    }
}
