use swapset_core::exact::{dd_m_exact, has_swap_set, star_partition_weight_oracle, SwapSetAnswer};
use swapset_core::tree::{
    dd_m_tree, enumerate_trees, four_way_equality, is_weak_tree, s_weight, swap_set_from_partition, weak_reduction,
};
use swapset_core::{domination_number, independence_number, verify_certificate, Graph};

fn all_trees() -> Vec<Graph> {
    (2..=10).flat_map(enumerate_trees).collect()
}

#[test]
fn dp_matches_partition_oracle() {
    for t in all_trees() {
        let (w, p) = s_weight(&t).unwrap();
        p.validate(&t).unwrap();
        let (oracle, _) = star_partition_weight_oracle(&t).unwrap();
        assert_eq!(w, oracle, "tree {:?}", t.edges());
    }
}

#[test]
fn weak_trees_get_verified_swap_sets() {
    for t in all_trees().into_iter().filter(|t| is_weak_tree(t).unwrap()) {
        let (w, p) = s_weight(&t).unwrap();
        let c = swap_set_from_partition(&t, &p).unwrap();
        assert_eq!(c.size(), w);
        assert!(verify_certificate(&t, &c), "tree {:?}", t.edges());
        assert!(w <= independence_number(&t).unwrap());
    }
}

#[test]
fn tree_formula_matches_exact_search() {
    for t in all_trees() {
        let exact = dd_m_exact(&t, u64::MAX).unwrap();
        assert_eq!(dd_m_tree(&t).unwrap().k, exact.k, "tree {:?}", t.edges());
        let has = matches!(has_swap_set(&t, u64::MAX).unwrap(), SwapSetAnswer::Yes(_));
        assert_eq!(has, is_weak_tree(&t).unwrap());
    }
}

#[test]
fn reduction_adds_removed_leaves() {
    for t in all_trees() {
        let r = weak_reduction(&t).unwrap();
        assert_eq!(
            s_weight(&t).unwrap().0,
            s_weight(&r.reduced).unwrap().0 + r.removed.len()
        );
    }
}

#[test]
fn alpha_equality_tracks_reduced_weight() {
    for t in all_trees() {
        let r = weak_reduction(&t).unwrap();
        let reduced_balanced = 2 * s_weight(&r.reduced).unwrap().0 == r.reduced.n();
        let alpha_is_s = independence_number(&t).unwrap() == s_weight(&t).unwrap().0;
        assert_eq!(reduced_balanced, alpha_is_s, "tree {:?}", t.edges());
    }
}

#[test]
fn hats_are_exactly_the_gamma_alpha_trees() {
    for t in all_trees() {
        let equal = domination_number(&t).unwrap() == independence_number(&t).unwrap();
        assert_eq!(four_way_equality(&t).unwrap(), equal, "tree {:?}", t.edges());
    }
}
