mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use schensted::symgroup::Permutation;
use schensted::tableaux::{
    evacuation, knuth_class, knuth_neighbors, p_symbol, permutation_tableau, q_symbol, reading_word, rectify,
    rs_inverse, rs_pair, rs_word, standard_tableaux, Shape, Tableau,
};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

proptest! {
    #[test]
    fn rs_round_trip(w in permutation(9)) {
        let (p, q) = rs_pair(&w);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert!(p.is_standard() && q.is_standard());
        prop_assert_eq!(rs_inverse(&p, &q).unwrap(), w.clone());
        prop_assert_eq!(q, p_symbol(&w.inverse()));
    }

    #[test]
    fn evacuation_is_an_involution_matching_reversal(w in permutation(9)) {
        let q = q_symbol(&w);
        let evac = evacuation(&q).unwrap();
        prop_assert_eq!(evacuation(&evac).unwrap(), q.clone());
        prop_assert_eq!(evac.shape(), q.shape());
        let reversed: Vec<usize> = w.word().iter().rev().map(|&v| v as usize).collect();
        prop_assert_eq!(evac.transpose(), q_symbol(&Permutation::new(reversed).unwrap()));
    }

    #[test]
    fn reversal_transposes_p(w in permutation(9)) {
        let reversed: Vec<usize> = w.word().iter().rev().map(|&v| v as usize).collect();
        prop_assert_eq!(p_symbol(&Permutation::new(reversed).unwrap()), p_symbol(&w).transpose());
    }

    #[test]
    fn knuth_moves_preserve_p(w in permutation(8)) {
        let p = p_symbol(&w);
        for x in knuth_neighbors(&w) {
            prop_assert_eq!(p_symbol(&x), p.clone());
        }
    }

    #[test]
    fn rectifying_the_permutation_tableau_gives_p(w in permutation(9)) {
        prop_assert_eq!(rectify(&permutation_tableau(&w)), p_symbol(&w));
    }

    #[test]
    fn reading_word_inserts_back(w in permutation(9)) {
        let p = p_symbol(&w);
        prop_assert_eq!(rs_word(&reading_word(&p)).0, p);
    }
}

#[test]
fn library_knuth_classes_match_the_definition() {
    for n in 1..=6 {
        let expected = knuth_classes(n);
        let mut found = BTreeSet::new();
        for w in raw_perms(n) {
            let class: BTreeSet<Vec<u8>> = knuth_class(&to_perm(&w))
                .into_iter()
                .map(|x| x.word().to_vec())
                .collect();
            found.insert(class);
        }
        assert_eq!(found, expected, "n={n}");
    }
}

#[test]
fn rs_is_a_bijection_onto_pairs_of_standard_tableaux() {
    for n in 1..=6 {
        let mut pairs = BTreeSet::new();
        for w in raw_perms(n) {
            pairs.insert(rs_pair(&to_perm(&w)));
        }
        let expected: usize = Shape::all(n)
            .iter()
            .map(|s| standard_tableaux(s).len().pow(2))
            .sum();
        assert_eq!(pairs.len(), expected);
        assert_eq!(pairs.len(), raw_perms(n).len());
    }
}

#[test]
fn slide_order_independence_on_six_cells() {
    for t in small_skew_tableaux(6, 8) {
        let all = all_rectifications(&t);
        assert_eq!(all.len(), 1, "{t:?}");
        let r: &Tableau = all.iter().next().unwrap();
        assert!(!r.is_skew());
    }
}
