mod common;

use std::collections::{BTreeSet, VecDeque};
use std::fs;

use common::*;
use schensted::klcells::{
    a_element, c_prime_product_expansion, c_prime_product_formula, cells, express_in_a_basis, kl_action_q1,
    left_closure, left_multiply_simple, CellGraph, CellPartition, KlEngine,
};
use schensted::symgroup::{enumerate, Permutation, Side, SymmetricGroup};
use schensted::Error;

fn perms(n: usize) -> Vec<Permutation> {
    enumerate(n).unwrap().collect()
}

#[test]
fn kl_polynomials_match_dense_oracle_on_s5() {
    let engine = KlEngine::new(5).unwrap();
    for ((y, w), expected) in kl_oracle(5) {
        let got = engine.kl_polynomial(&to_perm(&y), &to_perm(&w)).unwrap();
        assert_eq!(got, expected, "P_{{{},{}}}", to_perm(&y), to_perm(&w));
    }
}

#[test]
fn bruhat_order_matches_subwords_and_rank_criterion() {
    for n in 1..=5 {
        let g = SymmetricGroup::new(n).unwrap();
        for w in raw_perms(n) {
            let below = bruhat_below(&w);
            let wi = g.index_of(&to_perm(&w)).unwrap();
            for y in raw_perms(n) {
                let yi = g.index_of(&to_perm(&y)).unwrap();
                let lib = g.bruhat_leq(yi, wi);
                assert_eq!(lib, below.contains(&y), "{:?} <= {:?}", y, w);
                assert_eq!(lib, bruhat_leq_rank(&y, &w), "{:?} <= {:?}", y, w);
                assert_eq!(lib, to_perm(&y).bruhat_leq(&to_perm(&w)).unwrap());
            }
        }
    }
}

#[test]
fn lengths_and_reduced_words() {
    for n in 1..=5 {
        for w in raw_perms(n) {
            let p = to_perm(&w);
            assert_eq!(p.length(), inversions(&w));
            assert_eq!(p.reduced_word().len(), bubble_reduced_word(&w).len());
            let mut x = Permutation::identity(n);
            for s in p.reduced_word() {
                x = x.mul_simple(s.index(), Side::Right);
            }
            assert_eq!(x, p);
        }
    }
}

#[test]
fn recursion_is_independent_of_the_chosen_descent() {
    for n in 2..=4 {
        let engine = KlEngine::new(n).unwrap();
        for w in perms(n).into_iter().filter(|w| !w.is_identity()) {
            for y in perms(n) {
                let expected = engine.kl_polynomial(&y, &w).unwrap();
                for i in w.left_descents().iter() {
                    assert_eq!(
                        engine.recursion_step(&y, &w, i).unwrap(),
                        expected,
                        "y={y} w={w} s_{i}"
                    );
                }
            }
            let ascent = (1..n).find(|&i| !w.has_left_descent(i));
            if let Some(i) = ascent {
                assert!(matches!(
                    engine.recursion_step(&w, &w, i),
                    Err(Error::ReflectionOutOfRange { .. })
                ));
            }
        }
    }
}

#[test]
fn left_and_right_recursions_agree() {
    for n in 1..=5 {
        let left = KlEngine::new(n).unwrap();
        let right = KlEngine::with_options(n, Side::Right, 8).unwrap();
        for y in perms(n) {
            for w in perms(n) {
                assert_eq!(
                    left.kl_polynomial(&y, &w).unwrap(),
                    right.kl_polynomial(&y, &w).unwrap()
                );
            }
        }
    }
}

#[test]
fn mu_is_the_top_coefficient() {
    let engine = KlEngine::new(5).unwrap();
    for y in perms(5) {
        for w in perms(5) {
            let (ly, lw) = (y.length(), w.length());
            let p = engine.kl_polynomial(&y, &w).unwrap();
            let expected = if ly < lw && (lw - ly) % 2 == 1 {
                p.coeff((lw - ly - 1) / 2)
            } else {
                0
            };
            assert_eq!(engine.mu(&y, &w).unwrap(), expected);
            assert_eq!(engine.mu_sym(&y, &w).unwrap(), engine.mu_sym(&w, &y).unwrap());
        }
    }
}

#[test]
fn c_prime_products_follow_the_multiplication_formula() {
    for n in 2..=4 {
        let engine = KlEngine::new(n).unwrap();
        for w in perms(n) {
            for i in 1..n {
                let expansion = c_prime_product_expansion(&engine, i, &w).unwrap();
                let formula = c_prime_product_formula(&engine, i, &w).unwrap();
                assert_eq!(expansion, formula, "C'_s{i} C'_{w}");
            }
        }
    }
}

#[test]
fn kl_action_matches_group_algebra() {
    for n in 2..=4 {
        let engine = KlEngine::new(n).unwrap();
        for w in perms(n) {
            for i in 1..n {
                let product = left_multiply_simple(i, &a_element(&engine, &w).unwrap());
                let expected = express_in_a_basis(&engine, &product).unwrap();
                assert_eq!(kl_action_q1(&engine, i, &w).unwrap(), expected, "s_{i} a({w})");
            }
        }
    }
}

/// `{y : y <=_L w}` as everything reachable from `a(w)` under repeated left
/// multiplication by simple reflections.
fn closure_by_action(engine: &KlEngine, w: &Permutation) -> BTreeSet<Permutation> {
    let n = w.n();
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for i in 1..n {
            for (y, c) in kl_action_q1(engine, i, &x).unwrap() {
                if c != 0 && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen
}

#[test]
fn left_closure_is_the_span_of_the_action() {
    for n in 1..=4 {
        let engine = KlEngine::new(n).unwrap();
        for w in perms(n) {
            assert_eq!(
                left_closure(&engine, &w).unwrap(),
                closure_by_action(&engine, &w),
                "w={w}"
            );
        }
    }
}

#[test]
fn right_cells_are_inverse_left_cells() {
    for n in 1..=5 {
        let left = cells(n, Side::Left).unwrap().as_sets();
        let right = cells(n, Side::Right).unwrap().as_sets();
        let inverted: BTreeSet<BTreeSet<Permutation>> = left
            .iter()
            .map(|c| c.iter().map(Permutation::inverse).collect())
            .collect();
        assert_eq!(right, inverted);
    }
}

#[test]
fn cell_order_extends_graph_reachability() {
    let engine = KlEngine::new(4).unwrap();
    let graph = CellGraph::build(&engine);
    let part = CellPartition::from_graph(&graph, Side::Left);
    for (wi, w) in graph.elements().iter().enumerate() {
        let below = graph.closure(wi);
        for y in graph.elements() {
            assert_eq!(part.leq(y, w), below.contains(y), "{y} <=_L {w}");
        }
    }
    // the identity is on top and w0 at the bottom
    let e = Permutation::identity(4);
    let w0 = Permutation::longest(4);
    assert!(graph
        .elements()
        .iter()
        .all(|y| part.leq(y, &e) && part.leq(&w0, y)));
}

#[test]
fn cache_round_trip_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let engine = KlEngine::new(5).unwrap();
    engine.warm();
    let a = dir.path().join("a.tsv");
    let b = dir.path().join("b.tsv");
    let stored = engine.save(&a).unwrap();
    assert!(stored > 0);
    let fresh = KlEngine::new(5).unwrap();
    assert_eq!(fresh.load(&a).unwrap(), stored);
    fresh.save(&b).unwrap();
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    for y in perms(5) {
        for w in perms(5) {
            assert_eq!(
                fresh.kl_polynomial(&y, &w).unwrap(),
                engine.kl_polynomial(&y, &w).unwrap()
            );
        }
    }
}

#[test]
fn corrupt_cache_is_rejected_without_side_effects() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tsv");
    for body in [
        "12345\t54321\n",
        "12345\t54321\t2,1\n",
        "54321\t12345\t1\n",
        "1234\t4321\t1,x\n",
    ] {
        fs::write(&path, body).unwrap();
        let engine = KlEngine::new(5).unwrap();
        let err = engine.load(&path).unwrap_err();
        assert!(matches!(err, Error::CacheFormat { .. }), "{body:?}: {err}");
        assert_eq!(engine.cached_len(), 0);
    }
}
