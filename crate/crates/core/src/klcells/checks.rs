//! Exhaustive checks of the descent, Knuth-move and canonical-basis
//! properties of cells.

use rayon::prelude::*;

use super::basis::{c_prime, kl_action_q1};
use super::cells::{CellGraph, CellPartition};
use super::kl::KlEngine;
use crate::report::Report;
use crate::symgroup::{Permutation, Side};
use crate::tableaux::{in_d, k_move};

fn describe_pair(engine: &KlEngine, y: usize, w: usize) -> String {
    let g = engine.group();
    format!(
        "y={} w={} L(y)={} L(w)={} R(y)={} R(w)={} mu(y|w)={}",
        g.element(y),
        g.element(w),
        g.left_descents(y),
        g.left_descents(w),
        g.right_descents(y),
        g.right_descents(w),
        engine.mu_sym_idx(y, w)
    )
}

/// `y <=_L w` implies `R(y) ⊇ R(w)`: checked on every edge and every
/// reachable pair; within a cell both inclusions give `R(y) = R(w)`.
pub fn verify_prop_descents(engine: &KlEngine) -> Report {
    Report::run("descents", engine.n(), |report| {
        let graph = CellGraph::build(engine);
        let g = engine.group();
        for (x, y, _) in graph.edges() {
            report.check(g.right_descents(y).is_subset(g.right_descents(x)), || {
                format!("edge {}", describe_pair(engine, x, y))
            });
        }
        let reach: Vec<Vec<bool>> = (0..graph.len())
            .into_par_iter()
            .map(|y| graph.reachable_from(y))
            .collect();
        for (y, row) in reach.iter().enumerate() {
            for (w, &r) in row.iter().enumerate() {
                if !r {
                    continue;
                }
                report.check(g.right_descents(w).is_subset(g.right_descents(y)), || {
                    format!(
                        "y <=_L w but R(y) does not contain R(w): {}",
                        describe_pair(engine, y, w)
                    )
                });
                if reach[w][y] {
                    report.check(g.right_descents(w) == g.right_descents(y), || {
                        format!("same left cell, different R: {}", describe_pair(engine, y, w))
                    });
                }
            }
        }
        report.note(format!("{} elements, {} edges", graph.len(), graph.edge_count()));
    })
}

fn adjacent_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..n {
        if i > 1 {
            out.push((i, i - 1));
        }
        if i + 1 < n {
            out.push((i, i + 1));
        }
    }
    out
}

/// For every adjacent `(i, j)`:
/// - `mu(y|w) != 0` on `D_ij` implies `mu(K_ij(y)|K_ij(w)) != 0`;
/// - `K_ij` maps left-cell-equivalent elements of `D_ij` to equivalent ones;
/// - `K_ij(w) ~_R w`;
/// - `mu(w0 s_i, w0 s_i s_j) = 1` for each minimal coset representative `w0`.
pub fn verify_knuth_mu(engine: &KlEngine) -> Report {
    let n = engine.n();
    Report::run("knuth-mu", n, |report| {
        let graph = CellGraph::build(engine);
        let left = CellPartition::from_graph(&graph, Side::Left);
        let right = CellPartition::from_graph(&graph, Side::Right);
        let g = engine.group();
        for (i, j) in adjacent_pairs(n) {
            let domain: Vec<usize> = (0..g.order())
                .filter(|&w| in_d(g.element(w), i, j).expect("adjacent"))
                .collect();
            let image = |w: usize| k_move(g.element(w), i, j).expect("w in D_ij").rank();
            let in_domain = |w: usize| in_d(g.element(w), i, j).expect("adjacent");
            for &w in &domain {
                let kw = image(w);
                for &(z, _) in engine.mu_list_idx(w).iter() {
                    let z = z as usize;
                    if !in_domain(z) {
                        continue;
                    }
                    let kz = image(z);
                    report.check(engine.mu_sym_idx(kz, kw) != 0, || {
                        format!(
                            "K_{i}{j} loses mu: {}; images {} {} with mu={}",
                            describe_pair(engine, z, w),
                            g.element(kz),
                            g.element(kw),
                            engine.mu_sym_idx(kz, kw)
                        )
                    });
                }
                report.check(right.same_cell(g.element(w), g.element(kw)), || {
                    format!(
                        "K_{i}{j}({}) = {} not in the same right cell",
                        g.element(w),
                        g.element(kw)
                    )
                });
            }
            // Left-cell preservation: within each cell, the images of the
            // members lying in D_ij share one cell.
            for cell in left.cells() {
                let members: Vec<usize> = cell
                    .iter()
                    .map(Permutation::rank)
                    .filter(|&w| in_domain(w))
                    .collect();
                if let Some(&first) = members.first() {
                    let target = left.cell_of(g.element(image(first)));
                    for &w in &members[1..] {
                        let kw = image(w);
                        report.check(left.cell_of(g.element(kw)) == target, || {
                            format!(
                                "K_{i}{j} splits a left cell: {} ~_L {} but images {} {} differ",
                                g.element(first),
                                g.element(w),
                                g.element(image(first)),
                                g.element(kw)
                            )
                        });
                    }
                }
            }
            for base in (0..g.order()).filter(|&w| {
                let r = g.right_descents(w);
                !r.contains(i) && !r.contains(j)
            }) {
                let wi = g.mul(Side::Right, i, base);
                let wij = g.mul(Side::Right, j, wi);
                report.check(engine.mu_idx(wi, wij) == 1, || {
                    format!(
                        "mu(w0 s_{i}, w0 s_{i} s_{j}) != 1: {}",
                        describe_pair(engine, wi, wij)
                    )
                });
            }
        }
        report.note(format!("{} elements, {} left cells", g.order(), left.len()));
    })
}

/// `bar(C'_w) = C'_w`, and for `y < w` the coordinate of `v^-l(y) T_y` in
/// `C'_w` has only strictly negative powers of `v`.
pub fn verify_bar_invariance(engine: &KlEngine) -> Report {
    let n = engine.n();
    Report::run("bar-invariance", n, |report| {
        engine.warm();
        let results: Vec<(Permutation, bool, Vec<String>)> = engine
            .group()
            .elements()
            .par_iter()
            .map(|w| {
                let c = c_prime(engine, w).expect("element of the group");
                let invariant = c.bar() == c;
                let mut bad_degrees = Vec::new();
                for (y, coeff) in c.coords() {
                    if y == w {
                        continue;
                    }
                    let normalized = coeff.shift(y.length() as i32);
                    if normalized.max_degree().is_some_and(|d| d > -1) {
                        bad_degrees.push(format!("T[{y}] coefficient {coeff}"));
                    }
                }
                (w.clone(), invariant, bad_degrees)
            })
            .collect();
        for (w, invariant, bad) in results {
            report.check(invariant, || format!("C'_{w} is not bar-invariant"));
            report.check(bad.is_empty(), || {
                format!("C'_{w} degree bound fails: {}", bad.join(", "))
            });
        }
        report.note(format!("{} elements", engine.group().order()));
    })
}

/// `a(y)` occurs in `s_i a(w)` (`y != w`) iff `s_i ∈ L(y) \ L(w)` and
/// `mu(y|w) != 0`, so graph edges are exactly the nonzero off-diagonal
/// entries of the left action.
pub fn verify_basal_module(engine: &KlEngine) -> Report {
    let n = engine.n();
    Report::run("basal-module", n, |report| {
        engine.warm();
        let g = engine.group();
        for (wi, w) in g.elements().iter().enumerate() {
            for i in 1..n {
                let action = kl_action_q1(engine, i, w).expect("valid index");
                for (yi, y) in g.elements().iter().enumerate() {
                    if yi == wi {
                        continue;
                    }
                    let appears = action.get(y).is_some_and(|&c| c != 0);
                    let predicted = g.left_descents(yi).contains(i)
                        && !g.left_descents(wi).contains(i)
                        && engine.mu_sym_idx(yi, wi) != 0;
                    report.check(appears == predicted, || {
                        format!(
                            "s_{i} a(w) vs a(y): appears={appears} {}",
                            describe_pair(engine, yi, wi)
                        )
                    });
                }
            }
        }
    })
}
