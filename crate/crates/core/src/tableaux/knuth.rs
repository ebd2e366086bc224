//! Elementary Knuth relations and the moves `K_ij : D_ij -> D_ji`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::symgroup::{check_adjacent, Permutation, Side};

/// Permutations one elementary Knuth relation away from `w`: within three
/// consecutive letters, swap the last two when the first lies strictly
/// between them, or swap the first two when the last does.
pub fn knuth_neighbors(w: &Permutation) -> BTreeSet<Permutation> {
    let word = w.word();
    let between = |v: u8, a: u8, b: u8| a.min(b) < v && v < a.max(b);
    let mut out = BTreeSet::new();
    for i in 0..word.len().saturating_sub(2) {
        let (a, b, c) = (word[i], word[i + 1], word[i + 2]);
        if between(a, b, c) {
            out.insert(w.mul_simple(i + 2, Side::Right));
        }
        if between(c, a, b) {
            out.insert(w.mul_simple(i + 1, Side::Right));
        }
    }
    out
}

/// Closure of `{w}` under Knuth relations.
pub fn knuth_class(w: &Permutation) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in knuth_neighbors(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// `w ∈ D_ij`, i.e. `w s_i < w` and `w s_j > w`.
pub fn in_d(w: &Permutation, i: usize, j: usize) -> Result<bool> {
    check_adjacent(i, j, w.n())?;
    Ok(w.has_right_descent(i) && !w.has_right_descent(j))
}

/// `K_ij(w)`: with `w0` the minimal representative of `w <s_i, s_j>`,
/// sends `w0 s_i` to `w0 s_i s_j` and `w0 s_j s_i` to `w0 s_j`.
pub fn k_move(w: &Permutation, i: usize, j: usize) -> Result<Permutation> {
    if !in_d(w, i, j)? {
        return Err(not_in_domain(w, i, j));
    }
    let base = w.min_coset_rep(i, j)?;
    let base_i = base.mul_simple(i, Side::Right);
    let base_j = base.mul_simple(j, Side::Right);
    if *w == base_i {
        Ok(base_i.mul_simple(j, Side::Right))
    } else if *w == base_j.mul_simple(i, Side::Right) {
        Ok(base_j)
    } else {
        Err(not_in_domain(w, i, j))
    }
}

fn not_in_domain(w: &Permutation, i: usize, j: usize) -> Error {
    Error::NotInDomain {
        w: w.to_string(),
        i,
        j,
    }
}
