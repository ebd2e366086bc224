//! Independent oracles for the integration tests. Nothing here calls the
//! library's Bruhat order, Hecke arithmetic or KL recursion.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use schensted::klcells::IntPolynomial;
use schensted::symgroup::Permutation;
use schensted::tableaux::{inner_corners, jdt_slide, Tableau};

/// All permutations of `1..=n` as raw words, lexicographic.
pub fn raw_perms(n: usize) -> Vec<Vec<u8>> {
    fn go(prefix: &mut Vec<u8>, left: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..left.len() {
            let v = left.remove(k);
            prefix.push(v);
            go(prefix, left, out);
            prefix.pop();
            left.insert(k, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (1..=n as u8).collect(), &mut out);
    out
}

pub fn inversions(w: &[u8]) -> usize {
    (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count()
}

/// Reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ... s_{i_k}` by bubble
/// sorting positions.
pub fn bubble_reduced_word(w: &[u8]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut stripped = Vec::new();
    while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
        w.swap(i, i + 1);
        stripped.push(i + 1);
    }
    stripped.reverse();
    stripped
}

/// Number of involutions in `S_n`, by brute force.
pub fn involution_count(n: usize) -> usize {
    raw_perms(n)
        .iter()
        .filter(|w| {
            w.iter()
                .enumerate()
                .all(|(i, &v)| w[v as usize - 1] as usize == i + 1)
        })
        .count()
}

/// Bruhat order by the subword property: `y <= w` iff `y` is a product of a
/// subword of a reduced word of `w`.
pub fn bruhat_below(w: &[u8]) -> BTreeSet<Vec<u8>> {
    let word = bubble_reduced_word(w);
    let n = w.len();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << word.len()) {
        let mut x: Vec<u8> = (1..=n as u8).collect();
        for (k, &i) in word.iter().enumerate() {
            if mask & (1 << k) != 0 {
                x.swap(i - 1, i);
            }
        }
        out.insert(x);
    }
    out
}

pub fn to_perm(w: &[u8]) -> Permutation {
    Permutation::new(w.iter().map(|&v| v as usize)).unwrap()
}

// ---------------------------------------------------------------------------
// Canonical basis by linear algebra in the normalised Hecke basis
// `T~_w = v^-l(w) T_w`, where `T~_w T~_s = T~_{ws}` if `ws > w` and
// `T~_{ws} + (v - v^-1) T~_w` otherwise, and `bar(T~_s) = T~_s - (v - v^-1)`.

type Laurent = BTreeMap<i32, i64>;

fn lp_add(acc: &mut Laurent, p: &Laurent, scale: i64, shift: i32) {
    for (&e, &c) in p {
        let slot = acc.entry(e + shift).or_insert(0);
        *slot += c * scale;
        if *slot == 0 {
            acc.remove(&(e + shift));
        }
    }
}

fn lp_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&e, &c) in a {
        lp_add(&mut out, b, c, e);
    }
    out
}

fn lp_bar(a: &Laurent) -> Laurent {
    a.iter().map(|(&e, &c)| (-e, c)).collect()
}

struct Dense {
    elems: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    lengths: Vec<usize>,
}

impl Dense {
    fn new(n: usize) -> Self {
        let elems = raw_perms(n);
        let index = elems.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let lengths = elems.iter().map(|w| inversions(w)).collect();
        Dense {
            elems,
            index,
            lengths,
        }
    }

    /// `x T~_s` for `s = s_i`.
    fn right_mul(&self, x: &[Laurent], i: usize) -> Vec<Laurent> {
        let mut out = vec![Laurent::new(); x.len()];
        let v_minus = Laurent::from([(1, 1), (-1, -1)]);
        for (k, c) in x.iter().enumerate() {
            if c.is_empty() {
                continue;
            }
            let mut ws = self.elems[k].clone();
            ws.swap(i - 1, i);
            let target = self.index[&ws];
            lp_add(&mut out[target], c, 1, 0);
            if self.lengths[target] < self.lengths[k] {
                let extra = lp_mul(c, &v_minus);
                lp_add(&mut out[k], &extra, 1, 0);
            }
        }
        out
    }

    /// `bar(T~_z)` in the `T~` basis.
    fn bar_basis(&self, z: usize) -> Vec<Laurent> {
        let n_elems = self.elems.len();
        let mut x = vec![Laurent::new(); n_elems];
        let identity: Vec<u8> = (1..=self.elems[z].len() as u8).collect();
        x[self.index[&identity]] = Laurent::from([(0, 1)]);
        let v_minus = Laurent::from([(1, 1), (-1, -1)]);
        for i in bubble_reduced_word(&self.elems[z]) {
            let mut next = self.right_mul(&x, i);
            for (k, c) in x.iter().enumerate() {
                let term = lp_mul(c, &v_minus);
                lp_add(&mut next[k], &term, -1, 0);
            }
            x = next;
        }
        x
    }
}

/// `P_{y,w}` for every pair in `S_n`, keyed by raw words, from the unique
/// bar-invariant element `sum p_y T~_y` with `p_w = 1` and
/// `p_y in v^-1 Z[v^-1]` for `y != w`.
pub fn kl_oracle(n: usize) -> HashMap<(Vec<u8>, Vec<u8>), IntPolynomial> {
    let d = Dense::new(n);
    let count = d.elems.len();
    // r[z][y] = coefficient of T~_y in bar(T~_z)
    let r: Vec<Vec<Laurent>> = (0..count).map(|z| d.bar_basis(z)).collect();
    let mut by_length: Vec<usize> = (0..count).collect();
    by_length.sort_by_key(|&k| std::cmp::Reverse(d.lengths[k]));
    let mut out = HashMap::new();
    for w in 0..count {
        let mut p: Vec<Laurent> = vec![Laurent::new(); count];
        p[w] = Laurent::from([(0, 1)]);
        for &y in &by_length {
            if d.lengths[y] >= d.lengths[w] {
                continue;
            }
            let mut a = Laurent::new();
            for z in 0..count {
                if d.lengths[z] > d.lengths[y] && !p[z].is_empty() && !r[z][y].is_empty() {
                    let term = lp_mul(&lp_bar(&p[z]), &r[z][y]);
                    lp_add(&mut a, &term, 1, 0);
                }
            }
            p[y] = a.into_iter().filter(|&(e, _)| e < 0).collect();
        }
        for (y, py) in p.iter().enumerate() {
            let shift = (d.lengths[w] as i32) - (d.lengths[y] as i32);
            let mut coeffs = Vec::new();
            for (&e, &c) in py {
                let e = e + shift;
                assert!(e >= 0 && e % 2 == 0, "oracle produced odd power for P");
                let k = (e / 2) as usize;
                if coeffs.len() <= k {
                    coeffs.resize(k + 1, 0);
                }
                coeffs[k] = c;
            }
            out.insert(
                (d.elems[y].clone(), d.elems[w].clone()),
                IntPolynomial::from_coeffs(coeffs),
            );
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Knuth relations straight from their definition on three adjacent letters.

pub fn knuth_step(y: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for i in 0..y.len().saturating_sub(2) {
        let (a, b, c) = (y[i], y[i + 1], y[i + 2]);
        // y_{i+1} < y_i < y_{i+2}: swap the last two
        if b < a && a < c {
            let mut w = y.to_vec();
            w.swap(i + 1, i + 2);
            out.push(w);
        }
        // y_{i+1} < y_{i+2} < y_i: swap the first two
        if b < c && c < a {
            let mut w = y.to_vec();
            w.swap(i, i + 1);
            out.push(w);
        }
        // and the converse moves
        if c < a && a < b {
            let mut w = y.to_vec();
            w.swap(i + 1, i + 2);
            out.push(w);
        }
        if a < c && c < b {
            let mut w = y.to_vec();
            w.swap(i, i + 1);
            out.push(w);
        }
    }
    out
}

pub fn knuth_classes(n: usize) -> BTreeSet<BTreeSet<Vec<u8>>> {
    let mut seen = BTreeSet::new();
    let mut classes = BTreeSet::new();
    for w in raw_perms(n) {
        if seen.contains(&w) {
            continue;
        }
        let mut class = BTreeSet::from([w.clone()]);
        let mut stack = vec![w];
        while let Some(x) = stack.pop() {
            for y in knuth_step(&x) {
                if class.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen.extend(class.iter().cloned());
        classes.insert(class);
    }
    classes
}

// ---------------------------------------------------------------------------
// Skew tableaux and rectification along every slide order.

/// Partitions of `size` as weakly decreasing row lengths.
pub fn partitions(size: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, &mut Vec::new(), &mut out);
    out
}

fn contains(outer: &[usize], inner: &[usize]) -> bool {
    inner.len() <= outer.len() && inner.iter().zip(outer).all(|(a, b)| a <= b)
}

/// Standard fillings of the skew shape `outer / inner` with `1..=k`.
pub fn skew_standard_fillings(outer: &[usize], inner: &[usize]) -> Vec<Tableau> {
    let k: usize = outer.iter().sum::<usize>() - inner.iter().sum::<usize>();
    let mut grid: Vec<Vec<u32>> = outer.iter().map(|&l| vec![0; l]).collect();
    let mut current: Vec<usize> = (0..outer.len())
        .map(|x| inner.get(x).copied().unwrap_or(0))
        .collect();
    let mut out = Vec::new();
    fn go(
        next: u32,
        k: u32,
        outer: &[usize],
        inner: &[usize],
        current: &mut Vec<usize>,
        grid: &mut Vec<Vec<u32>>,
        out: &mut Vec<Tableau>,
    ) {
        if next > k {
            let rows = grid
                .iter()
                .enumerate()
                .map(|(x, row)| row[inner.get(x).copied().unwrap_or(0)..].to_vec())
                .collect();
            out.push(Tableau::skew(inner.to_vec(), rows).unwrap());
            return;
        }
        for x in 0..outer.len() {
            let c = current[x];
            if c < outer[x] && (x == 0 || current[x - 1] > c) {
                grid[x][c] = next;
                current[x] += 1;
                go(next + 1, k, outer, inner, current, grid, out);
                current[x] -= 1;
                grid[x][c] = 0;
            }
        }
    }
    go(1, k as u32, outer, inner, &mut current, &mut grid, &mut out);
    out
}

/// Every skew standard tableau with `1..=max_cells` cells whose outer shape
/// has at most `max_outer` cells.
pub fn small_skew_tableaux(max_cells: usize, max_outer: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for outer_size in 1..=max_outer {
        for outer in partitions(outer_size) {
            for inner_size in outer_size.saturating_sub(max_cells)..outer_size {
                let inners = if inner_size == 0 {
                    vec![vec![]]
                } else {
                    partitions(inner_size)
                };
                for inner in inners.into_iter().filter(|i| contains(&outer, i)) {
                    out.extend(skew_standard_fillings(&outer, &inner));
                }
            }
        }
    }
    out
}

/// Results of rectifying along every possible sequence of inner corners.
pub fn all_rectifications(t: &Tableau) -> BTreeSet<Tableau> {
    let corners = inner_corners(t);
    if corners.is_empty() {
        return BTreeSet::from([t.clone()]);
    }
    corners
        .into_iter()
        .flat_map(|c| all_rectifications(&jdt_slide(t, c).unwrap()))
        .collect()
}

/// Bruhat order by the rank-matrix criterion: `y <= w` iff for every prefix
/// length `i` and threshold `k`, `y` has at most as many values `>= k` among
/// its first `i` letters as `w` does.
pub fn bruhat_leq_rank(y: &[u8], w: &[u8]) -> bool {
    let n = y.len();
    (1..=n).all(|i| {
        (1..=n as u8).all(|k| {
            let count = |x: &[u8]| x[..i].iter().filter(|&&v| v >= k).count();
            count(y) <= count(w)
        })
    })
}

/// Right descents `{i : w_i > w_{i+1}}`.
pub fn right_descents(w: &[u8]) -> BTreeSet<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn inverse(w: &[u8]) -> Vec<u8> {
    let mut out = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        out[v as usize - 1] = i as u8 + 1;
    }
    out
}
