//! Row and column insertion and the Robinson–Schensted correspondence.

use super::Tableau;
use crate::error::{Error, Result};
use crate::symgroup::Permutation;

/// Row-inserts `k` into raw rows, returning the new cell (1-based).
fn bump_rows(rows: &mut Vec<Vec<u32>>, mut k: u32) -> (usize, usize) {
    for (x, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&v| v > k) {
            Some(c) => std::mem::swap(&mut row[c], &mut k),
            None => {
                row.push(k);
                return (x + 1, row.len());
            }
        }
    }
    rows.push(vec![k]);
    (rows.len(), 1)
}

/// Column-inserts `k` into raw rows. In each column the topmost entry
/// `>= k` is bumped into the next column; with distinct entries this is the
/// transpose of row insertion.
fn bump_columns(rows: &mut Vec<Vec<u32>>, mut k: u32) -> (usize, usize) {
    let mut col = 0;
    loop {
        let height = rows.iter().take_while(|r| r.len() > col).count();
        match (0..height).find(|&x| rows[x][col] >= k) {
            Some(x) => {
                std::mem::swap(&mut rows[x][col], &mut k);
                col += 1;
            }
            None => {
                if height == rows.len() {
                    rows.push(Vec::new());
                }
                rows[height].push(k);
                return (height + 1, col + 1);
            }
        }
    }
}

fn straight_column_strict(t: &Tableau) -> Result<()> {
    if t.is_skew() {
        return Err(Error::SkewShape);
    }
    if !t.is_column_strict() {
        return Err(Error::NotColumnStrict);
    }
    Ok(())
}

fn positive(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidTableau("entries must be positive".into()));
    }
    Ok(())
}

/// `T <- k`: row insertion with the bumping procedure. Returns the new
/// tableau and the cell that was added.
pub fn row_insert(t: &Tableau, k: u32) -> Result<(Tableau, (usize, usize))> {
    straight_column_strict(t)?;
    positive(k)?;
    let mut rows = t.rows().to_vec();
    let cell = bump_rows(&mut rows, k);
    Ok((
        Tableau::new(rows).expect("row insertion keeps column strictness"),
        cell,
    ))
}

/// `k -> T`: column insertion.
pub fn column_insert(k: u32, t: &Tableau) -> Result<(Tableau, (usize, usize))> {
    straight_column_strict(t)?;
    positive(k)?;
    let mut rows = t.rows().to_vec();
    let cell = bump_columns(&mut rows, k);
    Ok((
        Tableau::new(rows).expect("column insertion keeps column strictness"),
        cell,
    ))
}

/// Insertion tableau `P` and recording tableau `Q` of an arbitrary word of
/// positive letters, inserted left to right.
pub fn rs_word(word: &[u32]) -> (Tableau, Tableau) {
    let mut p_rows: Vec<Vec<u32>> = Vec::new();
    let mut q_rows: Vec<Vec<u32>> = Vec::new();
    for (t, &letter) in word.iter().enumerate() {
        assert!(letter > 0, "letters must be positive");
        let (x, _) = bump_rows(&mut p_rows, letter);
        if q_rows.len() < x {
            q_rows.push(Vec::new());
        }
        q_rows[x - 1].push(t as u32 + 1);
    }
    (
        Tableau::new(p_rows).expect("insertion tableau"),
        Tableau::new(q_rows).expect("recording tableau"),
    )
}

fn letters(w: &Permutation) -> Vec<u32> {
    w.word().iter().map(|&v| v as u32).collect()
}

/// `P(w) = {} <- w_1 <- ... <- w_n`.
pub fn p_symbol(w: &Permutation) -> Tableau {
    rs_word(&letters(w)).0
}

/// `Q(w)`, computed as the recording tableau and checked against
/// `P(w^-1)`.
pub fn q_symbol(w: &Permutation) -> Tableau {
    rs_pair(w).1
}

/// `(P(w), Q(w))`.
pub fn rs_pair(w: &Permutation) -> (Tableau, Tableau) {
    let (p, q) = rs_word(&letters(w));
    let q_inverse = rs_word(&letters(&w.inverse())).0;
    assert_eq!(q, q_inverse, "recording tableau of {w} differs from P(w^-1)");
    (p, q)
}

/// `w_1 -> ... -> w_k -> {} <- w_{k+1} <- ... <- w_n`: column-insert the
/// prefix in reverse, then row-insert the suffix.
pub fn mixed_insertion(w: &Permutation, k: usize) -> Tableau {
    assert!(k <= w.n());
    let word = letters(w);
    let mut rows = Vec::new();
    for &v in word[..k].iter().rev() {
        bump_columns(&mut rows, v);
    }
    for &v in &word[k..] {
        bump_rows(&mut rows, v);
    }
    Tableau::new(rows).expect("mixed insertion tableau")
}

/// Inverse Robinson–Schensted: the unique `w` with `P(w) = p` and
/// `Q(w) = q`, by reverse bumping in decreasing order of `q`'s entries.
pub fn rs_inverse(p: &Tableau, q: &Tableau) -> Result<Permutation> {
    for t in [p, q] {
        if t.is_skew() {
            return Err(Error::SkewShape);
        }
        if !t.is_standard() {
            return Err(Error::NotStandard);
        }
    }
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(
            p.shape().rows().to_vec(),
            q.shape().rows().to_vec(),
        ));
    }
    let n = p.size();
    let mut rows = p.rows().to_vec();
    let mut word = vec![0u8; n];
    for t in (1..=n as u32).rev() {
        let (x, _) = q.find(t).expect("standard tableau contains every entry");
        let mut k = rows[x - 1].pop().expect("recorded cell is a corner");
        if rows[x - 1].is_empty() {
            rows.pop();
        }
        for row in rows[..x - 1].iter_mut().rev() {
            let c = row.iter().rposition(|&v| v < k).expect("reverse bump target");
            std::mem::swap(&mut row[c], &mut k);
        }
        word[t as usize - 1] = k as u8;
    }
    Ok(Permutation::from_word_unchecked(word))
}
