//! Jeu de taquin, reading words, permutation tableaux and evacuation.

use super::Tableau;
use crate::error::{Error, Result};
use crate::symgroup::Permutation;

/// Inner corners of a skew tableau: cells of the inner shape whose removal
/// leaves a partition. Ordered bottom to top.
pub fn inner_corners(t: &Tableau) -> Vec<(usize, usize)> {
    let inner = t.inner();
    (1..=inner.len())
        .rev()
        .filter(|&x| inner[x - 1] > inner.get(x).copied().unwrap_or(0))
        .map(|x| (x, inner[x - 1]))
        .collect()
}

/// One forward slide into the inner corner `hole`: the smaller of the right
/// and lower neighbours moves into the hole (the lower one on ties) until
/// the hole reaches the outer boundary, where it is dropped.
pub fn jdt_slide(t: &Tableau, hole: (usize, usize)) -> Result<Tableau> {
    if !inner_corners(t).contains(&hole) {
        return Err(Error::InvalidHole {
            row: hole.0,
            col: hole.1,
        });
    }
    // Dense grid of the outer shape; None marks inner cells and the hole.
    let outer = t.shape();
    let mut grid: Vec<Vec<Option<u32>>> = outer
        .rows()
        .iter()
        .enumerate()
        .map(|(x, &len)| (1..=len).map(|c| t.get(x + 1, c)).collect())
        .collect();
    let (mut x, mut c) = (hole.0 - 1, hole.1 - 1);
    loop {
        let right = grid[x].get(c + 1).copied().flatten();
        let below = grid.get(x + 1).and_then(|r| r.get(c)).copied().flatten();
        let down = match (right, below) {
            (None, None) => break,
            (Some(_), None) => false,
            (None, Some(_)) => true,
            (Some(r), Some(b)) => b <= r,
        };
        let (nx, nc) = if down { (x + 1, c) } else { (x, c + 1) };
        grid[x][c] = grid[nx][nc].take();
        (x, c) = (nx, nc);
    }
    debug_assert_eq!(grid[x].len(), c + 1, "hole ends at the end of its row");
    grid[x].pop();
    if grid[x].is_empty() {
        grid.pop();
    }
    let mut inner = Vec::with_capacity(grid.len());
    let mut rows = Vec::with_capacity(grid.len());
    for row in grid {
        let skip = row.iter().take_while(|v| v.is_none()).count();
        inner.push(skip);
        rows.push(row.into_iter().flatten().collect());
    }
    Tableau::skew(inner, rows)
}

/// Slides until the shape is straight, always choosing the bottommost inner
/// corner.
pub fn rectify(t: &Tableau) -> Tableau {
    let mut current = t.clone();
    while let Some(&corner) = inner_corners(&current).first() {
        current = jdt_slide(&current, corner).expect("inner corner is a valid hole");
    }
    current
}

/// The tableau of shape `staircase(n+1) / staircase(n)` whose single-cell
/// rows, read from the south-west cell to the north-east cell, spell `w`.
pub fn permutation_tableau(w: &Permutation) -> Tableau {
    let n = w.n();
    let inner = (0..n).map(|x| n - 1 - x).collect();
    let rows = (0..n).map(|x| vec![w.word()[n - 1 - x] as u32]).collect();
    Tableau::skew(inner, rows).expect("one-cell rows form a skew shape")
}

/// Entries read row by row from the bottom row up, each row left to right.
pub fn reading_word(t: &Tableau) -> Vec<u32> {
    t.rows().iter().rev().flatten().copied().collect()
}

/// Schützenberger evacuation of a standard tableau: repeatedly delete the
/// entry in `(1,1)`, slide the hole out, and label the vacated cell with
/// `n, n-1, ..., 1`.
pub fn evacuation(t: &Tableau) -> Result<Tableau> {
    if t.is_skew() {
        return Err(Error::SkewShape);
    }
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let n = t.size() as u32;
    let shape = t.shape();
    let mut out: Vec<Vec<u32>> = shape.rows().iter().map(|&l| vec![0; l]).collect();
    let mut current = t.clone();
    for label in (1..=n).rev() {
        let before = current.shape();
        let mut rows = current.rows().to_vec();
        rows[0].remove(0);
        let punctured = Tableau::skew(vec![1], rows)?;
        current = jdt_slide(&punctured, (1, 1))?;
        let after = current.shape();
        let x = (1..=before.num_rows())
            .find(|&x| before.row_len(x) != after.row_len(x))
            .expect("one cell vacated");
        out[x - 1][before.row_len(x) - 1] = label;
    }
    Tableau::new(out)
}
