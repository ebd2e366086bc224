//! Young diagrams and tableaux.
//!
//! Cells are addressed as `(row, column)`, both 1-based, rows growing
//! downward. A [`Tableau`] may be skew: its `inner` shape lists, per row,
//! how many leading cells are removed, and `rows[x]` holds the entries of
//! the remaining cells of row `x` from left to right.

mod insertion;
mod jdt;
mod knuth;

pub use insertion::{
    column_insert, mixed_insertion, p_symbol, q_symbol, row_insert, rs_inverse, rs_pair, rs_word,
};
pub use jdt::{evacuation, inner_corners, jdt_slide, permutation_tableau, reading_word, rectify};
pub use knuth::{in_d, k_move, knuth_class, knuth_neighbors};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition, given by weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.contains(&0) || rows.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidShape(format!("{rows:?} is not a partition")));
        }
        Ok(Shape(rows))
    }

    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Length of row `x` (1-based); zero past the last row.
    pub fn row_len(&self, x: usize) -> usize {
        self.0.get(x - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.row_len(row)
    }

    pub fn conjugate(&self) -> Shape {
        let width = self.0.first().copied().unwrap_or(0);
        Shape(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&l| l >= c).count())
                .collect(),
        )
    }

    /// Column lengths `l_1, l_2, ...`.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.conjugate().0
    }

    /// Cells that can be removed leaving a partition.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (1..=self.num_rows())
            .filter(|&x| self.row_len(x) > self.row_len(x + 1))
            .map(|x| (x, self.row_len(x)))
            .collect()
    }

    pub fn is_subset_of(&self, other: &Shape) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Shape> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if rest == 0 {
                out.push(Shape(prefix.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in this one.
    pub fn subshapes(&self) -> Vec<Shape> {
        fn go(outer: &[usize], x: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if x == outer.len() {
                out.push(Shape::new(prefix.clone()).unwrap());
                return;
            }
            for len in 0..=outer[x].min(max) {
                prefix.push(len);
                go(outer, x + 1, len, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Shape::new(rows)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(shape: Shape) -> Self {
        shape.0
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `outer / inner` with `inner` contained in `outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Shape,
    inner: Shape,
}

impl SkewShape {
    pub fn new(outer: Shape, inner: Shape) -> Result<Self> {
        if !inner.is_subset_of(&outer) {
            return Err(Error::InvalidShape(format!(
                "{inner} does not fit inside {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Shape {
        &self.outer
    }

    pub fn inner(&self) -> &Shape {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.outer.contains(row, col) && !self.inner.contains(row, col)
    }
}

/// Most specific class a tableau belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableauKind {
    /// Entries are exactly `1..=size`.
    Standard,
    /// Columns strictly increase.
    ColumnStrict,
    /// Rows strictly increase, columns only weakly.
    RowStrict,
    /// Rows and columns weakly increase.
    Weak,
}

/// A filling of a (possibly skew) Young diagram whose entries weakly
/// increase along rows and down columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    inner: Vec<usize>,
    rows: Vec<Vec<u32>>,
    kind: TableauKind,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    rows: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    inner: Vec<usize>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;

    fn try_from(repr: TableauRepr) -> Result<Self> {
        Tableau::skew(repr.inner, repr.rows)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr {
            rows: t.rows,
            inner: t.inner,
        }
    }
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau {
            inner: Vec::new(),
            rows: Vec::new(),
            kind: TableauKind::Standard,
        }
    }

    /// A straight-shape tableau from its rows.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        Tableau::skew(Vec::new(), rows)
    }

    /// A skew tableau: row `x` has `inner[x]` removed leading cells followed
    /// by the entries `rows[x]`.
    pub fn skew(mut inner: Vec<usize>, mut rows: Vec<Vec<u32>>) -> Result<Self> {
        while inner.last() == Some(&0) {
            inner.pop();
        }
        if rows.len() < inner.len() {
            rows.resize(inner.len(), Vec::new());
        }
        while rows.len() > inner.len() && rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        if inner.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidShape(format!(
                "inner shape {inner:?} is not a partition"
            )));
        }
        let outer: Vec<usize> = rows
            .iter()
            .enumerate()
            .map(|(x, r)| inner.get(x).copied().unwrap_or(0) + r.len())
            .collect();
        if outer.windows(2).any(|p| p[0] < p[1]) || outer.contains(&0) {
            return Err(Error::InvalidShape(format!(
                "outer shape {outer:?} is not a partition"
            )));
        }
        let mut t = Tableau {
            inner,
            rows,
            kind: TableauKind::Weak,
        };
        t.kind = t.classify()?;
        Ok(t)
    }

    fn classify(&self) -> Result<TableauKind> {
        let mut row_strict = true;
        let mut col_strict = true;
        for (x, row) in self.rows.iter().enumerate() {
            for pair in row.windows(2) {
                if pair[0] > pair[1] {
                    return Err(Error::InvalidTableau(format!("row {} decreases", x + 1)));
                }
                row_strict &= pair[0] < pair[1];
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
        }
        for x in 1..self.rows.len() {
            for col in self.col_range(x + 1) {
                if let Some(above) = self.get(x, col) {
                    let below = self.get(x + 1, col).unwrap();
                    if above > below {
                        return Err(Error::InvalidTableau(format!("column {col} decreases")));
                    }
                    col_strict &= above < below;
                }
            }
        }
        let mut entries: Vec<u32> = self.rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        let standard = entries.iter().enumerate().all(|(k, &v)| v as usize == k + 1);
        Ok(if standard {
            TableauKind::Standard
        } else if col_strict {
            TableauKind::ColumnStrict
        } else if row_strict {
            TableauKind::RowStrict
        } else {
            TableauKind::Weak
        })
    }

    fn col_range(&self, x: usize) -> std::ops::RangeInclusive<usize> {
        let start = self.inner_len(x) + 1;
        start..=self.inner_len(x) + self.rows[x - 1].len()
    }

    fn inner_len(&self, x: usize) -> usize {
        self.inner.get(x - 1).copied().unwrap_or(0)
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn is_standard(&self) -> bool {
        self.kind == TableauKind::Standard
    }

    pub fn is_column_strict(&self) -> bool {
        matches!(self.kind, TableauKind::Standard | TableauKind::ColumnStrict)
    }

    pub fn is_skew(&self) -> bool {
        !self.inner.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Entries per row (skew cells only).
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    /// Number of filled cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Outer shape.
    pub fn shape(&self) -> Shape {
        Shape::new(
            (1..=self.rows.len())
                .map(|x| self.inner_len(x) + self.rows[x - 1].len())
                .collect(),
        )
        .expect("validated on construction")
    }

    pub fn skew_shape(&self) -> SkewShape {
        SkewShape {
            outer: self.shape(),
            inner: Shape::new(self.inner.clone()).expect("validated on construction"),
        }
    }

    /// Entry at `(row, col)`, `None` for inner or absent cells.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        if row == 0 || row > self.rows.len() {
            return None;
        }
        let offset = self.inner_len(row);
        if col <= offset {
            return None;
        }
        self.rows[row - 1].get(col - offset - 1).copied()
    }

    /// `(row, col, entry)` for every filled cell, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(x, row)| {
            let offset = self.inner_len(x + 1);
            row.iter()
                .enumerate()
                .map(move |(c, &v)| (x + 1, offset + c + 1, v))
        })
    }

    /// Position of `value`, first match in row order.
    pub fn find(&self, value: u32) -> Option<(usize, usize)> {
        self.cells().find(|&(_, _, v)| v == value).map(|(x, c, _)| (x, c))
    }

    /// Reflection across the main diagonal.
    pub fn transpose(&self) -> Tableau {
        let outer = self.shape().conjugate();
        let inner = Shape::new(self.inner.clone()).unwrap().conjugate();
        let rows = (1..=outer.num_rows())
            .map(|x| {
                let start = inner.row_len(x) + 1;
                (start..=outer.row_len(x))
                    .map(|c| self.get(c, x).expect("cell of the conjugate shape"))
                    .collect()
            })
            .collect();
        Tableau::skew(inner.rows().to_vec(), rows).expect("transpose preserves monotonicity")
    }

    /// One row per line, entries separated by spaces; inner cells print as `.`.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (x, row) in self.rows.iter().enumerate() {
            let mut parts: Vec<String> = vec![".".to_string(); self.inner_len(x + 1)];
            parts.extend(row.iter().map(|v| v.to_string()));
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serializes")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let parts: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                format!("[{}]", parts.join(","))
            })
            .collect();
        if self.inner.is_empty() {
            write!(f, "[{}]", rows.join(","))
        } else {
            write!(f, "[{}]/{:?}", rows.join(","), self.inner)
        }
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({self})")
    }
}

/// The standard tableau whose `i`-th column holds
/// `l_1 + ... + l_{i-1} + 1, ..., l_1 + ... + l_i` from top to bottom.
pub fn superstandard(shape: &Shape) -> Tableau {
    let mut rows: Vec<Vec<u32>> = shape.rows().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut next = 1;
    for len in shape.column_lengths() {
        for row in rows.iter_mut().take(len) {
            row.push(next);
            next += 1;
        }
    }
    Tableau::new(rows).expect("superstandard filling is standard")
}

/// All standard tableaux of the given shape.
pub fn standard_tableaux(shape: &Shape) -> Vec<Tableau> {
    // Place the largest entry in each corner in turn and recurse.
    fn go(shape: &Shape) -> Vec<Vec<Vec<u32>>> {
        let n = shape.size();
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (x, _) in shape.corners() {
            let mut smaller = shape.rows().to_vec();
            smaller[x - 1] -= 1;
            let smaller = Shape::new(smaller).unwrap();
            for mut rows in go(&smaller) {
                if rows.len() < x {
                    rows.push(Vec::new());
                }
                rows[x - 1].push(n as u32);
                out.push(rows);
            }
        }
        out
    }
    let mut all: Vec<Tableau> = go(shape)
        .into_iter()
        .map(|rows| Tableau::new(rows).expect("standard by construction"))
        .collect();
    all.sort();
    all
}

/// All column-strict tableaux of the given shape with entries in `1..=max`.
pub fn semistandard_tableaux(shape: &Shape, max: u32) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = (1..=shape.num_rows())
        .flat_map(|x| (1..=shape.row_len(x)).map(move |c| (x, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.rows().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fill_semistandard(&cells, 0, max, &mut grid, &mut out);
    out
}

fn fill_semistandard(
    cells: &[(usize, usize)],
    k: usize,
    max: u32,
    grid: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tableau>,
) {
    if k == cells.len() {
        out.push(Tableau::new(grid.clone()).expect("column strict by construction"));
        return;
    }
    let (x, c) = cells[k];
    let left = if c > 1 { grid[x - 1][c - 2] } else { 1 };
    let above = if x > 1 { grid[x - 2][c - 1] + 1 } else { 1 };
    for v in left.max(above)..=max {
        grid[x - 1][c - 1] = v;
        fill_semistandard(cells, k + 1, max, grid, out);
    }
    grid[x - 1][c - 1] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn shape_validation() {
        assert!(Shape::new(vec![2, 3]).is_err());
        assert_eq!(Shape::new(vec![3, 1, 0]).unwrap().rows(), &[3, 1]);
        assert_eq!(Shape::new(vec![3, 1]).unwrap().conjugate().rows(), &[2, 1, 1]);
        assert_eq!(Shape::all(4).len(), 5);
        assert_eq!(Shape::all(0), vec![Shape::empty()]);
    }

    #[test]
    fn tableau_kinds() {
        assert_eq!(t(&[&[1, 2, 4], &[3, 5]]).kind(), TableauKind::Standard);
        assert_eq!(
            t(&[&[1, 1, 2, 4], &[2, 3], &[4]]).kind(),
            TableauKind::ColumnStrict
        );
        assert_eq!(t(&[&[1, 2], &[1, 3]]).kind(), TableauKind::RowStrict);
        assert_eq!(t(&[&[1, 1], &[1, 1]]).kind(), TableauKind::Weak);
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![2], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::empty().is_standard());
    }

    #[test]
    fn transpose_examples() {
        let row = t(&[&[1, 2, 3]]);
        assert_eq!(row.transpose(), t(&[&[1], &[2], &[3]]));
        let q = t(&[&[1, 3, 5], &[2, 4]]);
        assert_eq!(q.transpose(), t(&[&[1, 2], &[3, 4], &[5]]));
        assert_eq!(q.transpose().shape(), q.shape().conjugate());
        assert_eq!(q.transpose().transpose(), q);
        let skew = Tableau::skew(vec![2, 1], vec![vec![3], vec![1, 4], vec![2]]).unwrap();
        assert_eq!(skew.transpose().transpose(), skew);
        assert_eq!(skew.transpose().get(3, 1), Some(3));
    }

    #[test]
    fn superstandard_examples() {
        let col = Shape::new(vec![1, 1, 1]).unwrap();
        assert_eq!(superstandard(&col), t(&[&[1], &[2], &[3]]));
        let square = Shape::new(vec![2, 2]).unwrap();
        assert_eq!(superstandard(&square), t(&[&[1, 3], &[2, 4]]));
        let hook = Shape::new(vec![3, 1]).unwrap();
        assert_eq!(superstandard(&hook), t(&[&[1, 3, 4], &[2]]));
    }

    #[test]
    fn json_schema() {
        let p = t(&[&[1, 2, 4], &[3, 5]]);
        assert_eq!(p.to_json(), r#"{"rows":[[1,2,4],[3,5]]}"#);
        let skew = Tableau::skew(vec![1], vec![vec![2], vec![1]]).unwrap();
        assert_eq!(skew.to_json(), r#"{"rows":[[2],[1]],"inner":[1]}"#);
        let back: Tableau = serde_json::from_str(&skew.to_json()).unwrap();
        assert_eq!(back, skew);
        assert!(serde_json::from_str::<Tableau>(r#"{"rows":[[2,1]]}"#).is_err());
    }

    #[test]
    fn render_text() {
        let skew = Tableau::skew(vec![1], vec![vec![2], vec![1]]).unwrap();
        assert_eq!(skew.render_text(), ". 2\n1\n");
    }

    #[test]
    fn tableau_counts() {
        // f^(3,2) = 5, and B((2,1)) over 3 letters has 8 elements.
        assert_eq!(standard_tableaux(&Shape::new(vec![3, 2]).unwrap()).len(), 5);
        assert_eq!(
            semistandard_tableaux(&Shape::new(vec![2, 1]).unwrap(), 3).len(),
            8
        );
        let total: usize = Shape::all(5).iter().map(|s| standard_tableaux(s).len()).sum();
        assert_eq!(total, 26);
    }
}
