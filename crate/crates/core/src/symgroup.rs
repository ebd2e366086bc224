//! Exact combinatorics of the symmetric group `S_n`.
//!
//! Permutations use one-line notation with 1-based values: the word
//! `w_1 ... w_n` lists the image of each position. Composition follows the
//! rule `(u * v)_i = u_{v_i}`, so `v` acts first. Under this rule right
//! multiplication by `s_i` swaps the *positions* `i, i+1` of the word, left
//! multiplication swaps the *letters* `i, i+1`, and `w * w0` is the reversed
//! word.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default cap on the degree of enumeration-based computations.
pub const DEFAULT_MAX_DEGREE: usize = 8;

/// Absolute cap; `--max-n` cannot be raised past this.
pub const HARD_MAX_DEGREE: usize = 10;

/// Side on which a simple reflection acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" | "l" => Ok(Side::Left),
            "right" | "r" => Ok(Side::Right),
            _ => Err(Error::Parse(format!("expected left or right, got {s:?}"))),
        }
    }
}

/// The transposition `s_i = (i, i+1)`, `1 <= i <= n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleReflection(usize);

impl SimpleReflection {
    pub fn new(index: usize, n: usize) -> Result<Self> {
        if index == 0 || index >= n {
            return Err(Error::ReflectionOutOfRange { index, n });
        }
        Ok(SimpleReflection(index))
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for SimpleReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

/// A set of simple reflections, stored as a bitmask (bit `i` is `s_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DescentSet(u32);

impl DescentSet {
    pub fn empty() -> Self {
        DescentSet(0)
    }

    pub fn full(n: usize) -> Self {
        let mut set = DescentSet(0);
        for i in 1..n {
            set.insert(i);
        }
        set
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn is_subset(self, other: DescentSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..32).filter(move |&i| self.contains(i))
    }

    pub fn difference(self, other: DescentSet) -> DescentSet {
        DescentSet(self.0 & !other.0)
    }

    pub fn bits(self) -> u32 {
        self.0
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "s{i}")?;
        }
        f.write_str("}")
    }
}

/// An element of `S_n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from its one-line word; the values must be
    /// exactly `1..=n` in some order.
    pub fn new<I>(word: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: TryInto<u8> + Copy + fmt::Debug,
    {
        let mut out = Vec::new();
        for v in word {
            let b: u8 = v
                .try_into()
                .map_err(|_| Error::InvalidPermutation(format!("value {v:?} out of range")))?;
            out.push(b);
        }
        let n = out.len();
        let mut seen = vec![false; n + 1];
        for &v in &out {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{out:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { word: out })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    /// The longest element `w0 = n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n as u8).rev().collect(),
        }
    }

    /// The simple reflection `s_i` as a permutation.
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        SimpleReflection::new(i, n)?;
        let mut w = Permutation::identity(n);
        w.word.swap(i - 1, i);
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// `w_i`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.n()];
        for (pos, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = pos as u8 + 1;
        }
        Permutation { word: inv }
    }

    /// `self * other`, i.e. the word `i -> self_{other_i}`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        check_degree(self, other)?;
        Ok(Permutation {
            word: other.word.iter().map(|&v| self.word[v as usize - 1]).collect(),
        })
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `w s_i < w`, i.e. `w_i > w_{i+1}`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.word[i - 1] > self.word[i]
    }

    /// `s_i w < w`, i.e. the letter `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos_i = self.word.iter().position(|&v| v as usize == i);
        let pos_next = self.word.iter().position(|&v| v as usize == i + 1);
        pos_next < pos_i
    }

    /// `R(w) = { s_i : w s_i < w }`.
    pub fn right_descents(&self) -> DescentSet {
        let mut set = DescentSet::empty();
        for i in 1..self.n() {
            if self.has_right_descent(i) {
                set.insert(i);
            }
        }
        set
    }

    /// `L(w) = { s_i : s_i w < w }`; equals `R(w^-1)`.
    pub fn left_descents(&self) -> DescentSet {
        self.inverse().right_descents()
    }

    /// Multiplies by `s_i` on the given side. The index must lie in
    /// `1..n`; out-of-range indices panic.
    pub fn mul_simple(&self, i: usize, side: Side) -> Self {
        assert!(i >= 1 && i < self.n(), "s_{i} out of range for S_{}", self.n());
        let mut word = self.word.clone();
        match side {
            Side::Right => word.swap(i - 1, i),
            Side::Left => {
                for v in &mut word {
                    if *v as usize == i {
                        *v += 1;
                    } else if *v as usize == i + 1 {
                        *v -= 1;
                    }
                }
            }
        }
        Permutation { word }
    }

    /// Checked form of [`Permutation::mul_simple`].
    pub fn multiply_simple(&self, s: SimpleReflection, side: Side) -> Result<Self> {
        SimpleReflection::new(s.index(), self.n())?;
        Ok(self.mul_simple(s.index(), side))
    }

    /// Bruhat order via sorted-prefix dominance: `y <= w` iff for every `k`
    /// the increasingly sorted `y_1..y_k` is entrywise at most the sorted
    /// `w_1..w_k`.
    pub fn bruhat_leq(&self, w: &Permutation) -> Result<bool> {
        check_degree(self, w)?;
        Ok(bruhat_leq_words(&self.word, &w.word))
    }

    /// Reduced word `[i_1, ..., i_r]` with `w = s_{i_1} ... s_{i_r}`,
    /// obtained by repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self) -> Vec<SimpleReflection> {
        let mut w = self.clone();
        let mut stripped = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            w = w.mul_simple(i, Side::Right);
            stripped.push(SimpleReflection(i));
        }
        stripped.reverse();
        stripped
    }

    /// Minimal-length element of the right coset `w <s_i, s_j>`, `j = i +- 1`.
    pub fn min_coset_rep(&self, i: usize, j: usize) -> Result<Self> {
        check_adjacent(i, j, self.n())?;
        let mut w = self.clone();
        loop {
            if w.has_right_descent(i) {
                w = w.mul_simple(i, Side::Right);
            } else if w.has_right_descent(j) {
                w = w.mul_simple(j, Side::Right);
            } else {
                return Ok(w);
            }
        }
    }

    /// Position of this permutation in lexicographic order of `S_n`
    /// (Lehmer code).
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.word[i + 1..].iter().filter(|&&v| v < self.word[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(n: usize, mut rank: usize) -> Self {
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        let word = digits.into_iter().map(|d| pool.remove(d)).collect();
        Permutation { word }
    }
}

pub(crate) fn bruhat_leq_words(y: &[u8], w: &[u8]) -> bool {
    let n = y.len();
    let mut ys: Vec<u8> = Vec::with_capacity(n);
    let mut ws: Vec<u8> = Vec::with_capacity(n);
    for k in 0..n {
        let pos = ys.partition_point(|&v| v < y[k]);
        ys.insert(pos, y[k]);
        let pos = ws.partition_point(|&v| v < w[k]);
        ws.insert(pos, w[k]);
        if ys.iter().zip(&ws).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

fn check_degree(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DegreeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

pub(crate) fn check_adjacent(i: usize, j: usize, n: usize) -> Result<()> {
    if i.abs_diff(j) != 1 {
        return Err(Error::NotAdjacent { i, j });
    }
    SimpleReflection::new(i, n)?;
    SimpleReflection::new(j, n)?;
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string (`"31524"`, degree at most 9) or a JSON
    /// integer array.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            let values: Vec<u64> = serde_json::from_str(s)
                .map_err(|e| Error::Parse(format!("bad permutation array {s:?}: {e}")))?;
            return Permutation::new(values);
        }
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad permutation {s:?}")));
        }
        Permutation::new(s.bytes().map(|b| b - b'0'))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.n() <= 9 {
            serializer.collect_str(self)
        } else {
            serializer.collect_seq(&self.word)
        }
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PermVisitor;

        impl<'de> Visitor<'de> for PermVisitor {
            type Value = Permutation;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a digit string or an integer array")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Permutation, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Permutation, A::Error> {
                let mut word: Vec<u64> = Vec::new();
                while let Some(v) = seq.next_element()? {
                    word.push(v);
                }
                Permutation::new(word).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_any(PermVisitor)
    }
}

/// Lexicographic iterator over `S_n`.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<u8>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// All of `S_n` in lexicographic order, bounded by [`DEFAULT_MAX_DEGREE`].
pub fn enumerate(n: usize) -> Result<Permutations> {
    enumerate_with_limit(n, DEFAULT_MAX_DEGREE)
}

pub fn enumerate_with_limit(n: usize, max: usize) -> Result<Permutations> {
    let max = max.min(HARD_MAX_DEGREE);
    if n > max {
        return Err(Error::DegreeTooLarge { n, max });
    }
    if n == 0 {
        return Err(Error::InvalidPermutation("degree must be at least 1".into()));
    }
    Ok(Permutations {
        next: Some((1..=n as u8).collect()),
    })
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Indexed tables for one `S_n`: elements in lexicographic order together
/// with lengths, inverses, descents and simple-reflection products, all
/// addressed by lexicographic rank.
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Permutation>,
    lengths: Vec<u32>,
    inverses: Vec<u32>,
    left_descents: Vec<DescentSet>,
    right_descents: Vec<DescentSet>,
    // mul[side][i - 1][w]
    left_mul: Vec<Vec<u32>>,
    right_mul: Vec<Vec<u32>>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_limit(n, DEFAULT_MAX_DEGREE)
    }

    pub fn with_limit(n: usize, max: usize) -> Result<Self> {
        let elements: Vec<Permutation> = enumerate_with_limit(n, max)?.collect();
        let lengths = elements.iter().map(|w| w.length() as u32).collect();
        let inverses = elements.iter().map(|w| w.inverse().rank() as u32).collect();
        let left_descents = elements.iter().map(Permutation::left_descents).collect();
        let right_descents = elements.iter().map(Permutation::right_descents).collect();
        let table = |side| {
            (1..n)
                .map(|i| {
                    elements
                        .iter()
                        .map(|w| w.mul_simple(i, side).rank() as u32)
                        .collect()
                })
                .collect()
        };
        let left_mul = table(Side::Left);
        let right_mul = table(Side::Right);
        Ok(SymmetricGroup {
            n,
            elements,
            lengths,
            inverses,
            left_descents,
            right_descents,
            left_mul,
            right_mul,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Permutation {
        &self.elements[idx]
    }

    pub fn index_of(&self, w: &Permutation) -> Result<usize> {
        if w.n() != self.n {
            return Err(Error::DegreeMismatch {
                left: w.n(),
                right: self.n,
            });
        }
        Ok(w.rank())
    }

    pub fn length(&self, idx: usize) -> usize {
        self.lengths[idx] as usize
    }

    pub fn inverse(&self, idx: usize) -> usize {
        self.inverses[idx] as usize
    }

    pub fn left_descents(&self, idx: usize) -> DescentSet {
        self.left_descents[idx]
    }

    pub fn right_descents(&self, idx: usize) -> DescentSet {
        self.right_descents[idx]
    }

    pub fn descents(&self, idx: usize, side: Side) -> DescentSet {
        match side {
            Side::Left => self.left_descents[idx],
            Side::Right => self.right_descents[idx],
        }
    }

    /// Index of `s_i * w` (left) or `w * s_i` (right).
    pub fn mul(&self, side: Side, i: usize, idx: usize) -> usize {
        match side {
            Side::Left => self.left_mul[i - 1][idx] as usize,
            Side::Right => self.right_mul[i - 1][idx] as usize,
        }
    }

    pub fn bruhat_leq(&self, y: usize, w: usize) -> bool {
        if y == w {
            return true;
        }
        if self.lengths[y] >= self.lengths[w] {
            return false;
        }
        bruhat_leq_words(self.elements[y].word(), self.elements[w].word())
    }
}
