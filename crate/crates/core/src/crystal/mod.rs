//! Crystals of tensor words over the letters `1..=r`: Kashiwara operators by
//! the two-factor tensor rule, the signature shortcut, components, and the
//! tableau crystals `B(λ)`.

mod components;

pub use components::{
    component, crystal_graph, decompose, is_highest_weight, refill, verify_djm, words, Component,
    CrystalGraph, MAX_WORDS,
};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableaux::{reading_word, rs_word, Tableau};

/// A single tensor factor `i` of the vector-representation crystal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    value: u32,
    rank: u32,
}

impl Letter {
    pub fn new(value: u32, rank: u32) -> Result<Self> {
        if value == 0 || value > rank {
            return Err(Error::LetterOutOfRange { letter: value, rank });
        }
        Ok(Letter { value, rank })
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn rank(self) -> u32 {
        self.rank
    }
}

/// `b_1 ⊗ ... ⊗ b_n`, letters left to right. Serialises as an integer array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "Vec<u32>")]
pub struct CrystalWord {
    #[serde(skip)]
    rank: u32,
    letters: Vec<u32>,
}

impl From<CrystalWord> for Vec<u32> {
    fn from(w: CrystalWord) -> Vec<u32> {
        w.letters
    }
}

/// Outcome of a Kashiwara operator; `None` is the null element.
pub type CrystalResult = Option<CrystalWord>;

impl CrystalWord {
    pub fn new(letters: Vec<u32>, rank: u32) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        for &l in &letters {
            Letter::new(l, rank)?;
        }
        Ok(CrystalWord { rank, letters })
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u32>, rank: u32) -> Self {
        CrystalWord { rank, letters }
    }

    pub fn from_letters(letters: &[Letter]) -> Result<Self> {
        let rank = letters.first().ok_or(Error::EmptyWord)?.rank();
        CrystalWord::new(letters.iter().map(|l| l.value()).collect(), rank)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether the letters are `1..=n` in some order.
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.len() + 1];
        self.letters.iter().all(|&l| {
            let l = l as usize;
            l <= self.len() && !std::mem::replace(&mut seen[l], true)
        })
    }
}

impl fmt::Display for CrystalWord {
    /// `1⊗1⊗2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join("⊗"))
    }
}

fn check_index(i: usize, rank: u32) -> Result<()> {
    if i == 0 || i >= rank as usize {
        return Err(Error::CrystalIndexOutOfRange { i, rank });
    }
    Ok(())
}

fn f_letter(i: u32, l: u32) -> Option<u32> {
    (l == i).then_some(i + 1)
}

fn e_letter(i: u32, l: u32) -> Option<u32> {
    (l == i + 1).then_some(i)
}

fn phi_rec(i: u32, w: &[u32]) -> usize {
    let mut k = 0;
    let mut cur = w.to_vec();
    while let Some(next) = f_rec(i, &cur) {
        cur = next;
        k += 1;
    }
    k
}

fn eps_rec(i: u32, w: &[u32]) -> usize {
    let mut k = 0;
    let mut cur = w.to_vec();
    while let Some(next) = e_rec(i, &cur) {
        cur = next;
        k += 1;
    }
    k
}

/// `f(b1 ⊗ b2) = b1 ⊗ f(b2)` if `eps(b1) < phi(b2)`, else `f(b1) ⊗ b2`,
/// with `b1` the first letter.
fn f_rec(i: u32, w: &[u32]) -> Option<Vec<u32>> {
    let (&b1, b2) = w.split_first()?;
    if b2.is_empty() {
        return f_letter(i, b1).map(|l| vec![l]);
    }
    let eps1 = usize::from(b1 == i + 1);
    if eps1 < phi_rec(i, b2) {
        let mut out = vec![b1];
        out.extend(f_rec(i, b2)?);
        Some(out)
    } else {
        let mut out = vec![f_letter(i, b1)?];
        out.extend_from_slice(b2);
        Some(out)
    }
}

/// `e(b1 ⊗ b2) = b1 ⊗ e(b2)` if `eps(b1) <= phi(b2)`, else `e(b1) ⊗ b2`.
fn e_rec(i: u32, w: &[u32]) -> Option<Vec<u32>> {
    let (&b1, b2) = w.split_first()?;
    if b2.is_empty() {
        return e_letter(i, b1).map(|l| vec![l]);
    }
    let eps1 = usize::from(b1 == i + 1);
    if eps1 <= phi_rec(i, b2) {
        let mut out = vec![b1];
        out.extend(e_rec(i, b2)?);
        Some(out)
    } else {
        let mut out = vec![e_letter(i, b1)?];
        out.extend_from_slice(b2);
        Some(out)
    }
}

/// `f~_i(b)` by the recursive tensor rule.
pub fn f_op(i: usize, b: &CrystalWord) -> Result<CrystalResult> {
    check_index(i, b.rank)?;
    Ok(f_rec(i as u32, &b.letters).map(|l| CrystalWord::from_vec_unchecked(l, b.rank)))
}

/// `e~_i(b)` by the recursive tensor rule.
pub fn e_op(i: usize, b: &CrystalWord) -> Result<CrystalResult> {
    check_index(i, b.rank)?;
    Ok(e_rec(i as u32, &b.letters).map(|l| CrystalWord::from_vec_unchecked(l, b.rank)))
}

/// `phi_i(b) = max {k : f~_i^k(b) != 0}`, by iteration.
pub fn phi(i: usize, b: &CrystalWord) -> Result<usize> {
    check_index(i, b.rank)?;
    Ok(phi_rec(i as u32, &b.letters))
}

/// `eps_i(b) = max {k : e~_i^k(b) != 0}`, by iteration.
pub fn eps(i: usize, b: &CrystalWord) -> Result<usize> {
    check_index(i, b.rank)?;
    Ok(eps_rec(i as u32, &b.letters))
}

/// Unmatched `i+1` and `i` positions (0-based) after cancelling every
/// `i+1` that has an `i` to its right, innermost pairs first.
fn unmatched(i: u32, w: &[u32]) -> (Vec<usize>, Vec<usize>) {
    let mut open_upper: Vec<usize> = Vec::new();
    let mut lower = Vec::new();
    for (pos, &l) in w.iter().enumerate() {
        if l == i + 1 {
            open_upper.push(pos);
        } else if l == i && open_upper.pop().is_none() {
            lower.push(pos);
        }
    }
    (open_upper, lower)
}

/// Positions (1-based) that `e~_i` and `f~_i` would change, read off the
/// signature: after cancellation, `e~_i` changes the leftmost unmatched
/// `i+1` and `f~_i` the rightmost unmatched `i`.
pub fn signature_rule(i: usize, b: &CrystalWord) -> Result<(Option<usize>, Option<usize>)> {
    check_index(i, b.rank)?;
    let (upper, lower) = unmatched(i as u32, &b.letters);
    Ok((upper.first().map(|p| p + 1), lower.last().map(|p| p + 1)))
}

/// `(eps_i, phi_i)` as the numbers of unmatched `i+1` and `i` letters.
pub fn signature_counts(i: usize, b: &CrystalWord) -> Result<(usize, usize)> {
    check_index(i, b.rank)?;
    let (upper, lower) = unmatched(i as u32, &b.letters);
    Ok((upper.len(), lower.len()))
}

/// Reading word of a column-strict tableau (bottom row first), as a word of
/// rank `r`.
pub fn tableau_reading_embedding(t: &Tableau, r: u32) -> Result<CrystalWord> {
    if t.is_skew() {
        return Err(Error::SkewShape);
    }
    if !t.is_column_strict() {
        return Err(Error::NotColumnStrict);
    }
    CrystalWord::new(reading_word(t), r)
}

/// Insertion tableau of `b`'s letters.
pub fn p_symbol_of_word(b: &CrystalWord) -> Tableau {
    rs_word(&b.letters).0
}

/// Recording tableau of `b`'s letters.
pub fn q_symbol_of_word(b: &CrystalWord) -> Tableau {
    rs_word(&b.letters).1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[u32], r: u32) -> CrystalWord {
        CrystalWord::new(letters.to_vec(), r).unwrap()
    }

    #[test]
    fn letters_and_words() {
        assert!(Letter::new(3, 2).is_err());
        assert!(matches!(CrystalWord::new(vec![], 2), Err(Error::EmptyWord)));
        assert!(matches!(
            CrystalWord::new(vec![1, 3], 2),
            Err(Error::LetterOutOfRange { letter: 3, rank: 2 })
        ));
        let b = CrystalWord::from_letters(&[Letter::new(2, 3).unwrap(), Letter::new(1, 3).unwrap()]).unwrap();
        assert_eq!(b.to_string(), "2⊗1");
        assert_eq!(serde_json::to_string(&b).unwrap(), "[2,1]");
        assert!(b.is_permutation());
        assert!(!w(&[1, 1], 2).is_permutation());
    }

    #[test]
    fn single_letters() {
        assert_eq!(phi(1, &w(&[1], 2)).unwrap(), 1);
        assert_eq!(eps(1, &w(&[1], 2)).unwrap(), 0);
        assert_eq!(f_op(1, &w(&[1], 2)).unwrap(), Some(w(&[2], 2)));
        assert_eq!(f_op(1, &w(&[2], 2)).unwrap(), None);
        assert_eq!(e_op(1, &w(&[2], 2)).unwrap(), Some(w(&[1], 2)));
        assert!(matches!(
            f_op(2, &w(&[1], 2)),
            Err(Error::CrystalIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn two_letter_words() {
        assert_eq!(f_op(1, &w(&[1, 1], 2)).unwrap(), Some(w(&[1, 2], 2)));
        assert_eq!(f_op(1, &w(&[1, 2], 2)).unwrap(), Some(w(&[2, 2], 2)));
        assert_eq!(f_op(1, &w(&[2, 2], 2)).unwrap(), None);
        assert_eq!(phi(1, &w(&[1, 1], 2)).unwrap(), 2);
        assert_eq!(f_op(1, &w(&[2, 1], 2)).unwrap(), None);
        assert_eq!(e_op(1, &w(&[2, 1], 2)).unwrap(), None);
        assert_eq!(signature_rule(1, &w(&[1, 1], 2)).unwrap(), (None, Some(2)));
        assert_eq!(signature_rule(1, &w(&[2, 1], 2)).unwrap(), (None, None));
    }

    #[test]
    fn reading_embedding() {
        let t = Tableau::new(vec![vec![1, 1, 2, 4], vec![2, 3], vec![4]]).unwrap();
        let b = tableau_reading_embedding(&t, 4).unwrap();
        assert_eq!(b.letters(), &[4, 2, 3, 1, 1, 2, 4]);
        assert_eq!(p_symbol_of_word(&b), t);
        assert!(matches!(
            tableau_reading_embedding(&t, 3),
            Err(Error::LetterOutOfRange { .. })
        ));
        let row = Tableau::new(vec![vec![1, 2]]).unwrap();
        let b = tableau_reading_embedding(&row, 2).unwrap();
        assert_eq!(b.letters(), &[1, 2]);
        assert_eq!(p_symbol_of_word(&b), row);
    }
}
