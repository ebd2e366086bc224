//! The Iwahori–Hecke algebra of `S_n` over `Z[v, v^-1]`, in the standard
//! basis `T_w`, with `q = v^2`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};
use crate::symgroup::{Permutation, Side};

/// A finite combination `sum c_w T_w`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    coords: BTreeMap<Permutation, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            coords: BTreeMap::new(),
        }
    }

    /// `T_w`.
    pub fn basis(w: &Permutation) -> Self {
        HeckeElement::monomial(w, LaurentPoly::one())
    }

    /// `c T_w`.
    pub fn monomial(w: &Permutation, c: LaurentPoly) -> Self {
        let mut out = HeckeElement::zero(w.n());
        out.add_term(w, &c);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &BTreeMap<Permutation, LaurentPoly> {
        &self.coords
    }

    pub fn coefficient(&self, w: &Permutation) -> LaurentPoly {
        self.coords.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: &Permutation, c: &LaurentPoly) {
        debug_assert_eq!(w.n(), self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.coords.entry(w.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(w);
        }
    }

    pub fn add(&self, other: &HeckeElement) -> Result<Self> {
        check_degree(self.n, other.n)?;
        let mut out = self.clone();
        for (w, c) in &other.coords {
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::monomial(-1, 0)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = HeckeElement::zero(self.n);
        for (w, a) in &self.coords {
            out.add_term(w, &(a * c));
        }
        out
    }

    /// `T_{s_i} x` (left) or `x T_{s_i}` (right), using
    /// `T_s T_w = T_{sw}` if `sw > w` and `q T_{sw} + (q - 1) T_w` otherwise.
    pub fn mul_simple(&self, i: usize, side: Side) -> Self {
        let q = LaurentPoly::q();
        let q_minus_one = &q - &LaurentPoly::one();
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.coords {
            let sw = w.mul_simple(i, side);
            let descent = match side {
                Side::Left => w.has_left_descent(i),
                Side::Right => w.has_right_descent(i),
            };
            if descent {
                out.add_term(&sw, &(c * &q));
                out.add_term(w, &(c * &q_minus_one));
            } else {
                out.add_term(&sw, c);
            }
        }
        out
    }

    /// `x T_{s_i}^-1`, with `T_s^-1 = q^-1 T_s + (q^-1 - 1) T_e`.
    fn mul_simple_inverse_right(&self, i: usize) -> Self {
        let q_inv = LaurentPoly::monomial(1, -2);
        let shifted = self.mul_simple(i, Side::Right).scale(&q_inv);
        let rest = self.scale(&(&q_inv - &LaurentPoly::one()));
        shifted.add(&rest).expect("same degree")
    }

    /// Product in the Hecke algebra.
    pub fn t_multiply(&self, other: &HeckeElement) -> Result<Self> {
        check_degree(self.n, other.n)?;
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &other.coords {
            let mut term = self.scale(c);
            for i in w.reduced_word().into_iter().map(|s| s.index()) {
                term = term.mul_simple(i, Side::Right);
            }
            for (x, a) in &term.coords {
                out.add_term(x, a);
            }
        }
        Ok(out)
    }

    /// The ring involution `v -> v^-1`, `T_w -> T_{w^-1}^-1`.
    pub fn bar(&self) -> Self {
        let mut cache: HashMap<&Permutation, HeckeElement> = HashMap::new();
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.coords {
            let image = cache.entry(w).or_insert_with(|| bar_basis(w));
            for (x, a) in &image.coords {
                out.add_term(x, &(a * &c.bar()));
            }
        }
        out
    }

    /// Largest Coxeter length in the support.
    pub fn max_length(&self) -> Option<usize> {
        self.coords.keys().map(Permutation::length).max()
    }
}

/// `bar(T_w) = T_{s_1}^-1 ... T_{s_k}^-1` for a reduced word `s_1 ... s_k`.
pub fn bar_basis(w: &Permutation) -> HeckeElement {
    let mut out = HeckeElement::basis(&Permutation::identity(w.n()));
    for i in w.reduced_word().into_iter().map(|s| s.index()) {
        out = out.mul_simple_inverse_right(i);
    }
    out
}

fn check_degree(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DegreeMismatch { left, right });
    }
    Ok(())
}

impl fmt::Display for HeckeElement {
    /// `(v^-1 + v) T[213] + T[123]`, longest elements first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.coords.iter().collect();
        terms.sort_by(|a, b| b.0.length().cmp(&a.0.length()).then(a.0.cmp(b.0)));
        for (k, (w, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if *c == LaurentPoly::one() {
                write!(f, "T[{w}]")?;
            } else {
                write!(f, "({c}) T[{w}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement({self})")
    }
}
