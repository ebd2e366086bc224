//! The canonical basis `C'_w` in the Hecke algebra and the basis
//! `a(w) = C_w |_{q=1}` of the group algebra.

use std::collections::BTreeMap;

use super::hecke::HeckeElement;
use super::kl::KlEngine;
use super::poly::LaurentPoly;
use crate::error::{Error, Result};
use crate::symgroup::{Permutation, Side};

/// Element of the group algebra `Z[S_n]`.
pub type GroupAlgebraElement = BTreeMap<Permutation, i64>;

/// `C'_w = v^-l(w) sum_{y <= w} P_{y,w}(v^2) T_y`.
pub fn c_prime(engine: &KlEngine, w: &Permutation) -> Result<HeckeElement> {
    let g = engine.group();
    let wi = g.index_of(w)?;
    let lw = g.length(wi) as i32;
    let mut out = HeckeElement::zero(engine.n());
    for (yi, y) in g.elements().iter().enumerate() {
        let p = engine.poly(yi, wi);
        if !p.is_zero() {
            out.add_term(y, &LaurentPoly::from_q_poly(&p).shift(-lw));
        }
    }
    Ok(out)
}

/// Coordinates of `x` in the `C'` basis, found by repeatedly cancelling a
/// longest element of the support (the `T_u` coordinate of `C'_u` is
/// `v^-l(u)`).
pub fn express_in_c_prime(engine: &KlEngine, x: &HeckeElement) -> Result<BTreeMap<Permutation, LaurentPoly>> {
    let mut rest = x.clone();
    let mut out = BTreeMap::new();
    while let Some(u) = longest_in_support(rest.coords().keys()) {
        let coeff = rest.coefficient(&u).shift(u.length() as i32);
        let basis = c_prime(engine, &u)?;
        rest = rest.sub(&basis.scale(&coeff))?;
        out.insert(u, coeff);
    }
    Ok(out)
}

fn longest_in_support<'a>(keys: impl Iterator<Item = &'a Permutation>) -> Option<Permutation> {
    keys.max_by(|a, b| a.length().cmp(&b.length()).then(b.cmp(a)))
        .cloned()
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::ReflectionOutOfRange { index: i, n });
    }
    Ok(())
}

/// `C'_{s_i} C'_w` multiplied out in the `T` basis and re-expressed in the
/// `C'` basis.
pub fn c_prime_product_expansion(
    engine: &KlEngine,
    i: usize,
    w: &Permutation,
) -> Result<BTreeMap<Permutation, LaurentPoly>> {
    check_index(i, engine.n())?;
    let s = Permutation::simple(i, engine.n())?;
    let product = c_prime(engine, &s)?.t_multiply(&c_prime(engine, w)?)?;
    express_in_c_prime(engine, &product)
}

/// The predicted expansion of `C'_{s_i} C'_w`: `(v + v^-1) C'_w` when
/// `s_i w < w`, otherwise `C'_{s_i w} + sum mu(z, w) C'_z` over `z < w`
/// with `s_i z < z`.
pub fn c_prime_product_formula(
    engine: &KlEngine,
    i: usize,
    w: &Permutation,
) -> Result<BTreeMap<Permutation, LaurentPoly>> {
    check_index(i, engine.n())?;
    let mut out = BTreeMap::new();
    if w.has_left_descent(i) {
        let v_plus = &LaurentPoly::monomial(1, 1) + &LaurentPoly::monomial(1, -1);
        out.insert(w.clone(), v_plus);
        return Ok(out);
    }
    out.insert(w.mul_simple(i, Side::Left), LaurentPoly::one());
    for (z, m) in engine.mu_list(w)? {
        if z.has_left_descent(i) {
            out.insert(z, LaurentPoly::monomial(m, 0));
        }
    }
    Ok(out)
}

/// `a(w) = sum_{y <= w} (-1)^(l(w)-l(y)) P_{y,w}(1) y`.
pub fn a_element(engine: &KlEngine, w: &Permutation) -> Result<GroupAlgebraElement> {
    let g = engine.group();
    let wi = g.index_of(w)?;
    let lw = g.length(wi);
    let mut out = BTreeMap::new();
    for (yi, y) in g.elements().iter().enumerate() {
        let value = engine.poly(yi, wi).eval(1);
        if value != 0 {
            let sign = if (lw - g.length(yi)).is_multiple_of(2) {
                1
            } else {
                -1
            };
            out.insert(y.clone(), sign * value);
        }
    }
    Ok(out)
}

/// `s_i x` in the group algebra.
pub fn left_multiply_simple(i: usize, x: &GroupAlgebraElement) -> GroupAlgebraElement {
    x.iter().map(|(y, &c)| (y.mul_simple(i, Side::Left), c)).collect()
}

/// Coordinates of `x` in the `a` basis (triangular: `a(u)` has `u` with
/// coefficient 1 and otherwise only shorter elements).
pub fn express_in_a_basis(engine: &KlEngine, x: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    let mut rest = x.clone();
    let mut out = BTreeMap::new();
    while let Some(u) = longest_in_support(rest.keys()) {
        let c = rest[&u];
        for (y, a) in a_element(engine, &u)? {
            let entry = rest.entry(y.clone()).or_insert(0);
            *entry -= c * a;
            if *entry == 0 {
                rest.remove(&y);
            }
        }
        out.insert(u, c);
    }
    Ok(out)
}

/// Coordinates of `s_i a(w)` in the `a` basis from the representation
/// formula: `-a(w)` if `s_i w < w`, else
/// `a(w) + a(s_i w) + sum mu(z, w) a(z)` over `z < w` with `s_i z < z`.
pub fn kl_action_q1(engine: &KlEngine, i: usize, w: &Permutation) -> Result<GroupAlgebraElement> {
    check_index(i, engine.n())?;
    engine.group().index_of(w)?;
    let mut out = BTreeMap::new();
    if w.has_left_descent(i) {
        out.insert(w.clone(), -1);
        return Ok(out);
    }
    out.insert(w.clone(), 1);
    out.insert(w.mul_simple(i, Side::Left), 1);
    for (z, m) in engine.mu_list(w)? {
        if z.has_left_descent(i) {
            out.insert(z, m);
        }
    }
    Ok(out)
}
