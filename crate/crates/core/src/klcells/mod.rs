//! Kazhdan–Lusztig polynomials, the Hecke algebra and its canonical basis,
//! and the left/right cells of `S_n`.

mod basis;
mod cells;
mod checks;
mod hecke;
mod kl;
mod poly;

pub use basis::{
    a_element, c_prime, c_prime_product_expansion, c_prime_product_formula, express_in_a_basis,
    express_in_c_prime, kl_action_q1, left_multiply_simple, GroupAlgebraElement,
};
pub use cells::{cells, left_cell_graph, left_closure, CellGraph, CellPartition};
pub use checks::{verify_bar_invariance, verify_basal_module, verify_knuth_mu, verify_prop_descents};
pub use hecke::{bar_basis, HeckeElement};
pub use kl::{cache_file_name, cache_path, kl_polynomial, mu, KlEngine};
pub use poly::{IntPolynomial, LaurentPoly};

/// `bar(x)`.
pub fn bar(x: &HeckeElement) -> HeckeElement {
    x.bar()
}

/// `a * b` in the Hecke algebra.
pub fn t_multiply(a: &HeckeElement, b: &HeckeElement) -> crate::Result<HeckeElement> {
    a.t_multiply(b)
}
