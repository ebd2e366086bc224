//! The canonical basis C'_w of the Hecke algebra: its expansion in the T
//! basis, bar invariance, and the multiplication rule for C'_s C'_w.
//!
//!     cargo run --example hecke_canonical_basis -- 2143

use schensted::klcells::{c_prime, c_prime_product_expansion, KlEngine};
use schensted::symgroup::Permutation;

fn main() -> schensted::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2143".to_string());
    let w: Permutation = arg.parse()?;
    let engine = KlEngine::new(w.n())?;
    let c = c_prime(&engine, &w)?;
    println!("C'_{w} = {c}");
    println!("bar-invariant: {}", c.bar() == c);
    for i in 1..w.n() {
        let terms: Vec<String> = c_prime_product_expansion(&engine, i, &w)?
            .into_iter()
            .map(|(z, coeff)| format!("({coeff}) C'_{z}"))
            .collect();
        println!("C'_s{i} C'_{w} = {}", terms.join(" + "));
    }
    Ok(())
}
