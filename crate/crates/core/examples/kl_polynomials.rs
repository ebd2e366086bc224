//! Kazhdan-Lusztig polynomials and mu-coefficients of S_n.
//!
//!     cargo run --example kl_polynomials -- 4

use schensted::klcells::KlEngine;

fn main() -> schensted::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let engine = KlEngine::new(n)?;
    let g = engine.group();
    let mut nontrivial = 0;
    for w in g.elements() {
        for y in g.elements() {
            let p = engine.kl_polynomial(y, w)?;
            if p.degree().is_some_and(|d| d > 0) {
                nontrivial += 1;
                println!("P_{{{y},{w}}} = {p}   mu = {}", engine.mu(y, w)?);
            }
        }
    }
    println!("{nontrivial} non-constant polynomials in S_{n}");
    Ok(())
}
