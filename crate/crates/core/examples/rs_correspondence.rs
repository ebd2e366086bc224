//! Robinson-Schensted: insertion and recording tableaux, and back.
//!
//!     cargo run --example rs_correspondence -- 31524

use schensted::symgroup::Permutation;
use schensted::tableaux::{p_symbol, rs_inverse, rs_pair};

fn main() -> schensted::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "31524".to_string());
    let w: Permutation = arg.parse()?;
    let (p, q) = rs_pair(&w);
    println!("w = {w}");
    println!("P =\n{}", p.render_text());
    println!("Q =\n{}", q.render_text());
    println!("shape {}", p.shape());
    println!("Q(w) = P(w^-1): {}", q == p_symbol(&w.inverse()));
    println!("recovered {}", rs_inverse(&p, &q)?);
    Ok(())
}
