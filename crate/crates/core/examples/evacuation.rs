//! Jeu de taquin rectification and evacuation; reversing a permutation
//! evacuates and transposes its recording tableau.
//!
//!     cargo run --example evacuation -- 31524

use schensted::symgroup::Permutation;
use schensted::tableaux::{evacuation, p_symbol, permutation_tableau, q_symbol, rectify};

fn main() -> schensted::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "31524".to_string());
    let w: Permutation = arg.parse()?;
    let skew = permutation_tableau(&w);
    println!("permutation tableau of {w}: {skew:?}");
    let rect = rectify(&skew);
    println!("rectified: {rect} (P = {})", p_symbol(&w));
    let q = q_symbol(&w);
    let evac = evacuation(&q)?;
    let reversed = w.compose(&Permutation::longest(w.n()))?;
    println!("Q(w) = {q}");
    println!("evac(Q(w)) = {evac}");
    println!(
        "Q(w w0) = {} (transpose of evac: {})",
        q_symbol(&reversed),
        evac.transpose()
    );
    Ok(())
}
