//! Knuth classes, and the moves K_ij between the two halves of a coset of
//! a rank-two parabolic subgroup.
//!
//!     cargo run --example knuth_moves -- 2413

use schensted::symgroup::Permutation;
use schensted::tableaux::{in_d, k_move, knuth_class, p_symbol};

fn main() -> schensted::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2413".to_string());
    let w: Permutation = arg.parse()?;
    let class = knuth_class(&w);
    println!(
        "Knuth class of {w} ({} elements), all with P = {}:",
        class.len(),
        p_symbol(&w)
    );
    for x in &class {
        println!("  {x}");
    }
    let n = w.n();
    for i in 1..n {
        for j in [i.saturating_sub(1), i + 1] {
            if j == 0 || j >= n {
                continue;
            }
            if in_d(&w, i, j)? {
                let kw = k_move(&w, i, j)?;
                println!("K_{i}{j}({w}) = {kw}, P = {}", p_symbol(&kw));
            }
        }
    }
    Ok(())
}
