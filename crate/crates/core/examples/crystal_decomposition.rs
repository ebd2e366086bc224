//! Components of the tensor-power crystal B^n over the letters 1..=r, each
//! isomorphic to a tableau crystal B(λ) and labelled by a recording tableau.
//!
//!     cargo run --example crystal_decomposition -- 3 3

use schensted::crystal::{decompose, f_op, verify_djm, CrystalWord};

fn main() -> schensted::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let n = args.next().and_then(Result::ok).unwrap_or(3);
    let r = args.next().and_then(Result::ok).unwrap_or(n) as u32;
    for c in decompose(n, r)? {
        println!(
            "shape {} Q = {} highest weight {} ({} words)",
            c.shape,
            c.q,
            c.highest_weight,
            c.words.len()
        );
    }
    let b = CrystalWord::new(vec![1; n], r)?;
    if r > 1 {
        match f_op(1, &b)? {
            Some(fb) => println!("f_1({b}) = {fb}"),
            None => println!("f_1({b}) = 0"),
        }
    }
    print!("{}", verify_djm(n, r)?);
    Ok(())
}
