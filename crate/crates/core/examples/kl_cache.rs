//! Warming, saving and reloading the persisted KL table.
//!
//!     cargo run --release --example kl_cache -- 5 /tmp/kl-cache

use std::path::PathBuf;
use std::time::Instant;

use schensted::klcells::{cache_path, KlEngine};
use schensted::symgroup::Side;

fn main() -> schensted::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let dir = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("schensted-example"));
    std::fs::create_dir_all(&dir)?;
    let path = cache_path(&dir, n, Side::Left);

    let start = Instant::now();
    let engine = KlEngine::new(n)?;
    engine.warm_all_pairs();
    let stored = engine.save(&path)?;
    println!(
        "computed {} entries in {:.3}s; stored {stored} in {}",
        engine.cached_len(),
        start.elapsed().as_secs_f64(),
        path.display()
    );

    let start = Instant::now();
    let reloaded = KlEngine::new(n)?;
    let loaded = reloaded.load(&path)?;
    println!(
        "reloaded {loaded} entries in {:.3}s",
        start.elapsed().as_secs_f64()
    );
    let w0 = schensted::symgroup::Permutation::longest(n);
    let e = schensted::symgroup::Permutation::identity(n);
    println!("P_{{e,w0}} = {}", reloaded.kl_polynomial(&e, &w0)?);
    Ok(())
}
