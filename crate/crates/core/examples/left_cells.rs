//! Left cells of S_n from the KL graph, compared with the fibres of the
//! recording tableau, plus the cell order.
//!
//!     cargo run --release --example left_cells -- 5

use schensted::klcells::{CellGraph, CellPartition, KlEngine};
use schensted::symgroup::Side;
use schensted::tableaux::q_symbol;

fn main() -> schensted::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let engine = KlEngine::new(n)?;
    let graph = CellGraph::build(&engine);
    let cells = CellPartition::from_graph(&graph, Side::Left);
    println!(
        "S_{n}: {} elements, {} edges, {} left cells",
        graph.len(),
        graph.edge_count(),
        cells.len()
    );
    let mut agree = true;
    for (k, cell) in cells.cells().iter().enumerate() {
        let q = q_symbol(&cell[0]);
        agree &= cell.iter().all(|w| q_symbol(w) == q);
        let words: Vec<String> = cell.iter().map(|w| w.to_string()).collect();
        println!("cell {k}: Q = {q}: {}", words.join(" "));
    }
    println!("every cell has a single Q-symbol: {agree}");
    println!("cell order (a below b): {:?}", cells.order());
    Ok(())
}
