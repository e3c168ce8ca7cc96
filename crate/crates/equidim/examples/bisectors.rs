//! Bisectors on prisms: the vertices equidistant from a pair, and how
//! they behave under the cycle's rotation.
//!
//! Run with: cargo run --example bisectors

use equidim::equalizer::{bisector, prism};
use equidim::graph::{all_pairs_distances, cartesian_product, complete, cycle, Graph, Label};

fn prism_graph(n: u32) -> equidim::Result<Graph> {
    cartesian_product(&cycle(n)?, &complete(2)?)
}

fn show_bisector(g: &Graph, v: &Label, w: &Label) -> equidim::Result<()> {
    let d = all_pairs_distances(g);
    let b = bisector(&d, g.index_of(v)?, g.index_of(w)?)?;
    let labels: Vec<String> = g.labels_of(&b).iter().map(|l| l.to_string()).collect();
    println!("bisector of {v} and {w}: {}", labels.join(" "));
    Ok(())
}

fn main() -> equidim::Result<()> {
    // on C_6 x K_2 the bisector of two side-A vertices at cycle
    // distance 3 has exactly four vertices, all inside side A
    let g6 = prism_graph(6)?;
    show_bisector(&g6, &Label::pair(1, 1), &Label::pair(4, 2))?;

    let g10 = prism_graph(10)?;
    show_bisector(&g10, &Label::pair(9, 1), &Label::pair(2, 2))?;

    // sliding the pair apart two steps at a time leaves the bisector
    // unchanged
    let n = 10;
    let d = all_pairs_distances(&g10);
    let (v, w) = prism::q_pairs(n)[0].clone();
    let base = bisector(&d, g10.index_of(&v)?, g10.index_of(&w)?)?;
    println!("pair {v},{w} bisector is stable under shifts:");
    for l in 0..n / 4 {
        let (vs, ws) = prism::q_shift(&v, &w, l, n);
        let shifted = bisector(&d, g10.index_of(&vs)?, g10.index_of(&ws)?)?;
        println!(
            "  l={l}: {vs},{ws} -> same bisector: {}",
            shifted == base
        );
    }
    Ok(())
}
