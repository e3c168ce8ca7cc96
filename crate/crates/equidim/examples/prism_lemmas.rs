//! Structure of the prism C_n x K_2 under the parity split
//! B = {(x,y) : x+y odd}, A = complement — the machinery behind the
//! (5n-2)/4 value at n = 2 (mod 4).
//!
//! Run with: cargo run --example prism_lemmas [n]

use equidim::equalizer::{bisector, equalized_by, prism};
use equidim::graph::{all_pairs_distances, cartesian_product, complete, cycle};

fn main() -> equidim::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("numeric n"))
        .unwrap_or(10);
    assert!(n >= 6 && n % 4 == 2, "use n = 6, 10, 14, ...");

    let g = cartesian_product(&cycle(n)?, &complete(2)?)?;
    let d = all_pairs_distances(&g);
    let side_a = prism::side_a(n);
    let a_set = g.vertex_set_of(&side_a)?;
    let b_set = g.vertex_set_of(&prism::side_b(n))?;

    // pairs inside A are equalized from B unless their cycle distance is
    // 3 mod 4; those have their whole bisector inside A
    let mut by_residue = [[0usize; 2]; 4];
    for (i, v) in side_a.iter().enumerate() {
        for w in &side_a[i + 1..] {
            let vi = g.index_of(v)?;
            let wi = g.index_of(w)?;
            let r = (prism::cycle_distance(v.0[0], w.0[0], n) % 4) as usize;
            let from_b = !equalized_by(&d, &b_set, vi, wi)?.is_empty();
            by_residue[r][usize::from(from_b)] += 1;
        }
    }
    println!("side-A pairs by cycle-distance residue mod 4 (n = {n}):");
    for (r, [not_from_b, from_b]) in by_residue.iter().enumerate() {
        println!("  d = {r} (mod 4): {from_b} equalized from B, {not_from_b} not");
    }

    // the hard pairs: side-A pairs at cycle distance exactly 3
    let q = prism::q_pairs(n);
    println!("|Q| = {} pairs at cycle distance 3", q.len());
    let all_inside_a = q.iter().all(|(v, w)| {
        let bis = bisector(&d, g.index_of(v).unwrap(), g.index_of(w).unwrap()).unwrap();
        let inside = bis.iter().all(|x| a_set.contains(x));
        inside
    });
    println!("every Q-pair bisector lies inside A: {all_inside_a}");

    // how many Q-pair bisectors each side-A vertex belongs to; 4 once
    // n >= 10, but only 2 at n = 6 where Q collapses to 3 pairs
    let mut counts = std::collections::BTreeMap::new();
    for s in &side_a {
        let si = g.index_of(s)?;
        let c = q
            .iter()
            .filter(|(v, w)| {
                let vi = g.index_of(v).unwrap();
                let wi = g.index_of(w).unwrap();
                si != vi && si != wi && d.get(si, vi) == d.get(si, wi)
            })
            .count();
        *counts.entry(c).or_insert(0usize) += 1;
    }
    for (incidences, vertices) in counts {
        println!("{vertices} side-A vertices lie in exactly {incidences} Q-pair bisectors");
    }
    Ok(())
}
