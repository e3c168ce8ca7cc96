//! Resolving the equidistant dimension of Q_4.
//!
//! The general hypercube result pins xi(Q_n) = 2^(n-1) except when n is
//! divisible by 4, where only the bracket
//! 2^(n-1) <= xi(Q_n) <= 2^(n-1) + 2^(n/2-2) is known. Q_4 is small
//! enough to close the gap computationally.
//!
//! Run with: cargo run --example hypercube_q4

use equidim::constructions::{construct_witness, xi_closed_form, ClosedFamily};
use equidim::equalizer::is_equalizer_set;
use equidim::graph::{all_pairs_distances, hypercube};
use equidim::solver::{solve_exact, Strategy};
use std::time::Duration;

fn main() -> equidim::Result<()> {
    let closed = xi_closed_form(ClosedFamily::Hypercube, &[4])?;
    println!(
        "known bracket for xi(Q_4): [{}, {}]",
        closed.lower, closed.upper
    );

    let q4 = hypercube(4)?;
    let d = all_pairs_distances(&q4);

    // the odd-weight side plus the all-zero vertex realizes the upper bound
    let witness = construct_witness(ClosedFamily::Hypercube, &[4])?;
    let set = q4.vertex_set_of(&witness.vertices)?;
    let ok = is_equalizer_set(&d, &set).is_equalizer;
    let listing: Vec<String> = witness.vertices.iter().map(|l| l.to_string()).collect();
    println!(
        "witness ({}, {} vertices) verifies: {ok}",
        witness.construction_tag,
        set.len()
    );
    println!("  {}", listing.join(" "));

    // exact value by seeding each partite side and searching all
    // augmentations of the other
    let sol = solve_exact(&q4, &d, Strategy::BipartiteSeeded, Duration::from_secs(60))?;
    println!(
        "exact search: xi(Q_4) = {} ({} nodes, {} ms) — the bracket's upper end",
        sol.xi, sol.stats.nodes, sol.stats.millis
    );
    let basis: Vec<String> = q4
        .labels_of(&sol.basis)
        .iter()
        .map(|l| l.to_string())
        .collect();
    println!("  basis: {}", basis.join(" "));
    Ok(())
}
