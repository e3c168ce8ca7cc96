//! Closed-form values and witness sets for every family, cross-checked
//! end to end: the witness must verify and the exact solver must agree
//! with the formula.
//!
//! Run with: cargo run --example verify_witness

use equidim::constructions::{verify_theorem, ClosedFamily, SolverOutcome};
use std::time::Duration;

fn main() -> equidim::Result<()> {
    let budget = Duration::from_secs(60);
    let instances: Vec<(ClosedFamily, Vec<u32>)> = vec![
        (ClosedFamily::Hamming2, vec![2, 5]),
        (ClosedFamily::Hamming2, vec![3, 4]),
        (ClosedFamily::Hamming2, vec![5, 5]),
        (ClosedFamily::Hypercube, vec![3]),
        (ClosedFamily::Hypercube, vec![4]),
        (ClosedFamily::PrismCycle, vec![5]),
        (ClosedFamily::PrismCycle, vec![6]),
        (ClosedFamily::PrismCycle, vec![8]),
        (ClosedFamily::GridSquare, vec![3]),
        (ClosedFamily::GridSquare, vec![4]),
    ];
    println!(
        "{:<16} {:>8} {:>12} {:>10} {:>8} {:>7}",
        "family", "params", "closed form", "witness", "solver", "agree"
    );
    for (family, params) in instances {
        let r = verify_theorem(family, &params, budget)?;
        let closed = match r.closed.value {
            Some(v) => v.to_string(),
            None => format!("[{}, {}]", r.closed.lower, r.closed.upper),
        };
        let witness = format!(
            "{}{}",
            r.witness_size,
            if r.witness_verified { " ok" } else { " BAD" }
        );
        let solver = match r.solver {
            SolverOutcome::Solved { xi, .. } => xi.to_string(),
            SolverOutcome::TimedOut { .. } => "timeout".into(),
        };
        println!(
            "{:<16} {:>8} {:>12} {:>10} {:>8} {:>7}",
            family.as_str(),
            params
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(","),
            closed,
            witness,
            solver,
            r.agree
        );
    }
    Ok(())
}
