//! Reproduce the grid table: q(k,n) = xi(P_k x P_n) - ceil(kn/2) for
//! all 2 <= k <= kmax, 2 <= n <= nmax, solved with the bipartite-seeded
//! strategy.
//!
//! Run with: cargo run --example grid_table [kmax] [nmax] [budget_secs]

use equidim::cli::{compute_table, table_to_csv, CellStatus, ResultCache};
use std::time::Duration;

fn main() -> equidim::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric argument"))
        .collect();
    let k_max = *args.first().unwrap_or(&6) as u32;
    let n_max = *args.get(1).unwrap_or(&6) as u32;
    let budget = Duration::from_secs(*args.get(2).unwrap_or(&60));

    let mut cache = ResultCache::ephemeral();
    let table = compute_table(k_max, n_max, budget, &mut cache)?;
    print!("{}", table_to_csv(&table));

    // ceil(kn/2) is not always a lower bound: the smaller partite side
    // suffices for some lopsided grids, giving a negative q
    let mut negatives = Vec::new();
    for k in 2..=k_max {
        for n in k..=n_max {
            if let CellStatus::Solved { q, xi } = table.cell(k, n) {
                if q < 0 {
                    negatives.push(format!("q({k},{n}) = {q} (xi = {xi})"));
                }
            }
        }
    }
    if !negatives.is_empty() {
        println!("negative cells: {}", negatives.join(", "));
    }
    Ok(())
}
