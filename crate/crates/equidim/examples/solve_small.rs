//! Exact solves on small instances with both search strategies.
//!
//! Run with: cargo run --example solve_small

use equidim::graph::{all_pairs_distances, bipartition, cartesian_product, complete, cycle, path};
use equidim::solver::{bounds, solve_exact, Strategy};
use std::time::Duration;

fn main() -> equidim::Result<()> {
    let budget = Duration::from_secs(60);
    let instances = vec![
        ("K_3 x K_3", cartesian_product(&complete(3)?, &complete(3)?)?),
        ("K_4 x K_6", cartesian_product(&complete(4)?, &complete(6)?)?),
        ("C_6 x K_2", cartesian_product(&cycle(6)?, &complete(2)?)?),
        ("C_7 x K_2", cartesian_product(&cycle(7)?, &complete(2)?)?),
        ("P_3 x P_3", cartesian_product(&path(3)?, &path(3)?)?),
        ("P_4 x P_4", cartesian_product(&path(4)?, &path(4)?)?),
        ("P_3 x P_5", cartesian_product(&path(3)?, &path(5)?)?),
    ];
    for (name, g) in instances {
        let d = all_pairs_distances(&g);
        let b = bounds(&g, &d);
        let sol = solve_exact(&g, &d, Strategy::Auto, budget)?;
        let basis: Vec<String> = g
            .labels_of(&sol.basis)
            .iter()
            .map(|l| l.to_string())
            .collect();
        println!(
            "{name}: xi = {} (bounds [{}, {}], {} via {}, {} nodes, {} ms)",
            sol.xi,
            b.lower,
            b.upper,
            if bipartition(&g).exists {
                "bipartite"
            } else {
                "non-bipartite"
            },
            sol.strategy.as_str(),
            sol.stats.nodes,
            sol.stats.millis
        );
        println!("  basis: {}", basis.join(" "));

        // the enumeration strategy is independent and must agree
        let by_enum = solve_exact(&g, &d, Strategy::SubsetEnumeration, budget)?;
        assert_eq!(by_enum.xi, sol.xi);
    }
    Ok(())
}
