//! Generate the graph families, take Cartesian products, and inspect
//! distances and bipartitions.
//!
//! Run with: cargo run --example families

use equidim::graph::{
    all_pairs_distances, bipartition, cartesian_product, complete, cycle, hypercube, path, Label,
};

fn main() -> equidim::Result<()> {
    let p5 = path(5)?;
    let c6 = cycle(6)?;
    let q4 = hypercube(4)?;
    println!("path 5:      {} vertices, {} edges", p5.order(), p5.edge_count());
    println!("cycle 6:     {} vertices, {} edges", c6.order(), c6.edge_count());
    println!("hypercube 4: {} vertices, {} edges", q4.order(), q4.edge_count());

    let prism = cartesian_product(&c6, &complete(2)?)?;
    println!(
        "cycle 6 x K_2 (prism): {} vertices, {} edges",
        prism.order(),
        prism.edge_count()
    );

    // distances are BFS hop counts; on the prism they split into a cycle
    // part plus a layer-change part
    let d = all_pairs_distances(&prism);
    let v = prism.index_of(&Label::pair(1, 1))?;
    let w = prism.index_of(&Label::pair(4, 2))?;
    println!("d((1,1), (4,2)) on the prism = {}", d.get(v, w));

    // every hypercube vertex is at distance n from its bitwise complement
    let dq = all_pairs_distances(&q4);
    let zero = q4.index_of(&Label(vec![0, 0, 0, 0]))?;
    let ones = q4.index_of(&Label(vec![1, 1, 1, 1]))?;
    println!("d(0000, 1111) on Q_4 = {}", dq.get(zero, ones));

    // bipartitions: side_a is the smaller side
    for (name, g) in [
        ("hypercube 4", &q4),
        ("grid 3x3", &cartesian_product(&path(3)?, &path(3)?)?),
        ("cycle 5", &cycle(5)?),
    ] {
        let b = bipartition(g);
        if b.exists {
            println!(
                "{name}: bipartite with sides {} and {}",
                b.side_a.len(),
                b.side_b.len()
            );
        } else {
            println!("{name}: not bipartite");
        }
    }
    Ok(())
}
