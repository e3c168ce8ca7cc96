//! Shared helpers for the integration suites: seeded random graph
//! generators and a brute-force reference for small instances.
#![allow(dead_code)] // each suite uses its own subset

use equidim::equalizer::is_equalizer_set;
use equidim::graph::{bipartition, DistanceMatrix, Graph, Label, VertexSet};
use rand::Rng;

/// Random connected graph: a random attachment tree plus extra edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: u32, extra_edge_prob: f64) -> Graph {
    let labels: Vec<Label> = (1..=n).map(Label::single).collect();
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(extra_edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(labels, &edges, None).expect("tree plus extra edges is connected")
}

/// Random connected bipartite graph: a random tree (always bipartite)
/// plus extra edges that respect the tree's two-coloring.
pub fn random_connected_bipartite<R: Rng>(rng: &mut R, n: u32, extra_edge_prob: f64) -> Graph {
    let labels: Vec<Label> = (1..=n).map(Label::single).collect();
    let mut edges = Vec::new();
    let mut color = vec![0u8; n as usize];
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        edges.push((parent, v));
        color[v as usize] = 1 - color[parent as usize];
    }
    for u in 0..n {
        for v in u + 1..n {
            if color[u as usize] != color[v as usize]
                && !edges.contains(&(u, v))
                && rng.gen_bool(extra_edge_prob)
            {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(labels, &edges, None).expect("tree plus extra edges is connected");
    assert!(bipartition(&g).exists);
    g
}

/// True when some k-subset of the vertices is a distance-equalizer set,
/// by plain enumeration over all subsets. Independent of the solver's
/// search machinery.
pub fn exists_equalizer_of_size(d: &DistanceMatrix, k: usize) -> bool {
    let n = d.order() as u32;
    let mut chosen: Vec<u32> = Vec::with_capacity(k);
    subsets(d, n, 0, k, &mut chosen)
}

fn subsets(d: &DistanceMatrix, n: u32, from: u32, remaining: usize, chosen: &mut Vec<u32>) -> bool {
    if remaining == 0 {
        let s: VertexSet = chosen.iter().copied().collect();
        return is_equalizer_set(d, &s).is_equalizer;
    }
    for v in from..=(n - remaining as u32) {
        chosen.push(v);
        if subsets(d, n, v + 1, remaining - 1, chosen) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

/// Smallest k admitting an equalizer set, by the brute-force route.
pub fn brute_force_xi(d: &DistanceMatrix) -> usize {
    (0..=d.order())
        .find(|&k| exists_equalizer_of_size(d, k))
        .expect("the full vertex set always works")
}
