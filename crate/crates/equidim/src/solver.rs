//! Exact computation of the equidistant dimension with optimality
//! certificates.
//!
//! Feasibility is encoded the bit-parallel way: every vertex `w` gets an
//! extended coverage vector over all C(n,2) pair ids, holding the pairs
//! `w` equalizes plus every pair containing `w`. A set `S` is a
//! distance-equalizer set exactly when the OR of its members' vectors is
//! all-ones, since the defining condition only quantifies over pairs
//! with both endpoints outside `S`.

use crate::bits::Bitset;
use crate::equalizer::{pair_coverage, PairIndexer};
use crate::error::{Error, Result};
use crate::graph::{bipartition, DistanceMatrix, Graph, VertexSet};
use std::time::{Duration, Instant};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    SubsetEnumeration,
    BipartiteSeeded,
    Auto,
}

impl Strategy {
    pub fn as_str(&self) -> &'static str {
        match self {
            Strategy::SubsetEnumeration => "subset_enumeration",
            Strategy::BipartiteSeeded => "bipartite_seeded",
            Strategy::Auto => "auto",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LowerReason {
    Trivial,
    BipartitePartiteSet,
}

/// Certified bracket on the equidistant dimension.
#[derive(Clone, Debug)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
    pub lower_reason: LowerReason,
    pub upper_witness: VertexSet,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub millis: u64,
}

/// An optimal distance-equalizer set together with how it was found.
#[derive(Clone, Debug)]
pub struct Solution {
    pub xi: usize,
    pub basis: VertexSet,
    pub strategy: Strategy,
    pub stats: SearchStats,
}

/// min(|A|,|B|) for bipartite graphs (any distance-equalizer set must
/// contain a full partite side); the trivial 1 otherwise.
pub fn lower_bound(g: &Graph, _d: &DistanceMatrix) -> (usize, LowerReason) {
    let bip = bipartition(g);
    if bip.exists {
        (bip.side_a.len(), LowerReason::BipartitePartiteSet)
    } else {
        (1, LowerReason::Trivial)
    }
}

/// Greedy max-coverage witness: repeatedly take the vertex covering the
/// most still-uncovered pairs, ties broken by smallest internal index.
pub fn greedy_upper_bound(g: &Graph, d: &DistanceMatrix) -> VertexSet {
    let cover = extended_coverage(d);
    let candidates: Vec<u32> = (0..g.order() as u32).collect();
    let base = Bitset::new(cover.n_pairs);
    VertexSet::from_indices(greedy_cover(&cover, &candidates, &base))
}

pub fn bounds(g: &Graph, d: &DistanceMatrix) -> Bounds {
    let (lower, lower_reason) = lower_bound(g, d);
    let upper_witness = greedy_upper_bound(g, d);
    Bounds {
        lower,
        upper: upper_witness.len(),
        lower_reason,
        upper_witness,
    }
}

/// Exact equidistant dimension. `Auto` picks the bipartite-seeded search
/// on bipartite graphs and cardinality-level subset enumeration
/// otherwise.
pub fn solve_exact(
    g: &Graph,
    d: &DistanceMatrix,
    strategy: Strategy,
    budget: Duration,
) -> Result<Solution> {
    let start = Instant::now();
    let deadline = start + budget;
    let resolved = match strategy {
        Strategy::Auto => {
            if bipartition(g).exists {
                Strategy::BipartiteSeeded
            } else {
                Strategy::SubsetEnumeration
            }
        }
        s => s,
    };
    let mut solution = match resolved {
        Strategy::SubsetEnumeration => enumeration(g, d, deadline)?,
        Strategy::BipartiteSeeded => seeded(g, d, deadline)?,
        Strategy::Auto => unreachable!(),
    };
    solution.stats.millis = start.elapsed().as_millis() as u64;
    Ok(solution)
}

/// Minimum distance-equalizer set containing all of `forced`.
pub fn solve_with_forced(
    g: &Graph,
    d: &DistanceMatrix,
    forced: &VertexSet,
    budget: Duration,
) -> Result<Solution> {
    let start = Instant::now();
    let deadline = start + budget;
    let cover = extended_coverage(d);
    match augment(g, &cover, forced, deadline, None)? {
        Some((basis, nodes)) => Ok(Solution {
            xi: basis.len(),
            basis,
            strategy: Strategy::SubsetEnumeration,
            stats: SearchStats {
                nodes,
                millis: start.elapsed().as_millis() as u64,
            },
        }),
        None => unreachable!("uncapped augmentation always finds the greedy completion"),
    }
}

// ---------------------------------------------------------------------
// strategies

fn enumeration(g: &Graph, d: &DistanceMatrix, deadline: Instant) -> Result<Solution> {
    let cover = extended_coverage(d);
    let (lower, lower_reason) = lower_bound(g, d);
    let candidates: Vec<u32> = (0..g.order() as u32).collect();
    let empty = Bitset::new(cover.n_pairs);
    let witness = greedy_cover(&cover, &candidates, &empty);
    let upper = witness.len();
    let mut search = CoverSearch::new(&cover, candidates, &empty, deadline);
    for k in lower..=upper {
        match search.find(k) {
            Ok(Some(set)) => {
                return Ok(Solution {
                    xi: k,
                    basis: VertexSet::from_indices(set),
                    strategy: Strategy::SubsetEnumeration,
                    stats: SearchStats {
                        nodes: search.nodes,
                        millis: 0,
                    },
                });
            }
            Ok(None) => {}
            Err(TimedOut) => {
                return Err(Error::Timeout {
                    bounds: Box::new(Bounds {
                        // levels below k are exhausted
                        lower: lower.max(k),
                        upper,
                        lower_reason,
                        upper_witness: VertexSet::from_indices(witness),
                    }),
                });
            }
        }
    }
    unreachable!("the greedy witness guarantees feasibility at the upper bound")
}

fn seeded(g: &Graph, d: &DistanceMatrix, deadline: Instant) -> Result<Solution> {
    let bip = bipartition(g);
    if !bip.exists {
        return Err(Error::NotBipartite);
    }
    let cover = extended_coverage(d);
    let mut nodes = 0u64;
    let mut best: Option<VertexSet> = None;

    for side in [&bip.side_a, &bip.side_b] {
        // a side larger than the current best cannot match it even with T = ∅;
        // an equal-sized completion still competes on the lexicographic tie-break
        let cap = match &best {
            Some(b) if side.len() > b.len() => continue,
            Some(b) => Some(b.len() - side.len()),
            None => None,
        };
        match augment_inner(g, &cover, side, deadline, cap) {
            Ok(Some((basis, n))) => {
                nodes += n;
                let better = match &best {
                    Some(b) => (basis.len(), basis.as_slice()) < (b.len(), b.as_slice()),
                    None => true,
                };
                if better {
                    best = Some(basis);
                }
            }
            Ok(None) => {}
            Err(TimedOut) => {
                let (lower, lower_reason) = lower_bound(g, d);
                let candidates: Vec<u32> = (0..g.order() as u32).collect();
                let empty = Bitset::new(cover.n_pairs);
                let greedy = VertexSet::from_indices(greedy_cover(&cover, &candidates, &empty));
                let upper_witness = match &best {
                    Some(b) if b.len() <= greedy.len() => b.clone(),
                    _ => greedy,
                };
                return Err(Error::Timeout {
                    bounds: Box::new(Bounds {
                        lower,
                        upper: upper_witness.len(),
                        lower_reason,
                        upper_witness,
                    }),
                });
            }
        }
    }
    let basis = best.expect("at least one partite side admits a completion");
    Ok(Solution {
        xi: basis.len(),
        basis,
        strategy: Strategy::BipartiteSeeded,
        stats: SearchStats { nodes, millis: 0 },
    })
}

fn augment(
    g: &Graph,
    cover: &ExtendedCoverage,
    forced: &VertexSet,
    deadline: Instant,
    cap: Option<usize>,
) -> Result<Option<(VertexSet, u64)>> {
    match augment_inner(g, cover, forced, deadline, cap) {
        Ok(v) => Ok(v),
        Err(TimedOut) => {
            let candidates: Vec<u32> = (0..g.order() as u32)
                .filter(|&v| !forced.contains(v))
                .collect();
            let base = or_all(cover, forced);
            let aug = greedy_cover(cover, &candidates, &base);
            let upper_witness = forced.union(&VertexSet::from_indices(aug));
            Err(Error::Timeout {
                bounds: Box::new(Bounds {
                    lower: forced.len(),
                    upper: upper_witness.len(),
                    lower_reason: LowerReason::Trivial,
                    upper_witness,
                }),
            })
        }
    }
}

/// Finds the minimum augmentation `T` of `forced` so `forced ∪ T` covers
/// all pairs, trying sizes 0, 1, 2, ... If `cap` is given, sizes up to
/// and including `cap` are tried.
fn augment_inner(
    g: &Graph,
    cover: &ExtendedCoverage,
    forced: &VertexSet,
    deadline: Instant,
    cap: Option<usize>,
) -> std::result::Result<Option<(VertexSet, u64)>, TimedOut> {
    let candidates: Vec<u32> = (0..g.order() as u32)
        .filter(|&v| !forced.contains(v))
        .collect();
    let base = or_all(cover, forced);
    let greedy = greedy_cover(cover, &candidates, &base);
    let t_max = match cap {
        Some(c) => c.min(greedy.len()),
        None => greedy.len(),
    };
    let mut search = CoverSearch::new(cover, candidates, &base, deadline);
    for t in 0..=t_max {
        if let Some(aug) = search.find(t)? {
            let basis = forced.union(&VertexSet::from_indices(aug));
            return Ok(Some((basis, search.nodes)));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------
// bit machinery

pub(crate) struct ExtendedCoverage {
    pub n_pairs: usize,
    pub per_vertex: Vec<Bitset>,
}

/// Equalized pairs of each vertex, OR all pairs containing it.
pub(crate) fn extended_coverage(d: &DistanceMatrix) -> ExtendedCoverage {
    let cov = pair_coverage(d);
    let n = d.order();
    let indexer = PairIndexer::new(n);
    let mut per_vertex = Vec::with_capacity(n);
    for w in 0..n as u32 {
        let mut bits = cov.bits_of(w).clone();
        for v in 0..n as u32 {
            if v != w {
                bits.set(indexer.id(w, v));
            }
        }
        per_vertex.push(bits);
    }
    ExtendedCoverage {
        n_pairs: indexer.count(),
        per_vertex,
    }
}

fn or_all(cover: &ExtendedCoverage, set: &VertexSet) -> Bitset {
    let mut acc = Bitset::new(cover.n_pairs);
    for v in set.iter() {
        acc.union_with(&cover.per_vertex[v as usize]);
    }
    acc
}

fn greedy_cover(cover: &ExtendedCoverage, candidates: &[u32], base: &Bitset) -> Vec<u32> {
    let mut acc = base.clone();
    let mut chosen = Vec::new();
    while !acc.is_full() {
        let mut best_v = None;
        let mut best_gain = 0usize;
        for &v in candidates {
            if chosen.contains(&v) {
                continue;
            }
            let gain = cover.per_vertex[v as usize].count_ones_not_in(&acc);
            if gain > best_gain {
                best_gain = gain;
                best_v = Some(v);
            }
        }
        let v = best_v.expect("an uncovered pair always has an endpoint with positive gain");
        acc.union_with(&cover.per_vertex[v as usize]);
        chosen.push(v);
    }
    chosen.sort_unstable();
    chosen
}

struct TimedOut;

/// Depth-first search for a fixed-cardinality cover over a static
/// candidate order (descending coverage popcount, ties by index).
/// Prunes a node when even the whole remaining suffix cannot finish, or
/// when the popcount sum of the largest `slots` remaining vectors falls
/// short of the uncovered count.
struct CoverSearch<'a> {
    cover: &'a ExtendedCoverage,
    order: Vec<u32>,
    suffix_union: Vec<Bitset>,
    pop_prefix: Vec<usize>,
    acc_stack: Vec<Bitset>,
    chosen: Vec<u32>,
    base: Bitset,
    nodes: u64,
    deadline: Instant,
}

impl<'a> CoverSearch<'a> {
    fn new(
        cover: &'a ExtendedCoverage,
        mut candidates: Vec<u32>,
        base: &Bitset,
        deadline: Instant,
    ) -> Self {
        candidates.sort_by_key(|&v| {
            (
                std::cmp::Reverse(cover.per_vertex[v as usize].count_ones()),
                v,
            )
        });
        let m = candidates.len();
        let mut suffix_union = vec![Bitset::new(cover.n_pairs); m + 1];
        for i in (0..m).rev() {
            let mut u = suffix_union[i + 1].clone();
            u.union_with(&cover.per_vertex[candidates[i] as usize]);
            suffix_union[i] = u;
        }
        let mut pop_prefix = vec![0usize; m + 1];
        for i in 0..m {
            pop_prefix[i + 1] =
                pop_prefix[i] + cover.per_vertex[candidates[i] as usize].count_ones();
        }
        CoverSearch {
            cover,
            order: candidates,
            suffix_union,
            pop_prefix,
            acc_stack: Vec::new(),
            chosen: Vec::new(),
            base: base.clone(),
            nodes: 0,
            deadline,
        }
    }

    /// Lexicographically earliest (in search order) cover of exactly `k`
    /// extra vertices, or None when cardinality `k` is exhausted.
    fn find(&mut self, k: usize) -> std::result::Result<Option<Vec<u32>>, TimedOut> {
        while self.acc_stack.len() < k + 1 {
            self.acc_stack.push(Bitset::new(self.cover.n_pairs));
        }
        self.acc_stack[0].copy_from(&self.base);
        self.chosen.clear();
        if self.dfs(0, k, 0)? {
            Ok(Some(self.chosen.clone()))
        } else {
            Ok(None)
        }
    }

    fn dfs(&mut self, pos: usize, slots: usize, depth: usize) -> std::result::Result<bool, TimedOut> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && Instant::now() >= self.deadline {
            return Err(TimedOut);
        }
        if self.acc_stack[depth].is_full() {
            return Ok(true);
        }
        if slots == 0 || pos >= self.order.len() {
            return Ok(false);
        }
        // even taking the whole suffix cannot finish: no sibling can either
        if !self.acc_stack[depth].union_is_full(&self.suffix_union[pos]) {
            return Ok(false);
        }
        // popcount bound over the `slots` largest remaining vectors
        let window_end = (pos + slots).min(self.order.len());
        let available = self.pop_prefix[window_end] - self.pop_prefix[pos];
        if self.acc_stack[depth].count_ones() + available < self.cover.n_pairs {
            return Ok(false);
        }
        let v = self.order[pos];
        {
            let (head, tail) = self.acc_stack.split_at_mut(depth + 1);
            tail[0].copy_from(&head[depth]);
            tail[0].union_with(&self.cover.per_vertex[v as usize]);
        }
        self.chosen.push(v);
        if self.dfs(pos + 1, slots - 1, depth + 1)? {
            return Ok(true);
        }
        self.chosen.pop();
        self.dfs(pos + 1, slots, depth)
    }
}
