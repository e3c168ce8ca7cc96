//! Bisectors, pair-coverage structures, and verification of
//! distance-equalizer sets.
//!
//! A set `S` is a distance-equalizer set when every pair of vertices
//! `{x,y}` outside `S` has some `w` in `S` with `d(x,w) = d(y,w)`.
//! Verification here walks the pairs directly against the distance
//! matrix; the solver keeps its own bit-packed coverage, so the two
//! routes stay independent.

use crate::bits::Bitset;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Label, VertexSet};

/// Canonical dense indexing of the C(n,2) unordered vertex pairs:
/// `(0,1), (0,2), ..., (0,n-1), (1,2), ...` in row-major order, which is
/// also lexicographic order on `(x, y)` with `x < y`.
#[derive(Clone, Copy, Debug)]
pub struct PairIndexer {
    n: usize,
}

/// One unordered pair with its dense index.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PairIndex {
    pub x: u32,
    pub y: u32,
    pub id: usize,
}

impl PairIndexer {
    pub fn new(n: usize) -> Self {
        PairIndexer { n }
    }

    pub fn count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    #[inline]
    pub fn id(&self, x: u32, y: u32) -> usize {
        debug_assert!(x != y);
        let (x, y) = (x.min(y) as usize, x.max(y) as usize);
        x * (2 * self.n - x - 1) / 2 + (y - x - 1)
    }

    pub fn pair(&self, id: usize) -> PairIndex {
        debug_assert!(id < self.count());
        let mut x = 0usize;
        let mut row_start = 0usize;
        loop {
            let row_len = self.n - x - 1;
            if id < row_start + row_len {
                let y = x + 1 + (id - row_start);
                return PairIndex {
                    x: x as u32,
                    y: y as u32,
                    id,
                };
            }
            row_start += row_len;
            x += 1;
        }
    }
}

/// For each vertex `w`, the pairs `{x,y}` with `x,y != w` that `w`
/// equalizes, bit-indexed by `PairIndexer`.
pub struct PairCoverage {
    indexer: PairIndexer,
    per_vertex: Vec<Bitset>,
}

impl PairCoverage {
    pub fn indexer(&self) -> &PairIndexer {
        &self.indexer
    }

    pub fn covers(&self, w: u32, pair: usize) -> bool {
        self.per_vertex[w as usize].get(pair)
    }

    pub fn pairs_of(&self, w: u32) -> impl Iterator<Item = PairIndex> + '_ {
        self.per_vertex[w as usize]
            .ones()
            .map(|id| self.indexer.pair(id))
    }

    pub(crate) fn bits_of(&self, w: u32) -> &Bitset {
        &self.per_vertex[w as usize]
    }
}

/// Builds the per-vertex equalized-pair sets by bucketing vertices by
/// distance from each `w`.
pub fn pair_coverage(d: &DistanceMatrix) -> PairCoverage {
    let n = d.order();
    let indexer = PairIndexer::new(n);
    let mut per_vertex = Vec::with_capacity(n);
    let mut buckets: Vec<Vec<u32>> = Vec::new();
    for w in 0..n as u32 {
        let mut bits = Bitset::new(indexer.count());
        for b in &mut buckets {
            b.clear();
        }
        for v in 0..n as u32 {
            if v == w {
                continue;
            }
            let dist = d.get(w, v) as usize;
            if dist >= buckets.len() {
                buckets.resize(dist + 1, Vec::new());
            }
            buckets[dist].push(v);
        }
        for bucket in &buckets {
            for (i, &x) in bucket.iter().enumerate() {
                for &y in &bucket[i + 1..] {
                    bits.set(indexer.id(x, y));
                }
            }
        }
        per_vertex.push(bits);
    }
    PairCoverage { indexer, per_vertex }
}

/// Outcome of checking a candidate distance-equalizer set.
#[derive(Clone, Debug)]
pub struct VerificationResult {
    pub is_equalizer: bool,
    /// Lexicographically first pair outside the set with no equalizing
    /// member, present iff `is_equalizer` is false.
    pub uncovered_pair: Option<PairIndex>,
}

/// All vertices equidistant from `v` and `w`.
pub fn bisector(d: &DistanceMatrix, v: u32, w: u32) -> Result<VertexSet> {
    if v == w {
        return Err(Error::Parameter(
            "bisector requires two distinct vertices".into(),
        ));
    }
    Ok((0..d.order() as u32)
        .filter(|&x| d.get(v, x) == d.get(w, x))
        .collect())
}

/// Checks the defining property of a distance-equalizer set directly
/// against the distance matrix. On failure reports the lexicographically
/// first uncovered pair (by internal index).
pub fn is_equalizer_set(d: &DistanceMatrix, s: &VertexSet) -> VerificationResult {
    let n = d.order() as u32;
    let indexer = PairIndexer::new(n as usize);
    let outside: Vec<u32> = (0..n).filter(|&v| !s.contains(v)).collect();
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i + 1..] {
            let equalized = s.iter().any(|w| d.get(x, w) == d.get(y, w));
            if !equalized {
                return VerificationResult {
                    is_equalizer: false,
                    uncovered_pair: Some(PairIndex {
                        x,
                        y,
                        id: indexer.id(x, y),
                    }),
                };
            }
        }
    }
    VerificationResult {
        is_equalizer: true,
        uncovered_pair: None,
    }
}

/// Members of `s` equidistant from `x` and `y`, i.e. `s` intersected
/// with the bisector of the pair. Diagnostic companion to
/// `is_equalizer_set`.
pub fn equalized_by(d: &DistanceMatrix, s: &VertexSet, x: u32, y: u32) -> Result<VertexSet> {
    if x == y {
        return Err(Error::Parameter(
            "equalized_by requires two distinct vertices".into(),
        ));
    }
    if s.contains(x) || s.contains(y) {
        return Err(Error::Parameter(
            "equalized_by requires both vertices outside the set".into(),
        ));
    }
    Ok(s.iter().filter(|&w| d.get(x, w) == d.get(y, w)).collect())
}

/// Helpers for the prism graphs C_n x K_2, in paper coordinates
/// x in 1..=n, y in {1,2}. Used by the lemma property harnesses.
pub mod prism {
    use super::*;

    /// Reduces k modulo n into the label range {1,...,n} (residue 0 maps
    /// to n).
    pub fn mod1(k: i64, n: u32) -> u32 {
        let r = k.rem_euclid(n as i64) as u32;
        if r == 0 {
            n
        } else {
            r
        }
    }

    /// Cycle distance between labels a, b in {1,...,n}.
    pub fn cycle_distance(a: u32, b: u32, n: u32) -> u32 {
        let diff = a.abs_diff(b);
        diff.min(n - diff)
    }

    /// Side A: labels (x, y) with x + y even.
    pub fn side_a(n: u32) -> Vec<Label> {
        (1..=n)
            .flat_map(|x| (1..=2).map(move |y| Label::pair(x, y)))
            .filter(|l| (l.0[0] + l.0[1]) % 2 == 0)
            .collect()
    }

    /// Side B: labels (x, y) with x + y odd.
    pub fn side_b(n: u32) -> Vec<Label> {
        (1..=n)
            .flat_map(|x| (1..=2).map(move |y| Label::pair(x, y)))
            .filter(|l| (l.0[0] + l.0[1]) % 2 == 1)
            .collect()
    }

    /// The unordered pairs {v,w} of side-A vertices at cycle distance
    /// exactly 3, each oriented so that x_w = x_v + 3 (mod n).
    pub fn q_pairs(n: u32) -> Vec<(Label, Label)> {
        assert!(n >= 6, "q_pairs needs n >= 6 so cycle distance 3 exists");
        let a_vertex = |x: u32| {
            let y = if x.is_multiple_of(2) { 2 } else { 1 };
            Label::pair(x, y)
        };
        let mut seen = std::collections::HashSet::new();
        let mut pairs = Vec::new();
        for x in 1..=n {
            let v = a_vertex(x);
            let w = a_vertex(mod1(x as i64 + 3, n));
            let mut key = [v.clone(), w.clone()];
            key.sort();
            if seen.insert(key) {
                pairs.push((v, w));
            }
        }
        pairs
    }

    /// The shifted pair (v_l, w_l) = ((x_v - 2l, y_v), (x_w + 2l, y_w)),
    /// with cycle labels reduced into {1,...,n}. `(v, w)` must be
    /// oriented as produced by `q_pairs`.
    pub fn q_shift(v: &Label, w: &Label, l: u32, n: u32) -> (Label, Label) {
        let vs = Label::pair(mod1(v.0[0] as i64 - 2 * l as i64, n), v.0[1]);
        let ws = Label::pair(mod1(w.0[0] as i64 + 2 * l as i64, n), w.0[1]);
        (vs, ws)
    }
}
