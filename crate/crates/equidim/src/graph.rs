//! Graph representation, family generators, Cartesian products, BFS
//! distances, and bipartition detection.
//!
//! Vertices carry two identities: an internal 0-based index (used
//! everywhere in the machinery) and a 1-based coordinate label matching
//! the usual notation for the graph families (`(i,j)` for products,
//! bit tuples for hypercubes). All user-facing output speaks labels.

use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

/// Per-vertex coordinate label: a tuple of small integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Label(pub Vec<u32>);

impl Label {
    pub fn single(v: u32) -> Self {
        Label(vec![v])
    }

    pub fn pair(x: u32, y: u32) -> Self {
        Label(vec![x, y])
    }

    /// Parses `3`, `(1,2)`, or `1,2`.
    pub fn parse(s: &str) -> Result<Label> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.is_empty() {
            return Err(Error::Parameter(format!("empty label in {s:?}")));
        }
        let coords = trimmed
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parameter(format!("bad label coordinate in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Label(coords))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            write!(f, "(")?;
            for (i, c) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")
        }
    }
}

/// A sorted set of internal vertex indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct VertexSet {
    indices: Vec<u32>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet::default()
    }

    pub fn from_indices(mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        VertexSet { indices }
    }

    pub fn contains(&self, v: u32) -> bool {
        self.indices.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.indices.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.indices
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.indices.clone();
        v.extend_from_slice(&other.indices);
        VertexSet::from_indices(v)
    }

    pub fn insert(&mut self, v: u32) {
        if let Err(pos) = self.indices.binary_search(&v) {
            self.indices.insert(pos, v);
        }
    }

    pub fn remove(&mut self, v: u32) {
        if let Ok(pos) = self.indices.binary_search(&v) {
            self.indices.remove(pos);
        }
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        VertexSet::from_indices(iter.into_iter().collect())
    }
}

/// Immutable simple connected undirected graph with labeled vertices.
#[derive(Clone, Debug)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
    labels: Vec<Label>,
    label_index: HashMap<Label, u32>,
    family_tag: Option<String>,
    edge_count: usize,
}

impl Graph {
    /// Builds and validates a graph from labels and an edge list over
    /// internal indices. Rejects self-loops, duplicate edges, duplicate
    /// labels, and disconnected inputs.
    pub fn from_edges(
        labels: Vec<Label>,
        edges: &[(u32, u32)],
        family_tag: Option<String>,
    ) -> Result<Graph> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Parameter("graph must have at least one vertex".into()));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::Parameter(format!(
                    "edge ({u},{v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Parameter(format!("self-loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::Parameter(format!("duplicate edge ({u},{v})")));
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let mut label_index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if label_index.insert(label.clone(), i as u32).is_some() {
                return Err(Error::Parameter(format!("duplicate label {label}")));
            }
        }
        let g = Graph {
            adjacency,
            labels,
            label_index,
            family_tag,
            edge_count: edges.len(),
        };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: u32) -> &Label {
        &self.labels[v as usize]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn family_tag(&self) -> Option<&str> {
        self.family_tag.as_deref()
    }

    pub fn index_of(&self, label: &Label) -> Result<u32> {
        self.label_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Resolves a set of labels to internal indices.
    pub fn vertex_set_of(&self, labels: &[Label]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| self.index_of(l))
            .collect::<Result<Vec<u32>>>()
            .map(VertexSet::from_indices)
    }

    /// Labels of a vertex set, in index order.
    pub fn labels_of(&self, set: &VertexSet) -> Vec<Label> {
        set.iter().map(|v| self.label(v).clone()).collect()
    }

    fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0u32);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }
}

/// Graph family selector for the generators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Hypercube,
}

/// Standard graph of the given family with 1-based labels (bit tuples for
/// hypercubes, most significant bit first).
pub fn generate(family: Family, params: &[u32]) -> Result<Graph> {
    let one = |name: &str| -> Result<u32> {
        match params {
            [n] => Ok(*n),
            _ => Err(Error::Parameter(format!(
                "{name} takes exactly one parameter, got {}",
                params.len()
            ))),
        }
    };
    match family {
        Family::Path => path(one("path")?),
        Family::Cycle => cycle(one("cycle")?),
        Family::Complete => complete(one("complete")?),
        Family::Hypercube => hypercube(one("hypercube")?),
    }
}

pub fn path(n: u32) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Parameter("path requires n >= 1".into()));
    }
    let labels = (1..=n).map(Label::single).collect();
    let edges: Vec<(u32, u32)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(labels, &edges, Some(format!("path {n}")))
}

pub fn cycle(n: u32) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter("cycle requires n >= 3".into()));
    }
    let labels = (1..=n).map(Label::single).collect();
    let mut edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(labels, &edges, Some(format!("cycle {n}")))
}

pub fn complete(n: u32) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Parameter("complete requires n >= 1".into()));
    }
    let labels = (1..=n).map(Label::single).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::from_edges(labels, &edges, Some(format!("complete {n}")))
}

/// Hypercube on n-bit strings; vertices adjacent iff they differ in one
/// bit. Vertex index equals the bit string read as an integer with bit 1
/// as the most significant bit.
pub fn hypercube(n: u32) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Parameter("hypercube requires n >= 1".into()));
    }
    if n > 20 {
        return Err(Error::Parameter("hypercube dimension too large".into()));
    }
    let order = 1u32 << n;
    let labels = (0..order)
        .map(|v| Label((0..n).map(|b| (v >> (n - 1 - b)) & 1).collect()))
        .collect();
    let mut edges = Vec::new();
    for v in 0..order {
        for b in 0..n {
            let u = v ^ (1 << b);
            if v < u {
                edges.push((v, u));
            }
        }
    }
    Graph::from_edges(labels, &edges, Some(format!("hypercube {n}")))
}

/// Cartesian product: `(g,h) ~ (g',h')` iff one coordinate is equal and
/// the other moves along an edge of its factor. Labels are the
/// concatenated factor labels, so products of singly-labeled factors
/// get the usual `(x_v, y_v)` coordinates.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let gn = g.order() as u32;
    let hn = h.order() as u32;
    let idx = |i: u32, j: u32| i * hn + j;
    let mut labels = Vec::with_capacity((gn * hn) as usize);
    for i in 0..gn {
        for j in 0..hn {
            let mut coords = g.label(i).0.clone();
            coords.extend_from_slice(&h.label(j).0);
            labels.push(Label(coords));
        }
    }
    let mut edges = Vec::new();
    for i in 0..gn {
        for j in 0..hn {
            for &j2 in h.neighbors(j) {
                if j < j2 {
                    edges.push((idx(i, j), idx(i, j2)));
                }
            }
            for &i2 in g.neighbors(i) {
                if i < i2 {
                    edges.push((idx(i, j), idx(i2, j)));
                }
            }
        }
    }
    let tag = match (g.family_tag(), h.family_tag()) {
        (Some(a), Some(b)) => Some(format!("({a}) x ({b})")),
        _ => None,
    };
    Graph::from_edges(labels, &edges, tag)
}

/// All-pairs hop distances.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: u32, v: u32) -> u32 {
        self.entries[u as usize * self.n + v as usize]
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

/// BFS from every source. Rows are independent, so they run in parallel;
/// each row is identical to its sequential computation.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut entries = vec![0u32; n * n];
    entries
        .par_chunks_mut(n)
        .enumerate()
        .for_each(|(s, row)| bfs_row(g, s as u32, row));
    DistanceMatrix { n, entries }
}

fn bfs_row(g: &Graph, source: u32, row: &mut [u32]) {
    const UNSEEN: u32 = u32::MAX;
    row.fill(UNSEEN);
    row[source as usize] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = row[u as usize];
        for &v in g.neighbors(u) {
            if row[v as usize] == UNSEEN {
                row[v as usize] = du + 1;
                queue.push_back(v);
            }
        }
    }
    debug_assert!(row.iter().all(|&d| d != UNSEEN));
}

/// Two-coloring of a bipartite graph. `side_a` is the smaller side; on a
/// tie, the side containing internal vertex 0.
#[derive(Clone, Debug)]
pub struct Bipartition {
    pub exists: bool,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    color[0] = 0;
    queue.push_back(0u32);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if color[v as usize] == u8::MAX {
                color[v as usize] = 1 - color[u as usize];
                queue.push_back(v);
            } else if color[v as usize] == color[u as usize] {
                return Bipartition {
                    exists: false,
                    side_a: VertexSet::new(),
                    side_b: VertexSet::new(),
                };
            }
        }
    }
    let zero: VertexSet = (0..n as u32).filter(|&v| color[v as usize] == 0).collect();
    let one: VertexSet = (0..n as u32).filter(|&v| color[v as usize] == 1).collect();
    let (side_a, side_b) = if one.len() < zero.len() {
        (one, zero)
    } else {
        (zero, one)
    };
    Bipartition {
        exists: true,
        side_a,
        side_b,
    }
}

/// Writes the text graph format: `v e` header, one `# label i <tuple>`
/// line per vertex, then `e` edge lines with 0-based endpoints.
pub fn write_graph<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "{} {}", g.order(), g.edge_count())?;
    for (i, label) in g.labels().iter().enumerate() {
        writeln!(out, "# label {i} {label}")?;
    }
    for u in 0..g.order() as u32 {
        for &v in g.neighbors(u) {
            if u < v {
                writeln!(out, "{u} {v}")?;
            }
        }
    }
    Ok(())
}

pub fn save_graph(g: &Graph, path: &Path) -> Result<()> {
    let mut file = std::fs::File::create(path)?;
    write_graph(g, &mut file)
}

/// Parses the text graph format, validating simplicity, symmetry, and
/// connectivity. Vertices without a label comment default to the 1-based
/// index label.
pub fn read_graph<R: std::io::Read>(input: R) -> Result<Graph> {
    let reader = BufReader::new(input);
    let mut lines = reader.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty file".into()))??;
    let mut parts = header.split_whitespace();
    let v: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Format("header must be `v e`".into()))?;
    let e: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Format("header must be `v e`".into()))?;
    if parts.next().is_some() {
        return Err(Error::Format("header must be exactly `v e`".into()));
    }
    let mut labels: Vec<Option<Label>> = vec![None; v];
    let mut edges = Vec::with_capacity(e);
    for line in lines {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(spec) = rest.strip_prefix("label ") {
                let mut it = spec.split_whitespace();
                let i: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| Error::Format(format!("bad label line: {line}")))?;
                let tuple = it
                    .next()
                    .ok_or_else(|| Error::Format(format!("bad label line: {line}")))?;
                if i >= v {
                    return Err(Error::Format(format!("label index {i} out of range")));
                }
                labels[i] = Some(Label::parse(tuple)?);
            }
            continue;
        }
        let mut it = line.split_whitespace();
        let a: u32 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Format(format!("bad edge line: {line}")))?;
        let b: u32 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Format(format!("bad edge line: {line}")))?;
        if it.next().is_some() {
            return Err(Error::Format(format!("bad edge line: {line}")));
        }
        edges.push((a, b));
    }
    if edges.len() != e {
        return Err(Error::Format(format!(
            "header declares {e} edges but file has {}",
            edges.len()
        )));
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.unwrap_or_else(|| Label::single(i as u32 + 1)))
        .collect();
    Graph::from_edges(labels, &edges, None)
}

pub fn load_graph(path: &Path) -> Result<Graph> {
    read_graph(std::fs::File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_3_shape() {
        let g = path(3).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 2);
        let one = g.index_of(&Label::single(1)).unwrap();
        let two = g.index_of(&Label::single(2)).unwrap();
        let three = g.index_of(&Label::single(3)).unwrap();
        assert!(g.has_edge(one, two));
        assert!(g.has_edge(two, three));
        assert!(!g.has_edge(one, three));
    }

    #[test]
    fn cycle_3_is_k3() {
        let c = cycle(3).unwrap();
        assert_eq!(c.order(), 3);
        assert_eq!(c.edge_count(), 3);
    }

    #[test]
    fn hypercube_3_shape() {
        let q = hypercube(3).unwrap();
        assert_eq!(q.order(), 8);
        assert_eq!(q.edge_count(), 12);
        for u in 0..8u32 {
            for v in 0..8u32 {
                let hamming = (u ^ v).count_ones();
                assert_eq!(g_adjacent(&q, u, v), hamming == 1);
            }
        }
    }

    fn g_adjacent(g: &Graph, u: u32, v: u32) -> bool {
        u != v && g.has_edge(u, v)
    }

    #[test]
    fn invalid_parameters() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(hypercube(0).is_err());
    }

    #[test]
    fn generate_dispatch() {
        let g = generate(Family::Hypercube, &[3]).unwrap();
        assert_eq!((g.order(), g.edge_count()), (8, 12));
        let g = generate(Family::Path, &[4]).unwrap();
        assert_eq!((g.order(), g.edge_count()), (4, 3));
        assert!(generate(Family::Cycle, &[]).is_err());
        assert!(generate(Family::Complete, &[2, 3]).is_err());
    }

    #[test]
    fn k2_square_k2_is_c4() {
        let k2 = complete(2).unwrap();
        let p = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.edge_count(), 4);
        // every vertex has degree 2 and the graph is connected: a 4-cycle
        for v in 0..4u32 {
            assert_eq!(p.neighbors(v).len(), 2);
        }
    }

    #[test]
    fn p2_square_p2_is_c4() {
        let p2 = path(2).unwrap();
        let p = cartesian_product(&p2, &p2).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(p.edge_count(), 4);
    }

    #[test]
    fn c6_square_k2_counts() {
        let g = cartesian_product(&cycle(6).unwrap(), &complete(2).unwrap()).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.edge_count(), 18);
    }

    #[test]
    fn distances_diagonal_and_cycle() {
        let c6 = cycle(6).unwrap();
        let d = all_pairs_distances(&c6);
        for v in 0..6u32 {
            assert_eq!(d.get(v, v), 0);
        }
        let one = c6.index_of(&Label::single(1)).unwrap();
        let four = c6.index_of(&Label::single(4)).unwrap();
        assert_eq!(d.get(one, four), 3);
    }

    #[test]
    fn hypercube_antipodal_distance() {
        let q4 = hypercube(4).unwrap();
        let d = all_pairs_distances(&q4);
        for v in 0..16u32 {
            assert_eq!(d.get(v, v ^ 0b1111), 4);
        }
    }

    #[test]
    fn parallel_bfs_matches_sequential() {
        let g = cartesian_product(&cycle(9).unwrap(), &path(4).unwrap()).unwrap();
        let d = all_pairs_distances(&g);
        let n = g.order();
        let mut row = vec![0u32; n];
        for s in 0..n as u32 {
            bfs_row(&g, s, &mut row);
            for v in 0..n as u32 {
                assert_eq!(d.get(s, v), row[v as usize]);
            }
        }
    }

    #[test]
    fn distance_matrix_is_a_metric() {
        for g in [
            cartesian_product(&path(4).unwrap(), &cycle(5).unwrap()).unwrap(),
            hypercube(4).unwrap(),
            complete(5).unwrap(),
        ] {
            let d = all_pairs_distances(&g);
            let n = g.order() as u32;
            for u in 0..n {
                assert_eq!(d.get(u, u), 0);
                for v in 0..n {
                    assert_eq!(d.get(u, v), d.get(v, u));
                    if u != v {
                        assert!(d.get(u, v) >= 1);
                    }
                    for w in 0..n {
                        assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                    }
                }
            }
        }
    }

    #[test]
    fn adjacency_matches_distance_one() {
        let g = cartesian_product(&path(3).unwrap(), &cycle(5).unwrap()).unwrap();
        let d = all_pairs_distances(&g);
        for u in 0..g.order() as u32 {
            for v in 0..g.order() as u32 {
                if u != v {
                    assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn bipartition_hypercube_halves() {
        for n in 2..=5 {
            let q = hypercube(n).unwrap();
            let b = bipartition(&q);
            assert!(b.exists);
            assert_eq!(b.side_a.len(), 1 << (n - 1));
            assert_eq!(b.side_b.len(), 1 << (n - 1));
        }
    }

    #[test]
    fn bipartition_p3_grid_sides() {
        let p3 = path(3).unwrap();
        let g = cartesian_product(&p3, &p3).unwrap();
        let b = bipartition(&g);
        assert!(b.exists);
        assert_eq!(b.side_a.len(), 4);
        assert_eq!(b.side_b.len(), 5);
    }

    #[test]
    fn bipartition_odd_cycle() {
        let c5 = cycle(5).unwrap();
        let b = bipartition(&c5);
        assert!(!b.exists);
    }

    #[test]
    fn bipartite_parity_remark() {
        // same side <=> even distance, on a few bipartite graphs
        for g in [
            hypercube(4).unwrap(),
            cartesian_product(&path(3).unwrap(), &path(4).unwrap()).unwrap(),
            cartesian_product(&cycle(6).unwrap(), &complete(2).unwrap()).unwrap(),
        ] {
            let b = bipartition(&g);
            assert!(b.exists);
            let d = all_pairs_distances(&g);
            for u in 0..g.order() as u32 {
                for v in 0..g.order() as u32 {
                    if u == v {
                        continue;
                    }
                    let same_side = b.side_a.contains(u) == b.side_a.contains(v);
                    assert_eq!(d.get(u, v).is_multiple_of(2), same_side);
                }
            }
        }
    }

    #[test]
    fn file_round_trip_preserves_labels() {
        let g = cartesian_product(&cycle(6).unwrap(), &complete(2).unwrap()).unwrap();
        let mut buf = Vec::new();
        write_graph(&g, &mut buf).unwrap();
        let g2 = read_graph(&buf[..]).unwrap();
        assert_eq!(g2.order(), g.order());
        assert_eq!(g2.edge_count(), g.edge_count());
        assert_eq!(g2.labels(), g.labels());
        for u in 0..g.order() as u32 {
            assert_eq!(g2.neighbors(u), g.neighbors(u));
        }
    }

    #[test]
    fn loader_rejects_disconnected_and_malformed() {
        assert!(matches!(
            read_graph("4 2\n0 1\n2 3\n".as_bytes()),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            read_graph("2 1\n0 0\n".as_bytes()),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            read_graph("2 2\n0 1\n1 0\n".as_bytes()),
            Err(Error::Parameter(_))
        ));
        assert!(read_graph("".as_bytes()).is_err());
    }

    #[test]
    fn label_parse_display_round_trip() {
        for l in [Label::single(7), Label::pair(1, 2), Label(vec![0, 1, 1, 0])] {
            assert_eq!(Label::parse(&l.to_string()).unwrap(), l);
        }
        assert_eq!(Label::parse("3").unwrap(), Label::single(3));
        assert_eq!(Label::parse("(1,2)").unwrap(), Label::pair(1, 2));
        assert_eq!(Label::parse("1,2").unwrap(), Label::pair(1, 2));
        assert!(Label::parse("()").is_err());
        assert!(Label::parse("(1,x)").is_err());
    }
}
