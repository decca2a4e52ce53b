//! Graphs, sink extensions, and the exact counting primitives built on them.
//!
//! Vertices of a [`SimpleGraph`] are the indices `1..=n`; the sink added by
//! [`SinkedGraph`] is index `0`. Keeping subscripts aligned with chip
//! configurations `c = sum c_i v_i` is worth the slightly unusual base.

use std::collections::BTreeSet;
use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};

/// Default cap on the number of simple cycles reported by
/// [`SimpleGraph::simple_cycles`].
pub const DEFAULT_CYCLE_CAP: usize = 100_000;

/// A simple undirected graph on vertices `1..=n`: no loops, no multiedges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    /// Normalized edge list: each pair `(i, j)` satisfies `i < j` and the
    /// list is sorted. Edge index = position in this list.
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Validates and builds a graph. Rejects loops, duplicate edges and
    /// out-of-range endpoints, each with its own error.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(Error::IndexOutOfRange { index: v, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(SimpleGraph { n, edges })
    }

    /// The path graph `v_1 - v_2 - ... - v_n`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        SimpleGraph::new(n, &edges).expect("path edges are valid")
    }

    /// The cycle graph `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle graph needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        SimpleGraph::new(n, &edges).expect("cycle edges are valid")
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        SimpleGraph::new(n, &edges).expect("complete graph edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalized `(i, j)` pairs with `i < j`, in index order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Position of edge `{a, b}` in the edge list, if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Connectivity over vertices `1..=n`; the empty graph on one vertex is
    /// connected, on zero vertices vacuously so.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// All simple undirected cycles, each reported exactly once up to
    /// rotation and reflection. The canonical form starts at the cycle's
    /// least vertex and takes the lexicographically smaller of the two
    /// traversal directions. Errors out (rather than truncating) if more
    /// than `cap` cycles exist.
    pub fn simple_cycles(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let mut cycles = Vec::new();
        let adjacency: Vec<Vec<usize>> = (0..=self.n).map(|v| self.neighbors(v)).collect();
        // Anchor each cycle at its least vertex s; only vertices > s may
        // appear in the interior, and requiring path[1] < path.last() kills
        // the reflected copy.
        for start in 1..=self.n {
            let mut path = vec![start];
            let mut on_path = vec![false; self.n + 1];
            on_path[start] = true;
            self.cycle_dfs(start, &adjacency, &mut path, &mut on_path, &mut cycles, cap)?;
        }
        cycles.sort();
        Ok(cycles)
    }

    fn cycle_dfs(
        &self,
        start: usize,
        adjacency: &[Vec<usize>],
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        let v = *path.last().unwrap();
        for &u in &adjacency[v] {
            if u == start && path.len() >= 3 {
                if path[1] < *path.last().unwrap() {
                    if cycles.len() >= cap {
                        return Err(Error::CycleCap(cap));
                    }
                    cycles.push(path.clone());
                }
            } else if u > start && !on_path[u] {
                path.push(u);
                on_path[u] = true;
                self.cycle_dfs(start, adjacency, path, on_path, cycles, cap)?;
                on_path[u] = false;
                path.pop();
            }
        }
        Ok(())
    }
}

/// `G` together with a sink vertex `v_0` joined to every vertex of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SinkedGraph {
    base: SimpleGraph,
}

impl SinkedGraph {
    pub fn new(base: SimpleGraph) -> Self {
        SinkedGraph { base }
    }

    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.base.n + 1
    }

    /// `|E| + n`: the base edges plus one sink edge per vertex.
    pub fn edge_count(&self) -> usize {
        self.base.edge_count() + self.base.n
    }

    /// Degree in the extension; `v = 0` is the sink.
    pub fn degree(&self, v: usize) -> usize {
        if v == 0 {
            self.base.n
        } else {
            self.base.degree(v) + 1
        }
    }

    /// The genus `|E•| - |V•| + 1 = |E|` of the extension.
    pub fn genus(&self) -> usize {
        self.base.edge_count()
    }

    /// Number of edges from `v` to the complement of `W` in the extension.
    /// `W` must be a nonempty subset of `1..=n` containing `v`; the sink
    /// always lies outside `W`, so the count is at least 1.
    pub fn cut_degree(&self, v: usize, w: &BTreeSet<usize>) -> Result<usize> {
        if !w.contains(&v) {
            return Err(Error::VertexNotInSubset(v));
        }
        for &x in w {
            if x < 1 || x > self.base.n {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    n: self.base.n,
                });
            }
        }
        let outside = self
            .base
            .neighbors(v)
            .into_iter()
            .filter(|u| !w.contains(u))
            .count();
        Ok(outside + 1)
    }

    /// Bitmask variant used by the subset enumeration in the parking
    /// module: bit `i - 1` of `mask` says whether `v_i` is in `W`.
    pub(crate) fn cut_degree_mask(&self, v: usize, mask: u64) -> usize {
        let outside = self
            .base
            .neighbors(v)
            .into_iter()
            .filter(|&u| mask & (1u64 << (u - 1)) == 0)
            .count();
        outside + 1
    }
}

/// Multigraph on vertices `1..=n`; loops and parallel edges allowed. These
/// arise internally from deletion-contraction and as user-supplied planar
/// duals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multigraph {
    n: usize,
    /// Normalized `(i, j)` with `i <= j`, sorted; repeats encode multiedges.
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(Error::IndexOutOfRange { index: v, n });
                }
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        Ok(Multigraph { n, edges })
    }

    /// `k` parallel edges between two vertices.
    pub fn dipole(k: usize) -> Self {
        Multigraph::new(2, &vec![(1, 2); k]).expect("dipole edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        component_count(self.n, &self.edges)
    }
}

impl From<&SimpleGraph> for Multigraph {
    fn from(g: &SimpleGraph) -> Self {
        Multigraph {
            n: g.n,
            edges: g.edges.clone(),
        }
    }
}

impl From<&SinkedGraph> for Multigraph {
    /// The sink becomes vertex 1 and `v_i` becomes `i + 1`.
    fn from(gs: &SinkedGraph) -> Self {
        let n = gs.base().n;
        let mut edges: Vec<(usize, usize)> = gs
            .base()
            .edges()
            .iter()
            .map(|&(a, b)| (a + 1, b + 1))
            .collect();
        for i in 1..=n {
            edges.push((1, i + 1));
        }
        Multigraph::new(n + 1, &edges).expect("shifted edges are valid")
    }
}

/// Number of components of the graph `(1..=n, edges)` via union-find.
pub(crate) fn component_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components
}

/// An integer chip count per vertex of `1..=n`. Indegree sequences and
/// parking functions both live here; entries may go negative (parking with
/// respect to a non-sink vertex uses `-1`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChipConfig(Vec<i64>);

impl ChipConfig {
    pub fn new(entries: Vec<i64>) -> Self {
        ChipConfig(entries)
    }

    pub fn zero(n: usize) -> Self {
        ChipConfig(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `c_i` for `i` in `1..=n`.
    pub fn get(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// Total degree `sum c_i`.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `c + v_i`.
    pub fn plus_vertex(&self, i: usize) -> Self {
        let mut out = self.0.clone();
        out[i - 1] += 1;
        ChipConfig(out)
    }

    /// `c - (1, ..., 1)`.
    pub fn minus_ones(&self) -> Self {
        ChipConfig(self.0.iter().map(|x| x - 1).collect())
    }

    /// Componentwise `self <= other`.
    pub fn dominated_by(&self, other: &ChipConfig) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for ChipConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

/// Exact spanning-tree count by the matrix-tree theorem: delete the first
/// vertex's row and column from the Laplacian and take a fraction-free
/// (Bareiss) determinant. Loops contribute nothing; parallel edges add
/// multiplicity. Disconnected graphs give 0.
pub fn spanning_tree_count(mg: &Multigraph) -> BigInt {
    let n = mg.vertex_count();
    if n == 0 {
        return BigInt::one();
    }
    // Reduced Laplacian over vertices 2..=n.
    let m = n - 1;
    let mut lap = vec![vec![BigInt::zero(); m]; m];
    for &(a, b) in mg.edges() {
        if a == b {
            continue;
        }
        if a >= 2 {
            lap[a - 2][a - 2] += 1;
        }
        if b >= 2 {
            lap[b - 2][b - 2] += 1;
        }
        if a >= 2 && b >= 2 {
            lap[a - 2][b - 2] -= 1;
            lap[b - 2][a - 2] -= 1;
        }
    }
    bareiss_determinant(lap)
}

/// Spanning trees of a sink extension.
pub fn spanning_tree_count_sinked(gs: &SinkedGraph) -> BigInt {
    spanning_tree_count(&Multigraph::from(gs))
}

/// Fraction-free integer determinant (Bareiss). All divisions are exact.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Brute-force spanning-tree oracle: counts edge subsets of size `n - 1`
/// that connect all vertices. Only for small graphs; used to pin the
/// matrix-tree route in tests and the verify command.
pub fn spanning_tree_count_brute(mg: &Multigraph) -> BigInt {
    let n = mg.vertex_count();
    let edges = mg.edges();
    if n <= 1 {
        return BigInt::one();
    }
    if edges.len() < n - 1 || edges.len() > 63 {
        return if edges.len() < n - 1 {
            BigInt::zero()
        } else {
            panic!("spanning_tree_count_brute limited to 63 edges")
        };
    }
    let need = n - 1;
    let mut count = BigInt::zero();
    for mask in 0u64..(1u64 << edges.len()) {
        if mask.count_ones() as usize != need {
            continue;
        }
        let subset: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        if component_count(n, &subset) == 1 {
            count += 1;
        }
    }
    count
}

/// Parses the plain graph text format: first line `n m`, then `m` lines
/// `i j` with 1-based endpoints. A leading `multigraph` line switches to
/// the multigraph format, which this function rejects.
pub fn parse_simple_graph(text: &str) -> Result<SimpleGraph> {
    let (header, n, edges) = parse_graph_lines(text)?;
    if header {
        return Err(Error::Parse(
            "input declares 'multigraph'; a simple graph is required here".into(),
        ));
    }
    SimpleGraph::new(n, &edges)
}

/// Parses either format; a `multigraph` header (or none) is accepted and
/// duplicates/loops are kept.
pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let (_, n, edges) = parse_graph_lines(text)?;
    Multigraph::new(n, &edges)
}

fn parse_graph_lines(text: &str) -> Result<(bool, usize, Vec<(usize, usize)>)> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let mut first = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let mut multigraph = false;
    if first.eq_ignore_ascii_case("multigraph") {
        multigraph = true;
        first = lines
            .next()
            .ok_or_else(|| Error::Parse("missing 'n m' line".into()))?;
    }
    let mut head = first.split_whitespace();
    let n: usize = head
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header line: {first:?}")))?;
    let m: usize = head
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header line: {first:?}")))?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
        let mut it = line.split_whitespace();
        let a: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line: {line:?}")))?;
        let b: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line: {line:?}")))?;
        edges.push((a, b));
    }
    Ok((multigraph, n, edges))
}

/// Renders a ratio of big integers for error messages.
pub(crate) fn ratio_to_string(r: &num::BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else if r.denom().is_negative() {
        format!("{}/{}", -r.numer(), -r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_graph_validates() {
        let k3 = SimpleGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3, SimpleGraph::complete(3));

        let p3 = SimpleGraph::new(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(p3, SimpleGraph::path(3));

        assert_eq!(
            SimpleGraph::new(3, &[(1, 2), (1, 2)]),
            Err(Error::DuplicateEdge(1, 2))
        );
        assert_eq!(
            SimpleGraph::new(3, &[(2, 1), (1, 2)]),
            Err(Error::DuplicateEdge(1, 2))
        );
        assert_eq!(SimpleGraph::new(3, &[(2, 2)]), Err(Error::LoopEdge(2)));
        assert_eq!(
            SimpleGraph::new(3, &[(1, 4)]),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        );
    }

    #[test]
    fn sink_extension_counts() {
        let k3s = SinkedGraph::new(SimpleGraph::complete(3));
        assert_eq!(k3s.edge_count(), 6);
        let p3s = SinkedGraph::new(SimpleGraph::path(3));
        assert_eq!(p3s.edge_count(), 5);
        let single = SinkedGraph::new(SimpleGraph::new(1, &[]).unwrap());
        assert_eq!(single.edge_count(), 1);
        // Degrees rise by exactly one and the base is untouched.
        for v in 1..=3 {
            assert_eq!(k3s.degree(v), k3s.base().degree(v) + 1);
        }
        assert_eq!(k3s.base(), &SimpleGraph::complete(3));
    }

    #[test]
    fn cut_degree_examples() {
        let p3s = SinkedGraph::new(SimpleGraph::path(3));
        let w: BTreeSet<usize> = [2].into();
        assert_eq!(p3s.cut_degree(2, &w).unwrap(), 3);
        let w: BTreeSet<usize> = [1, 2, 3].into();
        assert_eq!(p3s.cut_degree(2, &w).unwrap(), 1);
        let k3s = SinkedGraph::new(SimpleGraph::complete(3));
        let w: BTreeSet<usize> = [1, 2].into();
        assert_eq!(k3s.cut_degree(1, &w).unwrap(), 2);
        assert_eq!(
            k3s.cut_degree(3, &w),
            Err(Error::VertexNotInSubset(3))
        );
    }

    #[test]
    fn simple_cycle_enumeration() {
        let k3 = SimpleGraph::complete(3);
        assert_eq!(
            k3.simple_cycles(DEFAULT_CYCLE_CAP).unwrap(),
            vec![vec![1, 2, 3]]
        );
        let p3 = SimpleGraph::path(3);
        assert!(p3.simple_cycles(DEFAULT_CYCLE_CAP).unwrap().is_empty());
        let k4 = SimpleGraph::complete(4);
        let cycles = k4.simple_cycles(DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(cycles.len(), 7);
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
        for n in 3..=7 {
            assert_eq!(SimpleGraph::cycle(n).simple_cycles(10).unwrap().len(), 1);
        }
        assert_eq!(k4.simple_cycles(2), Err(Error::CycleCap(2)));
    }

    #[test]
    fn spanning_trees_match_paper_counts() {
        let k3s = SinkedGraph::new(SimpleGraph::complete(3));
        assert_eq!(spanning_tree_count_sinked(&k3s), BigInt::from(16));
        let p3s = SinkedGraph::new(SimpleGraph::path(3));
        assert_eq!(spanning_tree_count_sinked(&p3s), BigInt::from(8));
        let single = SinkedGraph::new(SimpleGraph::new(1, &[]).unwrap());
        assert_eq!(spanning_tree_count_sinked(&single), BigInt::from(1));
        // Cayley for complete extensions: K_n plus sink is K_{n+1}.
        for n in 1..=5usize {
            let gs = SinkedGraph::new(SimpleGraph::complete(n));
            let expect = BigInt::from(n as u64 + 1).pow(n as u32 - 1);
            assert_eq!(spanning_tree_count_sinked(&gs), expect);
        }
        // Disconnected multigraph counts zero.
        let mg = Multigraph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(spanning_tree_count(&mg), BigInt::zero());
        // Loops are ignored, parallel edges multiply.
        let mg = Multigraph::new(2, &[(1, 2), (1, 2), (1, 1)]).unwrap();
        assert_eq!(spanning_tree_count(&mg), BigInt::from(2));
    }

    #[test]
    fn spanning_trees_match_brute_force() {
        let graphs = [
            Multigraph::from(&SinkedGraph::new(SimpleGraph::complete(3))),
            Multigraph::from(&SinkedGraph::new(SimpleGraph::path(4))),
            Multigraph::from(&SinkedGraph::new(SimpleGraph::cycle(5))),
            Multigraph::new(3, &[(1, 2), (1, 2), (2, 3), (1, 3), (3, 3)]).unwrap(),
            Multigraph::dipole(4),
        ];
        for mg in &graphs {
            assert!(mg.edge_count() <= 10);
            assert_eq!(
                spanning_tree_count(mg),
                spanning_tree_count_brute(mg),
                "mismatch for {mg:?}"
            );
        }
    }

    #[test]
    fn parse_graph_formats() {
        let g = parse_simple_graph("3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(g, SimpleGraph::path(3));
        let mg = parse_multigraph("multigraph\n2 3\n1 2\n1 2\n1 2\n").unwrap();
        assert_eq!(mg, Multigraph::dipole(3));
        assert!(parse_simple_graph("multigraph\n2 1\n1 2\n").is_err());
        assert!(parse_simple_graph("").is_err());
        assert!(parse_simple_graph("2 2\n1 2\n").is_err());
    }

    #[test]
    fn chip_config_basics() {
        let c = ChipConfig::new(vec![0, 2, 1]);
        assert_eq!(c.degree(), 3);
        assert_eq!(c.get(2), 2);
        assert_eq!(c.plus_vertex(1).entries(), &[1, 2, 1]);
        assert_eq!(c.minus_ones().entries(), &[-1, 1, 0]);
        assert!(ChipConfig::zero(3).dominated_by(&c));
        assert!(!c.dominated_by(&ChipConfig::zero(3)));
        assert_eq!(c.to_string(), "0 2 1");
    }
}
