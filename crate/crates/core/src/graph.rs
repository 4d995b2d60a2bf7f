//! Dense undirected simple graphs stored as bit-matrix rows.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Errors raised by graph construction and edge edits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0},{1}) already present")]
    EdgeExists(usize, usize),
    #[error("edge ({0},{1}) not present")]
    EdgeAbsent(usize, usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
}

/// An unordered vertex pair, stored with `u < v`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
pub struct EdgePair {
    pub u: usize,
    pub v: usize,
}

impl EdgePair {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        Ok(Self {
            u: a.min(b),
            v: a.max(b),
        })
    }

    /// Shifted copy, used when printing 1-based labels.
    pub fn offset(self, by: usize) -> Self {
        Self {
            u: self.u + by,
            v: self.v + by,
        }
    }
}

impl fmt::Display for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Undirected simple graph on vertices `0..n`.
///
/// Row `i` holds the neighbor set of `i` as `words` 64-bit blocks. Rows are
/// symmetric, the diagonal is zero and bits past column `n - 1` stay clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            g.set(a, b, true);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Adjacency test without range checks beyond slice indexing.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, wv) = (self.words, self.words);
        let (iu, iv) = (u * wu + v / 64, v * wv + u / 64);
        if on {
            self.bits[iu] |= 1 << (v % 64);
            self.bits[iv] |= 1 << (u % 64);
        } else {
            self.bits[iu] &= !(1 << (v % 64));
            self.bits[iv] &= !(1 << (u % 64));
        }
    }

    #[inline]
    pub(crate) fn toggle(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] ^= 1 << (v % 64);
        self.bits[v * self.words + u / 64] ^= 1 << (u % 64);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    fn check_pair(&self, e: EdgePair) -> Result<(), GraphError> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)
    }

    pub fn has_edge(&self, e: EdgePair) -> Result<bool, GraphError> {
        self.check_pair(e)?;
        Ok(self.adjacent(e.u, e.v))
    }

    pub fn add_edge(&self, e: EdgePair) -> Result<Graph, GraphError> {
        if self.has_edge(e)? {
            return Err(GraphError::EdgeExists(e.u, e.v));
        }
        let mut g = self.clone();
        g.set(e.u, e.v, true);
        Ok(g)
    }

    pub fn remove_edge(&self, e: EdgePair) -> Result<Graph, GraphError> {
        if !self.has_edge(e)? {
            return Err(GraphError::EdgeAbsent(e.u, e.v));
        }
        let mut g = self.clone();
        g.set(e.u, e.v, false);
        Ok(g)
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * 64 + b))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = EdgePair> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| EdgePair { u, v })
        })
    }

    /// Pairs absent from the edge set, lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = EdgePair> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.adjacent(u, v))
                .map(move |v| EdgePair { u, v })
        })
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.deg(0) };
        (0..self.n).all(|v| self.deg(v) == d).then_some(d)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for w in 0..self.words {
                g.bits[u * self.words + w] = !self.bits[u * self.words + w];
            }
            g.bits[u * self.words + u / 64] &= !(1 << (u % 64));
            if self.n % 64 != 0 {
                g.bits[u * self.words + self.words - 1] &= (1u64 << (self.n % 64)) - 1;
            }
        }
        if self.n == 0 {
            g.bits.clear();
        }
        g
    }

    /// `G + H`: vertices of `self` first, then those of `other`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for e in self.edges() {
            g.set(e.u, e.v, true);
        }
        for e in other.edges() {
            g.set(e.u + off, e.v + off, true);
        }
        g
    }

    /// `G ∨ H`: the disjoint union plus every cross pair.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set(u, self.n + v, true);
            }
        }
        g
    }

    /// Cartesian product; `(i, j)` is vertex `i * other.n() + j`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let mut g = Graph::empty(self.n * m);
        for i in 0..self.n {
            for e in other.edges() {
                g.set(i * m + e.u, i * m + e.v, true);
            }
        }
        for e in self.edges() {
            for j in 0..m {
                g.set(e.u * m + j, e.v * m + j, true);
            }
        }
        g
    }

    /// Graph whose vertex `map[v]` plays the role of `v`.
    pub fn relabel(&self, map: &[usize]) -> Graph {
        assert_eq!(map.len(), self.n, "relabel map length");
        let mut g = Graph::empty(self.n);
        for e in self.edges() {
            g.set(map[e.u], map[e.v], true);
        }
        g
    }

    /// Induced subgraph on `verts`, renumbered in the given order.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    g.set(i, j, true);
                }
            }
        }
        g
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        if src >= self.n {
            return dist;
        }
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest-path length; `Ok(None)` when `v` is unreachable from `u`.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            for (v, d) in self.distances_from(s).into_iter().enumerate() {
                if d.is_some() {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Checks symmetry, zero diagonal and clear padding bits.
    pub fn check_invariants(&self) -> bool {
        if self.bits.len() != self.n * self.words {
            return false;
        }
        for u in 0..self.n {
            if self.adjacent(u, u) {
                return false;
            }
            if self.n % 64 != 0 && self.row(u)[self.words - 1] >> (self.n % 64) != 0 {
                return false;
            }
            for v in 0..self.n {
                if self.adjacent(u, v) != self.adjacent(v, u) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}

/// Iterator over set bit positions of one word.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
