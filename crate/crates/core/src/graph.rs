//! Simple undirected graphs with one bit row per vertex.
//!
//! A [`Graph`] is immutable after construction; subsearches mask a live
//! [`VertexSet`] instead of mutating the graph, which keeps backtracking
//! allocation-free on the graph side.

use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of the vertices of a host graph, stored as a fixed-width
/// bit vector. Used for cliques, independent sets, color classes,
/// neighborhoods and live sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    host_n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(host_n: usize) -> Self {
        VertexSet {
            host_n,
            bits: vec![0; words_for(host_n)],
        }
    }

    pub fn full(host_n: usize) -> Self {
        let mut bits = vec![u64::MAX; words_for(host_n)];
        let tail = host_n % WORD_BITS;
        if tail != 0 {
            *bits.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        if host_n == 0 {
            bits.clear();
        }
        VertexSet { host_n, bits }
    }

    pub fn from_indices(host_n: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(host_n);
        for &v in indices {
            s.insert(v);
        }
        s
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    /// Number of members (popcount).
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        assert!(v < self.host_n, "vertex {v} out of range 0..{}", self.host_n);
        self.bits[v / WORD_BITS] & (1u64 << (v % WORD_BITS)) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.host_n, "vertex {v} out of range 0..{}", self.host_n);
        self.bits[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.host_n, "vertex {v} out of range 0..{}", self.host_n);
        self.bits[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.host_n, other.host_n, "host graph mismatch");
        VertexSet {
            host_n: self.host_n,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.host_n, other.host_n, "host graph mismatch");
        VertexSet {
            host_n: self.host_n,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    /// Members of the host vertex range not in this set.
    pub fn complement(&self) -> VertexSet {
        let full = VertexSet::full(self.host_n);
        VertexSet {
            host_n: self.host_n,
            bits: self
                .bits
                .iter()
                .zip(&full.bits)
                .map(|(a, m)| !a & m)
                .collect(),
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        assert_eq!(self.host_n, other.host_n, "host graph mismatch");
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        assert_eq!(self.host_n, other.host_n, "host graph mismatch");
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> SetIter<'_> {
        SetIter {
            words: &self.bits,
            word_idx: 0,
            current: self.bits.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SetIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for SetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

/// Errors from building a [`Graph`] out of an edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
        }
    }
}

impl std::error::Error for GraphError {}

/// Immutable simple undirected graph. Vertices are `0..n`; adjacency is
/// symmetric with no loops; the edge count is cached at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    /// Builds a graph from an undirected edge list. Duplicate edges
    /// collapse; endpoint order is irrelevant.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_rows(adj))
    }

    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        let g = Graph { n, m, adj };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        for v in 0..self.n {
            if self.adj[v].contains(v) {
                return false;
            }
            for u in self.adj[v].iter() {
                if !self.adj[u].contains(v) {
                    return false;
                }
            }
        }
        true
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Borrowed adjacency row of `v`; panics if `v` is out of range.
    #[inline]
    pub fn adjacency(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// The set of vertices adjacent to `v` (`v` itself excluded).
    pub fn neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].clone()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edge (u,v) present in the result iff u != v and absent here.
    pub fn complement(&self) -> Graph {
        let rows = (0..self.n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Subgraph induced by `s`, plus the map from new indices to original
    /// vertex indices (ascending).
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(s.host_n(), self.n, "vertex set over a different graph");
        let map = s.to_vec();
        let k = map.len();
        let mut inverse = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inverse[old] = new;
        }
        let rows = map
            .iter()
            .map(|&old| {
                let mut row = VertexSet::empty(k);
                for w in self.adj[old].intersection(s).iter() {
                    row.insert(inverse[w]);
                }
                row
            })
            .collect();
        (Self::from_rows(rows), map)
    }

    /// True iff every pair of distinct members of `s` is adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        assert_eq!(s.host_n(), self.n, "vertex set over a different graph");
        s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    /// True iff no pair of members of `s` is adjacent.
    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        assert_eq!(s.host_n(), self.n, "vertex set over a different graph");
        s.iter().all(|v| s.is_disjoint(&self.adj[v]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}
