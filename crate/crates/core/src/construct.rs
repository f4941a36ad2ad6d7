//! Cycles, join graphs, and the hard C5,q family.
//!
//! The join of two graphs keeps both edge sets and adds every cross edge.
//! Joining q disjoint 5-cycles yields a family whose clique number (2q)
//! and chromatic number (3q) drift apart linearly, which is what defeats
//! coloring-based upper bounds: any solver pruned by a coloring bound must
//! expand at least 2^q nodes on the q-th member.

use std::fmt;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructError {
    /// Cycles need at least 3 vertices.
    CycleTooShort { k: usize },
    /// The family is indexed by the number of 5-cycle copies, q >= 1.
    InvalidFamilySize { q: usize },
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::CycleTooShort { k } => {
                write!(f, "cycle length {k} is below the minimum of 3")
            }
            ConstructError::InvalidFamilySize { q } => {
                write!(f, "family parameter q = {q} must be at least 1")
            }
        }
    }
}

impl std::error::Error for ConstructError {}

/// Parameters of the C5,q family: the number of joined 5-cycle copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    q: usize,
}

impl FamilyParams {
    pub fn new(q: usize) -> Result<Self, ConstructError> {
        if q < 1 {
            return Err(ConstructError::InvalidFamilySize { q });
        }
        Ok(FamilyParams { q })
    }

    pub fn q(&self) -> usize {
        self.q
    }
}

/// Closed-form structural parameters of C5,q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PredictedParams {
    pub n: usize,
    pub m: usize,
    /// Independence (stability) number.
    pub alpha: usize,
    /// Clique number.
    pub omega: usize,
    /// Chromatic number.
    pub chi: usize,
    /// Chromatic gap chi - omega.
    pub psi: usize,
}

/// Cycle on k vertices with edges (i, i+1 mod k).
pub fn cycle(k: usize) -> Result<Graph, ConstructError> {
    if k < 3 {
        return Err(ConstructError::CycleTooShort { k });
    }
    let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Ok(Graph::from_edges(k, &edges).expect("cycle edges are valid"))
}

/// Join of two disjoint graphs: g1 keeps indices `0..n1`, g2 shifts to
/// `n1..n1+n2`, and every cross edge is added.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let n2 = g2.order();
    let n = n1 + n2;
    let mut edges = Vec::with_capacity(g1.size() + g2.size() + n1 * n2);
    for u in 0..n1 {
        for v in g1.adjacency(u).iter() {
            if v > u {
                edges.push((u, v));
            }
        }
    }
    for u in 0..n2 {
        for v in g2.adjacency(u).iter() {
            if v > u {
                edges.push((n1 + u, n1 + v));
            }
        }
    }
    for u in 0..n1 {
        for v in 0..n2 {
            edges.push((u, n1 + v));
        }
    }
    Graph::from_edges(n, &edges).expect("join edges are valid")
}

/// Iterated join of q disjoint 5-cycles, folded left to right. Copy i
/// (1-based) occupies indices `5(i-1)..5i`, so the j-th vertex of copy i
/// sits at index `5(i-1) + (j-1)`.
pub fn c5q(p: FamilyParams) -> Graph {
    let five_cycle = cycle(5).expect("5 >= 3");
    let mut g = five_cycle.clone();
    for _ in 1..p.q() {
        g = join(&g, &five_cycle);
    }
    g
}

/// Closed-form parameters of C5,q: each copy contributes 5 edges and each
/// unordered pair of copies contributes 25 cross edges.
pub fn predict_params(p: FamilyParams) -> PredictedParams {
    let q = p.q();
    PredictedParams {
        n: 5 * q,
        m: 5 * q + 25 * q * (q - 1) / 2,
        alpha: 2,
        omega: 2 * q,
        chi: 3 * q,
        psi: q,
    }
}
