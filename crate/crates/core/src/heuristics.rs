//! Greedy ingredients of the branch-and-bound search: vertex preordering,
//! an initial clique for the lower bound, and a sequential coloring for the
//! upper bound.
//!
//! All three scan vertices in one fixed order (the preorder), which makes
//! every downstream trace deterministic. After the greedy pass the coloring
//! reorders its classes by non-increasing size (stable), so multi-vertex
//! classes come first and singletons last; branching then peels singletons
//! off the tail first.

use std::cmp::Reverse;

use crate::graph::{Graph, VertexSet};

/// A permutation of `0..n` giving the scan order used by the greedy passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    perm: Vec<usize>,
}

impl VertexOrder {
    /// Panics unless `perm` is a bijection on `0..perm.len()`.
    pub fn new(perm: Vec<usize>) -> Self {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            assert!(v < n && !seen[v], "not a permutation of 0..{n}");
            seen[v] = true;
        }
        VertexOrder { perm }
    }

    pub fn identity(n: usize) -> Self {
        VertexOrder {
            perm: (0..n).collect(),
        }
    }

    /// Vertices in scan order.
    pub fn positions(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }
}

/// An ordered partition of a live vertex set into independent color
/// classes. Class order is significant: the search always branches on the
/// last class.
#[derive(Clone, Debug)]
pub struct Coloring {
    classes: Vec<VertexSet>,
    members: Vec<Vec<usize>>,
}

impl Coloring {
    /// Number of color classes.
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    /// Members of class `i` in scan order; "last" member means latest in
    /// the scan order.
    pub fn members_in_scan_order(&self, i: usize) -> &[usize] {
        &self.members[i]
    }

    pub(crate) fn into_member_stacks(self) -> Vec<Vec<usize>> {
        self.members
    }
}

/// Sorts vertices by non-increasing degree, ties broken by ascending
/// original index.
pub fn reorder_largest_first(g: &Graph) -> VertexOrder {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.sort_by_key(|&v| Reverse(g.degree(v)));
    VertexOrder { perm }
}

/// Greedy maximal clique within `live`: scan in order, take every vertex
/// adjacent to everything taken so far. Not necessarily maximum, but no
/// live vertex can extend the result.
pub fn heuristic_clique(g: &Graph, live: &VertexSet, ord: &VertexOrder) -> VertexSet {
    let mut clique = VertexSet::empty(g.order());
    for &v in ord.positions() {
        if live.contains(v) && clique.is_subset(g.adjacency(v)) {
            clique.insert(v);
        }
    }
    clique
}

/// Greedy sequential coloring of `live`: each vertex joins the first
/// existing class with no neighbor in it, else opens a new class. Classes
/// are then reordered by non-increasing size, stable in class creation
/// order.
///
/// Panics if `live` is empty.
pub fn heuristic_coloring(g: &Graph, live: &VertexSet, ord: &VertexOrder) -> Coloring {
    assert!(!live.is_empty(), "heuristic_coloring needs a non-empty live set");
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for &v in ord.positions() {
        if !live.contains(v) {
            continue;
        }
        let row = g.adjacency(v);
        match classes.iter().position(|c| c.is_disjoint(row)) {
            Some(i) => {
                classes[i].insert(v);
                members[i].push(v);
            }
            None => {
                let mut c = VertexSet::empty(g.order());
                c.insert(v);
                classes.push(c);
                members.push(vec![v]);
            }
        }
    }
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&i| Reverse(members[i].len()));
    let classes = order.iter().map(|&i| classes[i].clone()).collect();
    let members = order.iter().map(|&i| members[i].clone()).collect();
    Coloring { classes, members }
}
