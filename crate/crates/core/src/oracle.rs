//! Brute-force ground truth on small graphs: clique number, independence
//! number, chromatic number, and the gap between coloring and clique
//! bounds. Exists for correctness, not speed; hard size guards keep the
//! full test suite fast instead of silently slow.

use std::fmt;

use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the clique / independent-set oracles.
pub const CLIQUE_ORACLE_MAX_N: usize = 24;
/// Largest order accepted by the chromatic-number oracle.
pub const CHROMATIC_ORACLE_MAX_N: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeLimitError {
    pub n: usize,
    pub max: usize,
    pub oracle: &'static str,
}

impl fmt::Display for SizeLimitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} oracle handles at most {} vertices, got {}",
            self.oracle, self.max, self.n
        )
    }
}

impl std::error::Error for SizeLimitError {}

/// Exact invariants of a graph as computed by the brute-force oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapReport {
    pub omega: usize,
    pub alpha: usize,
    pub chi: usize,
    /// chi - omega.
    pub psi: usize,
}

/// Maximum clique by unpruned take/skip enumeration over common
/// neighborhoods. Among maximum cliques, returns the lexicographically
/// smallest vertex set.
pub fn brute_max_clique(g: &Graph) -> Result<VertexSet, SizeLimitError> {
    if g.order() > CLIQUE_ORACLE_MAX_N {
        return Err(SizeLimitError {
            n: g.order(),
            max: CLIQUE_ORACLE_MAX_N,
            oracle: "clique",
        });
    }
    let mut current = Vec::new();
    let mut best = Vec::new();
    explore(g, g.vertices(), &mut current, &mut best);
    Ok(VertexSet::from_indices(g.order(), &best))
}

fn explore(g: &Graph, candidates: VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let Some(v) = candidates.iter().next() else {
        // every clique shows up as some leaf's take-set, so comparing at
        // leaves only is exhaustive
        if current.len() > best.len() || (current.len() == best.len() && current < best) {
            *best = current.clone();
        }
        return;
    };
    current.push(v);
    explore(g, candidates.intersection(g.adjacency(v)), current, best);
    current.pop();
    let mut rest = candidates;
    rest.remove(v);
    explore(g, rest, current, best);
}

/// Maximum independent set, via the clique oracle on the complement.
pub fn brute_max_independent_set(g: &Graph) -> Result<VertexSet, SizeLimitError> {
    if g.order() > CLIQUE_ORACLE_MAX_N {
        return Err(SizeLimitError {
            n: g.order(),
            max: CLIQUE_ORACLE_MAX_N,
            oracle: "independent-set",
        });
    }
    brute_max_clique(&g.complement())
}

/// Exact chromatic number: k-colorability backtracking for ascending k,
/// seeded at the clique number (a valid lower bound).
pub fn brute_chromatic_number(g: &Graph) -> Result<usize, SizeLimitError> {
    Ok(chromatic_with_witness(g)?.0)
}

/// Exact chromatic number plus one witness coloring, as ordered classes.
pub fn chromatic_with_witness(g: &Graph) -> Result<(usize, Vec<VertexSet>), SizeLimitError> {
    let n = g.order();
    if n > CHROMATIC_ORACLE_MAX_N {
        return Err(SizeLimitError {
            n,
            max: CHROMATIC_ORACLE_MAX_N,
            oracle: "chromatic",
        });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    // high-degree vertices first: fails fast during the k-1 refutations
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let lower = brute_max_clique(g).expect("within clique guard").len();
    let mut assignment = vec![usize::MAX; n];
    for k in lower.. {
        if colorable(g, &order, k, 0, 0, &mut assignment) {
            let mut classes = vec![VertexSet::empty(n); k];
            for (v, &c) in assignment.iter().enumerate() {
                classes[c].insert(v);
            }
            debug_assert!(classes.iter().all(|c| !c.is_empty()));
            return Ok((k, classes));
        }
    }
    unreachable!("every graph is n-colorable")
}

fn colorable(
    g: &Graph,
    order: &[usize],
    k: usize,
    pos: usize,
    max_used: usize,
    assignment: &mut Vec<usize>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    // trying colors beyond max_used + 1 only permutes class labels
    for color in 0..k.min(max_used + 2) {
        let clash = g
            .adjacency(v)
            .iter()
            .any(|u| assignment[u] == color);
        if clash {
            continue;
        }
        assignment[v] = color;
        if colorable(g, order, k, pos + 1, max_used.max(color + 1), assignment) {
            return true;
        }
        assignment[v] = usize::MAX;
    }
    false
}

/// Omega, alpha, chi and the gap between them, all from the oracles.
pub fn gap_report(g: &Graph) -> Result<GapReport, SizeLimitError> {
    let omega = brute_max_clique(g)?.len();
    let alpha = brute_max_independent_set(g)?.len();
    let chi = brute_chromatic_number(g)?;
    debug_assert!(omega <= chi || g.order() == 0);
    Ok(GapReport {
        omega,
        alpha,
        chi,
        psi: chi - omega,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{c5q, cycle, FamilyParams};

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn clique_oracle_known_values() {
        assert_eq!(brute_max_clique(&cycle(5).unwrap()).unwrap().len(), 2);
        let g2 = c5q(FamilyParams::new(2).unwrap());
        assert_eq!(brute_max_clique(&g2).unwrap().len(), 4);
        assert_eq!(brute_max_clique(&Graph::edgeless(3)).unwrap().len(), 1);
        assert_eq!(brute_max_clique(&Graph::edgeless(0)).unwrap().len(), 0);
    }

    #[test]
    fn clique_oracle_ties_break_lexicographically() {
        // two disjoint edges: maximum cliques {0,1} and {2,3}
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(brute_max_clique(&g).unwrap().to_vec(), vec![0, 1]);
        // and on an edgeless graph the smallest vertex wins
        assert_eq!(brute_max_clique(&Graph::edgeless(3)).unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn independent_set_oracle_known_values() {
        assert_eq!(
            brute_max_independent_set(&cycle(5).unwrap()).unwrap().len(),
            2
        );
        let g2 = c5q(FamilyParams::new(2).unwrap());
        assert_eq!(brute_max_independent_set(&g2).unwrap().len(), 2);
        assert_eq!(brute_max_independent_set(&k4()).unwrap().len(), 1);
    }

    #[test]
    fn chromatic_oracle_known_values() {
        assert_eq!(brute_chromatic_number(&cycle(5).unwrap()).unwrap(), 3);
        let g2 = c5q(FamilyParams::new(2).unwrap());
        assert_eq!(brute_chromatic_number(&g2).unwrap(), 6);
        assert_eq!(brute_chromatic_number(&k4()).unwrap(), 4);
        assert_eq!(brute_chromatic_number(&Graph::edgeless(0)).unwrap(), 0);
        assert_eq!(brute_chromatic_number(&Graph::edgeless(4)).unwrap(), 1);
    }

    #[test]
    fn chromatic_witness_is_a_valid_partition() {
        let g = c5q(FamilyParams::new(2).unwrap());
        let (chi, classes) = chromatic_with_witness(&g).unwrap();
        assert_eq!(classes.len(), chi);
        let mut union = VertexSet::empty(g.order());
        for class in &classes {
            assert!(!class.is_empty());
            assert!(union.is_disjoint(class));
            assert!(g.is_independent_set(class));
            union = union.union(class);
        }
        assert_eq!(union, g.vertices());
    }

    #[test]
    fn gap_report_known_values() {
        assert_eq!(
            gap_report(&cycle(5).unwrap()).unwrap(),
            GapReport {
                omega: 2,
                alpha: 2,
                chi: 3,
                psi: 1
            }
        );
        assert_eq!(
            gap_report(&c5q(FamilyParams::new(2).unwrap())).unwrap(),
            GapReport {
                omega: 4,
                alpha: 2,
                chi: 6,
                psi: 2
            }
        );
        assert_eq!(
            gap_report(&k4()).unwrap(),
            GapReport {
                omega: 4,
                alpha: 1,
                chi: 4,
                psi: 0
            }
        );
    }

    #[test]
    fn size_guards_reject_large_graphs() {
        let big = Graph::edgeless(CLIQUE_ORACLE_MAX_N + 1);
        assert!(brute_max_clique(&big).is_err());
        assert!(brute_max_independent_set(&big).is_err());
        let mid = Graph::edgeless(CHROMATIC_ORACLE_MAX_N + 1);
        assert!(brute_chromatic_number(&mid).is_err());
        assert!(gap_report(&mid).is_err());
    }
}
