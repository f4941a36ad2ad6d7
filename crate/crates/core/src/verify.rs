//! Verification suites behind the `verify` command: join-graph
//! properties, family parameters, solver-vs-oracle cross-validation,
//! and the node-count lower bound. Each suite is a batch of independent
//! checks; failures carry a human-readable description.

use crate::batch::run_batch;
use crate::construct::{c5q, join, predict_params, FamilyParams};
use crate::oracle::gap_report;
use crate::random::{gnp, instance_rng};
use crate::search::{solve, verify_lower_bound, LowerBoundRow, SearchLimits};

use rand::Rng;

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn passed_count(&self) -> usize {
        self.checks - self.failures.len()
    }

    fn from_results(name: &'static str, results: Vec<Option<String>>) -> Self {
        SuiteOutcome {
            name,
            checks: results.len(),
            failures: results.into_iter().flatten().collect(),
        }
    }
}

/// Checks that order, stability number, clique number, chromatic number
/// and chromatic gap of a join are n1+n2, max(a1,a2), w1+w2, x1+x2 and
/// p1+p2, on seeded random pairs with up to 7 vertices each.
pub fn join_property_suite(trials: usize, seed: u64) -> SuiteOutcome {
    let results = run_batch(trials, |i| {
        let mut rng = instance_rng(seed, i as u64);
        let n1 = rng.random_range(1..=7);
        let n2 = rng.random_range(1..=7);
        let p1 = rng.random_range(0.1..0.9);
        let p2 = rng.random_range(0.1..0.9);
        let g1 = gnp(n1, p1, &mut rng);
        let g2 = gnp(n2, p2, &mut rng);
        let joined = join(&g1, &g2);

        let r1 = gap_report(&g1).expect("within oracle guards");
        let r2 = gap_report(&g2).expect("within oracle guards");
        let rj = gap_report(&joined).expect("within oracle guards");

        let mut problems = Vec::new();
        if joined.order() != n1 + n2 {
            problems.push(format!("order {} != {}", joined.order(), n1 + n2));
        }
        if rj.alpha != r1.alpha.max(r2.alpha) {
            problems.push(format!("alpha {} != max({}, {})", rj.alpha, r1.alpha, r2.alpha));
        }
        if rj.omega != r1.omega + r2.omega {
            problems.push(format!("omega {} != {} + {}", rj.omega, r1.omega, r2.omega));
        }
        if rj.chi != r1.chi + r2.chi {
            problems.push(format!("chi {} != {} + {}", rj.chi, r1.chi, r2.chi));
        }
        if rj.psi != r1.psi + r2.psi {
            problems.push(format!("psi {} != {} + {}", rj.psi, r1.psi, r2.psi));
        }
        if problems.is_empty() {
            None
        } else {
            Some(format!("pair {i} (n1={n1}, n2={n2}): {}", problems.join("; ")))
        }
    });
    SuiteOutcome::from_results("join_properties", results)
}

/// Checks constructed C5,q graphs against their closed-form parameters:
/// n and m for q up to `max_q`, and the full oracle gap report for q <= 2.
pub fn family_parameter_suite(max_q: usize) -> SuiteOutcome {
    let results = run_batch(max_q, |i| {
        let q = i + 1;
        let params = FamilyParams::new(q).expect("q >= 1");
        let g = c5q(params);
        let predicted = predict_params(params);
        let mut problems = Vec::new();
        if g.order() != predicted.n {
            problems.push(format!("n {} != {}", g.order(), predicted.n));
        }
        if g.size() != predicted.m {
            problems.push(format!("m {} != {}", g.size(), predicted.m));
        }
        if q <= 2 {
            let report = gap_report(&g).expect("q <= 2 fits the oracle guards");
            if (report.omega, report.alpha, report.chi, report.psi)
                != (predicted.omega, predicted.alpha, predicted.chi, predicted.psi)
            {
                problems.push(format!(
                    "gap report {:?} != predicted (w={}, a={}, x={}, p={})",
                    report, predicted.omega, predicted.alpha, predicted.chi, predicted.psi
                ));
            }
        }
        if problems.is_empty() {
            None
        } else {
            Some(format!("q={q}: {}", problems.join("; ")))
        }
    });
    SuiteOutcome::from_results("family_parameters", results)
}

/// Cross-validates the branch-and-bound solver against the brute-force
/// clique oracle on seeded random graphs with up to 16 vertices and
/// densities cycling through 0.2 / 0.5 / 0.8.
pub fn solver_oracle_suite(trials: usize, seed: u64) -> SuiteOutcome {
    let results = run_batch(trials, |i| {
        let mut rng = instance_rng(seed.wrapping_add(1), i as u64);
        let n = rng.random_range(1..=16);
        let p = [0.2, 0.5, 0.8][i % 3];
        let g = gnp(n, p, &mut rng);
        let got = solve(&g, &SearchLimits::none(), false);
        let want = crate::oracle::brute_max_clique(&g)
            .expect("within clique oracle guard")
            .len();
        if got.best_size != want || !g.is_clique(&got.best_clique) {
            Some(format!(
                "graph {i} (n={n}, p={p}): solver found {} but the oracle says {want}",
                got.best_size
            ))
        } else {
            None
        }
    });
    SuiteOutcome::from_results("solver_vs_oracle", results)
}

/// Node-count lower bound on the family: calls >= 2^q for q = 1..=max_q.
pub fn lower_bound_suite(max_q: usize) -> (SuiteOutcome, Vec<LowerBoundRow>) {
    let rows = verify_lower_bound(1..=max_q);
    let failures = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("q={}: {} calls < bound {}", r.q, r.calls, r.bound))
        .collect();
    (
        SuiteOutcome {
            name: "lower_bound",
            checks: rows.len(),
            failures,
        },
        rows,
    )
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suites: Vec<SuiteOutcome>,
    pub lower_bound_rows: Vec<LowerBoundRow>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::passed)
    }
}

/// Runs every suite with shared settings.
pub fn run_all(max_q: usize, trials: usize, seed: u64) -> VerifyReport {
    let mut suites = vec![
        join_property_suite(trials, seed),
        family_parameter_suite(8),
        solver_oracle_suite(trials, seed),
    ];
    let (lb, rows) = lower_bound_suite(max_q);
    suites.push(lb);
    VerifyReport {
        suites,
        lower_bound_rows: rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_scale() {
        let report = run_all(5, 20, 1729);
        for suite in &report.suites {
            assert!(
                suite.passed(),
                "{} failed: {:?}",
                suite.name,
                suite.failures
            );
        }
        assert!(report.all_passed());
        assert_eq!(report.lower_bound_rows.len(), 5);
    }

    #[test]
    fn reports_are_deterministic_for_a_fixed_seed() {
        let a = join_property_suite(10, 7).checks;
        let b = join_property_suite(10, 7).checks;
        assert_eq!(a, b);
        let s1 = solver_oracle_suite(9, 3);
        let s2 = solver_oracle_suite(9, 3);
        assert_eq!(s1.failures, s2.failures);
        assert_eq!(s1.checks, s2.checks);
    }
}
