//! Ramsey-side machinery: the counterexample verifier, the feasibility
//! scan over the unpublished Ramsey constant, and a stochastic search for
//! K4-free graphs with small independence number.
//!
//! The verifier never computes an exact chromatic number — the argument
//! only needs the `n / alpha` lower bound, and exact chi is hopeless at
//! counterexample scale. All randomness is seeded; reruns are
//! bit-reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::formats::encode_graph6;
use crate::graph::Graph;
use crate::oracles::{max_clique, OracleError};

/// Default cap for the exact clique/independence oracles inside the
/// verifier.
pub const DEFAULT_RAMSEY_VERIFY_CAP: usize = 40;
/// Hard limit for the search state (one adjacency word per vertex).
pub const SEARCH_MAX_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Counterexample,
    Inconclusive,
    Invalid,
}

/// Full evaluation of a candidate graph `H` against the refutation chain:
/// pass to the complement `G`, bound `chi(G)` from below by `n / alpha(G)`,
/// and compare with the `omega(G)^2` bound that perfect divisibility would
/// force.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyReport {
    pub n: usize,
    #[serde(rename = "omega_H")]
    pub omega_h: usize,
    #[serde(rename = "alpha_H")]
    pub alpha_h: usize,
    pub t: usize,
    #[serde(rename = "alpha_G")]
    pub alpha_g: usize,
    #[serde(rename = "omega_G")]
    pub omega_g: usize,
    pub chi_lb: usize,
    pub hoang_bound: usize,
    pub verdict: Verdict,
}

impl RamseyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Evaluates `H` under the default oracle cap.
pub fn verify_counterexample(h: &Graph, t: usize) -> Result<RamseyReport, OracleError> {
    verify_counterexample_with_cap(h, t, DEFAULT_RAMSEY_VERIFY_CAP)
}

pub fn verify_counterexample_with_cap(
    h: &Graph,
    t: usize,
    cap: usize,
) -> Result<RamseyReport, OracleError> {
    let n = h.n();
    if n > cap {
        return Err(OracleError::CapExceeded {
            op: "verify_counterexample",
            n,
            cap,
        });
    }
    let omega_h = max_clique(h).size;
    let g = h.complement();
    let omega_g = max_clique(&g).size;
    // Complement duality gives alpha for free on both sides.
    let alpha_h = omega_g;
    let alpha_g = omega_h;
    let chi_lb = if n == 0 {
        0
    } else {
        omega_g.max(n.div_ceil(alpha_g.max(1)))
    };
    let hoang_bound = omega_g * omega_g;
    let verdict = if omega_h >= 4 {
        Verdict::Invalid
    } else if chi_lb > hoang_bound {
        Verdict::Counterexample
    } else {
        Verdict::Inconclusive
    };
    // Arithmetic sanity: the lower bound can only clear omega_G^2 when n is
    // large relative to omega_G^2 * alpha_G.
    debug_assert!(
        verdict != Verdict::Counterexample || n > omega_g * omega_g * alpha_g,
        "counterexample verdict with n = {n} <= {}",
        omega_g * omega_g * alpha_g
    );
    Ok(RamseyReport {
        n,
        omega_h,
        alpha_h,
        t,
        alpha_g,
        omega_g,
        chi_lb,
        hoang_bound,
        verdict,
    })
}

// ============================================================================
// Scan of the hypothetical constant
// ============================================================================

/// One row of the feasibility table for `c * t^3 / ln(t)^4 - 1` versus
/// `3 (t-1)^2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TscanRow {
    pub t: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub satisfied: bool,
}

/// Tabulates, for `t = 4..=t_max`, whether a Ramsey lower bound with the
/// hypothetical constant `c` (natural logarithm) would already beat the
/// quadratic bound. The constant is unpublished, so this is a what-if
/// explorer, not a theorem.
pub fn required_t_scan(c: f64, t_max: usize) -> Vec<TscanRow> {
    assert!(c > 0.0, "the constant must be positive");
    (4..=t_max)
        .map(|t| {
            let tf = t as f64;
            let lhs = c * tf.powi(3) / tf.ln().powi(4) - 1.0;
            let rhs = 3.0 * (tf - 1.0) * (tf - 1.0);
            TscanRow {
                t,
                lhs,
                rhs,
                satisfied: lhs > rhs,
            }
        })
        .collect()
}

// ============================================================================
// Local search for K4-free, low-independence graphs
// ============================================================================

/// Mutable adjacency with incremental violation bookkeeping.
///
/// `violations = (#K4 subsets) + (#independent subsets of size
/// alpha_target + 1)`; a single edge flip only changes subsets containing
/// both endpoints, which keeps the update local.
struct FlipState {
    n: usize,
    forbidden_set_size: usize, // alpha_target + 1
    adj: Vec<u64>,
    k4: u64,
    indep: u64,
}

impl FlipState {
    fn new_random(rng: &mut ChaCha8Rng, n: usize, forbidden_set_size: usize) -> Self {
        let mut adj = vec![0u64; n];
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.5) {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
        }
        let mut state = Self {
            n,
            forbidden_set_size,
            adj,
            k4: 0,
            indep: 0,
        };
        state.recount();
        state
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn violations(&self) -> u64 {
        self.k4 + self.indep
    }

    /// From-scratch counts; also the test oracle for the incremental path.
    fn recount(&mut self) {
        self.k4 = self.count_cliques_of_size(self.full_mask(), 4);
        self.indep = self.count_indep_of_size(self.full_mask(), self.forbidden_set_size);
    }

    fn count_cliques_of_size(&self, allowed: u64, size: usize) -> u64 {
        if size == 0 {
            return 1;
        }
        let mut total = 0;
        let mut pool = allowed;
        while pool != 0 {
            let v = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            // Only count sets whose minimum is v: restrict to higher
            // vertices.
            total += self.count_cliques_of_size(pool & self.adj[v], size - 1);
        }
        total
    }

    fn count_indep_of_size(&self, allowed: u64, size: usize) -> u64 {
        if size == 0 {
            return 1;
        }
        let mut total = 0;
        let mut pool = allowed;
        while pool != 0 {
            let v = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            total += self.count_indep_of_size(pool & !self.adj[v], size - 1);
        }
        total
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Signed violation change a flip of `(u, v)` would cause.
    fn flip_delta(&self, u: usize, v: usize) -> i64 {
        let common_nb = self.adj[u] & self.adj[v];
        let mut common_non = !self.adj[u] & !self.adj[v] & self.full_mask();
        common_non &= !(1 << u);
        common_non &= !(1 << v);
        let k4_through = self.count_cliques_of_size(common_nb, 2) as i64;
        let indep_through = self.count_indep_of_size(common_non, self.forbidden_set_size - 2) as i64;
        if self.has_edge(u, v) {
            // Removing: K4s through the edge disappear, independent sets
            // through the non-edge appear.
            indep_through - k4_through
        } else {
            k4_through - indep_through
        }
    }

    fn flip(&mut self, u: usize, v: usize) {
        let common_nb = self.adj[u] & self.adj[v];
        let mut common_non = !self.adj[u] & !self.adj[v] & self.full_mask();
        common_non &= !(1 << u);
        common_non &= !(1 << v);
        let k4_through = self.count_cliques_of_size(common_nb, 2);
        let indep_through = self.count_indep_of_size(common_non, self.forbidden_set_size - 2);
        if self.has_edge(u, v) {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
            self.k4 -= k4_through;
            self.indep += indep_through;
        } else {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.k4 += k4_through;
            self.indep -= indep_through;
        }
    }

    fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(self.n, &edges).expect("valid adjacency")
    }
}

/// Best graph found by [`search_k4_free`], with its violation count and
/// full report (`t = alpha_target + 1`).
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub graph: Graph,
    pub graph6: String,
    pub violations: u64,
    pub steps_used: u64,
    pub report: RamseyReport,
}

/// Seeded local search over single edge flips minimizing
/// `#K4 + #(independent sets of size alpha_target + 1)`.
///
/// Runs independent restarts: a fresh random graph every `budget / 10`
/// steps, each restart's generator seeded from `seed` and the restart
/// index, so restarts could run concurrently without changing the result.
/// A sampled flip is applied when it strictly improves the count or keeps
/// it equal (plateau moves are what let the walk escape the abundant flat
/// regions of this objective). Each restart reports the first state
/// achieving its lowest count; the winner across restarts is the
/// lexicographically smallest graph6 string among the lowest counts.
pub fn search_k4_free(
    n: usize,
    alpha_target: usize,
    budget: u64,
    seed: u64,
) -> Result<SearchOutcome, OracleError> {
    if n == 0 || n > SEARCH_MAX_N {
        return Err(OracleError::CapExceeded {
            op: "search_k4_free",
            n,
            cap: SEARCH_MAX_N,
        });
    }
    assert!(alpha_target >= 1, "alpha_target must be at least 1");

    let restart_interval = (budget / 10).max(1);
    let mut best: Option<(u64, String)> = None;
    let mut step = 0u64;
    let mut restart_idx = 0u64;
    while step < budget {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ restart_idx.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        restart_idx += 1;
        let mut state = FlipState::new_random(&mut rng, n, alpha_target + 1);
        let mut local_best = (state.violations(), state.adj.clone());
        let segment_end = (step + restart_interval).min(budget);
        while step < segment_end && local_best.0 > 0 {
            step += 1;
            let u = rng.random_range(0..n);
            let mut v = rng.random_range(0..n);
            while v == u {
                v = rng.random_range(0..n);
            }
            let delta = state.flip_delta(u, v);
            if delta <= 0 {
                state.flip(u, v);
                if delta < 0 && state.violations() < local_best.0 {
                    local_best = (state.violations(), state.adj.clone());
                }
            }
        }
        // Merge this restart's candidate into the global winner.
        let candidate_graph = FlipState {
            n,
            forbidden_set_size: alpha_target + 1,
            adj: local_best.1,
            k4: 0,
            indep: 0,
        }
        .to_graph();
        let candidate = (local_best.0, encode_graph6(&candidate_graph));
        match &mut best {
            None => best = Some(candidate),
            Some((bv, bg6)) => {
                if candidate.0 < *bv || (candidate.0 == *bv && candidate.1 < *bg6) {
                    *bv = candidate.0;
                    *bg6 = candidate.1;
                }
            }
        }
        if best.as_ref().is_some_and(|(v, _)| *v == 0) {
            break;
        }
    }

    let (violations, graph6) = best.expect("at least one restart ran");
    let graph = crate::formats::parse_graph6(&graph6).expect("own encoding");
    let report = verify_counterexample_with_cap(&graph, alpha_target + 1, SEARCH_MAX_N)?;
    Ok(SearchOutcome {
        graph,
        graph6,
        violations,
        steps_used: step,
        report,
    })
}

/// Convenience wrapper for the test suites: violations of an arbitrary
/// graph under the search objective.
pub fn count_violations(g: &Graph, alpha_target: usize) -> u64 {
    assert!(g.n() <= SEARCH_MAX_N);
    let mut adj = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut state = FlipState {
        n: g.n(),
        forbidden_set_size: alpha_target + 1,
        adj,
        k4: 0,
        indep: 0,
    };
    state.recount();
    state.violations()
}

// ============================================================================
// Tests
// ============================================================================
