//! Exact desk-scale solvers.
//!
//! These serve double duty: production subroutines (clique numbers inside
//! the division algorithm) and ground truth for tests. They are exact or
//! they refuse the instance; none of them approximates.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::cycles::{self, Parity};
use crate::graph::{Graph, VertexSet};

/// Default cap for the perfectness decision.
pub const DEFAULT_PERFECT_CAP: usize = 20;
/// Default cap for the perfect-divisibility decision (doubly exponential).
pub const DEFAULT_PERFECT_DIV_CAP: usize = 10;
/// Default cap for the fully quantified k-divisibility decision.
pub const DEFAULT_K_DIV_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{op}: instance too large (n = {n}, cap = {cap})")]
    CapExceeded {
        op: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("the input graph has no edges")]
    EdgelessInput,
    #[error("k = {k} is out of range for this operation (need k >= {min})")]
    BadK { k: usize, min: usize },
}

/// Checks whether `s` induces a complete subgraph.
pub fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| s.above(v).is_subset(g.neighbors(v)))
}

// ============================================================================
// Maximum clique
// ============================================================================

/// An exact clique number together with a witness clique of that size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: VertexSet,
}

/// Exact maximum clique of the whole graph.
pub fn max_clique(g: &Graph) -> CliqueResult {
    max_clique_in(g, &VertexSet::full(g.n()))
}

/// Exact maximum clique restricted to the vertices of `candidates`.
///
/// Branch and bound with a greedy-coloring bound; vertices are always
/// scanned in ascending order, so the witness is deterministic.
pub fn max_clique_in(g: &Graph, candidates: &VertexSet) -> CliqueResult {
    let mut best = CliqueResult {
        size: 0,
        witness: VertexSet::empty(g.n()),
    };
    let mut current = Vec::new();
    expand_clique(g, candidates.clone(), &mut current, &mut best);
    best
}

fn expand_clique(g: &Graph, p: VertexSet, current: &mut Vec<usize>, best: &mut CliqueResult) {
    if p.is_empty() {
        if current.len() > best.size {
            best.size = current.len();
            best.witness = VertexSet::from_vertices(g.n(), current);
        }
        return;
    }
    // Greedy coloring of the candidate set; a clique inside the first i
    // vertices of the color order has size at most color(i).
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in p.iter() {
        match classes
            .iter_mut()
            .find(|class| !class.intersects(g.neighbors(v)))
        {
            Some(class) => class.insert(v),
            None => classes.push(VertexSet::singleton(g.n(), v)),
        }
    }
    let mut ordered: Vec<(usize, usize)> = Vec::with_capacity(p.len());
    for (ci, class) in classes.iter().enumerate() {
        for v in class.iter() {
            ordered.push((ci + 1, v));
        }
    }
    let mut p_rem = p;
    for &(bound, v) in ordered.iter().rev() {
        if current.len() + bound <= best.size {
            return;
        }
        current.push(v);
        let next = p_rem.intersection(g.neighbors(v));
        expand_clique(g, next, current, best);
        current.pop();
        p_rem.remove(v);
    }
}

/// Exact maximum independent set: the clique oracle on the complement.
pub fn max_independent_set(g: &Graph) -> CliqueResult {
    max_clique(&g.complement())
}

// ============================================================================
// Chromatic number
// ============================================================================

/// An exact chromatic number with a witness proper coloring using colors
/// `0..chi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringResult {
    pub chi: usize,
    pub colors: Vec<usize>,
}

impl ColoringResult {
    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges()
            .iter()
            .all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Exact chromatic number by iterative deepening: start from the
/// `max(omega, ceil(n/alpha))` lower bound and grow until a proper coloring
/// exists. The feasibility search picks the uncolored vertex of maximum
/// saturation degree, ties broken by lowest index.
pub fn chromatic_number(g: &Graph) -> ColoringResult {
    let n = g.n();
    if n == 0 {
        return ColoringResult {
            chi: 0,
            colors: Vec::new(),
        };
    }
    let omega = max_clique(g).size;
    let alpha = max_independent_set(g).size;
    let lower = omega.max(n.div_ceil(alpha));
    for k in lower..=n {
        if let Some(colors) = try_color(g, k) {
            return ColoringResult { chi: k, colors };
        }
    }
    unreachable!("n colors always suffice");
}

fn try_color(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    if color_rec(g, k, &mut colors, 0, 0) {
        Some(colors.into_iter().map(|c| c.expect("assigned")).collect())
    } else {
        None
    }
}

fn color_rec(
    g: &Graph,
    k: usize,
    colors: &mut [Option<usize>],
    assigned: usize,
    used: usize,
) -> bool {
    let n = g.n();
    if assigned == n {
        return true;
    }
    // Saturation-degree choice, ties by lowest vertex index.
    let mut pick: Option<(usize, usize, VertexSet)> = None; // (sat, v, forbidden)
    for v in 0..n {
        if colors[v].is_some() {
            continue;
        }
        let mut forbidden = VertexSet::empty(k);
        for u in g.neighbors(v).iter() {
            if let Some(c) = colors[u] {
                forbidden.insert(c);
            }
        }
        let sat = forbidden.len();
        if pick.as_ref().is_none_or(|(s, _, _)| sat > *s) {
            pick = Some((sat, v, forbidden));
        }
    }
    let (_, v, forbidden) = pick.expect("some vertex uncolored");
    let limit = k.min(used + 1);
    for c in 0..limit {
        if forbidden.contains(c) {
            continue;
        }
        colors[v] = Some(c);
        if color_rec(g, k, colors, assigned + 1, used.max(c + 1)) {
            return true;
        }
        colors[v] = None;
    }
    false
}

/// `max(omega(g), ceil(n / alpha(g)))` — the chromatic lower bound used by
/// the counterexample verifier.
pub fn chi_lower_bounds(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let omega = max_clique(g).size;
    let alpha = max_independent_set(g).size;
    omega.max(n.div_ceil(alpha))
}

// ============================================================================
// Perfectness
// ============================================================================

/// Why a graph is imperfect: an induced odd hole, or an induced odd
/// antihole (given as the hole of the complement on the same vertices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "cycle", rename_all = "snake_case")]
pub enum ImperfectionWitness {
    OddHole(Vec<usize>),
    OddAntihole(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectnessResult {
    pub perfect: bool,
    pub witness: Option<ImperfectionWitness>,
}

/// Decides perfectness under the default cap.
pub fn is_perfect(g: &Graph) -> Result<PerfectnessResult, OracleError> {
    is_perfect_with_cap(g, DEFAULT_PERFECT_CAP)
}

/// Decides perfectness by searching for an induced odd cycle of length at
/// least five in the graph or its complement, which is exactly the strong
/// perfect graph characterization.
pub fn is_perfect_with_cap(g: &Graph, cap: usize) -> Result<PerfectnessResult, OracleError> {
    if g.n() > cap {
        return Err(OracleError::CapExceeded {
            op: "is_perfect",
            n: g.n(),
            cap,
        });
    }
    let full = VertexSet::full(g.n());
    Ok(perfectness_in(g, &g.complement(), &full))
}

/// Uncapped masked perfectness check shared with the memoized subset
/// oracle; `gc` must be the complement of `g`.
fn perfectness_in(g: &Graph, gc: &Graph, within: &VertexSet) -> PerfectnessResult {
    if let Some(cycle) = cycles::shortest_hole(g, within, Parity::Odd, 5) {
        return PerfectnessResult {
            perfect: false,
            witness: Some(ImperfectionWitness::OddHole(cycle)),
        };
    }
    if let Some(cycle) = cycles::shortest_hole(gc, within, Parity::Odd, 5) {
        return PerfectnessResult {
            perfect: false,
            witness: Some(ImperfectionWitness::OddAntihole(cycle)),
        };
    }
    PerfectnessResult {
        perfect: true,
        witness: None,
    }
}

// ============================================================================
// Memoized subset oracle
// ============================================================================

/// Per-call memo tables keyed by vertex-subset bitmask (so the quantifier
/// over induced subgraphs can revisit subsets cheaply). Only usable for
/// `n <= 64`, which the divisibility caps guarantee.
struct SubsetOracle<'a> {
    g: &'a Graph,
    gc: Graph,
    omega_memo: HashMap<u64, usize>,
    perfect_memo: HashMap<u64, bool>,
}

impl<'a> SubsetOracle<'a> {
    fn new(g: &'a Graph) -> Self {
        debug_assert!(g.n() <= 64);
        Self {
            g,
            gc: g.complement(),
            omega_memo: HashMap::new(),
            perfect_memo: HashMap::new(),
        }
    }

    fn set_of(&self, mask: u64) -> VertexSet {
        let members: Vec<usize> = (0..self.g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        VertexSet::from_vertices(self.g.n(), &members)
    }

    fn has_edge(&self, mask: u64) -> bool {
        let s = self.set_of(mask);
        s.iter().any(|v| self.g.neighbors(v).intersects(&s))
    }

    fn omega(&mut self, mask: u64) -> usize {
        if let Some(&w) = self.omega_memo.get(&mask) {
            return w;
        }
        let w = max_clique_in(self.g, &self.set_of(mask)).size;
        self.omega_memo.insert(mask, w);
        w
    }

    fn perfect(&mut self, mask: u64) -> bool {
        if let Some(&p) = self.perfect_memo.get(&mask) {
            return p;
        }
        let p = perfectness_in(self.g, &self.gc, &self.set_of(mask)).perfect;
        self.perfect_memo.insert(mask, p);
        p
    }
}

// ============================================================================
// Perfect divisibility
// ============================================================================

/// Outcome of the fully quantified perfect-divisibility decision.
///
/// `Divisible` carries the split `(A, B)` found for the input graph itself
/// (absent only for the zero-vertex graph) plus the memo table of splits,
/// one entry per induced subgraph with an edge, keyed by subset bitmask.
/// `NotDivisible` names an induced subgraph (with at least one edge) that
/// admits no valid split.
#[derive(Clone, Debug)]
pub enum PerfectDivResult {
    Divisible {
        witness: Option<(VertexSet, VertexSet)>,
        table: BTreeMap<u64, (u64, u64)>,
    },
    NotDivisible { failing: VertexSet },
}

impl PerfectDivResult {
    pub fn divisible(&self) -> bool {
        matches!(self, PerfectDivResult::Divisible { .. })
    }
}

pub fn is_perfectly_divisible(g: &Graph) -> Result<PerfectDivResult, OracleError> {
    is_perfectly_divisible_with_cap(g, DEFAULT_PERFECT_DIV_CAP)
}

/// Brute force over every induced subgraph and every `(A, B)` bipartition,
/// with memoized per-subset clique number and perfectness. For each
/// subgraph the `A`-candidates are enumerated from the whole subgraph
/// downward, so a perfect subgraph gets the `B = empty set` split first.
pub fn is_perfectly_divisible_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<PerfectDivResult, OracleError> {
    let n = g.n();
    if n > cap {
        return Err(OracleError::CapExceeded {
            op: "is_perfectly_divisible",
            n,
            cap,
        });
    }
    let mut oracle = SubsetOracle::new(g);
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut table = BTreeMap::new();
    let mut s: u64 = 0;
    loop {
        if oracle.has_edge(s) {
            let w = oracle.omega(s);
            let mut found = None;
            let mut a = s;
            loop {
                let b = s & !a;
                if oracle.omega(b) < w && oracle.perfect(a) {
                    found = Some((a, b));
                    break;
                }
                if a == 0 {
                    break;
                }
                a = (a - 1) & s;
            }
            match found {
                Some(split) => {
                    table.insert(s, split);
                }
                None => {
                    return Ok(PerfectDivResult::NotDivisible {
                        failing: oracle.set_of(s),
                    });
                }
            }
        }
        if s == full {
            break;
        }
        s += 1;
    }
    let witness = if n == 0 {
        None
    } else if let Some(&(a, b)) = table.get(&full) {
        Some((oracle.set_of(a), oracle.set_of(b)))
    } else {
        // Edgeless input: the quantifier is vacuous, and (V, empty) itself
        // satisfies the split condition since omega(empty) = 0 < 1.
        Some((VertexSet::full(n), VertexSet::empty(n)))
    };
    Ok(PerfectDivResult::Divisible { witness, table })
}

// ============================================================================
// k-divisibility
// ============================================================================

/// Outcome of the fully quantified k-divisibility decision. `Divisible`
/// carries a witness partition of the input graph into exactly `k` parts
/// (padded with empty parts); `NotDivisible` names a failing induced
/// subgraph.
#[derive(Clone, Debug)]
pub enum KDivisibility {
    Divisible { parts: Vec<VertexSet> },
    NotDivisible { failing: VertexSet },
}

impl KDivisibility {
    pub fn divisible(&self) -> bool {
        matches!(self, KDivisibility::Divisible { .. })
    }
}

pub fn is_k_divisible(g: &Graph, k: usize) -> Result<KDivisibility, OracleError> {
    is_k_divisible_with_cap(g, k, DEFAULT_K_DIV_CAP)
}

/// For every induced subgraph with an edge, searches the k-labelings
/// (restricted-growth form, so permutations of part names are tried once)
/// for one where no part reaches the subgraph's clique number.
pub fn is_k_divisible_with_cap(
    g: &Graph,
    k: usize,
    cap: usize,
) -> Result<KDivisibility, OracleError> {
    if k < 2 {
        return Err(OracleError::BadK { k, min: 2 });
    }
    let n = g.n();
    if n > cap {
        return Err(OracleError::CapExceeded {
            op: "is_k_divisible",
            n,
            cap,
        });
    }
    if !g.has_any_edge() {
        return Err(OracleError::EdgelessInput);
    }
    let mut oracle = SubsetOracle::new(g);
    let full: u64 = (1u64 << n) - 1;
    let mut top_parts: Option<Vec<VertexSet>> = None;
    for s in 0..=full {
        if !oracle.has_edge(s) {
            continue;
        }
        let w = oracle.omega(s);
        let verts: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let mut labels = vec![0usize; verts.len()];
        let mut part_masks = vec![0u64; k];
        if !label_search(&mut oracle, &verts, k, w, 0, 0, &mut labels, &mut part_masks) {
            return Ok(KDivisibility::NotDivisible {
                failing: oracle.set_of(s),
            });
        }
        if s == full {
            let parts = part_masks.iter().map(|&m| oracle.set_of(m)).collect();
            top_parts = Some(parts);
        }
    }
    Ok(KDivisibility::Divisible {
        parts: top_parts.expect("the full graph has an edge"),
    })
}

fn label_search(
    oracle: &mut SubsetOracle<'_>,
    verts: &[usize],
    k: usize,
    w: usize,
    i: usize,
    used: usize,
    labels: &mut [usize],
    part_masks: &mut [u64],
) -> bool {
    if i == verts.len() {
        return part_masks.iter().all(|&m| oracle.omega(m) < w);
    }
    let limit = k.min(used + 1);
    for c in 0..limit {
        labels[i] = c;
        part_masks[c] |= 1u64 << verts[i];
        if label_search(oracle, verts, k, w, i + 1, used.max(c + 1), labels, part_masks) {
            return true;
        }
        part_masks[c] &= !(1u64 << verts[i]);
    }
    false
}

// ============================================================================
// Tests
// ============================================================================
