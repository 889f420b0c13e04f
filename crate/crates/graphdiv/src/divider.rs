//! From a k-simplicial elimination ordering to a (k+1)-division, and from
//! divisions to colorings.
//!
//! Vertices are inserted back in reverse elimination order while the clique
//! number `w` of the inserted graph is maintained incrementally (`w` grows
//! by one exactly when the incoming vertex sees a `w`-clique). Each
//! insertion picks a part that provably cannot acquire a maximum clique:
//! when `w` grew, every part qualifies except during the very first edge's
//! appearance; when `w` stayed, a counting argument over the k cliques
//! covering the neighborhood guarantees a non-"bad" part. Every step is
//! double-checked against from-scratch clique computations, and the final
//! division is re-verified independently before use.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::oracles::{max_clique, max_clique_in};
use crate::simplicial::{self, EliminationOrder, OrderError};

/// A partition of the vertex set into `k + 1` parts, none containing a
/// maximum clique, with per-part clique-number evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    /// Number of parts (`k + 1`).
    pub part_count: usize,
    /// Part index of every vertex.
    pub assignment: Vec<usize>,
    /// Clique number of the whole graph.
    pub omega: usize,
    /// Exact clique number of each part.
    pub per_part_clique: Vec<usize>,
}

impl Division {
    /// Members of one part, ascending.
    pub fn part(&self, i: usize) -> VertexSet {
        let members: Vec<usize> = self
            .assignment
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p == i)
            .map(|(v, _)| v)
            .collect();
        VertexSet::from_vertices(self.assignment.len(), &members)
    }
}

/// Which of the two proof branches an insertion took.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// The clique number grew by one.
    Grow,
    /// The clique number stayed.
    Stay,
}

/// One insertion step of the audit trail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub v: usize,
    pub branch: Branch,
    pub bad: Vec<usize>,
    pub chosen: usize,
}

/// Audit trail of the whole run, in insertion order (reverse elimination
/// order).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DivisionTrace {
    pub steps: Vec<TraceStep>,
}

#[derive(Clone, Debug, Error)]
pub enum DivideError {
    #[error("the input graph has no edges")]
    EdgelessGraph,
    #[error("order uses k = {found}, divide was called with k = {expected}")]
    KMismatch { expected: usize, found: usize },
    #[error("invalid elimination order: {0}")]
    InvalidOrder(#[from] OrderError),
    #[error("no part can take vertex {vertex}: all {parts} parts are bad (this contradicts the counting bound, so the order or the implementation is broken)")]
    TheoremViolation {
        vertex: usize,
        parts: usize,
        trace: DivisionTrace,
    },
    #[error("internal invariant failed at insertion of vertex {vertex}: {detail}")]
    InvariantViolation {
        vertex: usize,
        detail: String,
        trace: DivisionTrace,
    },
}

/// Runs the division construction.
///
/// `order` must be a valid k-simplicial elimination ordering of `g`; it is
/// re-verified before anything else. The result is the division plus the
/// per-step trace. Should the guaranteed non-bad part ever be missing, the
/// error carries the full trace for diagnosis.
pub fn divide(
    g: &Graph,
    k: usize,
    order: &EliminationOrder,
) -> Result<(Division, DivisionTrace), DivideError> {
    if !g.has_any_edge() {
        return Err(DivideError::EdgelessGraph);
    }
    if order.k != k {
        return Err(DivideError::KMismatch {
            expected: k,
            found: order.k,
        });
    }
    order.verify(g)?;

    let n = g.n();
    let part_count = k + 1;
    let mut parts = vec![VertexSet::empty(n); part_count];
    let mut inserted = VertexSet::empty(n);
    let mut w = 0usize;
    let mut trace = DivisionTrace::default();

    for step in order.steps.iter().rev() {
        let v = step.vertex;
        let nb = g.neighbors(v).intersection(&inserted);
        let grew = max_clique_in(g, &nb).size >= w;
        let w_new = if grew { w + 1 } else { w };

        let (bad, chosen) = if w_new <= 1 {
            // Still edgeless: the division contract is vacuous here.
            (Vec::new(), 0)
        } else if grew && w >= 2 {
            // Every part held cliques of size at most w - 1 < w_new - 1, so
            // any part absorbs v; take the first.
            (Vec::new(), 0)
        } else {
            // Either w stayed, or the first edge just appeared (w_new = 2
            // from an edgeless graph, where part 0 holds old neighbors of
            // v). A part is bad when its slice of N(v) holds a
            // (w_new - 1)-clique; the cover of N(v) by k cliques bounds the
            // number of bad parts by k.
            let threshold = w_new - 1;
            let bad: Vec<usize> = (0..part_count)
                .filter(|&i| {
                    let slice = parts[i].intersection(&nb);
                    max_clique_in(g, &slice).size >= threshold
                })
                .collect();
            let chosen = match (0..part_count).find(|i| !bad.contains(i)) {
                Some(c) => c,
                None => {
                    return Err(DivideError::TheoremViolation {
                        vertex: v,
                        parts: part_count,
                        trace,
                    });
                }
            };
            (bad, chosen)
        };

        parts[chosen].insert(v);
        inserted.insert(v);
        trace.steps.push(TraceStep {
            v,
            branch: if grew { Branch::Grow } else { Branch::Stay },
            bad,
            chosen,
        });
        w = w_new;

        // Defense in depth: incremental w must match a from-scratch
        // computation, and once the graph has an edge no part may hold a
        // w-clique.
        let w_check = max_clique_in(g, &inserted).size;
        if w_check != w {
            return Err(DivideError::InvariantViolation {
                vertex: v,
                detail: format!("incremental omega {w} but recomputed {w_check}"),
                trace,
            });
        }
        if w >= 2 {
            for (i, part) in parts.iter().enumerate() {
                let pw = max_clique_in(g, part).size;
                if pw >= w {
                    return Err(DivideError::InvariantViolation {
                        vertex: v,
                        detail: format!("part {i} holds a {pw}-clique with omega = {w}"),
                        trace,
                    });
                }
            }
        }
    }

    let mut assignment = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        for v in part.iter() {
            assignment[v] = i;
        }
    }
    let per_part_clique = parts.iter().map(|p| max_clique_in(g, p).size).collect();
    Ok((
        Division {
            part_count,
            assignment,
            omega: w,
            per_part_clique,
        },
        trace,
    ))
}

/// What an independent re-check of a division can find wrong.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DivisionDefect {
    #[error("assignment covers {found} vertices, graph has {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {vertex} is assigned to part {part}, but there are only {parts} parts")]
    PartOutOfRange {
        vertex: usize,
        part: usize,
        parts: usize,
    },
    #[error("division claims omega = {claimed}, recomputed {actual}")]
    OmegaMismatch { claimed: usize, actual: usize },
    #[error("part {part} claims clique number {claimed}, recomputed {actual}")]
    PartCliqueMismatch {
        part: usize,
        claimed: usize,
        actual: usize,
    },
    #[error("part {part} contains a clique of size {size} = omega, so it holds a maximum clique")]
    PartHoldsMaximumClique { part: usize, size: usize },
}

/// Recomputes everything a division claims — partition shape, the graph's
/// clique number, every per-part clique number — using only the oracles,
/// independently of how the division was produced.
pub fn verify_division(g: &Graph, d: &Division) -> Result<(), DivisionDefect> {
    let n = g.n();
    if d.assignment.len() != n {
        return Err(DivisionDefect::WrongLength {
            expected: n,
            found: d.assignment.len(),
        });
    }
    if let Some((vertex, &part)) = d
        .assignment
        .iter()
        .enumerate()
        .find(|&(_, &p)| p >= d.part_count)
    {
        return Err(DivisionDefect::PartOutOfRange {
            vertex,
            part,
            parts: d.part_count,
        });
    }
    let omega = max_clique(g).size;
    if omega != d.omega {
        return Err(DivisionDefect::OmegaMismatch {
            claimed: d.omega,
            actual: omega,
        });
    }
    for i in 0..d.part_count {
        let part = d.part(i);
        let actual = max_clique_in(g, &part).size;
        if d.per_part_clique.get(i) != Some(&actual) {
            return Err(DivisionDefect::PartCliqueMismatch {
                part: i,
                claimed: d.per_part_clique.get(i).copied().unwrap_or(usize::MAX),
                actual,
            });
        }
        if g.has_any_edge() && actual >= omega {
            return Err(DivisionDefect::PartHoldsMaximumClique {
                part: i,
                size: actual,
            });
        }
    }
    Ok(())
}

// ============================================================================
// Coloring by recursive division
// ============================================================================

#[derive(Clone, Debug, Error)]
pub enum ColorError {
    #[error("division failed: {0}")]
    Divide(#[from] DivideError),
    #[error("no k-simplicial elimination ordering for the subgraph at part path {part_path:?} ({residual_size} residual vertices)")]
    OrderFailed {
        part_path: Vec<usize>,
        residual_size: usize,
        residual: Graph,
    },
}

/// A proper coloring produced by recursive division; uses at most
/// `(k+1)^(omega-1)` colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionColoring {
    pub colors_used: usize,
    pub colors: Vec<usize>,
}

impl DivisionColoring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges()
            .iter()
            .all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// The color budget `(k+1)^(omega-1)` (saturating).
pub fn division_color_bound(k: usize, omega: usize) -> usize {
    (k + 1)
        .checked_pow(omega.saturating_sub(1) as u32)
        .unwrap_or(usize::MAX)
}

/// Colors `g` by dividing it, recursing on each part (each has strictly
/// smaller clique number), and giving every part a disjoint color range.
/// Elimination orderings are re-derived per part, so the hereditary
/// hypothesis is checked on the fly.
pub fn color_by_division(g: &Graph, k: usize) -> Result<DivisionColoring, ColorError> {
    let mut path = Vec::new();
    color_rec(g, k, &mut path)
}

fn color_rec(g: &Graph, k: usize, path: &mut Vec<usize>) -> Result<DivisionColoring, ColorError> {
    let n = g.n();
    if n == 0 {
        return Ok(DivisionColoring {
            colors_used: 0,
            colors: Vec::new(),
        });
    }
    if !g.has_any_edge() {
        return Ok(DivisionColoring {
            colors_used: 1,
            colors: vec![0; n],
        });
    }
    let order = match simplicial::elimination_order(g, k) {
        Ok(order) => order,
        Err(residual) => {
            let (res_graph, _) = g
                .induced_subgraph(&residual)
                .expect("residual within graph");
            return Err(ColorError::OrderFailed {
                part_path: path.clone(),
                residual_size: res_graph.n(),
                residual: res_graph,
            });
        }
    };
    let (division, _) = divide(g, k, &order)?;
    let mut colors = vec![0usize; n];
    let mut offset = 0usize;
    for i in 0..division.part_count {
        let members = division.part(i);
        if members.is_empty() {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&members).expect("part within graph");
        path.push(i);
        let sub_coloring = color_rec(&sub, k, path)?;
        path.pop();
        for (new, &c) in sub_coloring.colors.iter().enumerate() {
            colors[map.to_old(new)] = offset + c;
        }
        offset += sub_coloring.colors_used;
    }
    Ok(DivisionColoring {
        colors_used: offset,
        colors,
    })
}

// ============================================================================
// JSON certificate
// ============================================================================

/// The serialized certificate: the division plus its audit trail. Field
/// order is fixed; arrays are vertex-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionCertificate {
    pub n: usize,
    pub k: usize,
    pub omega: usize,
    pub parts: Vec<usize>,
    pub per_part_clique: Vec<usize>,
    pub trace: Vec<TraceStep>,
}

impl DivisionCertificate {
    pub fn new(k: usize, division: &Division, trace: &DivisionTrace) -> Self {
        Self {
            n: division.assignment.len(),
            k,
            omega: division.omega,
            parts: division.assignment.clone(),
            per_part_clique: division.per_part_clique.clone(),
            trace: trace.steps.clone(),
        }
    }

    /// Compact single-line JSON; byte-stable for identical inputs.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn division(&self) -> Division {
        Division {
            part_count: self.k + 1,
            assignment: self.parts.clone(),
            omega: self.omega,
            per_part_clique: self.per_part_clique.clone(),
        }
    }
}

// ============================================================================
// Tests
// ============================================================================
