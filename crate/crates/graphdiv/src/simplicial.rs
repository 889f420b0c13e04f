//! k-simplicial vertices and elimination orderings.
//!
//! A vertex is k-simplicial when its neighborhood splits into k (possibly
//! empty) cliques. Repeatedly removing such vertices yields the elimination
//! orderings that drive the division algorithm; `k = 1` is the classical
//! simplicial notion of chordal graph theory and is supported as well, even
//! though the division statement is usually quoted for `k >= 2`.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::oracles::{is_clique, max_clique_in};

/// A vertex together with a partition of its neighborhood into exactly `k`
/// cliques, empty parts materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialWitness {
    pub vertex: usize,
    pub cover: Vec<VertexSet>,
}

impl SimplicialWitness {
    pub fn k(&self) -> usize {
        self.cover.len()
    }

    /// Re-checks the witness in the whole graph.
    pub fn verify(&self, g: &Graph) -> Result<(), WitnessError> {
        self.verify_in(g, &VertexSet::full(g.n()))
    }

    /// Re-checks the witness in the subgraph induced by `remaining`:
    /// pairwise disjoint parts, each a clique, whose union is exactly the
    /// residual neighborhood of the vertex.
    pub fn verify_in(&self, g: &Graph, remaining: &VertexSet) -> Result<(), WitnessError> {
        if !remaining.contains(self.vertex) {
            return Err(WitnessError::VertexOutsideResidual {
                vertex: self.vertex,
            });
        }
        let mut union = VertexSet::empty(g.n());
        for (i, part) in self.cover.iter().enumerate() {
            if !union.is_disjoint(part) {
                return Err(WitnessError::OverlappingParts { part: i });
            }
            if !is_clique(g, part) {
                return Err(WitnessError::PartNotClique { part: i });
            }
            union.union_with(part);
        }
        let expected = g.neighbors(self.vertex).intersection(remaining);
        if union != expected {
            return Err(WitnessError::UnionMismatch {
                vertex: self.vertex,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("witness vertex {vertex} is not in the residual graph")]
    VertexOutsideResidual { vertex: usize },
    #[error("cover part {part} overlaps an earlier part")]
    OverlappingParts { part: usize },
    #[error("cover part {part} is not a clique")]
    PartNotClique { part: usize },
    #[error("cover union differs from the residual neighborhood of {vertex}")]
    UnionMismatch { vertex: usize },
}

/// A complete k-simplicial elimination ordering: step `i` eliminates
/// `steps[i].vertex`, whose witness is valid in the graph induced by the
/// vertices not yet eliminated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    pub k: usize,
    pub steps: Vec<SimplicialWitness>,
}

impl EliminationOrder {
    pub fn vertices(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    /// Replays the elimination and re-verifies every witness in its
    /// residual graph.
    pub fn verify(&self, g: &Graph) -> Result<(), OrderError> {
        if self.steps.len() != g.n() {
            return Err(OrderError::LengthMismatch {
                expected: g.n(),
                found: self.steps.len(),
            });
        }
        let mut remaining = VertexSet::full(g.n());
        for (i, step) in self.steps.iter().enumerate() {
            if step.k() != self.k {
                return Err(OrderError::WrongK {
                    step: i,
                    expected: self.k,
                    found: step.k(),
                });
            }
            if !remaining.contains(step.vertex) {
                return Err(OrderError::RepeatedVertex {
                    step: i,
                    vertex: step.vertex,
                });
            }
            step.verify_in(g, &remaining)
                .map_err(|source| OrderError::InvalidWitness {
                    step: i,
                    vertex: step.vertex,
                    source,
                })?;
            remaining.remove(step.vertex);
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("order has {found} steps for a graph on {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("step {step}: witness has {found} parts, order claims k = {expected}")]
    WrongK {
        step: usize,
        expected: usize,
        found: usize,
    },
    #[error("step {step}: vertex {vertex} already eliminated")]
    RepeatedVertex { step: usize, vertex: usize },
    #[error("step {step}: invalid witness for vertex {vertex}: {source}")]
    InvalidWitness {
        step: usize,
        vertex: usize,
        source: WitnessError,
    },
}

// ============================================================================
// Clique covers
// ============================================================================

/// Partitions `s` into at most `k` nonempty cliques of `g`, or `None` if no
/// such partition exists.
///
/// For `k = 2` this runs the polynomial route: a cover exists iff the
/// complement of `g[s]` is bipartite, and the color classes are the
/// cliques. For `k >= 3` it is an exact backtracking search over `g[s]`.
pub fn clique_cover_of_set(g: &Graph, s: &VertexSet, k: usize) -> Option<Vec<VertexSet>> {
    assert!(k >= 1, "cover size k must be at least 1");
    if s.is_empty() {
        return Some(Vec::new());
    }
    match k {
        1 => is_clique(g, s).then(|| vec![s.clone()]),
        2 => cover_two(g, s),
        _ => cover_backtrack(g, s, k),
    }
}

/// Two-clique cover via 2-coloring of the complemented subgraph. Within
/// each connected component of the complement the two classes can swap;
/// the class holding the component's lowest vertex goes to the first
/// clique, so the lowest vertex of `s` always lands in `C_1`.
fn cover_two(g: &Graph, s: &VertexSet) -> Option<Vec<VertexSet>> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for root in s.iter() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(true);
        let mut queue = vec![root];
        while let Some(u) = queue.pop() {
            let u_side = side[u].expect("assigned before push");
            // Complement neighbors of u within s.
            let mut co = s.difference(g.neighbors(u));
            co.remove(u);
            for w in co.iter() {
                match side[w] {
                    None => {
                        side[w] = Some(!u_side);
                        queue.push(w);
                    }
                    Some(ws) if ws == u_side => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut c1 = VertexSet::empty(n);
    let mut c2 = VertexSet::empty(n);
    for v in s.iter() {
        if side[v] == Some(true) {
            c1.insert(v);
        } else {
            c2.insert(v);
        }
    }
    debug_assert!(is_clique(g, &c1) && is_clique(g, &c2));
    let mut cover = Vec::new();
    for c in [c1, c2] {
        if !c.is_empty() {
            cover.push(c);
        }
    }
    Some(cover)
}

/// Exact cover search for `k >= 3`: vertices ordered by descending degree
/// inside `g[s]`, each assigned to a compatible open clique or a fresh one,
/// pruned when the remaining vertices cannot fit in the remaining capacity.
fn cover_backtrack(g: &Graph, s: &VertexSet, k: usize) -> Option<Vec<VertexSet>> {
    let w_s = max_clique_in(g, s).size;
    if s.len().div_ceil(w_s) > k {
        return None;
    }
    let mut verts: Vec<usize> = s.iter().collect();
    verts.sort_by_key(|&v| {
        let deg_in = g.neighbors(v).intersection(s).len();
        (std::cmp::Reverse(deg_in), v)
    });
    let mut parts: Vec<VertexSet> = Vec::new();
    if assign(g, &verts, 0, k, w_s, &mut parts) {
        Some(parts)
    } else {
        None
    }
}

fn assign(
    g: &Graph,
    verts: &[usize],
    i: usize,
    k: usize,
    w_s: usize,
    parts: &mut Vec<VertexSet>,
) -> bool {
    if i == verts.len() {
        return true;
    }
    let remaining = verts.len() - i;
    let capacity: usize = parts.iter().map(|p| w_s - p.len()).sum::<usize>()
        + (k - parts.len()) * w_s;
    if remaining > capacity {
        return false;
    }
    let v = verts[i];
    for idx in 0..parts.len() {
        if parts[idx].is_subset(g.neighbors(v)) {
            parts[idx].insert(v);
            if assign(g, verts, i + 1, k, w_s, parts) {
                return true;
            }
            parts[idx].remove(v);
        }
    }
    if parts.len() < k {
        parts.push(VertexSet::singleton(g.n(), v));
        if assign(g, verts, i + 1, k, w_s, parts) {
            return true;
        }
        parts.pop();
    }
    false
}

// ============================================================================
// Detection and ordering
// ============================================================================

/// Lowest-index k-simplicial vertex of the whole graph, with its witness.
pub fn find_k_simplicial(g: &Graph, k: usize) -> Option<SimplicialWitness> {
    find_k_simplicial_in(g, &VertexSet::full(g.n()), k)
}

/// Lowest-index k-simplicial vertex of the subgraph induced by
/// `remaining`. The witness always carries exactly `k` parts, padding with
/// empty cliques.
pub fn find_k_simplicial_in(
    g: &Graph,
    remaining: &VertexSet,
    k: usize,
) -> Option<SimplicialWitness> {
    for v in remaining.iter() {
        let nb = g.neighbors(v).intersection(remaining);
        if let Some(mut cover) = clique_cover_of_set(g, &nb, k) {
            while cover.len() < k {
                cover.push(VertexSet::empty(g.n()));
            }
            return Some(SimplicialWitness { vertex: v, cover });
        }
    }
    None
}

/// Builds a complete k-simplicial elimination ordering by repeated
/// detection on the shrinking graph. On failure returns the stuck residual
/// vertex set.
pub fn elimination_order(g: &Graph, k: usize) -> Result<EliminationOrder, VertexSet> {
    let mut remaining = VertexSet::full(g.n());
    let mut steps = Vec::with_capacity(g.n());
    while !remaining.is_empty() {
        match find_k_simplicial_in(g, &remaining, k) {
            Some(witness) => {
                remaining.remove(witness.vertex);
                steps.push(witness);
            }
            None => return Err(remaining),
        }
    }
    Ok(EliminationOrder { k, steps })
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, edgeless, petersen};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn c5_neighborhood_splits_into_two_singletons() {
        let g = cycle(5);
        let s = VertexSet::from_vertices(5, &[1, 4]);
        let cover = clique_cover_of_set(&g, &s, 2).unwrap();
        assert_eq!(cover.len(), 2);
        assert_eq!(cover[0].to_vec(), vec![1]);
        assert_eq!(cover[1].to_vec(), vec![4]);
    }

    #[test]
    fn triangle_is_a_single_clique() {
        let g = complete(4);
        let s = VertexSet::from_vertices(4, &[0, 1, 3]);
        let cover = clique_cover_of_set(&g, &s, 1).unwrap();
        assert_eq!(cover.len(), 1);
        assert_eq!(cover[0], s);
    }

    #[test]
    fn independent_triple_has_no_two_clique_cover() {
        let g = petersen();
        let s = g.neighborhood(0);
        assert_eq!(s.len(), 3);
        assert!(clique_cover_of_set(&g, &s, 2).is_none());
        assert!(clique_cover_of_set(&g, &s, 3).is_some());
    }

    #[test]
    fn empty_set_has_the_empty_cover() {
        let g = cycle(5);
        assert_eq!(
            clique_cover_of_set(&g, &VertexSet::empty(5), 2),
            Some(vec![])
        );
    }

    #[test]
    fn find_2_simplicial_in_c5() {
        let w = find_k_simplicial(&cycle(5), 2).unwrap();
        assert_eq!(w.vertex, 0);
        assert_eq!(w.cover.len(), 2);
        assert_eq!(w.cover[0].to_vec(), vec![1]);
        assert_eq!(w.cover[1].to_vec(), vec![4]);
        assert!(w.verify(&cycle(5)).is_ok());
    }

    #[test]
    fn find_1_simplicial_in_k4() {
        let w = find_k_simplicial(&complete(4), 1).unwrap();
        assert_eq!(w.vertex, 0);
        assert_eq!(w.cover.len(), 1);
        assert_eq!(w.cover[0].to_vec(), vec![1, 2, 3]);
        assert!(w.verify(&complete(4)).is_ok());
    }

    #[test]
    fn petersen_has_no_2_simplicial_vertex() {
        assert!(find_k_simplicial(&petersen(), 2).is_none());
    }

    #[test]
    fn isolated_vertices_are_k_simplicial_for_all_k() {
        let g = edgeless(3);
        for k in 1..=3 {
            let w = find_k_simplicial(&g, k).unwrap();
            assert_eq!(w.vertex, 0);
            assert_eq!(w.cover.len(), k);
            assert!(w.cover.iter().all(VertexSet::is_empty));
            assert!(w.verify(&g).is_ok());
        }
    }

    #[test]
    fn k2_orders_fully() {
        for k in 1..=3 {
            let order = elimination_order(&complete(2), k).unwrap();
            assert_eq!(order.vertices(), vec![0, 1]);
            assert!(order.verify(&complete(2)).is_ok());
        }
    }

    #[test]
    fn c5_orders_fully_at_k2() {
        let g = cycle(5);
        let order = elimination_order(&g, 2).unwrap();
        assert_eq!(order.steps.len(), 5);
        assert!(order.verify(&g).is_ok());
        // Every residual of C5 is a disjoint union of paths; detection must
        // succeed at every step with the lowest remaining index first.
        assert_eq!(order.vertices(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn petersen_gets_stuck_immediately_at_k2() {
        let stuck = elimination_order(&petersen(), 2).unwrap_err();
        assert_eq!(stuck.len(), 10);
    }

    #[test]
    fn witnesses_reverify_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..200 {
            let n = rng.random_range(1..=9);
            let g = random_graph(&mut rng, n, 0.45);
            for k in 1..=3 {
                if let Some(w) = find_k_simplicial(&g, k) {
                    assert!(w.verify(&g).is_ok());
                    assert_eq!(w.k(), k);
                }
                if let Ok(order) = elimination_order(&g, k) {
                    assert!(order.verify(&g).is_ok());
                }
            }
        }
    }

    #[test]
    fn detection_is_monotone_in_k() {
        let mut rng = ChaCha8Rng::seed_from_u64(72);
        for _ in 0..200 {
            let n = rng.random_range(1..=8);
            let g = random_graph(&mut rng, n, 0.5);
            for v in g.vertices() {
                let nb = g.neighborhood(v);
                for k in 1..=3usize {
                    if clique_cover_of_set(&g, &nb, k).is_some() {
                        assert!(
                            clique_cover_of_set(&g, &nb, k + 1).is_some(),
                            "cover at k={k} but not k+1 for {g:?}, v={v}"
                        );
                    }
                }
            }
        }
    }

    /// Exhaustive two-clique cover: try every bipartition.
    fn cover_two_brute(g: &Graph, s: &VertexSet) -> bool {
        let members = s.to_vec();
        let m = members.len();
        for mask in 0u64..(1 << m) {
            let mut c1 = VertexSet::empty(g.n());
            let mut c2 = VertexSet::empty(g.n());
            for (i, &v) in members.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    c1.insert(v);
                } else {
                    c2.insert(v);
                }
            }
            if is_clique(g, &c1) && is_clique(g, &c2) {
                return true;
            }
        }
        false
    }

    #[test]
    fn two_cover_agrees_with_exhaustive_partition_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        for _ in 0..200 {
            let n = rng.random_range(1..=10);
            let g = random_graph(&mut rng, n, 0.5);
            // A random subset of size at most 8.
            let mut s = VertexSet::empty(n);
            for v in 0..n {
                if rng.random_bool(0.6) && s.len() < 8 {
                    s.insert(v);
                }
            }
            let fast = clique_cover_of_set(&g, &s, 2);
            assert_eq!(fast.is_some(), cover_two_brute(&g, &s));
            if let Some(cover) = fast {
                let mut union = VertexSet::empty(n);
                for part in &cover {
                    assert!(is_clique(&g, part));
                    assert!(union.is_disjoint(part));
                    union.union_with(part);
                }
                assert_eq!(union, s);
                if let Some(lowest) = s.min_vertex() {
                    assert!(cover[0].contains(lowest));
                }
            }
        }
    }

    #[test]
    fn backtrack_cover_agrees_with_two_cover_route() {
        // k = 3 on sets whose 2-cover already exists must also succeed.
        let mut rng = ChaCha8Rng::seed_from_u64(74);
        for _ in 0..100 {
            let n = rng.random_range(1..=9);
            let g = random_graph(&mut rng, n, 0.5);
            let s = VertexSet::from_vertices(
                n,
                &(0..n).filter(|_| rng.random_bool(0.5)).collect::<Vec<_>>(),
            );
            if clique_cover_of_set(&g, &s, 2).is_some() {
                let c3 = clique_cover_of_set(&g, &s, 3).unwrap();
                let mut union = VertexSet::empty(n);
                for part in &c3 {
                    assert!(is_clique(&g, part));
                    assert!(union.is_disjoint(part));
                    union.union_with(part);
                }
                assert_eq!(union, s);
            }
        }
    }
}
