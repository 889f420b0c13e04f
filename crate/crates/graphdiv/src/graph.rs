//! Undirected simple graphs over vertices `0..n`, with dense bitset
//! vertex sets.
//!
//! Graphs are immutable after construction: every operation that "changes"
//! a graph (complement, induced subgraph) returns a new value, so graphs
//! can be shared freely across threads.

use std::fmt;

use thiserror::Error;

/// Errors raised by graph constructors.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

// ============================================================================
// VertexSet
// ============================================================================

/// A subset of `{0, .., n-1}` stored as packed 64-bit words.
///
/// A set is created for a fixed universe size; for `n <= 64` everything is
/// a single word, and the same code covers larger universes unchanged.
/// Binary operations require both operands to come from the same universe.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty subset of a universe with `n` elements.
    pub fn empty(n: usize) -> Self {
        Self {
            words: vec![0; n.div_ceil(64)],
        }
    }

    /// The full subset `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if n % 64 != 0 {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        Self { words }
    }

    /// The singleton `{v}`.
    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    /// Builds a set from explicit members.
    pub fn from_vertices(n: usize, vertices: &[usize]) -> Self {
        let mut s = Self::empty(n);
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w >> (v % 64) & 1 == 1)
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v / 64 < self.words.len(), "vertex {v} outside universe");
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v / 64 < self.words.len() {
            self.words[v / 64] &= !(1u64 << (v % 64));
        }
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn min_vertex(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> VertexSetIter<'_> {
        VertexSetIter {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Members above `v`, i.e. `self ∩ {v+1, ..}`.
    pub fn above(&self, v: usize) -> VertexSet {
        let mut s = self.clone();
        let cut = v + 1;
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            if lo + 64 <= cut {
                *w = 0;
            } else if lo < cut {
                *w &= !((1u64 << (cut - lo)) - 1);
            }
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VertexSetIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for VertexSetIter<'_> {
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
        Some(self.word_idx * 64 + bit)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter<'a>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

// ============================================================================
// Graph
// ============================================================================

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse to one
    /// edge; loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { n, adj })
    }

    /// Builds a graph directly from neighbor sets that are already known to
    /// be symmetric and irreflexive.
    pub(crate) fn from_adj(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        #[cfg(debug_assertions)]
        {
            for (v, nb) in adj.iter().enumerate() {
                debug_assert!(!nb.contains(v), "self-loop at {v}");
                for u in nb.iter() {
                    debug_assert!(u < n && adj[u].contains(v), "asymmetric at ({u},{v})");
                }
            }
        }
        Self { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// The neighbor set of `v`, borrowed.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// The neighborhood of `v` as an owned set.
    pub fn neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].clone()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_any_edge(&self) -> bool {
        self.adj.iter().any(|nb| !nb.is_empty())
    }

    /// All edges as pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].above(u).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// The complement graph: `u ~ v` iff `u != v` and they are non-adjacent
    /// here.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| {
                let mut nb = full.clone();
                nb.subtract(&self.adj[v]);
                nb.remove(v);
                nb
            })
            .collect();
        Graph::from_adj(adj)
    }

    /// The subgraph induced by `s`, with vertices relabeled `0..|s|` in
    /// ascending order of the original indices, plus the relabeling map.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Relabeling), GraphError> {
        let new_to_old: Vec<usize> = s.iter().collect();
        if let Some(&v) = new_to_old.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let m = new_to_old.len();
        let mut adj = vec![VertexSet::empty(m); m];
        for (new_u, &old_u) in new_to_old.iter().enumerate() {
            for old_v in self.adj[old_u].intersection(s).iter() {
                let new_v = old_to_new[old_v].expect("member of s");
                adj[new_u].insert(new_v);
            }
        }
        Ok((
            Graph { n: m, adj },
            Relabeling {
                new_to_old,
                old_to_new,
            },
        ))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(self.n, 0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for u in self.adj[v].difference(&seen).iter() {
                seen.insert(u);
                stack.push(u);
            }
        }
        seen.len() == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Index translation produced by [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct Relabeling {
    new_to_old: Vec<usize>,
    old_to_new: Vec<Option<usize>>,
}

impl Relabeling {
    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new[old]
    }

    pub fn len(&self) -> usize {
        self.new_to_old.len()
    }

    pub fn is_empty(&self) -> bool {
        self.new_to_old.is_empty()
    }
}

// ============================================================================
// Stock graphs
// ============================================================================

/// Procedural constructions for the standard small graphs used throughout
/// the tests and fixtures.
pub mod generators {
    use super::Graph;

    pub fn edgeless(n: usize) -> Graph {
        Graph::from_edge_list(n, &[]).expect("no edges")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).expect("valid")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges).expect("valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_list(n, &edges).expect("valid")
    }

    pub fn petersen() -> Graph {
        Graph::from_edge_list(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .expect("valid")
    }

    /// The Paley graph on a prime `q ≡ 1 (mod 4)`: vertices are residues
    /// mod `q`, edges join pairs whose difference is a nonzero square.
    ///
    /// # Panics
    /// Panics if `q` is not a prime congruent to 1 mod 4.
    pub fn paley(q: usize) -> Graph {
        assert!(q >= 5 && q % 4 == 1, "q must be a prime = 1 mod 4");
        assert!(
            (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0),
            "q must be prime"
        );
        let mut residues = vec![false; q];
        for x in 1..q {
            residues[x * x % q] = true;
        }
        let mut edges = Vec::new();
        for u in 0..q {
            for v in (u + 1)..q {
                if residues[(v - u) % q] {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(q, &edges).expect("valid")
    }
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;
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
    fn from_edge_list_k2() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
    }

    #[test]
    fn from_edge_list_c5() {
        let g = cycle(5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(2), 0);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn complement_of_k4_is_edgeless() {
        let g = complete(4).complement();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 4);
    }

    #[test]
    fn complement_is_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.random_range(0..=20);
            let g = random_graph(&mut rng, n, 0.4);
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn complement_of_c5_exact_edges() {
        let g = cycle(5).complement();
        let expected = [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)];
        assert_eq!(g.edges(), expected);
    }

    #[test]
    fn induced_c5_minus_vertex_is_p4() {
        let g = cycle(5);
        let s = VertexSet::from_vertices(5, &[0, 1, 2, 3]);
        let (h, map) = g.induced_subgraph(&s).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(map.to_old(3), 3);
        assert_eq!(map.to_new(4), None);
    }

    #[test]
    fn induced_full_set_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let n = rng.random_range(0..=16);
            let g = random_graph(&mut rng, n, 0.5);
            let (h, _) = g.induced_subgraph(&VertexSet::full(n)).unwrap();
            assert_eq!(h, g);
        }
    }

    #[test]
    fn induced_k5_on_two_vertices_is_k2() {
        let g = complete(5);
        let (h, _) = g
            .induced_subgraph(&VertexSet::from_vertices(5, &[1, 3]))
            .unwrap();
        assert_eq!(h.n(), 2);
        assert!(h.has_edge(0, 1));
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(cycle(5).neighborhood(0).to_vec(), vec![1, 4]);
        assert_eq!(complete(4).neighborhood(2).to_vec(), vec![0, 1, 3]);
        assert!(edgeless(6).neighborhood(3).is_empty());
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let n = rng.random_range(0..=70);
            let g = random_graph(&mut rng, n, 0.3);
            let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn vertex_set_ops() {
        let a = VertexSet::from_vertices(70, &[0, 5, 64, 69]);
        let b = VertexSet::from_vertices(70, &[5, 64]);
        assert!(b.is_subset(&a));
        assert_eq!(a.intersection(&b).len(), 2);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 69]);
        assert_eq!(a.union(&b), a);
        assert_eq!(a.min_vertex(), Some(0));
        assert_eq!(a.above(5).to_vec(), vec![64, 69]);
        assert_eq!(VertexSet::full(70).len(), 70);
        assert_eq!(VertexSet::full(0).len(), 0);
    }

    #[test]
    fn connectivity() {
        assert!(cycle(6).is_connected());
        assert!(!Graph::from_edge_list(4, &[(0, 1)]).unwrap().is_connected());
        assert!(edgeless(1).is_connected());
        assert!(edgeless(0).is_connected());
        assert!(!edgeless(2).is_connected());
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn paley_17_shape() {
        let g = paley(17);
        assert_eq!(g.edge_count(), 17 * 8 / 2);
        assert!(g.vertices().all(|v| g.degree(v) == 8));
        // Self-complementary up to the structure we rely on: regular of
        // complementary degree.
        let c = g.complement();
        assert!(c.vertices().all(|v| c.degree(v) == 8));
    }
}
