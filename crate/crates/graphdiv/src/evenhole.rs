//! Even-hole detection at desk scale.
//!
//! A hole is a chordless cycle on at least four vertices. Detection runs an
//! exhaustive canonical chordless-cycle search, so it is exact; instances
//! above the size cap are refused rather than answered approximately.

use serde::Serialize;

use crate::cycles::{self, Parity};
use crate::graph::{Graph, VertexSet};
use crate::oracles::OracleError;

/// Default vertex-count cap for hole searches.
pub const DEFAULT_EVEN_HOLE_CAP: usize = 18;

/// A chordless cycle of length >= 4, listed in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleWitness {
    pub cycle: Vec<usize>,
}

impl HoleWitness {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Re-checks the witness against the graph: distinct vertices,
    /// consecutive adjacency, no chords, length >= 4.
    pub fn verify(&self, g: &Graph) -> bool {
        cycles::is_chordless_cycle(g, &self.cycle)
    }
}

/// Shortest even hole under the default cap.
pub fn shortest_even_hole(g: &Graph) -> Result<Option<HoleWitness>, OracleError> {
    shortest_even_hole_with_cap(g, DEFAULT_EVEN_HOLE_CAP)
}

/// Shortest even hole, or `None` if the graph is even-hole-free.
pub fn shortest_even_hole_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<Option<HoleWitness>, OracleError> {
    if g.n() > cap {
        return Err(OracleError::CapExceeded {
            op: "shortest_even_hole",
            n: g.n(),
            cap,
        });
    }
    let within = VertexSet::full(g.n());
    Ok(cycles::shortest_hole(g, &within, Parity::Even, 4).map(|cycle| HoleWitness { cycle }))
}

pub fn is_even_hole_free(g: &Graph) -> Result<bool, OracleError> {
    is_even_hole_free_with_cap(g, DEFAULT_EVEN_HOLE_CAP)
}

pub fn is_even_hole_free_with_cap(g: &Graph, cap: usize) -> Result<bool, OracleError> {
    Ok(shortest_even_hole_with_cap(g, cap)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, path};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn c4_has_the_four_hole() {
        let w = shortest_even_hole(&cycle(4)).unwrap().unwrap();
        assert_eq!(w.cycle, vec![0, 1, 2, 3]);
        assert!(w.verify(&cycle(4)));
    }

    #[test]
    fn c5_is_even_hole_free() {
        assert!(is_even_hole_free(&cycle(5)).unwrap());
    }

    #[test]
    fn c6_hole_has_length_six() {
        let w = shortest_even_hole(&cycle(6)).unwrap().unwrap();
        assert_eq!(w.len(), 6);
        assert!(w.verify(&cycle(6)));
    }

    #[test]
    fn chordal_graphs_are_even_hole_free() {
        assert!(is_even_hole_free(&complete(4)).unwrap());
        assert!(is_even_hole_free(&path(7)).unwrap());
    }

    #[test]
    fn c7_is_even_hole_free() {
        assert!(is_even_hole_free(&cycle(7)).unwrap());
    }

    #[test]
    fn rook_3x3_has_a_four_hole() {
        // Vertices (r, c) -> 3r + c; edges between same row or same column.
        let mut edges = Vec::new();
        for a in 0..9usize {
            for b in (a + 1)..9 {
                if a / 3 == b / 3 || a % 3 == b % 3 {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edge_list(9, &edges).unwrap();
        let w = shortest_even_hole(&g).unwrap().unwrap();
        assert_eq!(w.len(), 4);
        assert!(w.verify(&g));
        assert!(!is_even_hole_free(&g).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = crate::graph::generators::edgeless(19);
        assert!(matches!(
            shortest_even_hole(&g),
            Err(OracleError::CapExceeded { .. })
        ));
        assert!(shortest_even_hole_with_cap(&g, 19).unwrap().is_none());
    }

    /// Brute force: some even-size subset of >= 4 vertices induces a cycle.
    fn has_even_hole_brute(g: &Graph) -> bool {
        let n = g.n();
        for mask in 0u64..(1 << n) {
            let count = mask.count_ones() as usize;
            if count < 4 || count % 2 == 1 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let s = VertexSet::from_vertices(n, &members);
            let (h, _) = g.induced_subgraph(&s).unwrap();
            if h.is_connected() && h.vertices().all(|v| h.degree(v) == 2) {
                return true;
            }
        }
        false
    }

    #[test]
    fn agrees_with_brute_force_exhaustively_to_n5() {
        for n in 0usize..=5 {
            let bits = n * n.saturating_sub(1) / 2;
            for mask in 0u64..(1u64 << bits) {
                let mut edges = Vec::new();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if mask >> k & 1 == 1 {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                let g = Graph::from_edge_list(n, &edges).unwrap();
                assert_eq!(is_even_hole_free(&g).unwrap(), !has_even_hole_brute(&g));
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_on_random_graphs_to_n8() {
        let mut rng = ChaCha8Rng::seed_from_u64(505);
        for _ in 0..500 {
            let n = rng.random_range(4..=8);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let witness = shortest_even_hole(&g).unwrap();
            assert_eq!(witness.is_none(), !has_even_hole_brute(&g));
            if let Some(w) = witness {
                assert!(w.verify(&g));
                assert_eq!(w.len() % 2, 0);
                assert!(w.len() >= 4);
            }
        }
    }
}
