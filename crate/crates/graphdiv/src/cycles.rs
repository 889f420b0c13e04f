//! Canonical chordless-cycle search.
//!
//! A cycle is represented with its minimum vertex first; the neighbor of the
//! start that comes second on the cycle is the smaller of the two, which
//! rules out duplicate traversals of the same cycle. The search is a
//! depth-first enumeration for one exact length at a time, so iterating
//! lengths upward yields a shortest witness.

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn matches(self, len: usize) -> bool {
        match self {
            Parity::Even => len % 2 == 0,
            Parity::Odd => len % 2 == 1,
        }
    }
}

/// Shortest chordless cycle of the requested parity with length at least
/// `min_len`, restricted to vertices of `within`.
pub(crate) fn shortest_hole(
    g: &Graph,
    within: &VertexSet,
    parity: Parity,
    min_len: usize,
) -> Option<Vec<usize>> {
    debug_assert!(min_len >= 4);
    let max_len = within.len();
    (min_len..=max_len)
        .filter(|&len| parity.matches(len))
        .find_map(|len| chordless_cycle_of_length(g, within, len))
}

/// Finds one chordless cycle of exactly `len` vertices inside `within`, in
/// canonical orientation, or `None`.
pub(crate) fn chordless_cycle_of_length(
    g: &Graph,
    within: &VertexSet,
    len: usize,
) -> Option<Vec<usize>> {
    debug_assert!(len >= 4);
    if within.len() < len {
        return None;
    }
    for s in within.iter() {
        // All other cycle vertices are above the canonical start.
        let pool = within.above(s);
        for v1 in g.neighbors(s).intersection(&pool).iter() {
            let mut path = vec![s, v1];
            // Vertices unusable later: the path itself plus (as the path
            // grows) neighbors of interior vertices.
            let mut banned = VertexSet::from_vertices(g.n(), &[s, v1]);
            if extend(g, &pool, s, &mut path, &mut banned, len) {
                return Some(path);
            }
        }
    }
    None
}

fn extend(
    g: &Graph,
    pool: &VertexSet,
    start: usize,
    path: &mut Vec<usize>,
    banned: &VertexSet,
    len: usize,
) -> bool {
    let tail = *path.last().expect("nonempty path");
    if path.len() == len - 1 {
        // Close the cycle: adjacent to both the tail and the start, no
        // chords to interior vertices, and canonically above path[1].
        let mut cands = g.neighbors(tail).intersection(g.neighbors(start));
        cands.intersect_with(pool);
        cands.subtract(banned);
        let second = path[1];
        if let Some(w) = cands.iter().find(|&w| w > second) {
            path.push(w);
            return true;
        }
        return false;
    }
    // Interior extension: adjacent to the tail only, and never adjacent to
    // the start (that would be a chord once the cycle closes).
    let mut cands = g.neighbors(tail).intersection(pool);
    cands.subtract(banned);
    cands.subtract(g.neighbors(start));
    for w in cands.iter() {
        path.push(w);
        let mut banned2 = banned.clone();
        banned2.union_with(g.neighbors(tail));
        banned2.insert(w);
        if extend(g, pool, start, path, &banned2, len) {
            return true;
        }
        path.pop();
    }
    false
}

/// Checks that `cycle` really is a chordless cycle in `g`: distinct
/// vertices, consecutive pairs adjacent (cyclically), all other pairs
/// non-adjacent.
pub(crate) fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    if m < 4 {
        return false;
    }
    let mut seen = VertexSet::empty(g.n());
    for &v in cycle {
        if v >= g.n() || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    for i in 0..m {
        for j in (i + 1)..m {
            let consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{complete, cycle, petersen};
    use crate::graph::VertexSet;

    fn full(g: &Graph) -> VertexSet {
        VertexSet::full(g.n())
    }

    #[test]
    fn finds_the_cycle_itself() {
        for n in 4..=9 {
            let g = cycle(n);
            let c = shortest_hole(&g, &full(&g), if n % 2 == 0 { Parity::Even } else { Parity::Odd }, 4)
                .unwrap();
            assert_eq!(c.len(), n);
            assert!(is_chordless_cycle(&g, &c));
        }
    }

    #[test]
    fn complete_graphs_have_no_holes() {
        for n in 1..=7 {
            let g = complete(n);
            assert!(shortest_hole(&g, &full(&g), Parity::Even, 4).is_none());
            assert!(shortest_hole(&g, &full(&g), Parity::Odd, 5).is_none());
        }
    }

    #[test]
    fn petersen_shortest_hole_is_c5() {
        let g = petersen();
        let c = shortest_hole(&g, &full(&g), Parity::Odd, 5).unwrap();
        assert_eq!(c.len(), 5);
        assert!(is_chordless_cycle(&g, &c));
        // Petersen has girth 5, so no even hole shorter than 6; it does
        // have chordless 6-cycles.
        let e = shortest_hole(&g, &full(&g), Parity::Even, 4).unwrap();
        assert_eq!(e.len(), 6);
        assert!(is_chordless_cycle(&g, &e));
    }

    #[test]
    fn restriction_masks_out_cycles() {
        let g = cycle(6);
        let mut within = VertexSet::full(6);
        within.remove(3);
        assert!(shortest_hole(&g, &within, Parity::Even, 4).is_none());
    }

    #[test]
    fn chord_blocks_the_long_cycle() {
        // C6 plus one long chord leaves two 4-cycles.
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 1)).collect();
        edges.push((5, 0));
        edges.push((0, 3));
        let g = Graph::from_edge_list(6, &edges).unwrap();
        let c = shortest_hole(&g, &full(&g), Parity::Even, 4).unwrap();
        assert_eq!(c.len(), 4);
        assert!(is_chordless_cycle(&g, &c));
        assert!(shortest_hole(&g, &full(&g), Parity::Even, 6).is_none());
    }
}
