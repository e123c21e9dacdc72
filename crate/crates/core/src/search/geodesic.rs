use super::{SmallGraph, MAX_SMALL_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;

type Distances = [[u8; MAX_SMALL_ORDER]; MAX_SMALL_ORDER];

/// Whether `g` contains a cycle whose length is in `lengths` and whose
/// internal distances all equal the distances in `g`.
///
/// Cycles are grown from their smallest vertex; a partial path is dropped as
/// soon as a new vertex sits at the wrong distance from an earlier one, since
/// every pair on a geodesic cycle of length `L` at positions `i < j` must be
/// exactly `min(j - i, L - j + i)` apart.
pub fn has_geodesic_cycle(g: &Graph, lengths: &[usize]) -> Result<bool> {
    let s = SmallGraph::from_graph(g)?;
    let Some(d) = s.distances() else {
        return Err(Error::Disconnected);
    };
    Ok(lengths.iter().any(|&len| find(&s, &d, len)))
}

pub(crate) fn has_geodesic_cycle_small(g: &SmallGraph, d: &Distances, lengths: &[usize]) -> bool {
    lengths.iter().any(|&len| find(g, d, len))
}

fn find(g: &SmallGraph, d: &Distances, len: usize) -> bool {
    if len < 3 || len > g.order() {
        return false;
    }
    let mut path = Vec::with_capacity(len);
    (0..g.order()).any(|start| {
        path.clear();
        path.push(start);
        grow(g, d, len, start, &mut path, 1u16 << start)
    })
}

fn grow(
    g: &SmallGraph,
    d: &Distances,
    len: usize,
    start: usize,
    path: &mut Vec<usize>,
    used: u16,
) -> bool {
    let j = path.len();
    if j == len {
        return true;
    }
    let last = *path.last().expect("non-empty path");
    // only vertices above the start, so each cycle is grown from its minimum
    let mut next = g.row(last) & !used & !(((2u32 << start) - 1) as u16);
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        let fits = path.iter().enumerate().all(|(i, &p)| {
            let gap = j - i;
            d[p][w] as usize == gap.min(len - gap)
        });
        if fits {
            path.push(w);
            if grow(g, d, len, start, path, used | 1 << w) {
                return true;
            }
            path.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{g5, lollipop};
    use crate::metrics::distance_matrix;

    /// Brute force over every vertex sequence: a cycle of length `len` whose
    /// cyclic distances match the full distance matrix.
    fn oracle(g: &Graph, len: usize) -> bool {
        let d = distance_matrix(g).unwrap();
        let n = g.order();
        fn rec(g: &Graph, d: &[Vec<usize>], len: usize, seq: &mut Vec<usize>, n: usize) -> bool {
            if seq.len() == len {
                let adjacent = (0..len).all(|i| g.has_edge(seq[i], seq[(i + 1) % len]));
                return adjacent
                    && (0..len).all(|i| {
                        (i + 1..len).all(|j| d[seq[i]][seq[j]] == (j - i).min(len - j + i))
                    });
            }
            for v in 0..n {
                if !seq.contains(&v) {
                    seq.push(v);
                    if rec(g, d, len, seq, n) {
                        return true;
                    }
                    seq.pop();
                }
            }
            false
        }
        len >= 3 && len <= n && rec(g, &d, len, &mut Vec::new(), n)
    }

    #[test]
    fn examples() {
        assert!(has_geodesic_cycle(&Graph::cycle(6).unwrap(), &[6, 7]).unwrap());
        assert!(has_geodesic_cycle(&lollipop(7, 6).unwrap(), &[6, 7]).unwrap());
        assert!(!has_geodesic_cycle(&Graph::complete(4).unwrap(), &[4, 5]).unwrap());
        assert!(has_geodesic_cycle(&Graph::complete(4).unwrap(), &[3]).unwrap());
        assert!(has_geodesic_cycle(&g5(7, 3).unwrap(), &[6, 7]).unwrap());
        assert!(!has_geodesic_cycle(&Graph::path(5).unwrap(), &[3, 4, 5]).unwrap());
        assert_eq!(
            has_geodesic_cycle(&Graph::empty(2).unwrap(), &[3]),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn chorded_cycle_is_not_geodesic() {
        // C_6 plus the chord (0,3): the outer 6-cycle is no longer geodesic,
        // but both 4-cycles are
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        assert!(!has_geodesic_cycle(&g, &[5, 6]).unwrap());
        assert!(has_geodesic_cycle(&g, &[4]).unwrap());
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut state = 0x2545f4914f6cdd1du64;
        let mut checked = 0;
        while checked < 150 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let n = 3 + (state % 5) as usize;
            let g = SmallGraph::from_mask(n, state >> 8).to_graph();
            if !g.is_connected() {
                continue;
            }
            checked += 1;
            for len in 3..=n {
                assert_eq!(
                    has_geodesic_cycle(&g, &[len]).unwrap(),
                    oracle(&g, len),
                    "{g:?} len={len}"
                );
            }
        }
    }
}
