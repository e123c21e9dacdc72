use super::SmallGraph;
use crate::error::Result;
use crate::graph::Graph;

/// Number of vertices of a longest induced path (1 for an edgeless graph).
pub fn longest_induced_path_order(g: &Graph) -> Result<usize> {
    let s = SmallGraph::from_graph(g)?;
    Ok(longest(&s, s.order()))
}

/// Whether `g` has an induced path on `k` vertices.
pub(crate) fn has_induced_path(g: &SmallGraph, k: usize) -> bool {
    k <= 1 || longest(g, k) >= k
}

/// Longest induced path, stopping as soon as one of order `goal` is found.
fn longest(g: &SmallGraph, goal: usize) -> usize {
    let mut best = 1;
    for start in 0..g.order() {
        grow(g, start, 1u16 << start, 1, goal, &mut best);
        if best >= goal {
            break;
        }
    }
    best
}

/// `blocked` holds the path plus every neighbour of a non-end path vertex;
/// the next vertex must be a neighbour of `end` outside it.
fn grow(g: &SmallGraph, end: usize, blocked: u16, len: usize, goal: usize, best: &mut usize) {
    if len > *best {
        *best = len;
    }
    if *best >= goal {
        return;
    }
    let reach = g.full() & !blocked;
    if len + reach.count_ones() as usize <= *best {
        return;
    }
    let mut next = g.row(end) & reach;
    let blocked = blocked | g.row(end);
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        grow(g, w, blocked | 1 << w, len + 1, goal, best);
        if *best >= goal {
            return;
        }
    }
}
