//! Edge deletion that turns every edge leaving an induced cycle into a bridge.
//!
//! While some edge `uv` with `u` on the cycle `C` and `v` off it lies on a
//! cycle, an edge of such a cycle that is neither `uv` nor an edge of `C` is
//! deleted. The result `R` still contains `C`, stays connected, and hangs a
//! tree-like branch `F_i` off each leaving edge `u_i v_i`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::bfs_distances;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub cycle: Vec<usize>,
    /// Edges deleted from the input, in deletion order.
    pub deleted_edges: Vec<(usize, usize)>,
    /// `(u_i, v_i)` with `u_i` on the cycle, sorted.
    pub cut_edges: Vec<(usize, usize)>,
    /// `F_i`: the side of `u_i v_i` away from the cycle, sorted.
    pub branches: Vec<Vec<usize>>,
    /// `a_i = max { d_R(u_i, x) : x in F_i }`.
    pub depths: Vec<usize>,
    /// `2 * sum(a_i) - p`.
    pub bound: usize,
}

impl ReductionReport {
    pub fn depth_sum(&self) -> usize {
        self.depths.iter().sum()
    }
}

fn normalized(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// BFS from `from` to `to` that never crosses the edge `skip`. The path is
/// rebuilt from `to` through smallest-labelled parents.
fn path_avoiding(g: &Graph, from: usize, to: usize, skip: (usize, usize)) -> Option<Vec<usize>> {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::from([from]);
    dist[from] = 0;
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            if normalized(x, y) == skip || dist[y] != usize::MAX {
                continue;
            }
            dist[y] = dist[x] + 1;
            queue.push_back(y);
        }
    }
    if dist[to] == usize::MAX {
        return None;
    }
    let mut path = vec![to];
    let mut at = to;
    while at != from {
        at = g
            .neighbors(at)
            .find(|&y| {
                normalized(at, y) != skip && dist[y] != usize::MAX && dist[y] + 1 == dist[at]
            })
            .expect("BFS parent exists");
        path.push(at);
    }
    Some(path)
}

/// Whether removing `uv` disconnects `u` from `v`.
pub fn is_bridge(g: &Graph, u: usize, v: usize) -> bool {
    g.has_edge(u, v) && path_avoiding(g, v, u, normalized(u, v)).is_none()
}

fn check_cycle(g: &Graph, cycle: &[usize]) -> Result<Vec<bool>> {
    let n = g.order();
    let len = cycle.len();
    if len < 3 {
        return Err(Error::NotInducedCycle(format!("{len} vertices")));
    }
    let mut on = vec![false; n];
    for &v in cycle {
        g.check_vertex(v)?;
        if std::mem::replace(&mut on[v], true) {
            return Err(Error::NotInducedCycle(format!("vertex {v} repeats")));
        }
    }
    for i in 0..len {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        if !g.has_edge(a, b) {
            return Err(Error::NotInducedCycle(format!("({a}, {b}) is not an edge")));
        }
    }
    let inside = g.edges().filter(|&(a, b)| on[a] && on[b]).count();
    if inside != len {
        return Err(Error::NotInducedCycle(format!("{} chord(s)", inside - len)));
    }
    Ok(on)
}

/// Deletes edges until every edge with exactly one end on `cycle` is a bridge.
///
/// The first non-bridge leaving edge in lexicographic order is processed
/// until it becomes a bridge; on each step the deleted edge is the smallest
/// eligible edge on the BFS cycle through it.
pub fn reduce_to_bridges(g: &Graph, cycle: &[usize]) -> Result<(Graph, ReductionReport)> {
    let on = check_cycle(g, cycle)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let leaving = |r: &Graph| -> Vec<(usize, usize)> {
        let mut out: Vec<_> = cycle
            .iter()
            .flat_map(|&u| r.neighbors(u).filter(|&v| !on[v]).map(move |v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    };

    let mut r = g.clone();
    let mut deleted = Vec::new();
    while let Some((u, v)) = leaving(&r).into_iter().find(|&(u, v)| !is_bridge(&r, u, v)) {
        while let Some(path) = path_avoiding(&r, v, u, normalized(u, v)) {
            let victim = path
                .windows(2)
                .map(|w| normalized(w[0], w[1]))
                .filter(|&(a, b)| !(on[a] && on[b]))
                .min()
                .expect("the edge at the off-cycle end is always eligible");
            r.delete_edge(victim.0, victim.1);
            deleted.push(victim);
        }
    }

    let cut_edges = leaving(&r);
    let mut branches = Vec::with_capacity(cut_edges.len());
    let mut depths = Vec::with_capacity(cut_edges.len());
    for &(u, v) in &cut_edges {
        let from_v = bfs_distances_avoiding(&r, v, normalized(u, v));
        let branch: Vec<usize> = (0..r.order()).filter(|&x| from_v[x]).collect();
        let from_u = bfs_distances(&r, u)?;
        let depth = branch
            .iter()
            .map(|&x| from_u[x].expect("R is connected"))
            .max()
            .expect("branch contains v");
        branches.push(branch);
        depths.push(depth);
    }
    let bound = 2 * depths.iter().sum::<usize>() - cut_edges.len();
    let report = ReductionReport {
        cycle: cycle.to_vec(),
        deleted_edges: deleted,
        cut_edges,
        branches,
        depths,
        bound,
    };
    Ok((r, report))
}

/// Vertices reachable from `from` without crossing `skip`.
fn bfs_distances_avoiding(g: &Graph, from: usize, skip: (usize, usize)) -> Vec<bool> {
    let mut seen = vec![false; g.order()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            if normalized(x, y) != skip && !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}
