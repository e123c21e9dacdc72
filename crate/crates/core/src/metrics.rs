//! Eccentricity, radius, diameter, center and periphery.

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ones, set_bit, Graph};

/// Orders at or above this run the per-vertex BFS loop on the rayon pool.
const PARALLEL_ORDER: usize = 128;

/// `|center| / order` as a reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CentralRatio {
    pub num: u64,
    pub den: u64,
}

impl CentralRatio {
    /// Reduces `num/den`. Panics if `den` is zero.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = num.gcd(&den);
        Self {
            num: num / g,
            den: den / g,
        }
    }
}

impl fmt::Display for CentralRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricProfile {
    pub order: usize,
    pub eccentricities: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    pub center: Vec<usize>,
    pub periphery: Vec<usize>,
    pub central_ratio: CentralRatio,
}

impl MetricProfile {
    pub fn is_self_centered(&self) -> bool {
        self.radius == self.diameter
    }

    pub fn center_size(&self) -> usize {
        self.center.len()
    }
}

/// Hop distances from `source`; `None` marks vertices in other components.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Option<usize>>> {
    g.check_vertex(source)?;
    let words = g.row_words();
    let mut dist = vec![None; g.order()];
    let mut seen = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    let mut next = vec![0u64; words];
    set_bit(&mut seen, source);
    set_bit(&mut frontier, source);
    dist[source] = Some(0);
    let mut level = 0;
    loop {
        level += 1;
        if !expand(g, &frontier, &mut next, &mut seen) {
            break;
        }
        for v in ones(&next) {
            dist[v] = Some(level);
        }
        std::mem::swap(&mut frontier, &mut next);
    }
    Ok(dist)
}

/// One BFS step: `next = N(frontier) \ seen`, then `seen |= next`.
/// Returns false when nothing new was reached.
fn expand(g: &Graph, frontier: &[u64], next: &mut [u64], seen: &mut [u64]) -> bool {
    next.iter_mut().for_each(|w| *w = 0);
    for u in ones(frontier) {
        for (n, r) in next.iter_mut().zip(g.row(u)) {
            *n |= r;
        }
    }
    let mut any = false;
    for (n, s) in next.iter_mut().zip(seen.iter_mut()) {
        *n &= !*s;
        *s |= *n;
        any |= *n != 0;
    }
    any
}

/// Eccentricity of `v`, or `None` if some vertex is unreachable from it.
pub fn eccentricity(g: &Graph, v: usize) -> Result<Option<usize>> {
    g.check_vertex(v)?;
    Ok(ecc_unchecked(g, v))
}

fn ecc_unchecked(g: &Graph, v: usize) -> Option<usize> {
    let words = g.row_words();
    let mut seen = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    let mut next = vec![0u64; words];
    set_bit(&mut seen, v);
    set_bit(&mut frontier, v);
    let mut reached = 1;
    let mut level = 0;
    while expand(g, &frontier, &mut next, &mut seen) {
        level += 1;
        reached += next.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        std::mem::swap(&mut frontier, &mut next);
    }
    (reached == g.order()).then_some(level)
}

pub fn metric_profile(g: &Graph) -> Result<MetricProfile> {
    let n = g.order();
    let ecc: Option<Vec<usize>> = if n >= PARALLEL_ORDER {
        (0..n)
            .into_par_iter()
            .map(|v| ecc_unchecked(g, v))
            .collect()
    } else {
        (0..n).map(|v| ecc_unchecked(g, v)).collect()
    };
    let eccentricities = ecc.ok_or(Error::Disconnected)?;
    Ok(profile_from_eccentricities(eccentricities))
}

pub(crate) fn profile_from_eccentricities(eccentricities: Vec<usize>) -> MetricProfile {
    let radius = *eccentricities.iter().min().expect("order >= 1");
    let diameter = *eccentricities.iter().max().expect("order >= 1");
    let select = |target: usize| -> Vec<usize> {
        eccentricities
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e == target)
            .map(|(v, _)| v)
            .collect()
    };
    let center = select(radius);
    let periphery = select(diameter);
    let order = eccentricities.len();
    MetricProfile {
        order,
        central_ratio: CentralRatio::new(center.len() as u64, order as u64),
        eccentricities,
        radius,
        diameter,
        center,
        periphery,
    }
}

/// A shortest path realising the diameter.
///
/// The endpoints are the first pair `(a, b)` in ascending label order with
/// `d(a, b) = diam`; the path is rebuilt from `b` by always stepping to the
/// smallest-labelled neighbour one level closer to `a`.
pub fn diametral_path(g: &Graph) -> Result<Vec<usize>> {
    let profile = metric_profile(g)?;
    let source = profile.periphery[0];
    let dist: Vec<usize> = bfs_distances(g, source)?
        .into_iter()
        .map(|d| d.expect("connected"))
        .collect();
    let target = (0..g.order())
        .find(|&v| dist[v] == profile.diameter)
        .expect("peripheral vertex has an eccentric vertex");
    let mut path = vec![target];
    let mut at = target;
    while at != source {
        at = g
            .neighbors(at)
            .find(|&u| dist[u] + 1 == dist[at])
            .expect("BFS parent exists");
        path.push(at);
    }
    path.reverse();
    Ok(path)
}

/// Full distance matrix; intended for small graphs only.
pub fn distance_matrix(g: &Graph) -> Result<Vec<Vec<usize>>> {
    (0..g.order())
        .map(|v| {
            bfs_distances(g, v)?
                .into_iter()
                .map(|d| d.ok_or(Error::Disconnected))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{broom, lollipop};

    #[test]
    fn bfs_examples() {
        let c6 = Graph::cycle(6).unwrap();
        let d: Vec<_> = bfs_distances(&c6, 0).unwrap();
        assert_eq!(d, [0, 1, 2, 3, 2, 1].map(Some));

        let p4 = Graph::path(4).unwrap();
        assert_eq!(bfs_distances(&p4, 0).unwrap(), [0, 1, 2, 3].map(Some));

        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            bfs_distances(&two, 0).unwrap(),
            vec![Some(0), Some(1), None, None]
        );
        assert!(matches!(
            bfs_distances(&two, 4),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn profile_of_path_and_cycle() {
        let p = metric_profile(&Graph::path(5).unwrap()).unwrap();
        assert_eq!(p.eccentricities, vec![4, 3, 2, 3, 4]);
        assert_eq!((p.radius, p.diameter), (2, 4));
        assert_eq!(p.center, vec![2]);
        assert_eq!(p.periphery, vec![0, 4]);
        assert_eq!(p.central_ratio, CentralRatio { num: 1, den: 5 });

        let c = metric_profile(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!((c.radius, c.diameter), (3, 3));
        assert_eq!(c.center, (0..6).collect::<Vec<_>>());
        assert_eq!(c.central_ratio, CentralRatio { num: 1, den: 1 });
        assert!(c.is_self_centered());
    }

    #[test]
    fn profile_of_lollipop_14_12() {
        let p = metric_profile(&lollipop(14, 12).unwrap()).unwrap();
        assert_eq!(p.radius, 6);
        assert_eq!(p.center_size(), 9);
    }

    #[test]
    fn trivial_graph() {
        let p = metric_profile(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!((p.radius, p.diameter), (0, 0));
        assert_eq!(p.center, vec![0]);
        assert_eq!(p.periphery, vec![0]);
    }

    #[test]
    fn disconnected_profile_is_an_error() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(metric_profile(&g), Err(Error::Disconnected));
        assert_eq!(diametral_path(&g), Err(Error::Disconnected));
    }

    #[test]
    fn join_of_clique_and_independent_set() {
        let g = Graph::complete(3)
            .unwrap()
            .join(&Graph::empty(4).unwrap())
            .unwrap();
        let p = metric_profile(&g).unwrap();
        assert_eq!(p.radius, 1);
        assert_eq!(p.center, vec![0, 1, 2]);
    }

    #[test]
    fn diametral_paths() {
        assert_eq!(
            diametral_path(&Graph::path(4).unwrap()).unwrap(),
            vec![0, 1, 2, 3]
        );
        let c5 = diametral_path(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5, vec![0, 1, 2]);

        let b = broom(10, 6).unwrap();
        let path = diametral_path(&b.graph).unwrap();
        assert_eq!(path.len(), 7);
        for pair in path.windows(2) {
            assert!(b.graph.has_edge(pair[0], pair[1]));
        }
        let d = bfs_distances(&b.graph, path[0]).unwrap();
        assert_eq!(d[*path.last().unwrap()], Some(6));
    }

    #[test]
    fn ratio_reduces() {
        assert_eq!(CentralRatio::new(12, 14), CentralRatio { num: 6, den: 7 });
        assert_eq!(CentralRatio::new(0, 5), CentralRatio { num: 0, den: 1 });
        assert_eq!(CentralRatio::new(6, 7).to_string(), "6/7");
    }

    #[test]
    fn large_graph_uses_parallel_path() {
        let p = metric_profile(&Graph::cycle(300).unwrap()).unwrap();
        assert_eq!((p.radius, p.diameter, p.center_size()), (150, 150, 300));
        let p = metric_profile(&Graph::path(301).unwrap()).unwrap();
        assert_eq!((p.radius, p.center.as_slice()), (150, &[150][..]));
    }
}
