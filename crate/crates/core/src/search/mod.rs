//! Exhaustive verification machinery: labeled enumeration, corpus scans,
//! isomorphism, induced paths, geodesic cycles and the bridge reduction.

mod enumerate;
mod geodesic;
mod induced;
mod iso;
mod lemmas;
mod reduce;
mod unique;

pub use enumerate::{
    corpus_scan, empirical_omega, enumerate_labeled, scan_labeled, CorpusScan, EnumerationSummary,
    RadiusRow, MAX_ENUMERATION_ORDER,
};
pub use geodesic::has_geodesic_cycle;
pub use induced::longest_induced_path_order;
pub use iso::{are_isomorphic, MAX_ISOMORPHISM_ORDER};
pub use lemmas::{
    check_geodesic_cycle, check_induced_path, scan_lemma, Lemma, LemmaOutcome, LemmaScanReport,
    OrderCounts,
};
pub use reduce::{is_bridge, reduce_to_bridges, ReductionReport};
pub use unique::{unique_among, unique_up_to_iso, UniquenessReport};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled by the exact exponential searches.
pub const MAX_SMALL_ORDER: usize = 16;

/// Runs `f` on a dedicated pool of `jobs` workers, or on the global pool
/// when `jobs` is `None`. Results of every search are independent of it.
pub fn with_workers<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

pub(crate) fn check_order(order: usize, max: usize) -> Result<()> {
    if order > max {
        Err(Error::OrderTooLarge { order, max })
    } else {
        Ok(())
    }
}

/// A graph on at most 16 vertices with one `u16` adjacency row per vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    rows: [u16; MAX_SMALL_ORDER],
}

impl SmallGraph {
    /// Decodes an upper-triangle edge mask; bit `i` is the `i`-th pair in
    /// column order `(0,1) (0,2) (1,2) (0,3) ...`.
    #[inline]
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut rows = [0u16; MAX_SMALL_ORDER];
        let mut offset = 0;
        for v in 1..n {
            let mut lower = ((mask >> offset) & ((1u64 << v) - 1)) as u16;
            offset += v;
            rows[v] = lower;
            while lower != 0 {
                let u = lower.trailing_zeros() as usize;
                lower &= lower - 1;
                rows[u] |= 1 << v;
            }
        }
        Self { n, rows }
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        check_order(g.order(), MAX_SMALL_ORDER)?;
        let mut rows = [0u16; MAX_SMALL_ORDER];
        for (v, row) in rows.iter_mut().enumerate().take(g.order()) {
            *row = g.row(v)[0] as u16;
        }
        Ok(Self { n: g.order(), rows })
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::edgeless(self.n).expect("1 <= n <= 16");
        for v in 0..self.n {
            let mut higher = self.rows[v] & !(((2u32 << v) - 1) as u16);
            while higher != 0 {
                let u = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                g.insert_edge(v, u);
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> u16 {
        self.rows[v]
    }

    #[inline]
    pub(crate) fn full(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    #[inline]
    pub(crate) fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Eccentricity of `v`, or `None` when the graph is disconnected.
    #[inline]
    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let full = self.full();
        let mut reach = 1u16 << v;
        let mut frontier = reach;
        let mut level = 0;
        while reach != full {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[u];
            }
            next &= !reach;
            if next == 0 {
                return None;
            }
            reach |= next;
            frontier = next;
            level += 1;
        }
        Some(level)
    }

    /// `(radius, center size)`, or `None` when disconnected.
    #[inline]
    pub fn radius_and_center(&self) -> Option<(usize, usize)> {
        let mut radius = usize::MAX;
        let mut count = 0;
        for v in 0..self.n {
            let e = self.eccentricity(v)?;
            if e < radius {
                radius = e;
                count = 1;
            } else if e == radius {
                count += 1;
            }
        }
        Some((radius, count))
    }

    pub(crate) fn eccentricities(&self) -> Option<Vec<usize>> {
        (0..self.n).map(|v| self.eccentricity(v)).collect()
    }

    /// Hop distances between all pairs, or `None` when disconnected.
    pub(crate) fn distances(&self) -> Option<[[u8; MAX_SMALL_ORDER]; MAX_SMALL_ORDER]> {
        let full = self.full();
        let mut d = [[u8::MAX; MAX_SMALL_ORDER]; MAX_SMALL_ORDER];
        for (v, dv) in d.iter_mut().enumerate().take(self.n) {
            let mut reach = 1u16 << v;
            let mut frontier = reach;
            let mut level = 0u8;
            dv[v] = 0;
            while reach != full {
                let mut next = 0u16;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.rows[u];
                }
                next &= !reach;
                if next == 0 {
                    return None;
                }
                level += 1;
                let mut fresh = next;
                while fresh != 0 {
                    let u = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    dv[u] = level;
                }
                reach |= next;
                frontier = next;
            }
        }
        Some(d)
    }
}
