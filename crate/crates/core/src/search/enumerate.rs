use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use super::{check_order, SmallGraph};
use crate::codec::graph6_decode;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::metric_profile;

/// Hard cap for labeled enumeration: `2^28` edge masks at order 8.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Upper bound on the number of independent chunks the mask space is cut into.
const CHUNK_BITS: usize = 12;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RadiusRow {
    /// Connected graphs with this radius.
    pub graphs: u64,
    /// Center size -> number of graphs.
    pub center_sizes: BTreeMap<usize, u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationSummary {
    /// Order of the scanned graphs; 0 for an empty corpus.
    pub n: usize,
    pub total_graphs: u64,
    pub connected_graphs: u64,
    /// Radius -> observed center sizes with counts.
    pub table: BTreeMap<usize, RadiusRow>,
}

impl EnumerationSummary {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            ..Self::default()
        }
    }

    pub fn record(&mut self, radius: usize, center: usize, count: u64) {
        let row = self.table.entry(radius).or_default();
        row.graphs += count;
        *row.center_sizes.entry(center).or_default() += count;
    }

    /// Observed center sizes for `radius`, ascending.
    pub fn observed(&self, radius: usize) -> Vec<usize> {
        self.table
            .get(&radius)
            .map(|row| row.center_sizes.keys().copied().collect())
            .unwrap_or_default()
    }

    pub fn omega(&self) -> BTreeMap<usize, BTreeSet<usize>> {
        self.table
            .iter()
            .map(|(&r, row)| (r, row.center_sizes.keys().copied().collect()))
            .collect()
    }

    /// Folds `other` into `self`. Associative and commutative, so the merge
    /// order of parallel chunks never shows in the result.
    pub fn merge(mut self, other: Self) -> Self {
        self.n = self.n.max(other.n);
        self.total_graphs += other.total_graphs;
        self.connected_graphs += other.connected_graphs;
        for (r, row) in other.table {
            for (s, c) in row.center_sizes {
                self.record(r, s, c);
            }
        }
        self
    }
}

/// Folds every labeled graph of order `n` (`2 <= n <= 8`) through `fold`.
///
/// The mask space is split on its top bits into contiguous chunks; each
/// chunk folds into its own accumulator and the accumulators are merged in
/// chunk order.
pub fn scan_labeled<A, I, F, M>(n: usize, init: I, fold: F, merge: M) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, u64, &SmallGraph) + Sync,
    M: Fn(A, A) -> A + Sync,
{
    check_order(n, MAX_ENUMERATION_ORDER)?;
    if n < 2 {
        return Err(Error::BadParameters(format!(
            "labeled enumeration needs n >= 2, got {n}"
        )));
    }
    let bits = n * (n - 1) / 2;
    let chunk_bits = bits.min(CHUNK_BITS);
    let low_bits = bits - chunk_bits;
    let acc = (0..1u64 << chunk_bits)
        .into_par_iter()
        .map(|chunk| {
            let mut acc = init();
            let base = chunk << low_bits;
            for low in 0..1u64 << low_bits {
                let mask = base | low;
                fold(&mut acc, mask, &SmallGraph::from_mask(n, mask));
            }
            acc
        })
        .reduce(&init, &merge);
    Ok(acc)
}

/// Fixed-size counters used in the hot loop; converted to a summary at the end.
struct Counts {
    total: u64,
    connected: u64,
    by: [[u64; MAX_ENUMERATION_ORDER + 1]; MAX_ENUMERATION_ORDER + 1],
}

impl Counts {
    fn new() -> Self {
        Self {
            total: 0,
            connected: 0,
            by: [[0; MAX_ENUMERATION_ORDER + 1]; MAX_ENUMERATION_ORDER + 1],
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.total += other.total;
        self.connected += other.connected;
        for (a, b) in self.by.iter_mut().zip(other.by.iter()) {
            for (x, y) in a.iter_mut().zip(b.iter()) {
                *x += y;
            }
        }
        self
    }
}

/// Scans every labeled graph on `n` vertices and tabulates radius against
/// center size over the connected ones.
pub fn enumerate_labeled(n: usize) -> Result<EnumerationSummary> {
    let counts = scan_labeled(
        n,
        Counts::new,
        |acc, _, g| {
            acc.total += 1;
            if let Some((r, s)) = g.radius_and_center() {
                acc.connected += 1;
                acc.by[r][s] += 1;
            }
        },
        Counts::merge,
    )?;
    let mut summary = EnumerationSummary::new(n);
    summary.total_graphs = counts.total;
    summary.connected_graphs = counts.connected;
    for (r, row) in counts.by.iter().enumerate() {
        for (s, &c) in row.iter().enumerate() {
            if c > 0 {
                summary.record(r, s, c);
            }
        }
    }
    Ok(summary)
}

/// Radius -> attainable center sizes, observed over all graphs of order `n`.
pub fn empirical_omega(n: usize) -> Result<BTreeMap<usize, BTreeSet<usize>>> {
    if n < 3 {
        return Err(Error::BadParameters(format!(
            "empirical omega needs n >= 3, got {n}"
        )));
    }
    Ok(enumerate_labeled(n)?.omega())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorpusScan {
    pub summary: EnumerationSummary,
    /// Connected graphs accepted by the predicate, in input order.
    #[serde(skip)]
    pub matches: Vec<Graph>,
}

/// Tabulates a graph6 corpus exactly as [`enumerate_labeled`] tabulates the
/// labeled graphs, keeping connected graphs whose `(n, radius, |center|)`
/// satisfy `keep`.
pub fn corpus_scan<R, P>(reader: R, keep: P) -> Result<CorpusScan>
where
    R: BufRead,
    P: Fn(usize, usize, usize) -> bool + Sync,
{
    let mut lines = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if !line.is_empty() {
            lines.push((i + 1, line.to_owned()));
        }
    }
    let decoded: Vec<(Graph, Option<(usize, usize)>)> = lines
        .par_iter()
        .map(|(lineno, text)| {
            let g = graph6_decode(text).map_err(|e| crate::codec::graph6_in_line(e, *lineno))?;
            let rc = metric_profile(&g).ok().map(|p| (p.radius, p.center_size()));
            Ok((g, rc))
        })
        .collect::<Result<_>>()?;

    let mut scan = CorpusScan::default();
    let Some(first) = decoded.first() else {
        return Ok(scan);
    };
    let n = first.0.order();
    scan.summary.n = n;
    for (g, rc) in decoded {
        if g.order() != n {
            return Err(Error::MixedOrders {
                expected: n,
                found: g.order(),
            });
        }
        scan.summary.total_graphs += 1;
        if let Some((r, s)) = rc {
            scan.summary.connected_graphs += 1;
            scan.summary.record(r, s, 1);
            if keep(n, r, s) {
                scan.matches.push(g);
            }
        }
    }
    Ok(scan)
}
