//! Empirical checks of the two structural lemmas the center-size bounds rest on:
//! every connected graph of radius `r` has an induced path on `2r - 1`
//! vertices, and a graph with `n <= 3r - 2` and `diam <= 2r - 2` has a
//! geodesic cycle of length `2r` or `2r + 1`.

use serde::Serialize;

use super::geodesic::has_geodesic_cycle_small;
use super::induced::has_induced_path;
use super::{scan_labeled, SmallGraph, MAX_ENUMERATION_ORDER};
use crate::codec::graph6_encode;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    InducedPath,
    GeodesicCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LemmaOutcome {
    /// The hypotheses do not apply to this graph.
    Vacuous,
    Checked(bool),
}

impl LemmaOutcome {
    pub fn holds(self) -> bool {
        !matches!(self, LemmaOutcome::Checked(false))
    }
}

fn small_connected(g: &Graph) -> Result<SmallGraph> {
    let s = SmallGraph::from_graph(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(s)
}

/// Induced path on at least `2 rad(G) - 1` vertices.
pub fn check_induced_path(g: &Graph) -> Result<bool> {
    let s = small_connected(g)?;
    let (r, _) = s.radius_and_center().expect("connected");
    Ok(induced_path_small(&s, r))
}

fn induced_path_small(s: &SmallGraph, radius: usize) -> bool {
    has_induced_path(s, (2 * radius).saturating_sub(1))
}

/// Geodesic cycle of length `2r` or `2r + 1` whenever `n <= 3r - 2` and `diam <= 2r - 2`.
pub fn check_geodesic_cycle(g: &Graph) -> Result<LemmaOutcome> {
    let s = small_connected(g)?;
    Ok(geodesic_cycle_small(&s))
}

fn geodesic_cycle_small(s: &SmallGraph) -> LemmaOutcome {
    let ecc = s.eccentricities().expect("connected");
    let r = *ecc.iter().min().expect("order >= 1");
    let d = *ecc.iter().max().expect("order >= 1");
    if s.order() + 2 > 3 * r || d + 2 > 2 * r {
        return LemmaOutcome::Vacuous;
    }
    let dist = s.distances().expect("connected");
    LemmaOutcome::Checked(has_geodesic_cycle_small(s, &dist, &[2 * r, 2 * r + 1]))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OrderCounts {
    pub n: usize,
    pub connected: u64,
    /// Graphs meeting the lemma's hypotheses.
    pub checked: u64,
    pub vacuous: u64,
    pub violations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaScanReport {
    pub lemma: Lemma,
    pub max_n: usize,
    pub holds: bool,
    pub per_order: Vec<OrderCounts>,
    /// graph6 of the first violating graph found, if any.
    pub first_violation: Option<String>,
}

#[derive(Default)]
struct Acc {
    counts: OrderCounts,
    first_bad: Option<u64>,
}

/// Checks `lemma` on every connected labeled graph with `2 <= n <= max_n`.
pub fn scan_lemma(lemma: Lemma, max_n: usize) -> Result<LemmaScanReport> {
    super::check_order(max_n, MAX_ENUMERATION_ORDER)?;
    if max_n < 2 {
        return Err(Error::BadParameters(format!(
            "lemma scan needs max n >= 2, got {max_n}"
        )));
    }
    let mut per_order = Vec::new();
    let mut first_violation = None;
    for n in 2..=max_n {
        let acc = scan_labeled(
            n,
            Acc::default,
            |acc, mask, g| {
                let Some((r, _)) = g.radius_and_center() else {
                    return;
                };
                acc.counts.connected += 1;
                let outcome = match lemma {
                    Lemma::InducedPath => LemmaOutcome::Checked(induced_path_small(g, r)),
                    Lemma::GeodesicCycle => geodesic_cycle_small(g),
                };
                match outcome {
                    LemmaOutcome::Vacuous => acc.counts.vacuous += 1,
                    LemmaOutcome::Checked(ok) => {
                        acc.counts.checked += 1;
                        if !ok {
                            acc.counts.violations += 1;
                            acc.first_bad.get_or_insert(mask);
                        }
                    }
                }
            },
            |a, b| Acc {
                counts: OrderCounts {
                    n: 0,
                    connected: a.counts.connected + b.counts.connected,
                    checked: a.counts.checked + b.counts.checked,
                    vacuous: a.counts.vacuous + b.counts.vacuous,
                    violations: a.counts.violations + b.counts.violations,
                },
                first_bad: match (a.first_bad, b.first_bad) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                },
            },
        )?;
        if first_violation.is_none() {
            first_violation = acc
                .first_bad
                .map(|mask| graph6_encode(&SmallGraph::from_mask(n, mask).to_graph()))
                .transpose()?;
        }
        per_order.push(OrderCounts { n, ..acc.counts });
    }
    Ok(LemmaScanReport {
        lemma,
        max_n,
        holds: per_order.iter().all(|c| c.violations == 0),
        per_order,
        first_violation,
    })
}
