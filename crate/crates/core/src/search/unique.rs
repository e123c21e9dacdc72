use serde::Serialize;

use super::iso::are_isomorphic;
use super::{scan_labeled, SmallGraph};
use crate::codec::graph6_encode;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    /// graph6 of the reference graph.
    pub reference: String,
    pub is_unique: bool,
    pub labeled_match_count: u64,
    /// graph6 of the first match not isomorphic to the reference.
    pub counterexample: Option<String>,
}

#[derive(Default)]
struct Acc {
    matches: u64,
    counterexample: Option<u64>,
    error: Option<Error>,
}

/// Scans every labeled graph of order `n` with radius `r` and center size
/// `s`, and reports whether all of them are isomorphic to `reference`.
pub fn unique_up_to_iso(
    n: usize,
    r: usize,
    s: usize,
    reference: &Graph,
) -> Result<UniquenessReport> {
    let acc = scan_labeled(
        n,
        Acc::default,
        |acc, mask, g| {
            if g.radius_and_center() != Some((r, s)) {
                return;
            }
            acc.matches += 1;
            if acc.counterexample.is_some() || acc.error.is_some() {
                return;
            }
            match are_isomorphic(&g.to_graph(), reference) {
                Ok(true) => {}
                Ok(false) => acc.counterexample = Some(mask),
                Err(e) => acc.error = Some(e),
            }
        },
        |a, b| Acc {
            matches: a.matches + b.matches,
            counterexample: match (a.counterexample, b.counterexample) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            },
            error: a.error.or(b.error),
        },
    )?;
    if let Some(e) = acc.error {
        return Err(e);
    }
    let counterexample = acc
        .counterexample
        .map(|mask| graph6_encode(&SmallGraph::from_mask(n, mask).to_graph()))
        .transpose()?;
    Ok(UniquenessReport {
        n,
        r,
        s,
        reference: graph6_encode(reference)?,
        is_unique: counterexample.is_none(),
        labeled_match_count: acc.matches,
        counterexample,
    })
}

/// Same check over an externally supplied list of graphs (e.g. a corpus
/// scan's matches), which must already be filtered to `(n, r, s)`.
pub fn unique_among(
    n: usize,
    r: usize,
    s: usize,
    reference: &Graph,
    matches: &[Graph],
) -> Result<UniquenessReport> {
    let mut counterexample = None;
    for g in matches {
        if !are_isomorphic(g, reference)? {
            counterexample = Some(graph6_encode(g)?);
            break;
        }
    }
    Ok(UniquenessReport {
        n,
        r,
        s,
        reference: graph6_encode(reference)?,
        is_unique: counterexample.is_none(),
        labeled_match_count: matches.len() as u64,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lollipop;

    #[test]
    fn paths_are_the_only_radius_three_graphs_with_two_central_vertices() {
        let report = unique_up_to_iso(6, 3, 2, &Graph::path(6).unwrap()).unwrap();
        assert!(report.is_unique);
        assert_eq!(report.labeled_match_count, 360);
    }

    #[test]
    fn non_unique_case_reports_a_counterexample() {
        // radius 1 with center 1 on 5 vertices: the star, but also stars plus edges
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let report = unique_up_to_iso(5, 1, 1, &star).unwrap();
        assert!(!report.is_unique);
        let cx = crate::codec::graph6_decode(report.counterexample.as_ref().unwrap()).unwrap();
        assert!(!are_isomorphic(&cx, &star).unwrap());
    }

    #[test]
    fn corpus_variant() {
        let reference = lollipop(7, 6).unwrap();
        let relabeled = reference.relabel(&[6, 5, 4, 3, 2, 1, 0]).unwrap();
        let report = unique_among(7, 3, 5, &reference, &[relabeled]).unwrap();
        assert!(report.is_unique);
        let report = unique_among(7, 3, 5, &reference, &[Graph::path(7).unwrap()]).unwrap();
        assert!(!report.is_unique);
    }
}
