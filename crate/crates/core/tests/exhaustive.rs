//! Exhaustive scans over all labeled graphs of small order, checked against
//! an all-pairs oracle and the closed-form set of center sizes.

use std::collections::BTreeMap;

use graph_center::codec::graph6_decode;
use graph_center::constructions::lollipop;
use graph_center::search::{
    are_isomorphic, check_geodesic_cycle, check_induced_path, empirical_omega, enumerate_labeled,
    scan_lemma, unique_up_to_iso, Lemma,
};
use graph_center::{omega_set, witness, Graph};

/// Radius and center size by Floyd-Warshall on the adjacency matrix; `None`
/// when disconnected.
fn floyd_radius_center(n: usize, adj: &[Vec<bool>]) -> Option<(usize, usize)> {
    const INF: usize = usize::MAX / 4;
    let mut d: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    if u == v {
                        0
                    } else if adj[u][v] {
                        1
                    } else {
                        INF
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let ecc: Vec<usize> = d.iter().map(|row| *row.iter().max().unwrap()).collect();
    let radius = *ecc.iter().min().unwrap();
    (radius < INF).then(|| (radius, ecc.iter().filter(|&&e| e == radius).count()))
}

/// Decodes mask bits in column order `(0,1) (0,2) (1,2) (0,3) ...`.
fn adjacency(n: usize, mask: u64) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    let pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    for (bit, (u, v)) in pairs.enumerate() {
        if mask >> bit & 1 == 1 {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    adj
}

#[test]
fn enumeration_counts_match_all_pairs_oracle() {
    for n in 2..=6 {
        let pairs = n * (n - 1) / 2;
        let mut expected: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        let mut connected = 0;
        for mask in 0..1u64 << pairs {
            if let Some(key) = floyd_radius_center(n, &adjacency(n, mask)) {
                *expected.entry(key).or_default() += 1;
                connected += 1;
            }
        }
        let summary = enumerate_labeled(n).unwrap();
        assert_eq!(summary.total_graphs, 1 << pairs);
        assert_eq!(summary.connected_graphs, connected);
        let mut actual = BTreeMap::new();
        for (&r, row) in &summary.table {
            for (&s, &count) in &row.center_sizes {
                actual.insert((r, s), count);
            }
        }
        assert_eq!(actual, expected, "n = {n}");
    }
}

#[test]
fn observed_center_sizes_equal_the_formula_up_to_seven() {
    for n in 3..=7 {
        let observed = empirical_omega(n).unwrap();
        assert_eq!(
            observed.keys().copied().collect::<Vec<_>>(),
            (1..=n / 2).collect::<Vec<_>>()
        );
        for (r, sizes) in observed {
            let sizes: Vec<usize> = sizes.into_iter().collect();
            assert_eq!(sizes, omega_set(n, r).unwrap(), "n = {n}, r = {r}");
        }
    }
    let seven = empirical_omega(7).unwrap();
    let sizes: Vec<usize> = seven[&3].iter().copied().collect();
    assert_eq!(sizes, vec![1, 2, 3, 5, 7]);
}

#[test]
fn lemma_scans_hold_up_to_seven() {
    for lemma in [Lemma::InducedPath, Lemma::GeodesicCycle] {
        let report = scan_lemma(lemma, 7).unwrap();
        assert!(report.holds, "{lemma:?}: {:?}", report.first_violation);
        assert_eq!(report.per_order.len(), 6);
        let connected: Vec<u64> = report.per_order.iter().map(|c| c.connected).collect();
        assert_eq!(connected, vec![1, 4, 38, 728, 26704, 1866256]);
    }
}

#[test]
fn lemma_checks_on_named_graphs() {
    for n in 3..=12 {
        assert!(check_induced_path(&Graph::path(n).unwrap()).unwrap());
        assert!(check_induced_path(&Graph::cycle(n).unwrap()).unwrap());
        assert!(check_geodesic_cycle(&Graph::cycle(n).unwrap())
            .unwrap()
            .holds());
    }
    assert!(check_geodesic_cycle(&lollipop(9, 8).unwrap())
        .unwrap()
        .holds());
}

/// Automorphism group order by trying every permutation.
fn automorphisms(g: &Graph) -> usize {
    fn extend(g: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> usize {
        let k = perm.len();
        if k == g.order() {
            return 1;
        }
        let mut total = 0;
        for image in 0..g.order() {
            if used[image] {
                continue;
            }
            if (0..k).all(|u| g.has_edge(u, k) == g.has_edge(perm[u], image)) {
                perm.push(image);
                used[image] = true;
                total += extend(g, perm, used);
                used[image] = false;
                perm.pop();
            }
        }
        total
    }
    extend(g, &mut Vec::new(), &mut vec![false; g.order()])
}

#[test]
fn lollipop_is_the_only_order_seven_radius_three_graph_with_five_central_vertices() {
    let reference = lollipop(7, 6).unwrap();
    let aut = automorphisms(&reference);
    assert_eq!(aut, 2);
    let report = unique_up_to_iso(7, 3, 5, &reference).unwrap();
    assert!(report.is_unique);
    assert_eq!(report.labeled_match_count, 5040 / aut as u64);
}

#[test]
fn path_is_the_only_order_seven_radius_three_graph_with_one_central_vertex() {
    let report = unique_up_to_iso(7, 3, 1, &Graph::path(7).unwrap()).unwrap();
    assert!(report.is_unique);
    assert_eq!(report.labeled_match_count, 5040 / 2);
}

#[test]
fn non_unique_targets_produce_a_verified_counterexample() {
    let (reference, _) = witness(7, 2, 1).unwrap();
    let report = unique_up_to_iso(7, 2, 1, &reference).unwrap();
    assert!(!report.is_unique);
    let cx = graph6_decode(report.counterexample.as_deref().unwrap()).unwrap();
    assert!(!are_isomorphic(&cx, &reference).unwrap());
}
