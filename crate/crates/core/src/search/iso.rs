use super::{check_order, SmallGraph};
use crate::error::Result;
use crate::graph::Graph;

pub const MAX_ISOMORPHISM_ORDER: usize = 12;

/// Degree plus the sorted degrees of the neighbours; equal for any pair of
/// vertices an isomorphism can match.
fn signatures(g: &SmallGraph) -> Vec<(u32, Vec<u32>)> {
    let deg: Vec<u32> = (0..g.order()).map(|v| g.row(v).count_ones()).collect();
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<u32> = (0..g.order())
                .filter(|&u| g.has_edge(v, u))
                .map(|u| deg[u])
                .collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect()
}

/// Exact isomorphism test by backtracking over signature-compatible vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    check_order(g.order(), MAX_ISOMORPHISM_ORDER)?;
    check_order(h.order(), MAX_ISOMORPHISM_ORDER)?;
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let (sg, sh) = (SmallGraph::from_graph(g)?, SmallGraph::from_graph(h)?);
    let (sig_g, sig_h) = (signatures(&sg), signatures(&sh));
    let mut sorted_g = sig_g.clone();
    let mut sorted_h = sig_h.clone();
    sorted_g.sort_unstable();
    sorted_h.sort_unstable();
    if sorted_g != sorted_h {
        return Ok(false);
    }

    let n = g.order();
    let candidates: Vec<u16> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| sig_h[w] == sig_g[v])
                .fold(0u16, |acc, w| acc | 1 << w)
        })
        .collect();
    let order = matching_order(&sg, &candidates);
    let mut map = vec![usize::MAX; n];
    Ok(extend(&sg, &sh, &order, &candidates, &mut map, 0, 0))
}

/// Vertices of `g` in the order they are matched: most already-placed
/// neighbours first, then fewest candidates.
fn matching_order(g: &SmallGraph, candidates: &[u16]) -> Vec<usize> {
    let n = g.order();
    let mut placed = 0u16;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                (
                    std::cmp::Reverse((g.row(v) & placed).count_ones()),
                    candidates[v].count_ones(),
                    std::cmp::Reverse(g.row(v).count_ones()),
                    v,
                )
            })
            .expect("unplaced vertex remains");
        placed |= 1 << next;
        order.push(next);
    }
    order
}

fn extend(
    g: &SmallGraph,
    h: &SmallGraph,
    order: &[usize],
    candidates: &[u16],
    map: &mut [usize],
    depth: usize,
    used: u16,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let mut pool = candidates[v] & !used;
    while pool != 0 {
        let w = pool.trailing_zeros() as usize;
        pool &= pool - 1;
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if consistent {
            map[v] = w;
            if extend(g, h, order, candidates, map, depth + 1, used | 1 << w) {
                return true;
            }
        }
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lollipop;
    use crate::error::Error;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let p4 = Graph::path(4).unwrap();
        let relabeled = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(are_isomorphic(&p4, &relabeled).unwrap());

        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&p4, &star).unwrap());

        let glued = Graph::cycle(6)
            .unwrap()
            .identify(0, &Graph::path(2).unwrap(), 0)
            .unwrap();
        assert!(are_isomorphic(&lollipop(7, 6).unwrap(), &glued).unwrap());
        let glued = Graph::cycle(4)
            .unwrap()
            .identify(0, &Graph::path(2).unwrap(), 0)
            .unwrap();
        assert!(are_isomorphic(&lollipop(5, 4).unwrap(), &glued).unwrap());
    }

    #[test]
    fn same_degree_sequences_can_differ() {
        // C_6 versus two triangles: both 2-regular
        let c6 = Graph::cycle(6).unwrap();
        let two = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &two).unwrap());
        // C_3 x K_2 prism versus K_{3,3}: both 3-regular on 6 vertices
        let prism = Graph::new(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let k33 = Graph::empty(3)
            .unwrap()
            .join(&Graph::empty(3).unwrap())
            .unwrap();
        assert!(!are_isomorphic(&prism, &k33).unwrap());
    }

    #[test]
    fn order_cap() {
        let big = Graph::path(13).unwrap();
        assert_eq!(
            are_isomorphic(&big, &big),
            Err(Error::OrderTooLarge { order: 13, max: 12 })
        );
        assert!(!are_isomorphic(&Graph::path(3).unwrap(), &Graph::path(4).unwrap()).unwrap());
    }

    fn graph_and_perm() -> impl Strategy<Value = (Graph, Vec<usize>)> {
        (1usize..=12).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                proptest::collection::vec(any::<bool>(), pairs),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            )
                .prop_map(move |(bits, perm)| {
                    let edges: Vec<(usize, usize)> = (1..n)
                        .flat_map(|v| (0..v).map(move |u| (u, v)))
                        .zip(bits)
                        .filter(|&(_, b)| b)
                        .map(|(e, _)| e)
                        .collect();
                    (Graph::new(n, &edges).unwrap(), perm)
                })
        })
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling((g, perm) in graph_and_perm()) {
            let h = g.relabel(&perm).unwrap();
            prop_assert!(are_isomorphic(&g, &g).unwrap());
            prop_assert!(are_isomorphic(&g, &h).unwrap());
            prop_assert!(are_isomorphic(&h, &g).unwrap());
        }

        #[test]
        fn detects_a_flipped_pair((g, perm) in graph_and_perm()) {
            prop_assume!(g.order() >= 2);
            // toggling one pair changes the edge count, so never isomorphic
            let mut edges: Vec<_> = g.edges().collect();
            match edges.iter().position(|&e| e == (0, 1)) {
                Some(i) => { edges.remove(i); }
                None => edges.push((0, 1)),
            }
            let h = Graph::new(g.order(), &edges).unwrap().relabel(&perm).unwrap();
            prop_assert!(!are_isomorphic(&g, &h).unwrap());
        }

        #[test]
        fn join_is_commutative_up_to_isomorphism(a in 1usize..6, b in 1usize..6, ka in any::<bool>()) {
            let g = if ka { Graph::complete(a).unwrap() } else { Graph::path(a).unwrap() };
            let h = Graph::empty(b).unwrap();
            prop_assert!(are_isomorphic(&g.join(&h).unwrap(), &h.join(&g).unwrap()).unwrap());
        }
    }
}
