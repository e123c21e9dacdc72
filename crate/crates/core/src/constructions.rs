//! Witness families: for every feasible `(n, r, s)` a graph of order `n`,
//! radius `r` and center size `s`.
//!
//! Labelings are fixed so that outputs are reproducible:
//!
//! * `broom(n, k)`: spine `0..=k`, leaves `k+1..n` hang off vertex 1 (the joint).
//! * `lollipop(n, k)`: cycle `0..k`, tail `k..n` attached at vertex 0.
//! * `g1`..`g5`: the cycle or broom comes first, added vertices follow.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::metric_profile;
use crate::omega::omega_contains;

/// A broom together with its joint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Broom {
    pub graph: Graph,
    pub joint: usize,
}

fn bad(msg: String) -> Error {
    Error::BadParameters(msg)
}

/// The broom `B(n, k)`: a path of length `k` with `n - k - 1` extra leaves
/// on the neighbour of one end.
pub fn broom(n: usize, k: usize) -> Result<Broom> {
    if k < 2 || k + 1 > n {
        return Err(bad(format!("broom needs 2 <= k <= n-1, got n={n}, k={k}")));
    }
    let mut g = Graph::edgeless(n)?;
    for i in 1..=k {
        g.insert_edge(i - 1, i);
    }
    for leaf in k + 1..n {
        g.insert_edge(1, leaf);
    }
    Ok(Broom { graph: g, joint: 1 })
}

/// The lollipop `L(n, k)`: a `k`-cycle with a path of `n - k` further
/// vertices hanging from cycle vertex 0.
pub fn lollipop(n: usize, k: usize) -> Result<Graph> {
    if k < 3 || k > n {
        return Err(bad(format!("lollipop needs 3 <= k <= n, got n={n}, k={k}")));
    }
    let mut g = Graph::edgeless(n)?;
    for i in 0..k {
        g.insert_edge(i, (i + 1) % k);
    }
    let mut prev = 0;
    for v in k..n {
        g.insert_edge(prev, v);
        prev = v;
    }
    Ok(g)
}

/// `K_s ∨ complement(K_{n-s})`: radius 1 with center of size `s` unless `s = n - 1`.
pub fn join_family(n: usize, s: usize) -> Result<Graph> {
    if s == 0 || s > n {
        return Err(bad(format!(
            "join family needs 1 <= s <= n, got n={n}, s={s}"
        )));
    }
    if s == n {
        return Graph::complete(n);
    }
    Graph::complete(s)?.join(&Graph::empty(n - s)?)
}

fn require(cond: bool, what: &str, n: usize, r: usize, s: usize) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(bad(format!("{what} is undefined for n={n}, r={r}, s={s}")))
    }
}

/// `C_{2r}` on vertices `0..2r` plus `extra` vertices adjacent to 1 and `2r-1`,
/// with room reserved for `pendants` leaves on vertex 0 (labels after the cycle).
fn cycle_with_twins(n: usize, r: usize, pendants: usize) -> Result<Graph> {
    let len = 2 * r;
    let mut g = Graph::edgeless(n)?;
    for i in 0..len {
        g.insert_edge(i, (i + 1) % len);
    }
    for v in len..len + pendants {
        g.insert_edge(0, v);
    }
    for v in len + pendants..n {
        g.insert_edge(1, v);
        g.insert_edge(len - 1, v);
    }
    Ok(g)
}

/// Broom `B(n-s+2, 2r-1)` with `s - 2` extra vertices on its two central spine vertices.
pub fn g1(n: usize, r: usize, s: usize) -> Result<Graph> {
    require(
        r >= 2 && 2 * r < n && s >= 2 && s + 2 * r <= n + 2,
        "g1",
        n,
        r,
        s,
    )?;
    let base = broom(n - s + 2, 2 * r - 1)?.graph;
    let mut g = Graph::edgeless(n)?;
    for (u, v) in base.edges() {
        g.insert_edge(u, v);
    }
    for v in base.order()..n {
        g.insert_edge(r - 1, v);
        g.insert_edge(r, v);
    }
    Ok(g)
}

/// Odd gap values `s = 2(r-k)+1`: a broom of depth `k` hung from a vertex of `C_{2r}`.
pub fn g2(n: usize, r: usize, s: usize) -> Result<Graph> {
    require(
        r >= 2 && 2 * r < n && s % 2 == 1 && s < 2 * r,
        "g2",
        n,
        r,
        s,
    )?;
    let k = (2 * r + 1 - s) / 2;
    require(k <= n - 2 * r, "g2", n, r, s)?;
    if n == 2 * r + k {
        return lollipop(n, 2 * r);
    }
    let b = broom(n - 2 * r + 1, k + 1)?;
    Graph::cycle(2 * r)?.identify(0, &b.graph, b.joint)
}

/// Even gap values `s = 2(r-k)`: `L(2r+1, 2r)` with a path or broom of depth
/// `k` glued to the leaf's antipodal cycle vertex `r`.
pub fn g3(n: usize, r: usize, s: usize) -> Result<Graph> {
    require(
        r >= 2 && 2 * r + 1 < n && s.is_multiple_of(2) && s >= 2 && s < 2 * r,
        "g3",
        n,
        r,
        s,
    )?;
    let k = (2 * r - s) / 2;
    require(k < n - 2 * r, "g3", n, r, s)?;
    let base = lollipop(2 * r + 1, 2 * r)?;
    if n == 2 * r + k + 1 {
        base.identify(r, &Graph::path(k + 1)?, 0)
    } else {
        let b = broom(n - 2 * r, k + 1)?;
        base.identify(r, &b.graph, b.joint)
    }
}

/// `s = 2r + k - 1`: `C_{2r}` with `n - 2r - k` pendants on vertex 0 and `k`
/// vertices adjacent to both cycle neighbours of vertex 0.
///
/// Needs `r >= 3`: a twin is 3 steps from every pendant, so on `C_4` the
/// twins fall out of the center. (`g1` covers the same sizes when `r = 2`.)
pub fn g4(n: usize, r: usize, s: usize) -> Result<Graph> {
    require(
        r >= 3 && 2 * r + 1 < n && s >= 2 * r && s + 2 <= n,
        "g4",
        n,
        r,
        s,
    )?;
    let k = s + 1 - 2 * r;
    cycle_with_twins(n, r, n - 2 * r - k)
}

/// Self-centered: `C_{2r}` plus `n - 2r` vertices adjacent to 1 and `2r-1`.
pub fn g5(n: usize, r: usize) -> Result<Graph> {
    require(r >= 2 && 2 * r < n, "g5", n, r, n)?;
    cycle_with_twins(n, r, 0)
}

/// Which family produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WitnessCase {
    JoinFamily,
    BroomCase1,
    G1,
    G2Lollipop,
    G2BroomOnCycle,
    G3Path,
    G3Broom,
    G4,
    G5,
    HalfPath,
    HalfCycle,
}

impl WitnessCase {
    /// True for the families built around an induced cycle `0..2r`.
    pub fn has_even_cycle(self) -> bool {
        matches!(
            self,
            WitnessCase::G2Lollipop
                | WitnessCase::G2BroomOnCycle
                | WitnessCase::G3Path
                | WitnessCase::G3Broom
                | WitnessCase::G4
                | WitnessCase::G5
                | WitnessCase::HalfCycle
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessRecipe {
    pub case: WitnessCase,
    pub n: usize,
    pub r: usize,
    pub s: usize,
    /// Auxiliary family parameter; 0 when the family has none.
    pub k: usize,
}

/// Builds a graph of order `n`, radius `r` and center size `s`.
///
/// Precedence when several families apply: the `r = n/2` pair, then the
/// `r = 1` join family, then broom, `g5`, `g1`, `g4`, and finally `g2`/`g3`
/// for the values only those reach.
pub fn witness(n: usize, r: usize, s: usize) -> Result<(Graph, WitnessRecipe)> {
    if n < 3 || r == 0 || 2 * r > n {
        return Err(bad(format!(
            "witness needs n >= 3 and 1 <= r <= n/2, got n={n}, r={r}"
        )));
    }
    if !omega_contains(n, r, s)? {
        return Err(Error::InfeasibleTarget { n, r, s });
    }
    let recipe = |case, k| WitnessRecipe { case, n, r, s, k };
    let built = if 2 * r == n {
        if s == 2 {
            (Graph::path(n)?, recipe(WitnessCase::HalfPath, 0))
        } else {
            (Graph::cycle(n)?, recipe(WitnessCase::HalfCycle, 0))
        }
    } else if r == 1 {
        (join_family(n, s)?, recipe(WitnessCase::JoinFamily, 0))
    } else if s == 1 {
        (broom(n, 2 * r)?.graph, recipe(WitnessCase::BroomCase1, 0))
    } else if s == n {
        (g5(n, r)?, recipe(WitnessCase::G5, 0))
    } else if s + 2 * r <= n + 2 {
        (g1(n, r, s)?, recipe(WitnessCase::G1, 0))
    } else if s >= 2 * r {
        (g4(n, r, s)?, recipe(WitnessCase::G4, s + 1 - 2 * r))
    } else if s % 2 == 1 {
        let k = (2 * r + 1 - s) / 2;
        let case = if n == 2 * r + k {
            WitnessCase::G2Lollipop
        } else {
            WitnessCase::G2BroomOnCycle
        };
        (g2(n, r, s)?, recipe(case, k))
    } else {
        let k = (2 * r - s) / 2;
        let case = if n == 2 * r + k + 1 {
            WitnessCase::G3Path
        } else {
            WitnessCase::G3Broom
        };
        (g3(n, r, s)?, recipe(case, k))
    };
    Ok(built)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub expected: usize,
    /// `None` when the quantity could not be measured (e.g. radius of a
    /// disconnected graph).
    pub actual: Option<usize>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// Checks order, connectivity, radius and center size of a claimed witness.
pub fn validate_witness(g: &Graph, n: usize, r: usize, s: usize) -> ValidationReport {
    let check = |name, expected, actual: Option<usize>| Check {
        name,
        expected,
        actual,
        passed: actual == Some(expected),
    };
    let profile = metric_profile(g).ok();
    let checks = vec![
        check("order", n, Some(g.order())),
        check("connected", 1, Some(g.is_connected() as usize)),
        check("radius", r, profile.as_ref().map(|p| p.radius)),
        check("center_size", s, profile.as_ref().map(|p| p.center_size())),
    ];
    ValidationReport {
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}
