//! The exact set of attainable center sizes for given order and radius,
//! and central-ratio witnesses built from it.
//!
//! Three regimes, all decided in integer arithmetic:
//!
//! * `8r <= 3n + 2`: every size in `1..=n` except `n - 1`;
//! * `3n + 2 < 8r` and `2r < n`: `1..=n-2r+2`, then `6r-2n+1..=n-2`, then `n`;
//! * `2r = n`: only `2` (paths) and `n` (cycles).

use crate::constructions::witness;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_query(n: usize, r: usize) -> Result<()> {
    if n < 3 || r == 0 || 2 * r > n {
        return Err(Error::BadParameters(format!(
            "need n >= 3 and 1 <= r <= n/2, got n={n}, r={r}"
        )));
    }
    Ok(())
}

/// Whether `(n, r)` falls in the regime with a gap between the low and high runs.
pub fn has_gap(n: usize, r: usize) -> Result<bool> {
    check_query(n, r)?;
    Ok(8 * r > 3 * n + 2 && 2 * r < n)
}

/// All attainable center sizes for order `n` and radius `r`, ascending.
pub fn omega_set(n: usize, r: usize) -> Result<Vec<usize>> {
    check_query(n, r)?;
    let set = if 2 * r == n {
        vec![2, n]
    } else if 8 * r <= 3 * n + 2 {
        (1..=n).filter(|&s| s != n - 1).collect()
    } else {
        let low = 1..=n + 2 - 2 * r;
        let high = 6 * r - 2 * n + 1..=n - 2;
        low.chain(high).chain(std::iter::once(n)).collect()
    };
    Ok(set)
}

/// Membership in [`omega_set`] without building the set.
pub fn omega_contains(n: usize, r: usize, s: usize) -> Result<bool> {
    check_query(n, r)?;
    if s == 0 || s > n || s == n - 1 {
        return Ok(false);
    }
    Ok(if 2 * r == n {
        s == 2 || s == n
    } else if 8 * r <= 3 * n + 2 {
        true
    } else {
        s + 2 * r <= n + 2 || s + 2 * n > 6 * r
    })
}

/// A connected graph whose central ratio is exactly `a/b`.
///
/// `a = b` gives a cycle; otherwise a radius-1 witness of order `b` with
/// center size `a`, doubled to order `2b` and center `2a` when `a = b - 1`
/// (since `b - 1` is never attainable at order `b`).
pub fn ratio_witness(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || a > b {
        return Err(Error::BadParameters(format!(
            "ratio needs 1 <= a <= b, got a={a}, b={b}"
        )));
    }
    if a == b {
        return Graph::cycle(b.max(3));
    }
    let (n, s) = if a + 1 == b { (2 * b, 2 * a) } else { (b, a) };
    witness(n, 1, s).map(|(g, _)| g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{metric_profile, CentralRatio};

    #[test]
    fn headline_set() {
        assert_eq!(
            omega_set(14, 6).unwrap(),
            vec![1, 2, 3, 4, 9, 10, 11, 12, 14]
        );
    }

    #[test]
    fn branch_examples() {
        assert_eq!(omega_set(8, 4).unwrap(), vec![2, 8]);
        assert_eq!(omega_set(7, 3).unwrap(), vec![1, 2, 3, 5, 7]);
        assert_eq!(omega_set(6, 1).unwrap(), vec![1, 2, 3, 4, 6]);
        assert_eq!(omega_set(3, 1).unwrap(), vec![1, 3]);
    }

    #[test]
    fn membership_examples() {
        assert!(!omega_contains(14, 6, 5).unwrap());
        assert!(!omega_contains(14, 6, 13).unwrap());
        assert!(omega_contains(9, 4, 7).unwrap());
        assert!(!omega_contains(9, 4, 0).unwrap());
        assert!(!omega_contains(9, 4, 10).unwrap());
    }

    #[test]
    fn bad_queries() {
        for (n, r) in [(2, 1), (14, 8), (14, 0), (0, 0)] {
            assert!(matches!(omega_set(n, r), Err(Error::BadParameters(_))));
            assert!(omega_contains(n, r, 1).is_err());
        }
    }

    #[test]
    fn boundary_of_first_regime() {
        // 8r = 3n + 2 exactly: n = 10, r = 4 stays gap-free
        assert!(!has_gap(10, 4).unwrap());
        assert_eq!(omega_set(10, 4).unwrap(), vec![1, 2, 3, 4, 5, 6, 7, 8, 10]);
        // the low and high runs meet there: n-2r+2 = 4, 6r-2n+1 = 5
        assert!(has_gap(14, 6).unwrap());
    }

    #[test]
    fn contains_agrees_with_set() {
        for n in 3..=60 {
            for r in 1..=n / 2 {
                let set = omega_set(n, r).unwrap();
                for s in 0..=n + 1 {
                    assert_eq!(
                        omega_contains(n, r, s).unwrap(),
                        set.contains(&s),
                        "n={n} r={r} s={s}"
                    );
                }
                assert!(set.contains(&n));
                assert!(!set.contains(&(n - 1)));
                assert!(set.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn gap_is_exactly_the_middle_run() {
        for n in 3..=60 {
            for r in 1..=n / 2 {
                let set = omega_set(n, r).unwrap();
                let missing: Vec<usize> = (1..n - 1).filter(|s| !set.contains(s)).collect();
                if has_gap(n, r).unwrap() {
                    let expected: Vec<usize> = (n - 2 * r + 3..=6 * r - 2 * n).collect();
                    assert!(!expected.is_empty());
                    assert_eq!(missing, expected, "n={n} r={r}");
                } else if 2 * r < n {
                    assert!(missing.is_empty(), "n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn ratio_examples() {
        let g = ratio_witness(3, 7).unwrap();
        let p = metric_profile(&g).unwrap();
        assert_eq!((g.order(), p.center_size()), (7, 3));

        let g = ratio_witness(6, 7).unwrap();
        let p = metric_profile(&g).unwrap();
        assert_eq!((g.order(), p.center_size()), (14, 12));
        assert_eq!(p.central_ratio, CentralRatio::new(6, 7));

        let p = metric_profile(&ratio_witness(1, 1).unwrap()).unwrap();
        assert!(p.is_self_centered());
        assert!(ratio_witness(2, 1).is_err());
        assert!(ratio_witness(0, 3).is_err());
    }

    #[test]
    fn ratio_is_exact_up_to_twelve() {
        for b in 1..=12u64 {
            for a in 1..=b {
                let g = ratio_witness(a as usize, b as usize).unwrap();
                let p = metric_profile(&g).unwrap();
                assert_eq!(p.central_ratio, CentralRatio::new(a, b), "a={a} b={b}");
            }
        }
    }
}
