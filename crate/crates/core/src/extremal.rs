//! Named tree families and the closed formulas for their extremal index values.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};

/// Parametric description of a generated tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TreeSpec {
    Path { n: usize },
    Star { n: usize },
    /// A path on `k - 1` vertices with `a1` leaves on one end and `a2` on the
    /// other, so leaves of different groups are at distance `k`.
    DoubleBroom { k: usize, a1: usize, a2: usize },
    /// A centre with `groups.len()` legs of `k/2 - 1` vertices each and
    /// `groups[i]` leaves hung at the end of leg `i`.
    StarlikeBroom { k: usize, groups: Vec<usize> },
    /// Spine `v_0 .. v_{s+1}` with `k - 2` leaves on each of `p` spine vertices,
    /// filled from both ends towards the middle.
    Caterpillar { n: usize, k: usize, p: usize },
}

fn infeasible(msg: String) -> Error {
    Error::InfeasibleSpec(msg)
}

impl TreeSpec {
    /// Number of vertices, after checking the parameters.
    pub fn order(&self) -> Result<usize> {
        match *self {
            TreeSpec::Path { n } | TreeSpec::Star { n } => {
                if n == 0 {
                    return Err(infeasible("a tree needs at least one vertex".into()));
                }
                Ok(n)
            }
            TreeSpec::DoubleBroom { k, a1, a2 } => {
                if k < 3 || a1 == 0 || a2 == 0 {
                    return Err(infeasible(format!(
                        "double broom needs k >= 3 and non-empty groups, got k={k}, a1={a1}, a2={a2}"
                    )));
                }
                Ok(k - 1 + a1 + a2)
            }
            TreeSpec::StarlikeBroom { k, ref groups } => {
                if k < 4 || k % 2 != 0 {
                    return Err(infeasible(format!("starlike broom needs even k >= 4, got {k}")));
                }
                if groups.is_empty() || groups.contains(&0) {
                    return Err(infeasible("starlike broom needs non-empty groups".into()));
                }
                Ok(1 + groups.len() * (k / 2 - 1) + groups.iter().sum::<usize>())
            }
            TreeSpec::Caterpillar { n, k, p } => {
                caterpillar_spine(n, k, p)?;
                Ok(n)
            }
        }
    }

    /// Builds the tree. Spine (or centre and legs) vertices are numbered
    /// first, then the pendant groups in spine order.
    pub fn generate(&self) -> Result<Graph> {
        let n = self.order()?;
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        match *self {
            TreeSpec::Path { n } => return Ok(graph::path(n)),
            TreeSpec::Star { n } => return Ok(graph::star(n)),
            TreeSpec::DoubleBroom { k, a1, a2 } => {
                let spine = k - 1;
                edges.extend((1..spine).map(|v| (v - 1, v)));
                let mut next = spine;
                for (anchor, count) in [(0, a1), (spine - 1, a2)] {
                    for _ in 0..count {
                        edges.push((anchor, next));
                        next += 1;
                    }
                }
            }
            TreeSpec::StarlikeBroom { k, ref groups } => {
                let leg = k / 2 - 1;
                let mut ends = Vec::with_capacity(groups.len());
                let mut next = 1;
                for _ in groups {
                    let mut prev = 0;
                    for _ in 0..leg {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                    ends.push(prev);
                }
                for (&end, &count) in ends.iter().zip(groups) {
                    for _ in 0..count {
                        edges.push((end, next));
                        next += 1;
                    }
                }
            }
            TreeSpec::Caterpillar { n: _, k, p } => {
                let s = caterpillar_spine(n, k, p)?;
                edges.extend((1..s + 2).map(|v| (v - 1, v)));
                let mut spots = caterpillar_positions(s, p);
                spots.sort_unstable();
                let mut next = s + 2;
                for v in spots {
                    for _ in 0..k - 2 {
                        edges.push((v, next));
                        next += 1;
                    }
                }
            }
        }
        Graph::from_edge_list(n, &edges)
    }
}

/// Spine length `s` of `C_{n,k,p}`; the spine path has `s + 2` vertices.
pub fn caterpillar_spine(n: usize, k: usize, p: usize) -> Result<usize> {
    if k < 3 {
        return Err(infeasible(format!("caterpillar needs k >= 3, got {k}")));
    }
    let s = (n as i64) - (p * (k - 2)) as i64 - 2;
    if s < 0 || (p as i64) > s {
        return Err(infeasible(format!(
            "caterpillar n={n}, k={k}, p={p} has spine length {s}; need 0 <= p <= s"
        )));
    }
    Ok(s as usize)
}

/// Spine indices (in `1..=s`) that receive pendants: `v_1, v_s, v_2, v_{s-1}, ...`.
/// For odd `p` the last vertex taken is on the left half.
pub fn caterpillar_positions(s: usize, p: usize) -> Vec<usize> {
    (0..p)
        .map(|j| if j % 2 == 0 { j / 2 + 1 } else { s - j / 2 })
        .collect()
}

/// Distance-`k` pair count of the best double broom, `floor(q/2) * ceil(q/2)`
/// with `q = n - k + 1`, and that broom. Maximal over all trees for odd `k`.
pub fn max_wk_odd(n: usize, k: usize) -> Result<(u64, TreeSpec)> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!("k must be odd and >= 3, got {k}")));
    }
    double_broom_best(n, k)
}

fn double_broom_best(n: usize, k: usize) -> Result<(u64, TreeSpec)> {
    if n < k + 1 {
        return Err(infeasible(format!("no tree on {n} vertices has diameter {k}")));
    }
    let q = n - k + 1;
    let (a1, a2) = (q / 2, q - q / 2);
    Ok(((a1 * a2) as u64, TreeSpec::DoubleBroom { k, a1, a2 }))
}

fn check_even_k(k: usize) -> Result<()> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!("k must be even and >= 4, got {k}")));
    }
    Ok(())
}

/// Upper bound `(1/2) (n - 1 - pk/2 + p)^2 (1 - 1/p)` on the distance-`k` pair
/// count of a tree whose pendant groups hang on `p` equal legs, exact.
pub fn f_even(n: usize, k: usize, p: usize) -> Result<Ratio<i64>> {
    check_even_k(k)?;
    if p < 2 || p * k > 2 * (n.saturating_sub(1)) {
        return Err(Error::OutOfRange(format!(
            "p={p} outside [2, 2(n-1)/k] for n={n}, k={k}"
        )));
    }
    let q = (n - 1) as i64 - (p * (k / 2 - 1)) as i64;
    let p = p as i64;
    Ok(Ratio::new(q * q, 2) * Ratio::new(p - 1, p))
}

/// Stationary point of [`f_even`] in `p`, as a real number.
pub fn p_star(n: usize, k: usize) -> Result<f64> {
    check_even_k(k)?;
    let ratio = (16 * n + k) as f64 - 18.0;
    Ok(0.25 + 0.25 * (ratio / (k - 2) as f64).sqrt())
}

/// Balanced split of `q` into `p` parts, larger parts first.
pub fn balanced_partition(q: usize, p: usize) -> Vec<usize> {
    let (base, extra) = (q / p, q % p);
    (0..p).map(|i| base + usize::from(i < extra)).collect()
}

/// `(q^2 - sum a_i^2) / 2`: pairs of leaves taken from different groups.
pub fn cross_group_pairs(groups: &[usize]) -> u64 {
    let q: u64 = groups.iter().map(|&a| a as u64).sum();
    let sq: u64 = groups.iter().map(|&a| (a * a) as u64).sum();
    (q * q - sq) / 2
}

/// Best distance-`k` pair count for even `k` over every feasible number of
/// pendant groups `p` in `[2, 2(n-1)/k]`, each with balanced group sizes.
/// Ties go to the smallest `p`.
pub fn max_wk_even_search(n: usize, k: usize) -> Result<(u64, TreeSpec)> {
    check_even_k(k)?;
    let mut best = double_broom_best(n, k)?;
    let mut p = 3;
    while p * k <= 2 * (n - 1) {
        let q = n - 1 - p * (k / 2 - 1);
        let groups = balanced_partition(q, p);
        let value = cross_group_pairs(&groups);
        if value > best.0 {
            best = (value, TreeSpec::StarlikeBroom { k, groups });
        }
        p += 1;
    }
    Ok(best)
}

/// Upper bound `floor((n - 2) / (k - 1))` on the number of degree-`k`
/// vertices of a tree on `n` vertices.
pub fn max_degree_k_count(n: usize, k: usize) -> Result<usize> {
    if n < 2 || k < 2 {
        return Err(Error::OutOfRange(format!("need n >= 2 and k >= 2, got n={n}, k={k}")));
    }
    Ok((n - 2) / (k - 1))
}

/// Caterpillar pair sum written with the spine length `s`.
pub fn caterpillar_formula_s_form(s: i128, p: i128) -> i128 {
    let num = if p % 2 == 0 {
        p * (3 * p * s - p * p - 2)
    } else {
        (p + 1) * (p - 1) * (3 * s - p)
    };
    debug_assert_eq!(num % 12, 0);
    num / 12
}

/// Caterpillar pair sum written with the order `n` and degree `k`.
pub fn caterpillar_formula_n_form(n: i128, k: i128, p: i128) -> i128 {
    let num = if p % 2 == 0 {
        p * (3 * n * p + 5 * p * p - 3 * k * p * p - 2 - 6 * p)
    } else {
        (p + 1) * (p - 1) * (3 * n + 5 * p - 3 * k * p - 6)
    };
    debug_assert_eq!(num % 12, 0);
    num / 12
}

/// Sum of distances between the `p` degree-`k` vertices of `C_{n,k,p}`.
/// Both algebraic forms are evaluated and must agree.
pub fn twk_caterpillar_formula(n: usize, k: usize, p: usize) -> Result<u64> {
    let s = caterpillar_spine(n, k, p)?;
    let by_s = caterpillar_formula_s_form(s as i128, p as i128);
    let by_n = caterpillar_formula_n_form(n as i128, k as i128, p as i128);
    assert_eq!(by_s, by_n, "caterpillar forms disagree at n={n}, k={k}, p={p}");
    Ok(u64::try_from(by_s).expect("non-negative"))
}

/// The maximum degree-3 pair distance sum over trees on `n > 4` vertices,
/// attained by `C_{n,3,floor(n/2)-1}`.
pub fn max_tw3(n: usize) -> Result<(u64, TreeSpec)> {
    if n <= 4 {
        return Err(Error::OutOfRange(format!("need n > 4, got {n}")));
    }
    let p = n / 2 - 1;
    let value = twk_caterpillar_formula(n, 3, p)?;
    Ok((value, TreeSpec::Caterpillar { n, k: 3, p }))
}

/// Increase of the `k = 3` caterpillar sum from `p - 2` to `p` pendant vertices.
pub fn tw3_caterpillar_step(n: i128, p: i128) -> i128 {
    if p % 2 == 0 {
        (p - 1) * (n - 2 * p) - 1
    } else {
        (p - 1) * (n - 2 * p)
    }
}
