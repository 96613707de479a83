//! Brute-force index computation straight from the definitions.
//!
//! Every function here recomputes an all-pairs BFS matrix and sums over
//! vertex pairs. Nothing is cached; these are the reference values the
//! faster routes in [`crate::tree_algo`] and [`crate::partial_cube`] are
//! checked against.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

fn connected_distances(g: &Graph) -> Result<DistanceMatrix> {
    let d = g.all_pairs_distances();
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(d)
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::OutOfRange("distance k must be at least 1".into()));
    }
    Ok(())
}

/// Coefficients of the Wiener polynomial: `coeffs[k]` is the number of
/// unordered vertex pairs at distance exactly `k`. `coeffs[0]` is 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct WienerPolynomial {
    pub coeffs: Vec<u64>,
}

impl WienerPolynomial {
    pub fn coefficient(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Derivative at 1, i.e. the Wiener index.
    pub fn wiener(&self) -> u64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| k as u64 * c)
            .sum()
    }

    /// Value at 1, i.e. the number of vertex pairs.
    pub fn pair_count(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }
}

/// Sum of distances over all unordered vertex pairs.
pub fn wiener(g: &Graph) -> Result<u64> {
    let d = connected_distances(g)?;
    Ok(d.pairs().map(|(_, _, x)| u64::from(x)).sum())
}

/// Number of unordered pairs at distance exactly `k`.
pub fn wk(g: &Graph, k: usize) -> Result<u64> {
    check_k(k)?;
    let d = connected_distances(g)?;
    Ok(d.pairs().filter(|&(_, _, x)| x as usize == k).count() as u64)
}

pub fn wiener_polynomial(g: &Graph) -> Result<WienerPolynomial> {
    let d = connected_distances(g)?;
    Ok(polynomial_from(&d))
}

fn polynomial_from(d: &DistanceMatrix) -> WienerPolynomial {
    let mut coeffs = vec![0u64; d.diameter() as usize + 1];
    for (_, _, x) in d.pairs() {
        coeffs[x as usize] += 1;
    }
    WienerPolynomial { coeffs }
}

/// Sum of distances over unordered pairs of vertices that both have degree `k`.
pub fn twk(g: &Graph, k: usize) -> Result<u64> {
    let d = connected_distances(g)?;
    Ok(degree_pair_sum(g, &d, |deg| deg == k))
}

fn degree_pair_sum(g: &Graph, d: &DistanceMatrix, keep: impl Fn(usize) -> bool) -> u64 {
    let selected: Vec<usize> = (0..g.n()).filter(|&v| keep(g.degree(v))).collect();
    let mut total = 0u64;
    for (i, &u) in selected.iter().enumerate() {
        for &v in &selected[i + 1..] {
            total += u64::from(d.get(u, v));
        }
    }
    total
}

/// First Zagreb index, the sum of squared degrees.
pub fn zagreb_m1(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d * d) as u64).sum()
}

/// Second Zagreb index, the sum over edges of endpoint degree products.
pub fn zagreb_m2(g: &Graph) -> u64 {
    g.edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) * g.degree(v)) as u64)
        .sum()
}

/// Number of unordered pairs at distance at most `k`.
pub fn wk_star(g: &Graph, k: usize) -> Result<u64> {
    check_k(k)?;
    let d = connected_distances(g)?;
    Ok(d.pairs().filter(|&(_, _, x)| x as usize <= k).count() as u64)
}

/// Sum of distances over unordered pairs whose degrees are both at most `k`.
pub fn twk_star(g: &Graph, k: usize) -> Result<u64> {
    check_k(k)?;
    let d = connected_distances(g)?;
    Ok(degree_pair_sum(g, &d, |deg| deg <= k))
}

/// All indices of one graph, as emitted by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    #[serde(rename = "W")]
    pub wiener: u64,
    #[serde(rename = "Wk")]
    pub wk: Vec<u64>,
    /// Keyed by every degree that occurs in the graph.
    #[serde(rename = "TWk")]
    pub twk: BTreeMap<usize, u64>,
    #[serde(rename = "M1")]
    pub m1: u64,
    #[serde(rename = "M2")]
    pub m2: u64,
    #[serde(rename = "Wk_star", skip_serializing_if = "Option::is_none")]
    pub wk_star: Option<u64>,
    #[serde(rename = "TWk_star", skip_serializing_if = "Option::is_none")]
    pub twk_star: Option<u64>,
}

/// Computes the full report from one distance matrix. The cumulative values
/// are filled in only when `k` is given.
pub fn index_report(g: &Graph, k: Option<usize>) -> Result<IndexReport> {
    if let Some(k) = k {
        check_k(k)?;
    }
    let d = connected_distances(g)?;
    let poly = polynomial_from(&d);
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    degrees.dedup();
    let twk = degrees
        .into_iter()
        .map(|deg| (deg, degree_pair_sum(g, &d, |x| x == deg)))
        .collect();
    Ok(IndexReport {
        wiener: poly.wiener(),
        wk_star: k.map(|k| poly.coeffs.iter().skip(1).take(k).sum()),
        twk_star: k.map(|k| degree_pair_sum(g, &d, |x| x <= k)),
        wk: poly.coeffs,
        twk,
        m1: zagreb_m1(g),
        m2: zagreb_m2(g),
    })
}
