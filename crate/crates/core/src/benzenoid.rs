//! Coronene / circumcoronene series `H_k` on the hexagonal lattice.
//!
//! Hexagons are pointy-topped, so every hexagon has two vertical sides and
//! the cuts crossing those vertical edges run horizontally. Positions use
//! integer lattice units: `x` in steps of `sqrt(3)/2`, `y` in steps of `1/2`.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partial_cube::{theta_classes, ThetaPartition};

/// Corner offsets of a hexagon around its centre, in cyclic order.
const CORNERS: [(i64, i64); 6] = [(0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1)];

#[derive(Debug, Clone)]
pub struct HexSystem {
    pub k: usize,
    pub graph: Graph,
    /// Lattice position of every vertex.
    pub coords: Vec<(i64, i64)>,
}

impl HexSystem {
    /// Planar position with unit bond length.
    pub fn planar(&self, v: usize) -> (f64, f64) {
        let (x, y) = self.coords[v];
        (x as f64 * 3f64.sqrt() / 2.0, y as f64 / 2.0)
    }
}

/// Direction class of a lattice edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeDirection {
    Vertical,
    Rising,
    Falling,
}

fn direction((x1, y1): (i64, i64), (x2, y2): (i64, i64)) -> EdgeDirection {
    let (dx, dy) = (x2 - x1, y2 - y1);
    if dx == 0 {
        EdgeDirection::Vertical
    } else if dx.signum() == dy.signum() {
        EdgeDirection::Rising
    } else {
        EdgeDirection::Falling
    }
}

/// All hexagons within `k - 1` rings of a central one. Vertices are numbered
/// top to bottom, then left to right.
pub fn gen_coronene(k: usize) -> Result<HexSystem> {
    if k == 0 {
        return Err(Error::OutOfRange("ring count must be at least 1".into()));
    }
    let r = k as i64 - 1;
    let mut hexes = Vec::new();
    for q in -r..=r {
        for s in (-r).max(-q - r)..=r.min(-q + r) {
            hexes.push((2 * q + s, 3 * s));
        }
    }

    let corner = |(cx, cy): (i64, i64), i: usize| (cx + CORNERS[i].0, cy + CORNERS[i].1);
    let points: BTreeSet<(i64, i64)> = hexes
        .iter()
        .flat_map(|&c| (0..6).map(move |i| corner(c, i)))
        .map(|(x, y)| (-y, x))
        .collect();
    let coords: Vec<(i64, i64)> = points.into_iter().map(|(ny, x)| (x, -ny)).collect();
    let index: BTreeMap<(i64, i64), usize> =
        coords.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    let mut edges = BTreeSet::new();
    for &c in &hexes {
        for i in 0..6 {
            let a = index[&corner(c, i)];
            let b = index[&corner(c, (i + 1) % 6)];
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    let graph = Graph::from_edge_list(coords.len(), &edges)?;
    Ok(HexSystem { k, graph, coords })
}

/// Theta classes grouped by the common direction of their edges.
pub fn orientation_groups(h: &HexSystem, p: &ThetaPartition) -> Result<BTreeMap<EdgeDirection, Vec<usize>>> {
    let mut groups: BTreeMap<EdgeDirection, Vec<usize>> = BTreeMap::new();
    for (i, cut) in p.classes.iter().enumerate() {
        let mut dirs = cut
            .edges
            .iter()
            .map(|&(u, v)| direction(h.coords[u], h.coords[v]));
        let first = dirs.next().expect("classes are non-empty");
        if dirs.any(|d| d != first) {
            return Err(Error::InfeasibleSpec(format!(
                "theta class {i} mixes edge directions"
            )));
        }
        groups.entry(first).or_default().push(i);
    }
    Ok(groups)
}

/// The horizontal cuts `C_1 .. C_{2k-1}` (classes of vertical edges), top to
/// bottom, each with `(vertices above, degree-2 vertices above)`.
pub fn horizontal_cuts(h: &HexSystem, p: &ThetaPartition) -> Result<Vec<(usize, usize, usize)>> {
    let groups = orientation_groups(h, p)?;
    let vertical = groups.get(&EdgeDirection::Vertical).cloned().unwrap_or_default();
    let mut rows: Vec<(i64, usize)> = vertical
        .into_iter()
        .map(|c| {
            let (u, _) = p.classes[c].edges[0];
            (h.coords[u].1, c)
        })
        .collect();
    rows.sort_unstable_by(|a, b| b.cmp(a));

    let top = (0..h.graph.n())
        .max_by_key(|&v| h.coords[v].1)
        .expect("non-empty");
    Ok(rows
        .into_iter()
        .map(|(_, c)| {
            let cut = &p.classes[c];
            let above = if p.in_side1(c, top) { &cut.side1 } else { &cut.side0 };
            let deg2 = above.iter().filter(|&&v| h.graph.degree(v) == 2).count();
            (c, above.len(), deg2)
        })
        .collect())
}

/// `(above_count, above_degree2_count)` for the cuts `C_1 .. C_k`, read off the
/// actual theta classes of the generated graph.
pub fn horizontal_cut_profile(h: &HexSystem) -> Result<Vec<(usize, usize)>> {
    let p = theta_classes(&h.graph)?;
    let cuts = horizontal_cuts(h, &p)?;
    if cuts.len() != 2 * h.k - 1 {
        return Err(Error::InfeasibleSpec(format!(
            "expected {} horizontal cuts, found {}",
            2 * h.k - 1,
            cuts.len()
        )));
    }
    Ok(cuts.into_iter().take(h.k).map(|(_, a, d)| (a, d)).collect())
}

/// Closed form for the degree-3 pair distance sum of `H_k`:
/// `(k - 1) k (2k - 1) (82k^2 - 82k - 19) / 5`.
pub fn tw3_coronene_formula(k: usize) -> u64 {
    let k = k as i128;
    let num = (k - 1) * k * (2 * k - 1) * (82 * k * k - 82 * k - 19);
    debug_assert_eq!(num % 5, 0);
    u64::try_from(num / 5).expect("non-negative for k >= 1")
}

/// Three times the sum of one orientation group's cut products, using the
/// closed forms for the vertices above each cut.
pub fn tw3_coronene_cut_sum(k: usize) -> u64 {
    let k = k as i128;
    let middle = (3 * k * k - 3 * k).pow(2);
    let sides: i128 = (1..k)
        .map(|i| {
            let above = 2 * k * i + i * i - k - 2 * i;
            let below = 6 * k * k - 6 * k - above;
            above * below
        })
        .sum();
    u64::try_from(3 * (middle + 2 * sides)).expect("non-negative")
}

/// Expanded quintic `164k^5/15 - 82k^4/3 + 58k^3/3 - 5k^2/3 - 19k/15`,
/// equal to one third of the degree-3 pair distance sum.
pub fn tw3_coronene_third_quintic(k: usize) -> Ratio<i128> {
    let k = Ratio::from_integer(k as i128);
    let c = |num: i128, den: i128| Ratio::new(num, den);
    c(164, 15) * k.pow(5) - c(82, 3) * k.pow(4) + c(58, 3) * k.pow(3) - c(5, 3) * k.pow(2)
        - c(19, 15) * k
}
