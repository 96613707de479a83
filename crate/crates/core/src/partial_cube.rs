//! Djoković–Winkler relation, partial-cube recognition and the cut method.
//!
//! Two edges `xy` and `uv` are in relation when
//! `d(x,u) + d(y,v) != d(x,v) + d(y,u)`. Classes are taken as connected
//! components of this relation over the edge set (its transitive closure),
//! which agrees with the relation itself on partial cubes. Each class is a
//! cut: removing it splits a partial cube into two halfspaces, and the
//! halfspace memberships are hypercube coordinates of the vertices.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Why a graph failed partial-cube recognition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum RejectReason {
    Disconnected,
    NotBipartite,
    ClassRemovalNotTwoComponents { class: usize, components: usize },
    EdgeNotCrossing { class: usize, edge: (usize, usize) },
    HammingMismatch { u: usize, v: usize, hamming: u32, distance: u32 },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::Disconnected => write!(f, "graph is disconnected"),
            RejectReason::NotBipartite => write!(f, "graph is not bipartite"),
            RejectReason::ClassRemovalNotTwoComponents { class, components } => write!(
                f,
                "removing theta class {class} leaves {components} components"
            ),
            RejectReason::EdgeNotCrossing { class, edge } => write!(
                f,
                "edge {}-{} of theta class {class} does not join its two halfspaces",
                edge.0, edge.1
            ),
            RejectReason::HammingMismatch {
                u,
                v,
                hamming,
                distance,
            } => write!(
                f,
                "vertices {u} and {v}: coordinate Hamming distance {hamming} != graph distance {distance}"
            ),
        }
    }
}

/// One theta class with its two complementary halfspaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub edges: Vec<(usize, usize)>,
    /// Halfspace containing the lowest-numbered vertex.
    pub side0: Vec<usize>,
    pub side1: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaPartition {
    pub classes: Vec<Cut>,
    /// `in_side1[i][v]` tells which halfspace of class `i` holds `v`.
    #[serde(skip)]
    in_side1: Vec<Vec<bool>>,
}

impl ThetaPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn in_side1(&self, class: usize, v: usize) -> bool {
        self.in_side1[class][v]
    }

    pub fn coordinates(&self, n: usize) -> CubeCoordinates {
        let bits = (0..n)
            .map(|v| self.in_side1.iter().map(|side| side[v]).collect())
            .collect();
        CubeCoordinates { bits }
    }
}

/// Per-vertex binary strings, one position per theta class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeCoordinates {
    bits: Vec<Vec<bool>>,
}

impl CubeCoordinates {
    /// Number of coordinates (theta classes).
    pub fn dimension(&self) -> usize {
        self.bits.first().map_or(0, Vec::len)
    }

    pub fn of(&self, v: usize) -> &[bool] {
        &self.bits[v]
    }

    pub fn hamming(&self, u: usize, v: usize) -> u32 {
        self.bits[u]
            .iter()
            .zip(&self.bits[v])
            .filter(|(a, b)| a != b)
            .count() as u32
    }

    pub fn label(&self, v: usize) -> String {
        self.bits[v].iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartialCubeVerdict {
    Accepted(CubeCoordinates),
    Rejected(RejectReason),
}

impl PartialCubeVerdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, PartialCubeVerdict::Accepted(_))
    }
}

fn in_relation(d: &DistanceMatrix, (x, y): (usize, usize), (u, v): (usize, usize)) -> bool {
    d.get(x, u) + d.get(y, v) != d.get(x, v) + d.get(y, u)
}

fn theta_from(g: &Graph, d: &DistanceMatrix) -> std::result::Result<ThetaPartition, RejectReason> {
    if !d.is_connected() {
        return Err(RejectReason::Disconnected);
    }
    if !g.is_bipartite() {
        return Err(RejectReason::NotBipartite);
    }
    let edges = g.edges();
    let m = edges.len();
    let mut uf = UnionFind::<usize>::new(m);
    for i in 0..m {
        for j in i + 1..m {
            if in_relation(d, edges[i], edges[j]) {
                uf.union(i, j);
            }
        }
    }

    // classes ordered by their lexicographically first edge
    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut class_edges: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut edge_class: HashMap<(usize, usize), usize> = HashMap::with_capacity(m);
    for (i, &e) in edges.iter().enumerate() {
        let next = class_edges.len();
        let c = *class_of_root.entry(uf.find(i)).or_insert(next);
        if c == next {
            class_edges.push(Vec::new());
        }
        class_edges[c].push(e);
        edge_class.insert(e, c);
    }

    let n = g.n();
    let mut classes = Vec::with_capacity(class_edges.len());
    let mut in_side1 = Vec::with_capacity(class_edges.len());
    for (c, cut_edges) in class_edges.into_iter().enumerate() {
        let (comp, count) = components_without(g, |u, v| edge_class[&(u.min(v), u.max(v))] == c);
        if count != 2 {
            return Err(RejectReason::ClassRemovalNotTwoComponents {
                class: c,
                components: count,
            });
        }
        if let Some(&edge) = cut_edges.iter().find(|&&(u, v)| comp[u] == comp[v]) {
            return Err(RejectReason::EdgeNotCrossing { class: c, edge });
        }
        // component 0 is the one discovered from vertex 0
        let side1: Vec<bool> = comp.iter().map(|&x| x == 1).collect();
        classes.push(Cut {
            edges: cut_edges,
            side0: (0..n).filter(|&v| !side1[v]).collect(),
            side1: (0..n).filter(|&v| side1[v]).collect(),
        });
        in_side1.push(side1);
    }
    Ok(ThetaPartition { classes, in_side1 })
}

/// Component labels (numbered in order of their lowest vertex) after dropping
/// the edges selected by `removed`.
fn components_without(g: &Graph, removed: impl Fn(usize, usize) -> bool) -> (Vec<usize>, usize) {
    let mut comp = vec![usize::MAX; g.n()];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if comp[u] == usize::MAX && !removed(v, u) {
                    comp[u] = count;
                    queue.push_back(u);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}

fn reason_to_error(r: RejectReason) -> Error {
    match r {
        RejectReason::Disconnected => Error::Disconnected,
        RejectReason::NotBipartite => Error::NotBipartite,
        RejectReason::ClassRemovalNotTwoComponents { class, components } => {
            Error::ClassRemovalNotTwoComponents { class, components }
        }
        other => Error::NotPartialCube(other),
    }
}

/// Theta classes of a connected bipartite graph and their halfspaces.
///
/// Uses all-pairs distances and tests every pair of edges, so the cost is
/// `O(m^2)` time and `O(n^2)` memory.
pub fn theta_classes(g: &Graph) -> Result<ThetaPartition> {
    theta_from(g, &g.all_pairs_distances()).map_err(reason_to_error)
}

/// Full recognition: bipartite, every class is a two-sided cut, and the
/// resulting coordinates reproduce every graph distance as a Hamming distance.
pub fn is_partial_cube(g: &Graph) -> PartialCubeVerdict {
    let d = g.all_pairs_distances();
    match theta_from(g, &d) {
        Err(r) => PartialCubeVerdict::Rejected(r),
        Ok(p) => {
            let coords = p.coordinates(g.n());
            for (u, v, distance) in d.pairs() {
                let hamming = coords.hamming(u, v);
                if hamming != distance {
                    return PartialCubeVerdict::Rejected(RejectReason::HammingMismatch {
                        u,
                        v,
                        hamming,
                        distance,
                    });
                }
            }
            PartialCubeVerdict::Accepted(coords)
        }
    }
}

/// For each class, the number of degree-`k` vertices on side 0 and side 1.
pub fn halfspace_degree_counts(g: &Graph, p: &ThetaPartition, k: usize) -> Vec<(u64, u64)> {
    let count = |side: &[usize]| side.iter().filter(|&&v| g.degree(v) == k).count() as u64;
    p.classes
        .iter()
        .map(|c| (count(&c.side0), count(&c.side1)))
        .collect()
}

/// Cut-method sum over an already verified partition.
pub fn twk_from_partition(g: &Graph, p: &ThetaPartition, k: usize) -> u64 {
    halfspace_degree_counts(g, p, k)
        .into_iter()
        .map(|(a, b)| a * b)
        .sum()
}

/// Sum of distances between degree-`k` vertices of a partial cube, computed
/// from halfspace counts alone. Inputs that fail recognition are refused.
pub fn twk_cut(g: &Graph, k: usize) -> Result<u64> {
    let d = g.all_pairs_distances();
    let p = theta_from(g, &d).map_err(|r| match r {
        RejectReason::Disconnected => Error::Disconnected,
        other => Error::NotPartialCube(other),
    })?;
    let coords = p.coordinates(g.n());
    if let Some((u, v, distance)) = d.pairs().find(|&(u, v, x)| coords.hamming(u, v) != x) {
        return Err(Error::NotPartialCube(RejectReason::HammingMismatch {
            u,
            v,
            hamming: coords.hamming(u, v),
            distance,
        }));
    }
    Ok(twk_from_partition(g, &p, k))
}
