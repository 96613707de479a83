//! Seeded random trees and graphs for property checks.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Decodes a Prüfer sequence of length `n - 2` into a labelled tree on `n` vertices.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::OutOfRange("tree needs at least one vertex".into()));
    }
    if n == 1 {
        return Ok(Graph::empty(1));
    }
    if seq.len() != n - 2 {
        return Err(Error::OutOfRange(format!(
            "Prüfer sequence for {n} vertices must have length {}",
            n - 2
        )));
    }
    let mut remaining = vec![1usize; n];
    for &x in seq {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
        remaining[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, x));
        remaining[x] -= 1;
        if remaining[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Graph::from_edge_list(n, &edges)
}

/// Uniformly random labelled tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1);
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&seq, n).expect("valid sequence")
}

/// Random spanning tree plus up to `extra` additional distinct edges; always connected.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, extra: usize, rng: &mut R) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges = tree.edges();
    let max_edges = n * (n - 1) / 2;
    let target = (edges.len() + extra).min(max_edges);
    let mut tries = 0;
    while edges.len() < target && tries < 50 * (extra + 1) {
        tries += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || tree.has_edge(u, v) {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Graph::from_edge_list(n, &edges).expect("edges are distinct")
}
