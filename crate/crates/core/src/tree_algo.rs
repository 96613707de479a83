//! Linear-time counting of vertex pairs at distance `k` in a tree.
//!
//! A [`DistTable`] stores, for every vertex `v`, how many vertices of the
//! subtree under `v` lie at depth `0, 1, ..., k` below it. Every path of
//! length `k` has a unique topmost vertex, so the pairs can be counted at
//! that vertex: either one end is the topmost vertex itself, or the two ends
//! hang below two different children.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{zagreb_m1, zagreb_m2};

/// Parent value of the root.
pub const NO_PARENT: usize = usize::MAX;

/// A tree together with a root and its parent links.
#[derive(Debug, Clone)]
pub struct RootedTree<'g> {
    tree: &'g Graph,
    root: usize,
    parent: Vec<usize>,
    /// Preorder; every vertex appears after its parent.
    order: Vec<usize>,
}

impl<'g> RootedTree<'g> {
    pub fn new(tree: &'g Graph, root: usize) -> Result<Self> {
        if !tree.is_tree() {
            return Err(Error::NotATree);
        }
        if root >= tree.n() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: tree.n(),
            });
        }
        let n = tree.n();
        let mut parent = vec![NO_PARENT; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for &u in tree.neighbors(v) {
                if parent[u] == NO_PARENT && u != root {
                    parent[u] = v;
                    stack.push(u);
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        Ok(RootedTree {
            tree,
            root,
            parent,
            order,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let p = self.parent[v];
        self.tree.neighbors(v).iter().copied().filter(move |&u| u != p)
    }
}

/// Per-vertex counts of subtree vertices at depth `0..=k` below the vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistTable {
    k: usize,
    a: Vec<u64>,
}

impl DistTable {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Counts for vertex `v`, indexed by depth.
    pub fn row(&self, v: usize) -> &[u64] {
        let w = self.k + 1;
        &self.a[v * w..(v + 1) * w]
    }
}

/// Fills the table bottom-up: `a[v][i + 1] += a[u][i]` over the children `u`
/// of `v`. Vertices are visited in reverse preorder so no recursion is used.
pub fn build_dist_table(t: &RootedTree<'_>, k: usize) -> Result<DistTable> {
    if k == 0 {
        return Err(Error::OutOfRange("distance k must be at least 1".into()));
    }
    let w = k + 1;
    let mut a = vec![0u64; t.tree.n() * w];
    for &v in t.order.iter().rev() {
        a[v * w] = 1;
        let p = t.parent[v];
        if p != NO_PARENT {
            for i in 0..k {
                a[p * w + i + 1] += a[v * w + i];
            }
        }
    }
    Ok(DistTable { k, a })
}

/// Sum over all vertices of the pair contributions, in which every unordered
/// pair at distance `k` is counted twice.
pub fn gwp_doubled(t: &RootedTree<'_>, table: &DistTable) -> u64 {
    let k = table.k;
    let mut acc = 0u64;
    for v in 0..t.tree.n() {
        let av = table.row(v);
        acc += 2 * av[k];
        if k < 2 {
            continue;
        }
        for u in t.children(v) {
            let au = table.row(u);
            for i in 0..=k - 2 {
                // vertices at depth k-1-i below v outside the subtree of u
                let outside = av[k - 1 - i] - au[k - 2 - i];
                acc += au[i] * outside;
            }
        }
    }
    acc
}

/// Number of unordered vertex pairs at distance exactly `k` in a rooted tree.
pub fn gwp_linear_rooted(t: &RootedTree<'_>, k: usize) -> Result<u64> {
    let table = build_dist_table(t, k)?;
    let doubled = gwp_doubled(t, &table);
    debug_assert!(doubled.is_multiple_of(2));
    Ok(doubled / 2)
}

/// [`gwp_linear_rooted`] with the tree rooted at vertex 0.
pub fn gwp_linear(tree: &Graph, k: usize) -> Result<u64> {
    let t = RootedTree::new(tree, 0)?;
    gwp_linear_rooted(&t, k)
}

/// Distance-3 pair count of a tree from its Zagreb indices: `M2 - M1 + m`.
pub fn wp3_zagreb(tree: &Graph) -> Result<u64> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let value = zagreb_m2(tree) as i128 - zagreb_m1(tree) as i128 + tree.m() as i128;
    Ok(u64::try_from(value).expect("non-negative on trees"))
}

/// Wiener polynomial coefficients of a tree, one linear pass per distance.
pub fn wiener_polynomial_tree(tree: &Graph) -> Result<Vec<u64>> {
    let t = RootedTree::new(tree, 0)?;
    // farthest vertex from any vertex is a diameter endpoint
    let d0 = tree.bfs_distances(0);
    let far = (0..tree.n()).max_by_key(|&v| d0[v]).unwrap_or(0);
    let diam = tree.bfs_distances(far).into_iter().max().unwrap_or(0) as usize;
    let mut coeffs = vec![0u64; diam + 1];
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = gwp_linear_rooted(&t, k)?;
    }
    Ok(coeffs)
}
