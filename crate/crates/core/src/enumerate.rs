//! Exhaustive generation of non-isomorphic free trees.
//!
//! Every free tree has either a unique central vertex or a unique central
//! edge. Rooted at a central vertex, a tree is a multiset of rooted subtrees
//! in which the greatest height occurs at least twice; split at a central
//! edge, it is an unordered pair of rooted trees of equal height. Rooted
//! trees are kept in a catalogue where each isomorphism class appears once,
//! as a non-increasing list of child ids, so both shapes can be listed
//! without duplicates.
//!
//! The catalogue for order `n` holds every rooted tree with fewer than `n`
//! vertices, so generation is bounded at [`MAX_ORDER`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{self, TreeSpec};
use crate::graph::{self, Graph};
use crate::oracle;

/// Largest order accepted by [`all_free_trees`].
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Clone)]
struct RootedShape {
    size: usize,
    height: usize,
    /// Child ids in non-increasing order.
    children: Vec<u32>,
}

/// Every rooted tree with at most `max_size` vertices, grouped by size.
struct Catalogue {
    shapes: Vec<RootedShape>,
    /// `size_end[s]` is one past the last id with size `s`.
    size_end: Vec<usize>,
}

impl Catalogue {
    fn new(max_size: usize) -> Self {
        let mut cat = Catalogue {
            shapes: Vec::new(),
            size_end: vec![0],
        };
        for s in 1..=max_size {
            let mut found = Vec::new();
            cat.multisets(s - 1, u32::MAX, &mut Vec::new(), &mut |c| found.push(c.to_vec()));
            for children in found {
                let height = children
                    .iter()
                    .map(|&c| cat.shapes[c as usize].height + 1)
                    .max()
                    .unwrap_or(0);
                cat.shapes.push(RootedShape {
                    size: s,
                    height,
                    children,
                });
            }
            cat.size_end.push(cat.shapes.len());
        }
        cat
    }

    /// Calls `emit` with every non-increasing id list whose sizes sum to `budget`.
    fn multisets(&self, budget: usize, max_id: u32, cur: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
        if budget == 0 {
            emit(cur);
            return;
        }
        let limit = self.size_end[budget.min(self.size_end.len() - 1)];
        let top = (limit as u64).min(max_id as u64 + 1) as u32;
        for id in (0..top).rev() {
            cur.push(id);
            self.multisets(budget - self.shapes[id as usize].size, id, cur, emit);
            cur.pop();
        }
    }

    /// Appends the subtree `id` under `parent` (or as a new root) to `edges`.
    fn expand(&self, id: u32, parent: Option<usize>, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
        let mut stack = vec![(id, parent)];
        while let Some((id, parent)) = stack.pop() {
            let v = *next;
            *next += 1;
            if let Some(p) = parent {
                edges.push((p, v));
            }
            for &c in self.shapes[id as usize].children.iter().rev() {
                stack.push((c, Some(v)));
            }
        }
    }
}

#[derive(Debug, Clone)]
enum FreeShape {
    Central(Vec<u32>),
    Bicentral(u32, u32),
}

/// Stream of one representative per isomorphism class of trees on `n` vertices.
pub struct FreeTrees {
    n: usize,
    catalogue: Catalogue,
    shapes: std::vec::IntoIter<FreeShape>,
}

impl FreeTrees {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of trees still to be yielded.
    pub fn remaining(&self) -> usize {
        self.shapes.len()
    }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let shape = self.shapes.next()?;
        let mut edges = Vec::with_capacity(self.n - 1);
        let mut next = 1;
        let cat = &self.catalogue;
        match shape {
            FreeShape::Central(children) => {
                for c in children {
                    cat.expand(c, Some(0), &mut next, &mut edges);
                }
            }
            FreeShape::Bicentral(a, b) => {
                next = 0;
                cat.expand(a, None, &mut next, &mut edges);
                let other = next;
                cat.expand(b, None, &mut next, &mut edges);
                edges.push((0, other));
            }
        }
        Some(Graph::from_edge_list(self.n, &edges).expect("generated tree is simple"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.shapes.len(), Some(self.shapes.len()))
    }
}

impl ExactSizeIterator for FreeTrees {}

/// All free trees of order `1 <= n <= MAX_ORDER`, in a fixed order.
pub fn all_free_trees(n: usize) -> Result<FreeTrees> {
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    if n == 0 {
        return Err(Error::OutOfRange("order must be at least 1".into()));
    }
    let catalogue = Catalogue::new(n - 1);
    let mut shapes = Vec::new();

    if n == 1 {
        shapes.push(FreeShape::Central(Vec::new()));
    } else {
        catalogue.multisets(n - 1, u32::MAX, &mut Vec::new(), &mut |children| {
            let mut heights: Vec<usize> = children
                .iter()
                .map(|&c| catalogue.shapes[c as usize].height)
                .collect();
            heights.sort_unstable_by(|a, b| b.cmp(a));
            if heights.len() >= 2 && heights[0] == heights[1] {
                shapes.push(FreeShape::Central(children.to_vec()));
            }
        });
        let ids = |size: usize| catalogue.size_end[size - 1]..catalogue.size_end[size];
        for small in 1..=n / 2 {
            for b in ids(n - small) {
                let a_ids = ids(small);
                let a_end = if 2 * small == n { b + 1 } else { a_ids.end };
                for a in a_ids.start..a_end {
                    if catalogue.shapes[a].height == catalogue.shapes[b].height {
                        shapes.push(FreeShape::Bicentral(a as u32, b as u32));
                    }
                }
            }
        }
    }
    Ok(FreeTrees {
        n,
        catalogue,
        shapes: shapes.into_iter(),
    })
}

/// Central vertices of a tree (one or two), found by repeatedly stripping leaves.
pub fn tree_centers(t: &Graph) -> Result<Vec<usize>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let mut deg = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in t.neighbors(v) {
                deg[u] -= 1;
                if deg[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

fn rooted_code(t: &Graph, root: usize) -> String {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in t.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let mut child_codes: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut code = vec![String::new(); n];
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut child_codes[v]);
        kids.sort_unstable();
        let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        s.push('(');
        for k in kids {
            s.push_str(&k);
        }
        s.push(')');
        if v != root {
            child_codes[parent[v]].push(s);
        } else {
            code[v] = s;
        }
    }
    std::mem::take(&mut code[root])
}

/// Parenthesis code of the tree rooted at its centre; for two centres the
/// lexicographically smaller rooting. Two trees are isomorphic exactly when
/// their codes are equal.
pub fn canonical_form(t: &Graph) -> Result<String> {
    let centers = tree_centers(t)?;
    Ok(centers
        .iter()
        .map(|&c| rooted_code(t, c))
        .min()
        .expect("a tree has a centre"))
}

/// Extremal statements checked by scanning every tree of a given order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "claim", content = "k", rename_all = "snake_case")]
pub enum Claim {
    /// Maximum number of pairs at distance `k >= 3`.
    MaxWk(usize),
    /// Maximum degree-3 pair distance sum and its unique maximizer.
    MaxTw3,
    /// Maximum number of degree-`k` vertices.
    MaxDegreeCount(usize),
    /// Star minimizes and path maximizes the Wiener index, uniquely.
    WienerBounds,
    /// Maximum degree-`k` pair distance sum against the best caterpillar.
    MaxTwkCaterpillar(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub claim: Claim,
    pub n: usize,
    pub trees_scanned: usize,
    pub observed_max: u64,
    pub predicted_max: u64,
    /// Canonical forms of every tree attaining the observed maximum.
    pub maximizers: Vec<String>,
    pub unique: bool,
    /// Canonical form of the predicted extremal tree, when the claim names one.
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed_min: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_min: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimizers: Option<Vec<String>>,
    /// One line per failed check; empty on success.
    pub failures: Vec<String>,
    pub pass: bool,
}

fn extremes(values: &[(u64, String)], pick_max: bool) -> (u64, Vec<String>) {
    let best = if pick_max {
        values.iter().map(|v| v.0).max()
    } else {
        values.iter().map(|v| v.0).min()
    }
    .unwrap_or(0);
    let mut who: Vec<String> = values
        .iter()
        .filter(|v| v.0 == best)
        .map(|v| v.1.clone())
        .collect();
    who.sort();
    (best, who)
}

/// Scans every tree on `n` vertices, evaluates the index behind `claim`
/// with the brute-force oracle and compares against the closed form.
pub fn verify_extremal(n: usize, claim: Claim) -> Result<ExtremalReport> {
    let index: Box<dyn Fn(&Graph) -> u64> = match claim {
        Claim::MaxWk(k) => {
            if k < 3 {
                return Err(Error::OutOfRange(format!("max_wk needs k >= 3, got {k}")));
            }
            Box::new(move |t| oracle::wk(t, k).expect("trees are connected"))
        }
        Claim::MaxTw3 => {
            if n <= 4 {
                return Err(Error::OutOfRange(format!("max_tw3 needs n > 4, got {n}")));
            }
            Box::new(|t| oracle::twk(t, 3).expect("trees are connected"))
        }
        Claim::MaxDegreeCount(k) => {
            if k < 2 || n < 2 {
                return Err(Error::OutOfRange(format!(
                    "degree count needs k >= 2 and n >= 2, got k={k}, n={n}"
                )));
            }
            Box::new(move |t| t.degrees().iter().filter(|&&d| d == k).count() as u64)
        }
        Claim::WienerBounds => Box::new(|t| oracle::wiener(t).expect("trees are connected")),
        Claim::MaxTwkCaterpillar(k) => {
            if k < 3 {
                return Err(Error::OutOfRange(format!("caterpillar claim needs k >= 3, got {k}")));
            }
            Box::new(move |t| oracle::twk(t, k).expect("trees are connected"))
        }
    };

    let values: Vec<(u64, String)> = all_free_trees(n)?
        .map(|t| (index(&t), canonical_form(&t).expect("generated tree")))
        .collect();
    let (observed_max, maximizers) = extremes(&values, true);

    let mut failures = Vec::new();
    let mut observed_min = None;
    let mut predicted_min = None;
    let mut minimizers = None;

    let (predicted_max, witness): (u64, Option<TreeSpec>) = match claim {
        Claim::MaxWk(k) if n <= k => (0, None),
        Claim::MaxWk(k) if k % 2 == 1 => {
            let (v, spec) = extremal::max_wk_odd(n, k)?;
            (v, Some(spec))
        }
        Claim::MaxWk(k) => {
            let (v, spec) = extremal::max_wk_even_search(n, k)?;
            (v, Some(spec))
        }
        Claim::MaxTw3 => {
            let (v, spec) = extremal::max_tw3(n)?;
            (v, Some(spec))
        }
        Claim::MaxDegreeCount(k) => (extremal::max_degree_k_count(n, k)? as u64, None),
        Claim::WienerBounds => {
            let (lo, lo_who) = extremes(&values, false);
            let star = canonical_form(&graph::star(n))?;
            let nn = n as u64;
            let expected_lo = (nn - 1) * (nn - 1);
            if lo != expected_lo {
                failures.push(format!("minimum W is {lo}, expected (n-1)^2 = {expected_lo}"));
            }
            if lo_who != [star] {
                failures.push(format!("minimizers are {lo_who:?}, expected the star alone"));
            }
            observed_min = Some(lo);
            predicted_min = Some(expected_lo);
            minimizers = Some(lo_who);
            ((nn + 1) * nn * (nn.saturating_sub(1)) / 6, Some(TreeSpec::Path { n }))
        }
        Claim::MaxTwkCaterpillar(k) => {
            let best = (0..=n)
                .filter_map(|p| {
                    extremal::twk_caterpillar_formula(n, k, p)
                        .ok()
                        .map(|v| (v, TreeSpec::Caterpillar { n, k, p }))
                })
                .max_by_key(|(v, _)| *v);
            match best {
                Some((v, spec)) => (v, Some(spec)),
                None => (0, None),
            }
        }
    };

    let witness = witness.map(|s| canonical_form(&s.generate()?)).transpose()?;
    let unique = maximizers.len() == 1;

    if observed_max != predicted_max {
        failures.push(format!(
            "observed maximum {observed_max}, predicted {predicted_max}"
        ));
    }
    if let Some(w) = &witness {
        if !maximizers.contains(w) {
            failures.push("predicted extremal tree does not attain the maximum".into());
        }
    }
    let needs_unique = matches!(claim, Claim::MaxTw3 | Claim::WienerBounds);
    if needs_unique && !unique {
        failures.push(format!(
            "maximum attained by {} non-isomorphic trees, expected exactly one",
            maximizers.len()
        ));
    }

    Ok(ExtremalReport {
        claim,
        n,
        trees_scanned: values.len(),
        observed_max,
        predicted_max,
        maximizers,
        unique,
        witness,
        observed_min,
        predicted_min,
        minimizers,
        pass: failures.is_empty(),
        failures,
    })
}
