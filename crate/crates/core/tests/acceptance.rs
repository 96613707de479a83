//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test -p wiener-core --test acceptance -- --nocapture` to see them.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wiener_core::benzenoid::{gen_coronene, horizontal_cut_profile, tw3_coronene_formula};
use wiener_core::enumerate::{all_free_trees, canonical_form, verify_extremal, Claim};
use wiener_core::extremal::{
    caterpillar_formula_n_form, caterpillar_formula_s_form, caterpillar_spine,
    twk_caterpillar_formula, TreeSpec,
};
use wiener_core::graph::{complete_bipartite, cycle, hypercube, path};
use wiener_core::oracle::{twk, wk, zagreb_m1, zagreb_m2};
use wiener_core::partial_cube::{is_partial_cube, twk_cut, PartialCubeVerdict};
use wiener_core::random::random_tree;
use wiener_core::tree_algo::gwp_linear;
use wiener_core::Graph;

const SEED: u64 = 0x5EED_2011;

fn verdict(id: u32, title: &str, failures: &[String], elapsed: Duration) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] AC{id} {title} ({:.2?})", elapsed);
    for f in failures.iter().take(20) {
        println!("        {f}");
    }
    assert!(failures.is_empty(), "AC{id} failed: {} problem(s)", failures.len());
}

fn random_trees(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            random_tree(n, &mut rng)
        })
        .collect()
}

fn present_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d.dedup();
    d
}

#[test]
fn ac1_linear_matches_oracle() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (t, tree) in random_trees(1000, 200, SEED).iter().enumerate() {
        for k in 1..=10 {
            let fast = gwp_linear(tree, k).unwrap();
            let slow = wk(tree, k).unwrap();
            if fast != slow {
                failures.push(format!("tree #{t} (n={}), k={k}: linear {fast} != oracle {slow}", tree.n()));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(30) {
        failures.push(format!("runtime {elapsed:.2?} exceeds 30 s"));
    }
    verdict(1, "linear algorithm = brute force on 1000 random trees, k = 1..10", &failures, elapsed);
}

#[test]
fn ac2_linear_scales_to_long_path() {
    let n = 1_000_000;
    let g = path(n);
    let start = Instant::now();
    let value = gwp_linear(&g, 5).unwrap();
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    if value != (n - 5) as u64 {
        failures.push(format!("got {value}, expected {}", n - 5));
    }
    if elapsed > Duration::from_secs(5) {
        failures.push(format!("runtime {elapsed:.2?} exceeds 5 s"));
    }
    verdict(2, "linear algorithm on P_1000000 with k = 5 returns 999995", &failures, elapsed);
}

#[test]
fn ac3_small_distance_identities() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (t, tree) in random_trees(1000, 200, SEED ^ 3).iter().enumerate() {
        let m = tree.m() as i64;
        let m1 = zagreb_m1(tree) as i64;
        let m2 = zagreb_m2(tree) as i64;
        let w = [1, 2, 3].map(|k| wk(tree, k).unwrap() as i64);
        let expected = [m, m1 / 2 - m, m2 - m1 + m];
        if m1 % 2 != 0 || w != expected {
            failures.push(format!("tree #{t}: W_1..3 = {w:?}, identities give {expected:?}"));
        }
    }
    verdict(3, "W_1 = m, W_2 = M1/2 - m, W_3 = M2 - M1 + m on 1000 random trees", &failures, start.elapsed());
}

fn cut_agrees(name: &str, g: &Graph, failures: &mut Vec<String>) {
    for k in present_degrees(g) {
        match twk_cut(g, k) {
            Ok(v) => {
                let o = twk(g, k).unwrap();
                if v != o {
                    failures.push(format!("{name}, k={k}: cut {v} != oracle {o}"));
                }
            }
            Err(e) => failures.push(format!("{name}: cut method refused: {e}")),
        }
    }
}

#[test]
fn ac4_cut_method_matches_oracle() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (t, tree) in random_trees(200, 200, SEED ^ 4).iter().enumerate() {
        cut_agrees(&format!("random tree #{t}"), tree, &mut failures);
    }
    for n in (4..=40).step_by(2) {
        cut_agrees(&format!("C_{n}"), &cycle(n).unwrap(), &mut failures);
    }
    for d in 1..=6 {
        cut_agrees(&format!("Q_{d}"), &hypercube(d).unwrap(), &mut failures);
    }
    for k in 1..=4 {
        cut_agrees(&format!("H_{k}"), &gen_coronene(k).unwrap().graph, &mut failures);
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        failures.push(format!("runtime {elapsed:.2?} exceeds 60 s"));
    }
    verdict(4, "cut method = brute force on trees, even cycles, hypercubes, coronenes", &failures, elapsed);
}

#[test]
fn ac5_coronene_formula() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for k in 1..=5 {
        let g = gen_coronene(k).unwrap().graph;
        let formula = tw3_coronene_formula(k);
        let cut = twk_cut(&g, 3).unwrap();
        let oracle = twk(&g, 3).unwrap();
        if formula != cut || cut != oracle {
            failures.push(format!("H_{k}: formula {formula}, cut {cut}, oracle {oracle}"));
        }
    }
    for (k, want) in [(1, 0), (2, 174), (3, 2838)] {
        if tw3_coronene_formula(k) != want {
            failures.push(format!("H_{k}: formula gives {}, expected {want}", tw3_coronene_formula(k)));
        }
    }
    for k in 1..=8 {
        let profile = horizontal_cut_profile(&gen_coronene(k).unwrap()).unwrap();
        let expected: Vec<(usize, usize)> = (1..=k).map(|i| (i * (2 * k + i), k + 2 * i)).collect();
        if profile != expected {
            failures.push(format!("H_{k}: cut profile {profile:?}, closed forms {expected:?}"));
        }
    }
    verdict(5, "coronene TW_3 formula = cut = oracle (k <= 5), cut profiles (k <= 8)", &failures, start.elapsed());
}

#[test]
fn ac6_caterpillar_formula() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut instances = 0;
    for n in 2..=60usize {
        for k in 3..=n {
            for p in 0..=n {
                let Ok(s) = caterpillar_spine(n, k, p) else { continue };
                instances += 1;
                let by_s = caterpillar_formula_s_form(s as i128, p as i128);
                let by_n = caterpillar_formula_n_form(n as i128, k as i128, p as i128);
                let g = TreeSpec::Caterpillar { n, k, p }.generate().unwrap();
                let oracle = twk(&g, k).unwrap() as i128;
                if by_s != oracle || by_n != oracle {
                    failures.push(format!("C_({n},{k},{p}): s-form {by_s}, n-form {by_n}, oracle {oracle}"));
                }
            }
        }
    }
    if twk_caterpillar_formula(20, 4, 5).unwrap() != 38 {
        failures.push("C_(20,4,5) does not give 38".into());
    }
    assert!(instances > 1000);
    verdict(6, &format!("caterpillar formula, both forms, {instances} instances with n <= 60"), &failures, start.elapsed());
}

#[test]
fn ac7_extremal_values_by_enumeration() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut check = |n: usize, claim: Claim| {
        let r = verify_extremal(n, claim).unwrap();
        if !r.pass {
            failures.push(format!("n={n} {claim:?}: {}", r.failures.join("; ")));
        }
    };
    for n in 1..=12 {
        check(n, Claim::WienerBounds);
        for k in 3..n {
            check(n, Claim::MaxWk(k));
        }
        for k in 2..n.max(2) {
            check(n, Claim::MaxDegreeCount(k));
        }
        if n > 4 {
            check(n, Claim::MaxTw3);
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        failures.push(format!("runtime {elapsed:.2?} exceeds 5 min"));
    }
    verdict(7, "extremal values by full enumeration, n <= 12", &failures, elapsed);
}

#[test]
fn ac8_enumerator_integrity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    // free trees by order, starting at order 0
    let by_order = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
    for (n, &want) in by_order.iter().enumerate().skip(1) {
        let trees: Vec<Graph> = all_free_trees(n).unwrap().collect();
        if trees.len() != want {
            failures.push(format!("n={n}: {} trees, expected {want}", trees.len()));
        }
        if let Some(t) = trees.iter().find(|t| !t.is_tree() || t.n() != n) {
            failures.push(format!("n={n}: yielded a non-tree {t:?}"));
        }
        if n <= 10 {
            let mut forms: Vec<String> = trees.iter().map(|t| canonical_form(t).unwrap()).collect();
            forms.sort();
            let before = forms.len();
            forms.dedup();
            if forms.len() != before {
                failures.push(format!("n={n}: {} isomorphic duplicates", before - forms.len()));
            }
        }
    }
    verdict(8, "free-tree counts for n = 1..12 and pairwise non-isomorphism (n <= 10)", &failures, start.elapsed());
}

fn accepts(name: &str, g: &Graph, failures: &mut Vec<String>) {
    match is_partial_cube(g) {
        PartialCubeVerdict::Accepted(coords) => {
            let d = g.all_pairs_distances();
            for u in 0..g.n() {
                for v in 0..g.n() {
                    if coords.hamming(u, v) != d.get(u, v) {
                        failures.push(format!("{name}: Hamming({u},{v}) != d({u},{v})"));
                        return;
                    }
                }
            }
        }
        PartialCubeVerdict::Rejected(r) => failures.push(format!("{name}: rejected ({r})")),
    }
}

#[test]
fn ac9_partial_cube_verifier() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for (t, tree) in random_trees(100, 120, SEED ^ 9).iter().enumerate() {
        accepts(&format!("random tree #{t}"), tree, &mut failures);
    }
    for n in 1..=9 {
        for (i, tree) in all_free_trees(n).unwrap().enumerate() {
            accepts(&format!("free tree {i} of order {n}"), &tree, &mut failures);
        }
    }
    for n in (4..=40).step_by(2) {
        accepts(&format!("C_{n}"), &cycle(n).unwrap(), &mut failures);
    }
    for d in 1..=6 {
        accepts(&format!("Q_{d}"), &hypercube(d).unwrap(), &mut failures);
    }
    for k in 1..=4 {
        accepts(&format!("H_{k}"), &gen_coronene(k).unwrap().graph, &mut failures);
    }
    for (name, g) in [("C_5", cycle(5).unwrap()), ("K_{2,3}", complete_bipartite(2, 3))] {
        match is_partial_cube(&g) {
            PartialCubeVerdict::Rejected(r) => println!("        {name} rejected: {r}"),
            PartialCubeVerdict::Accepted(_) => failures.push(format!("{name} accepted")),
        }
    }
    verdict(9, "partial-cube verifier accepts trees/even cycles/hypercubes/H_k, rejects C_5 and K_{2,3}", &failures, start.elapsed());
}
