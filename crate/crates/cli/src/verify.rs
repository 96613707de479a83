use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{Map, Value};

use wiener_core::benzenoid::{
    gen_coronene, horizontal_cut_profile, tw3_coronene_cut_sum, tw3_coronene_formula,
    tw3_coronene_third_quintic,
};
use wiener_core::enumerate::{verify_extremal, Claim as Enumerated, ExtremalReport};
use wiener_core::extremal::{
    caterpillar_formula_n_form, caterpillar_formula_s_form, caterpillar_spine, TreeSpec,
};
use wiener_core::graph::{cycle, hypercube};
use wiener_core::oracle;
use wiener_core::partial_cube::twk_cut;
use wiener_core::random::random_tree;
use wiener_core::tree_algo::gwp_linear;
use wiener_core::Graph;

use crate::error::{CliError, CliResult};

pub const DEFAULT_SEED: u64 = 2011;
const MAX_LISTED_FAILURES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClaimArg {
    MaxWk,
    MaxTw3,
    DegreeCount,
    WienerBounds,
    Eq1,
    Coronene,
    CutVsOracle,
    LinearVsOracle,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    claim: ClaimArg,
    /// Tree order for enumeration claims; largest order for eq1 and the random suites.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

struct Check {
    name: String,
    pass: bool,
    detail: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, failures: &[String], summary: String) -> Self {
        let detail = if failures.is_empty() {
            summary
        } else {
            let shown: Vec<&str> = failures.iter().take(MAX_LISTED_FAILURES).map(String::as_str).collect();
            format!("{summary}; {} failures: {}", failures.len(), shown.join("; "))
        };
        Check {
            name: name.into(),
            pass: failures.is_empty(),
            detail: Some(detail),
        }
    }

    fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("name".into(), self.name.clone().into());
        m.insert("pass".into(), self.pass.into());
        if let Some(d) = &self.detail {
            m.insert("detail".into(), d.clone().into());
        }
        Value::Object(m)
    }
}

pub struct Verdict {
    pub report: Map<String, Value>,
    pub pass: bool,
}

fn need(v: Option<usize>, flag: &str, claim: &str) -> CliResult<usize> {
    v.ok_or_else(|| CliError::Input(format!("--{flag} is required for --claim {claim}")))
}

pub fn run(args: &VerifyArgs) -> CliResult<Verdict> {
    let claim = args.claim.to_possible_value().expect("no skipped variants");
    let claim = claim.get_name();
    let mut params = Map::new();
    let mut extra: Option<(String, Value)> = None;

    let checks = match args.claim {
        ClaimArg::MaxWk | ClaimArg::MaxTw3 | ClaimArg::DegreeCount | ClaimArg::WienerBounds => {
            let n = need(args.n, "n", claim)?;
            params.insert("n".into(), n.into());
            if let Some(k) = args.k {
                params.insert("k".into(), k.into());
            }
            let claims = enumeration_claims(args.claim, n, args.k)?;
            if claims.is_empty() {
                return Err(CliError::Input(format!("no {claim} instance for n={n}")));
            }
            let reports = claims
                .par_iter()
                .map(|&c| verify_extremal(n, c))
                .collect::<Result<Vec<ExtremalReport>, _>>()?;
            let checks = reports.iter().map(extremal_check).collect();
            extra = Some(("reports".into(), serde_json::to_value(&reports).expect("serializable")));
            checks
        }
        ClaimArg::Eq1 => {
            let n = args.n.unwrap_or(60);
            params.insert("n".into(), n.into());
            if let Some(k) = args.k {
                params.insert("k".into(), k.into());
            }
            eq1(n, args.k)
        }
        ClaimArg::Coronene => {
            let k = need(args.k, "k", claim)?;
            if !(1..=12).contains(&k) {
                return Err(CliError::Input(format!("--k must be in 1..=12, got {k}")));
            }
            params.insert("k".into(), k.into());
            coronene(k)?
        }
        ClaimArg::CutVsOracle | ClaimArg::LinearVsOracle => {
            let n = args.n.unwrap_or(if args.claim == ClaimArg::CutVsOracle { 40 } else { 100 });
            if n < 2 {
                return Err(CliError::Input(format!("--n must be at least 2, got {n}")));
            }
            params.insert("n".into(), n.into());
            params.insert("trials".into(), args.trials.into());
            params.insert("seed".into(), args.seed.into());
            if args.claim == ClaimArg::CutVsOracle {
                cut_vs_oracle(n, args.trials, args.seed)
            } else {
                linear_vs_oracle(n, args.trials, args.seed)
            }
        }
    };

    let pass = checks.iter().all(|c| c.pass);
    let mut report = Map::new();
    report.insert("claim".into(), claim.into());
    report.insert("params".into(), params.into());
    report.insert("checks".into(), checks.iter().map(Check::to_json).collect());
    report.insert("pass".into(), pass.into());
    if let Some((key, v)) = extra {
        report.insert(key, v);
    }
    Ok(Verdict { report, pass })
}

fn enumeration_claims(claim: ClaimArg, n: usize, k: Option<usize>) -> CliResult<Vec<Enumerated>> {
    let ks = |lo: usize| -> Vec<usize> { k.map_or_else(|| (lo..n).collect(), |k| vec![k]) };
    Ok(match claim {
        ClaimArg::MaxWk => ks(3).into_iter().map(Enumerated::MaxWk).collect(),
        ClaimArg::DegreeCount => ks(2).into_iter().map(Enumerated::MaxDegreeCount).collect(),
        ClaimArg::MaxTw3 => vec![Enumerated::MaxTw3],
        ClaimArg::WienerBounds => vec![Enumerated::WienerBounds],
        _ => unreachable!("not an enumeration claim"),
    })
}

fn extremal_check(r: &ExtremalReport) -> Check {
    let name = match r.claim {
        Enumerated::MaxWk(k) => format!("max_wk n={} k={k}", r.n),
        Enumerated::MaxDegreeCount(k) => format!("degree_count n={} k={k}", r.n),
        Enumerated::MaxTw3 => format!("max_tw3 n={}", r.n),
        Enumerated::WienerBounds => format!("wiener_bounds n={}", r.n),
        Enumerated::MaxTwkCaterpillar(k) => format!("max_twk_caterpillar n={} k={k}", r.n),
    };
    let summary = format!(
        "{} trees, maximum {} (predicted {}), {} maximizer(s)",
        r.trees_scanned,
        r.observed_max,
        r.predicted_max,
        r.maximizers.len()
    );
    Check::new(name, &r.failures, summary)
}

fn eq1(max_n: usize, only_k: Option<usize>) -> Vec<Check> {
    let per_order: Vec<(usize, Vec<String>, Vec<String>)> = (2..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut count = 0;
            let mut form_failures = Vec::new();
            let mut oracle_failures = Vec::new();
            let ks: Vec<usize> = only_k.map_or_else(|| (3..=n).collect(), |k| vec![k]);
            for k in ks {
                for p in 0..=n {
                    let Ok(s) = caterpillar_spine(n, k, p) else { continue };
                    count += 1;
                    let by_s = caterpillar_formula_s_form(s as i128, p as i128);
                    let by_n = caterpillar_formula_n_form(n as i128, k as i128, p as i128);
                    if by_s != by_n {
                        form_failures.push(format!("C({n},{k},{p}): {by_s} vs {by_n}"));
                    }
                    let g = TreeSpec::Caterpillar { n, k, p }.generate().expect("feasible");
                    let actual = oracle::twk(&g, k).expect("tree") as i128;
                    if actual != by_s {
                        oracle_failures.push(format!("C({n},{k},{p}): formula {by_s}, oracle {actual}"));
                    }
                }
            }
            (count, form_failures, oracle_failures)
        })
        .collect();
    let total: usize = per_order.iter().map(|r| r.0).sum();
    let forms: Vec<String> = per_order.iter().flat_map(|r| r.1.clone()).collect();
    let oracle: Vec<String> = per_order.iter().flat_map(|r| r.2.clone()).collect();
    vec![
        Check::new("s_form_equals_n_form", &forms, format!("{total} instances")),
        Check::new("formula_equals_oracle", &oracle, format!("{total} instances")),
    ]
}

fn coronene(k: usize) -> CliResult<Vec<Check>> {
    let h = gen_coronene(k)?;
    let formula = tw3_coronene_formula(k);
    let cut = twk_cut(&h.graph, 3)?;
    let brute = oracle::twk(&h.graph, 3)?;
    let fail_if = |ok: bool, msg: String| if ok { vec![] } else { vec![msg] };

    let cut_sum = tw3_coronene_cut_sum(k);
    let third = tw3_coronene_third_quintic(k) * 3;
    let profile = horizontal_cut_profile(&h)?;
    let expected: Vec<(usize, usize)> = (1..=k).map(|i| (i * (2 * k + i), k + 2 * i)).collect();

    Ok(vec![
        Check::new(
            "formula_equals_cut",
            &fail_if(formula == cut, format!("formula {formula}, cut {cut}")),
            format!("TW_3 = {formula}"),
        ),
        Check::new(
            "cut_equals_oracle",
            &fail_if(cut == brute, format!("cut {cut}, oracle {brute}")),
            format!("TW_3 = {cut}"),
        ),
        Check::new(
            "cut_sum_closed_form",
            &fail_if(cut_sum == formula, format!("cut sum {cut_sum}, formula {formula}")),
            format!("{cut_sum}"),
        ),
        Check::new(
            "quintic_third",
            &fail_if(
                third == (formula as i128).into(),
                format!("3 x quintic {third}, formula {formula}"),
            ),
            format!("{third}"),
        ),
        Check::new(
            "cut_profile",
            &fail_if(profile == expected, format!("profile {profile:?}, closed forms {expected:?}")),
            format!("{} cuts above the middle", profile.len()),
        ),
    ])
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// The tree with a second copy joined vertex by vertex: a partial cube with cycles.
fn prism(t: &Graph) -> Graph {
    let n = t.n();
    let mut edges = Vec::with_capacity(2 * t.m() + n);
    for (u, v) in t.edges() {
        edges.push((u, v));
        edges.push((u + n, v + n));
    }
    edges.extend((0..n).map(|v| (v, v + n)));
    Graph::from_edge_list(2 * n, &edges).expect("simple")
}

fn compare_cut(name: &str, g: &Graph) -> Vec<String> {
    let max_deg = g.degrees().into_iter().max().unwrap_or(0);
    (1..=max_deg + 1)
        .filter_map(|k| {
            let cut = twk_cut(g, k);
            let brute = oracle::twk(g, k);
            match (cut, brute) {
                (Ok(a), Ok(b)) if a == b => None,
                (a, b) => Some(format!("{name} k={k}: cut {a:?}, oracle {b:?}")),
            }
        })
        .collect()
}

fn cut_vs_oracle(max_n: usize, trials: usize, seed: u64) -> Vec<Check> {
    let random: Vec<String> = (0..trials)
        .into_par_iter()
        .flat_map_iter(|trial| {
            let mut rng = trial_rng(seed, trial);
            let n = rng.gen_range(2..=max_n);
            let t = random_tree(n, &mut rng);
            let g = if rng.gen_bool(0.5) { prism(&t) } else { t };
            compare_cut(&format!("trial {trial}"), &g)
        })
        .collect();

    let mut fixed: Vec<(String, Graph)> = Vec::new();
    for n in (4..=40).step_by(2) {
        fixed.push((format!("C_{n}"), cycle(n).expect("n >= 3")));
    }
    for d in 1..=6 {
        fixed.push((format!("Q_{d}"), hypercube(d).expect("small d")));
    }
    for k in 1..=4 {
        fixed.push((format!("H_{k}"), gen_coronene(k).expect("k >= 1").graph));
    }
    let families: Vec<String> = fixed
        .par_iter()
        .flat_map_iter(|(name, g)| compare_cut(name, g))
        .collect();

    vec![
        Check::new("random_trees_and_prisms", &random, format!("{trials} graphs")),
        Check::new("cycles_hypercubes_coronenes", &families, format!("{} graphs", fixed.len())),
    ]
}

fn linear_vs_oracle(max_n: usize, trials: usize, seed: u64) -> Vec<Check> {
    let failures: Vec<String> = (0..trials)
        .into_par_iter()
        .flat_map_iter(|trial| {
            let mut rng = trial_rng(seed, trial);
            let n = rng.gen_range(2..=max_n);
            let t = random_tree(n, &mut rng);
            (1..=10)
                .filter_map(|k| {
                    let fast = gwp_linear(&t, k).expect("tree");
                    let brute = oracle::wk(&t, k).expect("tree");
                    (fast != brute).then(|| format!("trial {trial} n={n} k={k}: linear {fast}, oracle {brute}"))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    vec![Check::new(
        "linear_equals_oracle",
        &failures,
        format!("{trials} trees, k = 1..10"),
    )]
}

