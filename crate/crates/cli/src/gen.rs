use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Map, Value};

use wiener_core::benzenoid::{gen_coronene, tw3_coronene_formula};
use wiener_core::extremal::{cross_group_pairs, twk_caterpillar_formula, TreeSpec};
use wiener_core::graph::{cycle, hypercube};
use wiener_core::Graph;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Star,
    DoubleBroom,
    StarlikeBroom,
    Caterpillar,
    Coronene,
    Hypercube,
    Cycle,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Order (path, star, cycle, caterpillar).
    #[arg(long)]
    n: Option<usize>,
    /// Distance for brooms, ring count for coronene.
    #[arg(long)]
    k: Option<usize>,
    /// Pendant-vertex degree for caterpillar.
    #[arg(long)]
    kdeg: Option<usize>,
    /// Number of degree-kdeg vertices for caterpillar.
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    a1: Option<usize>,
    #[arg(long)]
    a2: Option<usize>,
    /// Comma-separated leaf counts for starlike broom.
    #[arg(long, value_delimiter = ',')]
    groups: Option<Vec<usize>>,
    /// Hypercube dimension.
    #[arg(long)]
    d: Option<u32>,
    /// Output file; `-` or absent writes the edge list to stdout and the summary to stderr.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub struct Generated {
    pub edge_list: String,
    pub summary: Map<String, Value>,
    pub out: Option<PathBuf>,
}

fn need<T: Clone>(v: &Option<T>, flag: &str, family: &str) -> CliResult<T> {
    v.clone()
        .ok_or_else(|| CliError::Input(format!("--{flag} is required for --family {family}")))
}

fn predicted(index: &str, k: Option<usize>, value: u64) -> Value {
    match k {
        Some(k) => json!({"index": index, "k": k, "value": value}),
        None => json!({"index": index, "value": value}),
    }
}

pub fn run(args: &GenArgs) -> CliResult<Generated> {
    let family = args.family.to_possible_value().expect("no skipped variants");
    let family = family.get_name();
    let (g, params, preds): (Graph, Value, Vec<Value>) = match args.family {
        Family::Path => {
            let n = need(&args.n, "n", family)?;
            let g = TreeSpec::Path { n }.generate()?;
            let w = ((n + 1) * n * n.saturating_sub(1) / 6) as u64;
            (g, json!({"n": n}), vec![predicted("wiener", None, w)])
        }
        Family::Star => {
            let n = need(&args.n, "n", family)?;
            let g = TreeSpec::Star { n }.generate()?;
            let w = (n.saturating_sub(1) * n.saturating_sub(1)) as u64;
            (g, json!({"n": n}), vec![predicted("wiener", None, w)])
        }
        Family::DoubleBroom => {
            let k = need(&args.k, "k", family)?;
            let a1 = need(&args.a1, "a1", family)?;
            let a2 = need(&args.a2, "a2", family)?;
            let g = TreeSpec::DoubleBroom { k, a1, a2 }.generate()?;
            let params = json!({"k": k, "a1": a1, "a2": a2});
            (g, params, vec![predicted("wk", Some(k), (a1 * a2) as u64)])
        }
        Family::StarlikeBroom => {
            let k = need(&args.k, "k", family)?;
            let groups = need(&args.groups, "groups", family)?;
            let g = TreeSpec::StarlikeBroom { k, groups: groups.clone() }.generate()?;
            let pairs = cross_group_pairs(&groups);
            (g, json!({"k": k, "groups": groups}), vec![predicted("wk", Some(k), pairs)])
        }
        Family::Caterpillar => {
            let n = need(&args.n, "n", family)?;
            let kdeg = need(&args.kdeg, "kdeg", family)?;
            let p = need(&args.p, "p", family)?;
            let g = TreeSpec::Caterpillar { n, k: kdeg, p }.generate()?;
            let tw = twk_caterpillar_formula(n, kdeg, p)?;
            (g, json!({"n": n, "kdeg": kdeg, "p": p}), vec![predicted("twk", Some(kdeg), tw)])
        }
        Family::Coronene => {
            let k = need(&args.k, "k", family)?;
            let g = gen_coronene(k)?.graph;
            (g, json!({"k": k}), vec![predicted("twk", Some(3), tw3_coronene_formula(k))])
        }
        Family::Hypercube => {
            let d = need(&args.d, "d", family)?;
            if d == 0 || d > 20 {
                return Err(CliError::Input(format!("--d must be in 1..=20, got {d}")));
            }
            let g = hypercube(d)?;
            let w = u64::from(d) << (2 * (d - 1));
            let d_us = d as usize;
            (
                g,
                json!({"d": d}),
                vec![predicted("wiener", None, w), predicted("twk", Some(d_us), w)],
            )
        }
        Family::Cycle => {
            let n = need(&args.n, "n", family)?;
            let g = cycle(n)?;
            let w = (n * (n * n / 4) / 2) as u64;
            (
                g,
                json!({"n": n}),
                vec![predicted("wiener", None, w), predicted("twk", Some(2), w)],
            )
        }
    };

    let out = args.out.clone().filter(|p| p.as_os_str() != "-");
    let mut summary = Map::new();
    summary.insert("family".into(), family.into());
    summary.insert("params".into(), params);
    summary.insert("n".into(), g.n().into());
    summary.insert("m".into(), g.m().into());
    summary.insert("predicted".into(), preds.into());
    summary.insert(
        "out".into(),
        out.as_ref().map_or("-".into(), |p| p.display().to_string()).into(),
    );
    Ok(Generated {
        edge_list: g.to_edge_list(),
        summary,
        out,
    })
}
