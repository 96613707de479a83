use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Map, Value};

use wiener_core::partial_cube::{is_partial_cube, theta_classes, twk_from_partition, PartialCubeVerdict};
use wiener_core::{oracle, tree_algo, Graph};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Index {
    Wk,
    Twk,
    Wiener,
    Poly,
    Zagreb,
    WkStar,
    TwkStar,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Linear,
    Cut,
    Auto,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Edge-list file.
    #[arg(long, group = "source", required = true)]
    input: Option<PathBuf>,
    /// Read the edge list from standard input.
    #[arg(long, group = "source")]
    stdin: bool,
    #[arg(long, value_enum, default_value = "all")]
    index: Index,
    /// Distance or degree parameter.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "auto")]
    method: Method,
}

impl Index {
    fn name(self) -> &'static str {
        match self {
            Index::Wk => "wk",
            Index::Twk => "twk",
            Index::Wiener => "wiener",
            Index::Poly => "poly",
            Index::Zagreb => "zagreb",
            Index::WkStar => "wk_star",
            Index::TwkStar => "twk_star",
            Index::All => "all",
        }
    }

    fn by_linear(self) -> bool {
        matches!(self, Index::Wk | Index::WkStar | Index::Poly | Index::Wiener)
    }

    fn by_cut(self) -> bool {
        matches!(self, Index::Twk | Index::Wiener)
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Oracle => "oracle",
        Method::Linear => "linear",
        Method::Cut => "cut",
        Method::Auto => "auto",
    }
}

fn read_graph(args: &ComputeArgs) -> CliResult<Graph> {
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(Graph::parse_edge_list(&text)?)
}

fn require_k(index: Index, k: Option<usize>) -> CliResult<usize> {
    k.ok_or_else(|| CliError::Input(format!("--k is required for --index {}", index.name())))
}

pub fn run(args: &ComputeArgs) -> CliResult<Map<String, Value>> {
    let g = read_graph(args)?;
    if !g.is_connected() {
        return Err(CliError::Disconnected);
    }
    if let Some(0) = args.k {
        return Err(CliError::Input("--k must be at least 1".into()));
    }

    let method = match args.method {
        Method::Auto if args.index.by_linear() && g.is_tree() => Method::Linear,
        Method::Auto if args.index == Index::Twk && is_partial_cube(&g).is_accepted() => Method::Cut,
        Method::Auto => Method::Oracle,
        m => m,
    };

    let mut out = Map::new();
    out.insert("n".into(), g.n().into());
    out.insert("m".into(), g.m().into());
    out.insert("index".into(), args.index.name().into());
    out.insert("method".into(), method_name(method).into());
    if let Some(k) = args.k {
        out.insert("k".into(), k.into());
    }

    let values = match method {
        Method::Linear => linear(&g, args.index, args.k)?,
        Method::Cut => cut(&g, args.index, args.k)?,
        _ => by_oracle(&g, args.index, args.k)?,
    };
    out.extend(values);
    Ok(out)
}

fn single(index: Index, v: impl Into<Value>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert(index.name().into(), v.into());
    m
}

fn linear(g: &Graph, index: Index, k: Option<usize>) -> CliResult<Map<String, Value>> {
    if !g.is_tree() {
        return Err(CliError::Precondition(format!(
            "NotATree: linear method needs a tree, got {} vertices and {} edges",
            g.n(),
            g.m()
        )));
    }
    if !index.by_linear() {
        return Err(CliError::Input(format!(
            "method linear does not compute --index {}",
            index.name()
        )));
    }
    Ok(match index {
        Index::Wk => single(index, tree_algo::gwp_linear(g, require_k(index, k)?)?),
        Index::WkStar => {
            let k = require_k(index, k)?;
            let mut total = 0;
            for j in 1..=k {
                total += tree_algo::gwp_linear(g, j)?;
            }
            single(index, total)
        }
        Index::Poly => single(index, tree_algo::wiener_polynomial_tree(g)?),
        _ => {
            let poly = tree_algo::wiener_polynomial_tree(g)?;
            let w: u64 = poly.iter().enumerate().map(|(d, &c)| d as u64 * c).sum();
            single(index, w)
        }
    })
}

fn cut(g: &Graph, index: Index, k: Option<usize>) -> CliResult<Map<String, Value>> {
    if let PartialCubeVerdict::Rejected(reason) = is_partial_cube(g) {
        return Err(CliError::Precondition(format!("NotPartialCube: {reason}")));
    }
    if !index.by_cut() {
        return Err(CliError::Input(format!(
            "method cut does not compute --index {}",
            index.name()
        )));
    }
    let p = theta_classes(g)?;
    Ok(match (index, k) {
        (Index::Twk, Some(k)) => single(index, twk_from_partition(g, &p, k)),
        (Index::Twk, None) => {
            let degrees: std::collections::BTreeSet<usize> = g.degrees().into_iter().collect();
            let map: BTreeMap<String, u64> = degrees
                .into_iter()
                .map(|d| (d.to_string(), twk_from_partition(g, &p, d)))
                .collect();
            single(index, json!(map))
        }
        _ => {
            let w: u64 = p
                .classes
                .iter()
                .map(|c| (c.side0.len() * c.side1.len()) as u64)
                .sum();
            single(index, w)
        }
    })
}

fn by_oracle(g: &Graph, index: Index, k: Option<usize>) -> CliResult<Map<String, Value>> {
    Ok(match index {
        Index::Wk => single(index, oracle::wk(g, require_k(index, k)?)?),
        Index::Twk => match k {
            Some(k) => single(index, oracle::twk(g, k)?),
            None => {
                let report = oracle::index_report(g, None)?;
                let map: BTreeMap<String, u64> =
                    report.twk.iter().map(|(d, v)| (d.to_string(), *v)).collect();
                single(index, json!(map))
            }
        },
        Index::Wiener => single(index, oracle::wiener(g)?),
        Index::Poly => single(index, oracle::wiener_polynomial(g)?.coeffs),
        Index::Zagreb => single(
            index,
            json!({"M1": oracle::zagreb_m1(g), "M2": oracle::zagreb_m2(g)}),
        ),
        Index::WkStar => single(index, oracle::wk_star(g, require_k(index, k)?)?),
        Index::TwkStar => single(index, oracle::twk_star(g, require_k(index, k)?)?),
        Index::All => match serde_json::to_value(oracle::index_report(g, k)?) {
            Ok(Value::Object(m)) => m,
            _ => unreachable!("report serializes to an object"),
        },
    })
}
