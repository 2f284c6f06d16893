//! `krcrystal`: enumeration, operators, promotion and verification suites for
//! `B^{m,i}` from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use krcrystal::promotion::{e0, f0, promote_traced, verify_weak_promotion};
use krcrystal::tableau::{tableau_graph, Tableau};
use krcrystal::{
    build_affine_graph, build_graph, compare_models, enumerate_patterns, enumerate_ssyt,
    jdt_promote, verify_axioms, verify_stembridge, weyl_dimension, Crystal, CrystalGraph,
    CrystalShape, Pattern, PolytopeCrystal, Report, TableauCrystal,
};
use serde_json::Value;

#[derive(Parser)]
#[command(
    name = "krcrystal",
    version,
    about = "Kirillov-Reshetikhin crystals B^{m,i} of affine type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every element of the crystal.
    Enumerate(Common),
    /// Print the crystal graph.
    Graph {
        #[command(flatten)]
        common: Common,
        /// Include the 0-labelled edges.
        #[arg(long)]
        affine: bool,
    },
    /// Apply the promotion operator to the input element.
    Promote {
        #[command(flatten)]
        common: Common,
        /// Also print the column steps (patterns only).
        #[arg(long)]
        trace: bool,
    },
    /// Apply a Kashiwara operator: f0, e0, f<l> or e<l>.
    Apply {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        op: Op,
    },
    /// Run a verification suite; exit status 1 on any violation.
    Verify {
        suite: Suite,
        #[command(flatten)]
        common: Common,
        /// Check the affine graph instead of the classical one (axioms only).
        #[arg(long)]
        affine: bool,
    },
    /// Compare the element count with the Weyl dimension formula.
    Dim(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    i: usize,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Element JSON; "-" reads standard input.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value = "polytope")]
    model: Model,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Polytope,
    Tableau,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Axioms,
    Stembridge,
    Promotion,
    Oracle,
}

#[derive(Clone, Copy, Debug)]
enum Op {
    F(usize),
    E(usize),
}

impl std::str::FromStr for Op {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("operator must be f<l> or e<l>, got {s:?}");
        let (kind, index) = s.split_at_checked(1).ok_or_else(bad)?;
        let l: usize = index.parse().map_err(|_| bad())?;
        match kind {
            "f" => Ok(Op::F(l)),
            "e" => Ok(Op::E(l)),
            _ => Err(bad()),
        }
    }
}

/// Output text and whether verification succeeded.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

type Usage<T> = Result<T, String>;

fn shape(c: &Common) -> Usage<CrystalShape> {
    CrystalShape::new(c.n, c.m, c.i).map_err(|e| e.to_string())
}

fn read_input(path: &str) -> Usage<String> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading standard input: {e}"))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?;
    }
    Ok(text)
}

/// Rows from either a bare array or an object with `rows`; shape fields, if
/// present, must agree with the flags.
fn input_rows(text: &str, shape: CrystalShape) -> Usage<Vec<Vec<i64>>> {
    let value: Value = serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))?;
    let rows = match &value {
        Value::Array(_) => value.clone(),
        Value::Object(map) => {
            for (key, expected) in [
                ("n", shape.n() as u64),
                ("m", u64::from(shape.m())),
                ("i", shape.i() as u64),
            ] {
                if let Some(v) = map.get(key) {
                    if v.as_u64() != Some(expected) {
                        return Err(format!(
                            "input field {key} = {v} disagrees with --{key} {expected}"
                        ));
                    }
                }
            }
            map.get("rows")
                .cloned()
                .ok_or("input object has no \"rows\"")?
        }
        _ => return Err("input must be a JSON array of rows or an object with \"rows\"".into()),
    };
    serde_json::from_value(rows).map_err(|e| format!("rows must be integer arrays: {e}"))
}

fn read_pattern(c: &Common, shape: CrystalShape) -> Usage<Pattern> {
    let rows = input_rows(&read_input(&c.input)?, shape)?;
    Pattern::from_signed_rows(shape, &rows).map_err(|e| e.to_string())
}

fn read_tableau(c: &Common, shape: CrystalShape) -> Usage<Tableau> {
    let rows = input_rows(&read_input(&c.input)?, shape)?;
    let rows = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(u32::try_from)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| "tableau entries must be positive".to_string())?;
    Tableau::new(shape, rows).map_err(|e| e.to_string())
}

fn pattern_out(p: &Pattern, format: Format) -> Usage<String> {
    match format {
        Format::Json => Ok(p.to_json()),
        Format::Text => Ok(p.to_string()),
        Format::Dot => Err("dot output is only available for graph".into()),
    }
}

fn tableau_out(t: &Tableau, format: Format) -> Usage<String> {
    match format {
        Format::Json => Ok(t.to_json()),
        Format::Text => Ok(t.to_string()),
        Format::Dot => Err("dot output is only available for graph".into()),
    }
}

fn list_out<T>(
    items: &[T],
    format: Format,
    json: impl Fn(&T) -> String,
    text: impl Fn(&T) -> String,
) -> Usage<String> {
    match format {
        Format::Json => Ok(format!(
            "[{}]",
            items.iter().map(json).collect::<Vec<_>>().join(",")
        )),
        Format::Text => Ok(items.iter().map(text).collect::<Vec<_>>().join("\n")),
        Format::Dot => Err("dot output is only available for graph".into()),
    }
}

fn graph_out<E: Clone + Eq + std::hash::Hash>(
    g: &CrystalGraph<E>,
    format: Format,
    label: impl Fn(&E) -> String,
    json: impl FnOnce(&CrystalGraph<E>) -> String,
) -> String {
    match format {
        Format::Dot => g.to_dot(label),
        Format::Json => json(g),
        Format::Text => {
            let mut lines: Vec<String> = g
                .vertices()
                .iter()
                .enumerate()
                .map(|(k, v)| format!("{k}: {}", label(v)))
                .collect();
            lines.extend(g.edges().iter().map(|(s, l, t)| format!("{s} -{l}-> {t}")));
            lines.join("\n")
        }
    }
}

fn apply_op<C: Crystal>(model: &C, b: &C::Element, op: Op, n: usize) -> Usage<Option<C::Element>> {
    let l = match op {
        Op::F(l) | Op::E(l) => l,
    };
    if l > n {
        return Err(format!("operator index {l} exceeds n = {n}"));
    }
    Ok(match op {
        Op::F(l) => model.f(b, l),
        Op::E(l) => model.e(b, l),
    })
}

fn report_out(report: &Report) -> Outcome {
    Outcome {
        text: report.to_string(),
        ok: report.is_empty(),
    }
}

fn run(cli: Cli) -> Usage<Outcome> {
    match cli.command {
        Command::Enumerate(c) => {
            let s = shape(&c)?;
            let format = c.format.unwrap_or(Format::Json);
            let text = match c.model {
                Model::Polytope => list_out(
                    &enumerate_patterns(s),
                    format,
                    Pattern::to_json,
                    Pattern::compact,
                )?,
                Model::Tableau => list_out(
                    &enumerate_ssyt(s),
                    format,
                    Tableau::to_json,
                    Tableau::compact,
                )?,
            };
            Ok(Outcome::ok(text))
        }
        Command::Graph { common: c, affine } => {
            let s = shape(&c)?;
            let format = c.format.unwrap_or(Format::Dot);
            let text = match c.model {
                Model::Polytope => {
                    let g = if affine {
                        build_affine_graph(s)
                    } else {
                        let labels: Vec<usize> = (1..=s.n()).collect();
                        build_graph(&PolytopeCrystal::new(s), &labels, &[Pattern::zero(s)])
                    };
                    graph_out(&g, format, Pattern::compact, CrystalGraph::to_json)
                }
                Model::Tableau => graph_out(
                    &tableau_graph(s, affine),
                    format,
                    Tableau::compact,
                    CrystalGraph::to_json,
                ),
            };
            Ok(Outcome::ok(text))
        }
        Command::Promote { common: c, trace } => {
            let s = shape(&c)?;
            let format = c.format.unwrap_or(Format::Json);
            match c.model {
                Model::Polytope => {
                    let p = read_pattern(&c, s)?;
                    let (img, steps) = promote_traced(&p).map_err(|e| e.to_string())?;
                    let mut text = pattern_out(&img, format)?;
                    if trace && !steps.steps.is_empty() {
                        text.push('\n');
                        text.push_str(&steps.to_string());
                    }
                    Ok(Outcome::ok(text))
                }
                Model::Tableau => {
                    if trace {
                        return Err("--trace is only available for patterns".into());
                    }
                    let t = read_tableau(&c, s)?;
                    Ok(Outcome::ok(tableau_out(&jdt_promote(&t, s.n()), format)?))
                }
            }
        }
        Command::Apply { common: c, op } => {
            let s = shape(&c)?;
            let format = c.format.unwrap_or(Format::Json);
            let text = match c.model {
                Model::Polytope => {
                    let p = read_pattern(&c, s)?;
                    let image = match op {
                        Op::F(0) => f0(&p).map_err(|e| e.to_string())?,
                        Op::E(0) => e0(&p).map_err(|e| e.to_string())?,
                        _ => apply_op(&PolytopeCrystal::new(s), &p, op, s.n())?,
                    };
                    match image {
                        Some(q) => pattern_out(&q, format)?,
                        None => "none".into(),
                    }
                }
                Model::Tableau => {
                    let t = read_tableau(&c, s)?;
                    match apply_op(&TableauCrystal::new(s), &t, op, s.n())? {
                        Some(u) => tableau_out(&u, format)?,
                        None => "none".into(),
                    }
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Verify {
            suite,
            common: c,
            affine,
        } => {
            let s = shape(&c)?;
            if c.model == Model::Tableau {
                return Err("verification suites run on the polytope model".into());
            }
            let model = PolytopeCrystal::new(s);
            let classical = || {
                let labels: Vec<usize> = (1..=s.n()).collect();
                build_graph(&model, &labels, &[Pattern::zero(s)])
            };
            let report = match suite {
                Suite::Axioms if affine => verify_axioms(&build_affine_graph(s), &model),
                Suite::Axioms => verify_axioms(&classical(), &model),
                Suite::Stembridge => verify_stembridge(&classical()),
                Suite::Promotion => verify_weak_promotion(s),
                Suite::Oracle => compare_models(s).report,
            };
            Ok(report_out(&report))
        }
        Command::Dim(c) => {
            let s = shape(&c)?;
            let count = enumerate_patterns(s).len() as u64;
            let dim = weyl_dimension(s);
            let ok = count == dim;
            Ok(Outcome {
                text: format!("{count} {dim} {}", if ok { "OK" } else { "MISMATCH" }),
                ok,
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            println!("{}", outcome.text.trim_end());
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
