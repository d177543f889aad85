//! Command-line front end.
//!
//! Exit codes: `0` when a verdict was computed (including negative ones),
//! `2` for usage errors, and `3..=7` for io, parse, validation, cap and
//! internal errors. Errors print one line `error[<kind>]: <message>` on stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::bits::mask_to_string;
use crate::correspondence::{
    graph_from_lattice, graph_from_poset, is_cohen_macaulay, lattice_view, CmReport, LatticeView,
};
use crate::graph::enumerate_minimal_covers;
use crate::toric::{self, TermOrder, ZMonomial};
use crate::{format, BipartiteGraph, CoverFamily, Error, Limits, Poset, Result, SubsetFamily};

#[derive(Debug, Parser)]
#[command(
    name = "coverlattice",
    version,
    about = "Unmixed bipartite graphs, Boolean sublattices and toric ideals of vertex covers"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true, env = "COVERLATTICE_JSON")]
    pub json: bool,
    /// Largest graph (total vertices) accepted by cover enumeration.
    #[arg(
        long,
        global = true,
        default_value_t = 40,
        env = "COVERLATTICE_MAX_VERTICES"
    )]
    pub max_vertices: usize,
    /// Largest poset whose ideal lattice is enumerated.
    #[arg(
        long,
        global = true,
        default_value_t = 20,
        env = "COVERLATTICE_MAX_POSET"
    )]
    pub max_poset: usize,
    /// Largest number of standard monomials visited by the injectivity check.
    #[arg(
        long,
        global = true,
        default_value_t = 1_000_000,
        env = "COVERLATTICE_MAX_STANDARD"
    )]
    pub max_standard: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the minimal vertex covers of a graph.
    Covers { graph: PathBuf },
    /// Decide unmixedness and print the cover lattice.
    Unmixed { graph: PathBuf },
    /// Decide Cohen–Macaulayness and print a poset witness.
    Cm { graph: PathBuf },
    /// Build the unmixed graph of a bounded sublattice.
    FromLattice { lattice: PathBuf },
    /// Build the graph G_P of a poset.
    FromPoset { poset: PathBuf },
    /// Quadratic Gröbner basis of the toric ideal of covers, with certificates.
    Toric {
        graph: PathBuf,
        /// Degree bound for the standard-monomial injectivity check.
        #[arg(long, default_value_t = 3, env = "COVERLATTICE_DEGREE")]
        degree: usize,
    },
    /// Emit a random bounded sublattice of L_n in lattice format.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0, env = "COVERLATTICE_SEED")]
        seed: u64,
        /// Number of random generators before closure.
        #[arg(long, default_value_t = 3)]
        generators: usize,
    },
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits {
            max_vertices: self.max_vertices,
            max_poset_size: self.max_poset,
            max_standard_monomials: self.max_standard,
            ..Limits::default()
        }
    }
}

/// Parses `std::env::args`, runs the command and maps errors to exit codes.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error[{}]: {}", e.kind(), e);
            ExitCode::from(exit_code(&e))
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => 3,
        Error::Parse { .. } => 4,
        Error::Validation(_) => 5,
        Error::CapExceeded { .. } => 6,
        Error::Internal(_) => 7,
    }
}

fn read(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Error::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Runs one command and returns what it prints on stdout.
pub fn run(cli: &Cli) -> Result<String> {
    let limits = cli.limits();
    let value = match &cli.command {
        Command::Covers { graph } => covers_report(&format::parse_graph(&read(graph)?)?, &limits)?,
        Command::Unmixed { graph } => {
            unmixed_report(&format::parse_graph(&read(graph)?)?, &limits)?
        }
        Command::Cm { graph } => cm_report(&format::parse_graph(&read(graph)?)?, &limits)?,
        Command::FromLattice { lattice } => {
            let f = format::parse_lattice(&read(lattice)?)?;
            Report::Graph(graph_from_lattice(&f, &limits)?)
        }
        Command::FromPoset { poset } => {
            Report::Graph(graph_from_poset(&format::parse_poset(&read(poset)?)?))
        }
        Command::Toric { graph, degree } => {
            toric_report(&format::parse_graph(&read(graph)?)?, *degree, &limits)?
        }
        Command::Sample {
            n,
            seed,
            generators,
        } => Report::Lattice(sample_lattice(*n, *seed, *generators)?),
    };
    Ok(if cli.json {
        let mut s = serde_json::to_string_pretty(&value.to_json())
            .map_err(|e| Error::internal(format!("json encoding: {e}")))?;
        s.push('\n');
        s
    } else {
        value.to_text()
    })
}

/// A random bounded sublattice: closure of `generators` random subsets.
pub fn sample_lattice(n: usize, seed: u64, generators: usize) -> Result<SubsetFamily> {
    if n == 0 || n > 16 {
        return Err(Error::validation("sample size must lie in 1..=16"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = crate::bits::full_mask(n);
    let gens: Vec<u64> = (0..generators).map(|_| rng.gen::<u64>() & top).collect();
    SubsetFamily::bounded_closure(n, gens)
}

/// Ordered key/value facts rendered either as `key: value` lines or JSON.
enum Report {
    Facts(Vec<(&'static str, Fact)>),
    Graph(BipartiteGraph),
    Lattice(SubsetFamily),
}

enum Fact {
    Bool(bool),
    Count(usize),
    Text(String),
    /// Space-separated in text, an array in JSON.
    List(Vec<Value>),
    /// Count on the key line, then one text line per item; JSON gets the value as is.
    Block(Vec<String>, Value),
    /// Verbatim text line and an independent JSON rendering of the same fact.
    Custom(String, Value),
}

impl Report {
    fn to_text(&self) -> String {
        match self {
            Report::Graph(g) => format::write_graph(g),
            Report::Lattice(f) => format::write_lattice(f),
            Report::Facts(facts) => {
                let mut out = String::new();
                for (key, fact) in facts {
                    match fact {
                        Fact::Bool(b) => out.push_str(&format!("{key}: {b}\n")),
                        Fact::Count(c) => out.push_str(&format!("{key}: {c}\n")),
                        Fact::Text(t) => out.push_str(&format!("{key}: {t}\n")),
                        Fact::List(items) => {
                            out.push_str(key);
                            out.push(':');
                            for item in items {
                                out.push(' ');
                                match item {
                                    Value::String(s) => out.push_str(s),
                                    other => out.push_str(&other.to_string()),
                                }
                            }
                            out.push('\n');
                        }
                        Fact::Block(lines, _) => {
                            out.push_str(&format!("{key}: {}\n", lines.len()));
                            for l in lines {
                                out.push_str(l);
                                out.push('\n');
                            }
                        }
                        Fact::Custom(line, _) => {
                            out.push_str(line);
                            out.push('\n');
                        }
                    }
                }
                out
            }
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Report::Graph(g) => json!({
                "left_size": g.left_size(),
                "right_size": g.right_size(),
                "edges": g.edges().map(|(i, j)| json!([i + 1, j + 1])).collect::<Vec<_>>(),
            }),
            Report::Lattice(f) => json!({
                "ground_size": f.ground_size(),
                "members": f.member_strings(),
            }),
            Report::Facts(facts) => {
                let mut map = Map::new();
                for (key, fact) in facts {
                    let v = match fact {
                        Fact::Bool(b) => json!(b),
                        Fact::Count(c) => json!(c),
                        Fact::Text(t) => json!(t),
                        Fact::List(items) => Value::Array(items.clone()),
                        Fact::Block(_, v) | Fact::Custom(_, v) => v.clone(),
                    };
                    map.insert(key.replace('-', "_"), v);
                }
                Value::Object(map)
            }
        }
    }
}

fn cover_string(names: Vec<String>) -> String {
    format!("{{{}}}", names.join(","))
}

fn covers_report(g: &BipartiteGraph, limits: &Limits) -> Result<Report> {
    let covers = enumerate_minimal_covers(g, limits)?;
    let names: Vec<Vec<String>> = covers.iter().map(|c| c.vertex_names()).collect();
    Ok(Report::Facts(vec![(
        "covers",
        Fact::Block(
            names.iter().cloned().map(cover_string).collect(),
            json!(names),
        ),
    )]))
}

fn relabeling_fact(view: &LatticeView) -> Fact {
    Fact::List(
        view.relabeling
            .sigma()
            .iter()
            .map(|s| json!(s + 1))
            .collect(),
    )
}

fn lattice_fact(f: &SubsetFamily) -> Fact {
    Fact::List(f.member_strings().into_iter().map(Value::String).collect())
}

fn mixed_reason(g: &BipartiteGraph, limits: &Limits) -> Result<String> {
    let covers = enumerate_minimal_covers(g, limits)?;
    let (lo, hi) = covers.size_range().unwrap_or((0, 0));
    Ok(format!("minimal cover sizes range over {lo}..{hi}"))
}

fn unmixed_report(g: &BipartiteGraph, limits: &Limits) -> Result<Report> {
    let facts = match lattice_view(g, limits)? {
        Some(view) => vec![
            ("unmixed", Fact::Bool(true)),
            ("relabeling", relabeling_fact(&view)),
            ("lattice", lattice_fact(&view.lattice)),
        ],
        None => vec![
            ("unmixed", Fact::Bool(false)),
            ("reason", Fact::Text(mixed_reason(g, limits)?)),
        ],
    };
    Ok(Report::Facts(facts))
}

/// Strict relations: `poset: 2<=1` in text, `[[2, 1]]` in JSON.
fn poset_fact(p: &Poset) -> Fact {
    let relations = p.strict_relations();
    let mut line = String::from("poset:");
    for (i, j) in &relations {
        line.push_str(&format!(" {}<={}", i + 1, j + 1));
    }
    let pairs: Vec<[usize; 2]> = relations.iter().map(|&(i, j)| [i + 1, j + 1]).collect();
    Fact::Custom(line, json!(pairs))
}

fn cm_report(g: &BipartiteGraph, limits: &Limits) -> Result<Report> {
    let report: CmReport = is_cohen_macaulay(g, limits)?;
    let mut facts = vec![
        ("unmixed", Fact::Bool(report.is_unmixed())),
        ("cm", Fact::Bool(report.is_cohen_macaulay())),
    ];
    if let Some(reason) = report.reason() {
        facts.push(("reason", Fact::Text(reason)));
    }
    if let Some(view) = &report.view {
        facts.push(("relabeling", relabeling_fact(view)));
        facts.push(("lattice", lattice_fact(&view.lattice)));
    }
    if let Some(p) = report.witness() {
        facts.push(("poset", poset_fact(p)));
    }
    Ok(Report::Facts(facts))
}

fn z_name(covers: &CoverFamily, var: usize) -> String {
    mask_to_string(covers.covers()[var].x_mask, covers.left_size())
}

/// `z[10] z[01]`, variables in ascending rank.
fn monomial_text(m: &ZMonomial, covers: &CoverFamily, order: &TermOrder) -> String {
    let mut vars: Vec<usize> = m.variables().collect();
    vars.sort_by_key(|&v| order.rank(v));
    vars.iter()
        .map(|&v| format!("z[{}]", z_name(covers, v)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn monomial_json(m: &ZMonomial, covers: &CoverFamily) -> Value {
    let map: Map<String, Value> = m
        .terms()
        .iter()
        .map(|&(v, e)| (z_name(covers, v), json!(e)))
        .collect();
    Value::Object(map)
}

/// `key: ok` / `key: fail` in text, a boolean in JSON.
fn ok(key: &str, b: bool) -> Fact {
    Fact::Custom(
        format!("{key}: {}", if b { "ok" } else { "fail" }),
        json!(b),
    )
}

fn toric_report(g: &BipartiteGraph, degree: usize, limits: &Limits) -> Result<Report> {
    let view = lattice_view(g, limits)?.ok_or_else(|| Error::validation("graph is not unmixed"))?;
    let covers = &view.covers;
    let analysis = toric::analyze(covers, degree, limits)?;
    let order = &analysis.order;
    let binomial_lines: Vec<String> = analysis
        .basis
        .iter()
        .map(|b| {
            format!(
                "{} - {}",
                monomial_text(&b.plus, covers, order),
                monomial_text(&b.minus, covers, order)
            )
        })
        .collect();
    let binomial_json: Vec<Value> = analysis
        .basis
        .iter()
        .map(|b| json!({"plus": monomial_json(&b.plus, covers), "minus": monomial_json(&b.minus, covers)}))
        .collect();
    let order_names: Vec<String> = order.ranking().iter().map(|&v| z_name(covers, v)).collect();
    let mut facts = vec![
        ("covers", Fact::Count(covers.len())),
        ("relabeling", relabeling_fact(&view)),
        (
            "order",
            Fact::Custom(
                format!(
                    "order: {}",
                    order_names
                        .iter()
                        .map(|s| format!("z[{s}]"))
                        .collect::<Vec<_>>()
                        .join(" < ")
                ),
                json!(order_names),
            ),
        ),
        ("basis", Fact::Block(binomial_lines, json!(binomial_json))),
        ("buchberger", ok("buchberger", analysis.buchberger)),
        (
            "squarefree-quadratic",
            ok("squarefree-quadratic", analysis.squarefree_quadratic),
        ),
        (
            "injectivity",
            Fact::Custom(
                format!(
                    "injectivity(d={degree}): {}",
                    if analysis.injectivity { "ok" } else { "fail" }
                ),
                json!({"degree": degree, "ok": analysis.injectivity}),
            ),
        ),
    ];
    if let Some(reduced) = &analysis.reduced_basis {
        facts.push(("reduced-basis", Fact::Count(reduced.len())));
    }
    Ok(Report::Facts(facts))
}
