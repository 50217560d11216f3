use crate::{repro, Budget, Cli, Command, Common};
use relopt::distillation::{proper_distillation, WeightedDistillation};
use relopt::equivalence::{enumerate_shifts, equivalence_class, shift_edge};
use relopt::graph::{parse_graph, to_dot, write_graph};
use relopt::optimal::{conjectural_graph, named_pair, optimal_graph, wang_k3_graph, Flavor, OptimalGraph, PairName};
use relopt::reliability::{bond_catalog, compare, profile, spanning_tree_count, ComparisonVerdict, EnumOptions};
use relopt::verify::{enumerate_connected, verify_uniquely_optimal, CorpusSpec};
use relopt::Multigraph;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] relopt::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("reproduction `{0}` failed")]
    ReproFail(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(relopt::Error::BudgetExceeded(_) | relopt::Error::CapExceeded { .. }) => 2,
            CliError::ReproFail(_) => 3,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

/// Reads a file, or standard input for `-`.
fn read_text(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io_error(path))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(io_error(path))
}

fn read_graph(path: &Path) -> CliResult<Multigraph> {
    Ok(parse_graph(&read_text(path)?)?)
}

fn write_out(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(io_error(path)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render_graph(g: &Multigraph, common: &Common, header: &[String]) -> String {
    if common.dot {
        return to_dot(g);
    }
    let mut out = String::new();
    for line in header {
        writeln!(out, "# {line}").unwrap();
    }
    out.push_str(&write_graph(g));
    out
}

fn enum_options(common: &Common) -> EnumOptions {
    let mut opts = EnumOptions::from_env();
    if let Some(cap) = common.subset_cap {
        opts.subset_cap = cap;
    }
    opts.workers = common.workers;
    opts
}

fn decimal_line(label: &str, values: impl IntoIterator<Item = impl ToString>) -> String {
    let mut line = label.to_string();
    for v in values {
        line.push(' ');
        line.push_str(&v.to_string());
    }
    line
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

fn edges_json(g: &Multigraph) -> Value {
    json!(g.edges())
}

pub fn run(cli: Cli) -> CliResult<()> {
    let common = cli.common;
    let opts = enum_options(&common);
    match cli.command {
        Command::Profile { input } => {
            let p = profile(&read_graph(&input)?, &opts)?;
            if common.json {
                print_json(&p.to_json());
            } else {
                println!("n {}\nm {}\nk {}", p.n, p.m, p.k);
                println!("lambda {}", p.lambda.finite().map_or("inf".to_string(), |l| l.to_string()));
                println!("t {}", p.t);
                println!("{}", decimal_line("d", &p.d));
                println!("{}", decimal_line("c", &p.c));
            }
        }
        Command::Trees { input } => {
            let t = spanning_tree_count(&read_graph(&input)?);
            if common.json {
                print_json(&json!({ "t": t.to_string() }));
            } else {
                println!("{t}");
            }
        }
        Command::Bonds { input, list } => {
            let cat = bond_catalog(&read_graph(&input)?, &opts)?;
            if common.json {
                let bonds: Value =
                    cat.bonds.iter().map(|(s, b)| (s.to_string(), json!(b))).collect::<serde_json::Map<_, _>>().into();
                print_json(
                    &json!({ "b": cat.b, "d_split": cat.d_split, "bonds": if list { bonds } else { Value::Null } }),
                );
            } else {
                println!("{}", decimal_line("b", &cat.b));
                for (i, row) in cat.d_split.iter().enumerate() {
                    println!("{}", decimal_line(&format!("d_split {i}"), row));
                }
                if list {
                    for (size, bonds) in &cat.bonds {
                        for b in bonds {
                            println!("{}", decimal_line(&format!("bond {size}"), b));
                        }
                    }
                }
            }
        }
        Command::Compare { a, b } => {
            let (pa, pb) = (profile(&read_graph(&a)?, &opts)?, profile(&read_graph(&b)?, &opts)?);
            let verdict = compare(&pa, &pb)?;
            let roots: Vec<(String, String)> = match &verdict {
                ComparisonVerdict::Crossing(r) => r.iter().map(|x| (x.lo.to_string(), x.hi.to_string())).collect(),
                _ => Vec::new(),
            };
            if common.json {
                print_json(&json!({ "verdict": verdict.label(), "roots": roots }));
            } else {
                println!("verdict {}", verdict.label());
                for (lo, hi) in roots {
                    println!("root in ({lo}, {hi})");
                }
            }
        }
        Command::Optimal { k, m, flavor, output } => {
            let built = if k >= 4 { conjectural_graph(k, m, flavor.parse::<Flavor>()?)? } else { optimal_graph(k, m)? };
            emit_optimal(&built, &common, output.as_deref())?;
        }
        Command::Wang { m, output } => {
            let g = wang_k3_graph(m)?;
            let header = [format!("K33 perfect-matching weighting, m = {m}")];
            write_out(output.as_deref(), &render_graph(&g, &common, &header))?;
        }
        Command::Pair { name, output } => {
            let pair = named_pair(name.parse::<PairName>()?)?;
            let members: Vec<(&str, &Multigraph)> = [
                ("g", Some(&pair.g)),
                ("g_prime", Some(&pair.g_prime)),
                ("g_double_prime", pair.g_double_prime.as_ref()),
            ]
            .into_iter()
            .filter_map(|(label, g)| g.map(|g| (label, g)))
            .collect();
            if common.json && output.is_none() {
                let value: serde_json::Map<String, Value> =
                    members.iter().map(|(l, g)| (l.to_string(), edges_json(g))).collect();
                print_json(&value.into());
                return Ok(());
            }
            for (label, g) in members {
                let text = render_graph(g, &common, &[label.to_string()]);
                match &output {
                    Some(dir) => {
                        std::fs::create_dir_all(dir).map_err(io_error(dir))?;
                        let ext = if common.dot { "dot" } else { "txt" };
                        write_out(Some(&dir.join(format!("{label}.{ext}"))), &text)?;
                    }
                    None => print!("{text}"),
                }
            }
        }
        Command::Shift { input, index, output } => {
            let g = read_graph(&input)?;
            let shifts = enumerate_shifts(&g);
            match index {
                None if common.json => {
                    let list: Vec<Value> = shifts
                        .iter()
                        .map(|s| json!({ "edge": s.edge, "vertex": s.vertex, "expansion": format!("{:?}", s.expansion.choices) }))
                        .collect();
                    print_json(&Value::Array(list));
                }
                None => {
                    for (i, s) in shifts.iter().enumerate() {
                        println!("{i} edge {} vertex {} expansion {:?}", s.edge, s.vertex, s.expansion.choices);
                    }
                }
                Some(i) => {
                    let mv = shifts.get(i).ok_or_else(|| {
                        relopt::Error::Precondition(format!(
                            "shift index {i} out of range; {} shifts exist",
                            shifts.len()
                        ))
                    })?;
                    let shifted = shift_edge(&g, mv)?;
                    let header = [format!("shift {i}: edge {} at vertex {}", mv.edge, mv.vertex)];
                    write_out(output.as_deref(), &render_graph(&shifted, &common, &header))?;
                }
            }
        }
        Command::Equivclass { input, cap } => {
            let class = equivalence_class(&read_graph(&input)?, cap)?;
            if common.json {
                let members: Vec<Value> = class.members.iter().map(edges_json).collect();
                print_json(&json!({ "size": class.members.len(), "complete": class.complete, "members": members }));
            } else {
                println!("# size {}\n# complete {}", class.members.len(), class.complete);
                for (i, g) in class.members.iter().enumerate() {
                    print!("{}", render_graph(g, &common, &[format!("member {i}")]));
                }
            }
        }
        Command::Distill { input, output } => {
            let (wd, _) = proper_distillation(&read_graph(&input)?)?;
            write_out(output.as_deref(), &wd.to_text())?;
        }
        Command::Realize { input, output } => {
            let wd = WeightedDistillation::parse(&read_text(&input)?)?;
            write_out(output.as_deref(), &render_graph(&wd.realize(), &common, &[]))?;
        }
        Command::Verify { k, m, candidate, budget } => {
            let candidate = match candidate {
                Some(path) => read_graph(&path)?,
                None if k >= 4 => conjectural_graph(k, m, Flavor::Balanced)?.graph,
                None => optimal_graph(k, m)?.graph,
            };
            let n = usize::try_from(m as i64 - k)
                .map_err(|_| relopt::Error::Precondition(format!("k = {k} exceeds m = {m}")))?;
            let report = verify_uniquely_optimal(&candidate, &corpus_spec(n, m, budget, opts))?;
            print_json(&report.to_json());
        }
        Command::Enumerate { n, m, count, budget } => {
            let corpus = enumerate_connected(&corpus_spec(n, m, budget, opts))?;
            if common.json {
                let graphs: Vec<Value> =
                    if count { Vec::new() } else { corpus.graphs.iter().map(edges_json).collect() };
                print_json(
                    &json!({ "n": n, "m": m, "count": corpus.graphs.len(), "candidates_visited": corpus.candidates, "graphs": graphs }),
                );
            } else if count {
                println!("{}", corpus.graphs.len());
            } else {
                for (i, g) in corpus.graphs.iter().enumerate() {
                    print!("{}", render_graph(g, &common, &[format!("graph {i}")]));
                }
            }
        }
        Command::Counterexample { name } => {
            let outcome = repro::run(&name, &opts)?;
            if common.json {
                print_json(&outcome.to_json());
            } else {
                print!("{}", outcome.render());
            }
            if !outcome.pass() {
                return Err(CliError::ReproFail(outcome.name.to_string()));
            }
        }
    }
    Ok(())
}

fn corpus_spec(n: usize, m: usize, budget: Budget, opts: EnumOptions) -> CorpusSpec {
    CorpusSpec { n, m, candidate_budget: budget.budget, survivor_budget: budget.survivors, enum_opts: opts }
}

fn emit_optimal(built: &OptimalGraph, common: &Common, output: Option<&Path>) -> CliResult<()> {
    let s = &built.spec;
    let show = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
    if common.json {
        let value = json!({
            "k": s.k,
            "m": s.m,
            "n": s.n,
            "q": s.q,
            "r": s.r,
            "residue": s.residue,
            "rule": s.rule,
            "status": s.status.label(),
            "weights": built.weighting.as_ref().map(|w| w.weights().to_vec()),
            "edges": edges_json(&built.graph),
        });
        let text = serde_json::to_string_pretty(&value).expect("JSON values serialize") + "\n";
        return write_out(output, &text);
    }
    let mut header = vec![
        format!("k {} m {} n {} q {} r {}", s.k, s.m, s.n, show(s.q), show(s.r)),
        format!("status {}", s.status.label()),
        format!("rule {}", s.rule),
    ];
    if let Some(w) = &built.weighting {
        header.push(decimal_line("weights", w.weights()));
    }
    write_out(output, &render_graph(&built.graph, common, &header))
}
