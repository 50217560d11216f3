//! Named reproductions. Every graph is built in code, so the outcome does
//! not depend on files.

use crate::commands::CliResult;
use num_bigint::BigInt;
use relopt::graph::is_isomorphic;
use relopt::moves::{
    count_xij, k4_move_delta_d3, move_edge_between_chains, non_star_bonds, pi3_reconnect_deltas, Check, K4Labels,
    Pi3Labels,
};
use relopt::optimal::{
    handcuffs, optimal_graph, petersen_6_11, pi3_counterexample, romero_safe, wagner_rails, wang_k3_graph,
    PI3_COUNTEREXAMPLE_WEIGHTS,
};
use relopt::reliability::{bond_catalog, compare, profile, spanning_tree_count, ComparisonVerdict, EnumOptions};
use relopt::{Error, Multigraph};
use serde_json::{json, Value};
use std::cmp::Ordering;

pub const NAMES: [&str; 7] =
    ["wang-k33", "pi3-recon", "k4-move", "petersen-6-11", "wagner-rails", "romero-safe", "handcuffs"];

/// One compared quantity.
pub struct Line {
    pub label: String,
    pub expected: String,
    pub actual: String,
}

impl Line {
    fn new(label: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Line { label: label.into(), expected: expected.to_string(), actual: actual.to_string() }
    }

    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

pub struct Outcome {
    pub name: &'static str,
    pub lines: Vec<Line>,
}

impl Outcome {
    pub fn pass(&self) -> bool {
        self.lines.iter().all(Line::ok)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            let mark = if l.ok() { "ok" } else { "MISMATCH" };
            out.push_str(&format!("{}: {} (expected {}) {mark}\n", l.label, l.actual, l.expected));
        }
        out.push_str(&format!("{} {}\n", if self.pass() { "PASS" } else { "FAIL" }, self.name));
        out
    }

    pub fn to_json(&self) -> Value {
        let lines: Vec<Value> = self
            .lines
            .iter()
            .map(|l| json!({ "label": l.label, "expected": l.expected, "actual": l.actual, "ok": l.ok() }))
            .collect();
        json!({ "name": self.name, "checks": lines, "pass": self.pass() })
    }
}

pub fn run(name: &str, opts: &EnumOptions) -> CliResult<Outcome> {
    let key = NAMES
        .into_iter()
        .find(|n| *n == name.trim().to_ascii_lowercase().replace('_', "-"))
        .ok_or_else(|| Error::UnknownName(format!("{name}; expected one of {}", NAMES.join(", "))))?;
    let lines = match key {
        "wang-k33" => wang_k33(opts)?,
        "pi3-recon" => pi3_recon(opts)?,
        "k4-move" => k4_move(opts)?,
        "petersen-6-11" => petersen(opts)?,
        "wagner-rails" => wagner()?,
        "romero-safe" => romero(opts)?,
        _ => handcuff_pair(opts)?,
    };
    Ok(Outcome { name: key, lines })
}

fn d(g: &Multigraph, i: usize, opts: &EnumOptions) -> CliResult<BigInt> {
    Ok(BigInt::from(profile(g, opts)?.d[i].clone()))
}

fn wang_k33(opts: &EnumOptions) -> CliResult<Vec<Line>> {
    let h = optimal_graph(3, 14)?.graph;
    let g = wang_k3_graph(14)?;
    let (ph, pg) = (profile(&h, opts)?, profile(&g, opts)?);
    let coefficientwise = ph.d.iter().zip(&pg.d).all(|(a, b)| a <= b) && ph.d != pg.d;
    Ok(vec![
        Line::new("non-isomorphic", true, !is_isomorphic(&h, &g)?),
        Line::new("H dominates G coefficientwise", true, coefficientwise),
        Line::new("verdict", "A_DOMINATES", compare(&ph, &pg)?.label()),
        Line::new("t(H) > t(G)", true, ph.t > pg.t),
    ])
}

fn pi3_recon(opts: &EnumOptions) -> CliResult<Vec<Line>> {
    let p = pi3_counterexample();
    let gpp = p.g_double_prime.as_ref().expect("the construction has three graphs");
    let graphs = [&p.g, &p.g_prime, gpp];
    let mut d44 = Vec::new();
    let mut d43 = Vec::new();
    for g in graphs {
        let cat = bond_catalog(g, opts)?;
        d44.push(cat.d_split[4][4]);
        d43.push(cat.d_split[4][3]);
    }
    let w = PI3_COUNTEREXAMPLE_WEIGHTS;
    let labels = Pi3Labels { l: [w[0], w[1], w[2]], r: [w[3], w[4], w[5]], c: [w[6], w[7], w[8]] };
    let (b3, d4_formula) = pi3_reconnect_deltas(&labels, Check::Formula)?;
    Ok(vec![
        Line::new("d_4,4 (G, G', G'')", "57 57 73", join(&d44)),
        Line::new("d_4,3 (G, G', G'')", "242 292 228", join(&d43)),
        Line::new("d4(G') - d4(G)", 50, d(&p.g_prime, 4, opts)? - d(&p.g, 4, opts)?),
        Line::new("d4(G'') - d4(G)", 2, d(gpp, 4, opts)? - d(&p.g, 4, opts)?),
        Line::new("closed form d4(G) - d4(G')", -50, d4_formula),
        Line::new("closed form b3(G) - b3(G')", -15, b3),
    ])
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn k4_move(opts: &EnumOptions) -> CliResult<Vec<Line>> {
    let labels = K4Labels([3, 3, 1, 1, 1, 5]);
    let pair = move_edge_between_chains(&labels.weighting()?, 0, 2)?;
    let row = count_xij(&pair.g, &pair.g_prime, pair.edge, 3, opts)?;
    Ok(vec![
        Line::new("closed form d3(G) - d3(G')", -1, k4_move_delta_d3(&labels, Check::Formula)?),
        Line::new("enumerated d3(G) - d3(G')", -1, d(&pair.g, 3, opts)? - d(&pair.g_prime, 3, opts)?),
        Line::new("x_3,2", 18, row.x[2]),
        Line::new("x_3,3", 5, row.x[3]),
        Line::new("sum of x - x'", -1, row.net()),
    ])
}

fn petersen(opts: &EnumOptions) -> CliResult<Vec<Line>> {
    let p = petersen_6_11();
    let (pg, pgp) = (profile(&p.g, opts)?, profile(&p.g_prime, opts)?);
    let cat = bond_catalog(&p.g, opts)?;
    Ok(vec![
        Line::new("t(G)", 224, &pg.t),
        Line::new("t(G')", 225, &pgp.t),
        Line::new("d2(G)", 0, &pg.d[2]),
        Line::new("3-bonds of G", 2, cat.b[3]),
        Line::new("non-star 4-bonds of G", 0, non_star_bonds(&p.g, 4)),
        Line::new("non-star 4-bonds of G'", 1, non_star_bonds(&p.g_prime, 4)),
        Line::new("verdict", "CROSSING", compare(&pg, &pgp)?.label()),
    ])
}

fn wagner() -> CliResult<Vec<Line>> {
    let mut lines = Vec::new();
    let mut signs = Vec::new();
    for q in 7..=9usize {
        let pair = wagner_rails(q)?;
        let delta = BigInt::from(spanning_tree_count(&pair.g_prime)) - BigInt::from(spanning_tree_count(&pair.g));
        let qi = q as i64;
        lines.push(Line::new(format!("t(W'_{q}) - t(W_{q})"), (7 * qi - 51) * qi.pow(3), &delta));
        signs.push(delta.sign());
    }
    lines.push(Line::new("sign flips between q = 7 and q = 8", true, signs[0] != signs[1]));
    Ok(lines)
}

fn romero(opts: &EnumOptions) -> CliResult<Vec<Line>> {
    let p = romero_safe(2)?;
    let (pg, pgp) = (profile(&p.g, opts)?, profile(&p.g_prime, opts)?);
    let first_difference = pg.d.iter().zip(&pgp.d).map(|(a, b)| a.cmp(b)).find(|o| *o != Ordering::Equal);
    Ok(vec![
        Line::new("(n, m)", "(16, 20)", format!("({}, {})", pg.n, pg.m)),
        Line::new("G wins at large p", true, first_difference == Some(Ordering::Less)),
        Line::new("t(G') > t(G)", true, pgp.t > pg.t),
        Line::new("verdict", "CROSSING", compare(&pg, &pgp)?.label()),
    ])
}

fn handcuff_pair(opts: &EnumOptions) -> CliResult<Vec<Line>> {
    let p = handcuffs();
    let (pg, pgp) = (profile(&p.g, opts)?, profile(&p.g_prime, opts)?);
    let roots = match compare(&pg, &pgp)? {
        ComparisonVerdict::Crossing(r) => r.len(),
        _ => 0,
    };
    Ok(vec![Line::new("t(G)", 25, &pg.t), Line::new("t(G')", 24, &pgp.t), Line::new("crossings in (0, 1)", 1, roots)])
}
