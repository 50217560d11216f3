use super::chains::{chain_decomposition, ChainDecomposition};
use crate::graph::io::{data_lines, parse_graph_block};
use crate::graph::{Dsu, Multigraph};
use crate::{Error, Result};
use std::fmt::Write as _;

/// A distillation `D` whose edges carry chain lengths; weight zero means the
/// edge is contracted in the realized graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedDistillation {
    d: Multigraph,
    w: Vec<usize>,
}

/// A realized weak subdivision with the chain of every distillation edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub graph: Multigraph,
    /// Realized edge ids of the chain for each distillation edge, walking
    /// from its first endpoint; empty for weight zero.
    pub chains: Vec<Vec<usize>>,
    /// Realized vertex of each distillation vertex.
    pub vertex: Vec<usize>,
}

impl WeightedDistillation {
    pub fn new(d: Multigraph, w: Vec<usize>) -> Result<Self> {
        if w.len() != d.m() {
            return Err(Error::InvalidWeights(format!("{} weights for {} edges", w.len(), d.m())));
        }
        if !d.is_connected() {
            return Err(Error::Disconnected);
        }
        if let Some(v) = (0..d.n()).find(|&v| d.degree(v) == 2) {
            return Err(Error::InvalidWeights(format!("vertex {v} has degree 2, so this is not a distillation")));
        }
        let mut zero = Dsu::new(d.n());
        for (id, &(u, v)) in d.edges().iter().enumerate() {
            if w[id] == 0 && !zero.union(u, v) {
                return Err(Error::InvalidWeights(format!("edge {id} closes a cycle of total weight zero")));
            }
        }
        Ok(WeightedDistillation { d, w })
    }

    /// All weights equal to `weight`.
    pub fn uniform(d: Multigraph, weight: usize) -> Result<Self> {
        let m = d.m();
        WeightedDistillation::new(d, vec![weight; m])
    }

    pub fn distillation(&self) -> &Multigraph {
        &self.d
    }

    pub fn weights(&self) -> &[usize] {
        &self.w
    }

    /// Size of the realized graph.
    pub fn size(&self) -> usize {
        self.w.iter().sum()
    }

    pub fn exceedance(&self) -> i64 {
        self.d.exceedance()
    }

    pub fn is_balanced(&self) -> bool {
        match (self.w.iter().min(), self.w.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }

    pub fn with_weights(&self, w: Vec<usize>) -> Result<Self> {
        WeightedDistillation::new(self.d.clone(), w)
    }

    pub fn realize_with_chains(&self) -> Realization {
        let d = &self.d;
        let mut zero = Dsu::new(d.n());
        for (id, &(u, v)) in d.edges().iter().enumerate() {
            if self.w[id] == 0 {
                zero.union(u, v);
            }
        }
        let mut class = vec![usize::MAX; d.n()];
        let mut n = 0;
        let mut vertex = Vec::with_capacity(d.n());
        for v in 0..d.n() {
            let root = zero.find(v);
            if class[root] == usize::MAX {
                class[root] = n;
                n += 1;
            }
            vertex.push(class[root]);
        }
        let mut edges = Vec::with_capacity(self.size());
        let mut chains = Vec::with_capacity(d.m());
        for (id, &(u, v)) in d.edges().iter().enumerate() {
            let mut chain = Vec::with_capacity(self.w[id]);
            let (a, b) = (vertex[u], vertex[v]);
            let mut at = a;
            for step in 0..self.w[id] {
                let next = if step + 1 == self.w[id] {
                    b
                } else {
                    n += 1;
                    n - 1
                };
                chain.push(edges.len());
                edges.push((at, next));
                at = next;
            }
            chains.push(chain);
        }
        let graph = Multigraph::new(n, edges).expect("realized endpoints are in range");
        Realization { graph, chains, vertex }
    }

    /// The weak subdivision: each weight-`w` edge becomes a `w`-edge chain.
    pub fn realize(&self) -> Multigraph {
        self.realize_with_chains().graph
    }

    /// Graph block followed by a `weights` line.
    pub fn to_text(&self) -> String {
        let mut out = crate::graph::write_graph(&self.d);
        out.push_str("weights");
        for w in &self.w {
            write!(out, " {w}").unwrap();
        }
        out.push('\n');
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = data_lines(text);
        let d = parse_graph_block(&mut lines)?;
        let (line, weights) = lines.next().ok_or(Error::Parse { line: 0, message: "missing `weights` line".into() })?;
        let mut fields = weights.split_whitespace();
        if fields.next() != Some("weights") {
            return Err(Error::Parse { line, message: "expected `weights w0 w1 ..`".into() });
        }
        let w = fields
            .map(|tok| tok.parse().map_err(|_| Error::Parse { line, message: format!("bad weight `{tok}`") }))
            .collect::<Result<Vec<usize>>>()?;
        if let Some((line, extra)) = lines.next() {
            return Err(Error::Parse { line, message: format!("trailing data `{extra}`") });
        }
        WeightedDistillation::new(d, w)
    }
}

/// Suppresses every 2-vertex. Distillation edge `i` corresponds to chain `i`
/// of the returned decomposition and carries its length.
pub fn proper_distillation(g: &Multigraph) -> Result<(WeightedDistillation, ChainDecomposition)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let chains = chain_decomposition(g);
    if chains.is_cycle {
        return Err(Error::Precondition("a cycle has no distillation".into()));
    }
    let mut index = vec![usize::MAX; g.n()];
    let mut n = 0;
    for v in 0..g.n() {
        if !super::chains::is_internal(g, v) {
            index[v] = n;
            n += 1;
        }
    }
    let edges = chains.chains.iter().map(|c| (index[c.ends.0], index[c.ends.1]));
    let d = Multigraph::new(n, edges)?;
    let w = chains.lengths();
    Ok((WeightedDistillation::new(d, w)?, chains))
}
