use super::weighted::{proper_distillation, WeightedDistillation};
use crate::graph::{canonical_form, edge_connectivity, Expansion, Multigraph, DEFAULT_ISO_CAP};
use crate::{Error, Result};
use std::collections::{HashSet, VecDeque};

/// One edge expansion: `vertex` was split and the new edge got id `new_edge`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionStep {
    pub vertex: usize,
    pub expansion: Expansion,
    pub new_edge: usize,
}

/// A cubic, 3-edge-connected weak distillation. New edges have weight zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicWeakDistillation {
    pub weighted: WeightedDistillation,
    pub trace: Vec<ExpansionStep>,
}

fn three_edge_connected(g: &Multigraph) -> bool {
    edge_connectivity(g).at_least(3)
}

/// Expansions at `v` that leave both new vertices with degree at least 3.
fn degree_reducing(g: &Multigraph, v: usize) -> impl Iterator<Item = Expansion> {
    Expansion::all_at(g, v, true).into_iter().filter(|x| {
        let (a, b) = x.side_degrees();
        a >= 3 && b >= 3
    })
}

struct CubicSearch {
    dead: HashSet<Vec<u8>>,
}

impl CubicSearch {
    /// Depth-first over 3-edge-connected expansions. Contraction never lowers
    /// edge-connectivity, so every intermediate step of a successful sequence
    /// is 3-edge-connected and the pruning is exact.
    fn run(&mut self, g: &Multigraph, trace: &mut Vec<ExpansionStep>) -> Option<Multigraph> {
        let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) else {
            return three_edge_connected(g).then(|| g.clone());
        };
        let key = (g.n() <= DEFAULT_ISO_CAP).then(|| canonical_form(g).expect("within cap"));
        if key.as_ref().is_some_and(|k| self.dead.contains(k)) {
            return None;
        }
        for x in degree_reducing(g, v) {
            let (h, new_edge) = g.expand_at_vertex(v, &x).expect("expansion covers every incidence");
            if !three_edge_connected(&h) {
                continue;
            }
            trace.push(ExpansionStep { vertex: v, expansion: x, new_edge });
            if let Some(done) = self.run(&h, trace) {
                return Some(done);
            }
            trace.pop();
        }
        if let Some(k) = key {
            self.dead.insert(k);
        }
        None
    }
}

/// A cubic 3-edge-connected weak distillation of `g`, found by repeated
/// degree-reducing edge expansions of its proper distillation.
pub fn cubic_weak_distillation(g: &Multigraph) -> Result<CubicWeakDistillation> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_bridgeless() {
        return Err(Error::Precondition("graph has a bridge".into()));
    }
    if g.exceedance() < 1 {
        return Err(Error::Precondition("exceedance must be at least 1".into()));
    }
    let (proper, _) = proper_distillation(g)?;
    let d = proper.distillation();
    if d.n() > 1 && !three_edge_connected(d) {
        return Err(Error::Precondition("graph has a nontrivial 2-bond".into()));
    }
    let mut trace = Vec::new();
    let cubic = CubicSearch { dead: HashSet::new() }
        .run(d, &mut trace)
        .ok_or_else(|| Error::Precondition("no cubic 3-edge-connected expansion exists".into()))?;
    let mut w = proper.weights().to_vec();
    w.resize(cubic.m(), 0);
    Ok(CubicWeakDistillation { weighted: WeightedDistillation::new(cubic, w)?, trace })
}

/// All leafless weak distillations of `g` up to isomorphism: the closure of
/// the proper distillation under expansions keeping every degree at least 3.
pub fn leafless_weak_distillations(g: &Multigraph, max_vertices: usize) -> Result<Vec<Multigraph>> {
    let (proper, _) = proper_distillation(g)?;
    let cap = max_vertices.min(DEFAULT_ISO_CAP);
    let start = proper.distillation().clone();
    if start.n() > cap {
        return Err(Error::CapExceeded { what: "weak distillation vertex", limit: cap, actual: start.n() });
    }
    let mut seen = HashSet::from([canonical_form(&start)?]);
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(h) = queue.pop_front() {
        if h.n() >= cap {
            continue;
        }
        for v in 0..h.n() {
            for x in degree_reducing(&h, v) {
                let (next, _) = h.expand_at_vertex(v, &x)?;
                if seen.insert(canonical_form(&next)?) {
                    out.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(out)
}
