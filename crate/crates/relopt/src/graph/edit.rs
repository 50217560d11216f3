//! Persistent edit operations. Each returns a fresh graph.

use super::Multigraph;
use crate::{Error, Result};

/// What became of an edge of the source graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeFate {
    Kept(usize),
    Deleted,
    /// The edge was contracted away.
    Merged,
}

/// Total map from source edge ids to their fate; injective on survivors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMapping(Vec<EdgeFate>);

impl EdgeMapping {
    pub fn fate(&self, old: usize) -> EdgeFate {
        self.0[old]
    }

    /// New id of `old`, if it survived.
    pub fn get(&self, old: usize) -> Option<usize> {
        match self.0[old] {
            EdgeFate::Kept(id) => Some(id),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Where one incidence at an expanded vertex `v` goes.
///
/// Non-loop edges use `First`/`Second`. A loop at `v` picks one of the three
/// loop dispositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Incidence {
    First,
    Second,
    LoopAtFirst,
    LoopAtSecond,
    LoopJoining,
}

/// A complete assignment of the edges at a vertex for an expansion.
///
/// `v` itself becomes the first new vertex; the second is appended as vertex
/// `n`, and the new joining edge gets id `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Expansion {
    pub choices: Vec<(usize, Incidence)>,
}

impl Expansion {
    /// Every expansion at `v`, in a fixed order. With `break_symmetry`, the
    /// first incidence is pinned to the first side, which drops the mirror
    /// image of each choice.
    pub fn all_at(g: &Multigraph, v: usize, break_symmetry: bool) -> Vec<Expansion> {
        let inc = g.incident_edges(v);
        let options: Vec<&[Incidence]> = inc
            .iter()
            .map(|&id| {
                if g.is_loop(id) {
                    &[Incidence::LoopAtFirst, Incidence::LoopAtSecond, Incidence::LoopJoining][..]
                } else {
                    &[Incidence::First, Incidence::Second][..]
                }
            })
            .collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; inc.len()];
        loop {
            let choices: Vec<(usize, Incidence)> =
                inc.iter().zip(&idx).zip(&options).map(|((&id, &i), o)| (id, o[i])).collect();
            let pinned = match choices.first() {
                None => true,
                Some((_, c)) => matches!(c, Incidence::First | Incidence::LoopAtFirst | Incidence::LoopJoining),
            };
            if !break_symmetry || pinned {
                out.push(Expansion { choices });
            }
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    return out;
                }
                idx[pos] += 1;
                if idx[pos] < options[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Expansion sending only edge `id` to the second vertex; this is the same
    /// as inserting a vertex on `id` next to `v`.
    pub fn isolating(g: &Multigraph, v: usize, id: usize) -> Expansion {
        let choices = g
            .incident_edges(v)
            .into_iter()
            .map(|e| {
                let side = if g.is_loop(e) {
                    Incidence::LoopAtFirst
                } else if e == id {
                    Incidence::Second
                } else {
                    Incidence::First
                };
                (e, side)
            })
            .collect();
        Expansion { choices }
    }

    /// Degrees of the two new vertices, counting the joining edge.
    pub fn side_degrees(&self) -> (usize, usize) {
        let (mut a, mut b) = (1, 1);
        for &(_, c) in &self.choices {
            match c {
                Incidence::First => a += 1,
                Incidence::Second => b += 1,
                Incidence::LoopAtFirst => a += 2,
                Incidence::LoopAtSecond => b += 2,
                Incidence::LoopJoining => {
                    a += 1;
                    b += 1;
                }
            }
        }
        (a, b)
    }
}

fn renumber_without(v_removed: usize, x: usize) -> usize {
    if x > v_removed {
        x - 1
    } else {
        x
    }
}

impl Multigraph {
    pub fn delete_edges(&self, ids: &[usize]) -> Result<(Multigraph, EdgeMapping)> {
        let mut gone = vec![false; self.m()];
        for &id in ids {
            *gone.get_mut(id).ok_or(Error::NoSuchEdge(id))? = true;
        }
        let mut fates = Vec::with_capacity(self.m());
        let mut edges = Vec::new();
        for (id, &e) in self.edges.iter().enumerate() {
            if gone[id] {
                fates.push(EdgeFate::Deleted);
            } else {
                fates.push(EdgeFate::Kept(edges.len()));
                edges.push(e);
            }
        }
        Ok((Multigraph { n: self.n, edges }, EdgeMapping(fates)))
    }

    /// Merges the endpoints of `id`; the merged vertex keeps the smaller
    /// index and vertices above the larger one shift down by one.
    pub fn contract_edge(&self, id: usize) -> Result<(Multigraph, EdgeMapping)> {
        let (u, v) = self.edge(id)?;
        if u == v {
            return Err(Error::ContractLoop(id));
        }
        let relabel = |x: usize| renumber_without(v, if x == v { u } else { x });
        let mut fates = Vec::with_capacity(self.m());
        let mut edges = Vec::new();
        for (j, &(a, b)) in self.edges.iter().enumerate() {
            if j == id {
                fates.push(EdgeFate::Merged);
                continue;
            }
            let (x, y) = (relabel(a), relabel(b));
            fates.push(EdgeFate::Kept(edges.len()));
            edges.push((x.min(y), x.max(y)));
        }
        Ok((Multigraph { n: self.n - 1, edges }, EdgeMapping(fates)))
    }

    /// Splits `v` into `v` and a new vertex `n` joined by a new edge `m`.
    pub fn expand_at_vertex(&self, v: usize, expansion: &Expansion) -> Result<(Multigraph, usize)> {
        if v >= self.n {
            return Err(Error::NoSuchVertex(v));
        }
        let bad = |reason: &str| Error::InvalidExpansion { vertex: v, reason: reason.into() };
        let incident = self.incident_edges(v);
        let mut given: Vec<usize> = expansion.choices.iter().map(|&(id, _)| id).collect();
        given.sort_unstable();
        if given != incident {
            return Err(bad("choices must cover each incident edge exactly once"));
        }
        let w = self.n;
        let mut edges = self.edges.clone();
        for &(id, choice) in &expansion.choices {
            let looped = self.is_loop(id);
            let (a, b) = self.edges[id];
            edges[id] = match (looped, choice) {
                (false, Incidence::First) => (a, b),
                (false, Incidence::Second) => {
                    let other = if a == v { b } else { a };
                    (other, w)
                }
                (true, Incidence::LoopAtFirst) => (v, v),
                (true, Incidence::LoopAtSecond) => (w, w),
                (true, Incidence::LoopJoining) => (v, w),
                (false, _) => return Err(bad("non-loop edge given a loop disposition")),
                (true, _) => return Err(bad("loop given a side instead of a disposition")),
            };
        }
        edges.push((v, w));
        Ok((Multigraph { n: self.n + 1, edges }, self.m()))
    }

    /// Subdivides edge `id`: it keeps its id and first endpoint, the new
    /// vertex is `n`, and the second half is appended as edge `m`.
    pub fn insert_vertex(&self, id: usize) -> Result<Multigraph> {
        let (a, b) = self.edge(id)?;
        let w = self.n;
        let mut edges = self.edges.clone();
        edges[id] = (a, w);
        edges.push((b, w));
        Ok(Multigraph { n: self.n + 1, edges })
    }

    /// Removes a loopless 2-vertex `v`, joining its two neighbours. The lower
    /// incident id carries the joined edge; the higher id is removed.
    pub fn suppress_vertex(&self, v: usize) -> Result<Multigraph> {
        if v >= self.n {
            return Err(Error::NoSuchVertex(v));
        }
        let inc = self.incident_edges(v);
        if inc.len() != 2 || self.degree(v) != 2 || self.n == 1 {
            return Err(Error::NotSuppressible(v));
        }
        let (e1, e2) = (inc[0], inc[1]);
        let a = self.other_end(e1, v);
        let b = self.other_end(e2, v);
        if a == v || b == v {
            return Err(Error::NotSuppressible(v));
        }
        let mut edges = Vec::with_capacity(self.m() - 1);
        for (j, &(x, y)) in self.edges.iter().enumerate() {
            if j == e2 {
                continue;
            }
            let (x, y) = if j == e1 { (a, b) } else { (x, y) };
            let (x, y) = (renumber_without(v, x), renumber_without(v, y));
            edges.push((x.min(y), x.max(y)));
        }
        Ok(Multigraph { n: self.n - 1, edges })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn contracting_dipole_edge_gives_bouquet() {
        let (g, map) = Multigraph::dipole(3).contract_edge(0).unwrap();
        assert_eq!(g, Multigraph::bouquet(2));
        assert_eq!(map.fate(0), EdgeFate::Merged);
        assert_eq!(map.get(2), Some(1));
    }

    #[test]
    fn contracting_a_loop_fails() {
        assert_eq!(Multigraph::bouquet(1).contract_edge(0), Err(Error::ContractLoop(0)));
    }

    #[test]
    fn insertion_and_suppression() {
        let c4 = Multigraph::cycle(3).insert_vertex(0).unwrap();
        assert!(is_isomorphic(&c4, &Multigraph::cycle(4)).unwrap());
        let g = Multigraph::cycle(4).suppress_vertex(1).unwrap();
        let g = g.suppress_vertex(1).unwrap();
        assert_eq!(g, Multigraph::dipole(2));
        assert_eq!(Multigraph::dipole(3).suppress_vertex(0), Err(Error::NotSuppressible(0)));
    }

    #[test]
    fn delete_maps_ids() {
        let (g, map) = Multigraph::complete(4).delete_edges(&[1, 3]).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(map.fate(1), EdgeFate::Deleted);
        assert_eq!(map.get(2), Some(1));
    }

    #[test]
    fn expansion_then_contraction_round_trips() {
        let bouquet = Multigraph::bouquet(2);
        for x in Expansion::all_at(&bouquet, 0, false) {
            let (g, new) = bouquet.expand_at_vertex(0, &x).unwrap();
            let (back, _) = g.contract_edge(new).unwrap();
            assert!(is_isomorphic(&back, &bouquet).unwrap());
        }
    }

    #[test]
    fn expansion_must_cover_all_incidences() {
        let k4 = Multigraph::complete(4);
        let partial = Expansion { choices: vec![(0, Incidence::First)] };
        assert!(k4.expand_at_vertex(0, &partial).is_err());
    }

    #[test]
    fn expansion_counts() {
        // Three edges at a vertex of K4: 2^3 choices, half with symmetry broken.
        let k4 = Multigraph::complete(4);
        assert_eq!(Expansion::all_at(&k4, 0, false).len(), 8);
        assert_eq!(Expansion::all_at(&k4, 0, true).len(), 4);
        assert_eq!(Expansion::all_at(&Multigraph::bouquet(2), 0, false).len(), 9);
    }
}
