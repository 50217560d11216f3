//! Multigraphs with loops and parallel edges, their edit operations,
//! connectivity services and canonical forms.

mod canon;
mod connectivity;
mod dsu;
mod edit;
pub(crate) mod io;

pub use canon::{
    canonical_form, canonical_form_with_cap, canonical_graph, is_canonical_labeling, is_isomorphic, DEFAULT_ISO_CAP,
};
pub use connectivity::{edge_connectivity, ConnectivityReport, EdgeConnectivity};
pub use dsu::Dsu;
pub use edit::{EdgeFate, EdgeMapping, Expansion, Incidence};
pub use io::{parse_graph, to_dot, write_graph};

use crate::{Error, Result};

/// A labeled multigraph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u <= v`; a loop has `u == v`. The
/// position of an edge in [`Multigraph::edges`] is its id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::EndpointOutOfRange { vertex: x, n });
                }
            }
            list.push((u.min(v), u.max(v)));
        }
        Ok(Multigraph { n, edges: list })
    }

    /// The `m`-dipole: two vertices joined by `m` parallel edges.
    pub fn dipole(m: usize) -> Self {
        Multigraph { n: 2, edges: vec![(0, 1); m] }
    }

    /// The `m`-bouquet: one vertex carrying `m` loops.
    pub fn bouquet(m: usize) -> Self {
        Multigraph { n: 1, edges: vec![(0, 0); m] }
    }

    /// The cycle on `m >= 1` edges (a loop for `m = 1`, a 2-dipole for `m = 2`).
    pub fn cycle(m: usize) -> Self {
        assert!(m >= 1, "a cycle needs an edge");
        let edges = (0..m).map(|i| {
            let j = (i + 1) % m;
            (i.min(j), i.max(j))
        });
        Multigraph { n: m, edges: edges.collect() }
    }

    /// The path with `m` edges on `m + 1` vertices.
    pub fn path(m: usize) -> Self {
        Multigraph { n: m + 1, edges: (0..m).map(|i| (i, i + 1)).collect() }
    }

    /// The complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Self {
        assert!(n >= 1);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Multigraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Exceedance `m - n`.
    pub fn exceedance(&self) -> i64 {
        self.m() as i64 - self.n as i64
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Result<(usize, usize)> {
        self.edges.get(id).copied().ok_or(Error::NoSuchEdge(id))
    }

    pub fn is_loop(&self, id: usize) -> bool {
        let (u, v) = self.edges[id];
        u == v
    }

    /// Degree of `v`; a loop contributes two.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| usize::from(a == v) + usize::from(b == v)).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn loop_count(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v && b == v).count()
    }

    /// Ids of edges incident to `v`, each listed once, ascending.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.m())
            .filter(|&id| {
                let (a, b) = self.edges[id];
                a == v || b == v
            })
            .collect()
    }

    /// The endpoint of `id` opposite to `v` (`v` itself for a loop).
    pub fn other_end(&self, id: usize, v: usize) -> usize {
        let (a, b) = self.edges[id];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    /// Symmetric multiplicity matrix; the diagonal holds loop counts.
    pub fn adjacency_matrix(&self) -> Vec<Vec<usize>> {
        let mut a = vec![vec![0; self.n]; self.n];
        for &(u, v) in &self.edges {
            if u == v {
                a[u][u] += 1;
            } else {
                a[u][v] += 1;
                a[v][u] += 1;
            }
        }
        a
    }

    /// Union-find over the edges whose ids satisfy `keep`.
    pub fn dsu_where(&self, mut keep: impl FnMut(usize) -> bool) -> Dsu {
        let mut dsu = Dsu::new(self.n);
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if keep(id) {
                dsu.union(u, v);
            }
        }
        dsu
    }

    pub fn component_count(&self) -> usize {
        self.dsu_where(|_| true).components()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// The graph with vertex `v` renamed to `perm[v]`; edge ids are kept.
    pub fn relabeled(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        });
        Multigraph { n: self.n, edges: edges.collect() }
    }

    /// The same graph with its edge list sorted; ids change.
    pub fn sorted(&self) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        Multigraph { n: self.n, edges }
    }

    /// Simple-graph complement; requires a simple loopless input.
    pub fn complement(&self) -> Result<Multigraph> {
        let a = self.adjacency_matrix();
        let mut edges = Vec::new();
        for u in 0..self.n {
            if a[u][u] > 0 {
                return Err(Error::Precondition("complement needs a loopless graph".into()));
            }
            for v in u + 1..self.n {
                match a[u][v] {
                    0 => edges.push((u, v)),
                    1 => {}
                    _ => return Err(Error::Precondition("complement needs a simple graph".into())),
                }
            }
        }
        Ok(Multigraph { n: self.n, edges })
    }

    /// Girth counting loops (1) and parallel pairs (2); `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let a = self.adjacency_matrix();
        if (0..self.n).any(|v| a[v][v] > 0) {
            return Some(1);
        }
        if (0..self.n).any(|u| (u + 1..self.n).any(|v| a[u][v] > 1)) {
            return Some(2);
        }
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in 0..self.n {
                    if a[x][y] == 0 || y == parent[x] {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Two-colourability of the loopless part; loops make a graph non-bipartite.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![usize::MAX; self.n];
        let a = self.adjacency_matrix();
        for s in 0..self.n {
            if colour[s] != usize::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                if a[x][x] > 0 {
                    return false;
                }
                for y in 0..self.n {
                    if a[x][y] == 0 || x == y {
                        continue;
                    }
                    if colour[y] == usize::MAX {
                        colour[y] = 1 - colour[x];
                        stack.push(y);
                    } else if colour[y] == colour[x] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_normalizes_pairs() {
        let g = Multigraph::new(3, [(1, 0), (2, 1), (0, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(g.exceedance(), 0);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Multigraph::new(0, []), Err(Error::NoVertices));
        assert_eq!(Multigraph::new(2, [(0, 2)]), Err(Error::EndpointOutOfRange { vertex: 2, n: 2 }));
    }

    #[test]
    fn loops_count_twice() {
        let g = Multigraph::bouquet(1);
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.loop_count(0), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn small_families() {
        assert_eq!(Multigraph::dipole(3).multiplicity(0, 1), 3);
        assert_eq!(Multigraph::cycle(1).edges(), &[(0, 0)]);
        assert_eq!(Multigraph::cycle(2).edges(), &[(0, 1), (0, 1)]);
        assert_eq!(Multigraph::path(3).n(), 4);
        assert_eq!(Multigraph::complete(4).m(), 6);
    }

    #[test]
    fn girth_and_bipartite() {
        assert_eq!(Multigraph::complete(4).girth(), Some(3));
        assert_eq!(Multigraph::cycle(5).girth(), Some(5));
        assert_eq!(Multigraph::path(4).girth(), None);
        assert!(Multigraph::cycle(6).is_bipartite());
        assert!(!Multigraph::cycle(5).is_bipartite());
    }

    #[test]
    fn complement_of_path() {
        let p4 = Multigraph::path(3);
        let c = p4.complement().unwrap();
        assert_eq!(c.m(), 3);
        assert!(c.is_connected());
    }
}
