use super::Multigraph;

/// Edge-connectivity; a single vertex has no cut at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeConnectivity {
    Finite(usize),
    Infinite,
}

impl EdgeConnectivity {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            EdgeConnectivity::Finite(v) => v >= k,
            EdgeConnectivity::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            EdgeConnectivity::Finite(v) => Some(v),
            EdgeConnectivity::Infinite => None,
        }
    }
}

impl std::fmt::Display for EdgeConnectivity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeConnectivity::Finite(v) => write!(f, "{v}"),
            EdgeConnectivity::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub bridges: Vec<usize>,
    pub cutvertices: Vec<usize>,
    pub lambda: EdgeConnectivity,
}

/// Global minimum cut by Stoer–Wagner on edge multiplicities. Loops are
/// ignored; a disconnected graph has connectivity zero.
pub fn edge_connectivity(g: &Multigraph) -> EdgeConnectivity {
    let n = g.n();
    if n == 1 {
        return EdgeConnectivity::Infinite;
    }
    if !g.is_connected() {
        return EdgeConnectivity::Finite(0);
    }
    let mut w: Vec<Vec<u64>> = vec![vec![0; n]; n];
    for &(u, v) in g.edges() {
        if u != v {
            w[u][v] += 1;
            w[v][u] += 1;
        }
    }
    let mut alive: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    while alive.len() > 1 {
        let mut added = vec![false; n];
        let mut key = vec![0u64; n];
        let mut prev = alive[0];
        let mut last = alive[0];
        for step in 0..alive.len() {
            let mut pick = usize::MAX;
            for &x in &alive {
                if !added[x] && (pick == usize::MAX || key[x] > key[pick]) {
                    pick = x;
                }
            }
            added[pick] = true;
            if step == alive.len() - 1 {
                best = best.min(key[pick]);
            }
            prev = last;
            last = pick;
            for &x in &alive {
                if !added[x] {
                    key[x] += w[pick][x];
                }
            }
        }
        let (s, t) = (prev, last);
        for &x in &alive {
            w[s][x] += w[t][x];
            w[x][s] = w[s][x];
        }
        w[s][s] = 0;
        alive.retain(|&x| x != t);
    }
    EdgeConnectivity::Finite(best as usize)
}

impl Multigraph {
    /// Non-loop edges whose removal disconnects the graph.
    pub fn bridges(&self) -> Vec<usize> {
        let base = self.component_count();
        (0..self.m()).filter(|&id| !self.is_loop(id) && self.dsu_where(|j| j != id).components() > base).collect()
    }

    /// Cutvertices in the loop-aware sense: a vertex carrying a loop is one
    /// unless the graph is a single vertex with a single loop.
    pub fn cutvertices(&self) -> Vec<usize> {
        let a = self.adjacency_matrix();
        let base = self.component_count();
        let mut out = Vec::new();
        for v in 0..self.n() {
            let looped = a[v][v] > 0;
            let trivial_loop = self.n() == 1 && self.m() == 1;
            if looped && !trivial_loop {
                out.push(v);
                continue;
            }
            if self.n() < 3 {
                continue;
            }
            let mut dsu = super::Dsu::new(self.n());
            for &(x, y) in self.edges() {
                if x != v && y != v {
                    dsu.union(x, y);
                }
            }
            // Removing v leaves v as its own class; discount it.
            if dsu.components() - 1 > base {
                out.push(v);
            }
        }
        out
    }

    pub fn connectivity_report(&self) -> ConnectivityReport {
        ConnectivityReport {
            connected: self.is_connected(),
            bridges: self.bridges(),
            cutvertices: self.cutvertices(),
            lambda: edge_connectivity(self),
        }
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn handcuff_left() -> Multigraph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 1) % 5)));
        e.push((0, 5));
        Multigraph::new(10, e).unwrap()
    }

    #[test]
    fn triangle_report() {
        let r = Multigraph::cycle(3).connectivity_report();
        assert!(r.connected);
        assert!(r.bridges.is_empty());
        assert!(r.cutvertices.is_empty());
        assert_eq!(r.lambda, EdgeConnectivity::Finite(2));
    }

    #[test]
    fn two_pentagons_joined_by_a_bridge() {
        let r = handcuff_left().connectivity_report();
        assert_eq!(r.bridges, vec![10]);
        assert_eq!(r.cutvertices, vec![0, 5]);
        assert_eq!(r.lambda, EdgeConnectivity::Finite(1));
    }

    #[test]
    fn complete_graph_connectivity() {
        assert_eq!(edge_connectivity(&Multigraph::complete(4)), EdgeConnectivity::Finite(3));
        assert_eq!(edge_connectivity(&Multigraph::complete(6)), EdgeConnectivity::Finite(5));
        assert_eq!(edge_connectivity(&Multigraph::dipole(5)), EdgeConnectivity::Finite(5));
    }

    #[test]
    fn single_vertex_cases() {
        let one_loop = Multigraph::bouquet(1).connectivity_report();
        assert_eq!(one_loop.lambda, EdgeConnectivity::Infinite);
        assert!(one_loop.cutvertices.is_empty());
        assert_eq!(Multigraph::bouquet(2).cutvertices(), vec![0]);
    }

    #[test]
    fn loops_do_not_matter_for_cuts() {
        let g = Multigraph::new(2, [(0, 1), (0, 0), (1, 1)]).unwrap();
        assert_eq!(g.bridges(), vec![0]);
        assert_eq!(edge_connectivity(&g), EdgeConnectivity::Finite(1));
        assert_eq!(g.cutvertices(), vec![0, 1]);
    }

    #[test]
    fn disconnected_has_zero_connectivity() {
        let g = Multigraph::new(3, [(0, 1)]).unwrap();
        assert_eq!(edge_connectivity(&g), EdgeConnectivity::Finite(0));
    }
}
