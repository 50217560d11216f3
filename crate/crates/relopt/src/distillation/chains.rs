use crate::graph::Multigraph;

/// A maximal path whose interior vertices are loopless 2-vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// Edge ids in walking order from `ends.0` to `ends.1`.
    pub edges: Vec<usize>,
    pub ends: (usize, usize),
    pub interior: Vec<usize>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub chains: Vec<Chain>,
    /// Set when the graph itself is a cycle, reported as one closed chain.
    pub is_cycle: bool,
}

impl ChainDecomposition {
    /// `owner[e]` is the index of the chain containing edge `e`.
    pub fn owner(&self, m: usize) -> Vec<usize> {
        let mut owner = vec![usize::MAX; m];
        for (i, c) in self.chains.iter().enumerate() {
            for &e in &c.edges {
                owner[e] = i;
            }
        }
        owner
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.chains.iter().map(Chain::len).collect()
    }
}

/// Whether `v` can sit inside a chain.
pub(crate) fn is_internal(g: &Multigraph, v: usize) -> bool {
    g.degree(v) == 2 && g.loop_count(v) == 0
}

pub fn chain_decomposition(g: &Multigraph) -> ChainDecomposition {
    let incident: Vec<Vec<usize>> = (0..g.n()).map(|v| g.incident_edges(v)).collect();
    let internal: Vec<bool> = (0..g.n()).map(|v| is_internal(g, v)).collect();
    let mut seen = vec![false; g.m()];
    let mut chains = Vec::new();

    let walk = |start: usize, first: usize, seen: &mut Vec<bool>| -> Chain {
        let mut edges = vec![first];
        let mut interior = Vec::new();
        seen[first] = true;
        let mut at = g.other_end(first, start);
        let mut via = first;
        while internal[at] && at != start {
            interior.push(at);
            via = *incident[at].iter().find(|&&e| e != via).expect("2-vertex has a second edge");
            seen[via] = true;
            edges.push(via);
            at = g.other_end(via, at);
        }
        Chain { edges, ends: (start, at), interior }
    };

    for v in (0..g.n()).filter(|&v| !internal[v]) {
        for &e in &incident[v] {
            if !seen[e] {
                chains.push(walk(v, e, &mut seen));
            }
        }
    }
    // Whatever is left forms closed cycles of 2-vertices.
    for e in 0..g.m() {
        if !seen[e] {
            let start = g.edges()[e].0;
            chains.push(walk(start, e, &mut seen));
        }
    }
    let is_cycle = g.m() > 0 && internal.iter().all(|&x| x) && g.is_connected();
    ChainDecomposition { chains, is_cycle }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_graph_chains() {
        // Chains of lengths 4, 3 and 4 between vertices 0 and 1.
        let mut e = vec![(0, 2), (2, 3), (3, 4), (4, 1)];
        e.extend([(0, 5), (5, 6), (6, 1)]);
        e.extend([(0, 7), (7, 8), (8, 9), (9, 1)]);
        let g = Multigraph::new(10, e).unwrap();
        let c = chain_decomposition(&g);
        let mut lens = c.lengths();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 4, 4]);
        assert!(!c.is_cycle);
        assert!(c.chains.iter().all(|ch| ch.ends == (0, 1)));
    }

    #[test]
    fn complete_graph_has_unit_chains() {
        let c = chain_decomposition(&Multigraph::complete(4));
        assert_eq!(c.lengths(), vec![1; 6]);
    }

    #[test]
    fn cycle_is_one_closed_chain() {
        let c = chain_decomposition(&Multigraph::cycle(5));
        assert!(c.is_cycle);
        assert_eq!(c.lengths(), vec![5]);
        assert_eq!(c.chains[0].ends, (0, 0));
    }

    #[test]
    fn hanging_cycle_is_a_closed_chain_at_its_attachment() {
        // Triangle 0-1-2 with a pendant square at 0 through 3, 4, 5.
        let g = Multigraph::new(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let c = chain_decomposition(&g);
        assert_eq!(c.lengths(), vec![3, 4]);
        assert!(c.chains.iter().all(|ch| ch.ends == (0, 0)));
        let owner = c.owner(g.m());
        assert!(owner.iter().all(|&o| o < 2));
    }
}
