use super::{binomial_u128, EnumOptions};
use crate::graph::{edge_connectivity, Dsu, Multigraph};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Bonds (minimal edge cuts) and the split of disconnections by the size of
/// their smallest bond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BondCatalog {
    /// Bonds keyed by size; each is a sorted list of edge ids.
    pub bonds: BTreeMap<usize, Vec<Vec<usize>>>,
    /// `b[i]` is the number of bonds of size `i`, for `i <= m`.
    pub b: Vec<u64>,
    /// `d_split[i][j]` counts `i`-sets of edges whose deletion disconnects
    /// the graph and whose smallest contained bond has size `j`. Rows run
    /// up to `min(k + 2, m)`.
    pub d_split: Vec<Vec<u64>>,
}

impl BondCatalog {
    /// Sum of row `i` of `d_split`, which is `d_i`.
    pub fn d(&self, i: usize) -> u64 {
        self.d_split[i].iter().sum()
    }

    pub fn d_ij(&self, i: usize, j: usize) -> u64 {
        self.d_split.get(i).and_then(|row| row.get(j)).copied().unwrap_or(0)
    }
}

/// Calls `visit` with every `size`-subset of `0..m`, in lexicographic order.
pub fn for_each_combination(m: usize, size: usize, mut visit: impl FnMut(&[usize])) {
    if size > m {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        visit(&idx);
        let Some(pos) = (0..size).rev().find(|&p| idx[p] < m - size + p) else {
            return;
        };
        idx[pos] += 1;
        for p in pos + 1..size {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

/// Every bond of a connected graph, from the vertex bipartitions with both
/// sides connected. Cost is `2^(n-1)` unions per edge.
pub fn bonds_by_bipartition(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for rest in 0u64..(1 << (n - 1)) - 1 {
        // Vertex 0 is always inside; bit v-1 of `rest` marks vertex v.
        let inside = |v: usize| v == 0 || rest >> (v - 1) & 1 == 1;
        let mut dsu = Dsu::new(n);
        let mut cut = Vec::new();
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            if inside(u) == inside(v) {
                dsu.union(u, v);
            } else {
                cut.push(id);
            }
        }
        if dsu.components() == 2 {
            out.push(cut);
        }
    }
    out
}

/// Bonds found by scanning every edge subset; for graphs with many vertices
/// but few edges.
fn bonds_by_subsets(g: &Multigraph) -> Vec<Vec<usize>> {
    let m = g.m();
    let mut out = Vec::new();
    for mask in 1u64..1 << m {
        let dsu = g.dsu_where(|id| mask >> id & 1 == 0);
        if dsu.components() != 2 {
            continue;
        }
        let set: Vec<usize> = (0..m).filter(|&id| mask >> id & 1 == 1).collect();
        if set.iter().all(|&id| {
            let (u, v) = g.edges()[id];
            !dsu.same(u, v)
        }) {
            out.push(set);
        }
    }
    out
}

/// Size of the smallest bond inside a disconnecting set, given the classes
/// of `G - E`: the minimum cut of the quotient by those classes.
pub(crate) fn smallest_bond_size(g: &Multigraph, removed: &[usize], dsu: &Dsu) -> usize {
    let mut index = vec![usize::MAX; g.n()];
    let mut classes = 0;
    for v in 0..g.n() {
        let r = dsu.find(v);
        if index[r] == usize::MAX {
            index[r] = classes;
            classes += 1;
        }
    }
    let edges = removed.iter().map(|&id| {
        let (u, v) = g.edges()[id];
        (index[dsu.find(u)], index[dsu.find(v)])
    });
    let quotient = Multigraph::new(classes, edges).expect("class indices are in range");
    edge_connectivity(&quotient).finite().expect("quotient has at least two classes")
}

pub fn bond_catalog(g: &Multigraph, opts: &EnumOptions) -> Result<BondCatalog> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (n, m) = (g.n(), g.m());
    let found = if n <= opts.bipartition_cap {
        bonds_by_bipartition(g)
    } else if m <= opts.subset_cap {
        bonds_by_subsets(g)
    } else {
        return Err(Error::CapExceeded { what: "bipartition vertex", limit: opts.bipartition_cap, actual: n });
    };
    let mut bonds: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    let mut b = vec![0u64; m + 1];
    for bond in found {
        b[bond.len()] += 1;
        bonds.entry(bond.len()).or_default().push(bond);
    }
    for list in bonds.values_mut() {
        list.sort();
    }

    let rows = if n == 1 { 0 } else { ((g.exceedance() + 2).max(0) as usize).min(m) };
    let work: u128 = (0..=rows).map(|i| binomial_u128(m as u64, i as u64)).sum();
    if work > 1u128 << opts.subset_cap.min(100) {
        return Err(Error::CapExceeded { what: "subset enumeration edge", limit: opts.subset_cap, actual: m });
    }
    let mut d_split: Vec<Vec<u64>> = (0..=rows).map(|i| vec![0; i + 1]).collect();
    let mut removed_flag = vec![false; m];
    for (i, row) in d_split.iter_mut().enumerate() {
        for_each_combination(m, i, |set| {
            set.iter().for_each(|&id| removed_flag[id] = true);
            let dsu = g.dsu_where(|id| !removed_flag[id]);
            if dsu.components() > 1 {
                row[smallest_bond_size(g, set, &dsu)] += 1;
            }
            set.iter().for_each(|&id| removed_flag[id] = false);
        });
    }
    Ok(BondCatalog { bonds, b, d_split })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reliability::profile;

    fn is_cut(g: &Multigraph, set: &[usize]) -> bool {
        g.dsu_where(|id| !set.contains(&id)).components() > 1
    }

    #[test]
    fn combinations_are_complete() {
        let mut seen = Vec::new();
        for_each_combination(5, 2, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len(), 10);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[9], vec![3, 4]);
        let mut empty = 0;
        for_each_combination(3, 0, |_| empty += 1);
        assert_eq!(empty, 1);
    }

    #[test]
    fn k4_has_only_stars_up_to_three() {
        let cat = bond_catalog(&Multigraph::complete(4), &EnumOptions::default()).unwrap();
        assert_eq!(cat.b[1], 0);
        assert_eq!(cat.b[2], 0);
        assert_eq!(cat.b[3], 4);
        assert_eq!(cat.b[4], 3);
    }

    #[test]
    fn dipole_has_one_bond() {
        let cat = bond_catalog(&Multigraph::dipole(3), &EnumOptions::default()).unwrap();
        assert_eq!(cat.b[3], 1);
        assert_eq!(cat.b.iter().sum::<u64>(), 1);
    }

    #[test]
    fn bonds_are_minimal_and_subset_scan_agrees() {
        let g = Multigraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (0, 0), (3, 4)]).unwrap();
        let mut a = bonds_by_bipartition(&g);
        let mut b = bonds_by_subsets(&g);
        a.sort();
        b.sort();
        assert_eq!(a, b);
        for bond in &a {
            assert!(is_cut(&g, bond));
            for skip in bond {
                let smaller: Vec<usize> = bond.iter().copied().filter(|x| x != skip).collect();
                assert!(!is_cut(&g, &smaller));
            }
        }
    }

    #[test]
    fn split_rows_sum_to_d() {
        let g = Multigraph::complete(5);
        let cat = bond_catalog(&g, &EnumOptions::default()).unwrap();
        let p = profile(&g, &EnumOptions::default()).unwrap();
        for i in 0..cat.d_split.len() {
            assert_eq!(num_bigint::BigUint::from(cat.d(i)), p.d[i]);
        }
        // Four edges of K5 that disconnect it isolate a vertex.
        assert_eq!(cat.d_ij(4, 4), 5);
    }
}
