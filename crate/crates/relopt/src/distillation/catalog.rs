//! The cubic 3-edge-connected distillations of small exceedance, with fixed
//! labelings that the surgery formulas refer to.

use crate::graph::Multigraph;
use crate::{Error, Result};

fn build(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::new(n, edges.iter().copied()).expect("catalog edge lists are valid")
}

/// The prism on rails `L1 L2 L3 = 0 1 2` and `R1 R2 R3 = 3 4 5`.
///
/// Edge order: `l1 = L3L1, l2 = L1L2, l3 = L2L3`, then `r1, r2, r3` likewise,
/// then rungs `c_i = L_i R_i`.
pub fn prism() -> Multigraph {
    build(6, &[(2, 0), (0, 1), (1, 2), (5, 3), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])
}

/// `K_{3,3}` with letter vertices `A B C = 0 1 2` and index vertices
/// `1 2 3 = 3 4 5`. Edge `x_i` joins letter `x` to index `i`; the order is
/// `a1 a2 a3 b1 b2 b3 c1 c2 c3`.
pub fn k33() -> Multigraph {
    let mut e = Vec::new();
    for x in 0..3 {
        for i in 0..3 {
            e.push((x, 3 + i));
        }
    }
    build(6, &e)
}

/// Cycle `0..2k` with rungs joining opposite vertices.
pub fn mobius_ladder(k: usize) -> Multigraph {
    let n = 2 * k;
    let mut e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    e.extend((0..k).map(|i| (i, i + k)));
    build(n, &e)
}

/// The Wagner graph, the Möbius ladder on eight vertices.
pub fn wagner() -> Multigraph {
    mobius_ladder(4)
}

/// The 3-cube with vertices as bit strings.
pub fn cube() -> Multigraph {
    let mut e = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                e.push((v, v | bit));
            }
        }
    }
    build(8, &e)
}

/// The cubic 3-edge-connected graph on eight vertices with two triangles.
pub fn two_triangle_octet() -> Multigraph {
    build(8, &[(0, 1), (0, 6), (0, 7), (1, 3), (1, 7), (2, 4), (2, 5), (2, 7), (3, 4), (3, 6), (4, 5), (5, 6)])
}

/// The cubic 3-edge-connected graph on eight vertices with one triangle.
pub fn one_triangle_octet() -> Multigraph {
    build(8, &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 5), (1, 7), (2, 5), (2, 6), (3, 6), (4, 6), (4, 7), (5, 7)])
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram.
pub fn petersen() -> Multigraph {
    let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    e.extend((0..5).map(|i| (i, i + 5)));
    e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    build(10, &e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: &'static str,
    pub graph: Multigraph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub k: usize,
    pub members: Vec<NamedGraph>,
    /// Set when the list is known to be incomplete.
    pub partial: bool,
}

/// Cubic 3-edge-connected graphs of exceedance `k`; complete for `k <= 4`
/// and only the Petersen graph for `k = 5`.
pub fn catalog(k: usize) -> Result<Catalog> {
    let named = |name, graph| NamedGraph { name, graph };
    let (members, partial) = match k {
        1 => (vec![named("dipole3", Multigraph::dipole(3))], false),
        2 => (vec![named("K4", Multigraph::complete(4))], false),
        3 => (vec![named("Pi3", prism()), named("K33", k33())], false),
        4 => (
            vec![
                named("W", wagner()),
                named("C", cube()),
                named("T2", two_triangle_octet()),
                named("T1", one_triangle_octet()),
            ],
            false,
        ),
        5 => (vec![named("Petersen", petersen())], true),
        _ => return Err(Error::Precondition(format!("catalog exists for k in 1..=5, not {k}"))),
    };
    Ok(Catalog { k, members, partial })
}

/// Catalog member by name, case-insensitively.
pub fn named_distillation(name: &str) -> Result<Multigraph> {
    (1..=5)
        .flat_map(|k| catalog(k).expect("k in range").members)
        .find(|m| m.name.eq_ignore_ascii_case(name))
        .map(|m| m.graph)
        .ok_or_else(|| Error::UnknownName(name.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge_connectivity, is_isomorphic, EdgeConnectivity};

    #[test]
    fn members_are_cubic_three_edge_connected_with_right_exceedance() {
        for k in 1..=5 {
            let cat = catalog(k).unwrap();
            for m in &cat.members {
                let g = &m.graph;
                assert!(g.degrees().iter().all(|&d| d == 3), "{}", m.name);
                assert!(edge_connectivity(g).at_least(3), "{}", m.name);
                assert_eq!(g.exceedance(), k as i64, "{}", m.name);
            }
            for (i, a) in cat.members.iter().enumerate() {
                for b in &cat.members[i + 1..] {
                    assert!(!is_isomorphic(&a.graph, &b.graph).unwrap());
                }
            }
        }
        assert!(catalog(0).is_err());
        assert!(catalog(6).is_err());
    }

    #[test]
    fn landmark_invariants() {
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(edge_connectivity(&petersen()), EdgeConnectivity::Finite(3));
        assert!(is_isomorphic(&mobius_ladder(3), &k33()).unwrap());
        assert!(k33().is_bipartite() && !prism().is_bipartite());
        assert_eq!(cube().girth(), Some(4));
        assert_eq!(wagner().girth(), Some(4));
        assert_eq!(two_triangle_octet().girth(), Some(3));
        assert_eq!(one_triangle_octet().girth(), Some(3));
        assert!(catalog(5).unwrap().partial);
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(named_distillation("k33").unwrap(), k33());
        assert!(named_distillation("nope").is_err());
    }
}
