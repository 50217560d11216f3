//! Edge shifting: expand a new edge `e'` at `v` so that `{e, e'}` is a
//! 2-bond, then contract `e`. Shifting preserves every `d_i`, so its closure
//! partitions graphs into classes with equal reliability.

use crate::distillation::{chain_decomposition, nontrivial_two_bonds};
use crate::graph::{canonical_form, Expansion, Multigraph, DEFAULT_ISO_CAP};
use crate::{Error, Result};
use std::collections::{HashSet, VecDeque};

/// Default bound on the number of canonical forms in one class.
pub const DEFAULT_CLASS_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftMove {
    pub edge: usize,
    pub vertex: usize,
    pub expansion: Expansion,
}

/// Whether `a` and `b` together form a bond of `g`.
fn is_two_bond(g: &Multigraph, a: usize, b: usize) -> bool {
    let base = g.component_count();
    g.dsu_where(|id| id != a).components() == base
        && g.dsu_where(|id| id != b).components() == base
        && g.dsu_where(|id| id != a && id != b).components() == base + 1
}

/// Applies a shift. The new edge takes over the id of the contracted one, so
/// all other ids are preserved.
pub fn shift_edge(g: &Multigraph, mv: &ShiftMove) -> Result<Multigraph> {
    let e = mv.edge;
    g.edge(e)?;
    if g.is_loop(e) {
        return Err(Error::ContractLoop(e));
    }
    let (expanded, new_edge) = g.expand_at_vertex(mv.vertex, &mv.expansion)?;
    if !is_two_bond(&expanded, e, new_edge) {
        return Err(Error::Precondition(format!(
            "expansion at {} does not make edge {e} and the new edge a 2-bond",
            mv.vertex
        )));
    }
    let (contracted, map) = expanded.contract_edge(e)?;
    let mut edges = Vec::with_capacity(g.m());
    for id in 0..g.m() {
        let source = if id == e { new_edge } else { id };
        let now = map.get(source).expect("only the shifted edge is contracted");
        edges.push(contracted.edges()[now]);
    }
    Multigraph::new(contracted.n(), edges)
}

/// Every legal shift of `g`, in a fixed order. Expansions are taken with the
/// first incidence pinned, which drops mirror-image duplicates.
pub fn enumerate_shifts(g: &Multigraph) -> Vec<ShiftMove> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        for expansion in Expansion::all_at(g, v, true) {
            let Ok((expanded, new_edge)) = g.expand_at_vertex(v, &expansion) else { continue };
            for e in (0..g.m()).filter(|&e| !g.is_loop(e)) {
                if is_two_bond(&expanded, e, new_edge) {
                    out.push(ShiftMove { edge: e, vertex: v, expansion: expansion.clone() });
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct EquivalenceClass {
    pub members: Vec<Multigraph>,
    pub keys: HashSet<Vec<u8>>,
    /// False when the cap stopped the search early.
    pub complete: bool,
}

/// Breadth-first closure under shifts, up to isomorphism.
pub fn equivalence_class(g: &Multigraph, size_cap: usize) -> Result<EquivalenceClass> {
    if g.n() > DEFAULT_ISO_CAP {
        return Err(Error::CapExceeded { what: "isomorphism vertex", limit: DEFAULT_ISO_CAP, actual: g.n() });
    }
    let mut keys = HashSet::from([canonical_form(g)?]);
    let mut members = vec![g.clone()];
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(h) = queue.pop_front() {
        for mv in enumerate_shifts(&h) {
            let next = shift_edge(&h, &mv)?;
            if next.n() > DEFAULT_ISO_CAP {
                continue;
            }
            if keys.insert(canonical_form(&next)?) {
                if keys.len() > size_cap {
                    keys.remove(&canonical_form(&next)?);
                    return Ok(EquivalenceClass { members, keys, complete: false });
                }
                members.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(EquivalenceClass { members, keys, complete: true })
}

/// An equivalent graph whose 2-bonds are all trivial: while some pair of
/// chains forms a 2-bond, shift every edge of the second chain into the first.
pub fn to_3ec_representative(g: &Multigraph) -> Result<Multigraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_bridgeless() {
        return Err(Error::Precondition("graph has a bridge".into()));
    }
    if g.exceedance() < 1 {
        return Err(Error::Precondition("exceedance must be at least 1".into()));
    }
    let mut g = g.clone();
    while let Some(&(a, b)) = nontrivial_two_bonds(&g).first() {
        let chains = chain_decomposition(&g);
        let owner = chains.owner(g.m());
        let to_move = chains.chains[owner[b]].edges.clone();
        for e in to_move {
            let chains = chain_decomposition(&g);
            let target = &chains.chains[chains.owner(g.m())[a]];
            let v = target.ends.0;
            let mv = ShiftMove { edge: e, vertex: v, expansion: Expansion::isolating(&g, v, target.edges[0]) };
            g = shift_edge(&g, &mv)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distillation::cubic_weak_distillation;
    use crate::graph::is_isomorphic;
    use crate::reliability::{profile, EnumOptions};

    /// A 4-cycle `u1 u2 u3 u4` whose sides carry 2, 2, 1 and 1 parallel edges.
    fn bundle_ring() -> Multigraph {
        Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn d_vector(g: &Multigraph) -> Vec<num_bigint::BigUint> {
        profile(g, &EnumOptions::default()).unwrap().d
    }

    #[test]
    fn shifting_a_single_edge_past_a_bundle() {
        let g = bundle_ring();
        // Split vertex 1 between its two bundles, then contract edge 4 (2-3).
        let split = Expansion {
            choices: vec![
                (0, crate::Incidence::First),
                (1, crate::Incidence::First),
                (2, crate::Incidence::Second),
                (3, crate::Incidence::Second),
            ],
        };
        let h = shift_edge(&g, &ShiftMove { edge: 4, vertex: 1, expansion: split }).unwrap();
        let alternating = Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&h, &alternating).unwrap());
        assert!(!is_isomorphic(&h, &g).unwrap());
        assert_eq!(d_vector(&h), d_vector(&g));
        let class = equivalence_class(&g, DEFAULT_CLASS_CAP).unwrap();
        assert!(class.complete);
        assert!(class.keys.contains(&canonical_form(&alternating).unwrap()));
    }

    #[test]
    fn moving_a_loop_along_its_cycle() {
        // Cycle u1 u2 x y = 0 1 2 3, loop at u2, digon x z with z = 4.
        let g = Multigraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 1), (2, 4), (2, 4)]).unwrap();
        let x = Expansion {
            choices: vec![
                (0, crate::Incidence::First),
                (1, crate::Incidence::Second),
                (4, crate::Incidence::LoopAtFirst),
            ],
        };
        let h = shift_edge(&g, &ShiftMove { edge: 0, vertex: 1, expansion: x }).unwrap();
        assert_eq!(h.loop_count(0), 1);
        assert!(!is_isomorphic(&h, &g).unwrap());
        assert_eq!(d_vector(&h), d_vector(&g));
    }

    #[test]
    fn trivial_shift_within_a_chain() {
        let g = Multigraph::cycle(5).insert_vertex(0).unwrap();
        let c = Multigraph::cycle(6);
        for mv in enumerate_shifts(&c) {
            assert!(is_isomorphic(&shift_edge(&c, &mv).unwrap(), &c).unwrap());
        }
        assert!(is_isomorphic(&g, &c).unwrap());
        assert_eq!(equivalence_class(&c, 10).unwrap().keys.len(), 1);
    }

    #[test]
    fn complete_graph_is_alone_in_its_class() {
        let class = equivalence_class(&Multigraph::complete(4), DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(class.keys.len(), 1);
    }

    #[test]
    fn illegal_shift_is_refused() {
        let k4 = Multigraph::complete(4);
        let mv = ShiftMove { edge: 5, vertex: 0, expansion: Expansion::isolating(&k4, 0, 0) };
        assert!(matches!(shift_edge(&k4, &mv), Err(Error::Precondition(_))));
    }

    #[test]
    fn representative_has_only_trivial_two_bonds() {
        let g = bundle_ring();
        let rep = to_3ec_representative(&g).unwrap();
        assert!(nontrivial_two_bonds(&rep).is_empty());
        assert_eq!(d_vector(&rep), d_vector(&g));
        assert!(cubic_weak_distillation(&rep).is_ok());
        let k4 = Multigraph::complete(4);
        assert_eq!(to_3ec_representative(&k4).unwrap(), k4);
    }
}
