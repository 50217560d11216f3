//! Constructors for the optimal families of exceedance `k <= 3`, the
//! matching-cycling `K_{3,3}` family that is not optimal, named graph pairs
//! and conjectural generators for `k = 4, 5`.

use crate::distillation::catalog::{k33, petersen, prism, wagner};
use crate::distillation::{centered_division, WeightedDistillation};
use crate::graph::Multigraph;
use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// How much is claimed about a constructed graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    /// Strictly more reliable than every other graph of the same size.
    Unique,
    /// Optimal, but shares its polynomial with non-isomorphic graphs.
    NonUnique,
    /// Produced by an unproven rule; never asserted optimal.
    Conjectural,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Unique => "UNIQUE",
            Status::NonUnique => "NON-UNIQUE",
            Status::Conjectural => "CONJECTURAL",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Parameters behind a constructed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalSpec {
    pub k: i64,
    pub m: usize,
    pub n: usize,
    /// Standard chain length and centered remainder, `m = 3kq + r`.
    pub q: Option<i64>,
    pub r: Option<i64>,
    /// `m mod 3k`, the residue class the placement rule depends on.
    pub residue: Option<usize>,
    pub rule: &'static str,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalGraph {
    pub spec: OptimalSpec,
    pub graph: Multigraph,
    /// The weighting of the catalog distillation, for `k >= 1`.
    pub weighting: Option<WeightedDistillation>,
}

fn min_size(k: i64) -> usize {
    (k + 1).max(1) as usize
}

/// Weights `q` everywhere except `q + sign(r)` on `off`.
fn offset_weights(m_d: usize, q: i64, r: i64, off: &[usize]) -> Result<Vec<usize>> {
    let mut w = vec![q; m_d];
    for &id in off {
        w[id] += r.signum();
    }
    w.into_iter()
        .map(|x| usize::try_from(x).map_err(|_| Error::InvalidWeights("negative chain length".into())))
        .collect()
}

fn weighted_graph(
    k: i64,
    m: usize,
    d: Multigraph,
    off: impl Fn(i64) -> (&'static str, Vec<usize>),
    status: Status,
) -> Result<OptimalGraph> {
    let (q, r) = centered_division(m, k as usize);
    let (rule, ids) = off(r);
    debug_assert_eq!(ids.len(), r.unsigned_abs() as usize);
    let wd = WeightedDistillation::new(d.clone(), offset_weights(d.m(), q, r, &ids)?)?;
    let graph = wd.realize();
    let spec =
        OptimalSpec { k, m, n: graph.n(), q: Some(q), r: Some(r), residue: Some(m % (3 * k as usize)), rule, status };
    Ok(OptimalGraph { spec, graph, weighting: Some(wd) })
}

/// `K_4` edges in `complete(4)` order: `01 02 03 12 13 23`.
fn k4_off(r: i64) -> (&'static str, Vec<usize>) {
    match r {
        0 => ("perfectly balanced", vec![]),
        1 | -1 => ("single off-length chain", vec![0]),
        2 | -2 => ("off-length chains on a perfect matching", vec![0, 5]),
        3 => ("longer chains on a 3-path", vec![0, 3, 5]),
        _ => unreachable!("centered remainder for k = 2 lies in (-3, 3]"),
    }
}

/// `K_{3,3}` edges `a1 a2 a3 b1 b2 b3 c1 c2 c3` as ids `0..9`.
fn k33_off(r: i64) -> (&'static str, Vec<usize>) {
    match r {
        0 => ("perfectly balanced", vec![]),
        1 | -1 => ("single off-length chain", vec![0]),
        2 | -2 => ("off-length chains on a matching", vec![0, 4]),
        3 | -3 => ("off-length chains on a perfect matching", vec![0, 4, 8]),
        4 => ("longer chains on a 3-path and a disjoint edge", vec![0, 3, 4, 8]),
        -4 => ("shorter chains on two disjoint 2-paths", vec![0, 1, 5, 8]),
        _ => unreachable!("centered remainder for k = 3 lies in (-4.5, 4.5]"),
    }
}

/// The optimal `(m - k, m)`-graph for `k` in `-1..=3`.
pub fn optimal_graph(k: i64, m: usize) -> Result<OptimalGraph> {
    if !(-1..=3).contains(&k) {
        return Err(Error::Precondition(format!("optimal graphs are known for k in -1..=3, not {k}")));
    }
    if m < min_size(k) {
        return Err(Error::Precondition(format!("k = {k} needs m >= {}", min_size(k))));
    }
    let plain = |graph: Multigraph, rule, status| OptimalGraph {
        spec: OptimalSpec { k, m, n: graph.n(), q: None, r: None, residue: None, rule, status },
        graph,
        weighting: None,
    };
    match k {
        -1 => Ok(plain(Multigraph::path(m), "every tree has the same polynomial; path shown", Status::NonUnique)),
        0 => Ok(plain(Multigraph::cycle(m), "cycle", Status::Unique)),
        1 => weighted_graph(
            1,
            m,
            Multigraph::dipole(3),
            |r| match r {
                0 => ("perfectly balanced", vec![]),
                _ => ("single off-length chain", vec![0]),
            },
            Status::Unique,
        ),
        2 => weighted_graph(2, m, Multigraph::complete(4), k4_off, Status::Unique),
        _ => weighted_graph(3, m, k33(), k33_off, Status::Unique),
    }
}

/// Perfect matchings `M1 = {a1 b2 c3}`, `M2 = {a2 b3 c1}`, `M3 = {a3 b1 c2}`
/// of [`k33`], each edge in index order.
pub const K33_MATCHINGS: [[usize; 3]; 3] = [[0, 4, 8], [1, 5, 6], [2, 3, 7]];

/// Chain lengths of the matching-cycling family: insertions go to `M1`,
/// then `M2`, then `M3`, repeating, lowest index first.
pub fn wang_k3_weights(m: usize) -> Result<Vec<usize>> {
    if m < 9 {
        return Err(Error::Precondition(format!("the family starts at m = 9, not {m}")));
    }
    let mut w = vec![1; 9];
    for j in 0..m - 9 {
        let slot = j % 9;
        w[K33_MATCHINGS[slot / 3][slot % 3]] += 1;
    }
    Ok(w)
}

/// The matching-cycling weak `K_{3,3}`-subdivision; differs from
/// [`optimal_graph`] exactly when `m = 5 (mod 9)`.
pub fn wang_k3_graph(m: usize) -> Result<Multigraph> {
    Ok(WeightedDistillation::new(k33(), wang_k3_weights(m)?)?.realize())
}

/// Names accepted by [`named_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairName {
    Handcuffs,
    RomeroSafe(usize),
    WagnerRails(usize),
    Petersen611,
    Pi3Counterexample,
    K4Counterexample,
}

impl FromStr for PairName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        let (head, arg) = match norm.split_once('(') {
            Some((h, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(|| Error::UnknownName(s.into()))?;
                let q = inner.trim().parse().map_err(|_| Error::UnknownName(s.into()))?;
                (h.to_string(), Some(q))
            }
            None => (norm.clone(), None),
        };
        match (head.as_str(), arg) {
            ("handcuffs", None) => Ok(PairName::Handcuffs),
            ("romero_safe", Some(q)) => Ok(PairName::RomeroSafe(q)),
            ("wagner_rails", Some(q)) => Ok(PairName::WagnerRails(q)),
            ("petersen_6_11", None) => Ok(PairName::Petersen611),
            ("pi3_counterexample", None) => Ok(PairName::Pi3Counterexample),
            ("k4_counterexample", None) => Ok(PairName::K4Counterexample),
            _ => Err(Error::UnknownName(s.into())),
        }
    }
}

/// Two graphs of equal size, plus a third where the construction has one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphPair {
    pub g: Multigraph,
    pub g_prime: Multigraph,
    pub g_double_prime: Option<Multigraph>,
}

fn two_cycles_at(a: usize, b: usize, shared: bool) -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (0..a).map(|i| (i, (i + 1) % a)).collect();
    let off = if shared { a - 1 } else { a };
    let label = |i: usize| if shared && i == 0 { 0 } else { off + i };
    edges.extend((0..b).map(|i| (label(i), label((i + 1) % b))));
    if !shared {
        edges.push((0, a));
    }
    Multigraph::new(off + b, edges).expect("valid cycle layout")
}

/// Two pentagons joined by a bridge, and a triangle and an octagon sharing
/// a vertex; both are `(10, 11)`-graphs.
pub fn handcuffs() -> GraphPair {
    GraphPair { g: two_cycles_at(5, 5, false), g_prime: two_cycles_at(3, 8, true), g_double_prime: None }
}

fn realize(d: Multigraph, w: Vec<usize>) -> Result<Multigraph> {
    Ok(WeightedDistillation::new(d, w)?.realize())
}

/// Rails are ids `0..8` of [`wagner`] around the cycle, rungs `8..12`.
fn wagner_weights(rails: [usize; 8], rungs: [usize; 4]) -> Vec<usize> {
    rails.into_iter().chain(rungs).collect()
}

/// `m = 12q - 4`: shorter rails on a perfect matching of rails, against the
/// rail pattern `(q-1, q, q-1, q, q, q-1, q, q-1)`.
pub fn romero_safe(q: usize) -> Result<GraphPair> {
    if q < 2 {
        return Err(Error::Precondition(format!("romero_safe needs q >= 2, not {q}")));
    }
    let s = q - 1;
    let g = realize(wagner(), wagner_weights([s, q, s, q, s, q, s, q], [q; 4]))?;
    let g_prime = realize(wagner(), wagner_weights([s, q, s, q, q, s, q, s], [q; 4]))?;
    Ok(GraphPair { g, g_prime, g_double_prime: None })
}

/// The uniform Wagner subdivision `W_q` and `W'_q`, where one edge moves
/// from rail `0` to the adjacent rung `8`.
pub fn wagner_rails(q: usize) -> Result<GraphPair> {
    if q < 1 {
        return Err(Error::Precondition("wagner_rails needs q >= 1".into()));
    }
    let g = realize(wagner(), vec![q; 12])?;
    let mut rails = [q; 8];
    rails[0] -= 1;
    let mut rungs = [q; 4];
    rungs[0] += 1;
    let g_prime = realize(wagner(), wagner_weights(rails, rungs))?;
    Ok(GraphPair { g, g_prime, g_double_prime: None })
}

/// On six vertices: the complement of a 4-vertex path plus a disjoint edge,
/// and the complement of two disjoint 3-vertex paths.
pub fn petersen_6_11() -> GraphPair {
    let complement = |edges: &[(usize, usize)]| {
        Multigraph::new(6, edges.iter().copied()).and_then(|h| h.complement()).expect("simple graph on 6 vertices")
    };
    GraphPair {
        g: complement(&[(0, 1), (1, 2), (2, 3), (4, 5)]),
        g_prime: complement(&[(0, 1), (1, 2), (3, 4), (4, 5)]),
        g_double_prime: None,
    }
}

/// Prism weights with `l1 = r2 = 5` and the rest `1` (`m = 17`).
pub const PI3_COUNTEREXAMPLE_WEIGHTS: [usize; 9] = [5, 1, 1, 1, 5, 1, 1, 1, 1];

/// Reconnecting rails `l1` and `r1` across rung `c1` turns [`prism`] into a
/// `K_{3,3}` with the same edge ids.
pub fn pi3_reconnected() -> Multigraph {
    let mut e = prism().edges().to_vec();
    e[0] = (2, 3);
    e[3] = (5, 0);
    Multigraph::new(6, e).expect("valid reconnection")
}

/// The prism subdivision with two 5-chains, its reconnection to `K_{3,3}`
/// (the 5-chains become adjacent), and the `K_{3,3}` subdivision with the
/// two 5-chains disjoint.
pub fn pi3_counterexample() -> GraphPair {
    let w = PI3_COUNTEREXAMPLE_WEIGHTS.to_vec();
    let mut disjoint = vec![1; 9];
    disjoint[0] = 5;
    disjoint[4] = 5;
    GraphPair {
        g: realize(prism(), w.clone()).expect("valid weights"),
        g_prime: realize(pi3_reconnected(), w).expect("valid weights"),
        g_double_prime: Some(realize(k33(), disjoint).expect("valid weights")),
    }
}

/// `K_4` with center `0` and triangle `1 2 3`, edges `l1..l6` in the order
/// `01 23 02 13 03 12`.
pub fn k4_labeled() -> Multigraph {
    Multigraph::new(4, [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)]).expect("valid K4")
}

/// Weights `(l1..l6) = (3,3,1,1,1,5)`, against moving one edge of `l1` to
/// `l3`.
pub fn k4_counterexample() -> GraphPair {
    GraphPair {
        g: realize(k4_labeled(), vec![3, 3, 1, 1, 1, 5]).expect("valid weights"),
        g_prime: realize(k4_labeled(), vec![2, 3, 2, 1, 1, 5]).expect("valid weights"),
        g_double_prime: None,
    }
}

pub fn named_pair(name: PairName) -> Result<GraphPair> {
    match name {
        PairName::Handcuffs => Ok(handcuffs()),
        PairName::RomeroSafe(q) => romero_safe(q),
        PairName::WagnerRails(q) => wagner_rails(q),
        PairName::Petersen611 => Ok(petersen_6_11()),
        PairName::Pi3Counterexample => Ok(pi3_counterexample()),
        PairName::K4Counterexample => Ok(k4_counterexample()),
    }
}

/// Weighting rules for [`conjectural_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Balanced,
    /// Five longer chains on a Petersen drawing; needs `m = 5 (mod 15)`.
    AthSobelA,
    /// Ten longer chains on a Petersen drawing; needs `m = 10 (mod 15)`.
    AthSobelB,
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "balanced" => Ok(Flavor::Balanced),
            "ath_sobel_a" => Ok(Flavor::AthSobelA),
            "ath_sobel_b" => Ok(Flavor::AthSobelB),
            _ => Err(Error::UnknownName(s.into())),
        }
    }
}

/// The Petersen graph drawn as an octagon `0..8` with chords `0-4`, `2-6`,
/// and chords `1-5`, `7-3` each subdivided by one vertex (`8` on `1-5`
/// near `1`, `9` on `7-3` near `7`) with `8-9` joined.
///
/// Edge ids: octagon `0..8` (`i, i+1`), then `1-8, 8-5, 7-9, 9-3, 8-9, 0-4,
/// 2-6`.
pub fn petersen_octagon() -> Multigraph {
    let mut e: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    e.extend([(1, 8), (8, 5), (7, 9), (9, 3), (8, 9), (0, 4), (2, 6)]);
    Multigraph::new(10, e).expect("valid drawing")
}

/// Longer chains of the two drawings, as ids of [`petersen_octagon`].
pub const ATH_SOBEL_A: [usize; 5] = [0, 14, 13, 9, 11];
pub const ATH_SOBEL_B: [usize; 10] = [12, 9, 4, 13, 0, 1, 14, 6, 10, 11];

fn ath_sobel(m: usize, heavy: &[usize]) -> Result<OptimalGraph> {
    let extra = heavy.len();
    if m < 15 || m % 15 != extra {
        return Err(Error::Precondition(format!("this drawing needs m = {extra} (mod 15) and m >= 15")));
    }
    let q = m / 15;
    let mut w = vec![q; 15];
    for &id in heavy {
        w[id] += 1;
    }
    let wd = WeightedDistillation::new(petersen_octagon(), w)?;
    let graph = wd.realize();
    let (cq, cr) = centered_division(m, 5);
    let spec = OptimalSpec {
        k: 5,
        m,
        n: graph.n(),
        q: Some(cq),
        r: Some(cr),
        residue: Some(m % 15),
        rule: "fixed drawing with one extra edge on the marked chains",
        status: Status::Conjectural,
    };
    Ok(OptimalGraph { spec, graph, weighting: Some(wd) })
}

/// Generators for `k = 4` (Wagner) and `k = 5` (Petersen). Outputs are
/// experiment inputs and carry no optimality claim.
pub fn conjectural_graph(k: i64, m: usize, flavor: Flavor) -> Result<OptimalGraph> {
    match (k, flavor) {
        (4, Flavor::Balanced) => weighted_graph(
            4,
            m,
            wagner(),
            |r| {
                // Rungs are lengthened first; rails at even positions are
                // shortened first.
                let ids: Vec<usize> = if r >= 0 {
                    [8, 9, 10, 11, 0, 4].into_iter().take(r as usize).collect()
                } else {
                    [0, 2, 4, 6, 8].into_iter().take(r.unsigned_abs() as usize).collect()
                };
                ("rung-first lengthening, spaced-rail shortening", ids)
            },
            Status::Conjectural,
        ),
        (5, Flavor::Balanced) => weighted_graph(
            5,
            m,
            petersen(),
            |r| {
                // Spokes form a perfect matching; beyond five, alternate rim
                // edges of the outer and inner cycles.
                let order = [5, 6, 7, 8, 9, 0, 10, 2];
                ("off-length chains on the spoke matching first", order[..r.unsigned_abs() as usize].to_vec())
            },
            Status::Conjectural,
        ),
        (5, Flavor::AthSobelA) => ath_sobel(m, &ATH_SOBEL_A),
        (5, Flavor::AthSobelB) => ath_sobel(m, &ATH_SOBEL_B),
        _ => Err(Error::Precondition(format!("no conjectural generator for k = {k} with {flavor:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distillation::{balance_stats, proper_distillation};
    use crate::graph::{canonical_form_with_cap, is_isomorphic};
    use crate::reliability::spanning_tree_count;
    use num_bigint::BigUint;

    fn iso(a: &Multigraph, b: &Multigraph) -> bool {
        a.n() == b.n()
            && a.m() == b.m()
            && canonical_form_with_cap(a, 32).unwrap() == canonical_form_with_cap(b, 32).unwrap()
    }

    fn all_sizes() -> impl Iterator<Item = (i64, usize)> {
        (-1..=3i64).flat_map(|k| (min_size(k)..=min_size(k) + 14).map(move |m| (k, m)))
    }

    #[test]
    fn sizes_and_connectivity() {
        for (k, m) in all_sizes() {
            let o = optimal_graph(k, m).unwrap();
            assert_eq!(o.graph.m(), m, "k={k} m={m}");
            assert_eq!(o.graph.exceedance(), k, "k={k} m={m}");
            assert_eq!(o.spec.n, o.graph.n());
            assert!(o.graph.is_connected());
        }
        assert!(optimal_graph(4, 12).is_err());
        assert!(optimal_graph(2, 2).is_err());
    }

    #[test]
    fn weightings_are_balanced_with_balanced_vertex_counts() {
        for (k, m) in all_sizes().filter(|&(k, _)| k >= 1) {
            let wd = optimal_graph(k, m).unwrap().weighting.unwrap();
            assert!(wd.is_balanced(), "k={k} m={m}");
            let stats = balance_stats(&wd).unwrap();
            assert!(stats.balanced, "k={k} m={m}");
            if k >= 2 {
                assert!(stats.pi_v_balanced, "k={k} m={m}: {:?}", stats.pi_v);
            }
        }
    }

    #[test]
    fn theta_with_eleven_edges() {
        let (wd, _) = proper_distillation(&optimal_graph(1, 11).unwrap().graph).unwrap();
        let mut w = wd.weights().to_vec();
        w.sort_unstable();
        assert_eq!(w, vec![3, 4, 4]);
    }

    #[test]
    fn k3_with_fourteen_edges_shortens_two_disjoint_paths() {
        let o = optimal_graph(3, 14).unwrap();
        assert_eq!((o.spec.q, o.spec.r), (Some(2), Some(-4)));
        assert_eq!((o.graph.n(), o.graph.m()), (11, 14));
        let w = o.weighting.unwrap().weights().to_vec();
        assert_eq!(w.iter().filter(|&&x| x == 1).count(), 4);
    }

    #[test]
    fn perfectly_balanced_k4() {
        assert_eq!(optimal_graph(2, 6).unwrap().graph, Multigraph::complete(4));
    }

    #[test]
    fn small_sizes_collapse_to_bouquets() {
        assert_eq!(optimal_graph(1, 2).unwrap().graph, Multigraph::bouquet(2));
        assert!(is_isomorphic(&optimal_graph(2, 3).unwrap().graph, &Multigraph::bouquet(3)).unwrap());
        assert!(is_isomorphic(&optimal_graph(3, 4).unwrap().graph, &Multigraph::bouquet(4)).unwrap());
    }

    #[test]
    fn consecutive_sizes_differ_by_one_insertion_for_k_one_and_two() {
        // Below m = 3k some chains have length zero and growth is by expansion.
        for k in 1..=2i64 {
            for m in 3 * k as usize..3 * k as usize + 10 {
                let g = optimal_graph(k, m).unwrap().graph;
                let next = optimal_graph(k, m + 1).unwrap().graph;
                assert!((0..g.m()).any(|id| iso(&g.insert_vertex(id).unwrap(), &next)), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn wang_family_fails_exactly_at_five_mod_nine() {
        assert_eq!(wang_k3_graph(9).unwrap(), k33());
        for m in 9..=23 {
            let same = iso(&wang_k3_graph(m).unwrap(), &optimal_graph(3, m).unwrap().graph);
            assert_eq!(same, m % 9 != 5, "m={m}");
        }
        assert!(wang_k3_graph(8).is_err());
    }

    #[test]
    fn wang_at_fourteen_has_three_plus_two_long_chains() {
        let w = wang_k3_weights(14).unwrap();
        assert_eq!(w, vec![2, 2, 1, 1, 2, 2, 1, 1, 2]);
    }

    #[test]
    fn within_matching_choices_are_isomorphic() {
        for (base, matching) in [(vec![], K33_MATCHINGS[0]), (K33_MATCHINGS[0].to_vec(), K33_MATCHINGS[1])] {
            for used in 1..=2 {
                let mut graphs = Vec::new();
                for_each_subset(&matching, used, |ids| {
                    let mut w = vec![1; 9];
                    for &id in base.iter().chain(ids) {
                        w[id] += 1;
                    }
                    graphs.push(WeightedDistillation::new(k33(), w).unwrap().realize());
                });
                assert_eq!(graphs.len(), 3);
                assert!(graphs.iter().all(|g| iso(g, &graphs[0])));
            }
        }
    }

    fn for_each_subset(items: &[usize], size: usize, mut visit: impl FnMut(&[usize])) {
        crate::reliability::for_each_combination(items.len(), size, |idx| {
            let chosen: Vec<usize> = idx.iter().map(|&i| items[i]).collect();
            visit(&chosen);
        });
    }

    #[test]
    fn pair_names_parse() {
        assert_eq!("handcuffs".parse::<PairName>().unwrap(), PairName::Handcuffs);
        assert_eq!("romero_safe(3)".parse::<PairName>().unwrap(), PairName::RomeroSafe(3));
        assert_eq!("wagner-rails( 8 )".parse::<PairName>().unwrap(), PairName::WagnerRails(8));
        assert_eq!("Petersen_6_11".parse::<PairName>().unwrap(), PairName::Petersen611);
        assert!("wagner_rails".parse::<PairName>().is_err());
        assert!("nonsense".parse::<PairName>().is_err());
    }

    #[test]
    fn handcuff_pair() {
        let p = handcuffs();
        for g in [&p.g, &p.g_prime] {
            assert_eq!((g.n(), g.m()), (10, 11));
        }
        assert_eq!(p.g.bridges().len(), 1);
        assert!(p.g_prime.is_bridgeless());
        assert_eq!(spanning_tree_count(&p.g), BigUint::from(25u32));
        assert_eq!(spanning_tree_count(&p.g_prime), BigUint::from(24u32));
    }

    #[test]
    fn petersen_pair_degrees_and_trees() {
        let p = petersen_6_11();
        for g in [&p.g, &p.g_prime] {
            let mut d = g.degrees();
            d.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(d, vec![4, 4, 4, 4, 3, 3]);
        }
        assert_eq!(spanning_tree_count(&p.g), BigUint::from(224u32));
        assert_eq!(spanning_tree_count(&p.g_prime), BigUint::from(225u32));
    }

    #[test]
    fn wagner_move_tree_difference() {
        for q in 1..=9usize {
            let p = wagner_rails(q).unwrap();
            let t = |g| num_bigint::BigInt::from(spanning_tree_count(g));
            let q = q as i64;
            assert_eq!(t(&p.g_prime) - t(&p.g), num_bigint::BigInt::from((7 * q - 51) * q * q * q), "q={q}");
        }
    }

    #[test]
    fn romero_safe_sizes() {
        for q in 2..=4 {
            let p = romero_safe(q).unwrap();
            assert_eq!(p.g.m(), 12 * q - 4);
            assert_eq!(p.g_prime.m(), 12 * q - 4);
            assert_eq!(p.g.exceedance(), 4);
        }
        assert!(romero_safe(1).is_err());
    }

    #[test]
    fn pi3_triple_sizes() {
        let p = pi3_counterexample();
        assert!(is_isomorphic(&pi3_reconnected(), &k33()).unwrap());
        for g in [&p.g, &p.g_prime, p.g_double_prime.as_ref().unwrap()] {
            assert_eq!((g.n(), g.m()), (14, 17));
        }
        // In the reconnected graph the 5-chains l1 and r2 share vertex 3.
        let r = pi3_reconnected();
        assert_eq!(r.edges()[0], (2, 3));
        assert_eq!(r.edges()[4], (3, 4));
    }

    #[test]
    fn conjectural_examples() {
        let p = conjectural_graph(5, 15, Flavor::Balanced).unwrap();
        assert_eq!(p.graph, petersen());
        assert_eq!(p.spec.status, Status::Conjectural);
        assert_eq!(conjectural_graph(4, 12, Flavor::Balanced).unwrap().graph, wagner());
        for m in 13..=30 {
            let g = conjectural_graph(4, m, Flavor::Balanced).unwrap();
            assert_eq!(g.graph.m(), m);
            assert!(g.weighting.unwrap().is_balanced());
        }
        assert!(conjectural_graph(3, 12, Flavor::Balanced).is_err());
    }

    #[test]
    fn ath_sobel_drawings_are_petersen_with_imbalanced_vertex_counts() {
        assert!(is_isomorphic(&petersen_octagon(), &petersen()).unwrap());
        for (flavor, m) in [(Flavor::AthSobelA, 20), (Flavor::AthSobelB, 25), (Flavor::AthSobelA, 35)] {
            let g = conjectural_graph(5, m, flavor).unwrap();
            assert_eq!(g.graph.m(), m);
            let stats = balance_stats(g.weighting.as_ref().unwrap()).unwrap();
            assert!(stats.balanced);
            assert!(!stats.pi_v_balanced, "{flavor:?} m={m}: {:?}", stats.pi_v);
        }
        assert!(conjectural_graph(5, 21, Flavor::AthSobelA).is_err());
    }
}
