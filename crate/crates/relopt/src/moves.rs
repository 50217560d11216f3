//! Moving edges between chains. A subset scan counts the disconnections a
//! move destroys and creates; closed-form deltas for weak subdivisions of
//! `K_4`, the prism and `K_{3,3}` are checked against it and against full
//! profiles. Also Wagner spanning-tree counts, bond classification and
//! bridge surgery.
//!
//! Every delta is `d(original) - d(modified)`.

use crate::distillation::catalog::{k33, prism, wagner};
use crate::distillation::WeightedDistillation;
use crate::graph::Multigraph;
use crate::optimal::{k4_labeled, pi3_reconnected};
use crate::reliability::{
    bond_catalog, bonds_by_bipartition, for_each_combination, profile, spanning_tree_count, EnumOptions,
};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::ToPrimitive;

/// Whether a closed form is returned bare or first compared with
/// enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Formula,
    Oracle(EnumOptions),
}

/// Counts behind `d_i(G) - d_i(G')` for one size `i`.
///
/// `x[j]` counts `i`-sets containing the moved edge `e` that contain exactly
/// one bond of `G`, of size `j` and through `e`, and no bond of `G'` through
/// `e`. `x_prime` is the same with the graphs swapped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveDelta {
    pub i: usize,
    pub x: Vec<u64>,
    pub x_prime: Vec<u64>,
}

impl MoveDelta {
    /// `x_{i,j} - x'_{i,j}`.
    pub fn term(&self, j: usize) -> i128 {
        i128::from(self.x[j]) - i128::from(self.x_prime[j])
    }

    /// `d_i(G) - d_i(G')`.
    pub fn net(&self) -> i128 {
        (0..=self.i).map(|j| self.term(j)).sum()
    }
}

/// One direction of the scan.
fn one_sided(g: &Multigraph, gp: &Multigraph, e: usize, i: usize) -> Vec<u64> {
    let m = g.m();
    let others: Vec<usize> = (0..m).filter(|&id| id != e).collect();
    let (pu, pv) = gp.edges()[e];
    let mut x = vec![0u64; i + 1];
    let mut removed = vec![false; m];
    for_each_combination(others.len(), i - 1, |picked| {
        removed[e] = true;
        picked.iter().for_each(|&p| removed[others[p]] = true);
        let dsu = g.dsu_where(|id| !removed[id]);
        if dsu.components() == 2 {
            let (u, v) = g.edges()[e];
            if !dsu.same(u, v) {
                let j = (0..m)
                    .filter(|&id| {
                        removed[id] && {
                            let (a, b) = g.edges()[id];
                            !dsu.same(a, b)
                        }
                    })
                    .count();
                if gp.dsu_where(|id| !removed[id]).same(pu, pv) {
                    x[j] += 1;
                }
            }
        }
        removed.iter_mut().for_each(|r| *r = false);
    });
    x
}

/// Subset scan over the `i`-sets containing `e`, for `G'` obtained from
/// `G` by moving `e`; the two graphs share edge ids.
pub fn count_xij(g: &Multigraph, g_prime: &Multigraph, e: usize, i: usize, opts: &EnumOptions) -> Result<MoveDelta> {
    if g.m() != g_prime.m() || g.n() != g_prime.n() {
        return Err(Error::Precondition("both graphs need the same number of vertices and edges".into()));
    }
    g.edge(e)?;
    if !g.is_connected() || !g_prime.is_connected() {
        return Err(Error::Disconnected);
    }
    if i == 0 || i > g.m() {
        return Err(Error::Precondition(format!("set size {i} must lie in 1..={}", g.m())));
    }
    if g.m() > opts.subset_cap {
        return Err(Error::CapExceeded { what: "subset enumeration edge", limit: opts.subset_cap, actual: g.m() });
    }
    let (x, x_prime) = opts.run(|| rayon::join(|| one_sided(g, g_prime, e, i), || one_sided(g_prime, g, e, i)));
    Ok(MoveDelta { i, x, x_prime })
}

/// A graph and the result of moving edge `edge`, with aligned edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovedPair {
    pub g: Multigraph,
    pub g_prime: Multigraph,
    pub edge: usize,
}

/// Moves one edge from chain `from` to chain `to` of a weak subdivision.
/// The moved edge is the first of chain `from` and the last of chain `to`;
/// every other edge keeps its position in its chain.
pub fn move_edge_between_chains(wd: &WeightedDistillation, from: usize, to: usize) -> Result<MovedPair> {
    let w = wd.weights();
    if from == to || from >= w.len() || to >= w.len() {
        return Err(Error::Precondition(format!("cannot move from chain {from} to chain {to}")));
    }
    if w[from] == 0 {
        return Err(Error::Precondition(format!("chain {from} is empty")));
    }
    let mut moved = w.to_vec();
    moved[from] -= 1;
    moved[to] += 1;
    let after = wd.with_weights(moved)?;
    let a = wd.realize_with_chains();
    let b = after.realize_with_chains();
    let mut target = vec![usize::MAX; a.graph.m()];
    for (c, chain) in a.chains.iter().enumerate() {
        for (pos, &id) in chain.iter().enumerate() {
            target[id] = match c {
                _ if c == from && pos == 0 => *b.chains[to].last().expect("target chain is nonempty"),
                _ if c == from => b.chains[c][pos - 1],
                _ => b.chains[c][pos],
            };
        }
    }
    let edge = a.chains[from][0];
    let g_prime = Multigraph::new(b.graph.n(), target.iter().map(|&t| b.graph.edges()[t]))?;
    Ok(MovedPair { g: a.graph, g_prime, edge })
}

fn d_at(g: &Multigraph, i: usize, opts: &EnumOptions) -> Result<BigInt> {
    Ok(BigInt::from(profile(g, opts)?.d[i].clone()))
}

fn profile_delta(a: &Multigraph, b: &Multigraph, i: usize, opts: &EnumOptions) -> Result<i128> {
    (d_at(a, i, opts)? - d_at(b, i, opts)?).to_i128().ok_or_else(|| Error::Precondition("delta overflows".into()))
}

fn agree(what: &'static str, formula: i128, oracle: i128) -> Result<()> {
    if formula == oracle {
        Ok(())
    } else {
        Err(Error::OracleMismatch { what, formula: formula.to_string(), oracle: oracle.to_string() })
    }
}

/// Compares a closed-form `d_i` delta for a move with the subset scan and
/// with full profiles.
fn check_move(what: &'static str, pair: &MovedPair, i: usize, formula: i128, opts: &EnumOptions) -> Result<()> {
    agree(what, formula, count_xij(&pair.g, &pair.g_prime, pair.edge, i, opts)?.net())?;
    agree(what, formula, profile_delta(&pair.g, &pair.g_prime, i, opts)?)
}

fn int(x: usize) -> i128 {
    x as i128
}

/// Chain lengths `l1..l6` of a weak `K_4`-subdivision, labeled as in
/// [`k4_labeled`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K4Labels(pub [usize; 6]);

impl K4Labels {
    pub fn weighting(&self) -> Result<WeightedDistillation> {
        WeightedDistillation::new(k4_labeled(), self.0.to_vec())
    }
}

/// `d_3(G) - d_3(G')` for moving one edge from `l1` to `l3`.
pub fn k4_move_delta_d3(labels: &K4Labels, check: Check) -> Result<i128> {
    let l = labels.0.map(int);
    if l[0] < 1 {
        return Err(Error::Precondition("l1 must be positive".into()));
    }
    let formula = (l[0] - 1 - l[2]) * (l[1] + l[3] + l[5]) + (l[3] - l[1]) * l[5];
    if let Check::Oracle(opts) = check {
        let pair = move_edge_between_chains(&labels.weighting()?, 0, 2)?;
        check_move("K4 move d3", &pair, 3, formula, &opts)?;
    }
    Ok(formula)
}

/// Chain lengths of a weak prism subdivision: left rails `l`, right rails
/// `r` and rungs `c`, in the edge order of [`prism`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pi3Labels {
    pub l: [usize; 3],
    pub r: [usize; 3],
    pub c: [usize; 3],
}

impl Pi3Labels {
    pub fn weights(&self) -> Vec<usize> {
        self.l.iter().chain(&self.r).chain(&self.c).copied().collect()
    }

    pub fn weighting(&self) -> Result<WeightedDistillation> {
        WeightedDistillation::new(prism(), self.weights())
    }

    /// `delta_i = l_i - r_i` for `i` in `1..=3`.
    pub fn delta(&self, i: usize) -> i128 {
        int(self.l[i - 1]) - int(self.r[i - 1])
    }

    /// `sigma_i = l_i + r_i`.
    pub fn sigma(&self, i: usize) -> i128 {
        int(self.l[i - 1]) + int(self.r[i - 1])
    }
}

/// Per-bond-size terms `x_{i,j} - x'_{i,j}` for moving one edge from `l1`
/// to `r1`: `[j=2, j=3]` for `i = 3` and `[j=2, j=3, j=4]` for `i = 4`.
pub fn pi3_single_move_terms(labels: &Pi3Labels, check: Check) -> Result<(Vec<i128>, Vec<i128>)> {
    let (d, s) = (|i| labels.delta(i), |i| labels.sigma(i));
    let [l1, l2, l3] = labels.l.map(int);
    let [r1, r2, r3] = labels.r.map(int);
    let [c1, c2, c3] = labels.c.map(int);
    if l1 < 1 {
        return Err(Error::Precondition("l1 must be positive".into()));
    }
    let cc = c1 + c2 + c3;
    let cx = c1 * c2 + c1 * c3 + c2 * c3;
    let d3 = vec![(d(1) - 1) * (cc + s(2) + s(3)), c1 * d(2) + c3 * d(3)];
    let d4 = vec![
        ((l1 - 1) - r1) * (cx + c1 * s(3) + c3 * s(2) + c2 * (s(2) + s(3)) + s(2) * s(3)),
        c1 * (l2 - r2) * (c2 + c3 + s(3)) + c3 * (l3 - r3) * (c1 + c2 + s(2)),
        c1 * c2 * (l3 - r3) + c3 * c2 * (l2 - r2),
    ];
    if let Check::Oracle(opts) = check {
        let pair = move_edge_between_chains(&labels.weighting()?, 0, 3)?;
        for (i, terms) in [(3, &d3), (4, &d4)] {
            let row = count_xij(&pair.g, &pair.g_prime, pair.edge, i, &opts)?;
            for (offset, &t) in terms.iter().enumerate() {
                agree("prism move term", t, row.term(offset + 2))?;
            }
            agree("prism move, smallest bonds", 0, row.term(1))?;
            agree("prism move", terms.iter().sum(), profile_delta(&pair.g, &pair.g_prime, i, &opts)?)?;
        }
    }
    Ok((d3, d4))
}

/// `(d_3(G) - d_3(G''), d_4(G) - d_4(G''))` where `G''` moves one edge from
/// `l1` to `r1` and then one from `r3` to `l3`.
pub fn pi3_double_move_deltas(labels: &Pi3Labels, check: Check) -> Result<(i128, i128)> {
    let (d, s) = (|i| labels.delta(i), |i| labels.sigma(i));
    let [c1, c2, _] = labels.c.map(int);
    if labels.l[0] < 1 || labels.r[2] < 1 {
        return Err(Error::Precondition("l1 and r3 must be positive".into()));
    }
    let d3 =
        (d(1) - 1) * (c1 + c2 + s(2) + s(3)) + (-d(3) - 1) * (c1 + s(1) + s(2)) + c1 * d(2) + c2 * (-d(3) - 1 - d(2));
    let d4 = (d(1) - 1) * (c1 * s(3) + c2 * (s(2) + s(3)) + s(2) * s(3))
        + c1 * d(2) * s(3)
        + (-d(3) - 1) * (c1 * (s(1) + s(2)) + s(1) * s(2))
        + c2 * s(1) * (-d(3) - 1 - d(2));
    if let Check::Oracle(opts) = check {
        let mut w = labels.weights();
        w[0] -= 1;
        w[3] += 1;
        w[2] += 1;
        w[5] -= 1;
        let g = labels.weighting()?.realize();
        let g2 = WeightedDistillation::new(prism(), w)?.realize();
        agree("prism double move d3", d3, profile_delta(&g, &g2, 3, &opts)?)?;
        agree("prism double move d4", d4, profile_delta(&g, &g2, 4, &opts)?)?;
    }
    Ok((d3, d4))
}

/// `(b_3(G) - b_3(G'), d_4(G) - d_4(G'))` for reconnecting rails `l1` and
/// `r1` across rung `c1`, which turns the prism into `K_{3,3}` with the
/// same chain lengths. `d_3` changes by the same amount as `b_3`.
pub fn pi3_reconnect_deltas(labels: &Pi3Labels, check: Check) -> Result<(i128, i128)> {
    let (d, s) = (|i| labels.delta(i), |i| labels.sigma(i));
    let [c1, c2, c3] = labels.c.map(int);
    let b3 = c1 * (c2 * c3 + d(1) * d(2));
    let d4 =
        c1 * (c2 * c3 * (s(1) + s(2) + s(3)) + d(1) * d(2) * (c2 + c3 + s(3)) + c2 * d(1) * d(3) + c3 * d(2) * d(3));
    if let Check::Oracle(opts) = check {
        let g = labels.weighting()?.realize();
        let gp = WeightedDistillation::new(pi3_reconnected(), labels.weights())?.realize();
        let bonds = |h: &Multigraph| -> Result<i128> { Ok(i128::from(bond_catalog(h, &opts)?.b[3])) };
        agree("reconnection b3", b3, bonds(&g)? - bonds(&gp)?)?;
        agree("reconnection d3", b3, profile_delta(&g, &gp, 3, &opts)?)?;
        agree("reconnection d4", d4, profile_delta(&g, &gp, 4, &opts)?)?;
    }
    Ok((b3, d4))
}

/// Chain lengths of a weak `K_{3,3}`-subdivision: `a_i`, `b_i`, `c_i` join
/// letter vertex `A`, `B`, `C` to index vertex `i`, in the edge order of
/// [`k33`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct K33Labels {
    pub a: [usize; 3],
    pub b: [usize; 3],
    pub c: [usize; 3],
}

impl K33Labels {
    pub fn weights(&self) -> Vec<usize> {
        self.a.iter().chain(&self.b).chain(&self.c).copied().collect()
    }

    pub fn weighting(&self) -> Result<WeightedDistillation> {
        WeightedDistillation::new(k33(), self.weights())
    }

    /// `delta_i = a_i - b_i`.
    pub fn delta(&self, i: usize) -> i128 {
        int(self.a[i - 1]) - int(self.b[i - 1])
    }

    /// `sigma_i = a_i + b_i + c_i`.
    pub fn sigma(&self, i: usize) -> i128 {
        int(self.a[i - 1]) + int(self.b[i - 1]) + int(self.c[i - 1])
    }
}

/// `(d_3(G) - d_3(G'), d_4(G) - d_4(G'))` for moving one edge from `a1` to
/// the adjacent chain `b1`.
pub fn k33_move_deltas(labels: &K33Labels, check: Check) -> Result<(i128, i128)> {
    let (d, s) = (|i| labels.delta(i), |i| labels.sigma(i));
    let [_, a2, a3] = labels.a.map(int);
    let [_, b2, b3] = labels.b.map(int);
    let [_, c2, c3] = labels.c.map(int);
    if labels.a[0] < 1 {
        return Err(Error::Precondition("a1 must be positive".into()));
    }
    let d3 = (d(1) - 1) * (s(2) + s(3)) + a2 * a3 - b2 * b3;
    let d4 = (d(1) - 1) * (a2 * b3 + a3 * b2 + c2 * (a3 + b3) + c3 * (a2 + b2))
        + (d(1) + d(2) - 1) * (a3 * b3 + c3 * (a3 + b3))
        + (d(1) + d(3) - 1) * (a2 * b2 + c2 * (a2 + b2));
    if let Check::Oracle(opts) = check {
        let pair = move_edge_between_chains(&labels.weighting()?, 0, 3)?;
        check_move("K33 move d3", &pair, 3, d3, &opts)?;
        check_move("K33 move d4", &pair, 4, d4, &opts)?;
    }
    Ok((d3, d4))
}

/// The Wagner subdivision with rail chains of length `rail` and rung chains
/// of length `rung`.
pub fn wagner_subdivision(rail: usize, rung: usize) -> Result<Multigraph> {
    let w: Vec<usize> = std::iter::repeat_n(rail, 8).chain(std::iter::repeat_n(rung, 4)).collect();
    Ok(WeightedDistillation::new(wagner(), w)?.realize())
}

/// `t = 8g^4 l + 64g^3 l^2 + 160g^2 l^3 + 128g l^4 + 32l^5` for rails `l`
/// and rungs `g`.
pub fn wagner_tree_polynomial(rail: usize, rung: usize, check: Check) -> Result<BigUint> {
    if rail < 1 || rung < 1 {
        return Err(Error::Precondition("chain lengths must be positive".into()));
    }
    let (l, g) = (BigUint::from(rail), BigUint::from(rung));
    let coeff = [8u32, 64, 160, 128, 32];
    let t = (0..5u32).map(|i| BigUint::from(coeff[i as usize]) * g.pow(4 - i) * l.pow(i + 1)).sum::<BigUint>();
    if let Check::Oracle(_) = check {
        let oracle = spanning_tree_count(&wagner_subdivision(rail, rung)?);
        if oracle != t {
            return Err(Error::OracleMismatch {
                what: "Wagner trees",
                formula: t.to_string(),
                oracle: oracle.to_string(),
            });
        }
    }
    Ok(t)
}

/// Spanning trees of the Wagner graph, split by number of rungs and by
/// membership of rail `0` and the adjacent rung `8`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WagnerTreeCounts {
    pub total: u64,
    pub by_rungs: [u64; 5],
    pub both: u64,
    pub rail_only: u64,
    pub rung_only: u64,
    pub neither: u64,
}

/// Enumerates the 7-edge subsets of the Wagner graph.
pub fn wagner_rung_distribution() -> WagnerTreeCounts {
    let w = wagner();
    let (rail, rung) = (0, 8);
    let mut out = WagnerTreeCounts { total: 0, by_rungs: [0; 5], both: 0, rail_only: 0, rung_only: 0, neither: 0 };
    for_each_combination(w.m(), w.n() - 1, |set| {
        let mut inside = vec![false; w.m()];
        set.iter().for_each(|&id| inside[id] = true);
        if w.dsu_where(|id| inside[id]).components() != 1 {
            return;
        }
        out.total += 1;
        out.by_rungs[set.iter().filter(|&&id| id >= 8).count()] += 1;
        match (inside[rail], inside[rung]) {
            (true, true) => out.both += 1,
            (true, false) => out.rail_only += 1,
            (false, true) => out.rung_only += 1,
            (false, false) => out.neither += 1,
        }
    });
    out
}

/// Integer rail length maximizing the tree count of a Wagner weighting with
/// `8 l + 4 g = m`, where `g` may be fractional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioBracket {
    pub m: usize,
    pub rail: usize,
    /// `g / l` at the maximizing rail length.
    pub ratio: Ratio<i64>,
    /// Ratios at the neighbouring rail lengths `l + 1` and `l - 1`; the
    /// continuous optimum lies strictly between them. `None` when the
    /// neighbour leaves the interval `0 < l < m/8`.
    pub below: Option<Ratio<i64>>,
    pub above: Option<Ratio<i64>>,
}

/// Maximizes `l (m^2 - 32 l^2)^2 / 32`, the tree count with `g` eliminated,
/// over integers `0 < l < m/8`.
pub fn wagner_optimal_ratio_check(m: usize) -> Result<RatioBracket> {
    if m < 12 {
        return Err(Error::Precondition(format!("need m >= 12, not {m}")));
    }
    let m2 = BigInt::from(m) * BigInt::from(m);
    let value = |l: usize| {
        let inner = &m2 - BigInt::from(32u32) * BigInt::from(l) * BigInt::from(l);
        BigInt::from(l) * &inner * &inner
    };
    let rails: Vec<usize> = (1..).take_while(|&l| 8 * l < m).collect();
    let rail = *rails.iter().max_by(|&&a, &&b| value(a).cmp(&value(b))).expect("m >= 12 allows l = 1");
    let ratio = |l: usize| Ratio::new(m as i64 - 8 * l as i64, 4 * l as i64);
    let inside = |l: usize| l >= 1 && 8 * l < m;
    Ok(RatioBracket {
        m,
        rail,
        ratio: ratio(rail),
        below: inside(rail + 1).then(|| ratio(rail + 1)),
        above: inside(rail - 1).then(|| ratio(rail - 1)),
    })
}

/// Bonds of size `size` with the vertex side containing vertex `0`.
pub fn bonds_with_sides(g: &Multigraph, size: usize) -> Vec<(Vec<usize>, Vec<bool>)> {
    bonds_by_bipartition(g)
        .into_iter()
        .filter(|b| b.len() == size)
        .map(|b| {
            let dsu = g.dsu_where(|id| !b.contains(&id));
            let side = (0..g.n()).map(|v| dsu.same(v, 0)).collect();
            (b, side)
        })
        .collect()
}

/// Bonds of size `size` whose both sides induce a subgraph with a cycle;
/// in a cubic graph these are the bonds that neither isolate a vertex nor
/// a single edge.
pub fn bonds_with_cyclic_sides(g: &Multigraph, size: usize) -> usize {
    bonds_with_sides(g, size)
        .into_iter()
        .filter(|(_, side)| {
            [true, false].into_iter().all(|part| {
                let vertices = side.iter().filter(|&&s| s == part).count();
                let edges = g.edges().iter().filter(|&&(u, v)| side[u] == part && side[v] == part).count();
                edges >= vertices
            })
        })
        .count()
}

/// Bonds of size `size` that do not isolate a single vertex.
pub fn non_star_bonds(g: &Multigraph, size: usize) -> usize {
    bonds_with_sides(g, size)
        .into_iter()
        .filter(|(_, side)| {
            let inside = side.iter().filter(|&&s| s).count();
            inside >= 2 && g.n() - inside >= 2
        })
        .count()
}

/// Moves the `v`-incidence of a cycle edge `e = uv` to `w`, where `vw` is a
/// bridge; edge ids are kept. The lowest bridge and lowest qualifying edge
/// are used.
pub fn bridge_surgery(g: &Multigraph) -> Result<Multigraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 || g.exceedance() < 0 {
        return Err(Error::Precondition("bridge surgery needs n >= 2 and k >= 0".into()));
    }
    let bridges = g.bridges();
    for &b in &bridges {
        let (x, y) = g.edges()[b];
        for (v, w) in [(x, y), (y, x)] {
            let candidate = g.incident_edges(v).into_iter().find(|&e| e != b && !bridges.contains(&e));
            if let Some(e) = candidate {
                let (p, q) = g.edges()[e];
                let moved = if p == v { (w, q) } else { (p, w) };
                let mut edges = g.edges().to_vec();
                edges[e] = moved;
                return Multigraph::new(g.n(), edges);
            }
        }
    }
    Err(Error::Precondition("no bridge is adjacent to a cycle edge".into()))
}

/// [`bridge_surgery`], then a check that `d_i` strictly drops for every
/// `i` in `1..=k+1`.
pub fn bridge_surgery_checked(g: &Multigraph, opts: &EnumOptions) -> Result<Multigraph> {
    let out = bridge_surgery(g)?;
    let (before, after) = (profile(g, opts)?, profile(&out, opts)?);
    for i in 1..=before.corank() {
        if after.d[i] >= before.d[i] {
            return Err(Error::OracleMismatch {
                what: "bridge surgery",
                formula: format!("d_{i} decreases"),
                oracle: format!("{} -> {}", before.d[i], after.d[i]),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distillation::catalog::cube;
    use crate::equivalence::{enumerate_shifts, shift_edge};
    use crate::optimal::{handcuffs, petersen_6_11, pi3_counterexample, PI3_COUNTEREXAMPLE_WEIGHTS};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn oracle() -> Check {
        Check::Oracle(EnumOptions::default())
    }

    fn opts() -> EnumOptions {
        EnumOptions::default()
    }

    #[test]
    fn k4_example_counts() {
        let labels = K4Labels([3, 3, 1, 1, 1, 5]);
        let pair = move_edge_between_chains(&labels.weighting().unwrap(), 0, 2).unwrap();
        let row = count_xij(&pair.g, &pair.g_prime, pair.edge, 3, &opts()).unwrap();
        assert_eq!(row.x[2], 18);
        assert_eq!(row.x[3], 5);
        assert_eq!(row.x_prime[2], 9);
        assert_eq!(row.x_prime[3], 15);
        assert_eq!(row.net(), -1);
        assert_eq!(k4_move_delta_d3(&labels, oracle()).unwrap(), -1);
        assert_eq!(k4_move_delta_d3(&K4Labels([4, 3, 2, 1, 1, 5]), oracle()).unwrap(), -1);
    }

    #[test]
    fn k4_formula_vanishes_on_its_zero_set() {
        for l3 in 0..3 {
            for l2 in 0..3 {
                let labels = K4Labels([l3 + 1, l2, l3, l2, 2, 3]);
                if labels.weighting().is_ok() {
                    assert_eq!(k4_move_delta_d3(&labels, oracle()).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn trivial_shift_has_zero_delta_in_every_row() {
        let g = Multigraph::complete(4).insert_vertex(0).unwrap().insert_vertex(3).unwrap();
        let shift = enumerate_shifts(&g).into_iter().next().expect("chains admit shifts");
        let gp = shift_edge(&g, &shift).unwrap();
        for i in 1..=g.m() {
            assert_eq!(count_xij(&g, &gp, shift.edge, i, &opts()).unwrap().net(), 0, "i={i}");
        }
    }

    #[test]
    fn size_mismatch_and_caps() {
        let g = Multigraph::complete(4);
        assert!(count_xij(&g, &Multigraph::cycle(6), 0, 2, &opts()).is_err());
        assert!(count_xij(&g, &g, 9, 2, &opts()).is_err());
        let tiny = EnumOptions { subset_cap: 1, ..EnumOptions::default() };
        assert!(matches!(count_xij(&g, &g, 0, 4, &tiny), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn fig_seventeen_reconnection() {
        let l = PI3_COUNTEREXAMPLE_WEIGHTS;
        let labels = Pi3Labels { l: [l[0], l[1], l[2]], r: [l[3], l[4], l[5]], c: [l[6], l[7], l[8]] };
        let (b3, d4) = pi3_reconnect_deltas(&labels, oracle()).unwrap();
        assert_eq!(d4, -50);
        assert_eq!(b3, -15);
        let p = pi3_counterexample();
        let delta = profile_delta(p.g_double_prime.as_ref().unwrap(), &p.g, 4, &opts()).unwrap();
        assert_eq!(delta, 2);
    }

    #[test]
    fn reconnection_with_balanced_rails_counts_rung_products() {
        let labels = Pi3Labels { l: [2, 1, 3], r: [2, 1, 3], c: [1, 2, 2] };
        assert_eq!(pi3_reconnect_deltas(&labels, oracle()).unwrap().0, 4);
    }

    fn random_labels<const N: usize>(rng: &mut ChaCha8Rng, max: usize) -> [usize; N] {
        std::array::from_fn(|_| rng.gen_range(0..=max))
    }

    #[test]
    fn random_prism_grids_match_oracles() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 60 {
            let labels = Pi3Labels {
                l: random_labels(&mut rng, 3),
                r: random_labels(&mut rng, 3),
                c: random_labels(&mut rng, 3),
            };
            if labels.weights().iter().sum::<usize>() > 18 || labels.weighting().is_err() {
                continue;
            }
            if labels.c.iter().all(|&c| c >= 1) {
                pi3_reconnect_deltas(&labels, oracle()).unwrap();
            }
            if labels.l[0] >= 1 && labels.weighting().and_then(|wd| move_edge_between_chains(&wd, 0, 3)).is_ok() {
                pi3_single_move_terms(&labels, oracle()).unwrap();
            }
            if labels.l[0] >= 1 && labels.r[2] >= 1 {
                let mut w = labels.weights();
                w[0] -= 1;
                w[3] += 1;
                w[2] += 1;
                w[5] -= 1;
                if WeightedDistillation::new(prism(), w).is_ok() {
                    pi3_double_move_deltas(&labels, oracle()).unwrap();
                }
            }
            checked += 1;
        }
    }

    #[test]
    fn random_k33_grids_match_oracles() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 60 {
            let labels = K33Labels {
                a: random_labels(&mut rng, 4),
                b: random_labels(&mut rng, 4),
                c: random_labels(&mut rng, 4),
            };
            if labels.a[0] < 1 || labels.weights().iter().sum::<usize>() > 18 {
                continue;
            }
            let Ok(wd) = labels.weighting() else { continue };
            if move_edge_between_chains(&wd, 0, 3).is_err() {
                continue;
            }
            k33_move_deltas(&labels, oracle()).unwrap();
            checked += 1;
        }
    }

    #[test]
    fn k33_uniform_chains() {
        let labels = K33Labels { a: [2; 3], b: [2; 3], c: [2; 3] };
        let (d3, _) = k33_move_deltas(&labels, oracle()).unwrap();
        assert_eq!(d3, -(labels.sigma(2) + labels.sigma(3)));
    }

    #[test]
    fn wagner_counts() {
        let c = wagner_rung_distribution();
        assert_eq!(c.total, 392);
        assert_eq!(c.by_rungs, [8, 64, 160, 128, 32]);
        assert_eq!((c.both, c.rail_only, c.rung_only, c.neither), (114, 117, 110, 51));
        assert_eq!(wagner_tree_polynomial(1, 1, oracle()).unwrap(), BigUint::from(392u32));
        assert_eq!(wagner_tree_polynomial(2, 2, oracle()).unwrap(), BigUint::from(12544u32));
        assert_eq!(
            wagner_tree_polynomial(3, 1, oracle()).unwrap(),
            spanning_tree_count(&wagner_subdivision(3, 1).unwrap())
        );
    }

    #[test]
    fn wagner_ratio_brackets_the_continuous_optimum() {
        let target = 10f64.sqrt() - 2.0;
        let mut widths = Vec::new();
        for m in 12..=400 {
            let b = wagner_optimal_ratio_check(m).unwrap();
            let f = |r: Ratio<i64>| *r.numer() as f64 / *r.denom() as f64;
            if let Some(lo) = b.below {
                assert!(f(lo) < target, "m={m}");
            }
            if let Some(hi) = b.above {
                assert!(f(hi) > target, "m={m}");
                if let Some(lo) = b.below {
                    widths.push(f(hi) - f(lo));
                }
            }
        }
        assert!(widths.windows(40).all(|w| w[39] < w[0]));
        let far = wagner_optimal_ratio_check(40_000).unwrap().ratio;
        assert!((*far.numer() as f64 / *far.denom() as f64 - target).abs() < 0.01);
        assert!(wagner_optimal_ratio_check(11).is_err());
    }

    #[test]
    fn nontrivial_four_bonds() {
        assert_eq!(bonds_with_cyclic_sides(&wagner(), 4), 2);
        assert_eq!(bonds_with_cyclic_sides(&cube(), 4), 3);
        let p = petersen_6_11();
        assert_eq!(non_star_bonds(&p.g, 4), 0);
        assert_eq!(non_star_bonds(&p.g_prime, 4), 1);
    }

    #[test]
    fn cube_versus_wagner_at_unit_length() {
        assert_eq!(profile_delta(&cube(), &wagner(), 4, &opts()).unwrap(), 1);
    }

    #[test]
    fn bridge_surgery_on_handcuffs_and_lollipop() {
        let g = handcuffs().g;
        let out = bridge_surgery_checked(&g, &opts()).unwrap();
        assert!(out.is_bridgeless());
        assert_eq!((out.n(), out.m()), (10, 11));
        let lollipop = Multigraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let out = bridge_surgery_checked(&lollipop, &opts()).unwrap();
        assert!(profile(&out, &opts()).unwrap().d[1] < profile(&lollipop, &opts()).unwrap().d[1]);
        assert!(bridge_surgery(&Multigraph::complete(4)).is_err());
        assert!(bridge_surgery(&Multigraph::path(3)).is_err());
    }
}
