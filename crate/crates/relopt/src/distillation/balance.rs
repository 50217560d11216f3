//! Weight statistics of balanced weightings and the bond-count closed forms
//! built on them.

use super::weighted::WeightedDistillation;
use crate::graph::{is_isomorphic, Multigraph};
use crate::reliability::{binomial, bonds_by_bipartition, DEFAULT_BIPARTITION_CAP};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `m = 3kq + r` with `-3k/2 < r <= 3k/2`.
pub fn centered_division(m: usize, k: usize) -> (i64, i64) {
    let (m, k) = (m as i64, k as i64);
    let q = (2 * m - 3 * k).div_euclid(6 * k) + i64::from((2 * m - 3 * k).rem_euclid(6 * k) != 0);
    (q, m - 3 * k * q)
}

/// `m = 3kq + r` with `0 <= r < 3k`.
pub fn standard_division(m: usize, k: usize) -> (usize, usize) {
    (m / (3 * k), m % (3 * k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceStats {
    pub k: i64,
    pub m: usize,
    /// Standard weight from the centered division.
    pub q: i64,
    /// Centered remainder.
    pub r: i64,
    /// Signed count of off-standard weights at each vertex.
    pub pi_v: Vec<i64>,
    /// Signed count of off-standard weights among the edges adjacent to
    /// each edge.
    pub pi_e: Vec<i64>,
    /// Every weight lies in `{q - 1, q, q + 1}` with the sign of `r`.
    pub balanced: bool,
    /// The `pi_v` values differ pairwise by at most one.
    pub pi_v_balanced: bool,
}

fn sign(x: i64) -> i64 {
    x.signum()
}

pub fn balance_stats(wd: &WeightedDistillation) -> Result<BalanceStats> {
    let d = wd.distillation();
    if d.degrees().iter().any(|&x| x != 3) {
        return Err(Error::Precondition("distillation must be cubic".into()));
    }
    let k = wd.exceedance();
    let m = wd.size();
    let (q, r) = centered_division(m, k as usize);
    let dev: Vec<i64> = wd.weights().iter().map(|&w| w as i64 - q).collect();
    let balanced = dev.iter().all(|&x| x == 0 || x == sign(r));
    let pi_v: Vec<i64> = (0..d.n()).map(|v| d.incident_edges(v).iter().map(|&e| dev[e]).sum()).collect();
    let pi_e: Vec<i64> = (0..d.m())
        .map(|e| {
            let (u, v) = d.edges()[e];
            let mut around = d.incident_edges(u);
            around.extend(d.incident_edges(v));
            around.sort_unstable();
            around.dedup();
            around.into_iter().filter(|&f| f != e).map(|f| dev[f]).sum()
        })
        .collect();
    let pi_v_balanced = match (pi_v.iter().min(), pi_v.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo <= 1,
        _ => true,
    };
    Ok(BalanceStats { k, m, q, r, pi_v, pi_e, balanced, pi_v_balanced })
}

fn signed_power_excess(pi: i64, q: i64, arity: u32) -> i128 {
    let j = pi.unsigned_abs() as u32;
    let (q, s) = (i128::from(q), i128::from(sign(pi)));
    (q + s).pow(j) * q.pow(arity - j) - q.pow(arity) - i128::from(pi) * q.pow(arity - 1)
}

/// Part of the vertex-isolating 3-bond count beyond `q^3 + pi q^2`.
pub fn phi3(pi: i64, q: i64) -> Result<i128> {
    if pi.abs() > 3 {
        return Err(Error::Precondition(format!("a cubic vertex has |pi| <= 3, got {pi}")));
    }
    Ok(signed_power_excess(pi, q, 3))
}

/// Part of the edge-isolating 4-bond count beyond `q^4 + pi q^3`.
pub fn phi44(pi: i64, q: i64) -> Result<i128> {
    if pi.abs() > 4 {
        return Err(Error::Precondition(format!("an edge of a cubic graph has |pi| <= 4, got {pi}")));
    }
    Ok(signed_power_excess(pi, q, 4))
}

/// Vertex term of the (4,3)-disconnection count in balanced weightings of
/// `K_{3,3}`, beyond its parts that do not depend on the arrangement.
pub fn phi43(pi: i64, q: i64, r: i64) -> Result<i128> {
    if pi.abs() > 3 {
        return Err(Error::Precondition(format!("a cubic vertex has |pi| <= 3, got {pi}")));
    }
    if pi != 0 && sign(pi) != sign(r) {
        return Err(Error::Precondition("pi and r must have the same sign".into()));
    }
    let j = pi.unsigned_abs() as u32;
    let (pi, q, r, s) = (i128::from(pi), i128::from(q), i128::from(r), i128::from(sign(pi)));
    let isolating = (q + s).pow(j) * q.pow(3 - j) * (6 * q + r - pi);
    let fixed = 6 * q.pow(4) + r * q.pow(3) + 5 * pi * q.pow(3) + i128::from(j) * (r.abs() - 1) * q.pow(2);
    Ok(isolating - fixed)
}

/// `Phi_4 = sum phi43(pi_v) + sum phi44(pi_e)` for a balanced weighting of
/// `K_{3,3}`; smaller means fewer 4-disconnections.
pub fn phi4(wd: &WeightedDistillation) -> Result<i128> {
    if !is_isomorphic(wd.distillation(), &super::catalog::k33())? {
        return Err(Error::Precondition("Phi_4 is defined on K33 weightings".into()));
    }
    let s = balance_stats(wd)?;
    if !s.balanced {
        return Err(Error::InvalidWeights("weighting is not balanced".into()));
    }
    let mut total = 0i128;
    for &p in &s.pi_v {
        total += phi43(p, s.q, s.r)?;
    }
    for &p in &s.pi_e {
        total += phi44(p, s.q)?;
    }
    Ok(total)
}

/// `d_2` of every balanced weak `(m - k, m)`-subdivision of a cubic
/// 3-edge-connected distillation: pairs inside a chain.
pub fn d2_balanced_formula(k: usize, m: usize) -> BigUint {
    let (q, r) = standard_division(m, k);
    BigUint::from(3 * k - r) * binomial(q, 2) + BigUint::from(r) * binomial(q + 1, 2)
}

/// `b_s` of the realized graph from the bonds of the distillation: each
/// `s`-bond contributes the product of its weights, and for `s = 2` the
/// pairs inside one chain are added.
pub fn bond_count_from_weights(wd: &WeightedDistillation, s: usize) -> Result<BigUint> {
    let d = wd.distillation();
    if d.n() > DEFAULT_BIPARTITION_CAP {
        return Err(Error::CapExceeded { what: "bipartition vertex", limit: DEFAULT_BIPARTITION_CAP, actual: d.n() });
    }
    let w = wd.weights();
    let mut total = BigUint::zero();
    for bond in bonds_by_bipartition(d).into_iter().filter(|b| b.len() == s) {
        total += bond.iter().fold(BigUint::one(), |acc, &e| acc * BigUint::from(w[e]));
    }
    if s == 2 {
        total += w.iter().map(|&x| binomial(x, 2)).sum::<BigUint>();
    }
    Ok(total)
}

/// Every weighting of `d` with total `m` whose weights differ by at most one,
/// skipping those with a zero cycle. Weightings are listed, not reduced by
/// symmetry.
pub fn balanced_weightings(d: &Multigraph, m: usize) -> Vec<WeightedDistillation> {
    let e = d.m();
    let (q, r) = (m / e, m % e);
    let mut out = Vec::new();
    crate::reliability::for_each_combination(e, r, |heavy| {
        let mut w = vec![q; e];
        heavy.iter().for_each(|&i| w[i] = q + 1);
        if let Ok(wd) = WeightedDistillation::new(d.clone(), w) {
            out.push(wd);
        }
    });
    out
}

/// Pairs of edges from different chains whose deletion disconnects `g`, one
/// representative pair per pair of chains.
pub fn nontrivial_two_bonds(g: &Multigraph) -> Vec<(usize, usize)> {
    let chains = super::chain_decomposition(g);
    let reps: Vec<usize> = chains.chains.iter().map(|c| c.edges[0]).collect();
    let base = g.component_count();
    let mut out = Vec::new();
    for (i, &a) in reps.iter().enumerate() {
        if g.dsu_where(|id| id != a).components() > base {
            continue;
        }
        for &b in &reps[i + 1..] {
            if g.dsu_where(|id| id != a && id != b).components() > base {
                out.push((a, b));
            }
        }
    }
    out
}
