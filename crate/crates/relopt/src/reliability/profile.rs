use super::{binomial, spanning_tree_count, EnumOptions};
use crate::graph::{edge_connectivity, Dsu, EdgeConnectivity, Multigraph};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

/// Exact spectrum of a connected graph; `k = m - n` is the exceedance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReliabilityProfile {
    pub n: usize,
    pub m: usize,
    pub k: i64,
    pub lambda: EdgeConnectivity,
    pub d: Vec<BigUint>,
    pub c: Vec<BigUint>,
    pub t: BigUint,
}

/// Prefix depth at which the edge sequence is split into parallel blocks.
const SPLIT_DEPTH: usize = 12;

struct Walk<'a> {
    edges: &'a [(usize, usize)],
    max_removed: usize,
    counts: Vec<u64>,
}

impl Walk<'_> {
    /// Decides edges `idx..` with `removed` already deleted; counts every
    /// completion that stays connected.
    fn go(&mut self, dsu: &mut Dsu, idx: usize, removed: usize) {
        let remaining = self.edges.len() - idx;
        if dsu.components() - 1 > remaining {
            return;
        }
        if removed == self.max_removed || idx == self.edges.len() {
            let mark = dsu.checkpoint();
            for &(u, v) in &self.edges[idx..] {
                dsu.union(u, v);
            }
            if dsu.components() == 1 {
                self.counts[removed] += 1;
            }
            dsu.rollback(mark);
            return;
        }
        let (u, v) = self.edges[idx];
        let mark = dsu.checkpoint();
        dsu.union(u, v);
        self.go(dsu, idx + 1, removed);
        dsu.rollback(mark);
        self.go(dsu, idx + 1, removed + 1);
    }
}

/// `counts[i]` is the number of `i`-subsets of edges whose deletion leaves
/// `g` connected, for `i <= max_removed`. Exhaustive over those subsets;
/// branches that can no longer reconnect are cut early.
pub fn connected_subset_counts(g: &Multigraph, max_removed: usize, opts: &EnumOptions) -> Vec<u64> {
    let edges = g.edges();
    let max_removed = max_removed.min(edges.len());
    let depth = SPLIT_DEPTH.min(edges.len());
    if opts.workers == 1 || depth < 4 {
        let mut walk = Walk { edges, max_removed, counts: vec![0; max_removed + 1] };
        walk.go(&mut Dsu::new(g.n()), 0, 0);
        return walk.counts;
    }
    let block = |prefix: u32| -> Vec<u64> {
        let mut walk = Walk { edges, max_removed, counts: vec![0; max_removed + 1] };
        let removed = prefix.count_ones() as usize;
        if removed > max_removed {
            return walk.counts;
        }
        let mut dsu = Dsu::new(g.n());
        for (i, &(u, v)) in edges[..depth].iter().enumerate() {
            if prefix >> i & 1 == 0 {
                dsu.union(u, v);
            }
        }
        walk.go(&mut dsu, depth, removed);
        walk.counts
    };
    let add = |mut a: Vec<u64>, b: Vec<u64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    opts.run(|| (0u32..1 << depth).into_par_iter().map(block).reduce(|| vec![0; max_removed + 1], add))
}

/// Full spectrum by subset enumeration, with the tree count cross-checked
/// against the matrix-tree theorem.
pub fn profile(g: &Multigraph, opts: &EnumOptions) -> Result<ReliabilityProfile> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (n, m) = (g.n(), g.m());
    if m > opts.subset_cap {
        return Err(Error::CapExceeded { what: "subset enumeration edge", limit: opts.subset_cap, actual: m });
    }
    let k = g.exceedance();
    let lambda = edge_connectivity(g);
    let total: Vec<BigUint> = (0..=m).map(|i| binomial(m, i)).collect();
    if n == 1 {
        return Ok(ReliabilityProfile {
            n,
            m,
            k,
            lambda,
            d: vec![BigUint::zero(); m + 1],
            c: total,
            t: BigUint::one(),
        });
    }
    // Deleting more than k + 1 edges leaves fewer than n - 1.
    let corank = (k + 1) as usize;
    let counts = connected_subset_counts(g, corank, opts);
    let c: Vec<BigUint> = (0..=m).map(|i| counts.get(i).map_or_else(BigUint::zero, |&x| BigUint::from(x))).collect();
    let d: Vec<BigUint> = total.iter().zip(&c).map(|(t, c)| t - c).collect();
    let t = spanning_tree_count(g);
    if t != c[corank] {
        return Err(Error::OracleMismatch {
            what: "spanning trees",
            formula: t.to_string(),
            oracle: c[corank].to_string(),
        });
    }
    Ok(ReliabilityProfile { n, m, k, lambda, d, c, t })
}

fn check_probability(p: &BigRational) -> Result<()> {
    if *p < BigRational::zero() || *p > BigRational::one() {
        return Err(Error::Precondition(format!("probability {p} is outside [0, 1]")));
    }
    Ok(())
}

fn strings(v: &[BigUint]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

impl ReliabilityProfile {
    /// `R(p)`: probability that the surviving edges form a connected graph
    /// when each edge survives independently with probability `p`.
    pub fn reliability(&self, p: &BigRational) -> Result<BigRational> {
        check_probability(p)?;
        let q = BigRational::one() - p;
        let mut total = BigRational::zero();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = num_traits::pow(p.clone(), self.m - i) * num_traits::pow(q.clone(), i);
            total += term * BigRational::from_integer(c.clone().into());
        }
        Ok(total)
    }

    pub fn unreliability(&self, p: &BigRational) -> Result<BigRational> {
        Ok(BigRational::one() - self.reliability(p)?)
    }

    pub fn corank(&self) -> usize {
        (self.k + 1).max(0) as usize
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "lambda": self.lambda.finite(),
            "d": strings(&self.d),
            "c": strings(&self.c),
            "t": self.t.to_string(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad =
            |what: &str| Error::Parse { line: 0, message: format!("profile field `{what}` missing or malformed") };
        let int = |key: &str| value.get(key).and_then(Value::as_u64).ok_or_else(|| bad(key));
        let big = |v: &Value| v.as_str().and_then(|s| s.parse::<BigUint>().ok());
        let list = |key: &str| -> Result<Vec<BigUint>> {
            value.get(key).and_then(Value::as_array).and_then(|a| a.iter().map(big).collect()).ok_or_else(|| bad(key))
        };
        let lambda = match value.get("lambda") {
            Some(Value::Null) => EdgeConnectivity::Infinite,
            Some(v) => EdgeConnectivity::Finite(v.as_u64().ok_or_else(|| bad("lambda"))? as usize),
            None => return Err(bad("lambda")),
        };
        let profile = ReliabilityProfile {
            n: int("n")? as usize,
            m: int("m")? as usize,
            k: value.get("k").and_then(Value::as_i64).ok_or_else(|| bad("k"))?,
            lambda,
            d: list("d")?,
            c: list("c")?,
            t: value.get("t").and_then(big).ok_or_else(|| bad("t"))?,
        };
        if profile.d.len() != profile.m + 1 || profile.c.len() != profile.m + 1 {
            return Err(bad("d"));
        }
        Ok(profile)
    }
}
