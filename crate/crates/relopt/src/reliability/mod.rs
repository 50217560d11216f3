//! Exact reliability spectra, spanning-tree counts, bonds and exact
//! comparison of reliability polynomials.
//!
//! For a connected graph with `m` edges, `d_i` counts the `i`-subsets whose
//! removal disconnects it and `c_i = C(m, i) - d_i`. Then
//! `R(p) = sum c_i p^(m-i) (1-p)^i` and `U(p) = 1 - R(p)`.

mod bonds;
mod compare;
pub mod poly;
mod profile;
mod trees;

pub use bonds::{bond_catalog, bonds_by_bipartition, for_each_combination, BondCatalog};
pub use compare::{compare, difference_polynomial, ComparisonVerdict, RootInterval};
pub use profile::{connected_subset_counts, profile, ReliabilityProfile};
pub use trees::spanning_tree_count;

use num_bigint::BigUint;

/// Default largest `m` for which subset enumeration is attempted.
pub const DEFAULT_SUBSET_CAP: usize = 24;
/// Default largest `n` for bond enumeration by vertex bipartitions.
pub const DEFAULT_BIPARTITION_CAP: usize = 20;

/// Limits and parallelism for enumeration-based operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub subset_cap: usize,
    pub bipartition_cap: usize,
    /// Worker threads for one enumeration; `1` runs inline, `0` uses the
    /// global pool.
    pub workers: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { subset_cap: DEFAULT_SUBSET_CAP, bipartition_cap: DEFAULT_BIPARTITION_CAP, workers: 1 }
    }
}

impl EnumOptions {
    /// Defaults with the subset cap taken from `RELOPT_SUBSET_CAP` if set.
    pub fn from_env() -> Self {
        let mut opts = EnumOptions::default();
        if let Some(cap) = std::env::var("RELOPT_SUBSET_CAP").ok().and_then(|v| v.trim().parse().ok()) {
            opts.subset_cap = cap;
        }
        opts
    }

    pub(crate) fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        match self.workers {
            1 => job(),
            0 => job(),
            w => rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .map(|pool| pool.install(job))
                .unwrap_or_else(|_| panic!("cannot build a pool of {w} workers")),
        }
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(3, 5), BigUint::from(0u32));
        assert_eq!(binomial_u128(24, 12), 2_704_156);
        assert_eq!(binomial_u128(0, 0), 1);
    }
}
