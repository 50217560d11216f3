//! Chains, proper and weak distillations, weak subdivisions, the catalog of
//! cubic 3-edge-connected distillations and balanced-weighting statistics.

mod balance;
pub mod catalog;
mod chains;
mod cubic;
mod weighted;

pub use balance::{
    balance_stats, balanced_weightings, bond_count_from_weights, centered_division, d2_balanced_formula,
    nontrivial_two_bonds, phi3, phi4, phi43, phi44, standard_division, BalanceStats,
};
pub use catalog::{catalog, named_distillation, Catalog, NamedGraph};
pub use chains::{chain_decomposition, Chain, ChainDecomposition};
pub use cubic::{cubic_weak_distillation, leafless_weak_distillations, CubicWeakDistillation, ExpansionStep};
pub use weighted::{proper_distillation, Realization, WeightedDistillation};
