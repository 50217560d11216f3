//! Exact all-terminal reliability of multigraphs with small exceedance.
//!
//! A connected multigraph `G` with `n` vertices and `m` edges survives edge
//! percolation with probability `R(G, p) = sum_i c_i p^(m-i) (1-p)^i`, where
//! `c_i` counts the `i`-subsets whose removal leaves `G` connected. The crate
//! computes these spectra exactly, builds the subdivision families that are
//! optimal for exceedance `k = m - n <= 3`, evaluates closed-form surgery
//! deltas against enumeration, and certifies optimality on small corpora.

pub mod distillation;
pub mod equivalence;
pub mod error;
pub mod graph;
pub mod moves;
pub mod optimal;
pub mod reliability;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeFate, EdgeMapping, Expansion, Incidence, Multigraph};
