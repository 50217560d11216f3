#![allow(dead_code)]

use rand::Rng;
use relopt::Multigraph;

/// A random connected multigraph: a random tree on `n` vertices plus
/// `extra` edges with uniformly random endpoints, loops included.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: usize) -> Multigraph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    edges.extend((0..extra).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))));
    let mut ids: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        ids.swap(i, rng.gen_range(0..=i));
    }
    Multigraph::new(n, edges.into_iter().map(|(u, v)| (ids[u], ids[v]))).unwrap()
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}
