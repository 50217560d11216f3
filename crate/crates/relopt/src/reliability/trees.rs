use crate::graph::Multigraph;
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = value;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Number of spanning trees by the matrix-tree theorem; loops are ignored and
/// a disconnected graph has none.
pub fn spanning_tree_count(g: &Multigraph) -> BigUint {
    let n = g.n();
    let mut lap = vec![vec![BigInt::zero(); n - 1]; n - 1];
    for &(u, v) in g.edges() {
        if u == v {
            continue;
        }
        for (x, y) in [(u, v), (v, u)] {
            if x < n - 1 {
                lap[x][x] += 1;
                if y < n - 1 {
                    lap[x][y] -= 1;
                }
            }
        }
    }
    let det = bareiss_determinant(lap);
    debug_assert!(!det.is_negative());
    det.to_biguint().unwrap_or_default()
}
