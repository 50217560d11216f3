//! Canonical forms by pruned search over vertex orderings.
//!
//! For an ordering `s` of the vertices, the code of the graph is the
//! upper-triangular multiplicity matrix read row by row:
//! `A[s0][s0], A[s0][s1], .., A[s0][s(n-1)], A[s1][s1], ..`. The canonical
//! code is the lexicographic maximum over all orderings, which is the same as
//! the lexicographic minimum of the sorted edge list `(u <= v)` after
//! relabeling.
//!
//! Within the search, every choice of the next vertex fixes a complete row,
//! because vertices that agree on all earlier rows form a cell whose entries
//! are sorted in descending order. Sibling choices are cut to those with the
//! largest row, branches are compared against the best code found so far,
//! and twins (vertices with identical neighbourhoods) are explored once.

use super::Multigraph;
use crate::{Error, Result};
use std::cmp::Ordering;

pub const DEFAULT_ISO_CAP: usize = 12;

struct Search<'a> {
    a: &'a [Vec<u16>],
    best: Vec<u16>,
    best_order: Vec<usize>,
    have_best: bool,
    /// When set, `best` is a fixed reference and the search stops at the
    /// first strictly larger prefix.
    check_only: bool,
    beaten: bool,
}

impl Search<'_> {
    fn twins(&self, u: usize, w: usize) -> bool {
        let a = self.a;
        a[u][u] == a[w][w] && (0..a.len()).all(|x| x == u || x == w || a[u][x] == a[w][x])
    }

    fn row_and_cells(&self, c: usize, cells: &[Vec<usize>]) -> (Vec<u16>, Vec<Vec<usize>>) {
        let a = self.a;
        let mut row = vec![a[c][c]];
        let mut next = Vec::with_capacity(cells.len() + 2);
        for cell in cells {
            let mut members: Vec<usize> = cell.iter().copied().filter(|&x| x != c).collect();
            if members.is_empty() {
                continue;
            }
            members.sort_by(|&x, &y| a[c][y].cmp(&a[c][x]).then(x.cmp(&y)));
            let mut start = 0;
            for i in 1..=members.len() {
                if i == members.len() || a[c][members[i]] != a[c][members[start]] {
                    next.push(members[start..i].to_vec());
                    start = i;
                }
            }
            row.extend(members.iter().map(|&x| a[c][x]));
        }
        (row, next)
    }

    fn descend(&mut self, order: &mut Vec<usize>, cells: &[Vec<usize>], code: &mut Vec<u16>) {
        if self.beaten {
            return;
        }
        if cells.is_empty() {
            if !self.have_best || *code > self.best {
                self.best.clone_from(code);
                self.best_order.clone_from(order);
                self.have_best = true;
            }
            return;
        }
        let mut reps: Vec<usize> = Vec::new();
        for &c in &cells[0] {
            if !reps.iter().any(|&r| self.twins(r, c)) {
                reps.push(c);
            }
        }
        let mut options: Vec<(usize, Vec<u16>, Vec<Vec<usize>>)> = reps
            .into_iter()
            .map(|c| {
                let (row, next) = self.row_and_cells(c, cells);
                (c, row, next)
            })
            .collect();
        let top = options.iter().map(|o| o.1.clone()).max().expect("nonempty cell");
        options.retain(|o| o.1 == top);
        let start = code.len();
        code.extend_from_slice(&top);
        if self.have_best {
            match code[..].cmp(&self.best[..code.len()]) {
                Ordering::Less => {
                    code.truncate(start);
                    return;
                }
                Ordering::Greater if self.check_only => {
                    self.beaten = true;
                    code.truncate(start);
                    return;
                }
                _ => {}
            }
        }
        for (c, _, next) in options {
            order.push(c);
            self.descend(order, &next, code);
            order.pop();
            if self.beaten {
                break;
            }
        }
        code.truncate(start);
    }
}

fn matrix(g: &Multigraph) -> Vec<Vec<u16>> {
    g.adjacency_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(|x| u16::try_from(x).expect("multiplicity fits u16")).collect())
        .collect()
}

fn search(g: &Multigraph) -> (Vec<u16>, Vec<usize>) {
    let a = matrix(g);
    let mut s =
        Search { a: &a, best: Vec::new(), best_order: Vec::new(), have_best: false, check_only: false, beaten: false };
    let cells = vec![(0..g.n()).collect::<Vec<_>>()];
    s.descend(&mut Vec::new(), &cells, &mut Vec::new());
    (s.best, s.best_order)
}

fn encode(n: usize, code: &[u16]) -> Vec<u8> {
    let mut out = Vec::with_capacity(2 + 2 * code.len());
    out.extend_from_slice(&(n as u16).to_be_bytes());
    for &x in code {
        out.extend_from_slice(&x.to_be_bytes());
    }
    out
}

fn check_cap(g: &Multigraph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "isomorphism vertex", limit: cap, actual: g.n() });
    }
    Ok(())
}

pub fn canonical_form_with_cap(g: &Multigraph, cap: usize) -> Result<Vec<u8>> {
    check_cap(g, cap)?;
    Ok(encode(g.n(), &search(g).0))
}

/// Byte string equal for two graphs exactly when they are isomorphic.
pub fn canonical_form(g: &Multigraph) -> Result<Vec<u8>> {
    canonical_form_with_cap(g, DEFAULT_ISO_CAP)
}

/// The canonical relabeling of `g` with its edge list sorted.
pub fn canonical_graph(g: &Multigraph) -> Result<Multigraph> {
    check_cap(g, DEFAULT_ISO_CAP)?;
    let (_, order) = search(g);
    let mut perm = vec![0; g.n()];
    for (label, &v) in order.iter().enumerate() {
        perm[v] = label;
    }
    Ok(g.relabeled(&perm).sorted())
}

pub fn is_isomorphic(g: &Multigraph, h: &Multigraph) -> Result<bool> {
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    let (mut dg, mut dh) = (g.degrees(), h.degrees());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Whether the given labeling already attains the canonical code.
pub fn is_canonical_labeling(g: &Multigraph) -> bool {
    let a = matrix(g);
    let n = g.n();
    let mut reference = Vec::with_capacity(n * (n + 1) / 2);
    for u in 0..n {
        reference.extend_from_slice(&a[u][u..]);
    }
    let mut s =
        Search { a: &a, best: reference, best_order: Vec::new(), have_best: true, check_only: true, beaten: false };
    let cells = vec![(0..n).collect::<Vec<_>>()];
    s.descend(&mut Vec::new(), &cells, &mut Vec::new());
    !s.beaten
}
