pub use super::poly::RootInterval;
use super::poly::{changes_sign, isolate_roots, Poly};
use super::ReliabilityProfile;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// Outcome of comparing `R_A` with `R_B` on `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComparisonVerdict {
    Equal,
    /// `R_A >= R_B` throughout, strictly somewhere.
    ADominates,
    BDominates,
    /// Isolating intervals of the points where `R_A - R_B` changes sign.
    Crossing(Vec<RootInterval>),
}

impl ComparisonVerdict {
    /// The verdict with the roles of the two graphs exchanged.
    pub fn swapped(self) -> Self {
        match self {
            ComparisonVerdict::ADominates => ComparisonVerdict::BDominates,
            ComparisonVerdict::BDominates => ComparisonVerdict::ADominates,
            other => other,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ComparisonVerdict::Equal => "EQUAL",
            ComparisonVerdict::ADominates => "A_DOMINATES",
            ComparisonVerdict::BDominates => "B_DOMINATES",
            ComparisonVerdict::Crossing(_) => "CROSSING",
        }
    }
}

/// `R_A - R_B = sum (d_i(B) - d_i(A)) p^(m-i) (1-p)^i`.
pub fn difference_polynomial(a: &ReliabilityProfile, b: &ReliabilityProfile) -> Poly {
    let m = a.m;
    let mut f = Poly::zero();
    for i in 0..=m {
        let delta = BigInt::from(b.d[i].clone()) - BigInt::from(a.d[i].clone());
        if !delta.is_zero() {
            f = f.add(&Poly::bernstein_term(m - i, i).scaled(&BigRational::from_integer(delta)));
        }
    }
    f
}

pub fn compare(a: &ReliabilityProfile, b: &ReliabilityProfile) -> Result<ComparisonVerdict> {
    if (a.n, a.m) != (b.n, b.m) {
        return Err(Error::Precondition(format!("profiles have (n, m) = ({}, {}) and ({}, {})", a.n, a.m, b.n, b.m)));
    }
    if a.d == b.d {
        return Ok(ComparisonVerdict::Equal);
    }
    let orders: Vec<Ordering> = a.d.iter().zip(&b.d).map(|(x, y)| x.cmp(y)).collect();
    if orders.iter().all(|o| *o != Ordering::Greater) {
        return Ok(ComparisonVerdict::ADominates);
    }
    if orders.iter().all(|o| *o != Ordering::Less) {
        return Ok(ComparisonVerdict::BDominates);
    }
    let mut f = difference_polynomial(a, b);
    let (zero, one) = (BigRational::zero(), BigRational::one());
    while f.eval(&zero).is_zero() {
        f = f.deflate(&zero);
    }
    while f.eval(&one).is_zero() {
        f = f.deflate(&one);
    }
    let crossings: Vec<RootInterval> =
        isolate_roots(&f, &zero, &one).into_iter().filter(|r| changes_sign(&f, r)).collect();
    Ok(if !crossings.is_empty() {
        ComparisonVerdict::Crossing(crossings)
    } else if f.sign_at(&zero) == Ordering::Greater {
        ComparisonVerdict::ADominates
    } else {
        ComparisonVerdict::BDominates
    })
}
