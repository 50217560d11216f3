//! Exact univariate polynomials over the rationals and real-root isolation
//! by Sturm sequences with dyadic interval endpoints.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;

/// Coefficients in ascending degree; never has a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<BigRational>);

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_integers(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        Poly::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    /// `x^a (1 - x)^b`.
    pub fn bernstein_term(a: usize, b: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); a + b + 1];
        let mut binom = BigInt::one();
        for j in 0..=b {
            let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            coeffs[a + j] = BigRational::from_integer(&binom * sign);
            binom = binom * BigInt::from(b - j) / BigInt::from(j + 1);
        }
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.eval(x).cmp(&BigRational::zero())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64)).collect())
    }

    pub fn scaled(&self, s: &BigRational) -> Self {
        Poly::new(self.0.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Poly) -> Self {
        let len = self.0.len().max(other.0.len());
        let zero = BigRational::zero();
        Poly::new((0..len).map(|i| self.0.get(i).unwrap_or(&zero) + other.0.get(i).unwrap_or(&zero)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Remainder of division by a nonzero `divisor`.
    pub fn rem(&self, divisor: &Poly) -> Self {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut r = self.0.clone();
        while r.len() > dd {
            let shift = r.len() - 1 - dd;
            let factor = r.last().unwrap() / divisor.lead();
            for (i, c) in divisor.0.iter().enumerate() {
                r[shift + i] -= &factor * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Poly::new(r)
    }

    /// Quotient by `x - root`, assuming `root` is a root.
    pub fn deflate(&self, root: &BigRational) -> Self {
        let d = self.0.len();
        if d <= 1 {
            return Poly::zero();
        }
        let mut q = vec![BigRational::zero(); d - 1];
        let mut carry = BigRational::zero();
        for i in (1..d).rev() {
            carry = &self.0[i] + carry * root;
            q[i - 1] = carry.clone();
        }
        debug_assert!((&self.0[0] + carry * root).is_zero(), "deflating by a non-root");
        Poly::new(q)
    }
}

/// Standard Sturm chain `f, f', -rem(f, f'), ..`.
pub fn sturm_chain(f: &Poly) -> Vec<Poly> {
    let mut chain = vec![f.clone(), f.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]).scaled(&rat(-1));
        chain.push(r);
    }
    chain.pop();
    chain
}

fn variations(chain: &[Poly], x: &BigRational) -> usize {
    let signs: Vec<Ordering> = chain.iter().map(|p| p.sign_at(x)).filter(|s| *s != Ordering::Equal).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// An open interval containing exactly one distinct root; neither endpoint
/// is a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl std::fmt::Display for RootInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// A non-root point strictly inside `(lo, hi)`, dyadic when they are.
fn split_point(f: &Poly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let half = BigRational::new(1.into(), 2.into());
    let width = hi - lo;
    let mut offset = half.clone();
    let mut step = half.clone();
    loop {
        let x = lo + &width * &offset;
        if !f.eval(&x).is_zero() {
            return x;
        }
        step *= &half;
        offset = &half + &step;
    }
}

/// Isolating intervals for the distinct real roots of `f` in `(lo, hi)`,
/// in increasing order. Both endpoints must be non-roots of a nonzero `f`.
pub fn isolate_roots(f: &Poly, lo: &BigRational, hi: &BigRational) -> Vec<RootInterval> {
    assert!(!f.is_zero(), "the zero polynomial has no isolated roots");
    assert!(!f.eval(lo).is_zero() && !f.eval(hi).is_zero(), "endpoints must not be roots");
    let chain = sturm_chain(f);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), variations(&chain, lo), variations(&chain, hi))];
    while let Some((a, b, va, vb)) = stack.pop() {
        match va - vb {
            0 => {}
            1 => out.push(RootInterval { lo: a, hi: b }),
            _ => {
                let mid = split_point(f, &a, &b);
                let vm = variations(&chain, &mid);
                stack.push((mid.clone(), b, vm, vb));
                stack.push((a, mid, va, vm));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Whether `f` changes sign across the interval.
pub fn changes_sign(f: &Poly, interval: &RootInterval) -> bool {
    f.sign_at(&interval.lo) != f.sign_at(&interval.hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_integers(c.iter().map(|&x| BigInt::from(x)))
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn bernstein_and_eval() {
        // x (1-x)^2 = x - 2x^2 + x^3
        assert_eq!(Poly::bernstein_term(1, 2), p(&[0, 1, -2, 1]));
        assert_eq!(Poly::bernstein_term(1, 2).eval(&q(1, 2)), q(1, 8));
    }

    #[test]
    fn remainder_and_deflation() {
        let f = p(&[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        assert_eq!(f.rem(&p(&[-1, 1])), Poly::zero());
        assert_eq!(f.deflate(&q(1, 1)), p(&[6, -5, 1]));
    }

    #[test]
    fn isolates_close_roots() {
        // (3x - 1)(3x - 2)(10x - 7) has three roots in (0, 1).
        let h = p(&[2, -9, 9]).mul(&p(&[-7, 10]));
        let roots = isolate_roots(&h, &q(0, 1), &q(1, 1));
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert!(changes_sign(&h, r));
        }
    }

    #[test]
    fn double_root_does_not_change_sign() {
        let f = p(&[1, -4, 4]); // (2x - 1)^2
        let roots = isolate_roots(&f, &q(0, 1), &q(1, 1));
        assert_eq!(roots.len(), 1);
        assert!(!changes_sign(&f, &roots[0]));
        assert!(roots[0].lo < q(1, 2) && q(1, 2) < roots[0].hi);
    }
}
