//! Truncated power series in `t` over an exact coefficient ring.
//!
//! A series carries an explicit inclusive truncation order. Reading a
//! coefficient past the order is an error, never a silent zero, and
//! arithmetic never claims precision beyond the smaller operand order.

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::rational::{ratio, Rat};
use num_traits::{One, Zero};

/// Coefficient ring for series and series matrices: exact arithmetic with a
/// scalar action by `Rat`. Implemented by `Rat` (numeric directions) and
/// `MultiPoly` (symbolic directions).
pub trait Ring: Clone + PartialEq {
    /// Additive identity of the same shape as `self` (same variable count
    /// for polynomials).
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplication by an exact rational scalar.
    fn scale(&self, s: &Rat) -> Self;
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Rat) -> Self {
        self * s
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars())
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Rat) -> Self {
        MultiPoly::scale(self, s)
    }
}

/// Power series in `t` truncated inclusively at `t^order`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<C: Ring> {
    coeffs: Vec<C>, // index p holds the coefficient of t^p; len == order + 1
}

impl<C: Ring> TruncSeries<C> {
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the t^0 coefficient");
        TruncSeries { coeffs }
    }

    pub fn constant(c: C, order: usize) -> Self {
        let z = c.zero_like();
        let mut coeffs = vec![z; order + 1];
        coeffs[0] = c;
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^p`; an error when `p` exceeds the order.
    pub fn coeff(&self, p: usize) -> Result<&C> {
        self.coeffs.get(p).ok_or_else(|| {
            Error::Precision(format!(
                "coefficient of t^{p} requested from a series truncated at t^{}",
                self.order()
            ))
        })
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|p| self.coeffs[p].add_ref(&rhs.coeffs[p]))
            .collect();
        TruncSeries { coeffs }
    }

    /// Truncated Cauchy product at the smaller operand order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for p in 0..=order {
            let mut acc = self.coeffs[0].mul_ref(&rhs.coeffs[p]);
            for i in 1..=p {
                acc = acc.add_ref(&self.coeffs[i].mul_ref(&rhs.coeffs[p - i]));
            }
            coeffs.push(acc);
        }
        TruncSeries { coeffs }
    }

    /// Multiply every coefficient by a rational scalar.
    pub fn scale(&self, s: &Rat) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
        }
    }

    /// Multiply every coefficient by a fixed ring element.
    pub fn scale_coeff(&self, c: &C) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect(),
        }
    }
}

/// `exp(-a t)` truncated at `t^order`: the series with coefficients
/// `(-a)^r / r!`.
pub fn exp_lin<C: Ring>(a: &C, order: usize) -> TruncSeries<C> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(a.one_like());
    for r in 1..=order {
        let next = coeffs[r - 1]
            .mul_ref(&a.neg_ref())
            .scale(&ratio(1, r as i64));
        coeffs.push(next);
    }
    TruncSeries::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn exp_constant_term_is_one() {
        let s = exp_lin(&rat(5), 4);
        assert_eq!(s.coeff(0).unwrap(), &rat(1));
        // a = 0 gives the constant series 1
        let id = exp_lin(&rat(0), 3);
        assert_eq!(id, TruncSeries::constant(rat(1), 3));
    }

    #[test]
    fn inverse_exponentials_cancel() {
        let a = rat(3);
        let prod = exp_lin(&a, 2).mul(&exp_lin(&(-a), 2));
        assert_eq!(prod, TruncSeries::constant(rat(1), 2));
    }

    #[test]
    fn cubic_taylor_coefficient() {
        // coefficient of t^3 in exp(-a t) is -a^3/6
        let a = MultiPoly::var(2, 0);
        let s = exp_lin(&a, 3);
        let expect = a.pow(3).scale(&ratio(-1, 6));
        assert_eq!(s.coeff(3).unwrap(), &expect);
    }

    #[test]
    fn reading_past_order_is_an_error() {
        let s = exp_lin(&rat(1), 2);
        assert!(s.coeff(2).is_ok());
        assert!(matches!(s.coeff(3), Err(Error::Precision(_))));
    }

    #[test]
    fn mul_truncates_to_smaller_order() {
        let a = exp_lin(&rat(1), 5);
        let b = exp_lin(&rat(2), 3);
        assert_eq!(a.mul(&b).order(), 3);
        // exp(-t)*exp(-2t) = exp(-3t)
        assert_eq!(a.mul(&b), exp_lin(&rat(3), 3));
    }
}
