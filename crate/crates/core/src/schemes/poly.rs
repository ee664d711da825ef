//! Dense univariate polynomials over an exact coefficient field.

use super::Scalar;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Coefficients ascending; never a trailing zero.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomials over Q.
pub type RatPoly = Poly<BigRational>;

impl<C: Scalar> Poly<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c x^d`.
    pub fn monomial(c: C, d: usize) -> Self {
        let mut coeffs = vec![C::zero(); d];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.times(self))
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc.times(x).plus(c))
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: &C) -> Self {
        let lin = Self::from_coeffs(vec![a.clone(), C::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.times(&lin).plus(&Self::constant(c.clone())))
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or_else(|| Error::NonExactDivision("division by the zero polynomial".into()))?;
        let lead = d.lead();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let factor = rem[top].div_exact(&lead)?;
            let shift = top - dd;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].minus(&factor.times(c));
            }
            quot[shift] = factor;
            // The leading term cancels by construction.
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn monic(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let lead = self.lead();
        Ok(Self::from_coeffs(self.coeffs.iter().map(|c| c.div_exact(&lead)).collect::<Result<_>>()?))
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b)?.1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Renders with `var` as the indeterminate.
    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, body) = c.render_coeff();
            let first = out.is_empty();
            match (first, negative) {
                (true, true) => out.push('-'),
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
                (true, false) => {}
            }
            let unit = body == "1";
            let mono = match d {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{d}"),
            };
            match (unit, mono.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&mono),
                (false, true) => out.push_str(&body),
                (false, false) => out.push_str(&format!("{body}*{mono}")),
            }
        }
        out
    }
}

impl RatPoly {
    /// Polynomial with integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> RatPoly {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Exact square root, when the polynomial is the square of one over Q.
    pub fn sqrt_exact(&self) -> Option<RatPoly> {
        let Some(d) = self.degree() else {
            return Some(self.clone());
        };
        if d % 2 == 1 || self.lead().is_negative() {
            return None;
        }
        let lead_root = rational_sqrt(&self.lead())?;
        let m = d / 2;
        // Solve for the coefficients of the root from the top down.
        let mut root = vec![<BigRational as num_traits::Zero>::zero(); m + 1];
        root[m] = lead_root;
        let two_lead = &root[m] * BigRational::from_integer(2.into());
        for k in (0..m).rev() {
            let mut acc = self.coeff(m + k);
            for i in k + 1..=m {
                let j = m + k - i;
                if j > k && j <= m {
                    acc -= &root[i] * &root[j];
                }
            }
            root[k] = acc / &two_lead;
        }
        let r = Poly::from_coeffs(root);
        (r.times(&r) == *self).then_some(r)
    }

    /// Whether every coefficient is nonnegative and one is positive.
    pub fn has_positive_coefficients(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|c| !c.is_negative())
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| BigRational::new(n, d))
}

impl<C: Scalar> Scalar for Poly<C> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(C::one())
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).plus(&o.coeff(i))).collect())
    }

    fn minus(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).minus(&o.coeff(i))).collect())
    }

    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::from_coeffs(out)
    }

    fn negated(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.negated()).collect())
    }

    fn div_exact(&self, o: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(o)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision(format!("({self}) / ({o}) leaves remainder {r}")))
        }
    }

    fn render_coeff(&self) -> (bool, String) {
        let s = self.to_string();
        if self.coeffs.len() == 1 {
            let (neg, body) = self.coeffs[0].render_coeff();
            return (neg, body);
        }
        (false, format!("({s})"))
    }
}

impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var(C::POLY_VAR))
    }
}

impl Scalar for BigRational {
    const POLY_VAR: &'static str = "q";

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, o: &Self) -> Self {
        self + o
    }

    fn minus(&self, o: &Self) -> Self {
        self - o
    }

    fn times(&self, o: &Self) -> Self {
        self * o
    }

    fn negated(&self) -> Self {
        -self
    }

    fn div_exact(&self, o: &Self) -> Result<Self> {
        if Zero::is_zero(o) {
            return Err(Error::NonExactDivision(format!("{self} / 0")));
        }
        Ok(self / o)
    }

    fn render_coeff(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }

    fn to_json_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n)
    }

    #[test]
    fn arithmetic_and_display() {
        let a = RatPoly::from_ints(&[-1, 0, 1]);
        let b = RatPoly::from_ints(&[1, 1]);
        assert_eq!(a.to_string(), "q^2 - 1");
        assert_eq!(a.div_exact(&b).unwrap(), RatPoly::from_ints(&[-1, 1]));
        assert!(b.div_exact(&a).is_err());
        assert!(a.div_exact(&RatPoly::zero()).is_err());
        assert_eq!(RatPoly::from_ints(&[0, -3, 0, 2]).to_string(), "2*q^3 - 3*q");
        assert_eq!(RatPoly::zero().to_string(), "0");
        assert_eq!(a.eval(&q(3)), q(8));
        assert_eq!(b.pow(3), RatPoly::from_ints(&[1, 3, 3, 1]));
    }

    #[test]
    fn gcd_and_shift() {
        let a = RatPoly::from_ints(&[-1, 0, 1]).times(&RatPoly::from_ints(&[2, 1]));
        let b = RatPoly::from_ints(&[1, 1]).times(&RatPoly::from_ints(&[5, 0, 1]));
        assert_eq!(a.gcd(&b).unwrap(), RatPoly::from_ints(&[1, 1]));
        // (q+2)^2 shifted back by -2 is q^2.
        let s = RatPoly::from_ints(&[4, 4, 1]).shift(&q(-2));
        assert_eq!(s, RatPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn square_roots() {
        let r = RatPoly::from_ints(&[1, 1, 1]).scale(&BigRational::new(3.into(), 2.into()));
        assert_eq!(r.times(&r).sqrt_exact().unwrap(), r);
        assert_eq!(RatPoly::from_ints(&[1, 0, 2]).sqrt_exact(), None);
        assert_eq!(RatPoly::from_ints(&[0, 1]).sqrt_exact(), None);
    }

    fn small_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| RatPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn distributive(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assert_eq!(f.plus(&g).times(&h), f.times(&h).plus(&g.times(&h)));
        }

        #[test]
        fn exact_division_round_trips(f in small_poly(), g in small_poly()) {
            prop_assume!(!g.is_zero());
            let prod = f.times(&g);
            prop_assert_eq!(prod.div_exact(&g).unwrap(), f.clone());
            let (quot, rem) = f.div_rem(&g).unwrap();
            prop_assert_eq!(quot.times(&g).plus(&rem), f);
            prop_assert!(rem.degree() < g.degree());
        }
    }
}
