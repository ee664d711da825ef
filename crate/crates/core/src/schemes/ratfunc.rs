//! Rational functions over Q in one variable.

use super::poly::RatPoly;
use super::Scalar;
use crate::error::{Error, Result};
use num_rational::BigRational;
use std::fmt;

/// `num / den`, reduced, with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct RatFunc {
    num: RatPoly,
    den: RatPoly,
}

impl RatFunc {
    pub fn new(num: RatPoly, den: RatPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::NonExactDivision(format!("({num}) / 0")));
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den)?;
        let (num, den) = (num.div_exact(&g)?, den.div_exact(&g)?);
        let lead = den.lead();
        Ok(RatFunc { num: num.scale(&lead.recip()), den: den.scale(&lead.recip()) })
    }

    pub fn poly(p: RatPoly) -> RatFunc {
        RatFunc::new(p, RatPoly::one()).expect("denominator is one")
    }

    /// The indeterminate.
    pub fn var() -> RatFunc {
        RatFunc::poly(RatPoly::x())
    }

    pub fn num(&self) -> &RatPoly {
        &self.num
    }

    pub fn den(&self) -> &RatPoly {
        &self.den
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&RatPoly> {
        (self.den == RatPoly::one()).then_some(&self.num)
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        let base = if e < 0 { RatFunc::one().div_exact(self)? } else { self.clone() };
        Ok((0..e.unsigned_abs()).fold(RatFunc::one(), |acc, _| acc.times(&base)))
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        self.num.eval(x).div_exact(&self.den.eval(x))
    }

    /// `f(x + a)`.
    pub fn shift(&self, a: &BigRational) -> RatFunc {
        RatFunc::new(self.num.shift(a), self.den.shift(a)).expect("shift keeps the denominator nonzero")
    }

    pub fn display_var(&self, var: &str) -> String {
        if self.den == RatPoly::one() {
            self.num.display_var(var)
        } else {
            let wrap = |p: &RatPoly| {
                let terms = p.coeffs().iter().filter(|c| !c.is_zero()).count();
                let s = p.display_var(var);
                if terms > 1 || s.contains('*') { format!("({s})") } else { s }
            };
            format!("{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl Scalar for RatFunc {
    const POLY_VAR: &'static str = "X";

    fn zero() -> Self {
        RatFunc { num: RatPoly::zero(), den: RatPoly::one() }
    }

    fn one() -> Self {
        RatFunc { num: RatPoly::one(), den: RatPoly::one() }
    }

    fn from_i64(n: i64) -> Self {
        RatFunc { num: RatPoly::from_i64(n), den: RatPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn plus(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RatFunc::new(self.num.plus(&o.num), self.den.clone()).expect("nonzero denominator");
        }
        RatFunc::new(self.num.times(&o.den).plus(&o.num.times(&self.den)), self.den.times(&o.den))
            .expect("nonzero denominator")
    }

    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }

    fn times(&self, o: &Self) -> Self {
        RatFunc::new(self.num.times(&o.num), self.den.times(&o.den)).expect("nonzero denominator")
    }

    fn negated(&self) -> Self {
        RatFunc { num: self.num.negated(), den: self.den.clone() }
    }

    fn div_exact(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::NonExactDivision(format!("({self}) / 0")));
        }
        RatFunc::new(self.num.times(&o.den), self.den.times(&o.num))
    }

    fn render_coeff(&self) -> (bool, String) {
        if self.den == RatPoly::one() {
            return self.num.render_coeff();
        }
        (false, format!("({self})"))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("q"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatFunc {
        RatFunc::poly(RatPoly::from_ints(c))
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (q^2 - 1) / (2q + 2) = (q - 1)/2
        let f = RatFunc::new(RatPoly::from_ints(&[-1, 0, 1]), RatPoly::from_ints(&[2, 2])).unwrap();
        assert_eq!(f.den(), &RatPoly::one());
        assert_eq!(f.to_string(), "1/2*q - 1/2");
        assert!(RatFunc::new(RatPoly::one(), RatPoly::zero()).is_err());
    }

    #[test]
    fn field_operations() {
        let q = RatFunc::var();
        let inv = q.pow(-2).unwrap();
        assert_eq!(inv.times(&q).times(&q), RatFunc::one());
        let a = p(&[1, 1]).div_exact(&p(&[-1, 1])).unwrap();
        assert_eq!(a.to_string(), "(q + 1)/(q - 1)");
        assert_eq!(a.minus(&a), RatFunc::zero());
        assert_eq!(a.eval(&BigRational::from_i64(3)).unwrap(), BigRational::from_i64(2));
        assert!(a.eval(&BigRational::from_i64(1)).is_err());
        assert!(a.div_exact(&RatFunc::zero()).is_err());
        assert_eq!(a.shift(&BigRational::from_i64(1)).to_string(), "(q + 2)/q");
    }
}
