use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A rational function `num / den` in `r`, kept reduced with a monic
/// denominator so that equal functions have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.div_rem(&g).expect("gcd is nonzero").0,
                den.div_rem(&g).expect("gcd is nonzero").0,
            )
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        let inv = lc.recip();
        if inv != Rational::from_integer(1.into()) {
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Poly::one().into()
    }

    pub fn from_int(c: i64) -> Self {
        Poly::from_int(c).into()
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this function equals, if its denominator is 1.
    pub fn to_poly(&self) -> Option<Poly> {
        (self.den == Poly::one()).then(|| self.num.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Field division; fails when `rhs` is zero.
    pub fn try_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        Poly::constant(c).into()
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncWire {
    num: Poly,
    den: Poly,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFuncWire {
            num: self.num.clone(),
            den: self.den.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = RatFuncWire::deserialize(d)?;
        RatFunc::new(w.num, w.den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::from_frac;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn division_examples() {
        let one = RatFunc::one();
        let r: RatFunc = Poly::r().into();
        let inv = one.try_div(&r).unwrap();
        assert_eq!(inv.numer(), &p(&[1]));
        assert_eq!(inv.denom(), &p(&[0, 1]));

        let r2: RatFunc = p(&[0, 0, 1]).into();
        assert_eq!(r2.try_div(&r).unwrap(), r);

        // (r^2 - 1) / (r - 1) = r + 1, checked against long division
        let (q, rem) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert!(rem.is_zero());
        let a: RatFunc = p(&[-1, 0, 1]).into();
        let b: RatFunc = p(&[-1, 1]).into();
        assert_eq!(a.try_div(&b).unwrap(), q.into());

        assert_eq!(a.try_div(&RatFunc::zero()), Err(Error::DivisionByZero));
        assert!(RatFunc::new(p(&[1]), Poly::zero()).is_err());
    }

    #[test]
    fn canonical_form() {
        // (2r + 2) / (4r^2 - 4) = (1/2) / (r - 1)
        let x = rf(&[2, 2], &[-4, 0, 4]);
        assert_eq!(x.denom(), &p(&[-1, 1]));
        assert_eq!(x.numer(), &Poly::constant(from_frac(1, 2)));
        assert_eq!(rf(&[0], &[3, 7]), RatFunc::zero());
        assert_eq!(rf(&[0, 1], &[0, 1]), RatFunc::one());
    }

    #[test]
    fn json_form() {
        let x = rf(&[1], &[0, 1]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"num":["1"],"den":["0","1"]}"#);
        let back: RatFunc =
            serde_json::from_str(r#"{"num":["0","2"],"den":["0","0","4"]}"#).unwrap();
        assert_eq!(back, rf(&[1], &[0, 2]));
        assert!(serde_json::from_str::<RatFunc>(r#"{"num":["1"],"den":[]}"#).is_err());
    }

    fn small_ratfunc() -> impl Strategy<Value = RatFunc> {
        let poly = || prop::collection::vec(-4i64..=4, 0..4).prop_map(|c| Poly::from_ints(&c));
        (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| RatFunc::new(n, d).ok())
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_ratfunc(), b in small_ratfunc(), c in small_ratfunc()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, RatFunc::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), RatFunc::one());
                prop_assert_eq!(&b.try_div(&a).unwrap() * &a, b.clone());
            }
        }

        #[test]
        fn canonicalization_is_idempotent(a in small_ratfunc()) {
            let again = RatFunc::new(a.numer().clone(), a.denom().clone()).unwrap();
            prop_assert_eq!(&again, &a);
            prop_assert_eq!(a.denom().leading().cloned(), Some(Rational::from_integer(1.into())));
            prop_assert_eq!(a.numer().gcd(a.denom()), Poly::one());
        }
    }
}
