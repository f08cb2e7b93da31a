use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// A univariate polynomial in `r` with rational coefficients.
///
/// Coefficients are stored densely by ascending power; the highest stored
/// coefficient is never zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The indeterminate `r`.
    pub fn r() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Poly::constant(rational::from_int(c))
    }

    /// `c * r^power`
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rational::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `r^power` (zero beyond the degree).
    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `r^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `self = q * divisor + rem` with `deg rem < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if sd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, rem) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = rem;
        }
        a.monic()
    }

    /// Parses the comma-separated coefficient strings of the JSON form.
    pub fn from_coeff_strings<S: AsRef<str>>(items: &[S]) -> Result<Poly> {
        let coeffs = items
            .iter()
            .map(|s| rational::parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational::format).collect()
    }
}

impl fmt::Display for Poly {
    /// Sparse, descending powers, explicit `*`: `"r^2 - 3*r + 1/2"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let var = match power {
                0 => String::new(),
                1 => "r".to_string(),
                p => format!("r^{p}"),
            };
            if var.is_empty() {
                f.write_str(&rational::format(&abs))?;
            } else if abs.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{}*{}", rational::format(&abs), var)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_coeff_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        Poly::from_coeff_strings(&items).map_err(serde::de::Error::custom)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Poly {
        Poly::constant(c)
    }
}
