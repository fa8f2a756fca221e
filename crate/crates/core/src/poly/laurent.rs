use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A one-variable Laurent polynomial in `q` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, exponent: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exponent, c.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, exponent: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    /// Non-zero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The constant value, if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = LaurentPoly::zero();
        for (&e, x) in &self.terms {
            p.add_term(e, x * c);
        }
        p
    }

    /// Exact value at the integer `k`.
    pub fn eval_at_integer(&self, k: &BigInt) -> Result<BigInt> {
        if k.is_zero() && self.min_exponent().is_some_and(|e| e < 0) {
            return Err(Error::ZeroAtNegativeExponent);
        }
        // clear denominators: p(k) = (sum c k^(e - m)) / k^(-m) with m the smallest exponent
        let shift = self.min_exponent().map_or(0, |m| m.min(0));
        let mut numerator = BigInt::zero();
        for (&e, c) in &self.terms {
            numerator += c * num_traits::pow(k.clone(), (e - shift) as usize);
        }
        let denominator = num_traits::pow(k.clone(), (-shift) as usize);
        if !(&numerator % &denominator).is_zero() {
            return Err(Error::BadParameters(format!("value at {k} is not an integer")));
        }
        let total = numerator / denominator;
        Ok(total)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&e, c) in &rhs.terms {
            p.add_term(e, c.clone());
        }
        p
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&e, c) in &rhs.terms {
            p.add_term(e, -c);
        }
        p
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                p.add_term(a + b, x * y);
            }
        }
        p
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Terms by decreasing exponent, e.g. `q^2 - q + 3 - 2*q^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let power = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            super::write_term(f, i == 0, c, &power)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q_plus_inv() -> LaurentPoly {
        LaurentPoly::from_terms([(1, 1), (-1, 1)])
    }

    #[test]
    fn square_of_q_plus_inverse() {
        let p = q_plus_inv().pow(2);
        assert_eq!(p, LaurentPoly::from_terms([(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(p.to_string(), "q^2 + 2 + q^-2");
    }

    #[test]
    fn zeroth_power_is_one() {
        assert_eq!(q_plus_inv().pow(0), LaurentPoly::one());
        assert_eq!(LaurentPoly::zero().pow(0), LaurentPoly::one());
        assert_eq!(LaurentPoly::zero().pow(3), LaurentPoly::zero());
    }

    #[test]
    fn evaluation_at_integers() {
        let p = LaurentPoly::from_terms([(1, 1), (0, 1)]);
        assert_eq!(p.eval_at_integer(&BigInt::from(2)).unwrap(), BigInt::from(3));
        let inv = LaurentPoly::monomial(1, -1);
        assert_eq!(inv.eval_at_integer(&BigInt::zero()), Err(Error::ZeroAtNegativeExponent));
        let r = LaurentPoly::from_terms([(3, 2), (-2, -5), (0, 7)]);
        assert_eq!(r.eval_at_integer(&BigInt::one()).unwrap(), BigInt::from(4));
        assert_eq!(r.eval_at_integer(&BigInt::from(-1)).unwrap(), BigInt::from(0));
        let halves = LaurentPoly::monomial(2, -1);
        assert_eq!(halves.eval_at_integer(&BigInt::from(2)).unwrap(), BigInt::one());
        assert!(LaurentPoly::monomial(1, -1).eval_at_integer(&BigInt::from(2)).is_err());
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = LaurentPoly::q();
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn rendering() {
        assert_eq!(LaurentPoly::from_terms([(2, 1), (1, -1)]).to_string(), "q^2 - q");
        assert_eq!(LaurentPoly::from_terms([(0, -3), (-1, 2)]).to_string(), "-3 + 2*q^-1");
        assert_eq!(LaurentPoly::monomial(-1, 1).to_string(), "-q");
    }
}
