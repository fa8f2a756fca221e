use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::laurent::forward_owned;
use super::LaurentPoly;

/// A polynomial in `x` and `y` with integer coefficients, keyed by `(deg_x, deg_y)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ((u32, u32), C)>) -> Self {
        let mut p = BiPoly::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut result = BiPoly::one();
        for _ in 0..exponent {
            result = &result * self;
        }
        result
    }

    /// Substitutes Laurent polynomials for `x` and `y`. Powers are computed by repeated
    /// multiplication starting from `1`, so `0^0 = 1`.
    pub fn eval(&self, x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
        let max_i = self.terms.keys().map(|k| k.0).max().unwrap_or(0) as usize;
        let max_j = self.terms.keys().map(|k| k.1).max().unwrap_or(0) as usize;
        let powers = |base: &LaurentPoly, n: usize| {
            let mut v = Vec::with_capacity(n + 1);
            v.push(LaurentPoly::one());
            for k in 0..n {
                let next = &v[k] * base;
                v.push(next);
            }
            v
        };
        let xs = powers(x, max_i);
        let ys = powers(y, max_j);
        let mut total = LaurentPoly::zero();
        for (&(i, j), c) in &self.terms {
            total = &total + &(&xs[i as usize] * &ys[j as usize]).scale(c);
        }
        total
    }

    /// Value at an integer point.
    pub fn eval_integers(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.eval(&LaurentPoly::constant(x.clone()), &LaurentPoly::constant(y.clone()))
            .as_constant()
            .expect("constants evaluate to a constant")
    }

    /// Term order of the canonical rendering: total degree descending, then `x` degree
    /// descending.
    fn render_order(&self) -> Vec<(&(u32, u32), &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(k, _)| std::cmp::Reverse((k.0 + k.1, k.0)));
        v
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut p = self.clone();
        for (&(i, j), c) in &rhs.terms {
            p.add_term(i, j, c.clone());
        }
        p
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut p = self.clone();
        for (&(i, j), c) in &rhs.terms {
            p.add_term(i, j, -c);
        }
        p
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut p = BiPoly::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                p.add_term(a + c, b + d, x * y);
            }
        }
        p
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

forward_owned!(BiPoly, Add add, Sub sub, Mul mul);

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.render_order().into_iter().enumerate() {
            let factor = |var: &str, d: u32| match d {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{var}^{d}")),
            };
            let power: Vec<String> = [factor("x", i), factor("y", j)].into_iter().flatten().collect();
            super::write_term(f, n == 0, c, &power.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let x = BiPoly::x();
        let p = (&x - &BiPoly::one()) * (&x + &BiPoly::one());
        assert_eq!(p, BiPoly::from_terms([((2, 0), 1), ((0, 0), -1)]));
        assert_eq!(p.to_string(), "x^2 - 1");
    }

    #[test]
    fn canonical_rendering_of_worked_example() {
        let x = BiPoly::x();
        let t = &x * &(&x + &BiPoly::y()).pow(2);
        assert_eq!(t.to_string(), "x^3 + 2*x^2*y + x*y^2");
        assert_eq!(BiPoly::from_terms([((1, 0), 1), ((0, 1), 1), ((2, 0), 1)]).to_string(), "x^2 + x + y");
        assert_eq!(BiPoly::y().to_string(), "y");
        assert_eq!(BiPoly::zero().to_string(), "0");
    }

    #[test]
    fn evaluation_of_worked_example_at_colouring_points() {
        // x(x+y)^2 at (1-k, 0) is (1-k)^3
        let x = BiPoly::x();
        let t = &x * &(&x + &BiPoly::y()).pow(2);
        for k in 0..6i64 {
            let v = t.eval_integers(&BigInt::from(1 - k), &BigInt::zero());
            assert_eq!(v, BigInt::from((1 - k).pow(3)));
        }
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        let y_minus_1 = &BiPoly::y() - &BiPoly::one();
        let at = |p: &BiPoly| p.eval(&LaurentPoly::constant(5), &LaurentPoly::one());
        assert_eq!(at(&y_minus_1.pow(0)), LaurentPoly::one());
        assert_eq!(at(&y_minus_1.pow(3)), LaurentPoly::zero());
        assert_eq!(at(&BiPoly::one()), LaurentPoly::one());
    }

    #[test]
    fn evaluation_at_laurent_points() {
        // x + y at (1 - q, 1) = 2 - q
        let p = &BiPoly::x() + &BiPoly::y();
        let one_minus_q = &LaurentPoly::one() - &LaurentPoly::q();
        assert_eq!(p.eval(&one_minus_q, &LaurentPoly::one()), LaurentPoly::from_terms([(0, 2), (1, -1)]));
    }
}
