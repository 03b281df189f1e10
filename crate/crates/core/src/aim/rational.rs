use std::ops::{Add, Mul, Sub};

use super::{Coefficient, Polynomial};
use crate::error::{domain, Result};

/// numerator / denominator with common factors of y stripped.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<T = f64> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Coefficient> RationalFunction<T> {
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(domain("rational function with zero denominator"));
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_polynomial(p: Polynomial<T>) -> Self {
        Self {
            num: p,
            den: Polynomial::constant(T::one()),
        }
    }

    /// c / y^k
    pub fn inverse_power(c: T, k: usize) -> Self {
        Self::canonical(Polynomial::constant(c), Polynomial::monomial(T::one(), k))
    }

    fn canonical(num: Polynomial<T>, den: Polynomial<T>) -> Self {
        if num.is_zero() {
            return Self::from_polynomial(Polynomial::zero());
        }
        let common = num
            .valuation()
            .unwrap_or(0)
            .min(den.valuation().unwrap_or(0));
        if common == 0 {
            Self { num, den }
        } else {
            Self {
                num: num.shift_down(common),
                den: den.shift_down(common),
            }
        }
    }

    pub fn numerator(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// (p/q)' = (p'q − pq')/q², canonicalized.
    pub fn derivative(&self) -> Self {
        if self.den.degree() == Some(0) {
            return Self {
                num: self.num.derivative(),
                den: self.den.clone(),
            };
        }
        if self.den.is_monomial() {
            // p / (c y^m): (p' y − m p) / (c y^{m+1})
            let m = self.den.valuation().unwrap_or(0);
            let y = Polynomial::monomial(T::one(), 1);
            let num = &(&self.num.derivative() * &y) - &self.num.scale(&T::from_i64(m as i64));
            let den = &self.den * &y;
            return Self::canonical(num, den);
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::canonical(num, den)
    }

    /// Numerator and denominator values at x.
    pub fn eval_parts(&self, x: &T) -> (T, T)
    where
        T: Mul<Output = T> + Add<Output = T>,
    {
        (self.num.eval(x), self.den.eval(x))
    }
}

impl RationalFunction<f64> {
    pub fn eval(&self, x: f64) -> Result<f64> {
        let (n, d) = self.eval_parts(&x);
        if d == 0.0 {
            return Err(domain(format!("rational function has a pole at {x}")));
        }
        Ok(n / d)
    }
}

impl<T: Coefficient> Add for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn add(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_monomial() && rhs.den.is_monomial() {
            // bring both over the higher power of y
            let (a, b) = (self.den.valuation().unwrap(), rhs.den.valuation().unwrap());
            let ca = self.den.coefficients()[a].clone();
            let cb = rhs.den.coefficients()[b].clone();
            if ca == cb {
                let top = a.max(b);
                let lift =
                    |p: &Polynomial<T>, k: usize| p * &Polynomial::monomial(T::one(), top - k);
                let num = &lift(&self.num, a) + &lift(&rhs.num, b);
                return RationalFunction::canonical(num, Polynomial::monomial(ca, top));
            }
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::canonical(num, &self.den * &rhs.den)
    }
}

impl<T: Coefficient> Sub for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn sub(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
        let neg = RationalFunction {
            num: -&rhs.num,
            den: rhs.den.clone(),
        };
        self + &neg
    }
}

impl<T: Coefficient> Mul for &RationalFunction<T> {
    type Output = RationalFunction<T>;

    fn mul(self, rhs: &RationalFunction<T>) -> RationalFunction<T> {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFunction::from_polynomial(Polynomial::zero());
        }
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Derivative entry point used by the AIM recurrences.
pub fn rf_derivative<T: Coefficient>(f: &RationalFunction<T>) -> RationalFunction<T> {
    f.derivative()
}
