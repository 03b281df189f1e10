//! Exact dyadic rationals m·2^e.
//!
//! Every finite f64 is dyadic, and the AIM recurrences only add, subtract and
//! multiply (derivatives contribute integer factors), so λ_k, s_k and δ_k are
//! computed without rounding when their inputs are f64 values.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, ToPrimitive, Zero};

/// Exact value `mantissa · 2^exponent`, mantissa odd (or zero with exponent 0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    fn normalized(mantissa: BigInt, exponent: i64) -> Self {
        match mantissa.trailing_zeros() {
            None => Self {
                mantissa,
                exponent: 0,
            },
            Some(0) => Self { mantissa, exponent },
            Some(tz) => Self {
                mantissa: mantissa >> tz,
                exponent: exponent + tz as i64,
            },
        }
    }

    /// Exact conversion; panics on NaN or infinity.
    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite(), "cannot represent {v} exactly");
        if v == 0.0 {
            return Self::zero();
        }
        let bits = v.to_bits();
        let negative = bits >> 63 == 1;
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        let m = BigInt::from(m);
        Self::normalized(if negative { -m } else { m }, e)
    }

    pub fn from_i64(v: i64) -> Self {
        Self::normalized(BigInt::from(v), 0)
    }

    pub fn signum(&self) -> Ordering {
        match self.mantissa.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.magnitude().clone().into(),
            exponent: self.exponent,
        }
    }

    /// (f, e) with value ≈ f · 2^e and |f| < 2^63, avoiding f64 overflow.
    fn parts(&self) -> (f64, i64) {
        let bits = self.mantissa.bits();
        if bits > 62 {
            let shift = bits - 62;
            let top = (&self.mantissa >> shift).to_i64().unwrap_or(0);
            (top as f64, self.exponent + shift as i64)
        } else {
            (self.mantissa.to_i64().unwrap_or(0) as f64, self.exponent)
        }
    }

    /// Nearest-ish f64 (truncated to 62 bits before rounding); may be ±inf or 0.
    pub fn to_f64(&self) -> f64 {
        let (f, e) = self.parts();
        ldexp(f, e)
    }

    /// self / other as f64 without intermediate overflow.
    pub fn ratio_f64(&self, other: &Dyadic) -> f64 {
        let (a, ea) = self.parts();
        let (b, eb) = other.parts();
        ldexp(a / b, ea - eb)
    }

    /// Bit length of the mantissa, a measure of how much exact work is being done.
    pub fn mantissa_bits(&self) -> u64 {
        self.mantissa.bits()
    }
}

fn ldexp(mut x: f64, mut e: i64) -> f64 {
    let big = 2f64.powi(1000);
    let small = 2f64.powi(-1000);
    while e > 1000 && x.is_finite() && x != 0.0 {
        x *= big;
        e -= 1000;
    }
    while e < -1000 && x != 0.0 {
        x *= small;
        e += 1000;
    }
    x * 2f64.powi(e.clamp(-1100, 1100) as i32)
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·2^{}", self.mantissa, self.exponent)
    }
}

impl Zero for Dyadic {
    fn zero() -> Self {
        Self {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }
}

impl One for Dyadic {
    fn one() -> Self {
        Self {
            mantissa: BigInt::one(),
            exponent: 0,
        }
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (lo, hi) = if self.exponent <= rhs.exponent {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let shift = (hi.exponent - lo.exponent) as u64;
        Self::normalized((hi.mantissa << shift) + lo.mantissa, lo.exponent)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Self {
            mantissa: -self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        // odd × odd stays odd
        Self {
            mantissa: self.mantissa * rhs.mantissa,
            exponent: self.exponent + rhs.exponent,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn round_trips_simple_values() {
        for v in [0.0, 1.0, -1.0, 0.5, 3.75, 1e-300, -2.5e300, 5e-324, 0.1] {
            assert_eq!(Dyadic::from_f64(v).to_f64(), v, "{v}");
        }
    }

    #[test]
    fn exact_cancellation() {
        let a = Dyadic::from_f64(1e20);
        let b = Dyadic::from_f64(1.0);
        let c = (a.clone() + b.clone()) - a;
        assert_eq!(c, b);
    }

    #[test]
    fn ratio_of_huge_values() {
        let a = Dyadic::from_f64(1e300) * Dyadic::from_f64(1e300);
        let b = Dyadic::from_f64(1e300) * Dyadic::from_f64(5e299);
        assert!((a.ratio_f64(&b) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn signum() {
        assert_eq!(Dyadic::from_f64(-0.25).signum(), Ordering::Less);
        assert_eq!(Dyadic::zero().signum(), Ordering::Equal);
        assert_eq!(Dyadic::from_i64(7).signum(), Ordering::Greater);
    }

    proptest! {
        #[test]
        fn ring_ops_match_f64_when_exact(a in -1.0e6f64..1.0e6, b in -1.0e6f64..1.0e6) {
            // products of two 53-bit mantissas need up to 106 bits; compare with tolerance
            let da = Dyadic::from_f64(a);
            let db = Dyadic::from_f64(b);
            let p = (da.clone() * db.clone()).to_f64();
            prop_assert!((p - a * b).abs() <= f64::EPSILON * (a * b).abs());
            let s = (da.clone() + db.clone()).to_f64();
            prop_assert!((s - (a + b)).abs() <= f64::EPSILON * (a.abs() + b.abs()));
            prop_assert_eq!((da.clone() - da).signum(), Ordering::Equal);
        }
    }
}
