//! Interval arithmetic on the dyadic grid `2^-bits Z`.
//!
//! Endpoints are integers scaled by `2^bits` and every operation rounds
//! outward, so results enclose the exact ones without any gcd work.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::interval::Interval;
use super::rational::Rational;
use super::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedInterval {
    lo: BigInt,
    hi: BigInt,
}

fn floor_scaled(q: &Rational, bits: u64) -> BigInt {
    (q.numer() << bits).div_floor(q.denom())
}

fn ceil_scaled(q: &Rational, bits: u64) -> BigInt {
    -((-q.numer() << bits).div_floor(q.denom()))
}

fn ceil_shift(x: BigInt, bits: u64) -> BigInt {
    -((-x) >> bits)
}

impl FixedInterval {
    pub fn from_interval(iv: &Interval, bits: u64) -> Self {
        Self {
            lo: floor_scaled(&iv.lo, bits),
            hi: ceil_scaled(&iv.hi, bits),
        }
    }

    pub fn from_rational(q: &Rational, bits: u64) -> Self {
        Self::from_interval(&Interval::point(q.clone()), bits)
    }

    pub fn one(bits: u64) -> Self {
        let o = BigInt::one() << bits;
        Self {
            lo: o.clone(),
            hi: o,
        }
    }

    pub fn zero() -> Self {
        Self {
            lo: BigInt::default(),
            hi: BigInt::default(),
        }
    }

    pub fn to_interval(&self, bits: u64) -> Interval {
        let s = BigInt::one() << bits;
        Interval::new(
            Rational::new(self.lo.clone(), s.clone()),
            Rational::new(self.hi.clone(), s),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn mul(&self, o: &Self, bits: u64) -> Self {
        let p = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        Self {
            lo: lo >> bits,
            hi: ceil_shift(hi, bits),
        }
    }

    /// Horner evaluation of `p` on `x`.
    pub fn eval_poly(p: &UniPoly, x: &Interval, bits: u64) -> Interval {
        let fx = Self::from_interval(x, bits);
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| {
                acc.mul(&fx, bits).add(&Self::from_rational(c, bits))
            })
            .to_interval(bits)
    }
}

/// Bits `k` of the grid `2^-k <= w / 8`, for positive `w`.
pub fn dyadic_bits(w: &Rational) -> u64 {
    (w.denom().bits() as i64 - w.numer().bits() as i64 + 4).max(0) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{frac, rat};
    use proptest::prelude::*;

    #[test]
    fn rounding_is_outward() {
        let x = FixedInterval::from_rational(&frac(1, 3), 4);
        assert_eq!(x.to_interval(4), Interval::new(frac(5, 16), frac(6, 16)));
        let y = FixedInterval::from_rational(&frac(-1, 3), 4);
        assert_eq!(y.to_interval(4), Interval::new(frac(-6, 16), frac(-5, 16)));
        let sq = y.mul(&y, 4).to_interval(4);
        assert!(sq.contains(&frac(1, 9)));
    }

    #[test]
    fn grid_bits() {
        assert_eq!(dyadic_bits(&rat(64)), 0);
        for w in [frac(1, 3), frac(7, 1000)] {
            let g = Rational::new(BigInt::one(), BigInt::one() << dyadic_bits(&w));
            assert!(g <= &w / rat(8));
        }
    }

    proptest! {
        #[test]
        fn poly_eval_encloses(
            coeffs in proptest::collection::vec(-9i64..=9, 1..7),
            a in -40i64..40, w in 0i64..10, t in 0i64..=10, bits in 0u64..40,
        ) {
            let p = UniPoly::from_i64(&coeffs);
            let x = Interval::new(frac(a, 7), frac(a + w, 7));
            let inner = frac(a, 7) + frac(w * t, 70);
            prop_assert!(FixedInterval::eval_poly(&p, &x, bits).contains(&p.eval(&inner)));
        }
    }
}
