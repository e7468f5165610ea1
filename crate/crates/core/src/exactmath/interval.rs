use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::rational::{midpoint, Rational};
use super::unipoly::UniPoly;

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        Self { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        Self {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        midpoint(&self.lo, &self.hi)
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// Largest absolute value of a point in the interval.
    pub fn magnitude(&self) -> Rational {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if a <= b {
            Self::new(a, b)
        } else {
            Self::new(b, a)
        }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(Self::new(self.hi.recip(), self.lo.recip()))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self * &r)
    }

    pub fn eval_poly(p: &UniPoly, x: &Interval) -> Interval {
        p.coeffs()
            .iter()
            .rev()
            .fold(Interval::point(Rational::zero()), |acc, c| {
                &(&acc * x) + &Interval::point(c.clone())
            })
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Add for &Interval {
    type Output = Interval;

    fn add(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo + &rhs.lo, &self.hi + &rhs.hi)
    }
}

impl Sub for &Interval {
    type Output = Interval;

    fn sub(self, rhs: &Interval) -> Interval {
        Interval::new(&self.lo - &rhs.hi, &self.hi - &rhs.lo)
    }
}

impl Neg for &Interval {
    type Output = Interval;

    fn neg(self) -> Interval {
        Interval::new(-&self.hi, -&self.lo)
    }
}

impl Mul for &Interval {
    type Output = Interval;

    fn mul(self, rhs: &Interval) -> Interval {
        if self.lo == self.hi {
            return rhs.scale(&self.lo);
        }
        if rhs.lo == rhs.hi {
            return self.scale(&rhs.lo);
        }
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{frac, rat};
    use proptest::prelude::*;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(rat(a), rat(b))
    }

    #[test]
    fn arithmetic_encloses() {
        assert_eq!(&iv(-1, 2) * &iv(3, 4), iv(-4, 8));
        assert_eq!(&iv(-1, 2) - &iv(3, 4), iv(-5, -1));
        assert_eq!(
            iv(2, 4).recip(),
            Some(Interval::new(frac(1, 4), frac(1, 2)))
        );
        assert_eq!(iv(-1, 1).recip(), None);
    }

    proptest! {
        #[test]
        fn poly_eval_contains_pointwise_values(
            coeffs in proptest::collection::vec(-6i64..=6, 1..6),
            a in -20i64..20, w in 0i64..10, t in 0i64..=10,
        ) {
            let p = UniPoly::from_i64(&coeffs);
            let x = Interval::new(frac(a, 4), frac(a + w, 4));
            let inner = frac(a, 4) + frac(w * t, 40);
            prop_assert!(Interval::eval_poly(&p, &x).contains(&p.eval(&inner)));
        }
    }
}
