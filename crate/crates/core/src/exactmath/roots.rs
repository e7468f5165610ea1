//! Exact real roots of univariate polynomials.
//!
//! Roots are isolated by Descartes bisection on dyadic intervals. A root
//! whose value is rational is always reported as [`RealRoot::Exact`]; every
//! other root is an open isolating interval together with a squarefree
//! defining polynomial that has exactly one root inside it.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::fixed::dyadic_bits;
use super::interval::Interval;
use super::rational::{frac, midpoint, pow10_neg, rat, to_decimal, to_f64, Rational};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Default isolation width, `10^-30`.
pub fn default_precision() -> Rational {
    pow10_neg(30)
}

/// Sign of `p(x)` for integer coefficients `p` (ascending), computed as
/// the sign of `b^n p(a/b)` without any rational normalisation.
pub(crate) fn sign_at(p: &[BigInt], x: &Rational) -> Ordering {
    let Some((top, rest)) = p.split_last() else {
        return Ordering::Equal;
    };
    let (a, b) = (x.numer(), x.denom());
    let mut acc = top.clone();
    let mut bp = BigInt::one();
    for c in rest.iter().rev() {
        bp *= b;
        acc = acc * a + c * &bp;
    }
    acc.sign_ordering()
}

/// Sign of `p(n / 2^k)`.
fn sign_at_dyadic(p: &[BigInt], n: &BigInt, k: u64) -> Ordering {
    let Some((top, rest)) = p.split_last() else {
        return Ordering::Equal;
    };
    let mut acc = top.clone();
    let mut shift = 0;
    for c in rest.iter().rev() {
        shift += k;
        acc = acc * n + (c << shift);
    }
    acc.sign_ordering()
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...` with each member scaled by a
/// positive constant to keep coefficients small.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Vec<BigInt>>,
}

impl SturmSequence {
    pub fn new(p: &UniPoly) -> Self {
        let mut chain = vec![p.primitive_scaled()];
        let d = p.derivative().primitive_scaled();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push((-&r).primitive_scaled());
            }
        }
        let chain = chain
            .iter()
            .map(|q| q.coeffs().iter().map(|c| c.to_integer()).collect())
            .collect();
        Self { chain }
    }

    pub fn variations(&self, x: &Rational) -> usize {
        let signs: Vec<Ordering> = self
            .chain
            .iter()
            .map(|p| sign_at(p, x))
            .filter(|s| *s != Ordering::Equal)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// A real algebraic number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum RealRoot {
    Exact(Rational),
    /// The unique root of `poly` in the open interval `(lo, hi)`; `poly` is
    /// squarefree and nonzero at both endpoints.
    Isolated {
        lo: Rational,
        hi: Rational,
        poly: UniPoly,
    },
}

impl RealRoot {
    pub fn exact(q: Rational) -> Self {
        RealRoot::Exact(q)
    }

    pub fn integer(n: i64) -> Self {
        RealRoot::Exact(rat(n))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RealRoot::Exact(q) => Some(q),
            RealRoot::Isolated { .. } => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RealRoot::Exact(_))
    }

    /// Closed interval guaranteed to contain the value.
    pub fn interval(&self) -> Interval {
        match self {
            RealRoot::Exact(q) => Interval::point(q.clone()),
            RealRoot::Isolated { lo, hi, .. } => Interval::new(lo.clone(), hi.clone()),
        }
    }

    pub fn width(&self) -> Rational {
        match self {
            RealRoot::Exact(_) => Rational::zero(),
            RealRoot::Isolated { lo, hi, .. } => hi - lo,
        }
    }

    /// Squarefree polynomial vanishing at the value.
    pub fn defining_poly(&self) -> UniPoly {
        match self {
            RealRoot::Exact(q) => UniPoly::new(vec![-q.clone(), Rational::one()]),
            RealRoot::Isolated { poly, .. } => poly.clone(),
        }
    }

    /// Bisects until the isolating interval is narrower than `width`. May
    /// turn into an exact root if a bisection point hits it.
    pub fn refine_to(&mut self, width: &Rational) {
        let RealRoot::Isolated { lo, hi, poly } = self else {
            return;
        };
        if &(&*hi - &*lo) < width {
            return;
        }
        let ints = integer_coeffs(poly);
        let lo_sign = sign_at(&ints, lo);
        loop {
            // Move both endpoints inward onto a grid at most a quarter of
            // the current width, then bisect on that grid in integers.
            let mut k = dyadic_bits(&(&*hi - &*lo)).saturating_sub(1);
            let scale = Rational::from_integer(BigInt::one() << k);
            let mut a = (&*lo * &scale).ceil().to_integer();
            let mut b = (&*hi * &scale).floor().to_integer();
            let (sa, sb) = (sign_at_dyadic(&ints, &a, k), sign_at_dyadic(&ints, &b, k));
            if sa == Ordering::Equal || sb == Ordering::Equal {
                let n = if sa == Ordering::Equal { a } else { b };
                *self = RealRoot::Exact(Rational::new(n, BigInt::one() << k));
                return;
            }
            if sa != lo_sign {
                *hi = Rational::new(a, BigInt::one() << k);
            } else if sb == lo_sign {
                *lo = Rational::new(b, BigInt::one() << k);
            } else {
                let (wn, wd) = (width.numer(), width.denom());
                while (&b - &a) * wd >= wn << k {
                    let m = &a + &b;
                    a <<= 1;
                    b <<= 1;
                    k += 1;
                    match sign_at_dyadic(&ints, &m, k) {
                        Ordering::Equal => {
                            *self = RealRoot::Exact(Rational::new(m, BigInt::one() << k));
                            return;
                        }
                        s if s == lo_sign => a = m,
                        _ => b = m,
                    }
                }
                *lo = Rational::new(a, BigInt::one() << k);
                *hi = Rational::new(b, BigInt::one() << k);
            }
            if &(&*hi - &*lo) < width {
                return;
            }
        }
    }

    pub fn refined(&self, width: &Rational) -> Self {
        let mut r = self.clone();
        r.refine_to(width);
        r
    }

    /// Exact comparison of two real algebraic numbers.
    pub fn cmp_real(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RealRoot::Exact(a), RealRoot::Exact(b)) => a.cmp(b),
            (RealRoot::Exact(_), RealRoot::Isolated { .. }) => other.cmp_real(self).reverse(),
            (RealRoot::Isolated { .. }, RealRoot::Exact(q)) => {
                let mut a = self.clone();
                loop {
                    match &a {
                        RealRoot::Exact(v) => return v.cmp(q),
                        RealRoot::Isolated { lo, hi, poly } => {
                            if hi <= q {
                                return Ordering::Less;
                            }
                            if lo >= q {
                                return Ordering::Greater;
                            }
                            if poly.eval(q).is_zero() {
                                return Ordering::Equal;
                            }
                            let w = a.width() / rat(2);
                            a.refine_to(&w);
                        }
                    }
                }
            }
            (RealRoot::Isolated { poly: pa, .. }, RealRoot::Isolated { poly: pb, .. }) => {
                let mut common: Option<Option<SturmSequence>> = None;
                let (mut a, mut b) = (self.clone(), other.clone());
                loop {
                    if !a.is_exact() && !b.is_exact() {
                        let (ia, ib) = (a.interval(), b.interval());
                        if ia.hi <= ib.lo {
                            return Ordering::Less;
                        }
                        if ib.hi <= ia.lo {
                            return Ordering::Greater;
                        }
                        let common = common.get_or_insert_with(|| {
                            let g = if pa == pb { pa.clone() } else { pa.gcd(pb) };
                            (!g.is_constant()).then(|| SturmSequence::new(&g))
                        });
                        if let Some(s) = common {
                            let lo = (&ia.lo).max(&ib.lo);
                            let hi = (&ia.hi).min(&ib.hi);
                            if s.count(lo, hi) > 0 {
                                return Ordering::Equal;
                            }
                        }
                        let (wa, wb) = (a.width() / rat(2), b.width() / rat(2));
                        a.refine_to(&wa);
                        b.refine_to(&wb);
                    } else {
                        return a.cmp_real(&b);
                    }
                }
            }
        }
    }

    /// `c * self`.
    pub fn scale(&self, c: &Rational) -> Self {
        match self {
            RealRoot::Exact(q) => RealRoot::Exact(q * c),
            _ if c.is_zero() => RealRoot::Exact(Rational::zero()),
            RealRoot::Isolated { lo, hi, poly } => {
                // q(x) = p(x / c)
                let inv = c.recip();
                let mut factor = Rational::one();
                let coeffs = poly
                    .coeffs()
                    .iter()
                    .map(|a| {
                        let t = a * &factor;
                        factor *= &inv;
                        t
                    })
                    .collect();
                let poly = UniPoly::new(coeffs).primitive_scaled();
                let (a, b) = (lo * c, hi * c);
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                RealRoot::Isolated { lo, hi, poly }
            }
        }
    }

    pub fn signum(&self) -> Ordering {
        self.cmp_real(&RealRoot::Exact(Rational::zero()))
    }

    /// True iff the value is a root of `p`.
    pub fn is_root_of(&self, p: &UniPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        match self {
            RealRoot::Exact(q) => p.eval(q).is_zero(),
            RealRoot::Isolated { lo, hi, poly } => {
                if p.rem(poly).is_zero() {
                    return true;
                }
                let g = poly.gcd(p);
                !g.is_constant() && SturmSequence::new(&g).count(lo, hi) > 0
            }
        }
    }

    pub fn to_decimal(&self, digits: u32) -> String {
        match self {
            RealRoot::Exact(q) => to_decimal(q, digits),
            RealRoot::Isolated { .. } => {
                let r = self.refined(&pow10_neg(digits + 2));
                to_decimal(&r.interval().mid(), digits)
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.refined(&pow10_neg(20)).interval().mid())
    }
}

impl fmt::Debug for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealRoot::Exact(q) => write!(f, "{q}"),
            RealRoot::Isolated { lo, hi, poly } => {
                write!(
                    f,
                    "root of {poly} in ({:.12}, {:.12})",
                    to_f64(lo),
                    to_f64(hi)
                )
            }
        }
    }
}

/// Integer coefficients of a positive multiple of `p`.
fn integer_coeffs(p: &UniPoly) -> Vec<BigInt> {
    if p.coeffs().iter().all(|c| c.is_integer()) {
        return p.coeffs().iter().map(|c| c.to_integer()).collect();
    }
    p.primitive_scaled()
        .coeffs()
        .iter()
        .map(|c| c.to_integer())
        .collect()
}

/// Strict upper bound on the absolute value of every root (Cauchy).
fn root_bound(p: &UniPoly) -> Rational {
    let lc = p.leading().unwrap().abs();
    let max = p
        .coeffs()
        .iter()
        .rev()
        .skip(1)
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    (max + Rational::one()).ceil()
}

/// All real roots of `p` in ascending order. Rational roots come back
/// exact; irrational roots as isolating intervals narrower than
/// `precision`, defined by the squarefree part of `p`.
pub fn real_roots(p: &UniPoly, precision: &Rational) -> Result<Vec<RealRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let sq = p.squarefree_part()?.primitive_scaled();
    let ints = integer_coeffs(&sq);

    // Roots lie in (-2^k, 2^k); every bisection point below is dyadic.
    let bound = root_bound(&sq);
    let mut k = 0u32;
    while Rational::from_integer(BigInt::one() << k) < bound {
        k += 1;
    }
    let b = BigInt::one() << k;
    // q(x) = p(2^k (2x - 1)) maps (0, 1) onto (-2^k, 2^k).
    let mut q: Vec<BigInt> = ints
        .iter()
        .enumerate()
        .map(|(i, c)| c * num_traits::pow(b.clone(), i))
        .collect();
    taylor_shift(&mut q, false);
    for (i, c) in q.iter_mut().enumerate() {
        *c <<= i;
    }
    let mut isolated = Vec::new();
    let big = Rational::from_integer(b);
    isolate(&sq, &ints, q, -big.clone(), big, &mut isolated);

    // A rational root a/b in lowest terms has b | lc, so it is a multiple
    // of 1/lc and at most one such multiple fits an interval narrower than
    // 1/lc.
    let lc: BigInt = ints.last().unwrap().clone();
    let grid = Rational::new(BigInt::one(), lc.clone());
    let lc_q = Rational::from_integer(lc);
    let mut out = Vec::with_capacity(isolated.len());
    for mut root in isolated {
        root.refine_to(&grid);
        if let RealRoot::Isolated { lo, hi, .. } = &root {
            let k = (lo * &lc_q).floor() + Rational::one();
            let candidate = k / &lc_q;
            if &candidate < hi && sign_at(&ints, &candidate) == Ordering::Equal {
                root = RealRoot::Exact(candidate);
            }
        }
        root.refine_to(precision);
        out.push(root);
    }
    Ok(out)
}

/// `c(x + 1)` in place, or `c(x - 1)` when `plus` is false.
fn taylor_shift(c: &mut [BigInt], plus: bool) {
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = c[j + 1].clone();
            if plus {
                c[j] += t;
            } else {
                c[j] -= t;
            }
        }
    }
}

/// Descartes bound on the roots of `q` in `(0, 1)`: the sign variations of
/// `(x + 1)^n q(1 / (x + 1))`. Exact when it is 0 or 1.
fn descartes_01(q: &[BigInt]) -> usize {
    let mut r: Vec<BigInt> = q.iter().rev().cloned().collect();
    taylor_shift(&mut r, true);
    let signs: Vec<bool> = r
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Bisects the open interval `(lo, hi)`, where `q(x) = c p(lo + (hi - lo) x)`,
/// until each piece holds at most one root of `p`.
fn isolate(
    p: &UniPoly,
    ints: &[BigInt],
    q: Vec<BigInt>,
    lo: Rational,
    hi: Rational,
    out: &mut Vec<RealRoot>,
) {
    let count = descartes_01(&q);
    if count == 0 {
        return;
    }
    let endpoints_clear =
        sign_at(ints, &lo) != Ordering::Equal && sign_at(ints, &hi) != Ordering::Equal;
    if count == 1 && endpoints_clear {
        out.push(RealRoot::Isolated {
            lo,
            hi,
            poly: p.clone(),
        });
        return;
    }
    let n = q.len() - 1;
    let mid = midpoint(&lo, &hi);
    // Left half: 2^n q(x / 2); right half: the same shifted by one.
    let left: Vec<BigInt> = q.iter().enumerate().map(|(i, c)| c << (n - i)).collect();
    let mut right = left.clone();
    taylor_shift(&mut right, true);
    let mid_is_root = right[0].is_zero();
    isolate(p, ints, left, lo, mid.clone(), out);
    if mid_is_root {
        out.push(RealRoot::Exact(mid.clone()));
    }
    isolate(p, ints, right, mid, hi, out);
}

/// Finds which of `candidates` (disjoint, each holding one value) equals a
/// number known only through enclosures. `enclosure(w)` must return an
/// interval containing the number, ideally narrower than `w` as `w`
/// shrinks. Returns `None` if no candidate is compatible or the budget runs
/// out.
pub fn pick_root(
    candidates: &mut [RealRoot],
    mut enclosure: impl FnMut(&Rational) -> Interval,
) -> Option<usize> {
    let mut w = frac(1, 16);
    for _ in 0..400 {
        let enc = enclosure(&w);
        let hits: Vec<usize> = candidates
            .iter()
            .enumerate()
            .filter(|(_, c)| match c {
                RealRoot::Exact(q) => enc.contains(q),
                RealRoot::Isolated { lo, hi, .. } => lo < &enc.hi && &enc.lo < hi,
            })
            .map(|(i, _)| i)
            .collect();
        match hits.len() {
            0 => return None,
            1 => return Some(hits[0]),
            _ => {
                let target = enc.width().max(w.clone()) / rat(4);
                for &i in &hits {
                    candidates[i].refine_to(&target);
                }
                w /= rat(1 << 16);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn exact_values(roots: &[RealRoot]) -> Vec<Rational> {
        roots
            .iter()
            .map(|r| r.as_rational().cloned().unwrap())
            .collect()
    }

    #[test]
    fn rational_roots_come_back_exact() {
        let p = UniPoly::from_i64(&[0, -18, -3, 1]);
        let roots = real_roots(&p, &default_precision()).unwrap();
        assert_eq!(exact_values(&roots), vec![rat(-3), rat(0), rat(6)]);

        let q = UniPoly::from_i64(&[-5, 1]);
        assert_eq!(
            exact_values(&real_roots(&q, &default_precision()).unwrap()),
            vec![rat(5)]
        );
    }

    #[test]
    fn non_integer_rational_roots() {
        // (2x - 1)(3x + 2)(x - 7)
        let p = &(&UniPoly::from_i64(&[-1, 2]) * &UniPoly::from_i64(&[2, 3]))
            * &UniPoly::from_i64(&[-7, 1]);
        let roots = real_roots(&p, &default_precision()).unwrap();
        assert_eq!(exact_values(&roots), vec![frac(-2, 3), frac(1, 2), rat(7)]);
    }

    #[test]
    fn irrational_roots_are_isolated() {
        let p = UniPoly::from_i64(&[-2, 0, 1]);
        let prec = default_precision();
        let roots = real_roots(&p, &prec).unwrap();
        assert_eq!(roots.len(), 2);
        let s = SturmSequence::new(&p);
        assert_eq!(s.count(&rat(-2), &rat(0)), 1);
        assert_eq!(s.count(&rat(0), &rat(2)), 1);
        for r in &roots {
            let RealRoot::Isolated { lo, hi, poly } = r else {
                panic!("sqrt 2 is irrational")
            };
            assert!(hi - lo < prec);
            assert!(poly.eval(lo).is_positive() != poly.eval(hi).is_positive());
        }
        assert!((roots[1].to_f64() - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(roots[0].to_decimal(6), "-1.414214");
    }

    #[test]
    fn scaling_keeps_isolation() {
        let roots = real_roots(&UniPoly::from_i64(&[-2, 0, 1]), &default_precision()).unwrap();
        let r = roots[1].scale(&frac(-3, 2));
        assert!(r.is_root_of(&UniPoly::from_i64(&[-9, 0, 2])));
        assert!((r.to_f64() + 1.5 * 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(
            RealRoot::integer(4).scale(&frac(1, 2)),
            RealRoot::integer(2)
        );
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert_eq!(
            real_roots(&UniPoly::zero(), &default_precision()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn comparisons_between_representations() {
        let prec = default_precision();
        let sqrt2 = real_roots(&UniPoly::from_i64(&[-2, 0, 1]), &prec).unwrap()[1].clone();
        // sqrt 2 as a root of (x^2 - 2)(x - 5), isolated differently.
        let other = RealRoot::Isolated {
            lo: rat(1),
            hi: rat(2),
            poly: UniPoly::from_i64(&[10, -2, -5, 1]),
        };
        assert_eq!(sqrt2.cmp_real(&other), Ordering::Equal);
        assert_eq!(
            sqrt2.cmp_real(&RealRoot::exact(frac(7, 5))),
            Ordering::Greater
        );
        assert_eq!(RealRoot::integer(2).cmp_real(&sqrt2), Ordering::Greater);
        assert!(sqrt2.is_root_of(&UniPoly::from_i64(&[-2, 0, 1])));
        assert!(!sqrt2.is_root_of(&UniPoly::from_i64(&[-3, 0, 1])));
    }

    #[test]
    fn pick_root_identifies_by_enclosure() {
        let prec = frac(1, 4);
        let mut roots = real_roots(&UniPoly::from_i64(&[-2, 0, 1]), &prec).unwrap();
        // The number 2*sqrt(2)/2 known only through shrinking enclosures.
        let idx = pick_root(&mut roots, |w| {
            let r = RealRoot::Isolated {
                lo: rat(2),
                hi: rat(3),
                poly: UniPoly::from_i64(&[-8, 0, 1]),
            }
            .refined(w);
            r.interval().scale(&frac(1, 2))
        });
        assert_eq!(idx, Some(1));
    }

    proptest! {
        #[test]
        fn roots_of_products_of_linear_and_quadratic_factors(
            lin in proptest::collection::vec((-6i64..=6, 1i64..=3), 0..4),
            quad in proptest::collection::vec(proptest::sample::select(vec![2i64, 3, 5, 6, 7]), 0..2),
        ) {
            let mut p = UniPoly::one();
            for &(a, b) in &lin {
                p = &p * &UniPoly::from_i64(&[-a, b]);
            }
            for &c in &quad {
                p = &p * &UniPoly::from_i64(&[-c, 0, 1]);
            }
            prop_assume!(!p.is_constant());
            let sq = p.squarefree_part().unwrap();
            let roots = real_roots(&sq, &frac(1, 1000)).unwrap();
            prop_assert!(roots.len() <= sq.degree().unwrap());
            for w in roots.windows(2) {
                prop_assert_eq!(w[0].cmp_real(&w[1]), Ordering::Less);
            }
            for r in &roots {
                match r {
                    RealRoot::Exact(q) => prop_assert!(p.eval(q).is_zero()),
                    RealRoot::Isolated { lo, hi, poly } => {
                        prop_assert!(poly.eval(lo).is_positive() != poly.eval(hi).is_positive());
                        prop_assert!(hi - lo < frac(1, 1000));
                    }
                }
            }
            let mut rational: Vec<Rational> = lin.iter().map(|&(a, b)| frac(a, b)).collect();
            rational.sort();
            rational.dedup();
            let mut irrational = quad.clone();
            irrational.sort();
            irrational.dedup();
            prop_assert_eq!(roots.len(), rational.len() + 2 * irrational.len());
            prop_assert_eq!(roots.iter().filter(|r| r.is_exact()).count(), rational.len());
        }

        #[test]
        fn root_count_agrees_with_sturm(coeffs in proptest::collection::vec(-20i64..=20, 2..9)) {
            let p = UniPoly::from_i64(&coeffs);
            prop_assume!(!p.is_constant());
            let sq = p.squarefree_part().unwrap();
            let b = root_bound(&sq);
            let expected = SturmSequence::new(&sq).count(&-b.clone(), &b);
            prop_assert_eq!(real_roots(&p, &frac(1, 100)).unwrap().len(), expected);
        }
    }
}
