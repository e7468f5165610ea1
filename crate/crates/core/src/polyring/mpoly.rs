use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::exactmath::rational::render_terms;
use crate::exactmath::{FixedInterval, Interval, Rational, UniPoly};

/// Sparse polynomial over the rationals in a fixed number of variables.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_terms(nvars, [(Monomial::var(nvars, i), Rational::one())])
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let n = m.nvars();
        Self::from_terms(n, [(m, c)])
    }

    /// Sums like terms and drops zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    /// `p(x_var)` lifted into `nvars` variables.
    pub fn from_unipoly(nvars: usize, var: usize, p: &UniPoly) -> Self {
        Self::from_terms(
            nvars,
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; nvars];
                e[var] = k as u32;
                (Monomial::new(e), c.clone())
            }),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponents()[var]).max()
    }

    /// Variables that occur with positive exponent.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.terms.keys().any(|m| m.exponents()[v] > 0))
            .collect()
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Terms from greatest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| order.cmp(b.0, a.0));
        t
    }

    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exponents()
                    .iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| {
                        acc * num_traits::pow(x.clone(), e as usize)
                    })
            })
            .sum()
    }

    /// Like [`MPoly::eval_interval`], with outward rounding to the grid
    /// `2^-bits`.
    pub fn eval_fixed(&self, point: &[Interval], bits: u64) -> Interval {
        assert_eq!(point.len(), self.nvars);
        let point: Vec<FixedInterval> = point
            .iter()
            .map(|x| FixedInterval::from_interval(x, bits))
            .collect();
        let mut powers: Vec<Vec<FixedInterval>> = point
            .iter()
            .map(|x| vec![FixedInterval::one(bits), x.clone()])
            .collect();
        let mut acc = FixedInterval::zero();
        for (m, c) in &self.terms {
            let mut t = FixedInterval::from_rational(c, bits);
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap().mul(&point[v], bits);
                    powers[v].push(next);
                }
                t = t.mul(&powers[v][e as usize], bits);
            }
            acc = acc.add(&t);
        }
        acc.to_interval(bits)
    }

    pub fn eval_interval(&self, point: &[Interval]) -> Interval {
        assert_eq!(point.len(), self.nvars);
        let mut powers: Vec<Vec<Interval>> = point
            .iter()
            .map(|x| vec![Interval::point(Rational::one()), x.clone()])
            .collect();
        for m in self.terms.keys() {
            for (v, &e) in m.exponents().iter().enumerate() {
                while powers[v].len() <= e as usize {
                    let next = powers[v].last().unwrap() * &point[v];
                    powers[v].push(next);
                }
            }
        }
        let mut acc = Interval::point(Rational::zero());
        for (m, c) in &self.terms {
            let mut t = Interval::point(c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[v][e as usize];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Replaces every `x_i` by `images[i]`.
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(self.nvars, MPoly::nvars);
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (&e, img) in m.exponents().iter().zip(images) {
                for _ in 0..e {
                    t = &t * img;
                }
            }
            out = &out + &t;
        }
        out
    }

    /// The univariate polynomial in `var`, if no other variable occurs.
    pub fn to_unipoly(&self, var: usize) -> Option<UniPoly> {
        let mut coeffs = vec![Rational::zero(); self.degree_in(var).unwrap_or(0) as usize + 1];
        for (m, c) in &self.terms {
            if m.support().any(|v| v != var) {
                return None;
            }
            coeffs[m.exponents()[var] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    /// Rendering with terms in descending `order`.
    pub fn display_with(&self, order: &MonomialOrder) -> String {
        render_terms(self.sorted_terms(order).into_iter().map(|(m, c)| {
            let mono = if m.is_one() {
                String::new()
            } else {
                m.to_string()
            };
            (c.clone(), mono)
        }))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&MonomialOrder::deglex(self.nvars)))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}
