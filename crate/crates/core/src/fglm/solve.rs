use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::convert::ReducedGB;
use crate::error::{Error, Result};
use crate::exactmath::{dyadic_bits, pick_root, real_roots, Interval, Rational, RealRoot, UniPoly};
use crate::polyring::{MPoly, Monomial, OrderKind};
use crate::structure_ideal::StructureBasis;

/// A point of the variety, one coordinate per variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VarietyPoint {
    pub coordinates: Vec<RealRoot>,
}

impl VarietyPoint {
    pub fn new(coordinates: Vec<RealRoot>) -> Self {
        Self { coordinates }
    }

    pub fn from_rationals(values: Vec<Rational>) -> Self {
        Self::new(values.into_iter().map(RealRoot::exact).collect())
    }

    pub fn is_rational(&self) -> bool {
        self.coordinates.iter().all(RealRoot::is_exact)
    }

    pub fn as_rationals(&self) -> Option<Vec<Rational>> {
        self.coordinates
            .iter()
            .map(|c| c.as_rational().cloned())
            .collect()
    }

    pub fn intervals(&self) -> Vec<Interval> {
        self.coordinates.iter().map(RealRoot::interval).collect()
    }

    pub fn refine_to(&mut self, width: &Rational) {
        self.coordinates.iter_mut().for_each(|c| c.refine_to(width));
    }

    /// Exact comparison, coordinate by coordinate.
    pub fn cmp_real(&self, other: &Self) -> Ordering {
        self.coordinates
            .iter()
            .zip(&other.coordinates)
            .map(|(a, b)| a.cmp_real(b))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    }

    /// Exact zero test for rational points; for irrational points, whether
    /// the residual enclosure on the certification grid contains zero.
    pub fn satisfies(&self, f: &MPoly) -> bool {
        match self.as_rationals() {
            Some(v) => f.eval(&v).is_zero(),
            None => self.residual(f, CERTIFICATION_BITS).contains_zero(),
        }
    }

    /// Enclosure of `f` at the point, computed on the grid `2^-bits`.
    pub fn residual(&self, f: &MPoly, bits: u64) -> Interval {
        f.eval_fixed(&self.intervals(), bits)
    }
}

/// Irrational residuals and products are certified on the grid `2^-64`.
pub const CERTIFICATION_BITS: u64 = 64;

pub fn pairwise_distinct(points: &[VarietyPoint]) -> bool {
    points.iter().enumerate().all(|(i, p)| {
        points[i + 1..]
            .iter()
            .all(|q| p.cmp_real(q) != Ordering::Equal)
    })
}

/// `g` with every variable other than `y` replaced by its rational value,
/// as a polynomial in `y`.
fn specialize(g: &MPoly, y: usize, values: &[Option<RealRoot>]) -> UniPoly {
    let deg = g.degree_in(y).unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in g.terms() {
        let mut t = c.clone();
        for (v, &e) in m.exponents().iter().enumerate() {
            if v != y && e > 0 {
                let val = values[v]
                    .as_ref()
                    .and_then(RealRoot::as_rational)
                    .expect("rational");
                t *= num_traits::pow(val.clone(), e as usize);
            }
        }
        coeffs[m.exponents()[y] as usize] += t;
    }
    UniPoly::new(coeffs)
}

/// Splits `g` into `c * y + r` when `g` has degree 1 in `y`.
fn split_linear(g: &MPoly, y: usize) -> Option<(MPoly, MPoly)> {
    if g.degree_in(y) != Some(1) {
        return None;
    }
    let n = g.nvars();
    let (mut c, mut r) = (MPoly::zero(n), MPoly::zero(n));
    for (m, a) in g.terms() {
        if m.exponents()[y] == 1 {
            let mut e = m.exponents().to_vec();
            e[y] = 0;
            c.add_term(Monomial::new(e), a.clone());
        } else {
            r.add_term(m.clone(), a.clone());
        }
    }
    Some((c, r))
}

fn partial_intervals(values: &[Option<RealRoot>]) -> Vec<Interval> {
    values
        .iter()
        .map(|v| {
            v.as_ref()
                .map_or_else(|| Interval::point(Rational::zero()), RealRoot::interval)
        })
        .collect()
}

fn refine_partial(values: &mut [Option<RealRoot>], width: &Rational) {
    values.iter_mut().flatten().for_each(|r| r.refine_to(width));
}

/// Solves a lex basis variable by variable, from the smallest upward.
/// Rational partial points are handled by exact specialisation; irrational
/// ones need a generator linear in the next variable.
pub fn solve_triangular(gb: &ReducedGB, precision: &Rational) -> Result<Vec<VarietyPoint>> {
    let order = gb.target_order();
    if order.kind() != OrderKind::Lex {
        return Err(Error::InternalInvariantViolation(
            "triangular solving needs a lex basis".into(),
        ));
    }
    let n = order.nvars();
    let mut partials: Vec<Vec<Option<RealRoot>>> = vec![vec![None; n]];
    let mut candidate_cache: Vec<Option<Vec<RealRoot>>> = vec![None; n];
    for &y in order.priority().iter().rev() {
        let led = gb.generators_led_by(y);
        if led.is_empty() {
            return Err(Error::InternalInvariantViolation(format!(
                "no basis element is led by x{y}; the ideal is not zero-dimensional"
            )));
        }
        let mut next = Vec::new();
        for mut partial in partials {
            let rational = partial.iter().flatten().all(RealRoot::is_exact);
            if rational {
                let h = led
                    .iter()
                    .map(|g| specialize(g, y, &partial))
                    .filter(|u| !u.is_zero())
                    .fold(UniPoly::zero(), |acc, u| acc.gcd(&u));
                if h.is_constant() {
                    return Err(Error::InternalInvariantViolation(format!(
                        "empty fibre over a rational partial point at x{y}"
                    )));
                }
                let roots = real_roots(&h, precision)?;
                if roots.len() != h.degree().unwrap_or(0) {
                    return Err(Error::InternalInvariantViolation(format!(
                        "non-real point of the variety in x{y}"
                    )));
                }
                for r in roots {
                    let mut p = partial.clone();
                    p[y] = Some(r);
                    next.push(p);
                }
                continue;
            }
            let value =
                solve_linear_fibre(gb, &led, y, &mut partial, &mut candidate_cache, precision)?;
            partial[y] = Some(value);
            next.push(partial);
        }
        partials = next;
    }
    let mut points: Vec<VarietyPoint> = partials
        .into_iter()
        .map(|p| {
            VarietyPoint::new(
                p.into_iter()
                    .map(|c| c.expect("every variable solved"))
                    .collect(),
            )
        })
        .collect();
    for p in &mut points {
        p.refine_to(precision);
    }
    Ok(points)
}

fn solve_linear_fibre(
    gb: &ReducedGB,
    led: &[&MPoly],
    y: usize,
    partial: &mut [Option<RealRoot>],
    cache: &mut [Option<Vec<RealRoot>>],
    precision: &Rational,
) -> Result<RealRoot> {
    let tiny = precision * precision;
    for g in led {
        let Some((c, r)) = split_linear(g, y) else {
            continue;
        };
        // Find an enclosure of the coefficient that excludes zero.
        let mut w = Rational::one();
        let usable = loop {
            if !c
                .eval_fixed(&partial_intervals(partial), dyadic_bits(&w))
                .contains_zero()
            {
                break true;
            }
            if w < tiny {
                break false;
            }
            w /= Rational::from_integer(16.into());
            refine_partial(partial, &w);
        };
        if !usable {
            continue;
        }
        if cache[y].is_none() {
            let mp = gb.algebra().minimal_polynomial_of_var(y);
            cache[y] = Some(real_roots(&mp, precision)?);
        }
        let candidates = cache[y].as_mut().expect("filled above");
        let picked = pick_root(candidates, |w| {
            refine_partial(partial, w);
            let bits = dyadic_bits(w);
            let iv = partial_intervals(partial);
            let ci = c.eval_fixed(&iv, bits);
            let ri = r.eval_fixed(&iv, bits);
            (-&ri)
                .div(&ci)
                .expect("coefficient enclosure excludes zero")
        });
        let value = picked.map(|i| candidates[i].clone()).ok_or_else(|| {
            Error::InternalInvariantViolation(format!(
                "x{y} matches no root of its minimal polynomial"
            ))
        })?;
        // The other generators led by y were not used to pick the value.
        let mut point = partial.to_vec();
        point[y] = Some(value.clone());
        let filled: Vec<RealRoot> = point
            .into_iter()
            .map(|v| v.unwrap_or_else(|| RealRoot::exact(Rational::zero())))
            .collect();
        let check = VarietyPoint::new(filled);
        if let Some(h) = led
            .iter()
            .find(|h| !std::ptr::eq(**h, *g) && !check.satisfies(h))
        {
            return Err(Error::InternalInvariantViolation(format!(
                "x{y} leaves a nonzero residual on {h}"
            )));
        }
        return Ok(value);
    }
    Err(Error::NotTriangularEnough { var: y })
}

/// The characteristic polynomial of every multiplication matrix vanishes
/// on the matching coordinate of every point, and there are exactly
/// `d + 1` distinct points.
pub fn moller_stetter_check(sb: &StructureBasis, points: &[VarietyPoint]) -> bool {
    let n = sb.nvars();
    if points.len() != n || !pairwise_distinct(points) {
        return false;
    }
    (0..n).all(|i| {
        let cp = sb.multiplication_matrix(i).charpoly();
        points.iter().all(|p| p.coordinates[i].is_root_of(&cp))
    })
}
