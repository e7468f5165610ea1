use num_traits::One;

use super::generic::{find_generic_element, GenericElement};
use crate::error::{Error, Result};
use crate::exactmath::{dyadic_bits, pick_root, real_roots, FixedInterval, Rational, RealRoot};
use crate::fglm::{fglm_convert, solve_triangular, VarietyPoint};
use crate::polyring::MonomialOrder;
use crate::structure_ideal::StructureBasis;

/// Seed used when triangular solving in every single variable fails and
/// the points have to come from a generic coordinate.
pub const FALLBACK_SEED: u64 = 0;

/// All points of the variety, unsorted. Tries lex with each `x_i`
/// smallest, then falls back to a generic linear coordinate.
pub fn variety_points(sb: &StructureBasis, precision: &Rational) -> Result<Vec<VarietyPoint>> {
    let n = sb.nvars();
    if n == 1 {
        return Ok(vec![VarietyPoint::from_rationals(vec![Rational::one()])]);
    }
    for i in 1..n {
        let gb = fglm_convert(sb, &MonomialOrder::lex_smallest(n, i))?;
        match solve_triangular(&gb, precision) {
            Ok(points) => return Ok(points),
            Err(Error::NotTriangularEnough { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    let ge = find_generic_element(sb.scheme(), FALLBACK_SEED, 10, 32)?;
    points_from_generic(sb, &ge, precision)
}

/// Evaluates the per-variable expressions at every root of the eliminant.
pub fn points_from_generic(
    sb: &StructureBasis,
    ge: &GenericElement,
    precision: &Rational,
) -> Result<Vec<VarietyPoint>> {
    let alg = sb.quotient();
    let mut candidates: Vec<Option<Vec<RealRoot>>> = vec![None; sb.nvars()];
    let mut points = Vec::new();
    for mut theta in real_roots(&ge.eliminant, precision)? {
        let mut coords = Vec::with_capacity(sb.nvars());
        for (j, expr) in ge.expressions.iter().enumerate() {
            if let Some(t) = theta.as_rational() {
                coords.push(RealRoot::exact(expr.eval(t)));
                continue;
            }
            if candidates[j].is_none() {
                candidates[j] = Some(real_roots(&alg.minimal_polynomial_of_var(j), precision)?);
            }
            let cands = candidates[j].as_mut().expect("filled above");
            let picked = pick_root(cands, |w| {
                theta.refine_to(w);
                FixedInterval::eval_poly(expr, &theta.interval(), dyadic_bits(w))
            })
            .ok_or_else(|| {
                Error::InternalInvariantViolation(format!(
                    "x{j} matches no eigenvalue of its matrix"
                ))
            })?;
            coords.push(cands[picked].clone());
        }
        points.push(VarietyPoint::new(coords));
    }
    if points.len() != sb.nvars() {
        return Err(Error::InternalInvariantViolation(format!(
            "eliminant has {} real roots, expected {}",
            points.len(),
            sb.nvars()
        )));
    }
    Ok(points)
}
