use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::express::linear_generator;
use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational, UniPoly};
use crate::fglm::{fglm, ReducedGB};
use crate::polyring::MonomialOrder;
use crate::scheme::Scheme;
use crate::structure_ideal::structure_basis;

pub const DEFAULT_MAX_COEFF: u64 = 10;
pub const DEFAULT_MAX_ATTEMPTS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    /// The variable added to the last coordinate.
    pub variable: usize,
    pub multiplier: u64,
}

/// `A = Σ c_i D_i` whose eigenvalues separate the points of the variety.
#[derive(Clone, Debug)]
pub struct GenericElement {
    pub coefficients: Vec<u64>,
    /// Monic, squarefree, degree `d + 1`, in the variable `y = Σ c_i x_i`.
    pub eliminant: UniPoly,
    /// `x_j = expressions[j](y)` on the variety, reduced modulo the
    /// eliminant.
    pub expressions: Vec<UniPoly>,
    pub trace: Vec<CoordinateChange>,
    pub basis: ReducedGB,
}

/// Replaces the last coordinate by `c x_j + x_d`, with `j` the first
/// variable not yet expressible and `c` drawn from `1..=max_coeff`, until
/// the last coordinate separates all points.
pub fn find_generic_element(
    s: &Scheme,
    rng_seed: u64,
    max_coeff: u64,
    max_attempts: usize,
) -> Result<GenericElement> {
    if max_coeff == 0 {
        return Err(Error::InvalidArgument("max_coeff must be positive".into()));
    }
    let sb = structure_basis(s)?;
    let d = s.d();
    let n = d + 1;
    let algebra = sb.quotient();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut coefficients = vec![0u64; n];
    coefficients[d] = 1;
    let mut trace = Vec::new();
    let order = MonomialOrder::lex_smallest(n, d);
    loop {
        let coeffs: Vec<Rational> = coefficients.iter().map(|&c| rat(c as i64)).collect();
        let current = algebra.with_linear_coordinate(d, &coeffs);
        let gb = fglm(&current, &order)?;
        let stuck = (1..d).find(|&j| linear_generator(&gb, j, &[d]).is_none());
        let Some(j) = stuck else {
            return finish(gb, coefficients, trace, d);
        };
        if trace.len() >= max_attempts {
            return Err(Error::AttemptsExhausted {
                attempts: max_attempts,
            });
        }
        let c = rng.random_range(1..=max_coeff);
        coefficients[j] += c;
        trace.push(CoordinateChange {
            variable: j,
            multiplier: c,
        });
    }
}

fn finish(
    gb: ReducedGB,
    coefficients: Vec<u64>,
    trace: Vec<CoordinateChange>,
    d: usize,
) -> Result<GenericElement> {
    let eliminant = gb
        .eliminant()
        .ok_or_else(|| Error::InternalInvariantViolation("lex basis without eliminant".into()))?;
    if eliminant.degree() != Some(d + 1) || !eliminant.is_squarefree() {
        return Err(Error::InternalInvariantViolation(format!(
            "generic eliminant {eliminant} is not squarefree of degree {}",
            d + 1
        )));
    }
    let mut expressions: Vec<UniPoly> = vec![UniPoly::one()];
    for j in 1..d {
        let q = linear_generator(&gb, j, &[d]).expect("checked by caller");
        expressions.push(q.to_unipoly(d).expect("univariate in the last variable"));
    }
    if d > 0 {
        // y = x_d + Σ_{j<d} c_j x_j
        let mut last = UniPoly::x();
        for (j, e) in expressions.iter().enumerate().skip(1) {
            let c = rat(coefficients[j] as i64);
            if !c.is_zero() {
                last = &last - &e.scale(&c);
            }
        }
        expressions.push(last.rem(&eliminant));
    }
    Ok(GenericElement {
        coefficients,
        eliminant,
        expressions,
        trace,
        basis: gb,
    })
}
