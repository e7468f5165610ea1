use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::echelon::Echelon;
use super::quotient::QuotientAlgebra;
use crate::error::{Error, Result};
use crate::exactmath::{Rational, UniPoly};
use crate::polyring::{MPoly, Monomial, MonomialOrder, OrderKind, PolyBasis};
use crate::structure_ideal::StructureBasis;

/// Reduced Gröbner basis in a target order, with the algebra it was read
/// off from.
#[derive(Clone, Debug)]
pub struct ReducedGB {
    basis: PolyBasis,
    normal_set: Vec<Monomial>,
    algebra: QuotientAlgebra,
}

impl ReducedGB {
    pub fn basis(&self) -> &PolyBasis {
        &self.basis
    }

    pub fn generators(&self) -> &[MPoly] {
        self.basis.generators()
    }

    pub fn normal_set(&self) -> &[Monomial] {
        &self.normal_set
    }

    pub fn target_order(&self) -> &MonomialOrder {
        self.basis.order()
    }

    pub fn algebra(&self) -> &QuotientAlgebra {
        &self.algebra
    }

    /// Generators whose leading monomial involves `var` as its greatest
    /// variable in a lex order.
    pub fn generators_led_by(&self, var: usize) -> Vec<&MPoly> {
        let order = self.target_order();
        self.generators()
            .iter()
            .filter(|g| {
                let lm = g.leading_monomial(order).expect("nonzero");
                leading_variable(lm, order) == Some(var)
            })
            .collect()
    }

    /// The univariate generator in the smallest variable, for lex orders.
    pub fn eliminant(&self) -> Option<UniPoly> {
        let order = self.target_order();
        if order.kind() != OrderKind::Lex {
            return None;
        }
        let last = order.last_var()?;
        self.generators()
            .iter()
            .find_map(|g| g.to_unipoly(last).filter(|u| !u.is_constant()))
    }
}

/// Greatest variable dividing `m` under `order`'s priority.
pub(crate) fn leading_variable(m: &Monomial, order: &MonomialOrder) -> Option<usize> {
    order
        .priority()
        .iter()
        .copied()
        .find(|&v| m.exponents()[v] > 0)
}

pub fn fglm_convert(sb: &StructureBasis, target: &MonomialOrder) -> Result<ReducedGB> {
    fglm(&sb.quotient(), target)
}

/// A monomial with the staircase index and variable it was reached from.
type Candidate = (Monomial, Option<(usize, usize)>);

/// FGLM over explicit multiplication matrices: walks monomials upward in
/// `target`, keeps those whose coordinate vectors are independent and turns
/// each dependency into a basis element.
pub fn fglm(algebra: &QuotientAlgebra, target: &MonomialOrder) -> Result<ReducedGB> {
    let n = algebra.nvars();
    if target.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: target.nvars(),
        });
    }
    let mut staircase: Vec<(Monomial, Vec<Rational>)> = Vec::new();
    let mut echelon = Echelon::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut gens: Vec<MPoly> = Vec::new();
    let mut candidates: BTreeMap<Vec<u32>, Candidate> = BTreeMap::new();
    let one = Monomial::one(n);
    candidates.insert(target.sort_key(&one), (one, None));

    while let Some((_, (m, origin))) = candidates.pop_first() {
        if leads.iter().any(|l| l.divides(&m)) {
            continue;
        }
        let vector = match origin {
            None => algebra.one().to_vec(),
            Some((parent, var)) => algebra.matrix(var).mul_vec(&staircase[parent].1),
        };
        match echelon.insert(vector.clone()) {
            Some(lambda) => {
                let mut g = MPoly::term(Rational::one(), m.clone());
                for (s, l) in lambda.iter().enumerate() {
                    if !l.is_zero() {
                        g.add_term(staircase[s].0.clone(), -l);
                    }
                }
                leads.push(m);
                gens.push(g);
            }
            None => {
                let idx = staircase.len();
                for var in 0..n {
                    let next = m.mul_var(var);
                    candidates
                        .entry(target.sort_key(&next))
                        .or_insert((next, Some((idx, var))));
                }
                staircase.push((m, vector));
            }
        }
    }
    if staircase.len() != algebra.dim() {
        return Err(Error::InternalInvariantViolation(format!(
            "staircase has {} monomials, algebra has dimension {}",
            staircase.len(),
            algebra.dim()
        )));
    }
    gens.reverse();
    let basis = PolyBasis::new(gens, target.clone())?;
    Ok(ReducedGB {
        basis,
        normal_set: staircase.into_iter().map(|(m, _)| m).collect(),
        algebra: algebra.clone(),
    })
}
