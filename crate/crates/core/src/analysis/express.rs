use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fglm::{fglm_convert, ReducedGB};
use crate::polyring::{MPoly, Monomial, MonomialOrder};
use crate::scheme::Scheme;
use crate::structure_ideal::{structure_basis, StructureBasis};

/// The element `x_j - g` of `gb` with `g` involving only `allowed`
/// variables, returned as `g`.
pub(crate) fn linear_generator(gb: &ReducedGB, j: usize, allowed: &[usize]) -> Option<MPoly> {
    let n = gb.algebra().nvars();
    let xj = Monomial::var(n, j);
    let order = gb.target_order();
    gb.generators().iter().find_map(|g| {
        if g.leading_monomial(order) != Some(&xj) {
            return None;
        }
        let rest = &MPoly::var(n, j) - g;
        rest.variables()
            .iter()
            .all(|v| allowed.contains(v))
            .then_some(rest)
    })
}

fn check_vars(d: usize, vars: &[usize]) -> Result<Vec<usize>> {
    let mut s = vars.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() || s.iter().any(|&v| v == 0 || v > d) {
        return Err(Error::InvalidArgument(format!(
            "variable set {vars:?} must be a nonempty subset of 1..={d}"
        )));
    }
    Ok(s)
}

/// Expresses every variable outside `vars` (except `x_0`) as a polynomial
/// in the variables of `vars`.
pub fn express_in_terms_of(s: &Scheme, vars: &[usize]) -> Result<BTreeMap<usize, MPoly>> {
    express_with_basis(&structure_basis(s)?, vars)
}

pub(crate) fn express_with_basis(
    sb: &StructureBasis,
    vars: &[usize],
) -> Result<BTreeMap<usize, MPoly>> {
    let d = sb.nvars() - 1;
    let inside = check_vars(d, vars)?;
    let order = MonomialOrder::lex_eliminating(d + 1, &inside);
    let gb = fglm_convert(sb, &order)?;
    let mut out = BTreeMap::new();
    for j in (1..=d).filter(|j| !inside.contains(j)) {
        let g = linear_generator(&gb, j, &inside).ok_or(Error::NotExpressible(j))?;
        out.insert(j, g);
    }
    Ok(out)
}

/// All smallest variable sets in which every variable can be expressed,
/// subsets of equal size in lexicographic order.
pub fn minimal_generating_sets(s: &Scheme) -> Result<Vec<Vec<usize>>> {
    let sb = structure_basis(s)?;
    let d = s.d();
    if d == 0 {
        return Ok(vec![Vec::new()]);
    }
    for size in 1..=d {
        let mut found = Vec::new();
        for subset in subsets(d, size) {
            match express_with_basis(&sb, &subset) {
                Ok(_) => found.push(subset),
                Err(Error::NotExpressible(_)) => {}
                Err(e) => return Err(e),
            }
        }
        if !found.is_empty() {
            return Ok(found);
        }
    }
    Err(Error::InternalInvariantViolation(
        "the full variable set failed to generate".into(),
    ))
}

/// `size`-subsets of `1..=d` in lexicographic order.
fn subsets(d: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=size).collect();
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..size).rev().find(|&p| cur[p] < d - (size - 1 - p)) else {
            return out;
        };
        cur[pos] += 1;
        for q in pos + 1..size {
            cur[q] = cur[q - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 3), vec![vec![1, 2, 3]]);
        assert_eq!(subsets(4, 1).len(), 4);
    }
}
