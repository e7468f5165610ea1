//! The structure ideal of a scheme: generators, multiplication matrices and
//! idempotent equations.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{default_precision, rat, QMatrix, Rational};
use crate::fglm::QuotientAlgebra;
use crate::polyring::{
    is_groebner, normal_form, GroebnerCheck, MPoly, Monomial, MonomialOrder, PolyBasis,
};
use crate::scheme::Scheme;

/// `{x_0 - 1} ∪ {x_i x_j - Σ_k p_ij^k x_k}` in degree-lex, with normal set
/// `[1, x_1, ..., x_d]`.
#[derive(Clone, Debug)]
pub struct StructureBasis {
    scheme: Scheme,
    basis: PolyBasis,
    normal_set: Vec<Monomial>,
}

impl StructureBasis {
    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    pub fn basis(&self) -> &PolyBasis {
        &self.basis
    }

    pub fn generators(&self) -> &[MPoly] {
        self.basis.generators()
    }

    pub fn normal_set(&self) -> &[Monomial] {
        &self.normal_set
    }

    pub fn nvars(&self) -> usize {
        self.scheme.d() + 1
    }

    pub fn multiplication_matrix(&self, i: usize) -> QMatrix {
        multiplication_matrix(self, i)
    }

    /// The quotient algebra in normal-set coordinates; `1` is `e_0`.
    pub fn quotient(&self) -> QuotientAlgebra {
        let n = self.nvars();
        let mut one = vec![Rational::from_integer(0.into()); n];
        one[0] = Rational::one();
        QuotientAlgebra::new((0..n).map(|i| self.multiplication_matrix(i)).collect(), one)
            .expect("square matrices of matching size")
    }
}

pub fn structure_basis(s: &Scheme) -> Result<StructureBasis> {
    let d = s.d();
    let n = d + 1;
    let mut gens = vec![&MPoly::var(n, 0) - &MPoly::one(n)];
    for i in 1..=d {
        for j in i..=d {
            let mut g = &MPoly::var(n, i) * &MPoly::var(n, j);
            g.add_term(Monomial::one(n), -rat(s.p(i, j, 0) as i64));
            for k in 1..=d {
                g.add_term(Monomial::var(n, k), -rat(s.p(i, j, k) as i64));
            }
            gens.push(g);
        }
    }
    let basis = PolyBasis::new(gens, MonomialOrder::deglex(n))?;
    if let GroebnerCheck::Fails(w) = is_groebner(&basis) {
        return Err(Error::InternalInvariantViolation(format!(
            "structure polynomials are not a Gröbner basis: S({}, {}) reduces to {}",
            w.pair.0, w.pair.1, w.remainder
        )));
    }
    let normal_set = std::iter::once(Monomial::one(n))
        .chain((1..n).map(|k| Monomial::var(n, k)))
        .collect();
    Ok(StructureBasis {
        scheme: s.clone(),
        basis,
        normal_set,
    })
}

/// Column `t` holds the coordinates of `nf(x_i t)` over the normal set.
pub fn multiplication_matrix(sb: &StructureBasis, i: usize) -> QMatrix {
    let columns: Vec<Vec<Rational>> = sb
        .normal_set
        .iter()
        .map(|t| {
            let prod = MPoly::term(Rational::one(), t.mul_var(i));
            let r = normal_form(&prod, &sb.basis).expect("same ring");
            sb.normal_set.iter().map(|m| r.coeff(m)).collect()
        })
        .collect();
    QMatrix::from_columns(&columns)
}

/// `Σ_{i,j} p_ij^k y_i y_j - y_k` for each `k`: the conditions for
/// `Σ y_i D_i` to be idempotent.
pub fn idempotent_equations(s: &Scheme) -> Vec<MPoly> {
    let n = s.d() + 1;
    (0..n)
        .map(|k| {
            let mut e = -&MPoly::var(n, k);
            for i in 0..n {
                for j in 0..n {
                    let c = s.p(i, j, k);
                    if c > 0 {
                        let m = Monomial::var(n, i).mul(&Monomial::var(n, j));
                        e.add_term(m, rat(c as i64));
                    }
                }
            }
            e
        })
        .collect()
}

/// Radical iff every variable has a squarefree eliminant and the variety
/// has `d + 1` distinct points.
pub fn verify_radical(sb: &StructureBasis) -> Result<bool> {
    let alg = sb.quotient();
    let squarefree = (0..sb.nvars()).all(|i| alg.minimal_polynomial_of_var(i).is_squarefree());
    if !squarefree {
        return Ok(false);
    }
    let points = crate::analysis::variety_points(sb, &default_precision())?;
    Ok(points.len() == sb.nvars() && crate::fglm::pairwise_distinct(&points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{
        intersection_matrices, orbit_scheme, scheme_from_relations, RelationPartition,
    };

    fn k3() -> Scheme {
        let labels = (0..3)
            .map(|x| (0..3).map(|y| usize::from(x != y)).collect())
            .collect();
        scheme_from_relations(RelationPartition::new(labels).unwrap()).unwrap()
    }

    fn lines(sb: &StructureBasis) -> Vec<String> {
        sb.basis().display_lines()
    }

    #[test]
    fn generators_of_small_schemes() {
        let sb = structure_basis(&k3()).unwrap();
        assert_eq!(lines(&sb), vec!["x0 - 1", "x1^2 - x1 - 2"]);
        let sb = structure_basis(&orbit_scheme(9, 2).unwrap()).unwrap();
        assert_eq!(
            lines(&sb),
            vec![
                "x0 - 1",
                "x1^2 - 3*x1 - 6*x2 - 6",
                "x1*x2 - 2*x1",
                "x2^2 - x2 - 2"
            ]
        );
        assert_eq!(sb.basis().len(), 1 + 2 * 3 / 2);
    }

    #[test]
    fn normal_forms_in_the_small_class_labelling() {
        // Swap classes so x1 is the valency-2 class.
        let s = orbit_scheme(9, 2).unwrap().relabel(&[0, 2, 1]).unwrap();
        let sb = structure_basis(&s).unwrap();
        let (x1, x2) = (MPoly::var(3, 1), MPoly::var(3, 2));
        let nf = |p: &MPoly| normal_form(p, sb.basis()).unwrap();
        assert_eq!(nf(&(&x1 * &x2)), x2.scale(&rat(2)));
        assert_eq!(nf(&(&x2 * &x2)).to_string(), "6*x1 + 3*x2 + 6");
        assert_eq!(nf(&(&(&x1 * &x1) * &x1)).to_string(), "3*x1 + 2");
        let m1 = sb.multiplication_matrix(1);
        assert_eq!(m1, QMatrix::from_i64(&[&[0, 2, 0], &[1, 1, 0], &[0, 0, 2]]));
    }

    #[test]
    fn multiplication_matches_intersection_matrices() {
        for s in [
            k3(),
            orbit_scheme(9, 2).unwrap(),
            orbit_scheme(8, 3).unwrap(),
            orbit_scheme(13, 5).unwrap(),
        ] {
            let sb = structure_basis(&s).unwrap();
            assert_eq!(sb.basis().normal_set(1000).unwrap().len(), s.d() + 1);
            let ms = intersection_matrices(&s);
            for (i, m) in ms.iter().enumerate() {
                assert_eq!(&sb.multiplication_matrix(i), m);
            }
            let v = s.valency_point();
            assert!(sb.generators().iter().all(|g| g.eval(&v) == rat(0)));
        }
    }

    #[test]
    fn idempotents_of_complete_graph() {
        let eqs = idempotent_equations(&k3());
        assert_eq!(eqs[0].to_string(), "x0^2 + 2*x1^2 - x0");
        assert_eq!(eqs[1].to_string(), "2*x0*x1 + x1^2 - x1");
        for s in [k3(), orbit_scheme(8, 3).unwrap()] {
            let n = s.d() + 1;
            let e0 = vec![crate::exactmath::frac(1, s.v() as i64); n];
            let zero = vec![rat(0); n];
            for e in idempotent_equations(&s) {
                assert_eq!(e.eval(&e0), rat(0));
                assert_eq!(e.eval(&zero), rat(0));
            }
        }
    }

    #[test]
    fn structure_ideals_are_radical() {
        for s in [
            k3(),
            orbit_scheme(9, 2).unwrap(),
            orbit_scheme(8, 3).unwrap(),
        ] {
            assert!(verify_radical(&structure_basis(&s).unwrap()).unwrap());
        }
    }
}
