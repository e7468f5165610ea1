use num_traits::Zero;

use super::echelon::Echelon;
use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, Rational, UniPoly};
use crate::polyring::MPoly;

/// Finite-dimensional commutative algebra `Q[x_0..x_n]/I` given by one
/// multiplication matrix per variable and the coordinates of `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientAlgebra {
    matrices: Vec<QMatrix>,
    one: Vec<Rational>,
}

impl QuotientAlgebra {
    pub fn new(matrices: Vec<QMatrix>, one: Vec<Rational>) -> Result<Self> {
        let dim = one.len();
        for m in &matrices {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.rows().max(m.cols()),
                });
            }
        }
        Ok(Self { matrices, one })
    }

    pub fn dim(&self) -> usize {
        self.one.len()
    }

    pub fn nvars(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrix(&self, var: usize) -> &QMatrix {
        &self.matrices[var]
    }

    pub fn one(&self) -> &[Rational] {
        &self.one
    }

    /// The same algebra with `x_target` replaced by `Σ_k coeffs[k] x_k`.
    pub fn with_linear_coordinate(&self, target: usize, coeffs: &[Rational]) -> Self {
        let dim = self.dim();
        let m = coeffs
            .iter()
            .zip(&self.matrices)
            .filter(|(c, _)| !c.is_zero())
            .fold(QMatrix::zeros(dim, dim), |acc, (c, m)| acc.add(&m.scale(c)));
        let mut matrices = self.matrices.clone();
        matrices[target] = m;
        Self {
            matrices,
            one: self.one.clone(),
        }
    }

    /// Multiplication matrix of the element `f`.
    pub fn element_matrix(&self, f: &MPoly) -> QMatrix {
        let dim = self.dim();
        let mut acc = QMatrix::zeros(dim, dim);
        for (m, c) in f.terms() {
            let mut t = QMatrix::identity(dim).scale(c);
            for (v, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = &t * &self.matrices[v];
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Coordinates of the element `f`.
    pub fn element_vector(&self, f: &MPoly) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.dim()];
        for (m, c) in f.terms() {
            let mut t = self.one.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = self.matrices[v].mul_vec(&t);
                }
            }
            for (a, b) in acc.iter_mut().zip(t) {
                *a += c * b;
            }
        }
        acc
    }

    pub fn minimal_polynomial_of_var(&self, var: usize) -> UniPoly {
        krylov_minpoly(&self.matrices[var], &self.one)
    }
}

/// Monic generator of `{p : p(m) v = 0}`.
pub fn krylov_minpoly(m: &QMatrix, v: &[Rational]) -> UniPoly {
    let mut ech = Echelon::new();
    let mut w = v.to_vec();
    loop {
        let next = m.mul_vec(&w);
        if let Some(lambda) = ech.insert(w) {
            let mut coeffs: Vec<Rational> = lambda.into_iter().map(|l| -l).collect();
            coeffs.push(Rational::from_integer(1.into()));
            return UniPoly::new(coeffs);
        }
        w = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn minpoly_of_block_matrix() {
        let m = QMatrix::from_i64(&[&[0, 2, 0], &[1, 1, 0], &[0, 0, 2]]);
        let e0 = vec![rat(1), rat(0), rat(0)];
        assert_eq!(krylov_minpoly(&m, &e0), UniPoly::from_i64(&[-2, -1, 1]));
        let all = vec![rat(1), rat(0), rat(1)];
        assert_eq!(krylov_minpoly(&m, &all), UniPoly::from_i64(&[-2, -1, 1]));
        let m3 = QMatrix::from_i64(&[&[0, 2, 0], &[1, 1, 0], &[0, 0, 3]]);
        assert_eq!(krylov_minpoly(&m3, &all), UniPoly::from_i64(&[6, 1, -4, 1]));
        assert_eq!(
            krylov_minpoly(&m, &[rat(0), rat(0), rat(0)]),
            UniPoly::one()
        );
    }
}
