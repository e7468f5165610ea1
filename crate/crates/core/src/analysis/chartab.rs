use std::cmp::Ordering;

use num_traits::Zero;

use super::points::variety_points;
use crate::error::{Error, Result};
use crate::exactmath::{
    dyadic_bits, pick_root, rat, real_roots, FixedInterval, QMatrix, Rational, RealRoot,
};
use crate::fglm::{krylov_minpoly, moller_stetter_check, VarietyPoint, CERTIFICATION_BITS};
use crate::polyring::{MPoly, Monomial};
use crate::scheme::Scheme;
use crate::structure_ideal::{structure_basis, StructureBasis};

/// First eigenvalues `P` (rows are variety points, row 0 the valencies)
/// and second eigenvalues `Q = v P^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub v: u64,
    pub p: Vec<Vec<RealRoot>>,
    pub q: Vec<Vec<RealRoot>>,
}

impl CharacterTable {
    pub fn size(&self) -> usize {
        self.p.len()
    }

    pub fn is_rational(&self) -> bool {
        self.p
            .iter()
            .chain(&self.q)
            .flatten()
            .all(RealRoot::is_exact)
    }

    fn rational(grid: &[Vec<RealRoot>]) -> Option<Vec<Vec<Rational>>> {
        grid.iter()
            .map(|row| row.iter().map(|c| c.as_rational().cloned()).collect())
            .collect()
    }

    pub fn p_rational(&self) -> Option<Vec<Vec<Rational>>> {
        Self::rational(&self.p)
    }

    pub fn q_rational(&self) -> Option<Vec<Vec<Rational>>> {
        Self::rational(&self.q)
    }

    /// Checks `P Q = v I`: exactly for rational tables, by interval
    /// arithmetic at the current enclosures otherwise.
    pub fn orthogonality_holds(&self) -> bool {
        let n = self.size();
        let v = rat(self.v as i64);
        if let (Some(p), Some(q)) = (self.p_rational(), self.q_rational()) {
            let prod = &QMatrix::from_rows(p) * &QMatrix::from_rows(q);
            return prod == QMatrix::identity(n).scale(&v);
        }
        let b = CERTIFICATION_BITS;
        let fixed = |grid: &[Vec<RealRoot>]| -> Vec<Vec<FixedInterval>> {
            grid.iter()
                .map(|r| {
                    r.iter()
                        .map(|c| FixedInterval::from_interval(&c.interval(), b))
                        .collect()
                })
                .collect()
        };
        let (p, q) = (fixed(&self.p), fixed(&self.q));
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s = (0..n).fold(FixedInterval::zero(), |acc, k| {
                    acc.add(&p[i][k].mul(&q[k][j], b))
                });
                s.to_interval(b)
                    .contains(&if i == j { v.clone() } else { Rational::zero() })
            })
        })
    }
}

pub fn character_table(s: &Scheme, precision: &Rational) -> Result<CharacterTable> {
    let sb = structure_basis(s)?;
    let mut points = variety_points(&sb, precision)?;
    if !moller_stetter_check(&sb, &points) {
        return Err(Error::InternalInvariantViolation(
            "variety points disagree with the eigenvalues of the multiplication matrices".into(),
        ));
    }
    let valency = VarietyPoint::from_rationals(s.valency_point());
    let idx = points
        .iter()
        .position(|p| p.cmp_real(&valency) == Ordering::Equal)
        .ok_or_else(|| Error::InternalInvariantViolation("valency point missing".into()))?;
    points.remove(idx);
    points.sort_by(|a, b| b.cmp_real(a));
    points.insert(0, valency);
    for p in &points {
        if let Some(g) = sb.generators().iter().find(|g| !p.satisfies(g)) {
            return Err(Error::InternalInvariantViolation(format!(
                "nonzero residual on {g}"
            )));
        }
    }
    let p: Vec<Vec<RealRoot>> = points.into_iter().map(|pt| pt.coordinates).collect();
    let q = second_eigenvalues(&sb, &p, precision)?;
    let table = CharacterTable { v: s.v(), p, q };
    if !table.orthogonality_holds() {
        return Err(Error::InternalInvariantViolation("P Q != v I".into()));
    }
    Ok(table)
}

fn second_eigenvalues(
    sb: &StructureBasis,
    p: &[Vec<RealRoot>],
    precision: &Rational,
) -> Result<Vec<Vec<RealRoot>>> {
    let s = sb.scheme();
    let n = p.len();
    let v = rat(s.v() as i64);
    let exact: Option<Vec<Vec<Rational>>> = p
        .iter()
        .map(|row| row.iter().map(|c| c.as_rational().cloned()).collect())
        .collect();
    if let Some(rows) = exact {
        let q = QMatrix::from_rows(rows).inverse()?.scale(&v);
        return Ok((0..n)
            .map(|i| q.row(i).iter().cloned().map(RealRoot::exact).collect())
            .collect());
    }
    // The multiplicity of point j is m_j = v / φ(point j) with
    // φ = Σ_l x_l^2 / k_l, and Q[i][j] = m_j P[j][i] / k_i.
    let alg = sb.quotient();
    let k: Vec<Rational> = s.valency_point();
    let phi = (0..n).fold(MPoly::zero(n), |acc, l| {
        let sq = MPoly::term(k[l].recip(), Monomial::var(n, l).mul(&Monomial::var(n, l)));
        &acc + &sq
    });
    let phi_vec = alg.element_vector(&phi);
    let phi_mat = combination_matrix(&alg, &phi_vec);
    let mut coords: Vec<Vec<RealRoot>> = p.to_vec();
    let phi_at = values_at_points(&phi_mat, &phi_vec, alg.one(), &mut coords, precision)?;
    let multiplicities: Option<Vec<Rational>> = phi_at
        .iter()
        .map(|f| f.as_rational().map(|f| &v / f))
        .collect();
    if let Some(m) = multiplicities {
        return Ok((0..n)
            .map(|i| (0..n).map(|j| p[j][i].scale(&(&m[j] / &k[i]))).collect())
            .collect());
    }
    // Otherwise Q[i][j] is the value at point j of f_i = (v / k_i) x_i φ^{-1}.
    let phi_inv = phi_mat.inverse()?.mul_vec(alg.one());
    (0..n)
        .map(|i| {
            let f: Vec<Rational> = alg
                .matrix(i)
                .mul_vec(&phi_inv)
                .into_iter()
                .map(|c| c * &v / &k[i])
                .collect();
            let m = combination_matrix(&alg, &f);
            values_at_points(&m, &f, alg.one(), &mut coords, precision)
        })
        .collect()
}

/// Values of the element with coordinates `f` (matrix `m`) at each point,
/// identified among the roots of its minimal polynomial.
fn values_at_points(
    m: &QMatrix,
    f: &[Rational],
    one: &[Rational],
    coords: &mut [Vec<RealRoot>],
    precision: &Rational,
) -> Result<Vec<RealRoot>> {
    let mut candidates = real_roots(&krylov_minpoly(m, one), precision)?;
    coords
        .iter_mut()
        .map(|row| {
            let picked = pick_root(&mut candidates, |w| {
                row.iter_mut().for_each(|c| c.refine_to(w));
                let bits = dyadic_bits(w);
                row.iter()
                    .zip(f)
                    .fold(FixedInterval::zero(), |acc, (c, a)| {
                        let t = FixedInterval::from_interval(&c.interval(), bits);
                        acc.add(&t.mul(&FixedInterval::from_rational(a, bits), bits))
                    })
                    .to_interval(bits)
            })
            .ok_or_else(|| {
                Error::InternalInvariantViolation("element value not identified".into())
            })?;
            Ok(candidates[picked].clone())
        })
        .collect()
}

/// Multiplication matrix of the element with coordinates `a` over the
/// normal set `[1, x_1, ..., x_d]`.
fn combination_matrix(alg: &crate::fglm::QuotientAlgebra, a: &[Rational]) -> QMatrix {
    let dim = alg.dim();
    a.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(QMatrix::zeros(dim, dim), |acc, (k, c)| {
            acc.add(&alg.matrix(k).scale(c))
        })
}
