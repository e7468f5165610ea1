use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};

use super::rational::{rat, Rational};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix rows");
        Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<Rational>]) -> Self {
        let ncols = columns.len();
        let nrows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(nrows, ncols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), nrows, "ragged matrix columns");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Pivot choice is the first nonzero entry at or below the current row;
    /// exact arithmetic makes magnitude-based pivoting unnecessary.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let x = &m[(r, j)] * &inv;
                m[(r, j)] = x;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let x = &m[(i, j)] - &factor * &m[(r, j)];
                    m[(i, j)] = x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = QMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (red, pivots) = aug.rref();
        let rank = pivots.iter().take_while(|&&c| c < n).count();
        if rank < n {
            return Err(Error::SingularMatrix { rank, dim: n });
        }
        let mut inv = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Characteristic polynomial `det(x·I - self)` via reduction to upper
    /// Hessenberg form followed by the Hessenberg determinant recurrence.
    pub fn charpoly(&self) -> UniPoly {
        assert!(
            self.is_square(),
            "characteristic polynomial of a non-square matrix"
        );
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                h.swap_cols(i, m);
            }
            let pivot = h[(m, m - 1)].clone();
            for j in m + 1..n {
                if h[(j, m - 1)].is_zero() {
                    continue;
                }
                let u = &h[(j, m - 1)] / &pivot;
                for c in 0..n {
                    let x = &h[(j, c)] - &u * &h[(m, c)];
                    h[(j, c)] = x;
                }
                for r in 0..n {
                    let x = &h[(r, m)] + &u * &h[(r, j)];
                    h[(r, m)] = x;
                }
            }
        }

        let x = UniPoly::x();
        let mut polys: Vec<UniPoly> = vec![UniPoly::one()];
        for m in 1..=n {
            let mut p = &(&x - &UniPoly::constant(h[(m - 1, m - 1)].clone())) * &polys[m - 1];
            let mut t = Rational::one();
            for i in (1..m).rev() {
                t *= &h[(i, i - 1)];
                if t.is_zero() {
                    break;
                }
                let coeff = &h[(i - 1, m - 1)] * &t;
                if !coeff.is_zero() {
                    p = &p - &polys[i - 1].scale(&coeff);
                }
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;

    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::frac;
    use proptest::prelude::*;

    #[test]
    fn rref_identity() {
        let id = QMatrix::identity(3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = QMatrix::from_i64(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, QMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_needs_row_swap() {
        let (r, p) = QMatrix::from_i64(&[&[0, 2], &[1, 1]]).rref();
        assert_eq!(r, QMatrix::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            QMatrix::identity(4).inverse().unwrap(),
            QMatrix::identity(4)
        );
        let m = QMatrix::from_i64(&[&[1, 2], &[1, -1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, m.scale(&frac(1, 3)));
        assert_eq!(&m * &inv, QMatrix::identity(2));
        assert_eq!(
            QMatrix::from_i64(&[&[1, 1], &[1, 1]]).inverse(),
            Err(Error::SingularMatrix { rank: 1, dim: 2 })
        );
    }

    #[test]
    fn inverse_rejects_non_square() {
        assert!(matches!(
            QMatrix::zeros(2, 3).inverse(),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    /// Leibniz expansion of det(xI - m); exponential, only for tiny matrices.
    fn charpoly_by_permutations(m: &QMatrix) -> UniPoly {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.rows();
        let mut total = UniPoly::zero();
        for p in perms(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let mut term = UniPoly::one();
            for (i, &pi) in p.iter().enumerate() {
                let entry = if i == pi {
                    &UniPoly::x() - &UniPoly::constant(m[(i, i)].clone())
                } else {
                    UniPoly::constant(-m[(i, pi)].clone())
                };
                term = &term * &entry;
            }
            if inversions % 2 == 1 {
                term = term.scale(&rat(-1));
            }
            total = &total + &term;
        }
        total
    }

    #[test]
    fn charpoly_of_intersection_matrix() {
        // K_3: x^2 - x - 2
        let m = QMatrix::from_i64(&[&[0, 2], &[1, 1]]);
        assert_eq!(m.charpoly(), UniPoly::from_i64(&[-2, -1, 1]));
    }

    #[test]
    fn charpoly_with_zero_subdiagonal() {
        let m = QMatrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[1, 0, 0]]);
        assert_eq!(m.charpoly(), charpoly_by_permutations(&m));
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
            QMatrix::from_rows(
                v.chunks(n)
                    .map(|r| r.iter().map(|&x| rat(x)).collect())
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn rref_rank_matches_nonzero_rows(m in (1usize..5).prop_flat_map(small_matrix)) {
            let (r, pivots) = m.rref();
            let nonzero = (0..r.rows()).filter(|&i| r.row(i).iter().any(|x| !x.is_zero())).count();
            prop_assert_eq!(nonzero, pivots.len());
            for (row, &c) in pivots.iter().enumerate() {
                prop_assert!(r[(row, c)].is_one());
            }
            // Row space preserved: stacking original rows on top adds no rank.
            let mut stacked: Vec<Vec<Rational>> = (0..r.rows()).map(|i| r.row(i).to_vec()).collect();
            stacked.extend((0..m.rows()).map(|i| m.row(i).to_vec()));
            prop_assert_eq!(QMatrix::from_rows(stacked).rank(), pivots.len());
        }

        #[test]
        fn inverse_is_two_sided(m in (1usize..5).prop_flat_map(small_matrix)) {
            if let Ok(inv) = m.inverse() {
                let id = QMatrix::identity(m.rows());
                prop_assert_eq!(&m * &inv, id.clone());
                prop_assert_eq!(&inv * &m, id);
            } else {
                prop_assert!(m.rank() < m.rows());
            }
        }

        #[test]
        fn charpoly_matches_leibniz(m in (1usize..5).prop_flat_map(small_matrix)) {
            prop_assert_eq!(m.charpoly(), charpoly_by_permutations(&m));
        }
    }
}
