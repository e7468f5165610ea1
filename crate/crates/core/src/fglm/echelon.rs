use num_traits::Zero;

use crate::exactmath::Rational;

/// Incrementally built row echelon form that remembers how each row was
/// obtained from the inserted vectors.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<Row>,
    kept: usize,
}

#[derive(Clone, Debug)]
struct Row {
    pivot: usize,
    values: Vec<Rational>,
    /// `values = Σ_s combination[s] * kept_s`
    combination: Vec<Rational>,
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// If `v` lies in the span of the kept vectors, returns `λ` with
    /// `v = Σ λ_s kept_s`. Otherwise keeps `v` and returns `None`.
    pub(crate) fn insert(&mut self, v: Vec<Rational>) -> Option<Vec<Rational>> {
        let mut w = v;
        let mut lambda = vec![Rational::zero(); self.kept];
        for row in &self.rows {
            let f = w[row.pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (a, b) in w.iter_mut().zip(&row.values).skip(row.pivot) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
            for (l, c) in lambda.iter_mut().zip(&row.combination) {
                if !c.is_zero() {
                    *l += &f * c;
                }
            }
        }
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return Some(lambda);
        };
        let inv = w[pivot].recip();
        for x in w.iter_mut().skip(pivot) {
            *x *= &inv;
        }
        // w = v - Σ λ kept, so the new row is (e_new - λ) / pivot value.
        let mut combination: Vec<Rational> = lambda.into_iter().map(|l| -l * &inv).collect();
        combination.push(inv);
        self.rows.push(Row {
            pivot,
            values: w,
            combination,
        });
        self.kept += 1;
        None
    }
}
