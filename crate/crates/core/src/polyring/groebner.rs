use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::mpoly::MPoly;
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::exactmath::Rational;

/// Ordered list of monic, pairwise distinct generators together with the
/// monomial order they are read in.
#[derive(Clone)]
pub struct PolyBasis {
    generators: Vec<MPoly>,
    order: MonomialOrder,
    reducer: OnceLock<Reducer>,
}

impl PartialEq for PolyBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.generators == other.generators
    }
}

impl Eq for PolyBasis {}

impl std::fmt::Debug for PolyBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PolyBasis")
            .field("order", &self.order)
            .field("generators", &self.display_lines())
            .finish()
    }
}

impl PolyBasis {
    /// Drops zero generators, makes the rest monic and removes duplicates
    /// while keeping the first occurrence.
    pub fn new(generators: Vec<MPoly>, order: MonomialOrder) -> Result<Self> {
        let mut out: Vec<MPoly> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.nvars() != order.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: order.nvars(),
                    found: g.nvars(),
                });
            }
            if g.is_zero() {
                continue;
            }
            let g = g.monic(&order);
            if !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(Self {
            generators: out,
            order,
            reducer: OnceLock::new(),
        })
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("nonzero").clone())
            .collect()
    }

    /// Each generator rendered in descending order.
    pub fn display_lines(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| g.display_with(&self.order))
            .collect()
    }

    /// Monic, no leading monomial divides another, no trailing term is
    /// divisible by a leading monomial.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.generators.iter().enumerate().all(|(i, g)| {
            let lt_one = g.leading_term(&self.order).is_some_and(|(_, c)| c.is_one());
            lt_one
                && g.terms().all(|(m, _)| {
                    lms.iter()
                        .enumerate()
                        .all(|(j, l)| !l.divides(m) || (j == i && m == &lms[i]))
                })
        })
    }

    fn reducer(&self) -> &Reducer {
        self.reducer
            .get_or_init(|| Reducer::new(&self.generators, &self.order))
    }

    /// Standard monomials, ascending, when there are at most `limit` of
    /// them. `None` signals an infinite or oversized staircase.
    pub fn normal_set(&self, limit: usize) -> Option<Vec<Monomial>> {
        let lms = self.leading_monomials();
        let n = self.nvars();
        let one = Monomial::one(n);
        if lms.iter().any(|l| l.divides(&one)) {
            return Some(Vec::new());
        }
        let mut seen: HashSet<Monomial> = HashSet::from([one.clone()]);
        let mut queue = VecDeque::from([one]);
        let mut out = Vec::new();
        while let Some(m) = queue.pop_front() {
            out.push(m.clone());
            if out.len() > limit {
                return None;
            }
            for v in 0..n {
                let next = m.mul_var(v);
                if !lms.iter().any(|l| l.divides(&next)) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        out.sort_by(|a, b| self.order.cmp(a, b));
        Some(out)
    }
}

/// Generators converted to sort-key space, so that the order comparison
/// is plain `Vec` comparison and a monomial product is a key sum.
#[derive(Clone)]
struct Reducer {
    order: MonomialOrder,
    gens: Vec<KeyPoly>,
}

#[derive(Clone)]
struct KeyPoly {
    lead: Vec<u32>,
    mask: u64,
    tail: Vec<(Vec<u32>, Rational)>,
}

fn key_mask(key: &[u32]) -> u64 {
    key.iter()
        .take(64)
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (i, _)| acc | (1 << i))
}

impl Reducer {
    fn new(generators: &[MPoly], order: &MonomialOrder) -> Self {
        let gens = generators
            .iter()
            .map(|g| {
                let mut terms: Vec<(Vec<u32>, Rational)> = g
                    .terms()
                    .map(|(m, c)| (order.sort_key(m), c.clone()))
                    .collect();
                terms.sort_by(|a, b| b.0.cmp(&a.0));
                let (lead, lc) = terms.remove(0);
                debug_assert!(lc.is_one());
                KeyPoly {
                    mask: key_mask(&lead),
                    lead,
                    tail: terms,
                }
            })
            .collect();
        Self {
            order: order.clone(),
            gens,
        }
    }

    fn normal_form(&self, f: &MPoly) -> MPoly {
        let mut work: BTreeMap<Vec<u32>, Rational> = f
            .terms()
            .map(|(m, c)| (self.order.sort_key(m), c.clone()))
            .collect();
        let mut rem = Vec::new();
        while let Some((key, c)) = work.pop_last() {
            let mask = key_mask(&key);
            let divisor = self
                .gens
                .iter()
                .find(|g| g.mask & !mask == 0 && g.lead.iter().zip(&key).all(|(a, b)| a <= b));
            let Some(g) = divisor else {
                rem.push((key, c));
                continue;
            };
            let q: Vec<u32> = key.iter().zip(&g.lead).map(|(a, b)| a - b).collect();
            for (tk, tc) in &g.tail {
                let k: Vec<u32> = q.iter().zip(tk).map(|(a, b)| a + b).collect();
                let entry = work.entry(k).or_insert_with(Rational::zero);
                *entry -= &c * tc;
                if entry.is_zero() {
                    let k: Vec<u32> = q.iter().zip(tk).map(|(a, b)| a + b).collect();
                    work.remove(&k);
                }
            }
        }
        MPoly::from_terms(
            f.nvars(),
            rem.into_iter()
                .map(|(k, c)| (self.order.from_sort_key(&k), c)),
        )
    }
}

/// Remainder of `f` on division by `basis`: repeatedly the greatest
/// reducible term is cancelled by the first generator whose leading
/// monomial divides it.
pub fn normal_form(f: &MPoly, basis: &PolyBasis) -> Result<MPoly> {
    if f.nvars() != basis.nvars() {
        return Err(Error::DimensionMismatch {
            expected: basis.nvars(),
            found: f.nvars(),
        });
    }
    Ok(basis.reducer().normal_form(f))
}

pub fn s_polynomial(f: &MPoly, g: &MPoly, order: &MonomialOrder) -> MPoly {
    let (lf, cf) = f.leading_term(order).expect("nonzero");
    let (lg, cg) = g.leading_term(order).expect("nonzero");
    let l = lf.lcm(lg);
    let a = f.mul_term(&cf.recip(), &lf.quotient_of(&l).unwrap());
    let b = g.mul_term(&cg.recip(), &lg.quotient_of(&l).unwrap());
    &a - &b
}

/// An S-polynomial with nonzero remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPairWitness {
    pub pair: (usize, usize),
    pub s_polynomial: MPoly,
    pub remainder: MPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroebnerCheck {
    Holds,
    Fails(SPairWitness),
}

impl GroebnerCheck {
    pub fn holds(&self) -> bool {
        matches!(self, GroebnerCheck::Holds)
    }
}

/// Buchberger's criterion with the coprime and chain criteria.
pub fn is_groebner(basis: &PolyBasis) -> GroebnerCheck {
    let order = basis.order();
    let gens = basis.generators();
    let lms = basis.leading_monomials();
    let n = gens.len();
    let mut pending: BTreeSet<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    while let Some((i, j)) = pending.pop_first() {
        if lms[i].is_coprime(&lms[j]) {
            continue;
        }
        let l = lms[i].lcm(&lms[j]);
        let chain = (0..n).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&gens[i], &gens[j], order);
        let r = basis.reducer().normal_form(&s);
        if !r.is_zero() {
            return GroebnerCheck::Fails(SPairWitness {
                pair: (i, j),
                s_polynomial: s,
                remainder: r,
            });
        }
    }
    GroebnerCheck::Holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{frac, rat};
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> MPoly {
        MPoly::var(n, i)
    }

    fn c(n: usize, v: i64) -> MPoly {
        MPoly::constant(n, rat(v))
    }

    /// Structure ideal of the 3x3 rook's graph in deglex.
    fn rook_basis() -> PolyBasis {
        let (x0, x1, x2) = (x(3, 0), x(3, 1), x(3, 2));
        let gens = vec![
            &x0 - &c(3, 1),
            &(&(&x1 * &x1) - &x1) - &(&c(3, 4) + &x2.scale(&rat(2))),
            &(&x1 * &x2) - &(&x1.scale(&rat(2)) + &x2.scale(&rat(2))),
            &(&x2 * &x2) - &(&(&c(3, 4) + &x1.scale(&rat(2))) + &x2),
        ];
        PolyBasis::new(gens, MonomialOrder::deglex(3)).unwrap()
    }

    #[test]
    fn cycle_reductions() {
        // x1^2 = x1 + 2 in two variables
        let (x0, x1) = (x(2, 0), x(2, 1));
        let b = PolyBasis::new(
            vec![&x0 - &c(2, 1), &(&(&x1 * &x1) - &x1) - &c(2, 2)],
            MonomialOrder::deglex(2),
        )
        .unwrap();
        let cube = &(&x1 * &x1) * &x1;
        assert_eq!(
            normal_form(&cube, &b).unwrap(),
            &c(2, 2) + &x1.scale(&rat(3))
        );
        assert!(is_groebner(&b).holds());
    }

    #[test]
    fn products_reduce_to_structure_combinations() {
        let b = rook_basis();
        assert!(is_groebner(&b).holds());
        assert!(b.is_reduced());
        let x1 = x(3, 1);
        let x2 = x(3, 2);
        let nf = normal_form(&(&(&x1 * &x2) * &x2), &b).unwrap();
        // x1 x2^2 = x1 (4 + 2 x1 + x2) = 4 x1 + 2 x1^2 + x1 x2
        let expected = normal_form(
            &(&(&x1.scale(&rat(4)) + &(&x1 * &x1).scale(&rat(2))) + &(&x1 * &x2)),
            &b,
        )
        .unwrap();
        assert_eq!(nf, expected);
        assert_eq!(b.normal_set(100).unwrap().len(), 3);
    }

    #[test]
    fn non_groebner_witness() {
        let (x1, x2) = (x(3, 1), x(3, 2));
        let b = PolyBasis::new(
            vec![&(&x1 * &x1) - &c(3, 1), &(&x1 * &x2) - &c(3, 1)],
            MonomialOrder::deglex(3),
        )
        .unwrap();
        match is_groebner(&b) {
            GroebnerCheck::Fails(w) => {
                assert_eq!(w.remainder.monic(b.order()), &x1 - &x2);
            }
            GroebnerCheck::Holds => panic!("expected a witness"),
        }
    }

    #[test]
    fn normalisation_and_mismatch() {
        let x1 = x(2, 1);
        let b = PolyBasis::new(
            vec![x1.scale(&rat(2)), MPoly::zero(2), x1.clone()],
            MonomialOrder::lex(2),
        )
        .unwrap();
        assert_eq!(b.generators(), &[x1]);
        assert!(normal_form(&x(3, 0), &b).is_err());
        let half = MPoly::constant(2, frac(1, 2));
        assert_eq!(normal_form(&half, &b).unwrap(), half);
    }

    fn small_poly() -> impl Strategy<Value = MPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3), -4i64..=4), 0..5).prop_map(|ts| {
            MPoly::from_terms(
                3,
                ts.into_iter()
                    .map(|((a, b), c)| (Monomial::new(vec![0, a, b]), rat(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn normal_form_is_linear_and_idempotent(f in small_poly(), g in small_poly(), k in -3i64..=3) {
            let b = rook_basis();
            let nf = |p: &MPoly| normal_form(p, &b).unwrap();
            let lhs = nf(&(&f + &g.scale(&rat(k))));
            let rhs = &nf(&f) + &nf(&g).scale(&rat(k));
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(nf(&lhs), lhs.clone());
        }

        #[test]
        fn ideal_members_reduce_to_zero(f in small_poly(), g in small_poly()) {
            let b = rook_basis();
            let member = &(&f * &b.generators()[1]) + &(&g * &b.generators()[2]);
            prop_assert!(normal_form(&member, &b).unwrap().is_zero());
        }
    }
}
