use std::cmp::Ordering;
use std::fmt;

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Total degree first, ties broken lexicographically by priority.
    DegLex,
    /// Pure lexicographic by priority.
    Lex,
}

/// Admissible monomial order. `priority` lists variable indices from the
/// greatest variable to the smallest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &v in &priority {
            if v >= priority.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrder(format!(
                    "priority {priority:?} is not a permutation of 0..{}",
                    priority.len()
                )));
            }
        }
        Ok(Self { kind, priority })
    }

    /// Degree-lex with `x_0 > x_1 > ... > x_{n-1}`.
    pub fn deglex(nvars: usize) -> Self {
        Self {
            kind: OrderKind::DegLex,
            priority: (0..nvars).collect(),
        }
    }

    /// Lex with `x_0 > x_1 > ... > x_{n-1}`.
    pub fn lex(nvars: usize) -> Self {
        Self {
            kind: OrderKind::Lex,
            priority: (0..nvars).collect(),
        }
    }

    /// Lex with `x_smallest` below every other variable, the rest in
    /// natural index order.
    pub fn lex_smallest(nvars: usize, smallest: usize) -> Self {
        assert!(smallest < nvars);
        let mut priority: Vec<usize> = (0..nvars).filter(|&v| v != smallest).collect();
        priority.push(smallest);
        Self {
            kind: OrderKind::Lex,
            priority,
        }
    }

    /// Lex elimination order with every variable in `small` below every
    /// variable outside it. Outside variables keep natural order; inside
    /// `small` a lower index is a smaller variable.
    pub fn lex_eliminating(nvars: usize, small: &[usize]) -> Self {
        let mut inside: Vec<usize> = small.to_vec();
        inside.sort_unstable();
        inside.dedup();
        let mut priority: Vec<usize> = (0..nvars).filter(|v| !inside.contains(v)).collect();
        priority.extend(inside.iter().rev());
        Self {
            kind: OrderKind::Lex,
            priority,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    /// The smallest variable.
    pub fn last_var(&self) -> Option<usize> {
        self.priority.last().copied()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison; callers guarantee matching dimensions.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        if self.kind == OrderKind::DegLex {
            let by_degree = a.degree().cmp(&b.degree());
            if by_degree != Ordering::Equal {
                return by_degree;
            }
        }
        for &v in &self.priority {
            match ea[v].cmp(&eb[v]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Key whose plain lexicographic order on `Vec<u32>` agrees with this
    /// order. Keys multiply by componentwise addition, so reduction can
    /// work entirely in key space.
    pub fn sort_key(&self, m: &Monomial) -> Vec<u32> {
        let e = m.exponents();
        let mut key = Vec::with_capacity(self.nvars() + 1);
        if self.kind == OrderKind::DegLex {
            key.push(m.degree());
        }
        key.extend(self.priority.iter().map(|&v| e[v]));
        key
    }

    pub fn from_sort_key(&self, key: &[u32]) -> Monomial {
        let body = match self.kind {
            OrderKind::DegLex => &key[1..],
            OrderKind::Lex => key,
        };
        let mut e = vec![0; self.nvars()];
        for (pos, &v) in self.priority.iter().enumerate() {
            e[v] = body[pos];
        }
        Monomial::new(e)
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.priority.iter().map(|v| format!("x{v}")).collect();
        let kind = match self.kind {
            OrderKind::DegLex => "deglex",
            OrderKind::Lex => "lex",
        };
        write!(f, "{kind}({})", vars.join(" > "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::lex(3);
        assert_eq!(
            o.compare(&m(&[0, 1, 0]), &m(&[0, 0, 2])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn degree_dominates() {
        let o = MonomialOrder::deglex(3);
        assert_eq!(
            o.compare(&m(&[0, 1, 0]), &m(&[0, 0, 2])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn equal_and_mismatched() {
        let o = MonomialOrder::deglex(3);
        assert_eq!(
            o.compare(&m(&[1, 2, 0]), &m(&[1, 2, 0])).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            o.compare(&m(&[1, 2]), &m(&[1, 2, 0])),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn priority_must_be_permutation() {
        assert!(MonomialOrder::new(OrderKind::Lex, vec![0, 2, 2]).is_err());
        assert!(MonomialOrder::new(OrderKind::Lex, vec![0, 3, 1]).is_err());
        assert!(MonomialOrder::new(OrderKind::Lex, vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn elimination_order_layout() {
        let o = MonomialOrder::lex_eliminating(4, &[2, 1]);
        assert_eq!(o.priority(), &[0, 3, 2, 1]);
        assert_eq!(MonomialOrder::lex_smallest(4, 1).priority(), &[0, 2, 3, 1]);
    }

    fn order() -> impl Strategy<Value = MonomialOrder> {
        (
            Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(),
            any::<bool>(),
        )
            .prop_map(|(p, lex)| {
                MonomialOrder::new(
                    if lex {
                        OrderKind::Lex
                    } else {
                        OrderKind::DegLex
                    },
                    p,
                )
                .unwrap()
            })
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 4).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn admissible(o in order(), a in mono(), b in mono(), c in mono()) {
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), o.cmp(&a, &b));
            prop_assert_ne!(o.cmp(&Monomial::one(4), &a), Ordering::Greater);
        }

        #[test]
        fn sort_key_agrees_with_order(o in order(), a in mono(), b in mono()) {
            prop_assert_eq!(o.sort_key(&a).cmp(&o.sort_key(&b)), o.cmp(&a, &b));
            prop_assert_eq!(o.from_sort_key(&o.sort_key(&a)), a);
        }
    }
}
