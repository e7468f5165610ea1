#![allow(dead_code)]

use assoc_scheme::exactmath::{Rational, RealRoot};
use assoc_scheme::polyring::{MPoly, Monomial, MonomialOrder};
use assoc_scheme::scheme::{orbit_scheme, scheme_from_relations, RelationPartition, Scheme};

/// Parses sums like `1/4*x1^2 - x2 - 1` over `x0..x{n-1}`.
pub fn poly(n: usize, text: &str) -> MPoly {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if (c == '+' || c == '-') && i > 0 && !s[..i].ends_with('^') {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut out = MPoly::zero(n);
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let mut c = Rational::from_integer(1.into());
        let mut e = vec![0u32; n];
        for f in body.split('*') {
            if let Some(v) = f.strip_prefix('x') {
                let (idx, pow) = v.split_once('^').unwrap_or((v, "1"));
                e[idx.parse::<usize>().unwrap()] += pow.parse::<u32>().unwrap();
            } else {
                c *= f.parse::<Rational>().unwrap();
            }
        }
        out.add_term(Monomial::new(e), if neg { -c } else { c });
    }
    out
}

/// Equal as sets after making every polynomial monic under `order`.
pub fn same_generators(a: &[MPoly], b: &[MPoly], order: &MonomialOrder) -> bool {
    let a: Vec<MPoly> = a.iter().map(|p| p.monic(order)).collect();
    let b: Vec<MPoly> = b.iter().map(|p| p.monic(order)).collect();
    a.len() == b.len() && a.iter().all(|p| b.contains(p)) && b.iter().all(|p| a.contains(p))
}

pub fn orbit_9_2() -> Scheme {
    orbit_scheme(9, 2).unwrap()
}

pub fn orbit_8_3() -> Scheme {
    orbit_scheme(8, 3).unwrap()
}

pub fn k3() -> Scheme {
    scheme_from_relations(
        RelationPartition::new(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap(),
    )
    .unwrap()
}

/// Binary words of length 3, classes by Hamming distance.
pub fn hamming_3_2() -> Scheme {
    let labels = (0..8u32)
        .map(|x| (0..8u32).map(|y| (x ^ y).count_ones() as usize).collect())
        .collect();
    scheme_from_relations(RelationPartition::new(labels).unwrap()).unwrap()
}

pub fn rationals(grid: &[Vec<RealRoot>]) -> Vec<Vec<Rational>> {
    grid.iter()
        .map(|r| {
            r.iter()
                .map(|c| c.as_rational().expect("rational entry").clone())
                .collect()
        })
        .collect()
}

pub fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

/// Every permutation of `1..n`, with 0 fixed.
pub fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0], &mut (1..n).collect(), &mut out);
    out
}

/// Equal up to a column permutation fixing column 0 and any row
/// permutation.
pub fn same_table_up_to_relabeling(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    let mut sorted_b = b.to_vec();
    sorted_b.sort();
    permutations_fixing_zero(n).into_iter().any(|perm| {
        let mut rows: Vec<Vec<Rational>> = a
            .iter()
            .map(|r| perm.iter().map(|&j| r[j].clone()).collect())
            .collect();
        rows.sort();
        rows == sorted_b
    })
}
