//! Commutative symmetric association schemes and their intersection numbers.

mod partition;
mod tensor;

pub use partition::RelationPartition;
pub use tensor::IntersectionTensor;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactmath::{rat, QMatrix, Rational};

/// A validated scheme: `d` classes besides the diagonal on `v` points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scheme {
    d: usize,
    v: u64,
    tensor: IntersectionTensor,
    valencies: Vec<u64>,
    symmetric: bool,
    source: Option<RelationPartition>,
}

impl Scheme {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn tensor(&self) -> &IntersectionTensor {
        &self.tensor
    }

    pub fn p(&self, i: usize, j: usize, k: usize) -> u64 {
        self.tensor.get(i, j, k)
    }

    pub fn valencies(&self) -> &[u64] {
        &self.valencies
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn source(&self) -> Option<&RelationPartition> {
        self.source.as_ref()
    }

    /// `(1, k_1, ..., k_d)` as rationals.
    pub fn valency_point(&self) -> Vec<Rational> {
        self.valencies.iter().map(|&k| rat(k as i64)).collect()
    }

    /// Renames class `i` to `perm[i]`. `perm` must fix 0.
    pub fn relabel(&self, perm: &[usize]) -> Result<Scheme> {
        let n = self.d + 1;
        let mut seen = vec![false; n];
        let valid = perm.len() == n
            && perm[0] == 0
            && perm
                .iter()
                .all(|&c| c < n && !std::mem::replace(&mut seen[c], true));
        if !valid {
            return Err(Error::InvalidArgument(format!(
                "{perm:?} is not a permutation of 0..={} fixing 0",
                self.d
            )));
        }
        let mut inv = vec![0; n];
        for (i, &c) in perm.iter().enumerate() {
            inv[c] = i;
        }
        let t = &self.tensor;
        let tensor = IntersectionTensor::from_fn(self.d, |i, j, k| t.get(inv[i], inv[j], inv[k]));
        Ok(Scheme {
            d: self.d,
            v: self.v,
            valencies: (0..n).map(|i| self.valencies[inv[i]]).collect(),
            tensor,
            symmetric: self.symmetric,
            source: self.source.as_ref().map(|s| s.relabel(perm)),
        })
    }
}

/// Counts every `p_ij^k` by enumerating triples and checks that the counts
/// do not depend on the chosen pair.
pub fn scheme_from_relations(rp: RelationPartition) -> Result<Scheme> {
    let (v, d) = (rp.v(), rp.d());
    let n = d + 1;
    for x in 0..v {
        for y in x + 1..v {
            if rp.label(x, y) != rp.label(y, x) {
                return Err(Error::NotSymmetric {
                    class: rp.label(x, y),
                    x,
                    y,
                });
            }
        }
    }
    // Per class: first witness pair and its counts.
    type Witness = ((usize, usize), Vec<u64>);
    let mut first: Vec<Option<Witness>> = vec![None; n];
    let mut counts = vec![0u64; n * n];
    for x in 0..v {
        for y in 0..v {
            counts.fill(0);
            for z in 0..v {
                counts[rp.label(x, z) * n + rp.label(z, y)] += 1;
            }
            let k = rp.label(x, y);
            match &first[k] {
                None => first[k] = Some(((x, y), counts.clone())),
                Some((pair, seen)) => {
                    if let Some(idx) = (0..n * n).find(|&idx| seen[idx] != counts[idx]) {
                        return Err(Error::NotConstantIntersectionNumber {
                            i: idx / n,
                            j: idx % n,
                            k,
                            first: *pair,
                            first_count: seen[idx],
                            second: (x, y),
                            second_count: counts[idx],
                        });
                    }
                }
            }
        }
    }
    let table: Vec<Vec<u64>> = first
        .into_iter()
        .map(|f| f.expect("class occurs").1)
        .collect();
    let tensor = IntersectionTensor::from_fn(d, |i, j, k| table[k][i * n + j]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if tensor.get(i, j, k) != tensor.get(j, i, k) {
                    return Err(Error::NotCommutative { i, j, k });
                }
            }
        }
    }
    let valencies = (0..n).map(|i| tensor.valency(i)).collect();
    Ok(Scheme {
        d,
        v: v as u64,
        tensor,
        valencies,
        symmetric: true,
        source: Some(rp),
    })
}

/// Scheme from a bare intersection tensor after checking the algebraic
/// identities it must satisfy.
pub fn scheme_from_tensor(tensor: IntersectionTensor) -> Result<Scheme> {
    tensor.validate()?;
    let d = tensor.d();
    let valencies: Vec<u64> = (0..=d).map(|i| tensor.valency(i)).collect();
    Ok(Scheme {
        d,
        v: valencies.iter().sum(),
        tensor,
        valencies,
        symmetric: true,
        source: None,
    })
}

/// Orbits of `⟨r, -1⟩ ≤ Z_m^*` on `Z_m`: `{0}` first, the rest sorted by
/// least positive element.
pub fn orbits(m: u64, r: u64) -> Result<Vec<Vec<u64>>> {
    if r <= 1 || r >= m || r.gcd(&m) != 1 {
        return Err(Error::InvalidRadix { m, r });
    }
    let mut group = vec![1u64];
    let mut i = 0;
    while i < group.len() {
        for g in [r, m - 1] {
            let next = group[i] * g % m;
            if !group.contains(&next) {
                group.push(next);
            }
        }
        i += 1;
    }
    let mut class = vec![usize::MAX; m as usize];
    let mut out = vec![vec![0u64]];
    class[0] = 0;
    for x in 1..m {
        if class[x as usize] != usize::MAX {
            continue;
        }
        let mut orbit: Vec<u64> = group.iter().map(|g| g * x % m).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            class[y as usize] = out.len();
        }
        out.push(orbit);
    }
    Ok(out)
}

/// The 2-orbit scheme on `Z_m`: `x R_k y` iff `x - y` lies in orbit `k`.
pub fn orbit_scheme(m: u64, r: u64) -> Result<Scheme> {
    let orbs = orbits(m, r)?;
    let mut class = vec![0usize; m as usize];
    for (k, orbit) in orbs.iter().enumerate() {
        for &y in orbit {
            class[y as usize] = k;
        }
    }
    let labels = (0..m)
        .map(|x| (0..m).map(|y| class[((x + m - y) % m) as usize]).collect())
        .collect();
    scheme_from_relations(RelationPartition::new(labels)?)
}

/// `M^i` with entry `(k, j) = p_ij^k`, so column `j` holds the coordinates
/// of `D_i D_j` in the basis `D_0, ..., D_d`.
pub fn intersection_matrices(s: &Scheme) -> Vec<QMatrix> {
    let n = s.d() + 1;
    (0..n)
        .map(|i| {
            QMatrix::from_rows(
                (0..n)
                    .map(|k| (0..n).map(|j| rat(s.p(i, j, k) as i64)).collect())
                    .collect(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::UniPoly;
    use proptest::prelude::*;

    fn k3() -> Scheme {
        let labels = (0..3)
            .map(|x| (0..3).map(|y| usize::from(x != y)).collect())
            .collect();
        scheme_from_relations(RelationPartition::new(labels).unwrap()).unwrap()
    }

    fn matmul(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = a.len();
        (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| (0..n).map(|z| a[x][z] * b[z][y]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn complete_graph() {
        let s = k3();
        assert_eq!((s.d(), s.v()), (1, 3));
        assert_eq!(s.p(1, 1, 0), 2);
        assert_eq!(s.p(1, 1, 1), 1);
        assert_eq!(
            intersection_matrices(&s)[1],
            QMatrix::from_i64(&[&[0, 2], &[1, 1]])
        );
    }

    #[test]
    fn orbit_examples() {
        let o = orbits(9, 2).unwrap();
        assert_eq!(o, vec![vec![0], vec![1, 2, 4, 5, 7, 8], vec![3, 6]]);
        let o = orbits(8, 3).unwrap();
        assert_eq!(o, vec![vec![0], vec![1, 3, 5, 7], vec![2, 6], vec![4]]);
        assert_eq!(orbits(9, 3), Err(Error::InvalidRadix { m: 9, r: 3 }));
        assert!(orbits(9, 1).is_err());
        assert!(orbits(9, 9).is_err());
        let s = orbit_scheme(9, 2).unwrap();
        assert_eq!((s.d(), s.v()), (2, 9));
        assert_eq!(s.valencies(), &[1, 6, 2]);
        assert_eq!(orbit_scheme(8, 3).unwrap().valencies(), &[1, 4, 2, 1]);
    }

    #[test]
    fn valency_two_class_matrix() {
        let s = orbit_scheme(9, 2).unwrap();
        let m = &intersection_matrices(&s)[2];
        // (x - 2)^2 (x + 1)
        assert_eq!(m.charpoly(), UniPoly::from_i64(&[4, 0, -3, 1]));
    }

    #[test]
    fn rejects_bad_partitions() {
        let diag = vec![vec![1, 1, 1], vec![1, 0, 1], vec![1, 1, 0]];
        assert!(matches!(
            RelationPartition::new(diag),
            Err(Error::NotAPartition(_))
        ));
        let gap = vec![vec![0, 2], vec![2, 0]];
        assert!(matches!(
            RelationPartition::new(gap),
            Err(Error::NotAPartition(_))
        ));
        let asym = vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]];
        let err = scheme_from_relations(RelationPartition::new(asym).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric { .. }));
        // path on 3 vertices: endpoints and the middle vertex have different degrees
        let path = vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]];
        let err = scheme_from_relations(RelationPartition::new(path).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotConstantIntersectionNumber { .. }));
        assert!(err.is_scheme_violation());
    }

    #[test]
    fn tensor_round_trip_and_validation() {
        let s = orbit_scheme(8, 3).unwrap();
        let t = IntersectionTensor::from_flat(3, s.tensor().flat().to_vec()).unwrap();
        let back = scheme_from_tensor(t).unwrap();
        assert_eq!(back.tensor(), s.tensor());
        assert_eq!(back.v(), 8);
        let mut broken = s.tensor().flat().to_vec();
        broken[(4 + 1) * 4 + 1] += 1; // p_11^1
        let err =
            scheme_from_tensor(IntersectionTensor::from_flat(3, broken).unwrap()).unwrap_err();
        assert!(err.is_scheme_violation());
        assert!(IntersectionTensor::from_flat(3, vec![0; 10]).is_err());
    }

    #[test]
    fn relabel_permutes_tensor() {
        let s = orbit_scheme(9, 2).unwrap();
        let r = s.relabel(&[0, 2, 1]).unwrap();
        assert_eq!(r.valencies(), &[1, 2, 6]);
        assert_eq!(r.p(1, 1, 1), s.p(2, 2, 2));
        assert_eq!(r.relabel(&[0, 2, 1]).unwrap(), s);
        assert!(s.relabel(&[1, 0, 2]).is_err());
    }

    #[test]
    fn generator_choice_is_irrelevant() {
        // ⟨2, -1⟩ = ⟨7, -1⟩ = Z_9^*
        assert_eq!(orbit_scheme(9, 2).unwrap(), orbit_scheme(9, 5).unwrap());
        assert_eq!(orbit_scheme(8, 3).unwrap(), orbit_scheme(8, 5).unwrap());
        assert_eq!(orbit_scheme(13, 3).unwrap(), orbit_scheme(13, 9).unwrap());
    }

    fn valid_orbit_params() -> impl Strategy<Value = (u64, u64)> {
        (3u64..=30).prop_flat_map(|m| {
            let units: Vec<u64> = (2..m).filter(|r| r.gcd(&m) == 1).collect();
            (Just(m), proptest::sample::select(units))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn adjacency_identities((m, r) in valid_orbit_params()) {
            let s = orbit_scheme(m, r).unwrap();
            let rp = s.source().unwrap();
            let n = s.d() + 1;
            let ds: Vec<_> = (0..n).map(|i| rp.adjacency(i)).collect();
            let v = rp.v();
            for x in 0..v {
                for y in 0..v {
                    prop_assert_eq!(ds.iter().map(|d| d[x][y]).sum::<u64>(), 1);
                }
            }
            for i in 0..n {
                prop_assert_eq!(ds[i].iter().map(|row| row.iter().sum::<u64>()).collect::<Vec<_>>(), vec![s.valencies()[i]; v]);
                for j in 0..n {
                    let prod = matmul(&ds[i], &ds[j]);
                    for x in 0..v {
                        for y in 0..v {
                            let expect: u64 = (0..n).map(|k| s.p(i, j, k) * ds[k][x][y]).sum();
                            prop_assert_eq!(prod[x][y], expect);
                        }
                    }
                }
            }
        }

        #[test]
        fn intersection_matrices_commute((m, r) in valid_orbit_params()) {
            let s = orbit_scheme(m, r).unwrap();
            let ms = intersection_matrices(&s);
            prop_assert_eq!(&ms[0], &QMatrix::identity(s.d() + 1));
            for a in &ms {
                for b in &ms {
                    prop_assert_eq!(a * b, b * a);
                }
            }
            prop_assert!(scheme_from_tensor(s.tensor().clone()).is_ok());
        }
    }
}
