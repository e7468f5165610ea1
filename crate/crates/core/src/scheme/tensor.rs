use crate::error::{Error, Result};

/// `p_ij^k` for `0 <= i, j, k <= d`, stored flat at `(i(d+1) + j)(d+1) + k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntersectionTensor {
    d: usize,
    p: Vec<u64>,
}

impl IntersectionTensor {
    pub fn from_flat(d: usize, p: Vec<u64>) -> Result<Self> {
        let n = d + 1;
        if p.len() != n * n * n {
            return Err(Error::InconsistentTensor(format!(
                "expected {} entries for d={d}, found {}",
                n * n * n,
                p.len()
            )));
        }
        Ok(Self { d, p })
    }

    pub(crate) fn from_fn(d: usize, f: impl Fn(usize, usize, usize) -> u64) -> Self {
        let n = d + 1;
        let mut p = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    p.push(f(i, j, k));
                }
            }
        }
        Self { d, p }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        let n = self.d + 1;
        self.p[(i * n + j) * n + k]
    }

    pub fn flat(&self) -> &[u64] {
        &self.p
    }

    pub fn valency(&self, i: usize) -> u64 {
        self.get(i, i, 0)
    }

    /// Checks the identities every symmetric scheme tensor satisfies:
    /// commutativity, the identity relation, row sums, `p_ij^0 = δ_ij k_i`,
    /// `k_k p_ij^k = k_i p_kj^i` and associativity of the algebra.
    pub fn validate(&self) -> Result<()> {
        let n = self.d + 1;
        let bad = |msg: String| Err(Error::InconsistentTensor(msg));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.get(i, j, k) != self.get(j, i, k) {
                        return Err(Error::NotCommutative { i, j, k });
                    }
                }
            }
        }
        for j in 0..n {
            for k in 0..n {
                if self.get(0, j, k) != u64::from(j == k) {
                    return bad(format!("p_0{j}^{k} must be {}", u8::from(j == k)));
                }
            }
        }
        let val: Vec<u64> = (0..n).map(|i| self.valency(i)).collect();
        for (i, &ki) in val.iter().enumerate() {
            if ki == 0 {
                return bad(format!("class {i} has valency 0"));
            }
            for j in 0..n {
                if i != j && self.get(i, j, 0) != 0 {
                    return bad(format!("p_{i}{j}^0 must be 0 for a symmetric scheme"));
                }
            }
            for k in 0..n {
                let s: u64 = (0..n).map(|j| self.get(i, j, k)).sum();
                if s != ki {
                    return bad(format!("sum over j of p_{i}j^{k} is {s}, valency is {ki}"));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if val[k] * self.get(i, j, k) != val[i] * self.get(k, j, i) {
                        return bad(format!("k_{k} p_{i}{j}^{k} != k_{i} p_{k}{j}^{i}"));
                    }
                }
            }
        }
        for i in 1..n {
            for j in 1..n {
                for l in 1..n {
                    for t in 0..n {
                        let left: u64 = (0..n).map(|m| self.get(i, j, m) * self.get(m, l, t)).sum();
                        let right: u64 =
                            (0..n).map(|m| self.get(j, l, m) * self.get(i, m, t)).sum();
                        if left != right {
                            return bad(format!("(D_{i} D_{j}) D_{l} != D_{i} (D_{j} D_{l})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
