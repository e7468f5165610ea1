use crate::error::{Error, Result};

/// Labelling of `X × X` by class indices `0..=d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RelationPartition {
    v: usize,
    d: usize,
    labels: Vec<usize>,
}

impl RelationPartition {
    /// Accepts a square grid whose diagonal is exactly class 0 and whose
    /// classes `0..=max` all occur.
    pub fn new(labels: Vec<Vec<usize>>) -> Result<Self> {
        let v = labels.len();
        if v == 0 {
            return Err(Error::NotAPartition("empty point set".into()));
        }
        if let Some((x, row)) = labels.iter().enumerate().find(|(_, r)| r.len() != v) {
            return Err(Error::NotAPartition(format!(
                "row {x} has {} entries, expected {v}",
                row.len()
            )));
        }
        for (x, row) in labels.iter().enumerate() {
            for (y, &c) in row.iter().enumerate() {
                if (x == y) != (c == 0) {
                    return Err(Error::NotAPartition(format!(
                        "label {c} at ({x},{y}): class 0 must be exactly the diagonal"
                    )));
                }
            }
        }
        let d = labels.iter().flatten().copied().max().unwrap_or(0);
        let mut used = vec![false; d + 1];
        labels.iter().flatten().for_each(|&c| used[c] = true);
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(Error::NotAPartition(format!("class {missing} is empty")));
        }
        Ok(Self {
            v,
            d,
            labels: labels.into_iter().flatten().collect(),
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn label(&self, x: usize, y: usize) -> usize {
        self.labels[x * self.v + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.labels.chunks(self.v).map(<[usize]>::to_vec).collect()
    }

    /// 0/1 adjacency matrix `D_i`.
    pub fn adjacency(&self, i: usize) -> Vec<Vec<u64>> {
        (0..self.v)
            .map(|x| {
                (0..self.v)
                    .map(|y| u64::from(self.label(x, y) == i))
                    .collect()
            })
            .collect()
    }

    pub(crate) fn relabel(&self, perm: &[usize]) -> Self {
        Self {
            v: self.v,
            d: self.d,
            labels: self.labels.iter().map(|&c| perm[c]).collect(),
        }
    }
}
