use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::scheme::{
    orbit_scheme, scheme_from_relations, scheme_from_tensor, IntersectionTensor, RelationPartition,
    Scheme,
};

/// Scheme description accepted on the command line, tagged by `"type"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum SchemeSpec {
    /// 2-orbit scheme of `⟨r, -1⟩` acting on `Z_m`.
    Orbit { m: u64, r: u64 },
    /// `v × v` grid of class labels.
    Relations { labels: Vec<Vec<usize>> },
    /// Flattened `p_ij^k` at index `(i(d+1) + j)(d+1) + k`.
    Tensor { d: usize, p: Vec<u64> },
}

impl SchemeSpec {
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid scheme description: {e}"))
    }

    /// Reads a file, or standard input for `-`.
    pub fn load(path: &Path) -> std::result::Result<Self, String> {
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            s
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?
        };
        Self::parse(&text)
    }

    pub fn build(&self) -> Result<Scheme> {
        match self {
            SchemeSpec::Orbit { m, r } => orbit_scheme(*m, *r),
            SchemeSpec::Relations { labels } => {
                scheme_from_relations(RelationPartition::new(labels.clone())?)
            }
            SchemeSpec::Tensor { d, p } => {
                scheme_from_tensor(IntersectionTensor::from_flat(*d, p.clone())?)
            }
        }
    }
}
