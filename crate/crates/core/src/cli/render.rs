use serde_json::{json, Value};

use crate::exactmath::{Rational, RealRoot, UniPoly};
use crate::polyring::PolyBasis;

pub(crate) fn rational_json(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub(crate) fn root_json(r: &RealRoot) -> Value {
    match r {
        RealRoot::Exact(q) => rational_json(q),
        RealRoot::Isolated { lo, hi, poly } => json!({
            "minpoly": poly.primitive_integer().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "interval": [lo.to_string(), hi.to_string()],
        }),
    }
}

pub(crate) fn grid_json(grid: &[Vec<RealRoot>]) -> Value {
    Value::Array(
        grid.iter()
            .map(|row| Value::Array(row.iter().map(root_json).collect()))
            .collect(),
    )
}

pub(crate) fn unipoly_json(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_json).collect())
}

pub(crate) fn basis_json(b: &PolyBasis) -> Value {
    json!(b.display_lines())
}

/// Exact rationals as `p/q`, irrationals as decimals with a trailing `~`.
pub(crate) fn root_text(r: &RealRoot, digits: u32) -> String {
    match r {
        RealRoot::Exact(q) => q.to_string(),
        RealRoot::Isolated { .. } => format!("{}~", r.to_decimal(digits)),
    }
}

/// Right-aligned columns.
pub(crate) fn table_text(cells: &[Vec<String>]) -> String {
    let cols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            cells
                .iter()
                .map(|r| r[j].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}", w = *w))
            .collect();
        out.push_str("  ");
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

/// Lines describing every irrational entry of `grid`.
pub(crate) fn irrational_notes(name: &str, grid: &[Vec<RealRoot>], digits: u32) -> Vec<String> {
    let mut out = Vec::new();
    for (i, row) in grid.iter().enumerate() {
        for (j, r) in row.iter().enumerate() {
            if let RealRoot::Isolated { poly, .. } = r {
                let p = UniPoly::new(
                    poly.primitive_integer()
                        .into_iter()
                        .map(Rational::from_integer)
                        .collect(),
                );
                out.push(format!(
                    "{name}[{i}][{j}] = root of {p} near {}",
                    r.to_decimal(digits)
                ));
            }
        }
    }
    out
}
