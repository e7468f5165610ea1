use super::express::linear_generator;
use crate::error::Result;
use crate::fglm::{fglm_convert, ReducedGB};
use crate::polyring::MonomialOrder;
use crate::scheme::Scheme;
use crate::structure_ideal::structure_basis;

/// Why a variable does not generate the algebra as a distance-1 relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PPolyFailure {
    /// The eliminant has fewer than `d + 1` roots.
    EliminantDegree { found: usize, needed: usize },
    /// The variable `var` is not a polynomial in the candidate.
    NotExpressible { var: usize },
    /// The expression degrees are not `2, ..., d`.
    ExpressionDegrees { degrees: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct VariableDiagnostic {
    pub var: usize,
    pub outcome: std::result::Result<(), PPolyFailure>,
}

#[derive(Clone, Debug)]
pub struct PPolyReport {
    pub is_p_polynomial: bool,
    pub generator_variable: Option<usize>,
    /// `distance_relabeling[i]` is the distance assigned to class `i`.
    pub distance_relabeling: Option<Vec<usize>>,
    pub witness_basis: Option<ReducedGB>,
    pub diagnostics: Vec<VariableDiagnostic>,
}

fn examine(gb: &ReducedGB, i: usize, d: usize) -> std::result::Result<Vec<usize>, PPolyFailure> {
    let found = gb.eliminant().and_then(|p| p.degree()).unwrap_or(0);
    if found != d + 1 {
        return Err(PPolyFailure::EliminantDegree {
            found,
            needed: d + 1,
        });
    }
    let mut relabel = vec![0; d + 1];
    relabel[i] = 1;
    let mut degrees = Vec::new();
    for j in (1..=d).filter(|&j| j != i) {
        let q = linear_generator(gb, j, &[i]).ok_or(PPolyFailure::NotExpressible { var: j })?;
        let deg = q.degree_in(i).unwrap_or(0) as usize;
        relabel[j] = deg;
        degrees.push(deg);
    }
    let mut sorted = degrees.clone();
    sorted.sort_unstable();
    if sorted != (2..=d).collect::<Vec<_>>() {
        return Err(PPolyFailure::ExpressionDegrees { degrees });
    }
    Ok(relabel)
}

/// Tries each class as the distance-1 relation and accepts the first whose
/// lex basis is `{x_0 - 1, x_j - q_j(x_i), p(x_i)}` with `deg p = d + 1`
/// and expression degrees exactly `2, ..., d`.
pub fn check_p_polynomial(s: &Scheme) -> Result<PPolyReport> {
    let d = s.d();
    let mut report = PPolyReport {
        is_p_polynomial: d == 0,
        generator_variable: None,
        distance_relabeling: (d == 0).then(|| vec![0]),
        witness_basis: None,
        diagnostics: Vec::new(),
    };
    if d == 0 {
        return Ok(report);
    }
    let sb = structure_basis(s)?;
    for i in 1..=d {
        let gb = fglm_convert(&sb, &MonomialOrder::lex_smallest(d + 1, i))?;
        match examine(&gb, i, d) {
            Ok(relabel) => {
                report.diagnostics.push(VariableDiagnostic {
                    var: i,
                    outcome: Ok(()),
                });
                report.is_p_polynomial = true;
                report.generator_variable = Some(i);
                report.distance_relabeling = Some(relabel);
                report.witness_basis = Some(gb);
                break;
            }
            Err(f) => report.diagnostics.push(VariableDiagnostic {
                var: i,
                outcome: Err(f),
            }),
        }
    }
    Ok(report)
}
