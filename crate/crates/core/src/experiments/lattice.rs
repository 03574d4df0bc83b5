//! Every Mathieu subspace of a tiny algebra, with the maximal and minimal
//! ones under inclusion.

use super::all_subspaces;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::mathieu::decide_mathieu;
use crate::scan::ScanConfig;
use crate::subspace::{Subspace, ThetaVariant};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    pub theta: ThetaVariant,
    /// Every θ-Mathieu subspace, by dimension and then in enumeration order.
    pub all: Vec<Subspace>,
    /// Mathieu subspaces other than `0` and `A` not strictly inside another
    /// such.
    pub maximal_nontrivial: Vec<Subspace>,
    /// Nonzero Mathieu subspaces not strictly containing another such.
    pub minimal_nonzero: Vec<Subspace>,
}

fn strictly_inside(a: &Subspace, b: &Subspace) -> bool {
    a.dim() < b.dim() && a.is_subspace_of(b)
}

/// Decides every subspace of `alg`.
///
/// Fails with [`Error::Inconsistent`] when a nontrivial maximal element is
/// missing in dimension at least 2, or when `alg` is a matrix algebra and
/// the minimal nonzero Mathieu subspaces are not exactly the lines spanned by
/// elements that are not quasi-idempotent.
pub fn enumerate_all_mathieu(alg: &Algebra, theta: ThetaVariant, cfg: &ScanConfig) -> Result<LatticeReport> {
    let mut all = Vec::new();
    for v in all_subspaces(alg, cfg)? {
        if decide_mathieu(alg, &v, theta, cfg)?.is_mathieu {
            all.push(v);
        }
    }
    let nontrivial: Vec<&Subspace> = all.iter().filter(|v| !v.is_zero() && !v.is_whole()).collect();
    let maximal_nontrivial: Vec<Subspace> =
        nontrivial.iter().filter(|m| !nontrivial.iter().any(|n| strictly_inside(m, n))).map(|m| (*m).clone()).collect();
    let nonzero: Vec<&Subspace> = all.iter().filter(|v| !v.is_zero()).collect();
    let minimal_nonzero: Vec<Subspace> =
        nonzero.iter().filter(|m| !nonzero.iter().any(|n| strictly_inside(n, m))).map(|m| (*m).clone()).collect();
    if alg.dim() >= 2 && maximal_nontrivial.is_empty() {
        return Err(Error::Inconsistent(format!("{}: no maximal nontrivial {theta}-Mathieu subspace", alg.label())));
    }
    if alg.matrix_order().is_some_and(|n| n >= 2) {
        let mut lines: Vec<&Subspace> = all
            .iter()
            .filter(|v| v.dim() == 1 && alg.quasi_idempotent_ratio(&v.basis_elements()[0]).is_none())
            .collect();
        let mut minimal: Vec<&Subspace> = minimal_nonzero.iter().collect();
        lines.sort_by(|a, b| a.canonical_cmp(b));
        minimal.sort_by(|a, b| a.canonical_cmp(b));
        if lines != minimal {
            return Err(Error::Inconsistent(format!(
                "{}: {} minimal nonzero {theta}-Mathieu subspaces but {} non-quasi-idempotent lines",
                alg.label(),
                minimal.len(),
                lines.len()
            )));
        }
    }
    Ok(LatticeReport { theta, all, maximal_nontrivial, minimal_nonzero })
}
