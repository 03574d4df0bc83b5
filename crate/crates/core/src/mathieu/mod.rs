//! Radicals of subspaces and the Mathieu condition.
//!
//! A subspace `V` is θ-Mathieu when every `a` whose powers eventually all lie
//! in `V` also has `b a^m`, `a^m c` or `b a^m c` in `V` for large `m`. In
//! finite dimension this holds exactly when every idempotent `e ∈ V`
//! generates a θ-ideal inside `V`, which is what [`decide_mathieu`] scans
//! for. [`oracle_mathieu`] checks the definition itself, element by element.

mod classify;
mod decide;
mod radical;

pub use classify::{find_nontrivial_mathieu, is_quasi_stable, is_stable, nontrivial_idempotents};
pub(crate) use decide::oracle_on_table;
pub use decide::{decide_mathieu, is_mathieu_commutative, line_is_mathieu, oracle_mathieu, verify_witness};
pub use radical::{certify_radical_membership, radical_enumerate, radical_member};

use serde::Serialize;

use crate::algebra::Element;
use crate::subspace::{Subspace, ThetaVariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    IdempotentCriterion,
    Oracle,
    LineRule,
    CommutativeRadical,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::IdempotentCriterion => "idempotent_criterion",
            Method::Oracle => "oracle",
            Method::LineRule => "line_rule",
            Method::CommutativeRadical => "commutative_radical",
        }
    }
}

/// An idempotent `e ∈ V` together with basis element(s) carrying it out of
/// `V`: `product` is `b·e`, `e·c` or `b·e·c`. Since `e^m = e`, this refutes
/// the Mathieu condition directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub e: Element,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Element>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<Element>,
    pub product: Element,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MathieuVerdict {
    pub is_mathieu: bool,
    pub theta: ThetaVariant,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl MathieuVerdict {
    pub(crate) fn holds(theta: ThetaVariant, method: Method) -> Self {
        MathieuVerdict { is_mathieu: true, theta, method, witness: None }
    }

    pub(crate) fn refuted(theta: ThetaVariant, method: Method, witness: Witness) -> Self {
        MathieuVerdict { is_mathieu: false, theta, method, witness: Some(witness) }
    }
}

/// `(a^N)_θ ⊆ M`, with `N` minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalCertificate {
    pub exponent: u64,
    pub ideal: Subspace,
}
