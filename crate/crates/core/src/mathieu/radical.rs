//! `√V = {a : a^m ∈ V for all large m}`.
//!
//! With minimal polynomial `t^k h`, `h(0) != 0` and `deg h >= 1`, the powers
//! `a^m` with `m >= max(k, 1)` span a space `W` on which multiplication by
//! `a` is invertible, and every tail power is a fixed linear combination of
//! the `deg h` powers before it and after it. So `deg h` consecutive tail
//! powers in `V` force the whole tail into `V`, and conversely.

use super::{decide_mathieu, RadicalCertificate};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::kernel::{FpAlgebra, FpSpace, PowerTable};
use crate::scan::ScanConfig;
use crate::subspace::{theta_ideal, Subspace, ThetaVariant};

/// Whether `a^m ∈ v` for every sufficiently large `m`. Exact over every
/// supported field.
pub fn radical_member(alg: &Algebra, v: &Subspace, a: &Element) -> Result<bool> {
    v.check_algebra(alg)?;
    alg.check(a)?;
    let mp = alg.minimal_polynomial(a);
    let hd = mp.h_degree();
    if hd == 0 {
        return Ok(true);
    }
    let start = mp.k.max(1) as u64;
    let mut power = alg.pow(a, start);
    for _ in 0..hd {
        if !v.member(&power) {
            return Ok(false);
        }
        power = alg.mul(&power, a);
    }
    Ok(true)
}

/// All elements of `√v`, in lexicographic coordinate order.
///
/// Every element is decided twice, by the minimal-polynomial window and by
/// the eventual cycle of its powers; a disagreement is reported as
/// [`Error::Inconsistent`].
pub fn radical_enumerate(alg: &Algebra, v: &Subspace, cfg: &ScanConfig) -> Result<Vec<Element>> {
    v.check_algebra(alg)?;
    let k = FpAlgebra::new(alg)?;
    let table = PowerTable::new(&k, cfg)?;
    let member = table.membership(&FpSpace::new(v)?);
    let verdicts = cfg.map_collect(table.len(), |a| (table.window_member(a, &member), table.cycle_member(a, &member)));
    if let Some(a) = verdicts.iter().position(|(w, c)| w != c) {
        return Err(Error::Inconsistent(format!("window and cycle disagree on {}", k.to_element(&k.element_at(a)))));
    }
    Ok(verdicts.iter().enumerate().filter(|(_, (w, _))| *w).map(|(a, _)| k.to_element(&k.element_at(a))).collect())
}

/// The least `N` with `(a^N)_θ ⊆ m`.
///
/// The search runs up to `n·k`, where `n` is the least exponent with
/// `a^j ∈ m` for every `j >= n` and `k` is the multiplicity of 0 as a root
/// of the minimal polynomial of `a^n`; a Mathieu subspace always has a
/// certificate within that bound.
pub fn certify_radical_membership(
    alg: &Algebra,
    m: &Subspace,
    theta: ThetaVariant,
    a: &Element,
    cfg: &ScanConfig,
) -> Result<RadicalCertificate> {
    if !radical_member(alg, m, a)? {
        return Err(Error::NotInRadical);
    }
    match decide_mathieu(alg, m, theta, cfg) {
        Ok(v) if !v.is_mathieu => return Err(Error::NotMathieu),
        Ok(_) | Err(Error::InfiniteFieldNoDecision) => {}
        Err(e) => return Err(e),
    }
    let n = stable_exponent(alg, m, a);
    let an = alg.pow(a, n);
    let bound = n * alg.minimal_polynomial(&an).k as u64;
    let mut power = alg.one();
    for exponent in 0..=bound {
        let ideal = theta_ideal(alg, &power, theta);
        if ideal.is_subspace_of(m) {
            return Ok(RadicalCertificate { exponent, ideal });
        }
        power = alg.mul(&power, a);
    }
    Err(Error::NotMathieu)
}

/// Least `n >= 1` with `a^j ∈ m` for all `j >= n`, for `a ∈ √m`.
fn stable_exponent(alg: &Algebra, m: &Subspace, a: &Element) -> u64 {
    let mp = alg.minimal_polynomial(a);
    // The whole tail from max(k, 1) on lies in m; for a nilpotent the tail
    // is zero from k on.
    let mut n = mp.k.max(1) as u64;
    while n > 1 && m.member(&alg.pow(a, n - 1)) {
        n -= 1;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::Poly;

    fn trace_zero(alg: &Algebra) -> Subspace {
        Subspace::span(alg, &[alg.basis(1), alg.basis(2), alg.from_i64s(&[1, 0, 0, -1]).unwrap()]).unwrap()
    }

    #[test]
    fn membership_examples() {
        let m2 = Algebra::matrix(2, FieldSpec::new(5).unwrap()).unwrap();
        let h = trace_zero(&m2);
        assert!(radical_member(&m2, &h, &m2.basis(1)).unwrap());
        assert!(!radical_member(&m2, &h, &m2.basis(0)).unwrap());
        assert!(!radical_member(&m2, &Subspace::zero(&m2), &m2.one()).unwrap());
    }

    #[test]
    fn enumerate_examples() {
        let cfg = ScanConfig::default();
        let m2 = Algebra::matrix(2, FieldSpec::new(5).unwrap()).unwrap();
        let rad = radical_enumerate(&m2, &trace_zero(&m2), &cfg).unwrap();
        // nilpotent 2x2 matrices over F_q: q^2 of them
        assert_eq!(rad.len(), 25);
        assert!(rad.iter().all(|a| m2.minimal_polynomial(a).is_nilpotent()));

        let f2 = FieldSpec::new(2).unwrap();
        let a = Algebra::poly_quotient(&Poly::from_i64s(f2, &[0, 0, 0, 1])).unwrap();
        assert_eq!(radical_enumerate(&a, &Subspace::whole(&a), &cfg).unwrap().len(), 8);
        let t = Subspace::span(&a, &[a.basis(1)]).unwrap();
        let rad = radical_enumerate(&a, &t, &cfg).unwrap();
        let expected: Vec<Element> =
            [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1]].iter().map(|c| a.from_i64s(c).unwrap()).collect();
        assert_eq!(rad, expected);
    }

    #[test]
    fn certificate_examples() {
        let cfg = ScanConfig::default();
        let m2 = Algebra::matrix(2, FieldSpec::new(5).unwrap()).unwrap();
        let e12 = m2.basis(1);
        for theta in ThetaVariant::ALL {
            let c = certify_radical_membership(&m2, &Subspace::zero(&m2), theta, &e12, &cfg).unwrap();
            assert_eq!((c.exponent, c.ideal.dim()), (2, 0));
            let c = certify_radical_membership(&m2, &Subspace::whole(&m2), theta, &m2.basis(0), &cfg).unwrap();
            assert_eq!(c.exponent, 0);
        }
        let c = certify_radical_membership(&m2, &trace_zero(&m2), ThetaVariant::TwoSided, &e12, &cfg).unwrap();
        assert_eq!(c.exponent, 2);
        assert_eq!(
            certify_radical_membership(&m2, &trace_zero(&m2), ThetaVariant::Left, &m2.basis(0), &cfg),
            Err(Error::NotInRadical)
        );
    }
}
