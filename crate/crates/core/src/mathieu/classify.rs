//! Algebra-level questions: nontrivial Mathieu subspaces, quasi-stability
//! and stability.

use super::{decide_mathieu, line_is_mathieu};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::kernel::FpAlgebra;
use crate::scan::ScanConfig;
use crate::subspace::{enumerate_subspaces, Subspace, ThetaVariant};

/// Idempotents other than `0` and `1`, in lexicographic order, stopping
/// after `limit` of them.
pub fn nontrivial_idempotents(alg: &Algebra, limit: usize, cfg: &ScanConfig) -> Result<Vec<Element>> {
    let k = FpAlgebra::new(alg)?;
    let n = cfg.scan_len("idempotent scan of the algebra", k.element_count())?;
    let one = k.unit().clone();
    let mut found = Vec::new();
    let mut start = 0;
    while found.len() < limit {
        let hit = cfg.find_first(n - start, |i| {
            let x = k.element_at(start + i);
            let trivial = x == one || x.iter().all(|&c| c == 0);
            (!trivial && k.mul(&x, &x) == x).then_some(x)
        });
        match hit {
            Some((i, x)) => {
                found.push(k.to_element(&x));
                start += i + 1;
            }
            None => break,
        }
    }
    Ok(found)
}

/// `A ≅ K ∔ K`: dimension 2 with exactly two nontrivial idempotents, which
/// are orthogonal and sum to `1`.
fn is_k_plus_k(alg: &Algebra, cfg: &ScanConfig) -> Result<bool> {
    if alg.dim() != 2 {
        return Ok(false);
    }
    let idem = nontrivial_idempotents(alg, 3, cfg)?;
    Ok(idem.len() == 2 && alg.mul(&idem[0], &idem[1]).is_zero() && alg.add(&idem[0], &idem[1]) == alg.one())
}

/// Every subspace avoiding `1` is Mathieu exactly when `A` has no
/// nontrivial idempotent or `A ≅ K ∔ K`.
pub fn is_quasi_stable(alg: &Algebra, cfg: &ScanConfig) -> Result<bool> {
    if alg.dim() == 1 {
        return Ok(true);
    }
    if !alg.field().is_finite() {
        return Err(Error::InfiniteFieldNoDecision);
    }
    if nontrivial_idempotents(alg, 1, cfg)?.is_empty() {
        return Ok(true);
    }
    is_k_plus_k(alg, cfg)
}

/// Every subspace avoiding `1` is an ideal exactly when `A = K`, or `K` has
/// two elements and `A ≅ K ∔ K`. Over `ℚ` the second case cannot occur, so
/// the answer there is `dim A = 1`.
pub fn is_stable(alg: &Algebra, cfg: &ScanConfig) -> Result<bool> {
    if alg.dim() == 1 {
        return Ok(true);
    }
    if alg.field().characteristic() != 2 {
        return Ok(false);
    }
    is_k_plus_k(alg, cfg)
}

/// The first Mathieu subspace other than `0` and `A` for the two-sided
/// variant: lines in lexicographic order first, then subspaces of growing
/// dimension in enumeration order.
pub fn find_nontrivial_mathieu(alg: &Algebra, cfg: &ScanConfig) -> Result<Subspace> {
    if alg.dim() == 1 {
        return Err(Error::OnlyTrivial);
    }
    let theta = ThetaVariant::TwoSided;
    for line in enumerate_subspaces(alg, 1, cfg)? {
        let a = &line.basis_elements()[0];
        if line_is_mathieu(alg, a, theta)? {
            return Ok(line);
        }
    }
    for r in 2..alg.dim() {
        for v in enumerate_subspaces(alg, r, cfg)? {
            if decide_mathieu(alg, &v, theta, cfg)?.is_mathieu {
                return Ok(v);
            }
        }
    }
    Err(Error::Inconsistent(format!("{} has no nontrivial Mathieu subspace", alg.label())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::Poly;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn kk(p: u64) -> Algebra {
        let k = Algebra::matrix(1, f(p)).unwrap();
        Algebra::direct_sum(&k, &k).unwrap()
    }

    #[test]
    fn stability_examples() {
        let cfg = ScanConfig::default();
        let f4 = Algebra::poly_quotient(&Poly::from_i64s(f(2), &[1, 1, 1])).unwrap();
        assert!(is_quasi_stable(&f4, &cfg).unwrap());
        assert!(is_quasi_stable(&kk(2), &cfg).unwrap());
        assert!(!is_quasi_stable(&Algebra::matrix(2, f(2)).unwrap(), &cfg).unwrap());
        assert!(is_stable(&Algebra::matrix(1, f(3)).unwrap(), &cfg).unwrap());
        assert!(is_stable(&kk(2), &cfg).unwrap());
        assert!(!is_stable(&kk(3), &cfg).unwrap());
        assert!(is_quasi_stable(&kk(3), &cfg).unwrap());
    }

    #[test]
    fn nontrivial_examples() {
        let cfg = ScanConfig::default();
        let m2 = Algebra::matrix(2, f(2)).unwrap();
        let v = find_nontrivial_mathieu(&m2, &cfg).unwrap();
        assert_eq!(v, Subspace::span(&m2, &[m2.basis(2)]).unwrap());
        let f4 = Algebra::poly_quotient(&Poly::from_i64s(f(2), &[1, 1, 1])).unwrap();
        assert_eq!(find_nontrivial_mathieu(&f4, &cfg).unwrap(), Subspace::span(&f4, &[f4.basis(1)]).unwrap());
        assert_eq!(find_nontrivial_mathieu(&Algebra::matrix(1, f(2)).unwrap(), &cfg), Err(Error::OnlyTrivial));
    }

    #[test]
    fn idempotents_of_matrix_algebra() {
        // nontrivial idempotents of M_2(F_2) are the rank-one ones: 6 of them
        let m2 = Algebra::matrix(2, f(2)).unwrap();
        let all = nontrivial_idempotents(&m2, usize::MAX, &ScanConfig::default()).unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|e| m2.is_idempotent(e)));
    }
}
