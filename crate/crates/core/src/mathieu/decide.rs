//! Deciding the Mathieu condition: the idempotent scan, the definition-level
//! oracle, the rule for lines and the commutative radical test.

use super::{radical_enumerate, MathieuVerdict, Method, Witness};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::kernel::{theta_escape, FpAlgebra, FpSpace, PowerTable};
use crate::scan::ScanConfig;
use crate::subspace::{theta_containment, theta_ideal, Subspace, ThetaVariant};

fn witness_from(alg: &Algebra, e: Element, escape: (Option<usize>, Option<usize>, Element)) -> Witness {
    let (b, c, product) = escape;
    Witness { e, b: b.map(|i| alg.basis(i)), c: c.map(|j| alg.basis(j)), product }
}

/// Decides whether `v` is a θ-Mathieu subspace by scanning `v` for an
/// idempotent whose θ-ideal leaves `v`.
///
/// Over a finite field every vector of `v` is visited (subject to
/// `cfg.max_scan`) and the refutation with the lexicographically least `e`,
/// then least `b`, then least `c` is reported. Over `ℚ` only the trivial
/// subspaces, proper subspaces containing `1` and lines are decided.
pub fn decide_mathieu(alg: &Algebra, v: &Subspace, theta: ThetaVariant, cfg: &ScanConfig) -> Result<MathieuVerdict> {
    v.check_algebra(alg)?;
    let method = Method::IdempotentCriterion;
    if v.is_whole() || v.is_zero() {
        return Ok(MathieuVerdict::holds(theta, method));
    }
    if !alg.field().is_finite() {
        let one = alg.one();
        if v.member(&one) {
            let escape = theta_containment(alg, v, &one, theta).expect("1 generates the whole algebra");
            return Ok(MathieuVerdict::refuted(theta, method, witness_from(alg, one, escape)));
        }
        if v.dim() == 1 {
            return decide_line(alg, v, theta);
        }
        return Err(Error::InfiniteFieldNoDecision);
    }
    let k = FpAlgebra::new(alg)?;
    let s = FpSpace::new(v)?;
    let n = cfg.scan_len(&format!("idempotent scan of a {}-dimensional subspace", v.dim()), s.vector_count())?;
    let hit = cfg.find_first(n, |i| {
        let x = s.vector_at(i);
        if x.iter().all(|&c| c == 0) || k.mul(&x, &x) != x {
            return None;
        }
        theta_escape(&k, &s, &x, theta).map(|(b, c, p)| (x, b, c, p))
    });
    Ok(match hit {
        None => MathieuVerdict::holds(theta, method),
        Some((_, (x, b, c, p))) => {
            let escape = (b, c, k.to_element(&p));
            MathieuVerdict::refuted(theta, method, witness_from(alg, k.to_element(&x), escape))
        }
    })
}

fn decide_line(alg: &Algebra, v: &Subspace, theta: ThetaVariant) -> Result<MathieuVerdict> {
    let a = v.basis_elements().remove(0);
    if line_is_mathieu(alg, &a, theta)? {
        return Ok(MathieuVerdict::holds(theta, Method::LineRule));
    }
    // a² = r a with (a)_θ ≠ Ka, so e = a / r is an idempotent generating
    // the same θ-ideal
    let r = alg.quasi_idempotent_ratio(&a).expect("refuted lines are quasi-idempotent");
    let e = alg.scale(&r.inv()?, &a);
    let escape = theta_containment(alg, v, &e, theta).expect("(e)_θ is larger than the line");
    Ok(MathieuVerdict::refuted(theta, Method::LineRule, witness_from(alg, e, escape)))
}

/// Replays a refutation: `e ∈ v`, `e² = e`, the recorded factors match θ,
/// the recorded product is recomputed and lies outside `v`.
pub fn verify_witness(alg: &Algebra, v: &Subspace, theta: ThetaVariant, w: &Witness) -> Result<bool> {
    v.check_algebra(alg)?;
    alg.check(&w.e)?;
    let product = match (theta, &w.b, &w.c) {
        (ThetaVariant::Left | ThetaVariant::PreTwoSided, Some(b), None) => alg.checked_mul(b, &w.e)?,
        (ThetaVariant::Right | ThetaVariant::PreTwoSided, None, Some(c)) => alg.checked_mul(&w.e, c)?,
        (ThetaVariant::TwoSided, Some(b), Some(c)) => {
            let be = alg.checked_mul(b, &w.e)?;
            alg.checked_mul(&be, c)?
        }
        _ => return Ok(false),
    };
    Ok(v.member(&w.e) && !w.e.is_zero() && alg.is_idempotent(&w.e) && product == w.product && !v.member(&product))
}

/// The Mathieu condition checked from its definition: for every `a` with all
/// powers in `v`, the products `b a^m`, `a^m c` or `b a^m c` over basis
/// elements `b`, `c` must lie in `v` along the whole eventual cycle of the
/// powers of `a`.
pub fn oracle_mathieu(alg: &Algebra, v: &Subspace, theta: ThetaVariant, cfg: &ScanConfig) -> Result<bool> {
    v.check_algebra(alg)?;
    let k = FpAlgebra::new(alg)?;
    let s = FpSpace::new(v)?;
    let n = cfg.scan_len("oracle scan of the algebra", k.element_count())?;
    Ok(cfg.all(n, |i| {
        let a = k.element_at(i);
        let (powers, mu, _) = k.power_orbit(&a);
        if !powers.iter().all(|p| s.contains(p)) {
            return true;
        }
        powers[mu as usize - 1..].iter().all(|p| theta_escape(&k, &s, p, theta).is_none())
    }))
}

/// [`oracle_mathieu`] on precomputed power sequences, for callers that
/// test many subspaces of one algebra.
pub(crate) fn oracle_on_table(
    k: &FpAlgebra,
    table: &PowerTable,
    s: &FpSpace,
    member: &[bool],
    theta: ThetaVariant,
    cfg: &ScanConfig,
) -> bool {
    cfg.all(table.len(), |a| {
        let (mu, lambda) = table.cycle(a);
        let end = (mu + lambda) as u64;
        if !(1..end).all(|m| member[table.power(a, m)]) {
            return true;
        }
        (mu as u64..end).all(|m| theta_escape(k, s, &k.element_at(table.power(a, m)), theta).is_none())
    })
}

/// `Ka` is θ-Mathieu exactly when `Ka = (a)_θ` or `a` is not
/// quasi-idempotent. Total over every supported field.
pub fn line_is_mathieu(alg: &Algebra, a: &Element, theta: ThetaVariant) -> Result<bool> {
    alg.check(a)?;
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    if alg.quasi_idempotent_ratio(a).is_none() {
        return Ok(true);
    }
    Ok(theta_ideal(alg, a, theta) == Subspace::span(alg, std::slice::from_ref(a))?)
}

/// In a commutative algebra, `v` is Mathieu exactly when `√v` is an ideal.
/// `√v` is enumerated and tested for closure under addition, scaling and
/// multiplication by the basis.
pub fn is_mathieu_commutative(alg: &Algebra, v: &Subspace, cfg: &ScanConfig) -> Result<bool> {
    if let Some((i, j)) = alg.commutator_witness() {
        return Err(Error::NotCommutative(i, j));
    }
    let q = alg.field().order().ok_or(Error::InfiniteField)?;
    let rad = radical_enumerate(alg, v, cfg)?;
    let span = Subspace::span(alg, &rad)?;
    // √v is a subspace iff it fills its own span
    if (q as u128).saturating_pow(span.dim() as u32) != rad.len() as u128 {
        return Ok(false);
    }
    Ok(span.basis_elements().iter().all(|x| (0..alg.dim()).all(|i| span.member(&alg.mul(&alg.basis(i), x)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::field::FieldSpec;
    use crate::poly::Poly;
    use crate::subspace::enumerate_subspaces;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn trace_zero(alg: &Algebra) -> Subspace {
        let minus = alg.from_i64s(&[1, 0, 0, -1]).unwrap();
        Subspace::span(alg, &[alg.basis(1), alg.basis(2), minus]).unwrap()
    }

    #[test]
    fn decide_examples() {
        let cfg = ScanConfig::default();
        let m3 = Algebra::matrix(2, f(3)).unwrap();
        for theta in ThetaVariant::ALL {
            assert!(decide_mathieu(&m3, &trace_zero(&m3), theta, &cfg).unwrap().is_mathieu);
        }
        let m2 = Algebra::matrix(2, f(2)).unwrap();
        for theta in ThetaVariant::ALL {
            let v = decide_mathieu(&m2, &trace_zero(&m2), theta, &cfg).unwrap();
            assert!(!v.is_mathieu);
            let w = v.witness.unwrap();
            assert_eq!(w.e, m2.one());
            assert!(verify_witness(&m2, &trace_zero(&m2), theta, &w).unwrap());
        }
        let line = Subspace::span(&m2, &[m2.basis(0)]).unwrap();
        let v = decide_mathieu(&m2, &line, ThetaVariant::Left, &cfg).unwrap();
        let w = v.witness.unwrap();
        assert_eq!((w.e, w.b, w.product), (m2.basis(0), Some(m2.basis(2)), m2.basis(2)));
    }

    #[test]
    fn oracle_examples() {
        let cfg = ScanConfig::default();
        let m3 = Algebra::matrix(2, f(3)).unwrap();
        assert!(oracle_mathieu(&m3, &trace_zero(&m3), ThetaVariant::TwoSided, &cfg).unwrap());
        let m2 = Algebra::matrix(2, f(2)).unwrap();
        let nil = Subspace::span(&m2, &[m2.basis(1)]).unwrap();
        assert!(oracle_mathieu(&m2, &nil, ThetaVariant::TwoSided, &cfg).unwrap());
        let one = Subspace::span(&m2, &[m2.one()]).unwrap();
        for theta in ThetaVariant::ALL {
            assert!(!oracle_mathieu(&m2, &one, theta, &cfg).unwrap());
        }
    }

    #[test]
    fn decide_agrees_with_oracle_on_small_algebras() {
        let cfg = ScanConfig::sequential();
        let algebras =
            [Algebra::matrix(2, f(2)).unwrap(), Algebra::poly_quotient(&Poly::from_i64s(f(3), &[0, 0, 1])).unwrap()];
        for alg in &algebras {
            let k = FpAlgebra::new(alg).unwrap();
            let table = PowerTable::new(&k, &cfg).unwrap();
            for r in 0..=alg.dim() {
                for v in enumerate_subspaces(alg, r, &cfg).unwrap() {
                    for theta in ThetaVariant::ALL {
                        let d = decide_mathieu(alg, &v, theta, &cfg).unwrap().is_mathieu;
                        assert_eq!(d, oracle_mathieu(alg, &v, theta, &cfg).unwrap(), "{v} {theta}");
                        let s = FpSpace::new(&v).unwrap();
                        let member = table.membership(&s);
                        assert_eq!(d, oracle_on_table(&k, &table, &s, &member, theta, &cfg));
                    }
                }
            }
        }
    }

    #[test]
    fn rationals_take_the_special_paths() {
        let cfg = ScanConfig::default();
        let q = FieldSpec::RATIONALS;
        let m2 = Algebra::matrix(2, q).unwrap();
        let e11 = Subspace::span(&m2, &[m2.basis(0)]).unwrap();
        let v = decide_mathieu(&m2, &e11, ThetaVariant::Left, &cfg).unwrap();
        assert_eq!(v.method, Method::LineRule);
        assert!(verify_witness(&m2, &e11, ThetaVariant::Left, &v.witness.unwrap()).unwrap());
        let two = Subspace::span(&m2, &[m2.basis(1), m2.one()]).unwrap();
        assert!(!decide_mathieu(&m2, &two, ThetaVariant::Right, &cfg).unwrap().is_mathieu);
        assert_eq!(
            decide_mathieu(&m2, &trace_zero(&m2), ThetaVariant::Left, &cfg),
            Err(Error::InfiniteFieldNoDecision)
        );
    }

    #[test]
    fn line_examples() {
        let q = FieldSpec::RATIONALS;
        let m2 = Algebra::matrix(2, q).unwrap();
        assert!(line_is_mathieu(&m2, &m2.basis(1), ThetaVariant::TwoSided).unwrap());
        assert!(!line_is_mathieu(&m2, &m2.basis(0), ThetaVariant::Left).unwrap());
        let k2 = Algebra::direct_sum(&Algebra::matrix(1, f(2)).unwrap(), &Algebra::matrix(1, f(2)).unwrap()).unwrap();
        assert!(line_is_mathieu(&k2, &k2.basis(0), ThetaVariant::TwoSided).unwrap());
        assert_eq!(line_is_mathieu(&m2, &m2.zero(), ThetaVariant::Left), Err(Error::ZeroElement));
    }

    #[test]
    fn commutative_examples() {
        let cfg = ScanConfig::default();
        let a3 = Algebra::poly_quotient(&Poly::from_i64s(f(2), &[0, 0, 0, 1])).unwrap();
        let t = Subspace::span(&a3, &[a3.basis(1)]).unwrap();
        assert!(is_mathieu_commutative(&a3, &t, &cfg).unwrap());
        assert!(is_mathieu_commutative(&a3, &Subspace::whole(&a3), &cfg).unwrap());
        let a2 = Algebra::poly_quotient(&Poly::from_i64s(f(2), &[0, 0, 1])).unwrap();
        let v = Subspace::span(&a2, &[a2.from_i64s(&[1, 1]).unwrap()]).unwrap();
        let expected = decide_mathieu(&a2, &v, ThetaVariant::TwoSided, &cfg).unwrap().is_mathieu;
        assert_eq!(is_mathieu_commutative(&a2, &v, &cfg).unwrap(), expected);
        let m2 = Algebra::matrix(2, f(2)).unwrap();
        assert!(matches!(is_mathieu_commutative(&m2, &Subspace::zero(&m2), &cfg), Err(Error::NotCommutative(..))));
    }
}
