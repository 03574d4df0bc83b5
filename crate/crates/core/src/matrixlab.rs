//! The trace pairing on `M_n(K)`, the hyperplanes
//! `H_X = {A : Tr(AX) = 0}`, explicit idempotents refuting the Mathieu
//! condition on `H_X` for non-scalar `X`, and the exhaustive classification
//! of hyperplanes and lines in small matrix algebras.

use std::fmt;

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::kernel::{self, theta_escape, FpAlgebra, Hyperplane, ProjectivePoints};
use crate::linalg;
use crate::mathieu::{decide_mathieu, line_is_mathieu, MathieuVerdict};
use crate::scan::ScanConfig;
use crate::subspace::{enumerate_subspaces, gaussian_binomial, Subspace, ThetaVariant};

fn matrix_order(alg: &Algebra) -> Result<usize> {
    alg.matrix_order().ok_or(Error::NotMatrixAlgebra)
}

/// Row-major flat coordinates of the transpose.
fn transpose(n: usize, x: &[Scalar]) -> Vec<Scalar> {
    (0..n * n).map(|ij| x[(ij % n) * n + ij / n].clone()).collect()
}

/// Scales the first nonzero coordinate to 1.
fn normalize(x: &[Scalar]) -> Option<Vec<Scalar>> {
    let lead = x.iter().find(|c| !c.is_zero())?;
    let inv = lead.inv().expect("nonzero");
    Some(linalg::scale(&inv, x))
}

/// `H_X = {A : Tr(AX) = 0}`.
pub fn h_subspace(alg: &Algebra, x: &Element) -> Result<Subspace> {
    let n = matrix_order(alg)?;
    alg.check(x)?;
    if x.is_zero() {
        return Err(Error::ZeroDual);
    }
    // Tr(AX) = Σ A_ij X_ji, so the defining functional is Xᵀ flattened
    let normal = transpose(n, x.coords());
    let basis = linalg::nullspace(vec![normal], alg.dim(), alg.field());
    Subspace::from_vectors(alg.field(), alg.dim(), basis)
}

/// The class of `X` under nonzero scaling, represented by the multiple
/// whose first nonzero coordinate (row-major) is 1. `H_X = H_Y` exactly when
/// the representatives agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TraceDual {
    pub x: Element,
}

impl TraceDual {
    pub fn of(alg: &Algebra, x: &Element) -> Result<Self> {
        matrix_order(alg)?;
        alg.check(x)?;
        let coords = normalize(x.coords()).ok_or(Error::ZeroDual)?;
        Ok(TraceDual { x: Element::new(coords) })
    }

    pub fn is_scalar(&self, alg: &Algebra) -> bool {
        self.x.coords() == alg.unit()
    }
}

impl fmt::Display for TraceDual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.x)
    }
}

/// The `X` (up to scaling) with `V = H_X`, for a hyperplane `V`.
pub fn trace_dual(alg: &Algebra, v: &Subspace) -> Result<TraceDual> {
    let n = matrix_order(alg)?;
    v.check_algebra(alg)?;
    if v.codim() != 1 {
        return Err(Error::WrongCodimension(v.codim()));
    }
    let normal = v.check_rows().remove(0);
    TraceDual::of(alg, &Element::new(transpose(n, &normal)))
}

/// The 2×2 construction: a nontrivial idempotent `A` with `Tr(AX) = 0` and
/// `AX != 0`, for `X = [[a, b], [c, d]]` not a multiple of the identity.
fn witness_2x2(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Result<[Scalar; 4]> {
    let field = a.field();
    let (zero, one) = (field.zero(), field.one());
    if !b.is_zero() {
        Ok([one, zero.clone(), -&(a * &b.inv()?), zero])
    } else if !c.is_zero() {
        Ok([zero.clone(), -&(d * &c.inv()?), zero, one])
    } else if a != d {
        let s = (d - a).inv()?;
        Ok([&s * d, &s * d, -&(&s * a), -&(&s * a)])
    } else {
        Err(Error::ScalarDual)
    }
}

/// First `(m, k)`, `m < k`, whose principal 2×2 block of `X` is not a
/// multiple of the identity, and a nontrivial idempotent `A` supported on
/// rows and columns `m, k` with `Tr(AX) = 0` and `AX != 0`.
fn left_witness(n: usize, x: &[Scalar]) -> Result<Vec<Scalar>> {
    let at = |i: usize, j: usize| &x[i * n + j];
    for m in 0..n {
        for k in m + 1..n {
            let block = witness_2x2(at(m, m), at(m, k), at(k, m), at(k, k));
            match block {
                Err(Error::ScalarDual) => continue,
                Err(e) => return Err(e),
                Ok(a2) => {
                    let field = x[0].field();
                    let mut out = linalg::zero_vector(field, n * n);
                    for (slot, (r, c)) in [(m, m), (m, k), (k, m), (k, k)].into_iter().enumerate() {
                        out[r * n + c] = a2[slot].clone();
                    }
                    return Ok(out);
                }
            }
        }
    }
    Err(Error::ScalarDual)
}

/// Nontrivial idempotents `A`, `B` with `Tr(AX) = Tr(XB) = 0`, `AX != 0` and
/// `XB != 0`. `B` is the transpose of the `A` built for `Xᵀ`.
pub fn witness_idempotents(alg: &Algebra, x: &Element) -> Result<(Element, Element)> {
    let n = matrix_order(alg)?;
    alg.check(x)?;
    if n == 1 {
        return Err(Error::TooSmall);
    }
    if x.is_zero() {
        return Err(Error::ZeroDual);
    }
    let a = left_witness(n, x.coords())?;
    let b = transpose(n, &left_witness(n, &transpose(n, x.coords()))?);
    Ok((Element::new(a), Element::new(b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Codim1Strategy {
    /// `Exhaustive` when every class fits the scan budget, else `Witness`.
    Auto,
    /// The idempotent scan on every hyperplane.
    Exhaustive,
    /// The idempotent scan on `H` only; every other `H_X` is refuted by the
    /// explicit idempotents of [`witness_idempotents`], replayed exactly.
    Witness,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PerTheta {
    pub left: u64,
    pub right: u64,
    pub pre_two_sided: u64,
    pub two_sided: u64,
}

impl PerTheta {
    pub fn get(&self, theta: ThetaVariant) -> u64 {
        match theta {
            ThetaVariant::Left => self.left,
            ThetaVariant::Right => self.right,
            ThetaVariant::PreTwoSided => self.pre_two_sided,
            ThetaVariant::TwoSided => self.two_sided,
        }
    }

    fn bump(&mut self, theta: ThetaVariant) {
        match theta {
            ThetaVariant::Left => self.left += 1,
            ThetaVariant::Right => self.right += 1,
            ThetaVariant::PreTwoSided => self.pre_two_sided += 1,
            ThetaVariant::TwoSided => self.two_sided += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Codim1Report {
    pub n: usize,
    pub q: u64,
    pub total: u64,
    pub per_theta: PerTheta,
    /// Canonical `X` of every class that is Mathieu for at least one θ.
    pub representatives: Vec<Element>,
    pub strategy: Codim1Strategy,
}

/// Decides every hyperplane `H_X` of `M_n(F_q)` for every θ.
pub fn classify_codim1(n: usize, q: u64, strategy: Codim1Strategy, cfg: &ScanConfig) -> Result<Codim1Report> {
    let field = FieldSpec::prime(q)?;
    let alg = Algebra::matrix(n, field)?;
    let d = n * n;
    let total = ProjectivePoints::count(q, d);
    cfg.guard("hyperplane classes", total, cfg.max_subspaces.max(cfg.max_scan))?;
    let per_class = (q as u128).saturating_pow(d as u32 - 1);
    let strategy = match strategy {
        Codim1Strategy::Auto if total.saturating_mul(per_class) <= cfg.max_scan as u128 => Codim1Strategy::Exhaustive,
        Codim1Strategy::Auto => Codim1Strategy::Witness,
        s => s,
    };
    let k = FpAlgebra::new(&alg)?;
    let points = ProjectivePoints::new(q, d);
    let unit = k.unit().clone();
    let inner = ScanConfig { parallel: false, ..*cfg };
    let outcomes: Vec<Result<[bool; 4]>> = cfg.map_collect(points.len(), |i| {
        let x = points.point_at(i);
        if strategy == Codim1Strategy::Exhaustive || x == unit {
            let h = h_subspace(&alg, &k.to_element(&x))?;
            let mut out = [false; 4];
            for (slot, theta) in ThetaVariant::ALL.into_iter().enumerate() {
                out[slot] = decide_mathieu(&alg, &h, theta, &inner)?.is_mathieu;
            }
            Ok(out)
        } else {
            refute_by_witness(&alg, &k, n, &x).map(|()| [false; 4])
        }
    });
    let mut per_theta = PerTheta::default();
    let mut representatives = Vec::new();
    for (i, outcome) in outcomes.into_iter().enumerate() {
        let flags = outcome?;
        for (slot, theta) in ThetaVariant::ALL.into_iter().enumerate() {
            if flags[slot] {
                per_theta.bump(theta);
            }
        }
        if flags.iter().any(|&f| f) {
            representatives.push(k.to_element(&points.point_at(i)));
        }
    }
    Ok(Codim1Report { n, q, total: total as u64, per_theta, representatives, strategy })
}

/// Builds `A`, `B` for a non-scalar `X` and checks in residue arithmetic
/// that they are nontrivial idempotents in `H_X` whose left (for `A`) and
/// right (for `B`) ideals leave `H_X` for every θ.
fn refute_by_witness(alg: &Algebra, k: &FpAlgebra, n: usize, x: &[u64]) -> Result<()> {
    let (a, b) = witness_idempotents(alg, &k.to_element(x))?;
    let (a, b) = (kernel::to_rvec(a.coords()), kernel::to_rvec(b.coords()));
    let p = k.p();
    let normal: Vec<u64> = (0..n * n).map(|ij| x[(ij % n) * n + ij / n]).collect();
    let h = Hyperplane { p, normal };
    let zero = vec![0u64; n * n];
    let bad = |what: &str| Error::Inconsistent(format!("witness for X = {}: {what}", k.to_element(x)));
    for e in [&a, &b] {
        if k.mul(e, e) != *e || *e == zero || e == k.unit() {
            return Err(bad("not a nontrivial idempotent"));
        }
        if !kernel::Contains::contains(&h, e) {
            return Err(bad("idempotent outside H_X"));
        }
    }
    if k.mul(&a, x) == zero || k.mul(x, &b) == zero {
        return Err(bad("AX or XB vanishes"));
    }
    for theta in ThetaVariant::ALL {
        let e = if theta == ThetaVariant::Right { &b } else { &a };
        if theta_escape(k, &h, e, theta).is_none() {
            return Err(bad(&format!("(e)_{theta} stays inside H_X")));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinesReport {
    pub n: usize,
    pub q: u64,
    pub total_lines: u64,
    pub per_theta: PerTheta,
    pub quasi_idempotent_lines: u64,
    /// Every line is Mathieu for a given θ exactly when its generator is not
    /// quasi-idempotent, for all four θ.
    pub equivalence_holds: bool,
}

/// Evaluates [`line_is_mathieu`] and the quasi-idempotent predicate on every
/// line of `M_n(F_q)`.
pub fn classify_lines(n: usize, q: u64, cfg: &ScanConfig) -> Result<LinesReport> {
    let field = FieldSpec::prime(q)?;
    let alg = Algebra::matrix(n, field)?;
    let d = n * n;
    let total = gaussian_binomial(d, 1, q);
    cfg.guard("lines", total, cfg.max_subspaces)?;
    let k = FpAlgebra::new(&alg)?;
    let points = ProjectivePoints::new(q, d);
    let rows: Vec<Result<(bool, [bool; 4])>> = cfg.map_collect(points.len(), |i| {
        let a = k.to_element(&points.point_at(i));
        let qi = alg.quasi_idempotent_ratio(&a).is_some();
        let mut flags = [false; 4];
        for (slot, theta) in ThetaVariant::ALL.into_iter().enumerate() {
            flags[slot] = line_is_mathieu(&alg, &a, theta)?;
        }
        Ok((qi, flags))
    });
    let mut per_theta = PerTheta::default();
    let mut qi_lines = 0;
    let mut equivalence_holds = true;
    for row in rows {
        let (qi, flags) = row?;
        qi_lines += qi as u64;
        for (slot, theta) in ThetaVariant::ALL.into_iter().enumerate() {
            if flags[slot] {
                per_theta.bump(theta);
            }
            equivalence_holds &= flags[slot] != qi;
        }
    }
    Ok(LinesReport { n, q, total_lines: total as u64, per_theta, quasi_idempotent_lines: qi_lines, equivalence_holds })
}

/// A proper subspace of `M_n(F_q)` is Mathieu exactly when it contains no
/// nonzero idempotent. Returns whether `v` avoids nonzero idempotents, after
/// checking that the two-sided idempotent scan reaches the same verdict.
pub fn check_proper_subspace_criterion(alg: &Algebra, v: &Subspace, cfg: &ScanConfig) -> Result<bool> {
    matrix_order(alg)?;
    v.check_algebra(alg)?;
    if v.is_whole() {
        return Err(Error::NotProper);
    }
    let k = FpAlgebra::new(alg)?;
    let s = kernel::FpSpace::new(v)?;
    let n = cfg.scan_len("idempotent scan of the subspace", s.vector_count())?;
    let found = cfg.find_first(n, |i| {
        let x = s.vector_at(i);
        (x.iter().any(|&c| c != 0) && k.mul(&x, &x) == x).then_some(())
    });
    let avoids = found.is_none();
    let verdict: MathieuVerdict = decide_mathieu(alg, v, ThetaVariant::TwoSided, cfg)?;
    if verdict.is_mathieu != avoids {
        return Err(Error::Inconsistent(format!(
            "idempotent-free = {avoids} but two-sided verdict = {}",
            verdict.is_mathieu
        )));
    }
    Ok(avoids)
}

/// All hyperplanes of `alg` that are θ-Mathieu, by enumeration. Used to
/// cross-check [`classify_codim1`] on algebras given only by structure
/// constants.
pub fn mathieu_hyperplanes(alg: &Algebra, theta: ThetaVariant, cfg: &ScanConfig) -> Result<Vec<Subspace>> {
    let d = alg.dim();
    let mut out = Vec::new();
    for v in enumerate_subspaces(alg, d - 1, cfg)? {
        if decide_mathieu(alg, &v, theta, cfg)?.is_mathieu {
            out.push(v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn h_subspace_examples() {
        let m2 = Algebra::matrix(2, f(5)).unwrap();
        let h = h_subspace(&m2, &m2.one()).unwrap();
        assert_eq!(h.dim(), 3);
        assert!(h.member(&m2.from_i64s(&[1, 7, 3, -1]).unwrap()));
        let h12 = h_subspace(&m2, &m2.basis(1)).unwrap();
        // Tr(A E_12) = a_21
        assert!(h12.member(&m2.from_i64s(&[1, 2, 0, 4]).unwrap()));
        assert!(!h12.member(&m2.basis(2)));
        assert_eq!(h_subspace(&m2, &m2.zero()), Err(Error::ZeroDual));
    }

    #[test]
    fn trace_dual_examples() {
        let m3 = Algebra::matrix(2, f(3)).unwrap();
        let h = h_subspace(&m3, &m3.scale(&f(3).from_i64(2), &m3.one())).unwrap();
        assert!(trace_dual(&m3, &h).unwrap().is_scalar(&m3));
        let m2 = Algebra::matrix(2, f(2)).unwrap();
        let v = Subspace::span(&m2, &[m2.basis(0), m2.basis(1), m2.basis(3)]).unwrap();
        assert_eq!(trace_dual(&m2, &v).unwrap().x, m2.basis(1));
        let small = Subspace::span(&m2, &[m2.basis(0), m2.basis(1)]).unwrap();
        assert_eq!(trace_dual(&m2, &small), Err(Error::WrongCodimension(2)));
    }

    #[test]
    fn witness_cases() {
        let q = FieldSpec::RATIONALS;
        let m2 = Algebra::matrix(2, q).unwrap();
        let (a, _) = witness_idempotents(&m2, &m2.from_i64s(&[3, 2, 5, 7]).unwrap()).unwrap();
        assert_eq!(
            a,
            m2.element(vec![q.one(), q.zero(), q.from_i64(-3) * q.from_i64(2).inv().unwrap(), q.zero()]).unwrap()
        );
        let (a, _) = witness_idempotents(&m2, &m2.from_i64s(&[3, 0, 5, 7]).unwrap()).unwrap();
        assert_eq!(a.coords()[1], q.from_i64(-7) * q.from_i64(5).inv().unwrap());
        let (a, _) = witness_idempotents(&m2, &m2.from_i64s(&[1, 0, 0, 3]).unwrap()).unwrap();
        let half = q.from_i64(2).inv().unwrap();
        assert_eq!(a.coords()[0], &half * &q.from_i64(3));
        assert_eq!(witness_idempotents(&m2, &m2.one()), Err(Error::ScalarDual));
        let m1 = Algebra::matrix(1, q).unwrap();
        assert_eq!(witness_idempotents(&m1, &m1.one()), Err(Error::TooSmall));
    }

    #[test]
    fn witness_properties_exhaustive_small() {
        for p in [2, 3] {
            let alg = Algebra::matrix(2, f(p)).unwrap();
            let k = FpAlgebra::new(&alg).unwrap();
            for i in 1..k.element_count() as usize {
                let x = k.to_element(&k.element_at(i));
                if TraceDual::of(&alg, &x).unwrap().is_scalar(&alg) {
                    continue;
                }
                let (a, b) = witness_idempotents(&alg, &x).unwrap();
                let h = h_subspace(&alg, &x).unwrap();
                for e in [&a, &b] {
                    assert!(alg.is_idempotent(e) && !e.is_zero() && *e != alg.one());
                    assert!(h.member(e));
                }
                assert!(!alg.mul(&a, &x).is_zero() && !alg.mul(&x, &b).is_zero());
            }
        }
    }

    #[test]
    fn codim1_small_cases() {
        let cfg = ScanConfig::default();
        let r = classify_codim1(1, 7, Codim1Strategy::Auto, &cfg).unwrap();
        assert_eq!((r.total, r.per_theta.two_sided), (1, 1));
        let r = classify_codim1(2, 3, Codim1Strategy::Exhaustive, &cfg).unwrap();
        assert_eq!(r.total, 40);
        assert_eq!(r.per_theta, PerTheta { left: 1, right: 1, pre_two_sided: 1, two_sided: 1 });
        let w = classify_codim1(2, 3, Codim1Strategy::Witness, &cfg).unwrap();
        assert_eq!((w.per_theta, w.representatives), (r.per_theta, r.representatives));
        let r = classify_codim1(2, 2, Codim1Strategy::Auto, &cfg).unwrap();
        assert_eq!(r.per_theta, PerTheta::default());
    }

    #[test]
    fn lines_and_proper_criterion() {
        let cfg = ScanConfig::default();
        let r = classify_lines(2, 2, &cfg).unwrap();
        assert_eq!(r.total_lines, 15);
        assert!(r.equivalence_holds);
        assert_eq!(r.per_theta.left, 15 - r.quasi_idempotent_lines);

        let m3 = Algebra::matrix(2, f(3)).unwrap();
        assert!(check_proper_subspace_criterion(&m3, &h_subspace(&m3, &m3.one()).unwrap(), &cfg).unwrap());
        let m2 = Algebra::matrix(2, f(2)).unwrap();
        let e11 = Subspace::span(&m2, &[m2.basis(0)]).unwrap();
        assert!(!check_proper_subspace_criterion(&m2, &e11, &cfg).unwrap());
        let anti = Subspace::span(&m2, &[m2.basis(1), m2.basis(2)]).unwrap();
        let expected = decide_mathieu(&m2, &anti, ThetaVariant::TwoSided, &cfg).unwrap().is_mathieu;
        assert_eq!(check_proper_subspace_criterion(&m2, &anti, &cfg).unwrap(), expected);
    }
}
