//! The fixed list of small algebras the suites run on.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::kernel::FpAlgebra;
use crate::mathieu::nontrivial_idempotents;
use crate::poly::Poly;
use crate::scan::ScanConfig;
use crate::subspace::{enumerate_subspaces, theta_ideal, Subspace, ThetaVariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tag {
    Simple,
    Commutative,
    Local,
    FieldExtension,
    Matrix,
    DirectSum,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: Algebra,
    pub tags: BTreeSet<Tag>,
    pub provenance: String,
}

impl CatalogEntry {
    pub fn has(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }

    pub fn q(&self) -> u64 {
        self.algebra.field().characteristic()
    }

    /// Number of elements of the algebra.
    pub fn size(&self) -> u128 {
        (self.q() as u128).saturating_pow(self.algebra.dim() as u32)
    }
}

/// Above this many elements, tags that need a scan of every element or
/// line are taken from the constructor instead.
const SCAN_TAGS_UP_TO: u128 = 1 << 12;

fn f(p: u64) -> FieldSpec {
    FieldSpec::new(p).expect("small prime")
}

fn field_algebra(p: u64) -> Algebra {
    Algebra::matrix(1, f(p)).expect("n = 1").with_label(format!("F_{p}"))
}

fn entry(name: &str, algebra: Algebra, tags: &[Tag], provenance: &str) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        algebra: algebra.with_label(name),
        tags: tags.iter().copied().collect(),
        provenance: provenance.to_string(),
    }
}

/// Builds the catalog and verifies every tag.
pub fn catalog(cfg: &ScanConfig) -> Result<Vec<CatalogEntry>> {
    use Tag::*;
    let poly = |p: u64, c: &[i64]| Algebra::poly_quotient(&Poly::from_i64s(f(p), c));
    let field_tags = [Simple, Commutative, Local, FieldExtension];
    let mut out = vec![
        entry("F_2", field_algebra(2), &field_tags, "prime field"),
        entry("F_3", field_algebra(3), &field_tags, "prime field"),
        entry("F_5", field_algebra(5), &field_tags, "prime field"),
        entry("F_4/F_2", poly(2, &[1, 1, 1])?, &field_tags, "F_2[t]/(t^2+t+1), t^2+t+1 has no root in F_2"),
        entry(
            "F_2+F_2",
            Algebra::direct_sum(&field_algebra(2), &field_algebra(2))?,
            &[Commutative, DirectSum],
            "direct sum",
        ),
        entry(
            "F_3+F_3",
            Algebra::direct_sum(&field_algebra(3), &field_algebra(3))?,
            &[Commutative, DirectSum],
            "direct sum",
        ),
        entry("F_2[t]/(t^2)", poly(2, &[0, 0, 1])?, &[Commutative, Local], "truncated polynomials"),
        entry("F_2[t]/(t^3)", poly(2, &[0, 0, 0, 1])?, &[Commutative, Local], "truncated polynomials"),
        entry("F_3[t]/(t^2-t)", poly(3, &[0, -1, 1])?, &[Commutative, DirectSum], "t^2 - t = t(t - 1) splits"),
        entry("F_3[t]/(t^2+1)", poly(3, &[1, 0, 1])?, &field_tags, "t^2+1 has no root in F_3"),
    ];
    for (n, q) in [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (3, 5)] {
        let name = format!("M_{n}(F_{q})");
        out.push(entry(&name, Algebra::matrix(n, f(q))?, &[Simple, Matrix], "matrix units"));
    }
    let m2 = Algebra::matrix(2, f(2))?;
    out.push(entry("opp(M_2(F_2))", Algebra::opposite(&m2), &[Simple], "opposite of matrix units"));
    for e in &out {
        verify_tags(e, cfg)?;
    }
    Ok(out)
}

fn mismatch(e: &CatalogEntry, tag: Tag, found: bool) -> Error {
    Error::Inconsistent(format!("{}: tag {tag:?} claimed {} but found {found}", e.name, e.has(tag)))
}

fn verify_tags(e: &CatalogEntry, cfg: &ScanConfig) -> Result<()> {
    let alg = &e.algebra;
    let check = |tag: Tag, found: bool| if e.has(tag) == found { Ok(()) } else { Err(mismatch(e, tag, found)) };
    check(Tag::Commutative, alg.is_commutative())?;
    check(Tag::Matrix, alg.matrix_order().is_some_and(|n| n >= 2))?;
    check(Tag::Local, nontrivial_idempotents(alg, 1, cfg)?.is_empty())?;
    if e.size() <= SCAN_TAGS_UP_TO {
        check(Tag::DirectSum, central_idempotent(alg, cfg)?)?;
        check(Tag::FieldExtension, is_field(alg, cfg)?)?;
        check(Tag::Simple, is_simple(alg, cfg)?)?;
    }
    Ok(())
}

/// A nontrivial idempotent commuting with every basis element.
fn central_idempotent(alg: &Algebra, cfg: &ScanConfig) -> Result<bool> {
    let d = alg.dim();
    Ok(nontrivial_idempotents(alg, usize::MAX, cfg)?
        .iter()
        .any(|e| (0..d).all(|i| alg.mul(e, &alg.basis(i)) == alg.mul(&alg.basis(i), e))))
}

/// Every nonzero element is invertible.
fn is_field(alg: &Algebra, cfg: &ScanConfig) -> Result<bool> {
    let k = FpAlgebra::new(alg)?;
    let n = cfg.scan_len("field test", k.element_count())?;
    Ok(alg.is_commutative() && cfg.all(n, |i| i == 0 || k.minpoly_split(&k.element_at(i)).0 == 0))
}

/// Every nonzero element generates the whole algebra as a two-sided ideal.
fn is_simple(alg: &Algebra, cfg: &ScanConfig) -> Result<bool> {
    for line in enumerate_subspaces(alg, 1, cfg)? {
        let a = &line.basis_elements()[0];
        if theta_ideal(alg, a, ThetaVariant::TwoSided) != Subspace::whole(alg) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_loads_with_verified_tags() {
        let cat = catalog(&ScanConfig::default()).unwrap();
        assert_eq!(cat.len(), 17);
        let names: Vec<&str> = cat.iter().map(|e| e.name.as_str()).collect();
        assert!(names.contains(&"opp(M_2(F_2))"));
        assert!(cat.iter().all(|e| e.algebra.label() == e.name));
    }
}
