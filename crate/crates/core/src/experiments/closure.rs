//! Closure laws: subspaces through 1, intersections, pull-backs along
//! homomorphisms, quotients by ideals inside `M`, and left/right duality
//! through the opposite algebra.

use std::collections::HashSet;
use std::sync::Arc;

use super::{all_subspaces, random_element, subspace_count, subspace_sample, task, Context, Outcome, Task};
use crate::algebra::{quotient_algebra, Algebra, AlgebraMap};
use crate::error::Result;
use crate::linalg::Vector;
use crate::mathieu::decide_mathieu;
use crate::scan::ScanConfig;
use crate::subspace::{max_theta_ideal, preimage, Subspace, ThetaVariant};

/// Exhaustive closure checks run on algebras with at most this many
/// subspaces.
const SMALL: u128 = 300;
const SAMPLES: usize = 60;

pub(super) fn tasks<'a>(ctx: &'a Context<'a>) -> Result<Vec<Task<'a>>> {
    let mut out = Vec::new();
    for entry in ctx.small_fields() {
        let alg = &entry.algebra;
        let name = entry.name.clone();
        let cfg = ctx.cfg;
        let sample = Arc::new(subspace_sample(ctx, alg, SMALL, SAMPLES)?);
        let through_one = Arc::new(spaces_through_one(ctx, alg)?);
        out.push(task("contains_one", name.clone(), move || contains_one(alg, &through_one, &cfg)));
        let s = sample.clone();
        out.push(task("duality", name.clone(), move || duality(alg, &s, &cfg)));
        if subspace_count(alg) <= SMALL {
            out.push(task("intersection", name.clone(), move || intersections(alg, &sample, &cfg)));
            out.push(task("quotient", name.clone(), move || quotients(alg, &cfg)));
            out.push(task("pull_back", name.clone(), move || pull_backs(ctx, alg, &cfg)));
        }
    }
    Ok(out)
}

/// Proper subspaces containing 1: all of them for small algebras, random
/// spans of 1 and a few vectors otherwise.
fn spaces_through_one(ctx: &Context<'_>, alg: &Algebra) -> Result<Vec<Subspace>> {
    let one = alg.one();
    if subspace_count(alg) <= SMALL {
        return Ok(all_subspaces(alg, &ctx.cfg)?.into_iter().filter(|v| v.member(&one)).collect());
    }
    let mut rng = ctx.rng(&format!("{} through 1", alg.label()));
    let mut out = Vec::new();
    for extra in 0..SAMPLES {
        let mut gens = vec![one.clone()];
        gens.extend((0..extra % (alg.dim() - 1)).map(|_| random_element(alg, &mut rng)));
        out.push(Subspace::span(alg, &gens)?);
    }
    Ok(out)
}

fn contains_one(alg: &Algebra, spaces: &[Subspace], cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    for v in spaces.iter().filter(|v| !v.is_whole()) {
        for theta in ThetaVariant::ALL {
            let verdict = decide_mathieu(alg, v, theta, cfg)?;
            o.expect(!verdict.is_mathieu, || format!("V = {v} contains 1 but is {theta}-Mathieu"));
        }
    }
    Ok(o)
}

fn duality(alg: &Algebra, spaces: &[Subspace], cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let opp = Algebra::opposite(alg);
    for v in spaces {
        for theta in ThetaVariant::ALL {
            let here = decide_mathieu(alg, v, theta, cfg)?.is_mathieu;
            let there = decide_mathieu(&opp, v, theta.mirrored(), cfg)?.is_mathieu;
            o.expect(here == there, || {
                format!("V = {v}: {theta} in A gives {here}, {} in opp(A) gives {there}", theta.mirrored())
            });
        }
    }
    Ok(o)
}

/// Pairwise intersections of θ-Mathieu subspaces, each distinct one decided
/// once.
fn intersections(alg: &Algebra, spaces: &[Subspace], cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    for theta in ThetaVariant::ALL {
        let mut mathieu = Vec::new();
        for v in spaces {
            if decide_mathieu(alg, v, theta, cfg)?.is_mathieu {
                mathieu.push(v);
            }
        }
        let mut seen = HashSet::new();
        for (i, m1) in mathieu.iter().enumerate() {
            for m2 in &mathieu[i + 1..] {
                let meet = m1.intersect(m2)?;
                if !seen.insert(meet.clone()) {
                    continue;
                }
                let ok = decide_mathieu(alg, &meet, theta, cfg)?.is_mathieu;
                o.expect(ok, || format!("{theta}: {m1} ∩ {m2} = {meet} is not Mathieu"));
            }
        }
    }
    Ok(o)
}

/// Nonzero proper two-sided ideals.
fn proper_ideals(alg: &Algebra, cfg: &ScanConfig) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for v in all_subspaces(alg, cfg)? {
        if !v.is_zero() && !v.is_whole() && max_theta_ideal(alg, &v, ThetaVariant::TwoSided)? == v {
            out.push(v);
        }
    }
    Ok(out)
}

/// For every ideal `I ⊆ M`: `M` and `M/I` get the same verdict, and `M` is
/// the preimage of `M/I`.
fn quotients(alg: &Algebra, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let spaces = all_subspaces(alg, cfg)?;
    for ideal in proper_ideals(alg, cfg)? {
        let (quot, pi) = quotient_algebra(alg, &ideal)?;
        for m in spaces.iter().filter(|m| ideal.is_subspace_of(m)) {
            let image = pi.image(m)?;
            let back = preimage(&pi, &image)?;
            o.expect(back == *m, || format!("I = {ideal}: preimage of π({m}) is {back}"));
            for theta in ThetaVariant::ALL {
                let up = decide_mathieu(alg, m, theta, cfg)?.is_mathieu;
                let down = decide_mathieu(&quot, &image, theta, cfg)?.is_mathieu;
                o.expect(up == down, || {
                    format!("I = {ideal}, M = {m}, θ = {theta}: M gives {up}, M/I = {image} gives {down}")
                });
            }
        }
    }
    Ok(o)
}

/// Homomorphisms out of `alg`: quotient maps by its ideals, and, for
/// two-dimensional algebras, the left regular representation into the
/// catalog's `M_2` over the same field. Homomorphisms into `alg`: the unit
/// map from the base field.
fn homomorphisms(ctx: &Context<'_>, alg: &Algebra, cfg: &ScanConfig) -> Result<Vec<AlgebraMap>> {
    let mut maps = Vec::new();
    for ideal in proper_ideals(alg, cfg)? {
        maps.push(quotient_algebra(alg, &ideal)?.1);
    }
    let field = Algebra::matrix(1, alg.field())?;
    let unit_column: Vec<Vector> = alg.unit().iter().map(|c| vec![c.clone()]).collect();
    maps.push(AlgebraMap::new(field, alg.clone(), unit_column)?);
    let q = alg.field().characteristic();
    let target = ctx.catalog.iter().find(|e| e.algebra.matrix_order() == Some(2) && e.q() == q);
    if let (2, Some(target)) = (alg.dim(), target) {
        let m2 = &target.algebra;
        let columns: Vec<Vec<_>> = (0..2).map(|i| alg.left_mul_matrix(&alg.basis(i)).concat()).collect();
        let rows: Vec<Vector> = (0..4).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        maps.push(AlgebraMap::new(alg.clone(), m2.clone(), rows)?);
    }
    Ok(maps)
}

/// Preimages of Mathieu subspaces under homomorphisms are Mathieu.
fn pull_backs(ctx: &Context<'_>, alg: &Algebra, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    for phi in homomorphisms(ctx, alg, cfg)? {
        let (dom, cod) = (phi.domain(), phi.codomain());
        for m in all_subspaces(cod, cfg)? {
            for theta in ThetaVariant::ALL {
                if !decide_mathieu(cod, &m, theta, cfg)?.is_mathieu {
                    continue;
                }
                let back = preimage(&phi, &m)?;
                let ok = decide_mathieu(dom, &back, theta, cfg)?.is_mathieu;
                o.expect(ok, || {
                    format!("φ: {} → {}, θ = {theta}: preimage {back} of {m} is not Mathieu", dom.label(), cod.label())
                });
            }
        }
    }
    Ok(o)
}
