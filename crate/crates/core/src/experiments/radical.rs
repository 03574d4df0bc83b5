//! Radical laws: the window rule against the cycle definition, rad(√M) = √M,
//! √M = √(I_M), idempotents against nilpotent-or-invertible radicals, and
//! minimal radical certificates.

use super::{subspace_sample, task, CatalogEntry, Context, Outcome, Task};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::kernel::{FpAlgebra, FpSpace, PowerTable};
use crate::mathieu::{certify_radical_membership, decide_mathieu, radical_member};
use crate::scan::ScanConfig;
use crate::subspace::{max_theta_ideal, theta_ideal, Subspace, ThetaVariant};

/// Subspace samples: every subspace when there are at most this many.
const ALL_UP_TO: u128 = 200;
const SAMPLES: usize = 200;

struct Prepared<'a> {
    entry: &'a CatalogEntry,
    k: FpAlgebra,
    table: PowerTable,
    spaces: Vec<Subspace>,
    members: Vec<Vec<bool>>,
}

impl Prepared<'_> {
    fn alg(&self) -> &Algebra {
        &self.entry.algebra
    }

    fn radical(&self, member: &[bool]) -> Vec<bool> {
        (0..self.table.len()).map(|a| self.table.window_member(a, member)).collect()
    }

    fn show(&self, a: usize) -> String {
        self.k.to_element(&self.k.element_at(a)).to_string()
    }
}

fn prepare<'a>(ctx: &Context<'_>, entry: &'a CatalogEntry) -> Result<Prepared<'a>> {
    let k = FpAlgebra::new(&entry.algebra)?;
    let table = PowerTable::new(&k, &ctx.cfg)?;
    let spaces = subspace_sample(ctx, &entry.algebra, ALL_UP_TO, SAMPLES)?;
    let members = spaces.iter().map(|v| Ok(table.membership(&FpSpace::new(v)?))).collect::<Result<_>>()?;
    Ok(Prepared { entry, k, table, spaces, members })
}

pub(super) fn tasks<'a>(ctx: &'a Context<'a>) -> Result<Vec<Task<'a>>> {
    let prepared: Vec<Prepared<'a>> = ctx.small_fields().map(|e| prepare(ctx, e)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for p in prepared {
        let p = std::sync::Arc::new(p);
        let name = p.entry.name.clone();
        let cfg = ctx.cfg;
        let q = p.clone();
        out.push(task("window_vs_cycle", name.clone(), move || window_vs_cycle(&q)));
        let q = p.clone();
        out.push(task("radical_of_radical", name.clone(), move || radical_of_radical(&q, &cfg)));
        let q = p.clone();
        out.push(task("mathieu_radical_is_ideal_radical", name.clone(), move || {
            mathieu_radical_is_ideal_radical(&q, &cfg)
        }));
        let q = p.clone();
        out.push(task("idempotent_dichotomy", name.clone(), move || idempotent_dichotomy(&q)));
        if p.alg().dim() <= 4 {
            let q = p.clone();
            out.push(task("certificate", name.clone(), move || certificates(&q, &cfg)));
        }
    }
    Ok(out)
}

/// The window rule against the eventual cycle for every element and every
/// sampled subspace; in dimension at most 3 also against the field-generic
/// [`radical_member`].
fn window_vs_cycle(p: &Prepared<'_>) -> Result<Outcome> {
    let mut o = Outcome::new();
    let generic = p.alg().dim() <= 3;
    for (v, member) in p.spaces.iter().zip(&p.members) {
        for a in 0..p.table.len() {
            let w = p.table.window_member(a, member);
            let c = p.table.cycle_member(a, member);
            o.expect(w == c, || format!("V = {v}, a = {}: window {w}, cycle {c}", p.show(a)));
            if generic {
                let elem = p.k.to_element(&p.k.element_at(a));
                let g = radical_member(p.alg(), v, &elem)?;
                o.expect(g == c, || format!("V = {v}, a = {elem}: radical_member {g}, cycle {c}"));
            }
        }
    }
    Ok(o)
}

fn mathieu_for_some(alg: &Algebra, v: &Subspace, cfg: &ScanConfig) -> Result<Option<ThetaVariant>> {
    for theta in ThetaVariant::ALL {
        if decide_mathieu(alg, v, theta, cfg)?.is_mathieu {
            return Ok(Some(theta));
        }
    }
    Ok(None)
}

/// `√S ⊆ rad(√S)` always, with equality when `S` is Mathieu.
fn radical_of_radical(p: &Prepared<'_>, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    for (v, member) in p.spaces.iter().zip(&p.members) {
        let rad = p.radical(member);
        let rad2: Vec<bool> = (0..p.table.len()).map(|a| p.table.cycle_member(a, &rad)).collect();
        let missing = (0..rad.len()).find(|&a| rad[a] && !rad2[a]);
        o.expect(missing.is_none(), || format!("V = {v}: {} in √V but not in rad(√V)", p.show(missing.unwrap())));
        if let Some(theta) = mathieu_for_some(p.alg(), v, cfg)? {
            let extra = (0..rad.len()).find(|&a| rad2[a] && !rad[a]);
            o.expect(extra.is_none(), || {
                format!("{theta}-Mathieu V = {v}: {} in rad(√V) but not in √V", p.show(extra.unwrap()))
            });
        }
    }
    Ok(o)
}

/// `√M = √(I_M)` for two-sided Mathieu `M`, with `I_M` the largest ideal
/// inside `M`.
fn mathieu_radical_is_ideal_radical(p: &Prepared<'_>, cfg: &ScanConfig) -> Result<Outcome> {
    let mut o = Outcome::new();
    let theta = ThetaVariant::TwoSided;
    for (v, member) in p.spaces.iter().zip(&p.members) {
        if !decide_mathieu(p.alg(), v, theta, cfg)?.is_mathieu {
            continue;
        }
        let ideal = max_theta_ideal(p.alg(), v, theta)?;
        let ideal_member = p.table.membership(&FpSpace::new(&ideal)?);
        let (rm, ri) = (p.radical(member), p.radical(&ideal_member));
        let diff = (0..rm.len()).find(|&a| rm[a] != ri[a]);
        o.expect(diff.is_none(), || {
            let a = diff.unwrap();
            format!("M = {v}, I_M = {ideal}: a = {} in √M {} in √I_M {}", p.show(a), rm[a], ri[a])
        });
    }
    Ok(o)
}

/// `V` has no idempotent other than 0 and 1 exactly when every element of
/// `√V` is nilpotent or invertible.
fn idempotent_dichotomy(p: &Prepared<'_>) -> Result<Outcome> {
    let mut o = Outcome::new();
    let unit = crate::kernel::index_of(p.k.p(), p.k.unit());
    for (v, member) in p.spaces.iter().zip(&p.members) {
        let idem = (1..p.table.len()).find(|&a| member[a] && a != unit && p.table.power(a, 2) == a);
        let rad = p.radical(member);
        let mixed = (0..rad.len()).find(|&a| {
            let (k, hd) = p.table.split(a);
            rad[a] && hd != 0 && k != 0
        });
        o.expect(idem.is_some() == mixed.is_some(), || match (idem, mixed) {
            (Some(e), None) => format!("V = {v} contains idempotent {} but √V has no mixed element", p.show(e)),
            (None, Some(a)) => format!("V = {v} has no nontrivial idempotent but {} ∈ √V is mixed", p.show(a)),
            _ => unreachable!(),
        });
    }
    Ok(o)
}

/// Certificates `(a^N)_θ ⊆ M` with `N` minimal, on a few Mathieu subspaces.
fn certificates(p: &Prepared<'_>, cfg: &ScanConfig) -> Result<Outcome> {
    const SPACES: usize = 12;
    const ELEMENTS: usize = 4;
    let mut o = Outcome::new();
    let alg = p.alg();
    let mut used = 0;
    for (v, member) in p.spaces.iter().zip(&p.members) {
        if used == SPACES || v.is_zero() || v.is_whole() {
            continue;
        }
        let rad = p.radical(member);
        for theta in ThetaVariant::ALL {
            if !decide_mathieu(alg, v, theta, cfg)?.is_mathieu {
                continue;
            }
            used += 1;
            for a in (1..rad.len()).filter(|&a| rad[a]).take(ELEMENTS) {
                let elem = p.k.to_element(&p.k.element_at(a));
                let cert = certify_radical_membership(alg, v, theta, &elem, cfg)?;
                let n = cert.exponent;
                let ideal = theta_ideal(alg, &alg.pow(&elem, n), theta);
                let minimal = n == 0 || !theta_ideal(alg, &alg.pow(&elem, n - 1), theta).is_subspace_of(v);
                o.expect(cert.ideal == ideal && ideal.is_subspace_of(v) && minimal, || {
                    format!("M = {v}, θ = {theta}, a = {elem}: certificate N = {n} invalid or not minimal")
                });
            }
        }
    }
    Ok(o)
}
