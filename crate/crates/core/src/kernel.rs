//! Residue-vector arithmetic for algebras over `F_p`, used by the
//! exhaustive scans. Vectors are `Vec<u64>` with entries in `[0, p)`.
//!
//! Index `i < q^r` of a subspace with RREF rows `R_0..R_{r-1}` is the vector
//! `Σ c_j R_j` where `c_0 c_1 ... c_{r-1}` are the base-`q` digits of `i`,
//! most significant first. Because of the echelon shape this index order is
//! the lexicographic order of the resulting coordinate vectors.

use std::collections::HashMap;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::subspace::{Subspace, ThetaVariant};

pub(crate) type RVec = Vec<u64>;

pub(crate) struct FpAlgebra {
    p: u64,
    d: usize,
    field: FieldSpec,
    terms: Vec<Vec<(usize, u64)>>,
    unit: RVec,
    /// Products fit in a `u64` accumulator without intermediate reduction.
    lazy: bool,
}

impl FpAlgebra {
    pub fn new(alg: &Algebra) -> Result<Self> {
        let p = alg.field().order().ok_or(Error::InfiniteField)?;
        let d = alg.dim();
        let terms = (0..d * d)
            .map(|ij| {
                alg.basis_terms(ij / d, ij % d).iter().map(|(k, c)| (*k, c.residue().expect("finite field"))).collect()
            })
            .collect();
        let unit = to_rvec(alg.unit());
        Ok(FpAlgebra { p, d, field: alg.field(), terms, unit, lazy: p < (1 << 16) && d <= 1024 })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn unit(&self) -> &RVec {
        &self.unit
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> RVec {
        let (p, d) = (self.p, self.d);
        let mut acc = vec![0u64; d];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = x * y % p;
                for &(k, c) in &self.terms[i * d + j] {
                    if self.lazy {
                        acc[k] += xy * c;
                    } else {
                        acc[k] = (acc[k] + xy * c % p) % p;
                    }
                }
            }
        }
        if self.lazy {
            for x in &mut acc {
                *x %= p;
            }
        }
        acc
    }

    /// `e_i · a`
    pub fn left_basis_mul(&self, i: usize, a: &[u64]) -> RVec {
        let (p, d) = (self.p, self.d);
        let mut acc = vec![0u64; d];
        for (j, &y) in a.iter().enumerate() {
            if y == 0 {
                continue;
            }
            for &(k, c) in &self.terms[i * d + j] {
                acc[k] = (acc[k] + y * c) % p;
            }
        }
        acc
    }

    /// `a · e_j`
    pub fn right_basis_mul(&self, a: &[u64], j: usize) -> RVec {
        let (p, d) = (self.p, self.d);
        let mut acc = vec![0u64; d];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(k, c) in &self.terms[i * d + j] {
                acc[k] = (acc[k] + x * c) % p;
            }
        }
        acc
    }

    /// The vector of the algebra with index `idx` (coordinates as base-`p`
    /// digits, first coordinate most significant).
    pub fn element_at(&self, mut idx: usize) -> RVec {
        let mut v = vec![0; self.d];
        for slot in v.iter_mut().rev() {
            *slot = idx as u64 % self.p;
            idx /= self.p as usize;
        }
        v
    }

    pub fn element_count(&self) -> u128 {
        (self.p as u128).saturating_pow(self.d as u32)
    }

    pub fn to_element(&self, v: &[u64]) -> Element {
        Element::new(v.iter().map(|&x| self.field.from_u64(x)).collect())
    }

    /// `a, a², ..., a^(μ+λ-1)` together with `(μ, λ)`: the shortest prefix of
    /// the power sequence that contains its full eventual cycle.
    pub fn power_orbit(&self, a: &[u64]) -> (Vec<RVec>, u64, u64) {
        let mut seen: HashMap<RVec, u64> = HashMap::new();
        let mut powers = Vec::new();
        let mut cur = a.to_vec();
        let mut m = 1u64;
        loop {
            if let Some(&first) = seen.get(&cur) {
                return (powers, first, m - first);
            }
            let next = self.mul(&cur, a);
            seen.insert(cur.clone(), m);
            powers.push(cur);
            cur = next;
            m += 1;
        }
    }

    /// `(k, deg h)` of the minimal polynomial `t^k h(t)`, by Krylov
    /// elimination on residues.
    pub fn minpoly_split(&self, a: &[u64]) -> (usize, usize) {
        let p = self.p;
        let mut rows: Vec<(RVec, usize, RVec)> = Vec::new();
        let mut power = self.unit.clone();
        for m in 0..=self.d {
            let mut v = power.clone();
            let mut comb = vec![0u64; m + 1];
            comb[m] = 1;
            for (row, piv, rc) in &rows {
                let c = v[*piv];
                if c == 0 {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(row) {
                    *x = (*x + (p - c) * y) % p;
                }
                for (x, y) in comb.iter_mut().zip(rc) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
            match v.iter().position(|&x| x != 0) {
                None => {
                    let k = comb.iter().position(|&c| c != 0).expect("monic");
                    return (k, m - k);
                }
                Some(piv) => {
                    let inv = crate::field::pow_mod(v[piv], p - 2, p);
                    v.iter_mut().for_each(|x| *x = *x * inv % p);
                    comb.iter_mut().for_each(|x| *x = *x * inv % p);
                    rows.push((v, piv, comb));
                }
            }
            power = self.mul(&power, a);
        }
        unreachable!("Krylov sequence is dependent by step d + 1")
    }
}

pub(crate) fn to_rvec(v: &[crate::field::Scalar]) -> RVec {
    v.iter().map(|s| s.residue().expect("finite field")).collect()
}

/// A subspace of `F_p^d` prepared for fast membership tests and for
/// enumerating its vectors by index.
pub(crate) struct FpSpace {
    p: u64,
    d: usize,
    rows: Vec<RVec>,
    pivots: Vec<usize>,
    /// For every non-pivot column `j`: the nonzero `(row, R_row[j])`.
    checks: Vec<(usize, Vec<(usize, u64)>)>,
}

impl FpSpace {
    pub fn new(v: &Subspace) -> Result<Self> {
        let p = v.field().order().ok_or(Error::InfiniteField)?;
        let rows: Vec<RVec> = v.basis().iter().map(|r| to_rvec(r)).collect();
        let pivots = v.pivots().to_vec();
        let d = v.ambient_dim();
        let checks = (0..d)
            .filter(|j| !pivots.contains(j))
            .map(|j| {
                let deps = rows.iter().enumerate().filter(|(_, r)| r[j] != 0).map(|(i, r)| (i, r[j])).collect();
                (j, deps)
            })
            .collect();
        Ok(FpSpace { p, d, rows, pivots, checks })
    }

    pub fn vector_count(&self) -> u128 {
        (self.p as u128).saturating_pow(self.rows.len() as u32)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let p = self.p;
        self.checks.iter().all(|(j, deps)| {
            let s = deps.iter().fold(0u64, |acc, &(i, c)| (acc + v[self.pivots[i]] * c) % p);
            s == v[*j]
        })
    }

    pub fn vector_at(&self, mut idx: usize) -> RVec {
        let p = self.p;
        let mut out = vec![0u64; self.d];
        for row in self.rows.iter().rev() {
            let c = idx as u64 % p;
            idx /= p as usize;
            if c != 0 {
                for (o, r) in out.iter_mut().zip(row) {
                    *o = (*o + c * r) % p;
                }
            }
        }
        out
    }
}

/// Membership test for residue vectors.
pub(crate) trait Contains: Sync {
    fn contains(&self, v: &[u64]) -> bool;
}

impl Contains for FpSpace {
    fn contains(&self, v: &[u64]) -> bool {
        FpSpace::contains(self, v)
    }
}

/// `{v : c · v = 0}` for a nonzero `c`.
pub(crate) struct Hyperplane {
    pub p: u64,
    pub normal: RVec,
}

impl Contains for Hyperplane {
    fn contains(&self, v: &[u64]) -> bool {
        self.normal.iter().zip(v).fold(0u64, |acc, (c, x)| (acc + c * x) % self.p) == 0
    }
}

/// Index of the first basis factor(s) that carry `x` out of `v` under the
/// θ-action, with the offending product.
pub(crate) type Escape = (Option<usize>, Option<usize>, RVec);

pub(crate) fn theta_escape<V: Contains>(alg: &FpAlgebra, v: &V, x: &[u64], theta: ThetaVariant) -> Option<Escape> {
    let d = alg.dim();
    let left = || {
        (0..d).find_map(|i| {
            let p = alg.left_basis_mul(i, x);
            (!v.contains(&p)).then_some((Some(i), None, p))
        })
    };
    let right = || {
        (0..d).find_map(|j| {
            let p = alg.right_basis_mul(x, j);
            (!v.contains(&p)).then_some((None, Some(j), p))
        })
    };
    match theta {
        ThetaVariant::Left => left(),
        ThetaVariant::Right => right(),
        ThetaVariant::PreTwoSided => left().or_else(right),
        ThetaVariant::TwoSided => (0..d).find_map(|i| {
            let bx = alg.left_basis_mul(i, x);
            (0..d).find_map(|j| {
                let p = alg.right_basis_mul(&bx, j);
                (!v.contains(&p)).then_some((Some(i), Some(j), p))
            })
        }),
    }
}

/// Index of a residue vector in the order of [`FpAlgebra::element_at`].
pub(crate) fn index_of(p: u64, v: &[u64]) -> usize {
    v.iter().fold(0usize, |acc, &x| acc * p as usize + x as usize)
}

/// Normalized representatives (first nonzero coordinate 1) of the
/// projective points of `F_p^d`, indexed in lexicographic order.
pub(crate) struct ProjectivePoints {
    p: u64,
    d: usize,
    /// `offsets[j]` is the number of points whose leading coordinate is
    /// after position `j`.
    offsets: Vec<usize>,
}

impl ProjectivePoints {
    pub fn new(p: u64, d: usize) -> Self {
        let mut offsets = vec![0usize; d];
        let mut acc = 0usize;
        for j in (0..d).rev() {
            offsets[j] = acc;
            acc += (p as usize).pow((d - 1 - j) as u32);
        }
        ProjectivePoints { p, d, offsets }
    }

    pub fn count(p: u64, d: usize) -> u128 {
        let p = p as u128;
        (0..d as u32).map(|j| p.saturating_pow(j)).fold(0u128, |a, b| a.saturating_add(b))
    }

    pub fn len(&self) -> usize {
        self.offsets.first().map_or(0, |&o| o + (self.p as usize).pow(self.d as u32 - 1))
    }

    pub fn point_at(&self, idx: usize) -> RVec {
        let lead = (0..self.d)
            .rev()
            .find(|&j| idx < self.offsets[j] + (self.p as usize).pow((self.d - 1 - j) as u32))
            .expect("index in range");
        let mut rest = idx - self.offsets[lead];
        let mut v = vec![0u64; self.d];
        v[lead] = 1;
        for slot in v[lead + 1..].iter_mut().rev() {
            *slot = rest as u64 % self.p;
            rest /= self.p as usize;
        }
        v
    }
}

/// Power sequences of every element of a finite algebra, stored as element
/// indices.
pub(crate) struct PowerTable {
    p: u64,
    /// `a^1, ..., a^(μ+λ-1)` for every element `a`.
    orbits: Vec<Vec<u32>>,
    cycles: Vec<(u32, u32)>,
    /// `(k, deg h)` of the minimal polynomial `t^k h`.
    splits: Vec<(u32, u32)>,
}

/// Orbit indices, `(μ, λ)` and `(k, deg h)` of one element.
type PowerRow = (Vec<u32>, (u32, u32), (u32, u32));

impl PowerTable {
    pub fn new(alg: &FpAlgebra, cfg: &crate::scan::ScanConfig) -> Result<Self> {
        let n = cfg.scan_len("power table", alg.element_count())?;
        let p = alg.p();
        let rows: Vec<PowerRow> = cfg.map_collect(n, |i| {
            let a = alg.element_at(i);
            let (powers, mu, lambda) = alg.power_orbit(&a);
            let orbit = powers.iter().map(|v| index_of(p, v) as u32).collect();
            let (k, hd) = alg.minpoly_split(&a);
            (orbit, (mu as u32, lambda as u32), (k as u32, hd as u32))
        });
        let mut orbits = Vec::with_capacity(n);
        let mut cycles = Vec::with_capacity(n);
        let mut splits = Vec::with_capacity(n);
        for (o, c, s) in rows {
            orbits.push(o);
            cycles.push(c);
            splits.push(s);
        }
        Ok(PowerTable { p, orbits, cycles, splits })
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn cycle(&self, a: usize) -> (u32, u32) {
        self.cycles[a]
    }

    pub fn split(&self, a: usize) -> (u32, u32) {
        self.splits[a]
    }

    /// Index of `a^m`, `m >= 1`.
    pub fn power(&self, a: usize, m: u64) -> usize {
        let orbit = &self.orbits[a];
        let (mu, lambda) = (self.cycles[a].0 as u64, self.cycles[a].1 as u64);
        let m = if m <= orbit.len() as u64 { m } else { mu + (m - mu) % lambda };
        orbit[m as usize - 1] as usize
    }

    /// Marks the elements of a subspace.
    pub fn membership(&self, v: &FpSpace) -> Vec<bool> {
        let mut member = vec![false; self.len()];
        for i in 0..v.vector_count() as usize {
            member[index_of(self.p, &v.vector_at(i))] = true;
        }
        member
    }

    /// Radical membership from the minimal-polynomial window.
    pub fn window_member(&self, a: usize, member: &[bool]) -> bool {
        let (k, hd) = self.splits[a];
        if hd == 0 {
            return true;
        }
        let start = k.max(1) as u64;
        (start..start + hd as u64).all(|m| member[self.power(a, m)])
    }

    /// Radical membership from the eventual cycle of the power sequence.
    pub fn cycle_member(&self, a: usize, member: &[bool]) -> bool {
        let (mu, lambda) = self.cycles[a];
        (mu as u64..(mu + lambda) as u64).all(|m| member[self.power(a, m)])
    }
}
