//! Element-level structure: minimal polynomials, the nilpotent / invertible /
//! (quasi-)idempotent predicates, the idempotent `p(a)` and power cycles.

use std::collections::HashMap;

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{self, Vector};
use crate::poly::Poly;

/// Monic minimal polynomial `f = t^k · h` with `h(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPolyData {
    pub minpoly: Poly,
    pub k: usize,
    pub h: Poly,
}

impl MinPolyData {
    pub fn degree(&self) -> usize {
        self.minpoly.degree().expect("minimal polynomial is nonzero")
    }

    pub fn h_degree(&self) -> usize {
        self.h.degree().expect("h is nonzero")
    }

    pub fn is_nilpotent(&self) -> bool {
        self.k > 0 && self.h_degree() == 0
    }

    pub fn is_invertible(&self) -> bool {
        self.k == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementClass {
    pub nilpotent: bool,
    pub invertible: bool,
    pub idempotent: bool,
    /// `Some(r)` when `a² = r·a` with `r != 0`; the zero element reports
    /// `Some(1)`.
    pub quasi_idempotent: Option<Scalar>,
    pub algebraic_degree: usize,
}

impl ElementClass {
    pub fn is_quasi_idempotent(&self) -> bool {
        self.quasi_idempotent.is_some()
    }
}

/// Eventual periodicity of the power sequence `a, a², a³, ...`:
/// `a^m = a^(m+period)` for every `m >= preperiod`, both minimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CycleInfo {
    pub preperiod: u64,
    pub period: u64,
}

impl Algebra {
    /// Least-degree monic annihilator, read off the first linear dependence
    /// in the Krylov sequence `1, a, a², ...`.
    pub fn minimal_polynomial(&self, a: &Element) -> MinPolyData {
        let field = self.field();
        // Reduced power vectors with their pivot and the combination of
        // powers they represent.
        let mut rows: Vec<(Vector, usize, Vector)> = Vec::new();
        let mut power = self.one();
        for m in 0..=self.dim() {
            let mut v = power.coords().to_vec();
            let mut comb = linalg::unit_vector(field, m + 1, m);
            for (row, piv, rc) in &rows {
                if v[*piv].is_zero() {
                    continue;
                }
                let c = v[*piv].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x = &*x - &(&c * y);
                }
                for (x, y) in comb.iter_mut().zip(rc) {
                    *x = &*x - &(&c * y);
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => {
                    let minpoly = Poly::new(field, comb).expect("same field");
                    let (k, h) = minpoly.split_at_zero().expect("monic is nonzero");
                    return MinPolyData { minpoly, k, h };
                }
                Some(piv) => {
                    let inv = v[piv].inv().expect("pivot is nonzero");
                    let v = linalg::scale(&inv, &v);
                    let comb = linalg::scale(&inv, &comb);
                    rows.push((v, piv, comb));
                }
            }
            power = self.mul(&power, a);
        }
        unreachable!("d + 1 powers in a d-dimensional space are dependent")
    }

    /// `Some(r)` with `r != 0` and `a² = r·a`; the zero element counts as
    /// quasi-idempotent with `r = 1`.
    pub fn quasi_idempotent_ratio(&self, a: &Element) -> Option<Scalar> {
        let field = self.field();
        let Some(i) = a.coords().iter().position(|x| !x.is_zero()) else {
            return Some(field.one());
        };
        let sq = self.mul(a, a);
        let r = &sq.coords()[i] * &a.coords()[i].inv().expect("nonzero");
        (!r.is_zero() && sq == self.scale(&r, a)).then_some(r)
    }

    pub fn is_idempotent(&self, a: &Element) -> bool {
        &self.mul(a, a) == a
    }

    pub fn classify_element(&self, a: &Element) -> ElementClass {
        let mp = self.minimal_polynomial(a);
        ElementClass {
            nilpotent: mp.is_nilpotent(),
            invertible: mp.is_invertible(),
            idempotent: self.is_idempotent(a),
            quasi_idempotent: self.quasi_idempotent_ratio(a),
            algebraic_degree: mp.degree(),
        }
    }

    /// The polynomial `p(t) = t^k · u(t)` from the Bézout identity
    /// `1 = t^k u(t) + h(t) v(t)`, for `a` neither nilpotent nor invertible.
    pub fn idempotent_polynomial(&self, a: &Element) -> Result<(MinPolyData, Poly)> {
        let mp = self.minimal_polynomial(a);
        if mp.is_nilpotent() {
            return Err(Error::NilpotentInput);
        }
        if mp.is_invertible() {
            return Err(Error::InvertibleInput);
        }
        let tk = Poly::monomial(self.field().one(), mp.k);
        let (d, u, _v) = Poly::ext_gcd(&tk, &mp.h)?;
        if !d.coeff(0).is_one() || d.degree() != Some(0) {
            return Err(Error::Inconsistent(format!("gcd(t^{}, {}) = {d}", mp.k, mp.h)));
        }
        let p = tk.mul(&u);
        Ok((mp, p))
    }

    /// The nontrivial idempotent `p(a)`: it satisfies `p(a)² = p(a)`,
    /// `a^k = a^k p(a)` and lies in the span of the positive powers of `a`.
    pub fn build_p_of_a(&self, a: &Element) -> Result<Element> {
        let (_, p) = self.idempotent_polynomial(a)?;
        Ok(self.eval_poly(&p, a))
    }

    /// Minimal `(μ, λ)` with `a^μ = a^(μ+λ)`, by hashing the power sequence.
    pub fn power_cycle(&self, a: &Element) -> Result<CycleInfo> {
        if !self.field().is_finite() {
            return Err(Error::InfiniteField);
        }
        let mut seen: HashMap<Element, u64> = HashMap::new();
        let mut power = a.clone();
        let mut m = 1u64;
        loop {
            if let Some(&first) = seen.get(&power) {
                return Ok(CycleInfo { preperiod: first, period: m - first });
            }
            let next = self.mul(&power, a);
            seen.insert(power, m);
            power = next;
            m += 1;
        }
    }
}
