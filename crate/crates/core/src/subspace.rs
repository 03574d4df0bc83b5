//! Linear subspaces of an algebra in canonical reduced row-echelon form,
//! the ideals generated by an element and the largest ideal inside a
//! subspace.
//!
//! Two subspaces are equal exactly when their RREF bases are identical, so
//! `Subspace` can be hashed and compared directly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraMap, Element};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{self, Echelon, Vector};
use crate::scan::ScanConfig;

/// Which side(s) the Mathieu condition and the generated ideal act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaVariant {
    Left,
    Right,
    PreTwoSided,
    TwoSided,
}

impl ThetaVariant {
    pub const ALL: [ThetaVariant; 4] =
        [ThetaVariant::Left, ThetaVariant::Right, ThetaVariant::PreTwoSided, ThetaVariant::TwoSided];

    pub fn as_str(self) -> &'static str {
        match self {
            ThetaVariant::Left => "left",
            ThetaVariant::Right => "right",
            ThetaVariant::PreTwoSided => "pre_two_sided",
            ThetaVariant::TwoSided => "two_sided",
        }
    }

    /// The same variant seen from the opposite algebra.
    pub fn mirrored(self) -> Self {
        match self {
            ThetaVariant::Left => ThetaVariant::Right,
            ThetaVariant::Right => ThetaVariant::Left,
            other => other,
        }
    }
}

impl fmt::Display for ThetaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ThetaVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "left" => Ok(ThetaVariant::Left),
            "right" => Ok(ThetaVariant::Right),
            "pre_two_sided" | "pre" => Ok(ThetaVariant::PreTwoSided),
            "two_sided" | "two" => Ok(ThetaVariant::TwoSided),
            _ => Err(Error::Parse(format!("unknown theta variant {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    ech: Echelon,
}

impl Subspace {
    pub(crate) fn from_echelon(field: FieldSpec, ambient_dim: usize, ech: Echelon) -> Self {
        Subspace { field, ambient_dim, ech }
    }

    /// Span of raw coordinate vectors in `field^ambient_dim`.
    pub fn from_vectors(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        for v in &vectors {
            if v.len() != ambient_dim {
                return Err(Error::AlgebraMismatch(format!(
                    "vector has {} coordinates, expected {ambient_dim}",
                    v.len()
                )));
            }
            if let Some(bad) = v.iter().find(|c| c.field() != field) {
                return Err(Error::FieldMismatch(field, bad.field()));
            }
        }
        Ok(Subspace { field, ambient_dim, ech: linalg::rref(vectors, ambient_dim) })
    }

    pub fn span(alg: &Algebra, elements: &[Element]) -> Result<Self> {
        let vectors = elements.iter().map(|e| e.coords().to_vec()).collect();
        Self::from_vectors(alg.field(), alg.dim(), vectors)
    }

    pub fn zero(alg: &Algebra) -> Self {
        Subspace::from_echelon(alg.field(), alg.dim(), linalg::rref(Vec::new(), alg.dim()))
    }

    pub fn whole(alg: &Algebra) -> Self {
        let rows = (0..alg.dim()).map(|i| alg.basis(i).into_coords()).collect();
        Subspace::from_echelon(alg.field(), alg.dim(), linalg::rref(rows, alg.dim()))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_whole(&self) -> bool {
        self.codim() == 0
    }

    /// RREF rows.
    pub fn basis(&self) -> &[Vector] {
        &self.ech.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.ech.pivots
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        self.ech.rows.iter().cloned().map(Element::new).collect()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.ech
    }

    pub fn check_algebra(&self, alg: &Algebra) -> Result<()> {
        if alg.field() != self.field {
            return Err(Error::FieldMismatch(alg.field(), self.field));
        }
        if alg.dim() != self.ambient_dim {
            return Err(Error::AlgebraMismatch(format!(
                "subspace lives in dimension {}, {} has dimension {}",
                self.ambient_dim,
                alg.label(),
                alg.dim()
            )));
        }
        Ok(())
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AlgebraMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.ech.contains(v)
    }

    pub fn member(&self, a: &Element) -> bool {
        a.len() == self.ambient_dim && self.ech.contains(a.coords())
    }

    /// `self ⊆ other`
    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.field == other.field
            && self.ambient_dim == other.ambient_dim
            && self.ech.rows.iter().all(|r| other.ech.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        let rows = self.ech.rows.iter().chain(&other.ech.rows).cloned().collect();
        Ok(Subspace::from_echelon(self.field, self.ambient_dim, linalg::rref(rows, self.ambient_dim)))
    }

    /// Rows `c` with `c · v = 0` exactly for the vectors `v` of this
    /// subspace; there are `codim` of them.
    pub fn check_rows(&self) -> Vec<Vector> {
        linalg::nullspace(self.ech.rows.clone(), self.ambient_dim, self.field)
    }

    /// Intersection as the nullspace of both constraint systems stacked.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        let mut constraints = self.check_rows();
        constraints.extend(other.check_rows());
        let basis = linalg::nullspace(constraints, self.ambient_dim, self.field);
        Subspace::from_vectors(self.field, self.ambient_dim, basis)
    }

    /// Lexicographic comparison of the flattened RREF matrices.
    pub fn canonical_cmp(&self, other: &Subspace) -> std::cmp::Ordering {
        let a = self.ech.rows.iter().flatten();
        let b = other.ech.rows.iter().flatten();
        a.zip(b).map(|(x, y)| x.canonical_cmp(y)).find(|o| o.is_ne()).unwrap_or_else(|| self.dim().cmp(&other.dim()))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, r) in self.ech.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", Element::new(r.clone()))?;
        }
        write!(f, "}}")
    }
}

/// `(a)_θ`: the left, right or two-sided ideal generated by `a`, or
/// `aA + Aa` for the pre-two-sided variant.
pub fn theta_ideal(alg: &Algebra, a: &Element, theta: ThetaVariant) -> Subspace {
    let d = alg.dim();
    let basis: Vec<Element> = (0..d).map(|i| alg.basis(i)).collect();
    let mut gens: Vec<Vector> = Vec::new();
    let left = |gens: &mut Vec<Vector>| gens.extend(basis.iter().map(|b| alg.mul(b, a).into_coords()));
    let right = |gens: &mut Vec<Vector>| gens.extend(basis.iter().map(|b| alg.mul(a, b).into_coords()));
    match theta {
        ThetaVariant::Left => left(&mut gens),
        ThetaVariant::Right => right(&mut gens),
        ThetaVariant::PreTwoSided => {
            left(&mut gens);
            right(&mut gens);
        }
        ThetaVariant::TwoSided => {
            gens.push(a.coords().to_vec());
            for b in &basis {
                let ba = alg.mul(b, a);
                gens.extend(basis.iter().map(|c| alg.mul(&ba, c).into_coords()));
            }
        }
    }
    Subspace::from_echelon(alg.field(), d, linalg::rref(gens, d))
}

/// Whether `(a)_θ ⊆ v`, and if not the first basis index (or pair) whose
/// product leaves `v`, together with that product.
pub(crate) fn theta_containment(
    alg: &Algebra,
    v: &Subspace,
    a: &Element,
    theta: ThetaVariant,
) -> Option<(Option<usize>, Option<usize>, Element)> {
    let d = alg.dim();
    let left = || {
        (0..d).find_map(|i| {
            let p = alg.mul(&alg.basis(i), a);
            (!v.member(&p)).then_some((Some(i), None, p))
        })
    };
    let right = || {
        (0..d).find_map(|j| {
            let p = alg.mul(a, &alg.basis(j));
            (!v.member(&p)).then_some((None, Some(j), p))
        })
    };
    match theta {
        ThetaVariant::Left => left(),
        ThetaVariant::Right => right(),
        ThetaVariant::PreTwoSided => left().or_else(right),
        ThetaVariant::TwoSided => (0..d).find_map(|i| {
            let ba = alg.mul(&alg.basis(i), a);
            (0..d).find_map(|j| {
                let p = alg.mul(&ba, &alg.basis(j));
                (!v.member(&p)).then_some((Some(i), Some(j), p))
            })
        }),
    }
}

/// The largest θ-ideal contained in `v`: the vectors `x` whose products
/// `e_i x` (left), `x e_j` (right) or `e_i x e_j` (two-sided) all stay in
/// `v`. For the pre-two-sided variant this is the sum of the left and right
/// answers, which need not be an ideal.
pub fn max_theta_ideal(alg: &Algebra, v: &Subspace, theta: ThetaVariant) -> Result<Subspace> {
    v.check_algebra(alg)?;
    if theta == ThetaVariant::PreTwoSided {
        let l = max_theta_ideal(alg, v, ThetaVariant::Left)?;
        let r = max_theta_ideal(alg, v, ThetaVariant::Right)?;
        return l.sum(&r);
    }
    let d = alg.dim();
    let field = alg.field();
    let checks = v.check_rows();
    if checks.is_empty() {
        return Ok(v.clone());
    }
    let compose = |m: &[Vector]| -> Vec<Vector> {
        // rows of C·M
        checks
            .iter()
            .map(|c| (0..d).map(|j| (0..d).fold(field.zero(), |acc, k| &acc + &(&c[k] * &m[k][j]))).collect())
            .collect()
    };
    let mut constraints = Vec::new();
    for i in 0..d {
        let ei = alg.basis(i);
        match theta {
            ThetaVariant::Left => constraints.extend(compose(&alg.left_mul_matrix(&ei))),
            ThetaVariant::Right => constraints.extend(compose(&alg.right_mul_matrix(&ei))),
            ThetaVariant::TwoSided => {
                let li = alg.left_mul_matrix(&ei);
                for j in 0..d {
                    let rj = alg.right_mul_matrix(&alg.basis(j));
                    // x ↦ e_i (x e_j) = L_i R_j x
                    let m: Vec<Vector> = (0..d)
                        .map(|r| {
                            (0..d)
                                .map(|c| (0..d).fold(field.zero(), |acc, k| &acc + &(&li[r][k] * &rj[k][c])))
                                .collect()
                        })
                        .collect();
                    constraints.extend(compose(&m));
                }
            }
            ThetaVariant::PreTwoSided => unreachable!(),
        }
    }
    let basis = linalg::nullspace(constraints, d, field);
    Subspace::from_vectors(field, d, basis)
}

/// `φ^{-1}(v)` for a unital algebra homomorphism `φ` into `v`'s ambient
/// algebra.
pub fn preimage(phi: &AlgebraMap, v: &Subspace) -> Result<Subspace> {
    v.check_algebra(phi.codomain())?;
    let domain = phi.domain();
    let field = domain.field();
    let constraints: Vec<Vector> = v
        .check_rows()
        .iter()
        .map(|c| {
            (0..domain.dim())
                .map(|j| (0..c.len()).fold(field.zero(), |acc, k| &acc + &(&c[k] * &phi.matrix()[k][j])))
                .collect()
        })
        .collect();
    let basis = linalg::nullspace(constraints, domain.dim(), field);
    Subspace::from_vectors(field, domain.dim(), basis)
}

/// Gaussian binomial `[d choose r]_q`, saturating at `u128::MAX`.
pub fn gaussian_binomial(d: usize, r: usize, q: u64) -> u128 {
    if r > d {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        let a = q.checked_pow((d - i) as u32).map(|x| x - 1);
        let b = q.checked_pow((i + 1) as u32).map(|x| x - 1);
        match (a.and_then(|a| num.checked_mul(a)), b.and_then(|b| den.checked_mul(b))) {
            (Some(n), Some(m)) => {
                num = n;
                den = m;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
            _ => return u128::MAX,
        }
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Every `r`-dimensional subspace of a finite-field algebra, each exactly
/// once.
///
/// Order: pivot sets from the rightmost to the leftmost in reverse
/// lexicographic order of the pivot tuple, and within one pivot set the free
/// entries in row-major lexicographic order. For lines this is exactly
/// lexicographic order of the normalized spanning vector.
pub fn enumerate_subspaces(alg: &Algebra, r: usize, cfg: &ScanConfig) -> Result<impl Iterator<Item = Subspace>> {
    let q = alg.field().order().ok_or(Error::InfiniteField)?;
    let d = alg.dim();
    if r > d {
        return Err(Error::BadShape(format!("no {r}-dimensional subspaces in dimension {d}")));
    }
    cfg.guard(
        &format!("subspaces of dimension {r} in {}", alg.label()),
        gaussian_binomial(d, r, q),
        cfg.max_subspaces,
    )?;
    let field = alg.field();
    let mut pivot_sets = combinations(d, r);
    pivot_sets.reverse();
    Ok(pivot_sets.into_iter().flat_map(move |pivots| {
        // free slots: (row, col) with col > pivot[row] and col not a pivot
        let free: Vec<(usize, usize)> = (0..r)
            .flat_map(|row| {
                let pivots = pivots.clone();
                (pivots[row] + 1..d).filter(move |c| !pivots.contains(c)).map(move |c| (row, c))
            })
            .collect();
        let count = q.pow(free.len() as u32);
        let pivots = pivots.clone();
        (0..count).map(move |mut idx| {
            let mut rows = vec![linalg::zero_vector(field, d); r];
            for (row, &p) in pivots.iter().enumerate() {
                rows[row][p] = field.one();
            }
            for &(row, col) in free.iter().rev() {
                rows[row][col] = field.from_u64(idx % q);
                idx /= q;
            }
            Subspace::from_echelon(field, d, Echelon { rows, pivots: pivots.clone() })
        })
    }))
}

/// `r`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn trace_zero(alg: &Algebra) -> Subspace {
        let b = |c: &[i64]| alg.from_i64s(c).unwrap();
        Subspace::span(alg, &[b(&[1, 0, 0, -1]), b(&[0, 1, 0, 0]), b(&[0, 0, 1, 0])]).unwrap()
    }

    #[test]
    fn span_and_intersection() {
        let m2 = Algebra::matrix(2, f(5)).unwrap();
        let e11 = m2.basis(0);
        assert_eq!(Subspace::span(&m2, &[e11.clone(), e11.clone()]).unwrap().dim(), 1);
        let diag = Subspace::span(&m2, &[e11, m2.basis(3)]).unwrap();
        let meet = trace_zero(&m2).intersect(&diag).unwrap();
        let expected = Subspace::span(&m2, &[m2.from_i64s(&[1, 0, 0, -1]).unwrap()]).unwrap();
        assert_eq!(meet, expected);
        assert!(Subspace::zero(&m2).member(&m2.zero()));
        assert_eq!(trace_zero(&m2).codim(), 1);
    }

    #[test]
    fn theta_ideal_examples() {
        let m2 = Algebra::matrix(2, f(2)).unwrap();
        let left = theta_ideal(&m2, &m2.basis(0), ThetaVariant::Left);
        let col = Subspace::span(&m2, &[m2.basis(0), m2.basis(2)]).unwrap();
        assert_eq!(left, col);
        for theta in ThetaVariant::ALL {
            assert!(theta_ideal(&m2, &m2.zero(), theta).is_zero());
            assert!(theta_ideal(&m2, &m2.one(), theta).is_whole());
        }
    }

    #[test]
    fn max_ideal_examples() {
        let m2 = Algebra::matrix(2, f(5)).unwrap();
        let h = trace_zero(&m2);
        assert!(max_theta_ideal(&m2, &h, ThetaVariant::TwoSided).unwrap().is_zero());
        let whole = Subspace::whole(&m2);
        assert_eq!(max_theta_ideal(&m2, &whole, ThetaVariant::Left).unwrap(), whole);

        let a = Algebra::poly_quotient(&Poly::from_i64s(f(2), &[0, 0, 0, 1])).unwrap();
        let t2 = Subspace::span(&a, &[a.basis(2)]).unwrap();
        for theta in ThetaVariant::ALL {
            assert_eq!(max_theta_ideal(&a, &t2, theta).unwrap(), t2);
        }
    }

    #[test]
    fn left_max_ideal_of_a_column() {
        // span{E_11, E_21} is a left ideal of M_2
        let m2 = Algebra::matrix(2, f(3)).unwrap();
        let col = Subspace::span(&m2, &[m2.basis(0), m2.basis(2)]).unwrap();
        assert_eq!(max_theta_ideal(&m2, &col, ThetaVariant::Left).unwrap(), col);
        assert!(max_theta_ideal(&m2, &col, ThetaVariant::Right).unwrap().is_zero());
    }

    #[test]
    fn subspace_counts() {
        let cfg = ScanConfig::default();
        let k2 = Algebra::direct_sum(&Algebra::matrix(1, f(2)).unwrap(), &Algebra::matrix(1, f(2)).unwrap()).unwrap();
        assert_eq!(enumerate_subspaces(&k2, 1, &cfg).unwrap().count(), 3);
        let m2 = Algebra::matrix(2, f(3)).unwrap();
        assert_eq!(enumerate_subspaces(&m2, 1, &cfg).unwrap().count(), 40);
        let zero: Vec<_> = enumerate_subspaces(&m2, 0, &cfg).unwrap().collect();
        assert_eq!(zero, vec![Subspace::zero(&m2)]);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(4, 1, 3), 40);
    }

    #[test]
    fn enumeration_refuses_above_the_limit() {
        let cfg = ScanConfig { max_subspaces: 10, ..ScanConfig::default() };
        let m2 = Algebra::matrix(2, f(3)).unwrap();
        assert!(matches!(enumerate_subspaces(&m2, 1, &cfg), Err(Error::TooLarge { .. })));
        let mq = Algebra::matrix(2, FieldSpec::RATIONALS).unwrap();
        assert!(matches!(enumerate_subspaces(&mq, 1, &cfg), Err(Error::InfiniteField)));
    }
}
