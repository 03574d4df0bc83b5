//! Finite-dimensional associative unital algebras given by structure
//! constants over an exact field.
//!
//! The product of basis elements is `e_i · e_j = Σ_k table[i][j][k] · e_k`.
//! Constructors for matrix algebras, polynomial quotients, direct sums and
//! opposite algebras build tables that are correct by construction and skip
//! the `O(d³)` associativity check.

mod element;
mod quotient;

pub use element::{CycleInfo, ElementClass, MinPolyData};
pub use quotient::{quotient_algebra, AlgebraMap};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{self, Vector};
use crate::poly::Poly;

/// Coordinates of an algebra element in the distinguished basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct Element(Vector);

impl Element {
    pub fn new(coords: Vector) -> Self {
        Element(coords)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vector {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero(&self.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    /// `table[i * dim + j]` is the coordinate vector of `e_i · e_j`.
    table: Vec<Vector>,
    /// Nonzero terms of each basis product, for sparse multiplication.
    terms: Vec<Vec<(usize, Scalar)>>,
    unit: Vector,
    label: String,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.table == other.table && self.unit == other.unit
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Builds an algebra from a `d × d × d` table of structure constants.
    ///
    /// With `check` set, associativity is verified on every basis triple and
    /// the unit law on every basis element.
    pub fn new(
        field: FieldSpec,
        table: Vec<Vec<Vector>>,
        unit: Vector,
        label: impl Into<String>,
        check: bool,
    ) -> Result<Self> {
        let dim = table.len();
        if dim == 0 {
            return Err(Error::BadShape("dimension must be at least 1".into()));
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::BadShape(format!("row {i} has {} entries", row.len())));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::BadShape(format!("e{i}·e{j} has {} coordinates", v.len())));
                }
                flat.push(v);
            }
        }
        if unit.len() != dim {
            return Err(Error::BadShape(format!("unit has {} coordinates", unit.len())));
        }
        for s in flat.iter().flatten().chain(&unit) {
            if s.field() != field {
                return Err(Error::FieldMismatch(field, s.field()));
            }
        }
        let alg = Self::from_flat(field, flat, unit, label.into());
        if check {
            alg.verify()?;
        }
        Ok(alg)
    }

    fn from_flat(field: FieldSpec, table: Vec<Vector>, unit: Vector, label: String) -> Self {
        let dim = unit.len();
        let terms = table
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect())
            .collect();
        Algebra { field, dim, table, terms, unit, label }
    }

    /// Associativity on all basis triples, then the two-sided unit law.
    pub fn verify(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = Element(self.table[i * d + j].clone());
                for k in 0..d {
                    let jk = Element(self.table[j * d + k].clone());
                    let left = self.mul(&ij, &self.basis(k));
                    let right = self.mul(&self.basis(i), &jk);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        let one = self.one();
        for i in 0..d {
            let e = self.basis(i);
            if self.mul(&one, &e) != e || self.mul(&e, &one) != e {
                return Err(Error::BadUnit(i));
            }
        }
        Ok(())
    }

    /// `M_n(K)` on the matrix units `E_11, E_12, ..., E_nn` (row-major).
    pub fn matrix(n: usize, field: FieldSpec) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadShape("matrix size must be at least 1".into()));
        }
        let d = n * n;
        let mut table = vec![linalg::zero_vector(field, d); d * d];
        // E_ab · E_bc = E_ac, all other products of matrix units vanish
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    table[(a * n + b) * d + (b * n + c)][a * n + c] = field.one();
                }
            }
        }
        let unit = (0..d).map(|k| if k / n == k % n { field.one() } else { field.zero() }).collect();
        Ok(Self::from_flat(field, table, unit, format!("M_{n}({field})")))
    }

    /// `K[t]/(g)` on the basis `1, t, ..., t^(deg g - 1)`.
    pub fn poly_quotient(g: &Poly) -> Result<Self> {
        if !g.is_monic() || g.degree() == Some(0) {
            return Err(Error::NotMonic);
        }
        let field = g.field();
        let d = g.degree().expect("monic is nonzero");
        // t^m mod g for m < 2d - 1
        let reduced: Vec<Vector> = (0..2 * d - 1)
            .map(|m| {
                let (_, r) = Poly::monomial(field.one(), m).div_rem(g).expect("g nonzero");
                (0..d).map(|i| r.coeff(i)).collect()
            })
            .collect();
        let table = (0..d * d).map(|ij| reduced[ij / d + ij % d].clone()).collect();
        let label = format!("{field}[t]/({g})");
        Ok(Self::from_flat(field, table, reduced[0].clone(), label))
    }

    /// Componentwise product on `A × B`; the basis of `A` comes first.
    pub fn direct_sum(a: &Algebra, b: &Algebra) -> Result<Self> {
        if a.field != b.field {
            return Err(Error::FieldMismatch(a.field, b.field));
        }
        let field = a.field;
        let (da, db) = (a.dim, b.dim);
        let d = da + db;
        let mut table = vec![linalg::zero_vector(field, d); d * d];
        for i in 0..da {
            for j in 0..da {
                for (k, c) in &a.terms[i * da + j] {
                    table[i * d + j][*k] = c.clone();
                }
            }
        }
        for i in 0..db {
            for j in 0..db {
                for (k, c) in &b.terms[i * db + j] {
                    table[(da + i) * d + da + j][da + k] = c.clone();
                }
            }
        }
        let unit = a.unit.iter().chain(&b.unit).cloned().collect();
        let label = format!("({}) + ({})", a.label, b.label);
        Ok(Self::from_flat(field, table, unit, label))
    }

    /// Same basis, reversed product.
    pub fn opposite(a: &Algebra) -> Self {
        let d = a.dim;
        let table = (0..d * d).map(|ij| a.table[(ij % d) * d + ij / d].clone()).collect();
        let label = match a.label.strip_prefix("opp(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("opp({})", a.label),
        };
        Self::from_flat(a.field, table, a.unit.clone(), label)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Coordinates of `e_i · e_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim + j]
    }

    pub(crate) fn basis_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.terms[i * self.dim + j]
    }

    /// The table in nested `d × d × d` form.
    pub fn table(&self) -> Vec<Vec<Vector>> {
        self.table.chunks(self.dim).map(|row| row.to_vec()).collect()
    }

    /// Validates length and field of a coordinate vector.
    pub fn element(&self, coords: Vector) -> Result<Element> {
        let e = Element(coords);
        self.check(&e)?;
        Ok(e)
    }

    pub fn check(&self, a: &Element) -> Result<()> {
        if a.len() != self.dim {
            return Err(Error::AlgebraMismatch(format!(
                "element has {} coordinates, {} has dimension {}",
                a.len(),
                self.label,
                self.dim
            )));
        }
        if let Some(bad) = a.coords().iter().find(|c| c.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, bad.field()));
        }
        Ok(())
    }

    pub fn zero(&self) -> Element {
        Element(linalg::zero_vector(self.field, self.dim))
    }

    pub fn one(&self) -> Element {
        Element(self.unit.clone())
    }

    pub fn basis(&self, i: usize) -> Element {
        Element(linalg::unit_vector(self.field, self.dim, i))
    }

    pub fn from_i64s(&self, coords: &[i64]) -> Result<Element> {
        let v = coords.iter().map(|&c| self.field.from_i64(c)).collect();
        self.element(v)
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element(linalg::add(&a.0, &b.0))
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        Element(linalg::sub(&a.0, &b.0))
    }

    pub fn scale(&self, c: &Scalar, a: &Element) -> Element {
        Element(linalg::scale(c, &a.0))
    }

    /// Bilinear expansion through the structure constants.
    ///
    /// Operands must belong to this algebra; see [`Algebra::checked_mul`].
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        debug_assert!(a.len() == self.dim && b.len() == self.dim);
        let mut out = linalg::zero_vector(self.field, self.dim);
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.terms[i * self.dim + j] {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        Element(out)
    }

    pub fn checked_mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// Binary exponentiation; `a^0` is the unit.
    pub fn pow(&self, a: &Element, mut m: u64) -> Element {
        let mut acc = self.one();
        let mut base = a.clone();
        while m > 0 {
            if m & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            m >>= 1;
            if m > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Evaluates a polynomial at `a` by Horner's rule.
    pub fn eval_poly(&self, f: &Poly, a: &Element) -> Element {
        f.coeffs().iter().rev().fold(self.zero(), |acc, c| {
            let shifted = self.mul(&acc, a);
            self.add(&shifted, &self.scale(c, &self.one()))
        })
    }

    /// Rows of the matrix of `y ↦ x · y`.
    pub fn left_mul_matrix(&self, x: &Element) -> Vec<Vector> {
        let cols: Vec<Element> = (0..self.dim).map(|j| self.mul(x, &self.basis(j))).collect();
        transpose(&cols)
    }

    /// Rows of the matrix of `y ↦ y · x`.
    pub fn right_mul_matrix(&self, x: &Element) -> Vec<Vector> {
        let cols: Vec<Element> = (0..self.dim).map(|j| self.mul(&self.basis(j), x)).collect();
        transpose(&cols)
    }

    /// First basis pair that fails to commute, if any.
    pub fn commutator_witness(&self) -> Option<(usize, usize)> {
        let d = self.dim;
        (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .find(|&(i, j)| self.table[i * d + j] != self.table[j * d + i])
    }

    pub fn is_commutative(&self) -> bool {
        self.commutator_witness().is_none()
    }

    /// `Some(n)` when this is `M_n(K)` on its matrix-unit basis.
    pub fn matrix_order(&self) -> Option<usize> {
        let n = (1..=self.dim).find(|n| n * n >= self.dim)?;
        if n * n != self.dim {
            return None;
        }
        let m = Algebra::matrix(n, self.field).ok()?;
        (m.table == self.table && m.unit == self.unit).then_some(n)
    }
}

fn transpose(cols: &[Element]) -> Vec<Vector> {
    let d = cols.len();
    (0..d).map(|k| cols.iter().map(|c| c.0[k].clone()).collect()).collect()
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {} over {})", self.label, self.dim, self.field)
    }
}
