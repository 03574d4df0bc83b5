//! Unital homomorphisms between algebras and quotients by two-sided ideals.

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::subspace::Subspace;

/// A linear map `domain → codomain` checked to be a unital algebra
/// homomorphism. `matrix` has `codomain.dim()` rows; column `i` is the image
/// of `e_i`.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    domain: Algebra,
    codomain: Algebra,
    matrix: Vec<Vector>,
}

impl AlgebraMap {
    pub fn new(domain: Algebra, codomain: Algebra, matrix: Vec<Vector>) -> Result<Self> {
        if domain.field() != codomain.field() {
            return Err(Error::FieldMismatch(domain.field(), codomain.field()));
        }
        if matrix.len() != codomain.dim() || matrix.iter().any(|r| r.len() != domain.dim()) {
            return Err(Error::BadShape(format!("map matrix must be {} x {}", codomain.dim(), domain.dim())));
        }
        let map = AlgebraMap { domain, codomain, matrix };
        let (a, b) = (&map.domain, &map.codomain);
        if map.apply(&a.one()) != b.one() {
            return Err(Error::NotAHomomorphism("unit is not preserved".into()));
        }
        let images: Vec<Element> = (0..a.dim()).map(|i| map.apply(&a.basis(i))).collect();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = map.apply(&Element::new(a.product_of_basis(i, j).to_vec()));
                if lhs != b.mul(&images[i], &images[j]) {
                    return Err(Error::NotAHomomorphism(format!("φ(e{i}·e{j}) ≠ φ(e{i})·φ(e{j})")));
                }
            }
        }
        Ok(map)
    }

    pub fn identity(alg: &Algebra) -> Self {
        let d = alg.dim();
        let matrix = (0..d).map(|i| linalg::unit_vector(alg.field(), d, i)).collect();
        AlgebraMap { domain: alg.clone(), codomain: alg.clone(), matrix }
    }

    pub fn domain(&self) -> &Algebra {
        &self.domain
    }

    pub fn codomain(&self) -> &Algebra {
        &self.codomain
    }

    pub fn matrix(&self) -> &[Vector] {
        &self.matrix
    }

    pub fn apply(&self, a: &Element) -> Element {
        Element::new(linalg::mat_vec(&self.matrix, a.coords(), self.domain.field()))
    }

    /// Image of a subspace.
    pub fn image(&self, v: &Subspace) -> Result<Subspace> {
        v.check_algebra(&self.domain)?;
        let imgs: Vec<Element> = v.basis_elements().iter().map(|e| self.apply(e)).collect();
        Subspace::span(&self.codomain, &imgs)
    }
}

/// `A/I` on the classes of the basis vectors `e_j` with `j` not a pivot of
/// `I`, together with the projection `A → A/I`.
pub fn quotient_algebra(alg: &Algebra, ideal: &Subspace) -> Result<(Algebra, AlgebraMap)> {
    ideal.check_algebra(alg)?;
    if ideal.is_whole() {
        return Err(Error::DegenerateQuotient);
    }
    let d = alg.dim();
    for (n, x) in ideal.basis_elements().iter().enumerate() {
        for i in 0..d {
            let e = alg.basis(i);
            if !ideal.member(&alg.mul(&e, x)) {
                return Err(Error::NotAnIdeal(format!("e{i} · (basis vector {n}) leaves the ideal")));
            }
            if !ideal.member(&alg.mul(x, &e)) {
                return Err(Error::NotAnIdeal(format!("(basis vector {n}) · e{i} leaves the ideal")));
            }
        }
    }
    let keep: Vec<usize> = (0..d).filter(|j| !ideal.pivots().contains(j)).collect();
    // Reducing by the RREF rows clears the pivot coordinates; what remains
    // are coordinates on the kept basis vectors.
    let project = |v: &[crate::field::Scalar]| -> Vector {
        let r = ideal.echelon().reduce(v);
        keep.iter().map(|&j| r[j].clone()).collect()
    };
    let table = keep.iter().map(|&i| keep.iter().map(|&j| project(alg.product_of_basis(i, j))).collect()).collect();
    let unit = project(alg.unit());
    let label = format!("{}/I", alg.label());
    let q = Algebra::new(alg.field(), table, unit, label, false)?;
    let matrix: Vec<Vector> = {
        let cols: Vec<Vector> = (0..d).map(|i| project(alg.basis(i).coords())).collect();
        (0..keep.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
    };
    let pi = AlgebraMap { domain: alg.clone(), codomain: q.clone(), matrix };
    Ok((q, pi))
}
