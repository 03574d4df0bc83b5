//! Gaussian elimination over exact scalars: reduced row-echelon form,
//! nullspaces and residual reduction. Vectors are plain `Vec<Scalar>`.

use crate::field::{FieldSpec, Scalar};

pub type Vector = Vec<Scalar>;

/// A matrix in reduced row-echelon form together with its pivot columns.
/// Zero rows are dropped, so `rows.len()` is the rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Echelon {
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar], field: FieldSpec) -> Scalar {
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| &acc + &(x * y))
}

/// `target -= c · row`, in place.
fn axpy_neg(target: &mut [Scalar], c: &Scalar, row: &[Scalar]) {
    for (t, r) in target.iter_mut().zip(row) {
        if !r.is_zero() {
            *t = &*t - &(c * r);
        }
    }
}

/// Reduced row-echelon form of the given rows (each of length `ncols`).
pub fn rref(mut rows: Vec<Vector>, ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        rows[rank] = scale(&inv, &rows[rank]);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let c = row[col].clone();
                axpy_neg(row, &c, &pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Echelon { rows, pivots }
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after eliminating every pivot coordinate; zero iff `v`
    /// lies in the row space.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let c = out[p].clone();
                axpy_neg(&mut out, &c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis (the values at the pivots),
    /// provided `v` lies in the row space.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

/// Basis of `{x : M x = 0}` for the matrix with the given rows.
pub fn nullspace(rows: Vec<Vector>, ncols: usize, field: FieldSpec) -> Vec<Vector> {
    let ech = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut x = unit_vector(field, ncols, free);
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                x[p] = -&row[free];
            }
            x
        })
        .collect()
}

/// Applies a matrix given by its rows to a column vector.
pub fn mat_vec(rows: &[Vector], v: &[Scalar], field: FieldSpec) -> Vector {
    rows.iter().map(|r| dot(r, v, field)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(field: FieldSpec, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn rref_is_canonical_under_row_operations() {
        let f = FieldSpec::prime(5).unwrap();
        let a = rref(vec![v(f, &[1, 2, 0, 1]), v(f, &[0, 1, 1, 1])], 4);
        let b = rref(vec![v(f, &[2, 0, 1, 3]), v(f, &[0, 3, 3, 3]), v(f, &[1, 2, 0, 1])], 4);
        assert_eq!(a, b);
        assert_eq!(a.pivots, vec![0, 1]);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let f = FieldSpec::RATIONALS;
        let m = vec![v(f, &[1, 2, 3]), v(f, &[2, 4, 6]), v(f, &[0, 1, 1])];
        let ns = nullspace(m.clone(), 3, f);
        assert_eq!(ns.len(), 1);
        for x in &ns {
            assert!(is_zero(&mat_vec(&m, x, f)));
        }
    }
}
