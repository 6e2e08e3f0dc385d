use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fqla::{dot, Matrix};
use crate::gf::{Elem, Field};

struct Inner {
    vectors: Matrix,
    /// Row k is column k of the inverse of `vectors`, so that
    /// `v . dual_rows[k]` is the k-th coordinate of `v` in this basis.
    dual_rows: Matrix,
}

/// An ordered basis `b_1, …, b_n` of `F_q^n`, carrying the filtration
/// `L_l = span{b_1, …, b_l}`. Indices are 1-based throughout the public API.
#[derive(Clone)]
pub struct IndexedBasis(Arc<Inner>);

impl fmt::Debug for IndexedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IndexedBasis").field("field", self.field()).field("vectors", &self.to_ints()).finish()
    }
}

impl PartialEq for IndexedBasis {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.vectors == other.0.vectors
    }
}

impl Eq for IndexedBasis {}

impl IndexedBasis {
    /// Builds a basis from `n` vectors of length `n`; fails unless they are independent.
    pub fn new(field: &Field, vectors: Vec<Vec<Elem>>) -> Result<IndexedBasis> {
        let n = vectors.len();
        let m = Matrix::from_rows(field, n, &vectors)?;
        IndexedBasis::from_matrix(m)
    }

    pub fn from_ints(field: &Field, rows: &[Vec<u64>]) -> Result<IndexedBasis> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: r.len() });
        }
        IndexedBasis::from_matrix(Matrix::from_ints(field, rows)?)
    }

    pub fn from_matrix(vectors: Matrix) -> Result<IndexedBasis> {
        let n = vectors.rows();
        if vectors.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: vectors.cols() });
        }
        let inv = vectors.inverse().map_err(|_| Error::NotABasis { rank: vectors.rank(), n })?;
        Ok(IndexedBasis(Arc::new(Inner { dual_rows: inv.transpose(), vectors })))
    }

    /// Assembles a basis whose inverse is already known. `dual_rows` must be the
    /// transpose of the inverse of `vectors`.
    pub(crate) fn from_parts(vectors: Matrix, dual_rows: Matrix) -> IndexedBasis {
        debug_assert_eq!(vectors.rows(), dual_rows.rows());
        IndexedBasis(Arc::new(Inner { vectors, dual_rows }))
    }

    /// Standard basis `e_1, …, e_n`.
    pub fn standard(field: &Field, n: usize) -> IndexedBasis {
        let id = Matrix::identity(field, n);
        IndexedBasis::from_parts(id.clone(), id)
    }

    #[inline]
    pub fn field(&self) -> &Field {
        self.0.vectors.field()
    }

    /// Code length n (also the number of basis vectors).
    #[inline]
    pub fn len(&self) -> usize {
        self.0.vectors.rows()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `b_i`, 1-based.
    #[inline]
    pub fn vector(&self, i: usize) -> &[Elem] {
        self.0.vectors.row(i - 1)
    }

    /// Matrix whose row i is `b_i`.
    pub fn matrix(&self) -> &Matrix {
        &self.0.vectors
    }

    pub(crate) fn dual_rows(&self) -> &Matrix {
        &self.0.dual_rows
    }

    pub fn to_ints(&self) -> Vec<Vec<u32>> {
        self.0.vectors.to_ints()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.len()).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.len() })
        }
    }

    fn check_len(&self, v: &[Elem]) -> Result<()> {
        if v.len() == self.len() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.len(), got: v.len() })
        }
    }

    /// Coefficients `c` with `v = sum c_i b_i`, always of length n.
    pub fn coordinates(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.check_len(v)?;
        let f = self.field();
        Ok((0..self.len()).map(|k| dot(f, v, self.0.dual_rows.row(k))).collect())
    }

    /// Position of `v` in the filtration: 0 for the zero vector, otherwise the
    /// smallest l with `v` in `L_l`.
    pub fn rho_bar(&self, v: &[Elem]) -> Result<usize> {
        self.check_len(v)?;
        Ok(self.rho_bar_unchecked(v))
    }

    pub(crate) fn rho_bar_unchecked(&self, v: &[Elem]) -> usize {
        let f = self.field();
        (0..self.len()).rev().find(|&k| !dot(f, v, self.0.dual_rows.row(k)).is_zero()).map_or(0, |k| k + 1)
    }

    /// `sum c_i b_i`.
    pub fn combine(&self, coeffs: &[Elem]) -> Result<Vec<Elem>> {
        self.check_len(coeffs)?;
        self.0.vectors.vec_mul(coeffs)
    }
}

/// Component-wise product.
pub fn star(field: &Field, u: &[Elem], v: &[Elem]) -> Result<Vec<Elem>> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch { expected: u.len(), got: v.len() });
    }
    Ok(star_unchecked(field, u, v))
}

#[inline]
pub(crate) fn star_unchecked(field: &Field, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
    u.iter().zip(v).map(|(&a, &b)| field.mul(a, b)).collect()
}

/// Expresses `v` in the basis `basis`, keeping trailing zero coefficients.
pub fn express_in_basis(v: &[Elem], basis: &IndexedBasis) -> Result<Vec<Elem>> {
    basis.coordinates(v)
}
