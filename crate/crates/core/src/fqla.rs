//! Dense exact linear algebra over GF(q).
//!
//! Gaussian elimination pivots on the first nonzero entry in column order; over a
//! finite field no magnitude heuristics are needed.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

/// Inner product `a . b`.
pub fn dot(field: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter().zip(b).fold(Elem::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

/// `acc += c * v`.
pub fn axpy(field: &Field, acc: &mut [Elem], c: Elem, v: &[Elem]) {
    if c.is_zero() {
        return;
    }
    for (a, &x) in acc.iter_mut().zip(v) {
        *a = field.add(*a, field.mul(c, x));
    }
}

pub fn scale(field: &Field, c: Elem, v: &[Elem]) -> Vec<Elem> {
    v.iter().map(|&x| field.mul(c, x)).collect()
}

pub fn sub(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(&x, &y)| field.sub(x, y)).collect()
}

pub fn add(field: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(&x, &y)| field.add(x, y)).collect()
}

/// Number of nonzero coordinates.
pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Converts canonical integers to elements, validating the range.
pub fn vector_from_ints(field: &Field, values: &[u64]) -> Result<Vec<Elem>> {
    values.iter().map(|&v| field.elem(v)).collect()
}

pub fn vector_to_ints(v: &[Elem]) -> Vec<u32> {
    v.iter().map(|e| e.value()).collect()
}

/// A dense row-major matrix over a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Reduced row-echelon form together with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Elem>]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn from_ints(field: &Field, rows: &[Vec<u64>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let rows: Vec<Vec<Elem>> = rows.iter().map(|r| vector_from_ints(field, r)).collect::<Result<_>>()?;
        Matrix::from_rows(field, cols, &rows)
    }

    pub fn to_ints(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| vector_to_ints(self.row(r))).collect()
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// The leading `cols` columns.
    pub fn left_columns(&self, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, cols);
        for r in 0..self.rows {
            for c in 0..cols {
                out.set(r, c, self.get(r, c));
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            let acc = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                axpy(f, acc, self.get(r, k), other.row(k));
            }
        }
        Ok(out)
    }

    /// `M v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows).map(|r| dot(&self.field, self.row(r), v)).collect())
    }

    /// `v M` for a row vector `v`.
    pub fn vec_mul(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: v.len() });
        }
        let mut out = vec![Elem::ZERO; self.cols];
        for (r, &c) in v.iter().enumerate() {
            axpy(&self.field, &mut out, c, self.row(r));
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Eliminates in place, returning pivot columns. Only the first `limit` columns
    /// are used for pivoting; the remaining columns are carried along.
    fn eliminate(&mut self, limit: usize) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&k| !self.get(k, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for k in c..self.cols {
                let v = f.mul(inv, self.get(r, k));
                self.set(r, k, v);
            }
            let pivot_row: Vec<Elem> = self.row(r).to_vec();
            for k in 0..self.rows {
                if k == r {
                    continue;
                }
                let factor = self.get(k, c);
                if factor.is_zero() {
                    continue;
                }
                let neg = f.neg(factor);
                let row = &mut self.data[k * self.cols..(k + 1) * self.cols];
                axpy(&f, &mut row[c..], neg, &pivot_row[c..]);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let pivots = m.eliminate(self.cols);
        Echelon { rank: pivots.len(), pivots, matrix: m }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, Elem::ONE);
        }
        let pivots = aug.eliminate(n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Ok(inv)
    }

    /// Solves `M x = b` for the unique `x`.
    pub fn solve(&self, b: &[Elem]) -> Result<Vec<Elem>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let n = self.cols;
        let mut aug = Matrix::zeros(&self.field, self.rows, n + 1);
        for (r, &rhs) in b.iter().enumerate() {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n, rhs);
        }
        let pivots = aug.eliminate(n);
        if (pivots.len()..self.rows).any(|r| !aug.get(r, n).is_zero()) {
            return Err(Error::Inconsistent);
        }
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        Ok((0..n).map(|r| aug.get(r, n)).collect())
    }

    /// Given `prefix` of length `cols - 1`, returns the unique `s` such that
    /// `(prefix, s)` lies in the row space of `self`.
    pub fn row_space_extension(&self, prefix: &[Elem]) -> Result<Elem> {
        if self.cols == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        let j = self.cols - 1;
        if prefix.len() != j {
            return Err(Error::DimensionMismatch { expected: j, got: prefix.len() });
        }
        let ech = self.rref();
        if ech.pivots.last() == Some(&j) {
            return Err(Error::NotUnique);
        }
        let f = &self.field;
        // Rows of the RREF carry the identity on pivot columns, so the only
        // candidate combination uses the prefix entries at those columns.
        let mut combo = vec![Elem::ZERO; self.cols];
        for (r, &p) in ech.pivots.iter().enumerate() {
            axpy(f, &mut combo, prefix[p], ech.matrix.row(r));
        }
        if combo[..j] != *prefix {
            return Err(Error::NotInRowSpace);
        }
        Ok(combo[j])
    }

    /// Basis of `{x : M x = 0}`, one vector per free column.
    pub fn null_space(&self) -> Vec<Vec<Elem>> {
        let ech = self.rref();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Elem::ZERO; self.cols];
                v[fc] = Elem::ONE;
                for (r, &pc) in ech.pivots.iter().enumerate() {
                    v[pc] = f.neg(ech.matrix.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// True when `v` is in the row space.
    pub fn row_space_contains(&self, v: &[Elem]) -> bool {
        let mut rows = self.row_vectors();
        let before = self.rank();
        rows.push(v.to_vec());
        let m = Matrix::from_rows(&self.field, self.cols, &rows).expect("same width");
        m.rank() == before
    }
}
