use serde::{Deserialize, Serialize};

use super::basis::IndexedBasis;
use crate::error::{Error, Result};
use crate::fqla::{dot, Matrix};
use crate::gf::Elem;

/// A set of 1-based indices into a basis of length `n`. May be empty; operations
/// that need a code raise `EmptyIndexSet` on an empty set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    n: usize,
    members: Vec<usize>,
}

impl IndexSet {
    /// Sorts and deduplicates `members`; every member must lie in `1..=n`.
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<IndexSet> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(IndexSet { n, members })
    }

    pub fn full(n: usize) -> IndexSet {
        IndexSet { n, members: (1..=n).collect() }
    }

    /// `{1, …, k}`.
    pub fn prefix(n: usize, k: usize) -> IndexSet {
        IndexSet { n, members: (1..=k.min(n)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    /// Indices of `1..=n` not in the set.
    pub fn others(&self) -> Vec<usize> {
        (1..=self.n).filter(|&i| !self.contains(i)).collect()
    }

    /// `{1..n} \ {n - i + 1 : i in I}`; an involution.
    pub fn complement(&self) -> IndexSet {
        let n = self.n;
        IndexSet { n, members: (1..=n).filter(|&l| !self.contains(n - l + 1)).collect() }
    }

    pub fn non_empty(&self) -> Result<&IndexSet> {
        if self.is_empty() {
            Err(Error::EmptyIndexSet)
        } else {
            Ok(self)
        }
    }
}

/// Complement of `I` as used when passing between a primary description and
/// the dual description of the same code.
pub fn complement(set: &IndexSet) -> IndexSet {
    set.complement()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `C(B, I) = span{b_i : i in I}`.
    #[default]
    Primary,
    /// `C^perp(B, I)`, the orthogonal complement of the primary code.
    Dual,
}

/// A code described by a basis, an index set and a side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    basis: IndexedBasis,
    indices: IndexSet,
    side: Side,
}

impl Code {
    pub fn new(basis: IndexedBasis, indices: IndexSet, side: Side) -> Result<Code> {
        if indices.n() != basis.len() {
            return Err(Error::DimensionMismatch { expected: basis.len(), got: indices.n() });
        }
        indices.non_empty()?;
        Ok(Code { basis, indices, side })
    }

    pub fn basis(&self) -> &IndexedBasis {
        &self.basis
    }

    pub fn indices(&self) -> &IndexSet {
        &self.indices
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn dimension(&self) -> usize {
        match self.side {
            Side::Primary => self.indices.len(),
            Side::Dual => self.len() - self.indices.len(),
        }
    }

    /// Matrix whose rows are `b_i`, `i in I`.
    pub fn selected_rows(&self) -> Matrix {
        let rows: Vec<Vec<Elem>> = self.indices.iter().map(|i| self.basis.vector(i).to_vec()).collect();
        Matrix::from_rows(self.basis.field(), self.len(), &rows).expect("basis vectors have length n")
    }

    /// Rows spanning the code.
    pub fn generator_matrix(&self) -> Matrix {
        match self.side {
            Side::Primary => self.selected_rows(),
            Side::Dual => {
                let ns = self.selected_rows().null_space();
                Matrix::from_rows(self.basis.field(), self.len(), &ns).expect("null space vectors have length n")
            }
        }
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        if v.len() != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), got: v.len() });
        }
        let f = self.basis.field();
        Ok(match self.side {
            Side::Primary => self.selected_rows().row_space_contains(v),
            Side::Dual => self.indices.iter().all(|i| dot(f, self.basis.vector(i), v).is_zero()),
        })
    }

    /// `sum a_k b_{i_k}` over the members of `I` in increasing order.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if self.side != Side::Primary {
            return Err(Error::SideMismatch);
        }
        if message.len() != self.indices.len() {
            return Err(Error::LengthMismatch { expected: self.indices.len(), got: message.len() });
        }
        self.selected_rows().vec_mul(message)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_examples() {
        let i = IndexSet::new(4, [3, 4]).unwrap();
        assert_eq!(i.complement().members(), &[3, 4]);
        let i = IndexSet::new(9, [1, 2, 3, 5]).unwrap();
        assert_eq!(complement(&i).members(), &[1, 2, 3, 4, 6]);
        assert!(IndexSet::full(5).complement().is_empty());
        assert_eq!(IndexSet::full(5).complement().complement(), IndexSet::new(5, []).unwrap().complement());
    }

    #[test]
    fn complement_is_an_involution() {
        let n = 7;
        for mask in 0u32..(1 << n) {
            let s = IndexSet::new(n, (1..=n).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap();
            assert_eq!(s.complement().complement(), s);
            assert_eq!(s.complement().len(), n - s.len());
        }
    }

    #[test]
    fn index_set_validation() {
        assert!(matches!(IndexSet::new(3, [0]), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(IndexSet::new(3, [4]), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(IndexSet::new(3, [3, 1, 3]).unwrap().members(), &[1, 3]);
    }
}
