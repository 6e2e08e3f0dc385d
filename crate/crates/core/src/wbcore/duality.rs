//! Dual bases and the translation of well-behaving information between
//! `(G, U)` and `(H, U)`.
//!
//! For `H = dualize(G)` we have `g_i . h_j = 1` exactly when `i = n - j + 1`
//! and 0 otherwise. Then `C(G, I) = C^perp(H, complement(I))`, and a WB (resp. OWB)
//! pair `(i, j)` with `rho_G(g_i * u_j) = k` corresponds to the WB (resp. OWB)
//! pair `(n - k + 1, j)` with `rho_H(h_{n-k+1} * u_j) = n - i + 1`.

use serde::{Deserialize, Serialize};

use super::basis::IndexedBasis;
use super::table::{Completeness, WbEntry, WbStatus, WbTable};
use crate::error::{Error, Result};
use crate::fqla::{dot, Matrix};
use crate::gf::Elem;

/// The basis `H` with `g_i . h_j = delta(i, n - j + 1)`: `h_k` is column
/// `n - k + 1` of the inverse of the matrix with rows `g_i`.
pub fn dualize(g: &IndexedBasis) -> IndexedBasis {
    let n = g.len();
    let f = g.field();
    let inv_cols = g.dual_rows();
    let rows: Vec<Vec<Elem>> = (0..n).map(|k| inv_cols.row(n - 1 - k).to_vec()).collect();
    let h = Matrix::from_rows(f, n, &rows).expect("square");
    // The inverse of H is G^T J, so column k of it is g_{n-k}.
    let g_rows: Vec<Vec<Elem>> = (0..n).map(|k| g.vector(n - k).to_vec()).collect();
    let dual_rows = Matrix::from_rows(f, n, &g_rows).expect("square");
    IndexedBasis::from_parts(h, dual_rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualityCondition {
    /// `g_i . h_j = delta(i, n - j + 1)` for all `i, j`.
    Full,
    /// `g_i . h_{n-i+1} != 0` and `g_i . h_j = 0` for `j < n - i + 1`.
    Triangular,
    Neither,
}

pub fn check_duality_condition(g: &IndexedBasis, h: &IndexedBasis) -> Result<DualityCondition> {
    let n = g.len();
    if h.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: h.len() });
    }
    if g.field() != h.field() {
        return Err(Error::FieldMismatch);
    }
    let f = g.field();
    let mut full = true;
    for i in 1..=n {
        let partner = n - i + 1;
        for j in 1..=n {
            let v = dot(f, g.vector(i), h.vector(j));
            if j < partner && !v.is_zero() {
                return Ok(DualityCondition::Neither);
            }
            if j == partner {
                if v.is_zero() {
                    return Ok(DualityCondition::Neither);
                }
                if v != Elem::ONE {
                    full = false;
                }
            }
            if j > partner && !v.is_zero() {
                full = false;
            }
        }
    }
    Ok(if full { DualityCondition::Full } else { DualityCondition::Triangular })
}

/// Moves WB and OWB information from `(G, U)` to `(H, U)`.
///
/// WWB entries are downgraded to OWB first since the correspondence is only
/// available for WB and OWB. Entries with rho 0 or status NotOWB carry no
/// information and are dropped, so the result is always partial.
pub fn translate_wb_table(table: &WbTable, g: &IndexedBasis, h: &IndexedBasis) -> Result<WbTable> {
    let n = g.len();
    if table.n() != n {
        return Err(Error::BasisMismatch(format!("table has n = {}, bases have n = {n}", table.n())));
    }
    if check_duality_condition(g, h)? != DualityCondition::Full {
        return Err(Error::NotDualPair);
    }
    let mut out = WbTable::empty(n, Completeness::Partial);
    for ((i, j), e) in table.iter() {
        if e.rho == 0 {
            continue;
        }
        let status = match e.status {
            WbStatus::Wb => WbStatus::Wb,
            WbStatus::Wwb | WbStatus::Owb => WbStatus::Owb,
            WbStatus::NotOwb => continue,
        };
        out.insert(n - e.rho + 1, j, WbEntry { status, rho: n - i + 1 })?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn standard_basis_dualizes_to_reversal() {
        let f = Field::prime(3).unwrap();
        let g = IndexedBasis::standard(&f, 4);
        let h = dualize(&g);
        for j in 1..=4 {
            assert_eq!(h.vector(j), g.vector(5 - j));
        }
        assert_eq!(check_duality_condition(&g, &h).unwrap(), DualityCondition::Full);
        assert_eq!(check_duality_condition(&g, &g).unwrap(), DualityCondition::Neither);
    }

    #[test]
    fn triangular_condition() {
        let f = Field::prime(3).unwrap();
        let g = IndexedBasis::standard(&f, 2);
        let h = IndexedBasis::from_ints(&f, &[vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(check_duality_condition(&g, &h).unwrap(), DualityCondition::Triangular);
        let t = WbTable::empty(2, Completeness::Partial);
        assert_eq!(translate_wb_table(&t, &g, &h), Err(Error::NotDualPair));
    }

    #[test]
    fn dual_basis_has_consistent_inverse() {
        let f = Field::prime(5).unwrap();
        let g = IndexedBasis::from_ints(&f, &[vec![1, 2, 0], vec![3, 1, 4], vec![0, 2, 2]]).unwrap();
        let h = dualize(&g);
        let rebuilt = IndexedBasis::from_matrix(h.matrix().clone()).unwrap();
        assert_eq!(h.dual_rows(), rebuilt.dual_rows());
        assert_eq!(dualize(&h), g);
    }

    #[test]
    fn single_entry_translation() {
        let f = Field::prime(2).unwrap();
        let g = IndexedBasis::standard(&f, 1);
        let h = dualize(&g);
        let mut t = WbTable::empty(1, Completeness::Partial);
        t.insert(1, 1, WbEntry { status: WbStatus::Wb, rho: 1 }).unwrap();
        assert_eq!(translate_wb_table(&t, &g, &h).unwrap(), t);
    }
}
