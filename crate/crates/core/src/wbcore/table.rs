use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::basis::{star_unchecked, IndexedBasis};
use crate::error::{Error, Result};

/// Strength of the well-behaving property of a pair. Ordered so that
/// `Wb > Wwb > Owb > NotOwb`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum WbStatus {
    #[serde(rename = "NotOWB")]
    NotOwb,
    #[serde(rename = "OWB")]
    Owb,
    #[serde(rename = "WWB")]
    Wwb,
    #[serde(rename = "WB")]
    Wb,
}

/// Which pairs a count or bound is built from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Wb,
    Owb,
}

impl WbStatus {
    pub fn satisfies(self, variant: Variant) -> bool {
        match variant {
            Variant::Wb => self == WbStatus::Wb,
            Variant::Owb => self >= WbStatus::Owb,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Completeness {
    Exhaustive,
    Partial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WbEntry {
    pub status: WbStatus,
    /// `rho_bar_B(b_i * u_j)`.
    pub rho: usize,
}

/// Partial map `(i, j) -> (status, rho)` for a basis pair `(B, U)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TableFile", try_from = "TableFile")]
pub struct WbTable {
    n: usize,
    completeness: Completeness,
    entries: BTreeMap<(usize, usize), WbEntry>,
}

#[derive(Serialize, Deserialize)]
struct EntryRecord {
    i: usize,
    j: usize,
    status: WbStatus,
    rho: usize,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    n: usize,
    completeness: Completeness,
    entries: Vec<EntryRecord>,
}

impl From<WbTable> for TableFile {
    fn from(t: WbTable) -> TableFile {
        TableFile {
            n: t.n,
            completeness: t.completeness,
            entries: t
                .entries
                .into_iter()
                .map(|((i, j), e)| EntryRecord { i, j, status: e.status, rho: e.rho })
                .collect(),
        }
    }
}

impl TryFrom<TableFile> for WbTable {
    type Error = Error;

    fn try_from(f: TableFile) -> Result<WbTable> {
        let mut t = WbTable::empty(f.n, f.completeness);
        for e in f.entries {
            t.insert(e.i, e.j, WbEntry { status: e.status, rho: e.rho })?;
        }
        Ok(t)
    }
}

impl WbTable {
    pub fn empty(n: usize, completeness: Completeness) -> WbTable {
        WbTable { n, completeness, entries: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn completeness(&self) -> Completeness {
        self.completeness
    }

    pub fn is_exhaustive(&self) -> bool {
        self.completeness == Completeness::Exhaustive
    }

    pub fn mark_partial(mut self) -> WbTable {
        self.completeness = Completeness::Partial;
        self
    }

    pub fn insert(&mut self, i: usize, j: usize, entry: WbEntry) -> Result<()> {
        for idx in [i, j] {
            if !(1..=self.n).contains(&idx) {
                return Err(Error::IndexOutOfRange { index: idx, n: self.n });
            }
        }
        if entry.rho > self.n {
            return Err(Error::IndexOutOfRange { index: entry.rho, n: self.n });
        }
        self.entries.insert((i, j), entry);
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> Option<WbEntry> {
        self.entries.get(&(i, j)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in lexicographic `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), WbEntry)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Entries satisfying `variant` with a nonzero rho value.
    pub fn counted(&self, variant: Variant) -> impl Iterator<Item = ((usize, usize), WbEntry)> + '_ {
        self.iter().filter(move |(_, e)| e.status.satisfies(variant) && e.rho >= 1)
    }

    /// Keeps only entries with status at least `min`.
    pub fn filtered(&self, min: WbStatus) -> WbTable {
        WbTable {
            n: self.n,
            completeness: Completeness::Partial,
            entries: self.entries.iter().filter(|(_, e)| e.status >= min).map(|(&k, &v)| (k, v)).collect(),
        }
    }
}

fn check_pair(b: &IndexedBasis, u: &IndexedBasis) -> Result<()> {
    if b.field() != u.field() {
        return Err(Error::FieldMismatch);
    }
    if b.len() != u.len() {
        return Err(Error::DimensionMismatch { expected: b.len(), got: u.len() });
    }
    Ok(())
}

/// Classifies `(i, j)` straight from the definitions, returning the strongest
/// status that holds together with `rho_bar_B(b_i * u_j)`.
pub fn classify_pair(b: &IndexedBasis, u: &IndexedBasis, i: usize, j: usize) -> Result<(WbStatus, usize)> {
    check_pair(b, u)?;
    b.check_index(i)?;
    b.check_index(j)?;
    let f = b.field();
    let rho = |x: usize, y: usize| b.rho_bar_unchecked(&star_unchecked(f, b.vector(x), u.vector(y)));
    let target = rho(i, j);
    let column_ok = (1..i).all(|x| rho(x, j) < target);
    let row_ok = (1..j).all(|y| rho(i, y) < target);
    let status = if !column_ok {
        WbStatus::NotOwb
    } else if !row_ok {
        WbStatus::Owb
    } else if (1..i).all(|x| (1..j).all(|y| rho(x, y) < target)) {
        WbStatus::Wb
    } else {
        WbStatus::Wwb
    };
    Ok((status, target))
}

/// `rho_bar_B(b_i * u_j)` for all pairs, row-major with 0-based indices.
pub fn rho_grid(b: &IndexedBasis, u: &IndexedBasis) -> Result<Vec<usize>> {
    check_pair(b, u)?;
    let n = b.len();
    let f = b.field();
    let rows: Vec<Vec<usize>> = (1..=n)
        .into_par_iter()
        .map(|i| {
            (1..=n).map(|j| b.rho_bar_unchecked(&star_unchecked(f, b.vector(i), u.vector(j)))).collect()
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

pub enum BuildMode<'a> {
    Exhaustive,
    FromSeed(&'a WbTable),
}

/// Builds a table for `(B, U)`.
///
/// `Exhaustive` classifies all n^2 pairs from the grid of rho values using
/// rectangle, row and column prefix maxima. `FromSeed` checks that every seed
/// entry's rho matches the bases and returns the seed marked partial.
pub fn build_wb_table(b: &IndexedBasis, u: &IndexedBasis, mode: BuildMode<'_>) -> Result<WbTable> {
    check_pair(b, u)?;
    let n = b.len();
    match mode {
        BuildMode::FromSeed(seed) => {
            if seed.n() != n {
                return Err(Error::BasisMismatch(format!("seed has n = {}, bases have n = {n}", seed.n())));
            }
            let f = b.field();
            for ((i, j), e) in seed.iter() {
                let actual = b.rho_bar_unchecked(&star_unchecked(f, b.vector(i), u.vector(j)));
                if actual != e.rho {
                    return Err(Error::BasisMismatch(format!(
                        "entry ({i},{j}) has rho {} but the bases give {actual}",
                        e.rho
                    )));
                }
            }
            Ok(seed.clone().mark_partial())
        }
        BuildMode::Exhaustive => {
            let grid = rho_grid(b, u)?;
            Ok(classify_grid(n, &grid))
        }
    }
}

/// Classification of every pair from a full rho grid (0-based, row-major).
pub(crate) fn classify_grid(n: usize, grid: &[usize]) -> WbTable {
    let at = |i: usize, j: usize| grid[i * n + j];
    // rect[i][j] = max over [0..=i] x [0..=j]
    let mut rect = vec![0usize; n * n];
    let mut col_max = vec![0usize; n * n];
    let mut table = WbTable::empty(n, Completeness::Exhaustive);
    for i in 0..n {
        let mut row_max = 0usize;
        for j in 0..n {
            let r = at(i, j);
            let up_rect = if i > 0 { rect[(i - 1) * n + j] } else { 0 };
            let left_rect = if j > 0 { rect[i * n + j - 1] } else { 0 };
            let up_col = if i > 0 { col_max[(i - 1) * n + j] } else { 0 };
            rect[i * n + j] = r.max(up_rect).max(left_rect);
            col_max[i * n + j] = r.max(up_col);

            let has_up = i > 0;
            let has_left = j > 0;
            let column_ok = !has_up || up_col < r;
            let row_ok = !has_left || row_max < r;
            let status = if !column_ok {
                WbStatus::NotOwb
            } else if !row_ok {
                WbStatus::Owb
            } else if (!has_up || up_rect < r) && (!has_left || left_rect < r) {
                WbStatus::Wb
            } else {
                WbStatus::Wwb
            };
            table.entries.insert((i + 1, j + 1), WbEntry { status, rho: r });
            row_max = row_max.max(r);
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn single_pair_table() {
        let f = Field::prime(3).unwrap();
        let b = IndexedBasis::from_ints(&f, &[vec![2]]).unwrap();
        let t = build_wb_table(&b, &b, BuildMode::Exhaustive).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(1, 1), Some(WbEntry { status: WbStatus::Wb, rho: 1 }));
        assert_eq!(classify_pair(&b, &b, 1, 1).unwrap(), (WbStatus::Wb, 1));
        assert!(matches!(classify_pair(&b, &b, 2, 1), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn seed_with_wrong_rho_is_rejected() {
        let f = Field::prime(3).unwrap();
        let b = IndexedBasis::standard(&f, 2);
        let mut seed = WbTable::empty(2, Completeness::Partial);
        seed.insert(1, 1, WbEntry { status: WbStatus::Wb, rho: 2 }).unwrap();
        assert!(matches!(build_wb_table(&b, &b, BuildMode::FromSeed(&seed)), Err(Error::BasisMismatch(_))));
        let wrong_n = WbTable::empty(3, Completeness::Partial);
        assert!(matches!(build_wb_table(&b, &b, BuildMode::FromSeed(&wrong_n)), Err(Error::BasisMismatch(_))));
    }

    #[test]
    fn table_json_round_trip() {
        let f = Field::prime(2).unwrap();
        let b = IndexedBasis::from_ints(&f, &[vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
        let t = build_wb_table(&b, &b, BuildMode::Exhaustive).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.contains(r#""status":"WB""#));
        let back: WbTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
