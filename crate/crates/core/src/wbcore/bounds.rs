//! Feng-Rao counting functions and the bounds built from them.

use std::collections::BTreeSet;

use super::code::{Code, Side};
use super::table::{Variant, WbTable};
use crate::error::{Error, Result};

/// `Lambda(i)`: rho values reached from row `i` by pairs satisfying `variant`.
pub fn lambda_set(table: &WbTable, variant: Variant, i: usize) -> BTreeSet<usize> {
    table.counted(variant).filter(|((r, _), _)| *r == i).map(|(_, e)| e.rho).collect()
}

/// `V(l)`: rows `i` that reach rho value `l` by a pair satisfying `variant`.
pub fn v_set(table: &WbTable, variant: Variant, l: usize) -> BTreeSet<usize> {
    table.counted(variant).filter(|(_, e)| e.rho == l).map(|((i, _), _)| i).collect()
}

/// Number of distinct rho values reached from row `i`.
pub fn sigma_counts(table: &WbTable, variant: Variant, i: usize) -> usize {
    lambda_set(table, variant, i).len()
}

/// Number of distinct rows reaching rho value `l`.
pub fn mu_counts(table: &WbTable, variant: Variant, l: usize) -> usize {
    v_set(table, variant, l).len()
}

/// All `sigma` values, indexed `1..=n` (position 0 is row 1).
pub fn sigma_row(table: &WbTable, variant: Variant) -> Vec<usize> {
    let mut sets = vec![BTreeSet::new(); table.n()];
    for ((i, _), e) in table.counted(variant) {
        sets[i - 1].insert(e.rho);
    }
    sets.iter().map(BTreeSet::len).collect()
}

/// All `mu` values, indexed `1..=n`.
pub fn mu_row(table: &WbTable, variant: Variant) -> Vec<usize> {
    let mut sets = vec![BTreeSet::new(); table.n()];
    for ((i, _), e) in table.counted(variant) {
        sets[e.rho - 1].insert(i);
    }
    sets.iter().map(BTreeSet::len).collect()
}

fn check_table(code: &Code, table: &WbTable) -> Result<()> {
    if table.n() != code.len() {
        return Err(Error::BasisMismatch(format!("table has n = {}, code has n = {}", table.n(), code.len())));
    }
    Ok(())
}

/// Lower bound on the minimum distance: `min sigma(i), i in I` for primary
/// codes and `min mu(l), l not in I` for dual codes. With a partial table this
/// is the bound from the pairs known to be well-behaving, still a valid bound.
pub fn min_distance_bound(code: &Code, table: &WbTable, variant: Variant) -> Result<usize> {
    check_table(code, table)?;
    let idx = code.indices().non_empty()?;
    match code.side() {
        Side::Primary => {
            let sigma = sigma_row(table, variant);
            Ok(idx.iter().map(|i| sigma[i - 1]).min().expect("non-empty"))
        }
        Side::Dual => {
            let mu = mu_row(table, variant);
            idx.others().iter().map(|&l| mu[l - 1]).min().ok_or(Error::FullIndexSet(code.len()))
        }
    }
}

/// Small fixed-width bitset over `1..=n`.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Bits {
        Bits(vec![0; n / 64 + 1])
    }

    fn from_set(n: usize, s: &BTreeSet<usize>) -> Bits {
        let mut b = Bits::new(n);
        for &x in s {
            b.0[x / 64] |= 1 << (x % 64);
        }
        b
    }

    fn union(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Lower bound on the t-th generalized Hamming weight: the smallest union of
/// `t` of the `Lambda(i)`, `i in I` (primary) or of the `V(l)`, `l not in I` (dual).
pub fn ghw_bound(code: &Code, table: &WbTable, variant: Variant, t: usize) -> Result<usize> {
    check_table(code, table)?;
    code.indices().non_empty()?;
    let dim = code.dimension();
    if t == 0 || t > dim {
        return Err(Error::TOutOfRange { t, max: dim });
    }
    let n = code.len();
    let sets: Vec<Bits> = match code.side() {
        Side::Primary => {
            code.indices().iter().map(|i| Bits::from_set(n, &lambda_set(table, variant, i))).collect()
        }
        Side::Dual => {
            code.indices().others().iter().map(|&l| Bits::from_set(n, &v_set(table, variant, l))).collect()
        }
    };
    Ok(min_union(&sets, t, n))
}

/// Exact minimum of `|S_{k_1} ∪ … ∪ S_{k_t}|` over t-subsets, by depth-first
/// search that abandons a branch once its union reaches the incumbent.
fn min_union(sets: &[Bits], t: usize, n: usize) -> usize {
    // smallest sets first so the greedy incumbent is good
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&k| sets[k].count());
    let sorted: Vec<Bits> = order.iter().map(|&k| sets[k].clone()).collect();

    let mut best = sorted.iter().take(t).fold(Bits::new(n), |acc, s| acc.union(s)).count();

    fn search(sets: &[Bits], start: usize, left: usize, acc: &Bits, best: &mut usize) {
        let size = acc.count();
        if size >= *best {
            return;
        }
        if left == 0 {
            *best = size;
            return;
        }
        for k in start..=sets.len() - left {
            // the union can only grow past the largest remaining set's size
            if sets[k].count() >= *best {
                break;
            }
            search(sets, k + 1, left - 1, &acc.union(&sets[k]), best);
        }
    }
    search(&sorted, 0, t, &Bits::new(n), &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wbcore::table::{Completeness, WbEntry, WbStatus};

    #[test]
    fn empty_partial_table_counts_zero() {
        let t = WbTable::empty(4, Completeness::Partial);
        assert_eq!(sigma_counts(&t, Variant::Wb, 1), 0);
        assert_eq!(mu_counts(&t, Variant::Owb, 2), 0);
    }

    #[test]
    fn variant_filters_status() {
        let mut t = WbTable::empty(3, Completeness::Partial);
        t.insert(1, 1, WbEntry { status: WbStatus::Wb, rho: 1 }).unwrap();
        t.insert(1, 2, WbEntry { status: WbStatus::Wwb, rho: 2 }).unwrap();
        t.insert(1, 3, WbEntry { status: WbStatus::Owb, rho: 3 }).unwrap();
        t.insert(2, 1, WbEntry { status: WbStatus::NotOwb, rho: 3 }).unwrap();
        assert_eq!(sigma_counts(&t, Variant::Wb, 1), 1);
        assert_eq!(sigma_counts(&t, Variant::Owb, 1), 3);
        assert_eq!(mu_counts(&t, Variant::Owb, 3), 1);
    }

    #[test]
    fn min_union_matches_enumeration() {
        let n = 10;
        let raw: Vec<BTreeSet<usize>> = vec![
            [1, 2, 3].into(),
            [3, 4].into(),
            [4, 5, 6, 7].into(),
            [1, 7].into(),
            [2, 3, 9, 10].into(),
            [8].into(),
        ];
        let bits: Vec<Bits> = raw.iter().map(|s| Bits::from_set(n, s)).collect();
        for t in 1..=raw.len() {
            let mut brute = usize::MAX;
            for mask in 0u32..(1 << raw.len()) {
                if mask.count_ones() as usize != t {
                    continue;
                }
                let u: BTreeSet<usize> =
                    (0..raw.len()).filter(|k| mask >> k & 1 == 1).flat_map(|k| raw[k].iter().copied()).collect();
                brute = brute.min(u.len());
            }
            assert_eq!(min_union(&bits, t, n), brute, "t = {t}");
        }
    }
}
