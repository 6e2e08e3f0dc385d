use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    #[serde(rename = "graded-lex")]
    GradedLex,
    #[serde(rename = "lex")]
    Lex,
    #[serde(rename = "graded-reverse-lex")]
    GradedReverseLex,
}

/// A monomial order on exponent vectors in `N_0^m`.
///
/// `priority` lists variable positions from most to least significant; an
/// empty list means `[0, 1, …, m-1]`. With `GradedLex` and priority `[1, 0]`
/// the two-variable order has `X < Y`, i.e. `(1,0) < (0,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> MonomialOrder {
        MonomialOrder { kind, priority }
    }

    pub fn graded_lex(priority: Vec<usize>) -> MonomialOrder {
        MonomialOrder::new(OrderKind::GradedLex, priority)
    }

    /// Checks that `priority` is empty or a permutation of `0..m`.
    pub fn validate(&self, m: usize) -> Result<()> {
        if self.priority.is_empty() {
            return Ok(());
        }
        let mut seen = vec![false; m];
        if self.priority.len() != m {
            return Err(Error::InvalidOrder(format!("priority has {} entries for {m} variables", self.priority.len())));
        }
        for &v in &self.priority {
            if v >= m || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrder(format!("priority {:?} is not a permutation of 0..{m}", self.priority)));
            }
        }
        Ok(())
    }

    fn var(&self, k: usize) -> usize {
        self.priority.get(k).copied().unwrap_or(k)
    }

    fn lex(&self, a: &[u32], b: &[u32]) -> Ordering {
        (0..a.len()).map(|k| self.var(k)).map(|v| a[v].cmp(&b[v])).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    }

    /// Compares two exponent vectors of the same length.
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        let deg = |x: &[u32]| x.iter().map(|&e| e as u64).sum::<u64>();
        match self.kind {
            OrderKind::Lex => self.lex(a, b),
            OrderKind::GradedLex => deg(a).cmp(&deg(b)).then_with(|| self.lex(a, b)),
            OrderKind::GradedReverseLex => deg(a).cmp(&deg(b)).then_with(|| {
                // the smaller exponent in the least significant differing variable wins
                (0..a.len())
                    .rev()
                    .map(|k| self.var(k))
                    .map(|v| b[v].cmp(&a[v]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }
}
