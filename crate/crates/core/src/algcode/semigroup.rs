use std::collections::HashMap;

use super::algebra::{box_monomials, MonomialAlgebra};
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::wbcore::{Code, Completeness, IndexSet, Side, WbEntry, WbStatus, WbTable};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Gamma {
    /// `Gamma = N_0^r`.
    Full,
    /// Numerical semigroup; `member[x]` for `x <= max(delta)`.
    Numerical { generators: Vec<u32>, member: Vec<bool> },
}

/// A value semigroup `Gamma ⊆ N_0^r` together with the finite weight set
/// `delta = {alpha(1) < … < alpha(n)} ⊆ Gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupData {
    r: usize,
    gamma: Gamma,
    delta: Vec<Vec<u32>>,
    position: HashMap<Vec<u32>, usize>,
}

impl SemigroupData {
    fn with_delta(r: usize, gamma: Gamma, delta: Vec<Vec<u32>>) -> SemigroupData {
        let position = delta.iter().enumerate().map(|(i, e)| (e.clone(), i + 1)).collect();
        SemigroupData { r, gamma, delta, position }
    }

    /// `Gamma = N_0^m` with the algebra's delta.
    pub fn from_algebra(a: &MonomialAlgebra) -> SemigroupData {
        SemigroupData::with_delta(a.vars(), Gamma::Full, a.delta().to_vec())
    }

    /// `Gamma = N_0^m` and delta the box `{0..b_1-1} x … x {0..b_m-1}` sorted by `order`.
    pub fn boxed(bounds: &[u32], order: &MonomialOrder) -> Result<SemigroupData> {
        if bounds.is_empty() || bounds.contains(&0) {
            return Err(Error::InvalidSemigroup(format!("box {bounds:?} must have positive sides")));
        }
        order.validate(bounds.len())?;
        let mut delta = box_monomials(bounds);
        delta.sort_by(|a, b| order.compare(a, b));
        Ok(SemigroupData::with_delta(bounds.len(), Gamma::Full, delta))
    }

    /// Numerical semigroup generated by `generators`, with the given weights
    /// (strictly increasing members of the semigroup).
    pub fn numerical(generators: &[u32], delta: &[u32]) -> Result<SemigroupData> {
        if generators.is_empty() || generators.contains(&0) {
            return Err(Error::InvalidSemigroup("generators must be positive and non-empty".into()));
        }
        if delta.is_empty() {
            return Err(Error::InvalidSemigroup("delta is empty".into()));
        }
        if delta.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSemigroup("delta must be strictly increasing".into()));
        }
        let top = *delta.last().expect("non-empty") as usize;
        let mut member = vec![false; top + 1];
        member[0] = true;
        for x in 1..=top {
            member[x] = generators.iter().any(|&g| g as usize <= x && member[x - g as usize]);
        }
        if let Some(&bad) = delta.iter().find(|&&d| !member[d as usize]) {
            return Err(Error::InvalidSemigroup(format!("{bad} is not in the semigroup")));
        }
        let gamma = Gamma::Numerical { generators: generators.to_vec(), member };
        Ok(SemigroupData::with_delta(1, gamma, delta.iter().map(|&d| vec![d]).collect()))
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.delta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.is_empty()
    }

    pub fn delta(&self) -> &[Vec<u32>] {
        &self.delta
    }

    pub fn generators(&self) -> Option<&[u32]> {
        match &self.gamma {
            Gamma::Full => None,
            Gamma::Numerical { generators, .. } => Some(generators),
        }
    }

    /// Membership of `x` in Gamma. For numerical semigroups only values up to
    /// `max(delta)` are decided, which is all the counts below ever need.
    fn contains(&self, x: &[u32]) -> bool {
        match &self.gamma {
            Gamma::Full => true,
            Gamma::Numerical { member, .. } => member.get(x[0] as usize).copied().unwrap_or(false),
        }
    }

    /// `eta - lambda` if it is componentwise non-negative and lies in Gamma.
    fn difference_in_gamma(&self, eta: &[u32], lambda: &[u32]) -> bool {
        let mut d = Vec::with_capacity(eta.len());
        for (&a, &b) in eta.iter().zip(lambda) {
            if a < b {
                return false;
            }
            d.push(a - b);
        }
        self.contains(&d)
    }

    fn check_in_delta(&self, x: &[u32]) -> Result<()> {
        if x.len() != self.r || !self.position.contains_key(x) {
            return Err(Error::NotInDelta(x.to_vec()));
        }
        Ok(())
    }

    pub fn index_of(&self, x: &[u32]) -> Option<usize> {
        self.position.get(x).copied()
    }

    fn sigma_at(&self, lambda: &[u32]) -> usize {
        self.delta.iter().filter(|eta| self.difference_in_gamma(eta, lambda)).count()
    }

    fn mu_at(&self, eta: &[u32]) -> usize {
        match &self.gamma {
            Gamma::Full => eta.iter().map(|&e| e as usize + 1).product(),
            Gamma::Numerical { member, .. } => {
                let e = eta[0] as usize;
                (0..=e).filter(|&l| member[l] && member[e - l]).count()
            }
        }
    }

    /// `sigma(alpha(i))` for `i = 1..=n`.
    pub fn sigma_row(&self) -> Vec<usize> {
        self.delta.iter().map(|l| self.sigma_at(l)).collect()
    }

    /// `mu(alpha(l))` for `l = 1..=n`.
    pub fn mu_row(&self) -> Vec<usize> {
        self.delta.iter().map(|e| self.mu_at(e)).collect()
    }

    /// Pairs `(i, j)` with `alpha(i) + alpha(j) = alpha(l)`, recorded as WB
    /// with rho `l`. This is the WB information the weight function gives
    /// for an evaluation basis indexed by `delta`.
    pub fn wb_table(&self) -> WbTable {
        let n = self.len();
        let mut table = WbTable::empty(n, Completeness::Partial);
        for (i, a) in self.delta.iter().enumerate() {
            for (j, b) in self.delta.iter().enumerate() {
                let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if let Some(l) = self.index_of(&sum) {
                    table.insert(i + 1, j + 1, WbEntry { status: WbStatus::Wb, rho: l }).expect("indices within 1..=n");
                }
            }
        }
        table
    }

    /// Index set of size `dim` chosen greedily by the order bound. Primary:
    /// the indices with the largest sigma. Dual: the indices left out of `I`
    /// are those with the largest mu. Ties go to the smaller index.
    pub fn greedy_index_set(&self, dim: usize, side: Side) -> Result<IndexSet> {
        let n = self.len();
        if dim == 0 || dim > n {
            return Err(Error::DimOutOfRange { dim, n });
        }
        let values = match side {
            Side::Primary => self.sigma_row(),
            Side::Dual => self.mu_row(),
        };
        let mut idx: Vec<usize> = (1..=n).collect();
        idx.sort_by(|&a, &b| values[b - 1].cmp(&values[a - 1]).then(a.cmp(&b)));
        let chosen = &idx[..dim];
        match side {
            Side::Primary => IndexSet::new(n, chosen.iter().copied()),
            Side::Dual => {
                let set = IndexSet::new(n, (1..=n).filter(|i| !chosen.contains(i)))?;
                set.non_empty()?;
                Ok(set)
            }
        }
    }
}

/// `#{eta in delta : eta - lambda in Gamma}`.
pub fn order_sigma(s: &SemigroupData, lambda: &[u32]) -> Result<usize> {
    s.check_in_delta(lambda)?;
    Ok(s.sigma_at(lambda))
}

/// `#{lambda in Gamma : eta - lambda in Gamma}`.
pub fn order_mu(s: &SemigroupData, eta: &[u32]) -> Result<usize> {
    s.check_in_delta(eta)?;
    Ok(s.mu_at(eta))
}

/// Primary: `min sigma(alpha(i)), i in I`; dual: `min mu(alpha(l)), l not in I`.
pub fn order_bound(s: &SemigroupData, indices: &IndexSet, side: Side) -> Result<usize> {
    if indices.n() != s.len() {
        return Err(Error::DimensionMismatch { expected: s.len(), got: indices.n() });
    }
    indices.non_empty()?;
    match side {
        Side::Primary => Ok(indices.iter().map(|i| s.sigma_at(&s.delta[i - 1])).min().expect("non-empty")),
        Side::Dual => indices.others().iter().map(|&l| s.mu_at(&s.delta[l - 1])).min().ok_or(Error::FullIndexSet(s.len())),
    }
}

/// A code over an algebra's evaluation basis together with its order bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignedCode {
    code: Code,
    designed_distance: usize,
}

impl DesignedCode {
    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn designed_distance(&self) -> usize {
        self.designed_distance
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        self.code.encode(message)
    }
}

pub fn construct_code(a: &MonomialAlgebra, indices: IndexSet, side: Side) -> Result<DesignedCode> {
    let s = SemigroupData::from_algebra(a);
    let designed_distance = order_bound(&s, &indices, side)?;
    let code = Code::new(a.eval_basis().clone(), indices, side)?;
    Ok(DesignedCode { code, designed_distance })
}

/// Index set of a code of dimension `target_dim` chosen greedily by the order
/// bound; see [`SemigroupData::greedy_index_set`].
pub fn design_improved_code(a: &MonomialAlgebra, target_dim: usize, side: Side) -> Result<IndexSet> {
    SemigroupData::from_algebra(a).greedy_index_set(target_dim, side)
}
