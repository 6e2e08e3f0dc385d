use std::collections::HashMap;

use super::order::MonomialOrder;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::fqla::axpy;
use crate::gf::{Elem, Field};
use super::semigroup::SemigroupData;
use crate::wbcore::{IndexedBasis, WbTable};

pub const MAX_POINTS: usize = 4096;

/// `F_q[X_1, …, X_m]` evaluated on a Cartesian product of point sets.
///
/// Points are enumerated row-major: the first coordinate varies slowest and
/// each `S_k` is taken in the order given.
#[derive(Clone, Debug)]
pub struct MonomialAlgebra {
    field: Field,
    order: MonomialOrder,
    point_sets: Vec<Vec<Elem>>,
    points: Vec<Vec<Elem>>,
    delta: Vec<Vec<u32>>,
    position: HashMap<Vec<u32>, usize>,
    eval_basis: IndexedBasis,
}

/// Incrementally maintained echelon form used to test whether a new vector
/// enlarges a span.
struct SpanTracker {
    field: Field,
    // (pivot column, row normalized to 1 at the pivot)
    rows: Vec<(usize, Vec<Elem>)>,
}

impl SpanTracker {
    fn new(field: &Field) -> SpanTracker {
        SpanTracker { field: field.clone(), rows: Vec::new() }
    }

    /// Adds `v` if it lies outside the current span; returns whether it did.
    fn insert(&mut self, mut v: Vec<Elem>) -> bool {
        let f = &self.field;
        for (p, row) in &self.rows {
            let c = v[*p];
            if !c.is_zero() {
                axpy(f, &mut v, f.neg(c), row);
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(v[p]).expect("nonzero");
        let v: Vec<Elem> = v.iter().map(|&x| f.mul(x, inv)).collect();
        self.rows.push((p, v));
        true
    }
}

fn check_point_sets(field: &Field, point_sets: &[Vec<Elem>]) -> Result<usize> {
    let mut n = 1usize;
    for (k, set) in point_sets.iter().enumerate() {
        if set.is_empty() {
            return Err(Error::EmptyPointSet(k));
        }
        let mut seen = vec![false; field.order() as usize];
        for &x in set {
            let v = field.encode(x);
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::DuplicatePoint { set: k, value: v });
            }
        }
        n = n.saturating_mul(set.len());
    }
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints(n));
    }
    Ok(n)
}

fn cartesian(point_sets: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    point_sets.iter().fold(vec![Vec::new()], |acc, set| {
        acc.iter()
            .flat_map(|prefix| {
                set.iter().map(move |&x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect()
    })
}

/// Builds the algebra and its evaluation basis `b_i = ev(X^alpha(i))`.
///
/// `alpha(1) < alpha(2) < …` are found by scanning monomials in increasing
/// order and keeping those whose evaluation enlarges the span. Only monomials
/// with `exponent_k < |S_k|` are scanned: any other monomial reduces modulo
/// `prod_{s in S_k} (X_k - s)` to smaller monomials and cannot enlarge it.
pub fn build_algebra(field: &Field, order: MonomialOrder, point_sets: Vec<Vec<Elem>>) -> Result<MonomialAlgebra> {
    let m = point_sets.len();
    if m == 0 {
        return Err(Error::EmptyPointSet(0));
    }
    order.validate(m)?;
    let n = check_point_sets(field, &point_sets)?;
    let points = cartesian(&point_sets);

    let bounds: Vec<u32> = point_sets.iter().map(|s| s.len() as u32).collect();
    let mut scan = box_monomials(&bounds);
    scan.sort_by(|a, b| order.compare(a, b));

    // powers[k][e][p] = (S_k[p])^e
    let powers: Vec<Vec<Vec<Elem>>> = point_sets
        .iter()
        .map(|set| (0..set.len() as u64).map(|e| set.iter().map(|&x| field.pow(x, e)).collect()).collect())
        .collect();
    let sizes: Vec<usize> = point_sets.iter().map(Vec::len).collect();
    let ev_monomial = |e: &[u32]| -> Vec<Elem> {
        let mut v = vec![field.one(); n];
        for (idx, slot) in v.iter_mut().enumerate() {
            let mut rest = idx;
            for k in (0..m).rev() {
                let p = rest % sizes[k];
                rest /= sizes[k];
                *slot = field.mul(*slot, powers[k][e[k] as usize][p]);
            }
        }
        v
    };

    let mut tracker = SpanTracker::new(field);
    let mut delta = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    for e in scan {
        if delta.len() == n {
            break;
        }
        let v = ev_monomial(&e);
        if tracker.insert(v.clone()) {
            delta.push(e);
            vectors.push(v);
        }
    }
    let eval_basis = IndexedBasis::new(field, vectors)?;
    let position = delta.iter().enumerate().map(|(i, e)| (e.clone(), i + 1)).collect();
    Ok(MonomialAlgebra { field: field.clone(), order, point_sets, points, delta, position, eval_basis })
}

/// All exponent vectors with `e_k < bounds[k]`.
pub(crate) fn box_monomials(bounds: &[u32]) -> Vec<Vec<u32>> {
    bounds.iter().fold(vec![Vec::new()], |acc, &b| {
        acc.iter()
            .flat_map(|prefix| {
                (0..b).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect()
    })
}

impl MonomialAlgebra {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> usize {
        self.point_sets.len()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn point_sets(&self) -> &[Vec<Elem>] {
        &self.point_sets
    }

    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    /// `alpha(1), …, alpha(n)` in increasing order.
    pub fn delta(&self) -> &[Vec<u32>] {
        &self.delta
    }

    /// `alpha(i)`, 1-based.
    pub fn alpha(&self, i: usize) -> &[u32] {
        &self.delta[i - 1]
    }

    /// The index `i` with `alpha(i) = e`, if `e` is in delta.
    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.position.get(e).copied()
    }

    pub fn eval_basis(&self) -> &IndexedBasis {
        &self.eval_basis
    }

    pub fn ev(&self, p: &Poly) -> Vec<Elem> {
        self.points.iter().map(|pt| p.eval(pt)).collect()
    }
}

/// WB information from the weight function: `(i, j)` is WB with rho `l`
/// whenever `alpha(i) + alpha(j) = alpha(l)`.
pub fn semigroup_wb_table(a: &MonomialAlgebra) -> WbTable {
    SemigroupData::from_algebra(a).wb_table()
}
