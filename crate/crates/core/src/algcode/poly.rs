use std::collections::BTreeMap;

use super::order::MonomialOrder;
use crate::gf::{Elem, Field};

/// Sparse polynomial in `m` variables over a finite field. Only nonzero
/// coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    m: usize,
    terms: BTreeMap<Vec<u32>, Elem>,
}

impl Poly {
    pub fn zero(field: &Field, m: usize) -> Poly {
        Poly { field: field.clone(), m, terms: BTreeMap::new() }
    }

    /// Sums the given terms; repeated exponents are added together.
    pub fn from_terms(field: &Field, m: usize, terms: impl IntoIterator<Item = (Vec<u32>, Elem)>) -> Poly {
        let mut p = Poly::zero(field, m);
        for (e, c) in terms {
            assert_eq!(e.len(), m, "exponent vector has wrong length");
            p.add_term(e, c);
        }
        p
    }

    pub fn monomial(field: &Field, exponent: Vec<u32>) -> Poly {
        let m = exponent.len();
        Poly::from_terms(field, m, [(exponent, field.one())])
    }

    fn add_term(&mut self, e: Vec<u32>, c: Elem) {
        let f = &self.field;
        let entry = self.terms.entry(e).or_insert(Elem::ZERO);
        *entry = f.add(*entry, c);
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn vars(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], Elem)> + '_ {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::from_terms(f, self.m, self.terms.iter().map(|(e, &a)| (e.clone(), f.mul(a, c))))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let mut out = Poly::zero(f, self.m);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, f.mul(ca, cb));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Elem]) -> Elem {
        let f = &self.field;
        self.terms.iter().fold(Elem::ZERO, |acc, (e, &c)| {
            let t = e.iter().zip(point).fold(c, |t, (&k, &x)| f.mul(t, f.pow(x, k as u64)));
            f.add(acc, t)
        })
    }

    /// The largest exponent with nonzero coefficient, or `None` for 0.
    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&[u32]> {
        self.terms.keys().max_by(|a, b| order.compare(a, b)).map(Vec::as_slice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcode::order::OrderKind;
    use proptest::prelude::*;

    fn poly_strategy() -> impl Strategy<Value = Vec<(Vec<u32>, u64)>> {
        prop::collection::vec((prop::collection::vec(0u32..4, 2), 0u64..7), 0..6)
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let f = Field::prime(5).unwrap();
        let x = Poly::monomial(&f, vec![1, 0]);
        let y = Poly::monomial(&f, vec![0, 1]);
        let one = Poly::monomial(&f, vec![0, 0]);
        let p = x.add(&one).mul(&y.add(&one)); // XY + X + Y + 1
        assert_eq!(p.terms().count(), 4);
        assert_eq!(p.eval(&[f.from_int(2), f.from_int(3)]), f.from_int(12));
        assert!(p.add(&p.scale(f.from_int(-1))).is_zero());
    }

    proptest! {
        #[test]
        fn leading_monomials_add_under_multiplication(a in poly_strategy(), b in poly_strategy(), k in 0usize..3) {
            let f = Field::prime(7).unwrap();
            let kind = [OrderKind::GradedLex, OrderKind::Lex, OrderKind::GradedReverseLex][k];
            let o = MonomialOrder::new(kind, vec![]);
            let mk = |t: &[(Vec<u32>, u64)]| Poly::from_terms(&f, 2, t.iter().map(|(e, c)| (e.clone(), f.elem(*c).unwrap())));
            let (pa, pb) = (mk(&a), mk(&b));
            let prod = pa.mul(&pb);
            match (pa.leading_monomial(&o), pb.leading_monomial(&o)) {
                (Some(la), Some(lb)) => {
                    let sum: Vec<u32> = la.iter().zip(lb).map(|(x, y)| x + y).collect();
                    prop_assert_eq!(prod.leading_monomial(&o), Some(sum.as_slice()));
                }
                _ => prop_assert!(prod.is_zero()),
            }
        }
    }
}
