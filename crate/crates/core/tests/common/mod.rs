#![allow(dead_code)]

use rand::Rng;
use wbcode::algcode::{build_algebra, MonomialAlgebra, MonomialOrder, Poly};
use wbcode::fqla::Matrix;
use wbcode::wbcore::IndexedBasis;
use wbcode::{Elem, Field};

pub fn gf4() -> Field {
    Field::new(2, 2, Some(&[1, 1, 1])).unwrap()
}

pub fn elems(f: &Field, values: &[u64]) -> Vec<Elem> {
    values.iter().map(|&v| f.elem(v).unwrap()).collect()
}

pub fn ints(v: &[Elem]) -> Vec<u32> {
    v.iter().map(|e| e.value()).collect()
}

/// `{1,2,3} x {1,2,3}` over F_5 with graded-lex, `X < Y`.
pub fn f5_grid() -> MonomialAlgebra {
    let f = Field::prime(5).unwrap();
    let s = elems(&f, &[1, 2, 3]);
    build_algebra(&f, MonomialOrder::graded_lex(vec![1, 0]), vec![s.clone(), s]).unwrap()
}

/// `{0,1,a} x {1,a}` over F_4 = F_2[T]/(T^2+T+1), `a` the class of `T`.
pub fn f4_grid() -> MonomialAlgebra {
    let f = gf4();
    build_algebra(&f, MonomialOrder::graded_lex(vec![1, 0]), vec![elems(&f, &[0, 1, 2]), elems(&f, &[1, 2])]).unwrap()
}

/// Two-variable polynomial from `(deg_x, deg_y, coefficient)` triples.
pub fn poly2(f: &Field, terms: &[(u32, u32, u64)]) -> Poly {
    Poly::from_terms(f, 2, terms.iter().map(|&(a, b, c)| (vec![a, b], f.elem(c).unwrap())))
}

/// Polynomials whose evaluations form the dual basis of the F_5 grid basis.
pub fn f5_dual_polys(f: &Field) -> Vec<Poly> {
    let t: [&[(u32, u32, u64)]; 9] = [
        &[(2, 2, 1), (1, 2, 1), (2, 1, 1), (1, 1, 1)],
        &[(2, 2, 1), (1, 2, 3), (2, 1, 1), (0, 2, 1), (1, 1, 3), (0, 1, 1)],
        &[(2, 2, 1), (1, 2, 1), (2, 1, 3), (1, 1, 3), (2, 0, 1), (1, 0, 1)],
        &[(1, 2, 1), (0, 2, 1), (1, 1, 1), (0, 1, 1)],
        &[(2, 2, 1), (1, 2, 3), (2, 1, 3), (0, 2, 1), (1, 1, 4), (2, 0, 1), (0, 1, 3), (1, 0, 3), (0, 0, 1)],
        &[(2, 1, 1), (1, 1, 1), (2, 0, 1), (1, 0, 1)],
        &[(1, 2, 1), (0, 2, 1), (1, 1, 3), (0, 1, 3), (1, 0, 1), (0, 0, 1)],
        &[(2, 1, 1), (1, 1, 3), (2, 0, 1), (0, 1, 1), (1, 0, 3), (0, 0, 1)],
        &[(1, 1, 1), (0, 1, 1), (1, 0, 1), (0, 0, 1)],
    ];
    t.iter().map(|terms| poly2(f, terms)).collect()
}

/// Same for the F_4 grid; `a = 2` and `a + 1 = 3` in the integer encoding.
pub fn f4_dual_polys(f: &Field) -> Vec<Poly> {
    let t: [&[(u32, u32, u64)]; 6] = [
        &[(1, 0, 2), (0, 0, 1)],
        &[(2, 0, 2), (0, 0, 3)],
        &[(1, 1, 2), (0, 1, 1), (1, 0, 1), (0, 0, 3)],
        &[(2, 0, 1), (1, 0, 3), (0, 0, 2)],
        &[(2, 1, 2), (2, 0, 1), (0, 1, 3), (0, 0, 2)],
        &[(2, 1, 1), (1, 1, 3), (2, 0, 3), (0, 1, 2), (1, 0, 2), (0, 0, 1)],
    ];
    t.iter().map(|terms| poly2(f, terms)).collect()
}

/// Calls `visit` on every vector of the row space of `rows` (including 0).
pub fn for_each_codeword(f: &Field, rows: &[Vec<Elem>], n: usize, mut visit: impl FnMut(&[Elem])) {
    let all: Vec<Elem> = f.elements().collect();
    let q = all.len();
    let k = rows.len();
    let mut digits = vec![0usize; k];
    let mut word = vec![f.zero(); n];
    loop {
        visit(&word);
        // odometer step, updating the codeword by the change in one coefficient
        let mut pos = 0;
        loop {
            if pos == k {
                return;
            }
            let old = all[digits[pos]];
            digits[pos] = (digits[pos] + 1) % q;
            let delta = f.sub(all[digits[pos]], old);
            for (w, &r) in word.iter_mut().zip(&rows[pos]) {
                *w = f.add(*w, f.mul(delta, r));
            }
            if digits[pos] != 0 {
                break;
            }
            pos += 1;
        }
    }
}

/// Minimum weight of a nonzero vector in the row space of `rows`
/// (assumed linearly independent).
pub fn brute_min_distance(f: &Field, rows: &[Vec<Elem>], n: usize) -> usize {
    let mut best = usize::MAX;
    for_each_codeword(f, rows, n, |w| {
        let wt = w.iter().filter(|x| !x.is_zero()).count();
        if wt > 0 {
            best = best.min(wt);
        }
    });
    best
}

pub fn random_vector(f: &Field, n: usize, rng: &mut impl Rng) -> Vec<Elem> {
    (0..n).map(|_| f.elem(rng.gen_range(0..f.order() as u64)).unwrap()).collect()
}

pub fn random_basis(f: &Field, n: usize, rng: &mut impl Rng) -> IndexedBasis {
    loop {
        let rows: Vec<Vec<Elem>> = (0..n).map(|_| random_vector(f, n, rng)).collect();
        if Matrix::from_rows(f, n, &rows).unwrap().rank() == n {
            return IndexedBasis::new(f, rows).unwrap();
        }
    }
}

pub fn small_fields() -> Vec<Field> {
    vec![Field::prime(2).unwrap(), Field::prime(3).unwrap(), gf4(), Field::prime(5).unwrap()]
}

/// Random error of exact weight `t` with uniform support and nonzero values.
pub fn random_error(f: &Field, n: usize, t: usize, rng: &mut impl Rng) -> Vec<Elem> {
    let mut e = vec![f.zero(); n];
    for pos in rand::seq::index::sample(rng, n, t) {
        e[pos] = f.elem(rng.gen_range(1..f.order() as u64)).unwrap();
    }
    e
}
