mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use wbcode::algcode::{
    build_algebra, order_sigma, semigroup_wb_table, MonomialAlgebra, MonomialOrder, OrderKind, Poly, SemigroupData,
};
use wbcode::fqla::{dot, Matrix};
use wbcode::frdecode::{decode, DecoderSetup};
use wbcode::wbcore::{
    build_wb_table, classify_pair, dualize, ghw_bound, lambda_set, sigma_row, star, BuildMode, Code, IndexSet,
    IndexedBasis, Side, Variant, WbStatus, WbTable,
};
use wbcode::{Elem, Field};

fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
    (0usize..3, any::<bool>()).prop_map(|(k, swap)| {
        let kind = [OrderKind::GradedLex, OrderKind::Lex, OrderKind::GradedReverseLex][k];
        MonomialOrder::new(kind, if swap { vec![1, 0] } else { vec![0, 1] })
    })
}

/// Grid over F_7 with the first `a` and the last `b` field elements.
fn grid(a: usize, b: usize, order: MonomialOrder) -> MonomialAlgebra {
    let f = Field::prime(7).unwrap();
    let all: Vec<Elem> = f.elements().collect();
    build_algebra(&f, order, vec![all[..a].to_vec(), all[7 - b..].to_vec()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn delta_is_the_box_in_increasing_order(a in 1usize..5, b in 1usize..5, order in order_strategy()) {
        let alg = grid(a, b, order.clone());
        prop_assert_eq!(alg.len(), a * b);
        let mut expected: Vec<Vec<u32>> =
            (0..a as u32).flat_map(|x| (0..b as u32).map(move |y| vec![x, y])).collect();
        expected.sort_by(|p, q| order.compare(p, q));
        prop_assert_eq!(alg.delta(), expected.as_slice());
        prop_assert_eq!(alg.delta()[0].clone(), vec![0, 0]);
    }

    #[test]
    fn semigroup_pairs_are_wb_and_order_bound_is_below_exhaustive(
        a in 1usize..5, b in 1usize..5, order in order_strategy()
    ) {
        let alg = grid(a, b, order);
        let basis = alg.eval_basis();
        for ((i, j), e) in semigroup_wb_table(&alg).iter() {
            let (status, rho) = classify_pair(basis, basis, i, j).unwrap();
            prop_assert_eq!(status, WbStatus::Wb);
            prop_assert_eq!(rho, e.rho);
        }
        let sigma = sigma_row(&build_wb_table(basis, basis, BuildMode::Exhaustive).unwrap(), Variant::Wb);
        let s = SemigroupData::from_algebra(&alg);
        for i in 1..=alg.len() {
            prop_assert!(sigma[i - 1] >= order_sigma(&s, alg.alpha(i)).unwrap());
        }
    }

    #[test]
    fn evaluation_is_multiplicative(
        p in prop::collection::vec((0u32..6, 0u32..6, 0u64..7), 0..5),
        q in prop::collection::vec((0u32..6, 0u32..6, 0u64..7), 0..5),
    ) {
        let alg = grid(3, 4, MonomialOrder::graded_lex(vec![]));
        let f = alg.field().clone();
        let (pp, pq) = (poly2(&f, &p), poly2(&f, &q));
        let lhs = star(&f, &alg.ev(&pp), &alg.ev(&pq)).unwrap();
        prop_assert_eq!(lhs, alg.ev(&pp.mul(&pq)));
    }
}

#[test]
fn dual_basis_polynomials_have_expected_leading_monomials() {
    // h_k of the F_5 grid has rho_H value k and lies in the span of g_1..g_n
    let a = f5_grid();
    let f = a.field().clone();
    let h = dualize(a.eval_basis());
    for (k, p) in f5_dual_polys(&f).iter().enumerate() {
        assert_eq!(h.rho_bar(&a.ev(p)).unwrap(), k + 1);
    }
    let zero = Poly::zero(&f, 2);
    assert!(a.ev(&zero).iter().all(|x| x.is_zero()));
}

#[test]
fn setup_without_table_matches_exhaustive_classification() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for f in small_fields() {
        let g = random_basis(&f, 6, &mut rng);
        let u = random_basis(&f, 6, &mut rng);
        let setup = DecoderSetup::new(g.clone(), Some(u.clone()), IndexSet::prefix(6, 2), None).unwrap();
        let direct = build_wb_table(&dualize(&g), &u, BuildMode::Exhaustive).unwrap();
        assert_eq!(setup.table(), &direct);
        for ((i, j), e) in direct.iter() {
            assert_eq!(classify_pair(setup.h(), &u, i, j).unwrap(), (e.status, e.rho));
        }
    }
}

/// Rank of the top-left block of `(s_vw)` built from the planted error.
fn true_rank(setup: &DecoderSetup, e: &[Elem], rows: usize, cols: usize) -> usize {
    if rows == 0 || cols == 0 {
        return 0;
    }
    let f = setup.field();
    let m: Vec<Vec<Elem>> = (1..=rows)
        .map(|v| (1..=cols).map(|w| dot(f, &star(f, setup.h().vector(v), setup.u().vector(w)).unwrap(), e)).collect())
        .collect();
    Matrix::from_rows(f, cols, &m).unwrap().rank()
}

/// Random bases and random grid codes with exhaustive tables; planted errors
/// within the radius.
#[test]
fn decoding_within_radius_matches_rank_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let fields = small_fields();
    let (mut decoded, mut with_errors) = (0, 0);
    for trial in 0..160 {
        let (f, g) = if trial % 2 == 0 {
            let f = fields[trial / 2 % fields.len()].clone();
            let n = rng.gen_range(4..=9);
            let g = random_basis(&f, n, &mut rng);
            (f, g)
        } else {
            let kind = [OrderKind::GradedLex, OrderKind::Lex, OrderKind::GradedReverseLex][rng.gen_range(0..3)];
            let alg = grid(rng.gen_range(2..=5), rng.gen_range(2..=5), MonomialOrder::new(kind, vec![]));
            (alg.field().clone(), alg.eval_basis().clone())
        };
        let n = g.len();
        // favour small indices so that grid codes get useful bounds
        let members: Vec<usize> = (1..=n).filter(|&i| rng.gen_bool(0.9 * (1.0 - i as f64 / n as f64))).collect();
        let Ok(indices) = IndexSet::new(n, members).and_then(|s| s.non_empty().cloned()) else {
            continue;
        };
        let setup = DecoderSetup::new(g.clone(), None, indices.clone(), None).unwrap();
        let Some(t) = setup.radius() else {
            continue;
        };
        let f = &f;
        let code = Code::new(g.clone(), indices.clone(), Side::Primary).unwrap();
        let c = code.encode(&random_vector(f, indices.len(), &mut rng)).unwrap();
        let e = random_error(f, n, t, &mut rng);
        let r: Vec<Elem> = c.iter().zip(&e).map(|(&x, &y)| f.add(x, y)).collect();

        let mut state = setup.init_syndromes(&r).unwrap();
        while let Some(l) = (1..=n).find(|&k| state.syndromes()[k - 1].is_none()) {
            let truth = dot(f, setup.h().vector(l), &e);
            let candidates = state.find_candidates(l).unwrap();
            // candidates are exactly the WB pairs with equal ranks of the three blocks
            let expected: Vec<(usize, usize)> = setup
                .table()
                .iter()
                .filter(|(_, en)| en.status == WbStatus::Wb && en.rho == l)
                .map(|(p, _)| p)
                .filter(|&(i, j)| {
                    let r0 = true_rank(&setup, &e, i - 1, j - 1);
                    r0 == true_rank(&setup, &e, i, j - 1) && r0 == true_rank(&setup, &e, i - 1, j)
                })
                .collect();
            assert_eq!(candidates, expected, "trial {trial}, l = {l}");
            let round = state.step().unwrap().unwrap();
            assert_eq!(round.chosen, Some(truth), "trial {trial}, l = {l}, tally {:?}", round.tally);
            let majority = round.votes.iter().filter(|&&v| v == truth).count();
            assert!(2 * majority > round.votes.len());
        }
        let out = state.finish().unwrap();
        assert_eq!(out.error, e);
        assert_eq!(out.codeword, c);
        for i in 1..=n {
            assert_eq!(dot(f, setup.h().vector(i), &out.error), out.syndromes[i - 1]);
        }
        let bar = indices.complement();
        assert!(bar.iter().all(|l| dot(f, setup.h().vector(l), &out.codeword).is_zero()));
        decoded += 1;
        if t > 0 {
            with_errors += 1;
        }
    }
    assert!(decoded >= 60 && with_errors >= 20, "decoded {decoded}, with errors {with_errors}");
}

#[test]
fn decoding_is_deterministic_and_serializable() {
    let a = f5_grid();
    let f = a.field().clone();
    let setup =
        DecoderSetup::new(a.eval_basis().clone(), None, IndexSet::new(9, [1, 2, 3, 5]).unwrap(), Some(&semigroup_wb_table(&a)))
            .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..20 {
        // two errors exceed the radius; the outcome must still be reproducible
        let r = random_vector(&f, 9, &mut rng);
        let first = decode(&setup, &r);
        assert_eq!(first, decode(&setup, &r));
        if let Ok(out) = first {
            let json = serde_json::to_string(&out.transcript).unwrap();
            let back: wbcode::frdecode::Transcript = serde_json::from_str(&json).unwrap();
            assert_eq!(back, out.transcript);
        }
    }
}

#[test]
fn ghw_bounds_are_sound_on_small_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let f = Field::prime(3).unwrap();
    for _ in 0..30 {
        let n = rng.gen_range(3..=6);
        let g = random_basis(&f, n, &mut rng);
        let table = build_wb_table(&g, &g, BuildMode::Exhaustive).unwrap();
        let members: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
        let Ok(indices) = IndexSet::new(n, members).and_then(|s| s.non_empty().cloned()) else {
            continue;
        };
        for side in [Side::Primary, Side::Dual] {
            let Ok(code) = Code::new(g.clone(), indices.clone(), side) else { continue };
            let rows = code.generator_matrix().row_vectors();
            if rows.len() < 2 {
                continue;
            }
            let mut words = Vec::new();
            for_each_codeword(&f, &rows, n, |w| words.push(w.to_vec()));
            let mut d2 = usize::MAX;
            for x in 0..words.len() {
                for y in x + 1..words.len() {
                    if Matrix::from_rows(&f, n, &[words[x].clone(), words[y].clone()]).unwrap().rank() == 2 {
                        let size = (0..n).filter(|&k| !words[x][k].is_zero() || !words[y][k].is_zero()).count();
                        d2 = d2.min(size);
                    }
                }
            }
            for variant in [Variant::Wb, Variant::Owb] {
                let bound = ghw_bound(&code, &table, variant, 2).unwrap();
                assert!(bound <= d2, "{side:?} {:?}: bound {bound} > d_2 {d2}", indices.members());
            }
        }
    }
}

#[test]
fn ghw_at_full_dimension_is_the_union_of_all_rows() {
    let a = f5_grid();
    let table = semigroup_wb_table(&a);
    let indices = IndexSet::new(9, [1, 2, 3, 5]).unwrap();
    let code = Code::new(a.eval_basis().clone(), indices.clone(), Side::Primary).unwrap();
    let union: std::collections::BTreeSet<usize> =
        indices.iter().flat_map(|i| lambda_set(&table, Variant::Wb, i)).collect();
    assert_eq!(ghw_bound(&code, &table, Variant::Wb, 4).unwrap(), union.len());
    assert!(ghw_bound(&code, &table, Variant::Wb, 5).is_err());
}

#[test]
fn seeded_table_is_partial_copy_of_semigroup_table() {
    let a = f5_grid();
    let seed = semigroup_wb_table(&a);
    let t = build_wb_table(a.eval_basis(), a.eval_basis(), BuildMode::FromSeed(&seed)).unwrap();
    assert_eq!(t.len(), 36);
    assert!(!t.is_exhaustive());
    let json = serde_json::to_string(&t).unwrap();
    let back: WbTable = serde_json::from_str(&json).unwrap();
    assert_eq!(back, t);
}

#[test]
fn identity_basis_dualizes_to_reversed_identity() {
    let f = Field::prime(2).unwrap();
    let id = IndexedBasis::standard(&f, 5);
    let h = dualize(&id);
    for k in 1..=5 {
        assert_eq!(h.vector(k), id.vector(6 - k));
    }
}
