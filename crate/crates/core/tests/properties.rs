use num::{BigInt, BigRational};
use proptest::prelude::*;

use qgr_core::coeff::{LaurentScalar, ScalarMatrix};
use qgr_core::grassmann::{
    e_project_grass, eval_embed, minor_generators, r_embed_grass, relation_basis, MinorExpr,
};
use qgr_core::limits::{limit_equal, rho_project, LimitElement, MayaDiagram};
use qgr_core::qmatrix::{
    comul, comul_factor, counit_factor, level_project_e, Gen, Level, NCPoly, Word,
};
use qgr_core::qsl::{
    antipode, quantum_det, sl_equal, sl_ideal_membership, AntipodeConvention, SlElement,
};

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn scalar() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-3i32..=3, -5i64..=5, 1i64..=3), 0..4).prop_map(|ts| {
        LaurentScalar::from_terms(ts.into_iter().map(|(e, n, d)| (e, rational(n, d))))
    })
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    (1i64..=4, 1i64..=3, any::<bool>()).prop_map(|(n, d, neg)| rational(if neg { -n } else { n }, d))
}

fn word(level: Level, max_len: usize) -> impl Strategy<Value = Vec<Gen>> {
    let gens = level.generators();
    prop::collection::vec(prop::sample::select(gens), 0..=max_len)
}

fn poly(level: Level, max_len: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((word(level, max_len), -3i64..=3), 1..3).prop_map(move |ts| {
        NCPoly::from_words(
            level,
            ts.into_iter().map(|(w, c)| (w, LaurentScalar::from_int(c))),
        )
        .unwrap()
    })
}

fn lvl(m: i32, n: i32) -> Level {
    Level::new(m, n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_ring_laws(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn specialization_is_multiplicative(x in scalar(), y in scalar(), v in nonzero_rational()) {
        let lhs = (&x * &y).specialize(&v).unwrap();
        prop_assert_eq!(lhs, x.specialize(&v).unwrap() * y.specialize(&v).unwrap());
    }

    #[test]
    fn kernel_vectors_annihilate(rows in 1usize..4, cols in 1usize..5, seed in prop::collection::vec(scalar(), 16)) {
        let entries: Vec<Vec<LaurentScalar>> = (0..rows)
            .map(|r| (0..cols).map(|c| seed[(r * cols + c) % seed.len()].clone()).collect())
            .collect();
        let m = ScalarMatrix::from_rows(entries).unwrap();
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len() + m.rank(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(LaurentScalar::is_zero));
        }
        if !kernel.is_empty() {
            let k = ScalarMatrix::from_columns(cols, kernel.clone()).unwrap();
            prop_assert_eq!(k.rank(), kernel.len());
        }
    }

    #[test]
    fn normalization_is_idempotent(x in poly(lvl(2, 2), 4)) {
        let again = NCPoly::from_words(
            x.level(),
            x.terms().iter().map(|(w, c)| (w.letters().to_vec(), c.clone())),
        ).unwrap();
        prop_assert_eq!(again, x);
    }

    #[test]
    fn multiplication_is_associative(
        u in word(lvl(1, 2), 3), v in word(lvl(1, 2), 3), w in word(lvl(1, 2), 3)
    ) {
        let l = lvl(1, 2);
        let p = |x: &Vec<Gen>| NCPoly::normalize(l, x, LaurentScalar::one()).unwrap();
        let (a, b, c) = (p(&u), p(&v), p(&w));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn q_one_is_commutative_sorting(w in word(lvl(2, 2), 5), c in scalar()) {
        prop_assume!(!c.is_zero());
        let x = NCPoly::normalize(lvl(2, 2), &w, c.clone()).unwrap();
        let mut sorted = w.clone();
        sorted.sort();
        let mut expected = std::collections::BTreeMap::new();
        let v = c.at_one();
        if v != BigRational::from_integer(0.into()) {
            expected.insert(Word::new(sorted), v);
        }
        prop_assert_eq!(x.at_one(), expected);
    }

    #[test]
    fn coassociative_and_counital(x in poly(lvl(1, 1), 2)) {
        let d = comul(&x).unwrap();
        prop_assert_eq!(comul_factor(&d, 0).unwrap(), comul_factor(&d, 1).unwrap());
        prop_assert_eq!(counit_factor(&d, 0).unwrap().into_poly(), x.clone());
        prop_assert_eq!(counit_factor(&d, 1).unwrap().into_poly(), x);
    }

    #[test]
    fn e_maps_compose(x in poly(lvl(3, 3), 2)) {
        let (mid, low) = (lvl(2, 2), lvl(1, 1));
        let direct = level_project_e(&x, low).unwrap();
        let staged = level_project_e(&level_project_e(&x, mid).unwrap(), low).unwrap();
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn e_map_is_multiplicative(x in poly(lvl(2, 2), 2), y in poly(lvl(2, 2), 2)) {
        let low = lvl(1, 2);
        let lhs = level_project_e(&(&x * &y), low).unwrap();
        let rhs = &level_project_e(&x, low).unwrap() * &level_project_e(&y, low).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn determinant_multiples_are_members(y in poly(lvl(1, 1), 2)) {
        let d = quantum_det(lvl(1, 1));
        let one = NCPoly::one(lvl(1, 1));
        prop_assert!(sl_ideal_membership(&(&(&d - &one) * &y)));
        prop_assert!(sl_ideal_membership(&(&y * &(&(&d * &d) - &one))));
    }

    #[test]
    fn antipode_is_anti_multiplicative(
        g in prop::sample::select(lvl(1, 2).generators()),
        h in prop::sample::select(lvl(1, 2).generators()),
    ) {
        let l = lvl(1, 2);
        let t = AntipodeConvention::Transposed;
        let x = NCPoly::gen(l, g.row, g.col).unwrap();
        let y = NCPoly::gen(l, h.row, h.col).unwrap();
        let lhs = SlElement::new(antipode(&(&x * &y), t).unwrap());
        let rhs = SlElement::new(&antipode(&y, t).unwrap() * &antipode(&x, t).unwrap());
        prop_assert!(sl_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn antipode_axiom_on_products(x in poly(lvl(1, 1), 2)) {
        // m (S ⊗ id) Δ (x) = ε(x) in the quotient
        let t = AntipodeConvention::Transposed;
        let d = comul(&x).unwrap();
        let applied = d.map_factor(0, lvl(1, 1), |w| {
            antipode(&NCPoly::from_words(lvl(1, 1), [(w.letters().to_vec(), LaurentScalar::one())]).unwrap(), t)
        }).unwrap();
        let lhs = SlElement::new(applied.multiply().unwrap());
        let eps = counit_factor(&counit_factor(&d, 0).unwrap(), 0).unwrap().into_scalar();
        let rhs = SlElement::new(NCPoly::scalar(lvl(1, 1), eps));
        prop_assert!(sl_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn relations_evaluate_to_zero(m in 1i32..=2, n in 1i32..=2, d in 1usize..=2) {
        let l = Level::rect(m, n).unwrap();
        for rel in relation_basis(l, d, false) {
            prop_assert!(eval_embed(&rel.to_expr()).is_zero());
        }
    }

    #[test]
    fn e_after_r_is_identity(m in 1i32..=2, n in 1i32..=2, dm in 0i32..=2, dn in 0i32..=2) {
        let (lo, hi) = (Level::rect(m, n).unwrap(), Level::rect(m + dm, n + dn).unwrap());
        for rows in minor_generators(lo) {
            let x = MinorExpr::generator(lo, rows).unwrap();
            let back = e_project_grass(&r_embed_grass(&x, hi).unwrap(), lo).unwrap();
            prop_assert_eq!(back, x);
        }
    }

    #[test]
    fn r_embed_is_multiplicative(i in 0usize..3, j in 0usize..3) {
        let (lo, hi) = (Level::rect(1, 2).unwrap(), Level::rect(2, 3).unwrap());
        let gens = minor_generators(lo);
        let a = MinorExpr::generator(lo, gens[i].clone()).unwrap();
        let b = MinorExpr::generator(lo, gens[j].clone()).unwrap();
        let lhs = r_embed_grass(&a.try_mul(&b).unwrap(), hi).unwrap();
        let rhs = r_embed_grass(&a, hi).unwrap().try_mul(&r_embed_grass(&b, hi).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

fn diagram() -> impl Strategy<Value = MayaDiagram> {
    prop::sample::select(MayaDiagram::enumerate(4, -3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tilde_inverts_truncation(a in diagram(), extra in 0usize..3) {
        let m = a.order() - 1 + extra;
        prop_assume!(m >= 1);
        prop_assert_eq!(MayaDiagram::from_rows(&a.truncate(m), m).unwrap(), a);
    }

    #[test]
    fn rho_commutes_with_e(a in diagram(), b in diagram(), m in 1i32..=3, n in 1i32..=3, dm in 0i32..=2, dn in 0i32..=2) {
        let x = LimitElement::generator(a).mul(&LimitElement::generator(b));
        let (lo, hi) = (Level::rect(m, n).unwrap(), Level::rect(m + dm, n + dn).unwrap());
        let projected = e_project_grass(&rho_project(&x, hi), lo).unwrap();
        prop_assert_eq!(projected, rho_project(&x, lo));
    }

    #[test]
    fn distinct_generators_differ(a in diagram(), b in diagram()) {
        let x = LimitElement::generator(a.clone());
        let y = LimitElement::generator(b.clone());
        prop_assert_eq!(limit_equal(&x, &y), a == b);
    }
}
