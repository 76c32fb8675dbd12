use num::{BigInt, BigRational};
use proptest::prelude::*;

use qgr_cli::{parse_expr, render, Parsed};
use qgr_core::coeff::LaurentScalar;
use qgr_core::grassmann::{minor_generators, MinorExpr, MinorWord};
use qgr_core::limits::{LimitElement, MayaDiagram};
use qgr_core::qmatrix::{Level, NCPoly};

fn scalar() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-3i32..=3, -5i64..=5, 1i64..=4), 1..4).prop_map(|ts| {
        LaurentScalar::from_terms(
            ts.into_iter()
                .map(|(e, n, d)| (e, BigRational::new(BigInt::from(n), BigInt::from(d)))),
        )
    })
}

fn level() -> impl Strategy<Value = Level> {
    (1i32..=2, 0i32..=2).prop_map(|(m, n)| Level::new(m, n).unwrap())
}

fn poly() -> impl Strategy<Value = NCPoly> {
    level().prop_flat_map(|l| {
        let gens = l.generators();
        prop::collection::vec(
            (prop::collection::vec(prop::sample::select(gens), 0..=3), scalar()),
            0..4,
        )
        .prop_map(move |ts| NCPoly::from_words(l, ts).unwrap())
    })
}

fn minor_expr() -> impl Strategy<Value = MinorExpr> {
    level().prop_flat_map(|l| {
        let l = l.as_rect();
        let gens = minor_generators(l);
        prop::collection::vec(
            (prop::collection::vec(prop::sample::select(gens), 0..=2), scalar()),
            0..4,
        )
        .prop_map(move |ts| {
            MinorExpr::from_words(l, ts.into_iter().map(|(w, c)| (MinorWord(w), c))).unwrap()
        })
    })
}

fn limit() -> impl Strategy<Value = LimitElement> {
    let pool = MayaDiagram::enumerate(4, -3);
    prop::collection::vec(
        (prop::collection::vec(prop::sample::select(pool), 0..=2), scalar()),
        0..4,
    )
    .prop_map(LimitElement::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn matrix_expressions_round_trip(x in poly()) {
        let text = render(&Parsed::Poly(x.clone()));
        prop_assert_eq!(parse_expr(&text, x.level()).unwrap(), Parsed::Poly(x), "{}", text);
    }

    #[test]
    fn minor_expressions_round_trip(x in minor_expr()) {
        let text = render(&Parsed::Minor(x.clone()));
        let back = parse_expr(&text, x.level()).unwrap();
        // a purely scalar minor expression reads back as a scalar
        match back {
            Parsed::Minor(y) => prop_assert_eq!(y, x, "{}", text),
            Parsed::Poly(p) => {
                prop_assert!(x.terms().keys().all(|w| w.0.is_empty()), "{}", text);
                let c = p.coeff(&Default::default());
                prop_assert_eq!(MinorExpr::scalar(x.level(), c), x, "{}", text);
            }
            other => prop_assert!(false, "{text} read back as {other}"),
        }
    }

    #[test]
    fn limit_expressions_round_trip(x in limit()) {
        let text = render(&Parsed::Limit(x.clone()));
        let back = parse_expr(&text, Level::new(1, 1).unwrap()).unwrap();
        match back {
            Parsed::Limit(y) => prop_assert_eq!(y, x, "{}", text),
            Parsed::Poly(p) => {
                prop_assert!(x.terms().keys().all(Vec::is_empty), "{}", text);
                prop_assert_eq!(LimitElement::scalar(p.coeff(&Default::default())), x, "{}", text);
            }
            other => prop_assert!(false, "{text} read back as {other}"),
        }
    }

    #[test]
    fn rendering_is_stable(x in poly()) {
        let once = render(&parse_expr(&render(&Parsed::Poly(x.clone())), x.level()).unwrap());
        prop_assert_eq!(once, x.to_string());
    }
}
