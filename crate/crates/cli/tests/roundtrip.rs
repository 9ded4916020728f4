use proptest::prelude::*;

use quasishuffle::scalars::Zero;
use quasishuffle::{Letter, NcPoly, PolyScalar, Rational, Word};
use quasishuffle_cli::{parse_expr, print_expr, Expr};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn scalar() -> impl Strategy<Value = PolyScalar> {
    let monomial = (rational(), 0u32..3, 0u32..2).prop_map(|(c, a, b)| {
        let mut m = PolyScalar::constant(c);
        for _ in 0..a {
            m = m * PolyScalar::var("r");
        }
        for _ in 0..b {
            m = m * PolyScalar::var("eps");
        }
        m
    });
    prop::collection::vec(monomial, 1..4).prop_map(|ms| ms.into_iter().fold(PolyScalar::zero(), |a, b| a + b))
}

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![
        (1u32..=12).prop_map(Letter::z),
        (1u32..=5, 0u32..3).prop_map(|(i, j)| Letter { index: i, color: Some(j) }),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    let term = (prop::collection::vec(letter(), 0..4), scalar());
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let mut x = NcPoly::zero();
        for (letters, c) in terms {
            x.add_term(Word::new(letters), c);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn print_then_parse_is_identity(x in expr()) {
        let printed = print_expr(&x);
        let back = parse_expr(&printed).map_err(|e| TestCaseError::fail(format!("{printed}: {e}")))?;
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(print_expr(&back), printed);
    }

    #[test]
    fn parse_is_stable_under_reprinting(x in expr(), pad in "[ ]{0,2}") {
        let spaced = print_expr(&x).replace(' ', &format!(" {pad}"));
        prop_assert_eq!(parse_expr(&spaced).unwrap(), x);
    }
}
