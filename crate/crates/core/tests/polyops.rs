use e6rep::polyops::{parse_first_order, parse_polynomial, DiffOp, Monomial, Polynomial};
use e6rep::{Poly, WeylOp, Q};
use proptest::prelude::*;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

// Small variable pool so that products and derivatives actually interact.
fn monomial(max_deg: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(1usize..=5, 0..=max_deg).prop_map(|v| Monomial::from_labels(&v))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(3), -4i64..=4), 0..5)
        .prop_map(|terms| Polynomial::from_terms(terms.into_iter().map(|(m, c)| (m, q(c)))))
}

fn weyl_op() -> impl Strategy<Value = WeylOp> {
    prop::collection::vec((monomial(2), monomial(2), -3i64..=3), 0..4).prop_map(|terms| {
        let mut op = DiffOp::zero();
        for (x, d, c) in terms {
            op.add_term(x, d, q(c));
        }
        op
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn compose_is_associative(a in weyl_op(), b in weyl_op(), c in weyl_op()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn compose_matches_nested_apply(a in weyl_op(), b in weyl_op(), f in poly()) {
        prop_assert_eq!(a.compose(&b).apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn dualize_is_linear(f in poly(), g in poly(), s in -5i64..=5) {
        let lhs = DiffOp::dualize(&f.scale(&q(s)).add(&g));
        let rhs = DiffOp::dualize(&f).scale(&q(s)).add(&DiffOp::dualize(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn leibniz_for_first_order(i in 1usize..=5, f in poly(), g in poly()) {
        let d = DiffOp::<Q>::d(i - 1);
        prop_assert_eq!(d.apply(&f.mul(&g)), d.apply(&f).mul(&g).add(&f.mul(&d.apply(&g))));
    }

    #[test]
    fn display_parses_back(f in poly()) {
        let back: Poly = parse_polynomial(&f.to_string(), "roundtrip").unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn canonical_commutation() {
    let x = DiffOp::<Q>::mul_by(&Polynomial::x(3));
    let d = DiffOp::<Q>::d(2);
    assert_eq!(d.commutator(&x), DiffOp::identity());
}

#[test]
fn dualized_square_on_square() {
    let f: Poly = parse_polynomial("x_1x_{14}+x_2x_{11}+x_3x_9-x_4x_7+x_5x_6", "zeta1").unwrap();
    assert_eq!(DiffOp::dualize(&f).apply(&f), Polynomial::constant(q(5)));
}

#[test]
fn parses_printed_operator_with_typo() {
    let (op, notes) =
        parse_first_order::<Q>(r"x_1\partial_{x_2}-x_{11}\partial_{14}", "probe").unwrap();
    assert_eq!(op.to_string(), "x1∂x2 - x11∂x14");
    assert_eq!(notes.len(), 1);
}

#[test]
fn grlex_leading_term() {
    let f: Poly = parse_polynomial("x_2x_3 + x_1^2 + x_{27}^3", "lead").unwrap();
    let (m, _) = f.leading_term().unwrap();
    assert_eq!(m.to_string(), "x27^3");
}
