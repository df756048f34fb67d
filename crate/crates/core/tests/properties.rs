use hypersum_core::combinatorics::{binomial, binomial_poly};
use hypersum_core::{Polynomial, Rational, TruncatedSeries};
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| Rational::frac(p, q))
}

fn polynomial(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Polynomial::new)
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(polynomial(3), order + 1)
        .prop_map(move |c| TruncatedSeries::new(order, c))
}

fn is_canonical(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

proptest! {
    #[test]
    fn field_laws_and_canonical_form(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        for r in [&a + &b, &a - &b, &a * &b, &a * &c - &b] {
            prop_assert!(is_canonical(&r), "{} not canonical", r);
        }
        if !b.is_zero() {
            let quotient = &a / &b;
            prop_assert!(is_canonical(&quotient));
            prop_assert_eq!(quotient * &b, a.clone());
        }
    }

    #[test]
    fn text_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn shift_commutes_with_evaluation(p in polynomial(7), a in rational(), x in rational()) {
        prop_assert_eq!(p.compose_shift(&a).eval(&x), p.eval(&(&x + &a)));
    }

    #[test]
    fn product_rule(p in polynomial(6), q in polynomial(6)) {
        let lhs = (&p * &q).derivative();
        let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn polynomial_stays_trimmed(p in polynomial(6), q in polynomial(6)) {
        for r in [&p + &q, &p - &q, &p * &q, p.derivative(), p.compose_shift(&Rational::frac(1, 3))] {
            prop_assert!(r.coeffs().last().is_none_or(|c| !c.is_zero()));
        }
        prop_assert_eq!(&p - &p, Polynomial::zero());
    }

    #[test]
    fn json_round_trip(p in polynomial(6)) {
        let text = p.to_json_text();
        prop_assert_eq!(serde_json::from_str::<Polynomial>(&text).unwrap(), p);
    }

    #[test]
    fn series_product_commutes(a in series(3), b in series(3)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn series_product_associates(a in series(2), b in series(2), c in series(2)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn binomial_matches_binomial_poly(n in rational(), k in 0usize..=12) {
        prop_assert_eq!(binomial(&n, k), binomial_poly(&Rational::zero(), k).eval(&n));
    }
}
