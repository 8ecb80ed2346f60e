use pastro::pastro::{pastro_poly, PastroFamily};
use pastro::qcore::{phi10_terminating, qpochhammer};
use pastro::qdiff::QDiffOperator;
use pastro::{LaurentPoly, QParams, Rational};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=6).prop_map(|(p, r)| Rational::new(p, r))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn generic_q() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("generic q", |q| QParams::check_q(q).is_ok())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, small_rational()), 0..6).prop_map(LaurentPoly::from_terms)
}

fn operator(q: Rational) -> impl Strategy<Value = QDiffOperator> {
    prop::collection::vec((-6i64..=6, laurent()), 0..4)
        .prop_map(move |terms| QDiffOperator::from_terms(&q, terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pochhammer_splits(z in small_rational(), q in generic_q(), m in 0usize..=8, n in 0usize..=8) {
        let whole = qpochhammer(&z, &q, m + n);
        let split = qpochhammer(&z, &q, m) * qpochhammer(&(&z * q.pow(m as i64)), &q, n);
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn q_binomial_terminating(z in small_rational(), q in generic_q(), n in 0usize..=10) {
        let lhs = phi10_terminating(n, &q, &z).unwrap();
        let rhs = qpochhammer(&(q.pow(-(n as i64)) * &z), &q, n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dilation_round_trip(p in laurent(), q in generic_q()) {
        prop_assert_eq!(p.dilate(&q).dilate(&q.inv()), p);
    }

    #[test]
    fn operator_equality_is_sound(
        (a, b) in generic_q().prop_flat_map(|q| (operator(q.clone()), operator(q))),
        k in -6i64..=6,
    ) {
        let probe = |k| LaurentPoly::monomial(Rational::one(), k);
        if a == b {
            prop_assert_eq!(a.apply(&probe(k)), b.apply(&probe(k)));
        } else {
            // (a - b) x^k = x^k sum_j d_j(x) q^(jk); shifts span at most 12,
            // so one of 13 distinct values of q^k separates them
            prop_assert!((-6..=6).any(|k| a.apply(&probe(k)) != b.apply(&probe(k))));
        }
        let sum = &a + &b;
        prop_assert_eq!(sum.apply(&probe(k)), &a.apply(&probe(k)) + &b.apply(&probe(k)));
    }

    #[test]
    fn composition_matches_application(
        (a, b, p) in generic_q().prop_flat_map(|q| (operator(q.clone()), operator(q), laurent())),
    ) {
        let composed = a.compose(&b).unwrap();
        prop_assert_eq!(composed.apply(&p), a.apply(&b.apply(&p)));
    }

    #[test]
    fn degree_is_exact(q in generic_q(), a in nonzero_rational(), b in nonzero_rational(), n in 0usize..=8) {
        let params = QParams::new(q, a, b).unwrap();
        prop_assume!(params.validate(n).is_ok());
        let p = pastro_poly(n, &params).unwrap();
        prop_assert_eq!(p.degree(), Some(n as i64));
        prop_assert!(p.leading_coeff().unwrap().is_one());
        prop_assert!(p.is_polynomial());
    }

    #[test]
    fn family_matches_single_degrees(q in generic_q(), a in nonzero_rational(), b in nonzero_rational()) {
        let params = QParams::new(q, a, b).unwrap();
        match PastroFamily::new(&params, 5) {
            Ok(family) => {
                for n in 0..=5 {
                    prop_assert_eq!(family.get(n).unwrap(), &pastro_poly(n, &params).unwrap());
                }
            }
            // eager validation must agree with the per-degree constructions
            Err(_) => prop_assert!((0..=5).any(|n| pastro_poly(n, &params).is_err())),
        }
    }
}
