use pentaparity::factor_oracle::count_irreducible_factors;
use pentaparity::{type1_pentanomial, Gf2Poly, PentanomialParams};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Gf2Poly> {
    prop::collection::vec(any::<u64>(), 0..4).prop_map(Gf2Poly::from_words)
}

fn nonzero_poly() -> impl Strategy<Value = Gf2Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn distributive(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn addition_is_involutive(a in poly(), b in poly()) {
        prop_assert!((&a + &a).is_zero());
        prop_assert_eq!(&(&a + &b) + &b, a);
    }

    #[test]
    fn degree_is_additive(a in nonzero_poly(), b in nonzero_poly()) {
        prop_assert_eq!(
            (&a * &b).degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }

    #[test]
    fn euclid_reconstructs(a in poly(), b in nonzero_poly()) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert!(r.degree() < b.degree());
        prop_assert_eq!(&(&q * &b) + &r, a.clone());
        prop_assert_eq!(a.rem(&b).unwrap(), r);
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in poly()) {
        let g = a.gcd(&b).unwrap();
        prop_assert!(a.rem(&g).unwrap().is_zero());
        prop_assert!(b.rem(&g).unwrap().is_zero());
    }

    #[test]
    fn leibniz_rule(a in poly(), b in poly()) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_matches_product(a in poly()) {
        prop_assert_eq!(a.square(), &a * &a);
        prop_assert_eq!(a.square().sqrt(), Some(a));
    }

    #[test]
    fn reciprocal_is_involution(a in nonzero_poly()) {
        prop_assume!(a.coeff(0));
        let r = a.reciprocal().unwrap();
        prop_assert_eq!(r.degree(), a.degree());
        prop_assert_eq!(r.reciprocal().unwrap(), a);
    }

    #[test]
    fn text_round_trips(a in poly()) {
        prop_assert_eq!(Gf2Poly::from_hex(&a.to_hex()).unwrap(), a.clone());
        prop_assert_eq!(Gf2Poly::parse_exponent_list(&a.to_exponent_list()).unwrap(), a.clone());
        prop_assert_eq!(Gf2Poly::parse_human(&a.to_string()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reciprocal_preserves_squarefreeness_and_count(words in prop::collection::vec(any::<u64>(), 1..2)) {
        let a = Gf2Poly::from_words(words);
        prop_assume!(a.coeff(0) && a.degree().unwrap_or(0) >= 1);
        let r = a.reciprocal().unwrap();
        prop_assert_eq!(r.is_squarefree().unwrap(), a.is_squarefree().unwrap());
        prop_assert_eq!(
            count_irreducible_factors(&r).unwrap(),
            count_irreducible_factors(&a).unwrap()
        );
    }
}

#[test]
fn pentanomials_are_squarefree_up_to_degree_400() {
    for m in 6..=400 {
        for params in PentanomialParams::for_degree(m) {
            let f = type1_pentanomial(params);
            assert!(f.is_squarefree().unwrap(), "{params}");
        }
    }
}
