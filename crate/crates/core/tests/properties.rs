use proptest::prelude::*;
use tanpoly::exact::{Int, Rational};
use tanpoly::multiangle::{tan_addition_oracle, tan_beeler, tan_gaussian_oracle, TanValue};
use tanpoly::symbolic::{ReducedPair, YPoly, YZPoly};

fn yz_poly() -> impl Strategy<Value = YZPoly> {
    prop::collection::vec((-9i64..=9, 0u32..=6, 0u32..=6), 0..=5).prop_map(|terms| {
        let mut p = YZPoly::zero();
        for (c, a, b) in terms {
            p.add_term(a, b, Int::from(c));
        }
        p
    })
}

fn y_poly() -> impl Strategy<Value = YPoly> {
    prop::collection::vec(-9i64..=9, 0..=7).prop_map(|c| YPoly::from_coeffs(&c))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=40).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

proptest! {
    #[test]
    fn product_rule(p in yz_poly(), q in yz_poly()) {
        prop_assert_eq!((&p * &q).diff(), &(&p.diff() * &q) + &(&p * &q.diff()));
    }

    #[test]
    fn reduction_commutes_with_diff(p in yz_poly()) {
        prop_assert_eq!(p.diff().reduce_z(), p.reduce_z().diff());
    }

    #[test]
    fn reduction_is_multiplicative(p in yz_poly(), q in yz_poly()) {
        prop_assert_eq!((&p * &q).reduce_z(), &p.reduce_z() * &q.reduce_z());
    }

    #[test]
    fn embed_reduce_round_trip(f in y_poly(), g in y_poly()) {
        let pair = ReducedPair::new(f, g);
        prop_assert_eq!(pair.embed().reduce_z(), pair);
    }

    #[test]
    fn y_poly_json_round_trip(p in y_poly()) {
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<YPoly>(&s).unwrap(), p);
    }

    #[test]
    fn three_routes_agree(n in 0u32..=24, t in rational()) {
        let b = tan_beeler(n, &t);
        prop_assert_eq!(&b, &tan_addition_oracle(n, &t));
        prop_assert_eq!(&b, &tan_gaussian_oracle(n, &t));
        prop_assert_eq!(tan_beeler(n, &-&t), -b);
    }

    #[test]
    fn composition(a in 1u32..=4, b in 1u32..=4, t in rational()) {
        if let TanValue::Finite(u) = tan_beeler(b, &t) {
            let lhs = tan_beeler(a * b, &t);
            let rhs = tan_beeler(a, &u);
            if !lhs.is_pole() && !rhs.is_pole() {
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
