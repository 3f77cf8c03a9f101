use proptest::prelude::*;

use hecke_core::rational::{format_rational, parse_rational, rat, ratio};
use hecke_core::weylgroup::all_wb;
use hecke_core::{criterion_b, criterion_d, Rational, SignCharacter, SignedPermutation};

fn signed_perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
    let group = all_wb(n);
    (0..group.len()).prop_map(move |i| group[i].clone())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=4).prop_map(|(a, b)| ratio(a, b))
}

fn signs(n: usize) -> impl Strategy<Value = SignCharacter> {
    proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], n).prop_map(|v| SignCharacter::new(v).unwrap())
}

proptest! {
    #[test]
    fn group_laws(a in signed_perm(3), b in signed_perm(3), c in signed_perm(3)) {
        let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
        let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn action_is_a_homomorphism(a in signed_perm(3), b in signed_perm(3), v in proptest::collection::vec(rational(), 3)) {
        let ab = a.compose(&b).unwrap();
        let lhs = ab.act_on_vector(&v).unwrap();
        let rhs = a.act_on_vector(&b.act_on_vector(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn one_line_round_trip(a in signed_perm(4)) {
        prop_assert_eq!(SignedPermutation::from_one_line(&a.one_line()).unwrap(), a);
    }

    #[test]
    fn rational_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn type_d_verdict_ignores_the_lift(g in proptest::collection::vec(-3i64..=3, 4), mu in signs(4)) {
        let g: Vec<Rational> = g.into_iter().map(rat).collect();
        let a = criterion_d(&g, &mu, &rat(1)).unwrap().verdict;
        let b = criterion_d(&g, &mu.negate(), &rat(1)).unwrap().verdict;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn scaling_gamma_and_k_together(g in proptest::collection::vec(rational(), 3), mu in signs(3), c in 1i64..=5) {
        let k = ratio(1, 2);
        let scaled: Vec<Rational> = g.iter().map(|x| x * rat(c)).collect();
        let a = criterion_b(&g, &mu, &k).unwrap().verdict;
        let b = criterion_b(&scaled, &mu, &(k * rat(c))).unwrap().verdict;
        prop_assert_eq!(a, b);
    }
}
