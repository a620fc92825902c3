use associahedra::dissect::{all_diagonals, class_code, Diagonal, Dissection};
use associahedra::isotropy::isotropy_group;
use associahedra::series::{Bivariate, Bounds, TruncatedSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

type S = Bivariate<BigRational>;

const B: Bounds = Bounds::new(4, 5);

fn series() -> impl Strategy<Value = S> {
    prop::collection::vec(-6i64..=6, 30).prop_map(|cs| {
        let mut s = S::zero(B);
        for (i, c) in cs.into_iter().enumerate() {
            s.set(
                i as u32 / 6,
                i as u32 % 6,
                BigRational::from_integer(BigInt::from(c)),
            )
            .unwrap();
        }
        s
    })
}

fn without_constant() -> impl Strategy<Value = S> {
    series().prop_map(|mut s| {
        s.set(0, 0, BigRational::from_integer(BigInt::from(0)))
            .unwrap();
        s
    })
}

fn dissection() -> impl Strategy<Value = Dissection> {
    (4usize..=11)
        .prop_flat_map(|n| {
            let diags = all_diagonals(n);
            (Just(n), Just(diags).prop_shuffle(), 0usize..=n - 3)
        })
        .prop_map(|(n, diags, k)| {
            let mut chosen: Vec<Diagonal> = Vec::new();
            for d in diags {
                if chosen.len() == k {
                    break;
                }
                if chosen.iter().all(|c| !c.crosses(d)) {
                    chosen.push(d);
                }
            }
            Dissection::new(n, chosen.iter().map(|d| d.ends())).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.mul(&a.one_like()).unwrap(), a.clone());
        prop_assert!(a.sub(&a).unwrap().is_zero_series());
    }

    #[test]
    fn geometric_reciprocal_inverts_one_minus(s in without_constant()) {
        let r = s.geom_reciprocal().unwrap();
        prop_assert_eq!(r.mul(&s.one_minus().unwrap()).unwrap(), s.one_like());
    }

    #[test]
    fn power_substitution_is_a_homomorphism(a in series(), b in series(), r in 1i64..=3) {
        let sum = a.add(&b).unwrap().power_substitute(r).unwrap();
        prop_assert_eq!(sum, a.power_substitute(r).unwrap().add(&b.power_substitute(r).unwrap()).unwrap());
        let prod = a.mul(&b).unwrap().power_substitute(r).unwrap();
        prop_assert_eq!(prod, a.power_substitute(r).unwrap().mul(&b.power_substitute(r).unwrap()).unwrap());
    }

    #[test]
    fn twist_is_an_involution_preserving_type(d in dissection(), pick in any::<prop::sample::Index>()) {
        prop_assume!(d.k() > 0);
        let diag = d.diagonals()[pick.index(d.k())];
        let t = d.twist(diag).unwrap();
        prop_assert!(t.contains(diag));
        prop_assert_eq!(t.twist(diag).unwrap(), d.clone());
        prop_assert_eq!(t.signature(), d.signature());
    }

    #[test]
    fn class_code_is_invariant(d in dissection(), r in 0usize..12, flip in any::<bool>(), pick in any::<prop::sample::Index>()) {
        let code = class_code(&d);
        let mut e = d.rotate(r % d.sides());
        if flip {
            e = e.reflect();
        }
        prop_assert_eq!(class_code(&e), code.clone());
        if e.k() > 0 {
            let diag = e.diagonals()[pick.index(e.k())];
            let t = e.twist(diag).unwrap();
            prop_assert_eq!(class_code(&t), code);
            prop_assert_eq!(isotropy_group(&t), isotropy_group(&d));
        }
    }
}
