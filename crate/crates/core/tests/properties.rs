//! Property tests for the algebraic invariants: field axioms of `Q(n)`,
//! module laws of algebra elements, and statistics of diagram composition.

use proptest::prelude::*;

use parmon_core::algebra::{AlgebraElement, Permutation};
use parmon_core::arith::{rat, Polynomial, Rational, RationalFunction};
use parmon_core::diagram::enumerate_diagrams;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..4).prop_map(Polynomial::from_coeffs)
}

fn nonzero_polynomial() -> impl Strategy<Value = Polynomial> {
    polynomial().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational_function() -> impl Strategy<Value = RationalFunction> {
    (polynomial(), nonzero_polynomial())
        .prop_map(|(num, den)| RationalFunction::new(num, den).unwrap())
}

fn nonzero_rational_function() -> impl Strategy<Value = RationalFunction> {
    rational_function().prop_filter("nonzero", |f| !f.is_zero())
}

proptest! {
    #[test]
    fn field_axioms(a in rational_function(), b in rational_function(), c in rational_function()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplicative_inverses(a in nonzero_rational_function()) {
        prop_assert_eq!(&a * &a.inv().unwrap(), RationalFunction::one());
    }

    #[test]
    fn normalization_is_a_congruence(
        p in polynomial(),
        r in nonzero_polynomial(),
        q in nonzero_polynomial(),
    ) {
        // (p q) / (r q) normalizes identically to p / r.
        let lhs = RationalFunction::new(&p * &q, &r * &q).unwrap();
        let rhs = RationalFunction::new(p, r).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        a in rational_function(),
        b in rational_function(),
        x in rational(),
    ) {
        let (ea, eb) = (a.eval(&x), b.eval(&x));
        if let (Ok(ea), Ok(eb)) = (ea, eb) {
            if let Ok(es) = (&a + &b).eval(&x) {
                prop_assert_eq!(&ea + &eb, es);
            }
            if let Ok(ep) = (&a * &b).eval(&x) {
                prop_assert_eq!(&ea * &eb, ep);
            }
        }
    }
}

fn element_order2() -> impl Strategy<Value = AlgebraElement<RationalFunction>> {
    prop::collection::vec((0usize..15, rational()), 0..4).prop_map(|terms| {
        let ds = enumerate_diagrams(2).unwrap();
        let mut e = AlgebraElement::zero(2);
        for (i, c) in terms {
            e.add_term(ds[i].clone(), RationalFunction::from_rational(c));
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algebra_is_associative_and_distributive(
        a in element_order2(),
        b in element_order2(),
        c in element_order2(),
    ) {
        let n = RationalFunction::variable();
        let ab_c = a.multiply(&b, &n).unwrap().multiply(&c, &n).unwrap();
        let a_bc = a.multiply(&b.multiply(&c, &n).unwrap(), &n).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let lhs = a.multiply(&b.add(&c).unwrap(), &n).unwrap();
        let rhs = a.multiply(&b, &n).unwrap().add(&a.multiply(&c, &n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn permutation_subalgebra_is_the_group_algebra(
        xs in prop::collection::vec(0usize..24, 2)
    ) {
        // Products of embedded permutations never pick up powers of the
        // parameter, and the underlying diagram follows composition.
        let perms = Permutation::all(4);
        let (p, q) = (&perms[xs[0]], &perms[xs[1]]);
        let n = RationalFunction::variable();
        let prod = AlgebraElement::<RationalFunction>::from_permutation(p)
            .multiply(&AlgebraElement::from_permutation(q), &n)
            .unwrap();
        // Stacking p over q applies p first.
        let expected = AlgebraElement::from_permutation(&q.compose(p));
        prop_assert_eq!(prod, expected);
    }
}

#[test]
fn composition_statistics() {
    // Propagation numbers never grow under composition, and the half-integer
    // submonoid is closed.
    for k in [2usize, 3] {
        let ds = enumerate_diagrams(k).unwrap();
        for a in &ds {
            for b in &ds {
                let r = a.compose(b).unwrap();
                assert!(
                    r.diagram.propagation_number()
                        <= a.propagation_number().min(b.propagation_number())
                );
                assert!(r.middle_components <= k);
                if a.in_half_monoid() && b.in_half_monoid() {
                    assert!(r.diagram.in_half_monoid());
                }
            }
        }
    }
}

#[test]
fn order3_algebra_associativity_at_a_random_parameter() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let ds = enumerate_diagrams(3).unwrap();
    let mut rng = StdRng::seed_from_u64(23);
    let x = parmon_core::verify::random_parameter(&mut rng, 3);
    let mut random_element = |rng: &mut StdRng| {
        let mut e = AlgebraElement::<Rational>::zero(3);
        for _ in 0..rng.gen_range(1..=4usize) {
            let d = ds[rng.gen_range(0..ds.len())].clone();
            e.add_term(d, rat(rng.gen_range(-6i64..=6), rng.gen_range(1i64..=6)));
        }
        e
    };
    for _ in 0..40 {
        let (a, b, c) = (
            random_element(&mut rng),
            random_element(&mut rng),
            random_element(&mut rng),
        );
        let ab_c = a.multiply(&b, &x).unwrap().multiply(&c, &x).unwrap();
        let a_bc = a.multiply(&b.multiply(&c, &x).unwrap(), &x).unwrap();
        assert_eq!(ab_c, a_bc);
        let lhs = a.multiply(&b.add(&c).unwrap(), &x).unwrap();
        let rhs = a
            .multiply(&b, &x)
            .unwrap()
            .add(&a.multiply(&c, &x).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn random_order3_triple_associativity() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let ds = enumerate_diagrams(3).unwrap();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..1000 {
        let (a, b, c) = (
            &ds[rng.gen_range(0..ds.len())],
            &ds[rng.gen_range(0..ds.len())],
            &ds[rng.gen_range(0..ds.len())],
        );
        let ab_c = a.compose(b).unwrap().diagram.compose(c).unwrap().diagram;
        let a_bc = a.compose(&b.compose(c).unwrap().diagram).unwrap().diagram;
        assert_eq!(ab_c, a_bc);
    }
}
