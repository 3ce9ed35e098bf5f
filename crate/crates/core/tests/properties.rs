use mould::flexion::{adari, ari, expari, gari, invgari, logari, preari, Adari};
use mould::random::{random_ari, random_gari, random_ratfunc};
use mould::special::{dupal, paj, pal, sa};
use mould::symmetry::{
    inductive_alternality_oracle, is_alternal, is_alternal_by_sh, is_symmetral,
    is_symmetral_by_sh, sh_map,
};
use mould::{Mould, RationalFunction};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DEPTH: usize = 4;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rfs(seed: u64) -> (RationalFunction, RationalFunction, RationalFunction) {
    let mut r = rng(seed);
    (random_ratfunc(&mut r, 3), random_ratfunc(&mut r, 3), random_ratfunc(&mut r, 3))
}

fn aris(seed: u64, depth: usize) -> (Mould, Mould, Mould) {
    let mut r = rng(seed);
    (random_ari(&mut r, depth), random_ari(&mut r, depth), random_ari(&mut r, depth))
}

fn garis(seed: u64, depth: usize) -> (Mould, Mould, Mould) {
    let mut r = rng(seed);
    (random_gari(&mut r, depth), random_gari(&mut r, depth), random_gari(&mut r, depth))
}

/// `a == b` decided by cross-multiplying, independently of normal forms.
fn cross_equal(a: &RationalFunction, b: &RationalFunction) -> bool {
    let l = a.scaled_numerator().mul(&b.denominator_polynomial());
    let r = b.scaled_numerator().mul(&a.denominator_polynomial());
    l == r
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ratfunc_ring_axioms(seed in any::<u64>()) {
        let (a, b, c) = rfs(seed);
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&RationalFunction::one()), a.clone());
    }

    #[test]
    fn ratfunc_equality_agrees_with_cross_multiplication(seed in any::<u64>()) {
        let (a, b, c) = rfs(seed);
        let sum = a.add(&b);
        let expected = RationalFunction::new(
            a.scaled_numerator().mul(&b.denominator_polynomial())
                .add(&b.scaled_numerator().mul(&a.denominator_polynomial())),
            a.denominator().iter().chain(b.denominator().iter()).map(|(l, k)| (l.clone(), *k)),
        );
        prop_assert!(cross_equal(&sum, &expected));
        prop_assert_eq!(sum, expected);
        let prod = a.mul(&c);
        prop_assert!(cross_equal(&prod.sub(&a.mul(&c)), &RationalFunction::zero()));
        prop_assert_eq!(cross_equal(&a, &c), a == c);
    }

    #[test]
    fn mu_is_associative(seed in any::<u64>()) {
        let (a, b, c) = garis(seed, DEPTH);
        prop_assert_eq!(a.mu(&b).mu(&c), a.mu(&b.mu(&c)));
    }

    #[test]
    fn lu_and_ari_satisfy_jacobi(seed in any::<u64>()) {
        let (a, b, c) = aris(seed, DEPTH);
        let lu = a.lu(&b.lu(&c)).add(&b.lu(&c.lu(&a))).add(&c.lu(&a.lu(&b)));
        prop_assert!(lu.is_zero());
        let j = ari(&a, &ari(&b, &c).unwrap()).unwrap()
            .add(&ari(&b, &ari(&c, &a).unwrap()).unwrap())
            .add(&ari(&c, &ari(&a, &b).unwrap()).unwrap());
        prop_assert!(j.is_zero());
        prop_assert!(ari(&a, &b).unwrap().add(&ari(&b, &a).unwrap()).is_zero());
    }

    #[test]
    fn preari_is_right_pre_lie(seed in any::<u64>()) {
        let (a, b, c) = aris(seed, DEPTH);
        let assoc = |x: &Mould, y: &Mould, z: &Mould| {
            preari(&preari(x, y).unwrap(), z).unwrap().sub(&preari(x, &preari(y, z).unwrap()).unwrap())
        };
        prop_assert_eq!(assoc(&a, &b, &c), assoc(&a, &c, &b));
    }

    #[test]
    fn gari_is_associative_with_inverses(seed in any::<u64>()) {
        let (s, t, u) = garis(seed, DEPTH);
        prop_assert_eq!(
            gari(&gari(&s, &t).unwrap(), &u).unwrap(),
            gari(&s, &gari(&t, &u).unwrap()).unwrap()
        );
        let inv = invgari(&s).unwrap();
        prop_assert_eq!(gari(&s, &inv).unwrap(), Mould::unit(DEPTH));
        prop_assert_eq!(gari(&inv, &s).unwrap(), Mould::unit(DEPTH));
    }

    #[test]
    fn expari_and_logari_are_inverse(seed in any::<u64>()) {
        let (a, _, _) = aris(seed, DEPTH);
        let (s, _, _) = garis(seed, DEPTH);
        prop_assert_eq!(logari(&expari(&a).unwrap()).unwrap(), a);
        prop_assert_eq!(expari(&logari(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn sh_is_an_algebra_homomorphism(seed in any::<u64>()) {
        let (m, n, _) = garis(seed, DEPTH);
        let lhs = sh_map(&m.mu(&n)).unwrap();
        let rhs = sh_map(&m).unwrap().mu(&sh_map(&n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(
            sh_map(&m.add(&n)).unwrap(),
            sh_map(&m).unwrap().add(&sh_map(&n).unwrap())
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn adari_is_a_lie_morphism(seed in any::<u64>()) {
        let (a, b, _) = aris(seed, DEPTH);
        let (s, _, _) = garis(seed, DEPTH);
        let ad = Adari::new(&s).unwrap();
        let lhs = ad.apply(&ari(&a, &b).unwrap()).unwrap();
        let rhs = ari(&ad.apply(&a).unwrap(), &ad.apply(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adari_is_a_group_action(seed in any::<u64>()) {
        let (a, _, _) = aris(seed, 3);
        let (s, t, _) = garis(seed, 3);
        let lhs = adari(&gari(&s, &t).unwrap(), &a).unwrap();
        let rhs = adari(&s, &adari(&t, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adari_pal_is_undone_by_adari_invgari_pal(seed in any::<u64>()) {
        let (a, _, _) = aris(seed, DEPTH);
        let p = pal(DEPTH).unwrap();
        let there = Adari::new(&invgari(&p).unwrap()).unwrap().apply(&a).unwrap();
        prop_assert_eq!(Adari::new(&p).unwrap().apply(&there).unwrap(), a.clone());
        let ad = Adari::new(&p).unwrap();
        prop_assert_eq!(ad.inverse().apply(&ad.apply(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn symmetry_tests_agree_on_random_moulds(seed in any::<u64>()) {
        let (a, b, _) = aris(seed, DEPTH);
        let (s, _, _) = garis(seed, DEPTH);
        prop_assert_eq!(is_alternal(&a).unwrap(), is_alternal_by_sh(&a).unwrap());
        prop_assert_eq!(is_symmetral(&s).unwrap(), is_symmetral_by_sh(&s).unwrap());
        let _ = inductive_alternality_oracle(&b).unwrap();
    }
}

#[test]
fn symmetry_tests_agree_on_structured_moulds() {
    let d = 4;
    let alternal = [
        dupal(d),
        sa(3, d),
        sa(-1, d),
        pal(d).unwrap().mu_log().unwrap(),
        ari(&sa(3, d), &sa(5, d)).unwrap(),
        sa(3, d).lu(&dupal(d)),
    ];
    for a in &alternal {
        assert!(is_alternal(a).unwrap());
        assert!(is_alternal_by_sh(a).unwrap());
    }
    // A^1 arbitrary, A^m(x_1..x_m) = A^{m-1}(x_1..x_{m-1}) - A^{m-1}(x_2..x_m)
    let mut rec: Mould = Mould::zero(d);
    rec.set_component(1, RationalFunction::var(1).pow(3).add(&RationalFunction::integer(2)));
    for m in 2..=d {
        let head = rec.evaluate(&mould::Word::range(1, m - 1)).unwrap();
        let tail = rec.evaluate(&mould::Word::range(2, m)).unwrap();
        rec.set_component(m, head.sub(&tail));
    }
    assert!(inductive_alternality_oracle(&rec).unwrap());
    assert!(is_alternal_by_sh(&rec).unwrap());
    let symmetral = [paj(d), pal(d).unwrap(), dupal(d).mu_exp().unwrap(), expari(&sa(3, d)).unwrap()];
    for s in &symmetral {
        assert!(is_symmetral(s).unwrap());
        assert!(is_symmetral_by_sh(s).unwrap());
    }
    let neither = paj(d).sub(&Mould::unit(d)).scale(&mould::algebra::rat(1, 2)).add(&Mould::unit(d));
    assert!(!is_symmetral(&neither).unwrap());
    assert!(!is_symmetral_by_sh(&neither).unwrap());
    assert!(!is_alternal(&paj(d).sub(&Mould::unit(d))).unwrap());
}
