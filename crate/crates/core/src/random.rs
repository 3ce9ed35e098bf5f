//! Seeded random moulds with small polynomial components, for property
//! checks and concrete instantiations of symbolic identities.

use rand::Rng;

use crate::algebra::{int, LinearForm, Monomial, Polynomial, RationalFunction};
use crate::mould::Mould;

/// A polynomial in `x_1..x_vars` of total degree at most `max_degree`
/// with integer coefficients in `[-3, 3]`.
pub fn random_polynomial<R: Rng>(rng: &mut R, vars: usize, max_degree: u32) -> Polynomial {
    let mut p = Polynomial::zero();
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let mut exps = vec![0u32; vars];
        let mut budget = rng.gen_range(0..=max_degree);
        while budget > 0 && vars > 0 {
            exps[rng.gen_range(0..vars)] += 1;
            budget -= 1;
        }
        let c = rng.gen_range(-3..=3);
        p = p.add(&Polynomial::monomial(Monomial::from_exponents(exps), int(c)));
    }
    p
}

/// A nonzero linear form in `x_1..x_vars` with coefficients in `{-1, 0, 1}`.
pub fn random_linear_form<R: Rng>(rng: &mut R, vars: usize) -> LinearForm {
    loop {
        let l = LinearForm::from_coeffs((0..vars).map(|_| rng.gen_range(-1..=1)).collect());
        if !l.is_zero() {
            return l;
        }
    }
}

/// A random polynomial over at most three random linear factors.
pub fn random_ratfunc<R: Rng>(rng: &mut R, vars: usize) -> RationalFunction {
    let factors: Vec<_> = (0..rng.gen_range(0..=3))
        .map(|_| (random_linear_form(rng, vars), 1))
        .collect();
    RationalFunction::new(random_polynomial(rng, vars, 3), factors)
}

/// A mould with polynomial components (degree <= 3) and the given
/// depth-0 constant: 0 for ARI, 1 for GARI.
pub fn random_mould<R: Rng>(rng: &mut R, depth: usize, constant: i64) -> Mould {
    Mould::from_fn(depth, |m| {
        if m == 0 {
            RationalFunction::integer(constant)
        } else {
            RationalFunction::from_polynomial(random_polynomial(rng, m, 3))
        }
    })
}

pub fn random_ari<R: Rng>(rng: &mut R, depth: usize) -> Mould {
    random_mould(rng, depth, 0)
}

pub fn random_gari<R: Rng>(rng: &mut R, depth: usize) -> Mould {
    random_mould(rng, depth, 1)
}
