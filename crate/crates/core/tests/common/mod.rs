#![allow(dead_code)]

use boolgb::{Monomial, Polynomial, RingMode, VarId};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Monomial over `n` blocks with total degree at most `max_deg`.
pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Monomial {
    let deg = rng.gen_range(0..=max_deg);
    let mut m = Monomial::one();
    for _ in 0..deg {
        let v = VarId::from_flat(rng.gen_range(0..3 * n));
        m = m.mul(&Monomial::var(v), RingMode::Full);
    }
    m
}

pub fn random_poly<R: Rng>(
    rng: &mut R,
    n: usize,
    max_deg: u32,
    max_terms: usize,
    mode: RingMode,
) -> Polynomial {
    let k = rng.gen_range(0..=max_terms);
    Polynomial::from_terms((0..k).map(|_| random_monomial(rng, n, max_deg)), mode)
}

/// Proptest strategy for polynomials over `n` blocks.
pub fn poly_strategy(
    n: usize,
    max_exp: u8,
    max_terms: usize,
    mode: RingMode,
) -> impl Strategy<Value = Polynomial> {
    let mono = proptest::collection::vec(0..=max_exp, 3 * n).prop_map(|exps| {
        Monomial::from_powers(
            exps.into_iter()
                .enumerate()
                .map(|(i, e)| (VarId::from_flat(i), e)),
        )
    });
    proptest::collection::vec(mono, 0..=max_terms)
        .prop_map(move |ms| Polynomial::from_terms(ms, mode))
}
