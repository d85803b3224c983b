//! Seeded random elements for randomized checks.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::ShuffleElement;
use crate::base::{BaseIndex, BaseKind};
use crate::scalar::Rational;
use crate::word::TensorWord;

pub fn random_word<R: Rng + ?Sized>(
    rng: &mut R,
    base: BaseKind,
    max_len: usize,
    max_exp: u32,
) -> TensorWord {
    let len = rng.gen_range(1..=max_len.max(1));
    let letters = (0..len)
        .map(|_| {
            if base.has_monomials() {
                BaseIndex(rng.gen_range(0..=max_exp))
            } else {
                BaseIndex::UNIT
            }
        })
        .collect();
    TensorWord::new(letters).expect("nonempty")
}

pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let num = *[-9i64, -7, -5, -3, -2, -1, 1, 2, 3, 4, 6, 8]
        .choose(rng)
        .expect("nonempty");
    let den = rng.gen_range(1i64..=6);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A sum of up to `max_terms` random words with random nonzero coefficients.
/// Terms may cancel, so the result can be zero.
pub fn random_element<R: Rng + ?Sized>(
    rng: &mut R,
    base: BaseKind,
    max_len: usize,
    max_exp: u32,
    max_terms: usize,
) -> ShuffleElement {
    let terms = rng.gen_range(0..=max_terms);
    (0..terms)
        .map(|_| {
            (
                random_word(rng, base, max_len, max_exp),
                random_rational(rng),
            )
        })
        .collect()
}
