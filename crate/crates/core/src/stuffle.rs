//! The weight-λ Rota–Baxter (stuffle) product on `Ш(k)` and its comparison
//! with the Nijenhuis product under the formal substitution `λ ↦ −P`.
//!
//! ```text
//! u_m ⋄_λ u_n = Σ_{k=0}^{min(m,n)} C(m+n−k, m) C(m, k) λ^k u_{m+n−k}
//! ```

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::algebra::{ShuffleAlgebra, ShuffleElement};
use crate::base::BaseKind;
use crate::error::Error;
use crate::scalar::{binomial, from_bigint, Rational};
use crate::word::TensorWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(pub Rational);

fn require_trivial(base: BaseKind, op: &'static str) -> Result<(), Error> {
    if base == BaseKind::Trivial {
        Ok(())
    } else {
        Err(Error::RequiresTrivialBase { op, base })
    }
}

/// `C(m+n−k, m) · C(m, k)`, the coefficient of `λ^k` in `u_m ⋄_λ u_n`.
fn stuffle_coefficient(m: u64, n: u64, k: u64) -> BigInt {
    binomial(m + n - k, m) * binomial(m, k)
}

pub fn stuffle_u(
    base: BaseKind,
    m: usize,
    n: usize,
    weight: &Weight,
) -> Result<ShuffleElement, Error> {
    require_trivial(base, "the stuffle product")?;
    let (m64, n64) = (m as u64, n as u64);
    Ok((0..=m.min(n))
        .map(|k| {
            let coeff = from_bigint(stuffle_coefficient(m64, n64, k as u64))
                * Pow::pow(&weight.0, k as u32);
            (TensorWord::units(m + n - k), coeff)
        })
        .collect())
}

/// Bilinear extension of [`stuffle_u`] to elements of `Ш(k)`.
pub fn stuffle(
    base: BaseKind,
    a: &ShuffleElement,
    b: &ShuffleElement,
    weight: &Weight,
) -> Result<ShuffleElement, Error> {
    require_trivial(base, "the stuffle product")?;
    Ok(a.bilinear(b, |x, y| {
        stuffle_u(base, x.len() - 1, y.len() - 1, weight).expect("trivial base checked")
    }))
}

/// `Σ_k (−1)^k C(m+n−k, m) C(m, k)`.
pub fn identity_sum(m: u64, n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=m.min(n) {
        let t = stuffle_coefficient(m, n, k);
        if k % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// The stuffle formula with `λ^k` replaced by `(−1)^k P^k`, evaluated in `Ш(k)`.
pub fn nij_from_stuffle(base: BaseKind, m: usize, n: usize) -> Result<ShuffleElement, Error> {
    require_trivial(base, "the stuffle substitution")?;
    let alg = ShuffleAlgebra::new(base);
    let mut out = ShuffleElement::zero();
    for k in 0..=m.min(n) {
        let mut term = alg.make_u(m + n - k);
        for _ in 0..k {
            term = alg.p_right(&term);
        }
        let coeff = from_bigint(stuffle_coefficient(m as u64, n as u64, k as u64));
        if k % 2 == 0 {
            out.add_scaled(&term, &coeff);
        } else {
            out.add_scaled(&term, &-coeff);
        }
    }
    Ok(out)
}
