//! The free commutative Nijenhuis algebra `Ш(A) = ⊕_{n≥1} A^{⊗n}`.
//!
//! The product `⋄` is defined on words `a = a1 ⊗ a'`, `b = b1 ⊗ b'` by
//!
//! ```text
//! a ⋄ b = a1 b1                                            if |a| = |b| = 1
//!       = a1 b1 ⊗ b'                                       if |a| = 1, |b| ≥ 2
//!       = a1 b1 ⊗ a'                                       if |a| ≥ 2, |b| = 1
//!       = a1 b1 ⊗ (a' ⋄ (1 ⊗ b') + (1 ⊗ a') ⋄ b' − 1 ⊗ (a' ⋄ b'))   otherwise
//! ```
//!
//! and the Nijenhuis operator is the right shift `P(a) = 1 ⊗ a`.

use std::collections::HashMap;

use num_traits::One;

use crate::base::{BaseIndex, BaseKind};
use crate::error::Error;
use crate::linear::Combination;
use crate::scalar::Rational;
use crate::word::TensorWord;

/// An element of `Ш(A)`: a finite sum of rational multiples of tensor words.
pub type ShuffleElement = Combination<TensorWord>;

/// `Ш(A)` over a fixed base.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShuffleAlgebra {
    base: BaseKind,
}

impl ShuffleAlgebra {
    pub fn new(base: BaseKind) -> Self {
        Self { base }
    }

    pub fn base(&self) -> BaseKind {
        self.base
    }

    /// Checks that every letter of every word is a basis element of the base.
    pub fn validate(&self, e: &ShuffleElement) -> Result<(), Error> {
        e.keys().try_for_each(|w| w.validate(self.base))
    }

    /// `c ↦ c · 1_A`, the unit map.
    pub fn unit_embed(&self, c: Rational) -> ShuffleElement {
        ShuffleElement::term(TensorWord::unit(), c)
    }

    pub fn one(&self) -> ShuffleElement {
        self.unit_embed(Rational::one())
    }

    /// `u_n = 1^{⊗(n+1)}`.
    pub fn make_u(&self, n: usize) -> ShuffleElement {
        ShuffleElement::basis(TensorWord::units(n))
    }

    /// The right shift `P(a) = 1_A ⊗ a`, extended linearly.
    pub fn p_right(&self, e: &ShuffleElement) -> ShuffleElement {
        e.map_keys(|w| w.prepend(BaseIndex::UNIT))
    }

    pub fn mul(&self, a: &ShuffleElement, b: &ShuffleElement) -> ShuffleElement {
        let mut memo = ProductMemo::new();
        a.bilinear(b, |x, y| self.mul_words_memo(x, y, &mut memo))
    }

    pub fn mul_words(&self, a: &TensorWord, b: &TensorWord) -> ShuffleElement {
        self.mul_words_memo(a, b, &mut ProductMemo::new())
    }

    /// Word products sharing a cache; the four-case recursion revisits the
    /// same tails many times.
    pub(crate) fn mul_words_memo(
        &self,
        a: &TensorWord,
        b: &TensorWord,
        memo: &mut ProductMemo,
    ) -> ShuffleElement {
        if let Some(hit) = memo.get(&(a.clone(), b.clone())) {
            return hit.clone();
        }
        let head = self.base.mul_index(a.head(), b.head());
        let out = match (a.tail(), b.tail()) {
            (None, None) => ShuffleElement::basis(TensorWord::letter(head)),
            (None, Some(bt)) => ShuffleElement::basis(bt.prepend(head)),
            (Some(at), None) => ShuffleElement::basis(at.prepend(head)),
            (Some(at), Some(bt)) => {
                let shifted_a = at.prepend(BaseIndex::UNIT);
                let shifted_b = bt.prepend(BaseIndex::UNIT);
                let mut inner = self.mul_words_memo(&at, &shifted_b, memo);
                inner += &self.mul_words_memo(&shifted_a, &bt, memo);
                inner -= &self.p_right(&self.mul_words_memo(&at, &bt, memo));
                inner.map_keys(|w| w.prepend(head))
            }
        };
        memo.insert((a.clone(), b.clone()), out.clone());
        out
    }
}

pub(crate) type ProductMemo = HashMap<(TensorWord, TensorWord), ShuffleElement>;
