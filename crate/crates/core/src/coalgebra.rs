//! The cocycle coproduct and the counit on `Ш(A)`.
//!
//! On a length-one word the coproduct is the base coproduct. On longer words
//! it is fixed by the cocycle rule `Δ(1 ⊗ a') = (id ⊗ P)Δ(a')` together with
//! multiplicativity: `Δ(a1 ⊗ a') = Δ_A(a1) • (id ⊗ P)Δ(a')`, where `•` is the
//! componentwise product on `Ш(A) ⊗ Ш(A)`.

use crate::algebra::{ProductMemo, ShuffleAlgebra, ShuffleElement};
use crate::base::BaseIndex;
use crate::linear::Combination;
use crate::scalar::Rational;
use crate::word::TensorWord;

/// An element of `Ш(A) ⊗ Ш(A)`.
pub type PairElement = Combination<(TensorWord, TensorWord)>;

/// An element of `Ш(A) ⊗ Ш(A) ⊗ Ш(A)`.
pub type TripleElement = Combination<(TensorWord, TensorWord, TensorWord)>;

impl ShuffleAlgebra {
    /// The componentwise product `(a ⊗ b) • (c ⊗ d) = (a ⋄ c) ⊗ (b ⋄ d)`.
    pub fn pair_mul(&self, p: &PairElement, q: &PairElement) -> PairElement {
        let mut memo = ProductMemo::new();
        p.bilinear(q, |(a, b), (c, d)| {
            let left = self.mul_words_memo(a, c, &mut memo);
            let right = self.mul_words_memo(b, d, &mut memo);
            tensor(&left, &right)
        })
    }

    pub fn coproduct(&self, e: &ShuffleElement) -> PairElement {
        e.map_linear(|w| self.coproduct_word(w))
    }

    pub fn coproduct_word(&self, w: &TensorWord) -> PairElement {
        let head = self.base_coproduct_lifted(w.head());
        match w.tail() {
            None => head,
            Some(tail) => {
                let shifted = shift_right_leg(&self.coproduct_word(&tail));
                if w.head().is_unit() {
                    // Δ_A(1) = 1 ⊗ 1 is the unit of •
                    shifted
                } else {
                    self.pair_mul(&head, &shifted)
                }
            }
        }
    }

    fn base_coproduct_lifted(&self, letter: BaseIndex) -> PairElement {
        self.base()
            .coproduct_unchecked(letter)
            .map_keys(|&(l, r)| (TensorWord::letter(l), TensorWord::letter(r)))
    }

    /// `ε(a1 ⊗ ... ⊗ an) = ε_A(a1) ⋯ ε_A(an)`.
    pub fn counit(&self, e: &ShuffleElement) -> Rational {
        e.evaluate(|w| self.counit_word(w))
    }

    pub fn counit_word(&self, w: &TensorWord) -> Rational {
        let base = self.base();
        w.letters()
            .iter()
            .map(|&l| base.counit_unchecked(l))
            .fold(Rational::from_integer(1.into()), |acc, c| acc * c)
    }

    /// `(ε ⊗ id)Δ(e)` with the scalar leg absorbed into the coefficients.
    pub fn collapse_left(&self, p: &PairElement) -> ShuffleElement {
        p.map_linear(|(l, r)| ShuffleElement::term(r.clone(), self.counit_word(l)))
    }

    /// `(id ⊗ ε)Δ(e)` with the scalar leg absorbed into the coefficients.
    pub fn collapse_right(&self, p: &PairElement) -> ShuffleElement {
        p.map_linear(|(l, r)| ShuffleElement::term(l.clone(), self.counit_word(r)))
    }

    pub fn left_counit_check(&self, e: &ShuffleElement) -> bool {
        self.collapse_left(&self.coproduct(e)) == *e
    }

    /// Returns whether `(id ⊗ ε)Δ(e) = e`, along with the computed left side.
    pub fn right_counit_check(&self, e: &ShuffleElement) -> (bool, ShuffleElement) {
        let value = self.collapse_right(&self.coproduct(e));
        (value == *e, value)
    }

    /// `(id ⊗ Δ)Δ(e)`.
    pub fn coassoc_right(&self, e: &ShuffleElement) -> TripleElement {
        self.coproduct(e).map_linear(|(l, r)| {
            self.coproduct_word(r)
                .map_keys(|(r1, r2)| (l.clone(), r1.clone(), r2.clone()))
        })
    }

    /// `(Δ ⊗ id)Δ(e)`.
    pub fn coassoc_left(&self, e: &ShuffleElement) -> TripleElement {
        self.coproduct(e).map_linear(|(l, r)| {
            self.coproduct_word(l)
                .map_keys(|(l1, l2)| (l1.clone(), l2.clone(), r.clone()))
        })
    }

    pub fn coassoc_check(&self, e: &ShuffleElement) -> bool {
        self.coassoc_left(e) == self.coassoc_right(e)
    }
}

/// `a ⊗ b` for two elements.
pub fn tensor(a: &ShuffleElement, b: &ShuffleElement) -> PairElement {
    a.bilinear(b, |x, y| PairElement::basis((x.clone(), y.clone())))
}

/// `(id ⊗ P)` on pairs.
pub fn shift_right_leg(p: &PairElement) -> PairElement {
    p.map_keys(|(l, r)| (l.clone(), r.prepend(BaseIndex::UNIT)))
}

/// `(id ⊗ id ⊗ P)` on triples.
pub fn shift_last_leg(t: &TripleElement) -> TripleElement {
    t.map_keys(|(a, b, c)| (a.clone(), b.clone(), c.prepend(BaseIndex::UNIT)))
}

/// The left legs of a pair element, in term order.
pub fn left_legs(p: &PairElement) -> impl Iterator<Item = &TensorWord> {
    p.keys().map(|(l, _)| l)
}
