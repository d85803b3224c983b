//! Canonical text for elements.
//!
//! Words are written with `|` between letters, letters as `1`, `x`, `x^k`.
//! Terms appear in canonical word order, coefficient 1 is elided, and the
//! zero element is `0`. [`crate::parse::parse_element`] inverts
//! [`render_element`] exactly.

use num_traits::{One, Signed};

use crate::algebra::ShuffleElement;
use crate::coalgebra::PairElement;
use crate::linear::Combination;
use crate::scalar::{render_rational, Rational};
use crate::word::TensorWord;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RenderStyle {
    #[default]
    Letters,
    /// Words made only of unit letters print as `u<n>`.
    UWords,
}

pub fn render_word(w: &TensorWord, style: RenderStyle) -> String {
    if style == RenderStyle::UWords && w.is_all_units() {
        format!("u{}", w.len() - 1)
    } else {
        w.to_string()
    }
}

pub fn render_element(e: &ShuffleElement) -> String {
    render_element_with(e, RenderStyle::Letters)
}

pub fn render_element_with(e: &ShuffleElement, style: RenderStyle) -> String {
    render_terms(e, |w| render_word(w, style))
}

pub fn render_pair(p: &PairElement) -> String {
    render_pair_with(p, RenderStyle::Letters)
}

pub fn render_pair_with(p: &PairElement, style: RenderStyle) -> String {
    render_terms(p, |(l, r)| {
        format!("{} ⊗ {}", render_word(l, style), render_word(r, style))
    })
}

pub fn render_scalar(q: &Rational) -> String {
    render_rational(q)
}

fn render_terms<K, F>(c: &Combination<K>, mut body: F) -> String
where
    K: Ord + Clone,
    F: FnMut(&K) -> String,
{
    if c.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, coeff)) in c.iter().enumerate() {
        let negative = coeff.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let magnitude = coeff.abs();
        if !magnitude.is_one() {
            out.push_str(&render_rational(&magnitude));
            out.push('*');
        }
        out.push_str(&body(k));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn w(exps: &[u32]) -> TensorWord {
        TensorWord::from_exponents(exps).unwrap()
    }

    #[test]
    fn render_examples() {
        let e: ShuffleElement = [(w(&[2, 1, 1]), int(2)), (w(&[2, 0, 2]), int(-1))]
            .into_iter()
            .collect();
        assert_eq!(render_element(&e), "-x^2|1|x^2 + 2*x^2|x|x");
        assert_eq!(render_element(&ShuffleElement::zero()), "0");
        assert_eq!(render_element(&ShuffleElement::basis(w(&[0]))), "1");
    }

    #[test]
    fn render_signs_and_fractions() {
        let e: ShuffleElement = [(w(&[1]), ratio(-3, 2)), (w(&[0, 0]), int(-1))]
            .into_iter()
            .collect();
        assert_eq!(render_element(&e), "-3/2*x - 1|1");
        assert_eq!(render_element_with(&e, RenderStyle::UWords), "-3/2*x - u1");
    }

    #[test]
    fn render_pairs() {
        let p: PairElement = [
            ((w(&[1]), w(&[0, 1])), int(2)),
            ((w(&[0]), w(&[1, 1])), int(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(render_pair(&p), "1 ⊗ x|x + 2*x ⊗ 1|x");
    }
}
