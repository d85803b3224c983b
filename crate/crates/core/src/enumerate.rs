//! Finite enumerations of basis words, used by the axiom suite and the tests.

use crate::base::{BaseIndex, BaseKind};
use crate::word::TensorWord;

/// All words of length `1..=max_len` with exponents `<= max_exp`, in canonical order.
///
/// On the trivial base this is `u_0, ..., u_{max_len - 1}`.
pub fn words_bounded(base: BaseKind, max_len: usize, max_exp: u32) -> Vec<TensorWord> {
    let letters = base.indices(max_exp);
    let mut out = Vec::new();
    let mut layer: Vec<Vec<BaseIndex>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for prefix in &layer {
            for &l in &letters {
                let mut w = prefix.clone();
                w.push(l);
                next.push(w);
            }
        }
        out.extend(
            next.iter()
                .cloned()
                .map(|w| TensorWord::new(w).expect("nonempty")),
        );
        layer = next;
    }
    out.sort();
    out
}

/// All words whose degree `Σ deg(a_i) + len − 1` equals `degree`, in canonical order.
pub fn words_of_degree(base: BaseKind, degree: u32) -> Vec<TensorWord> {
    if !base.has_monomials() {
        return vec![TensorWord::units(degree as usize)];
    }
    let mut out = Vec::new();
    for len in 1..=degree + 1 {
        let budget = degree + 1 - len;
        let mut buf = Vec::with_capacity(len as usize);
        compositions(len as usize, budget, &mut buf, &mut out);
    }
    out.sort();
    out
}

/// All words of degree `<= max_degree`.
pub fn words_up_to_degree(base: BaseKind, max_degree: u32) -> Vec<TensorWord> {
    let mut out: Vec<TensorWord> = (0..=max_degree)
        .flat_map(|d| words_of_degree(base, d))
        .collect();
    out.sort();
    out
}

// weak compositions of `budget` into `slots` parts
fn compositions(slots: usize, budget: u32, buf: &mut Vec<BaseIndex>, out: &mut Vec<TensorWord>) {
    if slots == 1 {
        buf.push(BaseIndex(budget));
        out.push(TensorWord::new(buf.clone()).expect("nonempty"));
        buf.pop();
        return;
    }
    for e in 0..=budget {
        buf.push(BaseIndex(e));
        compositions(slots - 1, budget - e, buf, out);
        buf.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounded_counts() {
        assert_eq!(words_bounded(BaseKind::OneSided, 3, 2).len(), 3 + 9 + 27);
        assert_eq!(words_bounded(BaseKind::Trivial, 4, 7).len(), 4);
        let w = words_bounded(BaseKind::Binomial, 2, 1);
        assert!(w.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn degree_counts_are_powers_of_two() {
        // words of degree n correspond to compositions of n + 1
        for n in 0..8 {
            assert_eq!(words_of_degree(BaseKind::OneSided, n).len(), 1 << n);
        }
        assert_eq!(
            words_of_degree(BaseKind::Trivial, 3),
            vec![TensorWord::units(3)]
        );
    }
}
