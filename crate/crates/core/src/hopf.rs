//! Grading, convolution and the right antipode.
//!
//! A word `a1 ⊗ ... ⊗ am` has degree `Σ deg(ai) + m − 1`. On bases whose
//! coproduct satisfies the one-sided grading condition, the antipode is the
//! recursion
//!
//! ```text
//! S(1) = 1,    S(x) = −Σ x' ⋄ S(x'')  for x ∈ ker ε,   Δ̃(x) = Σ x' ⊗ x''
//! ```
//!
//! extended to all of `Ш(A)` through `Ш(A) = k·1 ⊕ ker ε`:
//! `S(e) = ε(e)·1 + S(e − ε(e)·1)`.
//!
//! `ε` is not zero on every positive-degree word (`ε(1 ⊗ 1) = 1`), so the
//! recursion is only ever applied to projected elements, never to raw
//! homogeneous components.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{ShuffleAlgebra, ShuffleElement};
use crate::base::BaseKind;
use crate::coalgebra::{tensor, PairElement};
use crate::enumerate::words_of_degree;
use crate::error::Error;
use crate::linear::Combination;
use crate::scalar::{binomial, from_bigint, sign_power, Rational};
use crate::word::TensorWord;

/// Homogeneous components of an element, keyed by degree. Zero components are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedDecomposition {
    components: BTreeMap<u32, ShuffleElement>,
}

impl GradedDecomposition {
    pub fn components(&self) -> &BTreeMap<u32, ShuffleElement> {
        &self.components
    }

    pub fn component(&self, degree: u32) -> Option<&ShuffleElement> {
        self.components.get(&degree)
    }

    pub fn recompose(&self) -> ShuffleElement {
        let mut out = ShuffleElement::zero();
        for c in self.components.values() {
            out += c;
        }
        out
    }
}

impl ShuffleAlgebra {
    pub fn degree(&self, w: &TensorWord) -> u32 {
        let base = self.base();
        let letters: u32 = w.letters().iter().map(|&l| base.degree_unchecked(l)).sum();
        letters + w.len() as u32 - 1
    }

    /// Largest degree among the words of `e`; `None` for zero.
    pub fn max_degree(&self, e: &ShuffleElement) -> Option<u32> {
        e.keys().map(|w| self.degree(w)).max()
    }

    pub fn is_homogeneous(&self, e: &ShuffleElement, degree: u32) -> bool {
        e.keys().all(|w| self.degree(w) == degree)
    }

    pub fn decompose(&self, e: &ShuffleElement) -> GradedDecomposition {
        let mut components: BTreeMap<u32, ShuffleElement> = BTreeMap::new();
        for (w, c) in e {
            components
                .entry(self.degree(w))
                .or_default()
                .add_term(w.clone(), c.clone());
        }
        GradedDecomposition { components }
    }

    /// `Δ̃(e) = Δ(e) − 1 ⊗ e`.
    pub fn reduced_coproduct(&self, e: &ShuffleElement) -> PairElement {
        let mut d = self.coproduct(e);
        d -= &tensor(&self.one(), e);
        d
    }

    /// Checks the one-sided filtration on every word of degree exactly `n`:
    /// coproduct terms lie in `H_0 ⊗ H_n` or `H_p ⊗ H_q` with `p, q > 0`,
    /// `p + q = n`, and products of homogeneous words of degrees `p + q = n`
    /// are homogeneous of degree `n`.
    pub fn filtration_check(&self, n: u32) -> bool {
        self.filtration_violation(n).is_none()
    }

    /// The first word (or pair of words) breaking [`Self::filtration_check`].
    pub fn filtration_violation(&self, n: u32) -> Option<Vec<TensorWord>> {
        for w in words_of_degree(self.base(), n) {
            let ok = self.coproduct_word(&w).keys().all(|(l, r)| {
                let (p, q) = (self.degree(l), self.degree(r));
                (p == 0 && q == n) || (p > 0 && q > 0 && p + q == n)
            });
            if !ok {
                return Some(vec![w]);
            }
        }
        for p in 0..=n {
            let left = words_of_degree(self.base(), p);
            let right = words_of_degree(self.base(), n - p);
            for a in &left {
                for b in &right {
                    if !self.is_homogeneous(&self.mul_words(a, b), n) {
                        return Some(vec![a.clone(), b.clone()]);
                    }
                }
            }
        }
        None
    }
}

/// A linear endomorphism of `Ш(A)` that can appear in a convolution product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EndoHandle {
    Identity,
    Antipode,
    /// `e = μ ∘ ε`.
    UnitCounit,
    /// `w ↦ (−1)^deg(w) w`; on `Ш(k)` this is `u_n ↦ (−1)^n u_n`.
    BinomialAntipode,
}

impl FromStr for EndoHandle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "id" | "identity" => Ok(EndoHandle::Identity),
            "S" | "antipode" => Ok(EndoHandle::Antipode),
            "e" | "unit-counit" => Ok(EndoHandle::UnitCounit),
            "Sb" | "binomial-antipode" => Ok(EndoHandle::BinomialAntipode),
            other => Err(Error::Syntax {
                pos: 0,
                msg: format!("unknown endomorphism `{other}`"),
            }),
        }
    }
}

impl fmt::Display for EndoHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EndoHandle::Identity => "id",
            EndoHandle::Antipode => "S",
            EndoHandle::UnitCounit => "e",
            EndoHandle::BinomialAntipode => "Sb",
        })
    }
}

/// One recursive antipode evaluation: the max degree of the caller's argument
/// and of the right leg it recursed into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecursionStep {
    pub parent_degree: u32,
    pub child_degree: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AntipodeTrace {
    pub steps: Vec<RecursionStep>,
}

impl AntipodeTrace {
    /// Whether every recursive call strictly lowered the max degree.
    pub fn strictly_decreasing(&self) -> bool {
        self.steps.iter().all(|s| s.child_degree < s.parent_degree)
    }
}

/// The convolution layer over `Ш(A)`, gated on antipode admissibility.
#[derive(Clone, Copy, Debug)]
pub struct HopfLayer {
    alg: ShuffleAlgebra,
    exploratory: bool,
}

impl HopfLayer {
    /// `allow_inadmissible` lets the antipode run on bases that break the
    /// grading condition; results there carry no correctness claim.
    pub fn new(alg: ShuffleAlgebra, allow_inadmissible: bool) -> Self {
        Self {
            alg,
            exploratory: allow_inadmissible,
        }
    }

    pub fn algebra(&self) -> &ShuffleAlgebra {
        &self.alg
    }

    fn gate(&self) -> Result<(), Error> {
        let base = self.alg.base();
        if base.antipode_admissible() || self.exploratory {
            Ok(())
        } else {
            Err(Error::InadmissibleBase { base })
        }
    }

    pub fn antipode(&self, e: &ShuffleElement) -> Result<ShuffleElement, Error> {
        self.antipode_traced(e).map(|(s, _)| s)
    }

    pub fn antipode_traced(
        &self,
        e: &ShuffleElement,
    ) -> Result<(ShuffleElement, AntipodeTrace), Error> {
        self.gate()?;
        let mut memo = HashMap::new();
        let mut trace = AntipodeTrace::default();
        let s = self.antipode_rec(e, &mut memo, &mut trace);
        Ok((s, trace))
    }

    fn antipode_rec(
        &self,
        e: &ShuffleElement,
        memo: &mut HashMap<TensorWord, ShuffleElement>,
        trace: &mut AntipodeTrace,
    ) -> ShuffleElement {
        let alg = &self.alg;
        let eps = alg.counit(e);
        let mut kernel_part = e.clone();
        kernel_part -= &alg.unit_embed(eps.clone());

        let mut out = alg.unit_embed(eps);
        let parent_degree = alg.max_degree(&kernel_part).unwrap_or(0);
        for ((left, right), c) in alg.reduced_coproduct(&kernel_part) {
            let s_right = match memo.get(&right) {
                Some(s) => s.clone(),
                None => {
                    trace.steps.push(RecursionStep {
                        parent_degree,
                        child_degree: alg.degree(&right),
                    });
                    let s = self.antipode_rec(&ShuffleElement::basis(right.clone()), memo, trace);
                    memo.insert(right, s.clone());
                    s
                }
            };
            let prod = alg.mul(&ShuffleElement::basis(left), &s_right);
            out.add_scaled(&prod, &-c);
        }
        out
    }

    pub fn apply(&self, f: EndoHandle, e: &ShuffleElement) -> Result<ShuffleElement, Error> {
        let alg = &self.alg;
        Ok(match f {
            EndoHandle::Identity => e.clone(),
            EndoHandle::Antipode => self.antipode(e)?,
            EndoHandle::UnitCounit => alg.unit_embed(alg.counit(e)),
            EndoHandle::BinomialAntipode => e
                .iter()
                .map(|(w, c)| (w.clone(), c * sign_power(alg.degree(w) as u64)))
                .collect(),
        })
    }

    /// `(f ∗ g)(e) = Σ f(e') ⋄ g(e'')` over `Δ(e) = Σ e' ⊗ e''`.
    pub fn convolve(
        &self,
        f: EndoHandle,
        g: EndoHandle,
        e: &ShuffleElement,
    ) -> Result<ShuffleElement, Error> {
        let alg = &self.alg;
        let mut out = ShuffleElement::zero();
        for ((l, r), c) in alg.coproduct(e) {
            let fl = self.apply(f, &ShuffleElement::basis(l))?;
            let gr = self.apply(g, &ShuffleElement::basis(r))?;
            out.add_scaled(&alg.mul(&fl, &gr), &c);
        }
        Ok(out)
    }
}

/// The binomial Hopf structure on `Ш(k) = k[u_1]`: `Δ(u_n) = Σ C(n,i) u_i ⊗ u_{n−i}`,
/// `ε(u_n) = δ_{n,0}`, `S(u_n) = (−1)^n u_n`. Independent of the cocycle coproduct.
#[derive(Clone, Copy, Debug)]
pub struct BinomialHopf {
    alg: ShuffleAlgebra,
}

impl BinomialHopf {
    pub fn new(base: BaseKind) -> Result<Self, Error> {
        if base != BaseKind::Trivial {
            return Err(Error::RequiresTrivialBase {
                op: "the binomial Hopf structure",
                base,
            });
        }
        Ok(Self {
            alg: ShuffleAlgebra::new(base),
        })
    }

    pub fn algebra(&self) -> &ShuffleAlgebra {
        &self.alg
    }

    pub fn coproduct_u(&self, n: usize) -> PairElement {
        (0..=n)
            .map(|i| {
                (
                    (TensorWord::units(i), TensorWord::units(n - i)),
                    from_bigint(binomial(n as u64, i as u64)),
                )
            })
            .collect()
    }

    pub fn antipode_u(&self, n: usize) -> ShuffleElement {
        ShuffleElement::term(TensorWord::units(n), sign_power(n as u64))
    }

    pub fn counit_u(&self, n: usize) -> Rational {
        if n == 0 {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    pub fn coproduct(&self, e: &ShuffleElement) -> PairElement {
        e.map_linear(|w| self.coproduct_u(w.len() - 1))
    }

    pub fn apply(&self, f: EndoHandle, e: &ShuffleElement) -> ShuffleElement {
        match f {
            EndoHandle::Identity => e.clone(),
            EndoHandle::Antipode | EndoHandle::BinomialAntipode => {
                e.map_linear(|w| self.antipode_u(w.len() - 1))
            }
            EndoHandle::UnitCounit => {
                let c = e.evaluate(|w| self.counit_u(w.len() - 1));
                self.alg.unit_embed(c)
            }
        }
    }

    pub fn convolve(&self, f: EndoHandle, g: EndoHandle, e: &ShuffleElement) -> ShuffleElement {
        let mut out = ShuffleElement::zero();
        for ((l, r), c) in self.coproduct(e) {
            let fl = self.apply(f, &ShuffleElement::basis(l));
            let gr = self.apply(g, &ShuffleElement::basis(r));
            out.add_scaled(&self.alg.mul(&fl, &gr), &c);
        }
        out
    }
}

/// Convenience: pair element from a list of `(left, right, coefficient)`.
pub fn pair_from_terms<I>(terms: I) -> PairElement
where
    I: IntoIterator<Item = (TensorWord, TensorWord, Rational)>,
{
    terms
        .into_iter()
        .map(|(l, r, c)| ((l, r), c))
        .collect::<Combination<_>>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn w(exps: &[u32]) -> TensorWord {
        TensorWord::from_exponents(exps).unwrap()
    }

    fn el(exps: &[u32]) -> ShuffleElement {
        ShuffleElement::basis(w(exps))
    }

    #[test]
    fn degree_examples() {
        let poly = ShuffleAlgebra::new(BaseKind::OneSided);
        assert_eq!(poly.degree(&w(&[1, 2])), 4);
        assert_eq!(poly.degree(&w(&[0])), 0);
        let triv = ShuffleAlgebra::new(BaseKind::Trivial);
        for n in 0..8 {
            assert_eq!(triv.degree(&TensorWord::units(n)), n as u32);
        }
    }

    #[test]
    fn decompose_examples() {
        let poly = ShuffleAlgebra::new(BaseKind::OneSided);
        let e = el(&[1]) + el(&[0, 1]);
        let d = poly.decompose(&e);
        assert_eq!(d.components().len(), 2);
        assert_eq!(d.component(1), Some(&el(&[1])));
        assert_eq!(d.component(2), Some(&el(&[0, 1])));
        assert_eq!(d.recompose(), e);
        assert!(poly
            .decompose(&ShuffleElement::zero())
            .components()
            .is_empty());
        let triv = ShuffleAlgebra::new(BaseKind::Trivial);
        let d = triv.decompose(&(triv.one() + triv.make_u(1)));
        assert_eq!(d.component(0), Some(&triv.one()));
        assert_eq!(d.component(1), Some(&triv.make_u(1)));
    }

    #[test]
    fn reduced_coproduct_examples() {
        let triv = ShuffleAlgebra::new(BaseKind::Trivial);
        for n in 0..6 {
            assert!(triv.reduced_coproduct(&triv.make_u(n)).is_zero());
        }
        let bin = ShuffleAlgebra::new(BaseKind::Binomial);
        assert_eq!(
            bin.reduced_coproduct(&el(&[1])),
            PairElement::basis((w(&[1]), w(&[0])))
        );
        assert!(bin.reduced_coproduct(&el(&[0])).is_zero());
    }

    #[test]
    fn antipode_examples() {
        let triv = HopfLayer::new(ShuffleAlgebra::new(BaseKind::Trivial), false);
        assert_eq!(triv.antipode(&el(&[0])).unwrap(), el(&[0]));
        for n in 0..9 {
            let u = triv.algebra().make_u(n);
            assert_eq!(triv.antipode(&u).unwrap(), el(&[0]), "S(u_{n})");
        }
        let one = HopfLayer::new(ShuffleAlgebra::new(BaseKind::OneSided), false);
        assert!(one.antipode(&el(&[1, 1])).unwrap().is_zero());
    }

    #[test]
    fn antipode_gate() {
        let bin = HopfLayer::new(ShuffleAlgebra::new(BaseKind::Binomial), false);
        assert_eq!(
            bin.antipode(&el(&[1])),
            Err(Error::InadmissibleBase {
                base: BaseKind::Binomial
            })
        );
        let bin = HopfLayer::new(ShuffleAlgebra::new(BaseKind::Binomial), true);
        assert_eq!(bin.antipode(&el(&[1])).unwrap(), -el(&[1]));
    }

    #[test]
    fn convolve_examples() {
        let triv = HopfLayer::new(ShuffleAlgebra::new(BaseKind::Trivial), false);
        let u3 = triv.algebra().make_u(3);
        assert_eq!(
            triv.convolve(EndoHandle::Identity, EndoHandle::Antipode, &u3)
                .unwrap(),
            el(&[0])
        );
        assert_eq!(
            triv.convolve(EndoHandle::Identity, EndoHandle::Antipode, &el(&[0]))
                .unwrap(),
            el(&[0])
        );
        let bin = HopfLayer::new(ShuffleAlgebra::new(BaseKind::Binomial), false);
        let word = el(&[2, 0, 1]);
        assert_eq!(
            bin.convolve(EndoHandle::UnitCounit, EndoHandle::Identity, &word)
                .unwrap(),
            word
        );
    }

    #[test]
    fn exploratory_binomial_recursion_terminates() {
        let bin = HopfLayer::new(ShuffleAlgebra::new(BaseKind::Binomial), true);
        let (s, trace) = bin.antipode_traced(&el(&[1, 2])).unwrap();
        assert!(!trace.steps.is_empty());
        assert!(trace.strictly_decreasing());
        let lhs = bin
            .convolve(EndoHandle::Identity, EndoHandle::Antipode, &el(&[1, 2]))
            .unwrap();
        assert!(lhs.is_zero());
        assert!(!s.is_zero());
    }

    #[test]
    fn filtration_examples() {
        for base in [BaseKind::Trivial, BaseKind::OneSided] {
            let alg = ShuffleAlgebra::new(base);
            for n in 0..=4 {
                assert!(alg.filtration_check(n), "{base} n={n}");
            }
        }
        let bin = ShuffleAlgebra::new(BaseKind::Binomial);
        assert_eq!(bin.filtration_violation(1), Some(vec![w(&[1])]));
    }

    #[test]
    fn binomial_structure_examples() {
        let h = BinomialHopf::new(BaseKind::Trivial).unwrap();
        let u = TensorWord::units;
        let expect = pair_from_terms([
            (u(0), u(2), int(1)),
            (u(1), u(1), int(2)),
            (u(2), u(0), int(1)),
        ]);
        assert_eq!(h.coproduct_u(2), expect);
        assert_eq!(h.coproduct_u(0), PairElement::basis((u(0), u(0))));
        assert_eq!(h.antipode_u(0), el(&[0]));
        assert_eq!(h.antipode_u(3), -ShuffleElement::basis(u(3)));
        assert!(BinomialHopf::new(BaseKind::OneSided).is_err());
    }
}
