//! Base left counital bialgebras, given by structure constants on a monomial basis.
//!
//! Every supported base is spanned by monomials `x^n` (the trivial base only
//! by `x^0 = 1`). Product, coproduct, counit and degree are closed formulas in
//! the exponents, so all arithmetic above this layer is integer combinatorics.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linear::Combination;
use crate::scalar::{binomial, from_bigint, Rational};

/// The basis monomial `x^exponent` of the base algebra; exponent 0 is the unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BaseIndex(pub u32);

impl BaseIndex {
    pub const UNIT: BaseIndex = BaseIndex(0);

    pub fn exponent(self) -> u32 {
        self.0
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for BaseIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("1"),
            1 => f.write_str("x"),
            n => write!(f, "x^{n}"),
        }
    }
}

pub type BaseVector = Combination<BaseIndex>;

/// Coproduct values in `A ⊗ A`.
pub type BasePair = Combination<(BaseIndex, BaseIndex)>;

/// The supported base bialgebras.
///
/// * `Trivial`: the ground field itself, `Δ(1) = 1 ⊗ 1`, `ε(1) = 1`, all degrees 0.
/// * `OneSided`: `k[x]` with `Δ(x^n) = 1 ⊗ x^n`, a left counital bialgebra that is
///   not right counital.
/// * `Binomial`: `k[x]` with the binomial coproduct. A genuine bialgebra, but its
///   coproduct puts `x ⊗ 1` in degrees (1, 0), so it is not admissible for the
///   antipode layer.
///
/// Adding a new base means adding a variant and its four structure rules below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseKind {
    Trivial,
    OneSided,
    Binomial,
}

impl BaseKind {
    pub const ALL: [BaseKind; 3] = [BaseKind::Trivial, BaseKind::OneSided, BaseKind::Binomial];

    pub fn name(self) -> &'static str {
        match self {
            BaseKind::Trivial => "trivial",
            BaseKind::OneSided => "onesided",
            BaseKind::Binomial => "binomial",
        }
    }

    /// Whether monomials other than the unit are basis elements.
    pub fn has_monomials(self) -> bool {
        !matches!(self, BaseKind::Trivial)
    }

    /// Bases whose coproduct respects the one-sided grading condition
    /// `Δ(H_n) ⊆ H_0 ⊗ H_n ⊕ (⊕_{p,q>0} H_p ⊗ H_q)`.
    pub fn antipode_admissible(self) -> bool {
        !matches!(self, BaseKind::Binomial)
    }

    pub fn validate(self, i: BaseIndex) -> Result<(), Error> {
        if !self.has_monomials() && !i.is_unit() {
            return Err(Error::InvalidIndex {
                base: self,
                exponent: i.0,
            });
        }
        Ok(())
    }

    /// Product of two basis monomials.
    pub fn mul(self, i: BaseIndex, j: BaseIndex) -> Result<BaseVector, Error> {
        self.validate(i)?;
        self.validate(j)?;
        Ok(BaseVector::basis(self.mul_index(i, j)))
    }

    /// Product on the basis without validation. Every supported base multiplies
    /// monomials to a single monomial with coefficient 1.
    pub(crate) fn mul_index(self, i: BaseIndex, j: BaseIndex) -> BaseIndex {
        BaseIndex(i.0 + j.0)
    }

    pub fn coproduct(self, i: BaseIndex) -> Result<BasePair, Error> {
        self.validate(i)?;
        Ok(self.coproduct_unchecked(i))
    }

    pub(crate) fn coproduct_unchecked(self, i: BaseIndex) -> BasePair {
        match self {
            BaseKind::Trivial | BaseKind::OneSided => BasePair::basis((BaseIndex::UNIT, i)),
            BaseKind::Binomial => (0..=i.0)
                .map(|k| {
                    (
                        (BaseIndex(k), BaseIndex(i.0 - k)),
                        from_bigint(binomial(i.0 as u64, k as u64)),
                    )
                })
                .collect(),
        }
    }

    pub fn counit(self, i: BaseIndex) -> Result<Rational, Error> {
        self.validate(i)?;
        Ok(self.counit_unchecked(i))
    }

    pub(crate) fn counit_unchecked(self, i: BaseIndex) -> Rational {
        if i.is_unit() {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    pub fn degree(self, i: BaseIndex) -> Result<u32, Error> {
        self.validate(i)?;
        Ok(self.degree_unchecked(i))
    }

    pub(crate) fn degree_unchecked(self, i: BaseIndex) -> u32 {
        match self {
            BaseKind::Trivial => 0,
            BaseKind::OneSided | BaseKind::Binomial => i.0,
        }
    }

    /// All valid basis indices with exponent at most `max_exp`.
    pub fn indices(self, max_exp: u32) -> Vec<BaseIndex> {
        if self.has_monomials() {
            (0..=max_exp).map(BaseIndex).collect()
        } else {
            vec![BaseIndex::UNIT]
        }
    }
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "trivial" | "k" => Ok(BaseKind::Trivial),
            "onesided" | "onesided-poly" | "one-sided" => Ok(BaseKind::OneSided),
            "binomial" | "binomial-poly" => Ok(BaseKind::Binomial),
            other => Err(Error::UnknownBase(other.to_string())),
        }
    }
}
