use std::cmp::Ordering;
use std::fmt;

use crate::base::{BaseIndex, BaseKind};
use crate::error::Error;

/// A pure tensor `a1 ⊗ a2 ⊗ ... ⊗ am` of basis monomials, `m >= 1`.
///
/// Words order by length first, then lexicographically by exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorWord(Vec<BaseIndex>);

impl TensorWord {
    pub fn new(letters: Vec<BaseIndex>) -> Result<Self, Error> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self(letters))
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self, Error> {
        Self::new(exps.iter().copied().map(BaseIndex).collect())
    }

    pub fn letter(i: BaseIndex) -> Self {
        Self(vec![i])
    }

    /// The length-one word `1_A`.
    pub fn unit() -> Self {
        Self::letter(BaseIndex::UNIT)
    }

    /// `u_n = 1^{⊗(n+1)}`.
    pub fn units(n: usize) -> Self {
        Self(vec![BaseIndex::UNIT; n + 1])
    }

    pub fn letters(&self) -> &[BaseIndex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn head(&self) -> BaseIndex {
        self.0[0]
    }

    /// The word with its first letter removed, if anything remains.
    pub fn tail(&self) -> Option<TensorWord> {
        (self.0.len() > 1).then(|| Self(self.0[1..].to_vec()))
    }

    /// `letter ⊗ self`.
    pub fn prepend(&self, letter: BaseIndex) -> TensorWord {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Self(v)
    }

    pub fn is_unit(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_unit()
    }

    /// Whether every letter is `1_A`, i.e. the word is some `u_n`.
    pub fn is_all_units(&self) -> bool {
        self.0.iter().all(|l| l.is_unit())
    }

    pub fn validate(&self, base: BaseKind) -> Result<(), Error> {
        self.0.iter().try_for_each(|&l| base.validate(l))
    }
}

impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
