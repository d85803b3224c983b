use thiserror::Error;

use crate::base::BaseKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("x^{exponent} is not a basis element of the {base} base")]
    InvalidIndex { base: BaseKind, exponent: u32 },

    #[error("unknown base `{0}` (expected trivial, onesided or binomial)")]
    UnknownBase(String),

    #[error("tensor words must have at least one letter")]
    EmptyWord,

    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("at offset {pos}: {msg}")]
    LetterBase { pos: usize, msg: String },

    #[error("at offset {pos}: {msg}")]
    Type { pos: usize, msg: String },

    #[error(
        "the {base} base violates the one-sided grading condition; \
         the antipode is not warranted there (pass the exploratory override to compute it anyway)"
    )]
    InadmissibleBase { base: BaseKind },

    #[error("{op} is only defined on the trivial base, not {base}")]
    RequiresTrivialBase { op: &'static str, base: BaseKind },

    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),

    #[error("invalid suite configuration: {0}")]
    InvalidConfig(String),
}
