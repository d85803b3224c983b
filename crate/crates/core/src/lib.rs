//! Exact computation in free commutative Nijenhuis algebras `Ш(A)` over a
//! small family of base bialgebras, together with the left counital
//! bialgebra and right-antipode Hopf structure carried by `Ш(A)`.
//!
//! * [`base`]: the base bialgebras `A` (trivial, one-sided `k[x]`, binomial `k[x]`).
//! * [`algebra`]: words, the product `⋄` and the right shift `P`.
//! * [`coalgebra`]: the cocycle coproduct `Δ` and counit `ε`.
//! * [`hopf`]: grading, convolution, the right antipode and the binomial Hopf
//!   structure on `Ш(k)`.
//! * [`stuffle`]: the Rota–Baxter stuffle product on `Ш(k)`.
//! * [`parse`], [`format`]: text syntax.
//! * [`suite`]: the axiom suite behind `nijenhuis check`.

pub mod algebra;
pub mod base;
pub mod coalgebra;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod hopf;
pub mod linear;
pub mod parse;
pub mod sample;
pub mod scalar;
pub mod stuffle;
pub mod suite;
pub mod word;

pub use algebra::{ShuffleAlgebra, ShuffleElement};
pub use base::{BaseIndex, BaseKind, BaseVector};
pub use coalgebra::{PairElement, TripleElement};
pub use error::Error;
pub use format::{render_element, render_element_with, render_pair, RenderStyle};
pub use hopf::{BinomialHopf, EndoHandle, GradedDecomposition, HopfLayer};
pub use linear::Combination;
pub use parse::{parse_element, parse_expression, Evaluator, Value};
pub use scalar::Rational;
pub use stuffle::{identity_sum, nij_from_stuffle, stuffle_u, Weight};
pub use suite::{run_axiom_suite, OutputMode, SuiteConfig, SuiteReport};
pub use word::TensorWord;
