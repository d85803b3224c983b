//! Text syntax for elements and operator expressions.
//!
//! Element literals:
//!
//! ```text
//! elem     := ['+'|'-'] term (('+'|'-') term)*
//! term     := [rational '*'] word | rational
//! word     := letter ('|' letter)* | 'u' nat
//! letter   := '1' | 'x' ['^' nat]
//! rational := int ['/' posint]
//! ```
//!
//! A bare rational `c` stands for `c·1`. Expressions extend terms with
//! parentheses and operator applications:
//!
//! ```text
//! dr(a, b)   pr(a)   coprod(a)   counit(a)   antipode(a)
//! conv(f, g)(a)      with f, g in {id, S, e, Sb}
//! stuffle[λ](a, b)   (trivial base only)
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{ShuffleAlgebra, ShuffleElement};
use crate::base::{BaseIndex, BaseKind};
use crate::coalgebra::PairElement;
use crate::error::Error;
use crate::format::{render_element_with, render_pair_with, render_scalar, RenderStyle};
use crate::hopf::{EndoHandle, HopfLayer};
use crate::scalar::Rational;
use crate::stuffle::{stuffle, Weight};
use crate::word::TensorWord;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, Error> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            let n = digits.parse::<BigInt>().expect("ascii digits");
            out.push(Token {
                tok: Tok::Int(n),
                pos,
            });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            let ident: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push(Token {
                tok: Tok::Ident(ident),
                pos,
            });
        } else if "+-*/|^()[],".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                pos,
            });
            i += 1;
        } else {
            return Err(Error::Syntax {
                pos,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

/// Operators that can be applied in an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Op {
    Dr,
    Pr,
    Coprod,
    Counit,
    Antipode,
    Conv(EndoHandle, EndoHandle),
    Stuffle(Rational),
}

impl Op {
    fn arity(&self) -> usize {
        match self {
            Op::Dr | Op::Stuffle(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A bare rational, meaning that multiple of the unit.
    Scalar(Rational),
    Word {
        letters: Vec<(BaseIndex, usize)>,
        pos: usize,
    },
    UWord {
        n: usize,
        pos: usize,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Scale(Rational, Box<Expr>),
    Apply {
        op: Op,
        args: Vec<Expr>,
        pos: usize,
    },
}

struct Parser<'a> {
    toks: &'a [Token],
    at: usize,
    end: usize,
    allow_ops: bool,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.pos).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, Error> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn expr(&mut self) -> Result<Expr, Error> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, Error> {
        if let Some(Tok::Int(_)) = self.peek() {
            let start = self.at;
            let (q, plain_one) = self.rational()?;
            if self.eat('*') {
                return Ok(Expr::Scale(q, Box::new(self.factor()?)));
            }
            if plain_one {
                // a leading `1` is the unit letter
                self.at = start;
                return self.word();
            }
            if self.peek() == Some(&Tok::Sym('|')) {
                return self.err("only `1` or `x^k` may appear as a letter");
            }
            return Ok(Expr::Scalar(q));
        }
        self.factor()
    }

    /// Returns the rational and whether it was written as a plain `1`.
    fn rational(&mut self) -> Result<(Rational, bool), Error> {
        let num = match self.peek() {
            Some(Tok::Int(n)) => n.clone(),
            _ => return self.err("expected a number"),
        };
        self.at += 1;
        if self.eat('/') {
            let den = match self.peek() {
                Some(Tok::Int(d)) if !d.is_zero() => d.clone(),
                Some(Tok::Int(_)) => return self.err("zero denominator"),
                _ => return self.err("expected a denominator"),
            };
            self.at += 1;
            return Ok((Rational::new(num, den), false));
        }
        let plain_one = num.is_one();
        Ok((Rational::from_integer(num), plain_one))
    }

    fn signed_rational(&mut self) -> Result<Rational, Error> {
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let (q, _) = self.rational()?;
        Ok(if neg { -q } else { q })
    }

    fn factor(&mut self) -> Result<Expr, Error> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Int(_)) => self.word(),
            Some(Tok::Ident(id)) if id == "x" => self.word(),
            Some(Tok::Ident(id))
                if id.starts_with('u')
                    && id.len() > 1
                    && id[1..].bytes().all(|b| b.is_ascii_digit()) =>
            {
                self.at += 1;
                let n = id[1..].parse::<usize>().map_err(|_| Error::Syntax {
                    pos,
                    msg: "u-index too large".into(),
                })?;
                Ok(Expr::UWord { n, pos })
            }
            Some(Tok::Ident(id)) => self.application(&id, pos),
            Some(_) => self.err("expected a word, `(` or an operator"),
            None => self.err("unexpected end of input"),
        }
    }

    fn word(&mut self) -> Result<Expr, Error> {
        let pos = self.pos();
        let mut letters = vec![self.letter()?];
        while self.eat('|') {
            letters.push(self.letter()?);
        }
        Ok(Expr::Word { letters, pos })
    }

    fn letter(&mut self) -> Result<(BaseIndex, usize), Error> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) if n.is_one() => {
                self.at += 1;
                Ok((BaseIndex::UNIT, pos))
            }
            Some(Tok::Ident(id)) if id == "x" => {
                self.at += 1;
                if self.eat('^') {
                    let exp = match self.peek() {
                        Some(Tok::Int(n)) => {
                            u32::try_from(n.clone()).map_err(|_| Error::Syntax {
                                pos: self.pos(),
                                msg: "exponent too large".into(),
                            })?
                        }
                        _ => return self.err("expected an exponent"),
                    };
                    self.at += 1;
                    Ok((BaseIndex(exp), pos))
                } else {
                    Ok((BaseIndex(1), pos))
                }
            }
            _ => self.err("expected a letter `1` or `x^k`"),
        }
    }

    fn application(&mut self, id: &str, pos: usize) -> Result<Expr, Error> {
        if !self.allow_ops {
            return Err(Error::Syntax {
                pos,
                msg: format!(
                    "`{id}` is not a letter; operators are not allowed in element literals"
                ),
            });
        }
        self.at += 1;
        let op = match id {
            "dr" => Op::Dr,
            "pr" => Op::Pr,
            "coprod" => Op::Coprod,
            "counit" => Op::Counit,
            "antipode" => Op::Antipode,
            "conv" => {
                self.expect('(')?;
                let f = self.endo()?;
                self.expect(',')?;
                let g = self.endo()?;
                self.expect(')')?;
                Op::Conv(f, g)
            }
            "stuffle" => {
                self.expect('[')?;
                let lambda = self.signed_rational()?;
                self.expect(']')?;
                Op::Stuffle(lambda)
            }
            other => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unknown operator `{other}`"),
                })
            }
        };
        self.expect('(')?;
        let mut args = vec![self.expr()?];
        while self.eat(',') {
            args.push(self.expr()?);
        }
        self.expect(')')?;
        if args.len() != op.arity() {
            return Err(Error::Syntax {
                pos,
                msg: format!(
                    "`{id}` takes {} argument(s), got {}",
                    op.arity(),
                    args.len()
                ),
            });
        }
        Ok(Expr::Apply { op, args, pos })
    }

    fn endo(&mut self) -> Result<EndoHandle, Error> {
        match self.peek().cloned() {
            Some(Tok::Ident(id)) => {
                let pos = self.pos();
                self.at += 1;
                id.parse().map_err(|_| Error::Syntax {
                    pos,
                    msg: format!("unknown map `{id}` (expected id, S, e or Sb)"),
                })
            }
            _ => self.err("expected a map name"),
        }
    }
}

fn parse_with(text: &str, allow_ops: bool) -> Result<Expr, Error> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        at: 0,
        end: text.len(),
        allow_ops,
    };
    let e = p.expr()?;
    if p.at != toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

pub fn parse_expression(text: &str) -> Result<Expr, Error> {
    parse_with(text, true)
}

/// Parses an element literal and checks its letters against the base.
pub fn parse_element(text: &str, base: BaseKind) -> Result<ShuffleElement, Error> {
    let expr = parse_with(text, false)?;
    let ev = Evaluator::new(base, false);
    ev.eval(&expr)?.into_element(0)
}

/// A value produced by evaluating an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Element(ShuffleElement),
    Pair(PairElement),
}

impl Value {
    pub fn into_element(self, pos: usize) -> Result<ShuffleElement, Error> {
        match self {
            Value::Scalar(q) => Ok(ShuffleElement::term(TensorWord::unit(), q)),
            Value::Element(e) => Ok(e),
            Value::Pair(_) => Err(Error::Type {
                pos,
                msg: "expected an element of Ш(A), found a tensor pair".into(),
            }),
        }
    }

    pub fn render(&self, style: RenderStyle) -> String {
        match self {
            Value::Scalar(q) => render_scalar(q),
            Value::Element(e) => render_element_with(e, style),
            Value::Pair(p) => render_pair_with(p, style),
        }
    }
}

/// Evaluates expressions over a fixed base.
#[derive(Clone, Copy, Debug)]
pub struct Evaluator {
    hopf: HopfLayer,
}

impl Evaluator {
    pub fn new(base: BaseKind, allow_inadmissible: bool) -> Self {
        Self {
            hopf: HopfLayer::new(ShuffleAlgebra::new(base), allow_inadmissible),
        }
    }

    fn alg(&self) -> &ShuffleAlgebra {
        self.hopf.algebra()
    }

    pub fn eval_str(&self, text: &str) -> Result<Value, Error> {
        self.eval(&parse_expression(text)?)
    }

    pub fn eval(&self, expr: &Expr) -> Result<Value, Error> {
        let base = self.alg().base();
        match expr {
            Expr::Scalar(q) => Ok(Value::Scalar(q.clone())),
            Expr::Word { letters, .. } => {
                for &(l, pos) in letters {
                    if base.validate(l).is_err() {
                        return Err(Error::LetterBase {
                            pos,
                            msg: format!("letter {l} is not in the {base} base"),
                        });
                    }
                }
                let w = TensorWord::new(letters.iter().map(|&(l, _)| l).collect())?;
                Ok(Value::Element(ShuffleElement::basis(w)))
            }
            Expr::UWord { n, pos } => {
                if base != BaseKind::Trivial {
                    return Err(Error::LetterBase {
                        pos: *pos,
                        msg: format!("u-words need the trivial base, not {base}"),
                    });
                }
                Ok(Value::Element(self.alg().make_u(*n)))
            }
            Expr::Neg(e) => Ok(match self.eval(e)? {
                Value::Scalar(q) => Value::Scalar(-q),
                Value::Element(x) => Value::Element(-x),
                Value::Pair(p) => Value::Pair(-p),
            }),
            Expr::Scale(q, e) => Ok(match self.eval(e)? {
                Value::Scalar(r) => Value::Scalar(q * r),
                Value::Element(x) => Value::Element(x.scale(q)),
                Value::Pair(p) => Value::Pair(p.scale(q)),
            }),
            Expr::Add(a, b) => self.combine(a, b, false),
            Expr::Sub(a, b) => self.combine(a, b, true),
            Expr::Apply { op, args, pos } => self.apply(op, args, *pos),
        }
    }

    fn combine(&self, a: &Expr, b: &Expr, subtract: bool) -> Result<Value, Error> {
        let (x, y) = (self.eval(a)?, self.eval(b)?);
        let y = if subtract {
            match y {
                Value::Scalar(q) => Value::Scalar(-q),
                Value::Element(e) => Value::Element(-e),
                Value::Pair(p) => Value::Pair(-p),
            }
        } else {
            y
        };
        match (x, y) {
            (Value::Scalar(p), Value::Scalar(q)) => Ok(Value::Scalar(p + q)),
            (Value::Pair(p), Value::Pair(q)) => Ok(Value::Pair(p + q)),
            (Value::Pair(_), _) | (_, Value::Pair(_)) => Err(Error::Type {
                pos: 0,
                msg: "cannot add a tensor pair to an element or scalar".into(),
            }),
            (x, y) => Ok(Value::Element(x.into_element(0)? + y.into_element(0)?)),
        }
    }

    fn element_arg(&self, e: &Expr, pos: usize) -> Result<ShuffleElement, Error> {
        self.eval(e)?.into_element(pos)
    }

    fn apply(&self, op: &Op, args: &[Expr], pos: usize) -> Result<Value, Error> {
        let alg = self.alg();
        let a = self.element_arg(&args[0], pos)?;
        Ok(match op {
            Op::Dr => Value::Element(alg.mul(&a, &self.element_arg(&args[1], pos)?)),
            Op::Pr => Value::Element(alg.p_right(&a)),
            Op::Coprod => Value::Pair(alg.coproduct(&a)),
            Op::Counit => Value::Scalar(alg.counit(&a)),
            Op::Antipode => Value::Element(self.hopf.antipode(&a)?),
            Op::Conv(f, g) => Value::Element(self.hopf.convolve(*f, *g, &a)?),
            Op::Stuffle(lambda) => {
                let b = self.element_arg(&args[1], pos)?;
                Value::Element(stuffle(alg.base(), &a, &b, &Weight(lambda.clone()))?)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::render_element;
    use crate::scalar::{int, ratio};

    fn w(exps: &[u32]) -> TensorWord {
        TensorWord::from_exponents(exps).unwrap()
    }

    #[test]
    fn parse_examples() {
        let b = BaseKind::Binomial;
        assert_eq!(
            parse_element("x|x", b).unwrap(),
            ShuffleElement::basis(w(&[1, 1]))
        );
        let expect = ShuffleElement::term(w(&[2, 0, 1]), int(2));
        assert_eq!(parse_element("2*x^2|1|x", b).unwrap(), expect);
        assert_eq!(parse_element("2*(x^2|1|x)", b).unwrap(), expect);
        assert_eq!(
            parse_element("u2", BaseKind::Trivial).unwrap(),
            ShuffleElement::basis(w(&[0, 0, 0]))
        );
    }

    #[test]
    fn parse_sums_and_scalars() {
        let b = BaseKind::OneSided;
        let e = parse_element(" -3/2 * x  + x^0|x - 1|x ", b).unwrap();
        assert_eq!(e, ShuffleElement::term(w(&[1]), ratio(-3, 2)));
        assert!(parse_element("0", b).unwrap().is_zero());
        assert_eq!(
            parse_element("1", b).unwrap(),
            ShuffleElement::basis(w(&[0]))
        );
        assert_eq!(
            parse_element("5/3", b).unwrap(),
            ShuffleElement::term(w(&[0]), ratio(5, 3))
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let b = BaseKind::OneSided;
        assert!(matches!(
            parse_element("x|", b),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_element("x # x", b),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_element("2|x", b),
            Err(Error::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            parse_element("1/0*x", b),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_element("pr(x)", b),
            Err(Error::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_element("x x", b),
            Err(Error::Syntax { pos: 2, .. })
        ));
    }

    #[test]
    fn letter_base_mismatch() {
        assert!(matches!(
            parse_element("1|x", BaseKind::Trivial),
            Err(Error::LetterBase { pos: 2, .. })
        ));
        assert!(matches!(
            parse_element("x + u3", BaseKind::OneSided),
            Err(Error::LetterBase { pos: 4, .. })
        ));
        assert!(parse_element("1|1 + u1", BaseKind::Trivial).is_ok());
    }

    #[test]
    fn expressions_evaluate() {
        let ev = Evaluator::new(BaseKind::Binomial, false);
        let v = ev.eval_str("dr(x|x, x|x)").unwrap();
        assert_eq!(v.render(RenderStyle::Letters), "-x^2|1|x^2 + 2*x^2|x|x");
        let v = ev.eval_str("counit(2*1|1 + x)").unwrap();
        assert_eq!(v, Value::Scalar(int(2)));
        let v = ev.eval_str("coprod(x)").unwrap();
        assert_eq!(v.render(RenderStyle::Letters), "1 ⊗ x + x ⊗ 1");
        assert!(matches!(
            ev.eval_str("antipode(x)"),
            Err(Error::InadmissibleBase { .. })
        ));
        assert!(ev.eval_str("coprod(x) + x").is_err());

        let triv = Evaluator::new(BaseKind::Trivial, false);
        let v = triv.eval_str("stuffle[-1](u1, u1)").unwrap();
        assert_eq!(v.render(RenderStyle::UWords), "-u1 + 2*u2");
        let v = triv.eval_str("conv(id, S)(u3)").unwrap();
        assert_eq!(v.render(RenderStyle::UWords), "u0");
        let v = triv.eval_str("pr(pr(u0)) - u2").unwrap();
        assert_eq!(v, Value::Element(ShuffleElement::zero()));
    }

    #[test]
    fn render_then_parse() {
        let b = BaseKind::Binomial;
        let e: ShuffleElement = [
            (w(&[2, 1, 1]), int(2)),
            (w(&[2, 0, 2]), int(-1)),
            (w(&[0]), ratio(-7, 3)),
        ]
        .into_iter()
        .collect();
        assert_eq!(parse_element(&render_element(&e), b).unwrap(), e);
    }
}
