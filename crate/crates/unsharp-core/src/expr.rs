//! A small expression language for evaluating named propositions under
//! the connectives and tense operators, used by the CLI to print
//! evaluation tables.
//!
//! ```text
//! p*q    G(p)    G(p)=>G(q)    H(phi(p=>q))    (p+q)&r
//! ```
//!
//! Binary operators are `+` (sum), `&` (product), `*` (conjunction),
//! `=>`, `->`, `~>` (the implications). One binary operator per
//! parenthesis level; nest with parentheses. `P/F/H/G` apply to a
//! proposition or to `phi(...)` of a set-valued expression. Bare names
//! resolve to propositions first, then to elements (as constant
//! propositions).

use crate::algebra::EffectAlgebra;
use crate::render;
use crate::tense::{
    self, phi, Proposition, PropositionFamily, SetProposition, TenseError, TenseOp, TimeFrame,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error at offset {at}: {msg}")]
    Parse { at: usize, msg: String },
    #[error("`{0}` names neither a proposition nor an element")]
    UnknownName(String),
    #[error("{0}")]
    Type(String),
    #[error(transparent)]
    Tense(#[from] TenseError),
}

/// The value of an expression: element-valued, set-valued, or a
/// selection family (the latter only as a tense-operator argument).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Prop(Proposition),
    SetProp(SetProposition),
    Family(PropositionFamily),
}

impl Value {
    /// One rendered cell per time point; families have no pointwise
    /// rendering.
    pub fn cells(&self, ea: &EffectAlgebra) -> Result<Vec<String>, ExprError> {
        match self {
            Value::Prop(p) => Ok(p.values().iter().map(|&v| ea.id(v).to_string()).collect()),
            Value::SetProp(x) => Ok(x
                .values()
                .iter()
                .map(|&v| render::set_label(ea, v))
                .collect()),
            Value::Family(_) => Err(ExprError::Type(
                "phi(...) only makes sense inside a tense operator".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Open,
    Close,
    Op(BinOp),
}

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
enum BinOp {
    Plus,
    Odot,
    Otimes,
    ImpDouble,
    ImpArrow,
    ImpSquig,
}

const EXPR_RESERVED: &str = "[]{},:#()&*+=~><|";

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            '+' => Some(Tok::Op(BinOp::Plus)),
            '&' => Some(Tok::Op(BinOp::Odot)),
            '*' => Some(Tok::Op(BinOp::Otimes)),
            _ => None,
        };
        if let Some(tok) = tok {
            out.push((i, tok));
            i += 1;
            continue;
        }
        let two: String = chars[i..(i + 2).min(chars.len())].iter().collect();
        let op = match two.as_str() {
            "=>" => Some(BinOp::ImpDouble),
            "->" => Some(BinOp::ImpArrow),
            "~>" => Some(BinOp::ImpSquig),
            _ => None,
        };
        if let Some(op) = op {
            out.push((i, Tok::Op(op)));
            i += 2;
            continue;
        }
        if EXPR_RESERVED.contains(c) {
            return Err(ExprError::Parse {
                at: i,
                msg: format!("unexpected `{c}`"),
            });
        }
        let start = i;
        while i < chars.len() && !chars[i].is_whitespace() && !EXPR_RESERVED.contains(chars[i]) {
            // `-` only acts as an operator head inside `->`.
            if chars[i] == '-' && i + 1 < chars.len() && chars[i + 1] == '>' {
                break;
            }
            i += 1;
        }
        out.push((start, Tok::Ident(chars[start..i].iter().collect())));
    }
    Ok(out)
}

/// Evaluation context: the algebra, the frame, and the named
/// propositions in scope.
pub struct Context<'a> {
    pub ea: &'a EffectAlgebra,
    pub frame: &'a TimeFrame,
    pub props: &'a [(String, Proposition)],
}

struct Parser<'a, 'b> {
    ctx: &'b Context<'a>,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl<'a, 'b> Parser<'a, 'b> {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_open(&mut self, what: &str) -> Result<(), ExprError> {
        match self.next() {
            Some((_, Tok::Open)) => Ok(()),
            Some((at, _)) => Err(ExprError::Parse {
                at,
                msg: format!("{what} expects `(`"),
            }),
            None => Err(ExprError::Parse {
                at: usize::MAX,
                msg: format!("{what} expects `(`"),
            }),
        }
    }

    fn expect_close(&mut self) -> Result<(), ExprError> {
        match self.next() {
            Some((_, Tok::Close)) => Ok(()),
            Some((at, _)) => Err(ExprError::Parse {
                at,
                msg: "expected `)`".into(),
            }),
            None => Err(ExprError::Parse {
                at: usize::MAX,
                msg: "expected `)`".into(),
            }),
        }
    }

    fn resolve(&self, name: &str) -> Result<Value, ExprError> {
        if let Some((_, p)) = self.ctx.props.iter().find(|(n, _)| n == name) {
            return Ok(Value::Prop(p.clone()));
        }
        if let Some(e) = self.ctx.ea.lookup(name) {
            return Ok(Value::Prop(Proposition::constant(self.ctx.frame.len(), e)));
        }
        Err(ExprError::UnknownName(name.to_string()))
    }

    fn term(&mut self) -> Result<Value, ExprError> {
        match self.next() {
            Some((_, Tok::Open)) => {
                let v = self.expr()?;
                self.expect_close()?;
                Ok(v)
            }
            Some((at, Tok::Ident(name))) => {
                if let Some(op) = TenseOp::from_name(&name) {
                    if matches!(self.peek(), Some((_, Tok::Open))) {
                        self.expect_open(op.name())?;
                        let arg = self.expr()?;
                        self.expect_close()?;
                        let family = match arg {
                            Value::Prop(p) => PropositionFamily::singleton(p),
                            Value::Family(f) => f,
                            Value::SetProp(_) => {
                                return Err(ExprError::Type(format!(
                                    "{} needs a proposition or phi(...); wrap set-valued \
                                     arguments in phi",
                                    op.name()
                                )))
                            }
                        };
                        return Ok(Value::SetProp(tense::apply(
                            self.ctx.ea,
                            self.ctx.frame,
                            op,
                            &family,
                        )?));
                    }
                }
                if name == "phi" && matches!(self.peek(), Some((_, Tok::Open))) {
                    self.expect_open("phi")?;
                    let arg = self.expr()?;
                    self.expect_close()?;
                    let x = match arg {
                        Value::Prop(p) => SetProposition::of(&p),
                        Value::SetProp(x) => x,
                        Value::Family(_) => {
                            return Err(ExprError::Type("phi(phi(...)) is not meaningful".into()))
                        }
                    };
                    return Ok(Value::Family(phi(self.ctx.ea, &x)?));
                }
                let _ = at;
                self.resolve(&name)
            }
            Some((at, _)) => Err(ExprError::Parse {
                at,
                msg: "expected a term".into(),
            }),
            None => Err(ExprError::Parse {
                at: usize::MAX,
                msg: "expected a term".into(),
            }),
        }
    }

    fn expr(&mut self) -> Result<Value, ExprError> {
        let left = self.term()?;
        let Some((_, Tok::Op(op))) = self.peek().cloned() else {
            return Ok(left);
        };
        self.pos += 1;
        let right = self.term()?;
        if let Some((at, Tok::Op(_))) = self.peek() {
            return Err(ExprError::Parse {
                at: *at,
                msg: "chaining binary operators needs parentheses".into(),
            });
        }
        self.apply_binop(op, left, right)
    }

    fn apply_binop(&self, op: BinOp, left: Value, right: Value) -> Result<Value, ExprError> {
        let ea = self.ctx.ea;
        let frame = self.ctx.frame;
        let as_set = |v: Value| -> Result<SetProposition, ExprError> {
            match v {
                Value::Prop(p) => Ok(SetProposition::of(&p)),
                Value::SetProp(x) => Ok(x),
                Value::Family(_) => Err(ExprError::Type(
                    "phi(...) cannot be a binary operand".into(),
                )),
            }
        };
        match op {
            BinOp::Plus | BinOp::Odot => {
                // Element-valued when both sides are; set-lifted otherwise.
                if let (Value::Prop(p), Value::Prop(q)) = (&left, &right) {
                    let v = if op == BinOp::Plus {
                        tense::pointwise_plus(ea, frame, p, q)?
                    } else {
                        tense::pointwise_odot(ea, frame, p, q)?
                    };
                    return Ok(Value::Prop(v));
                }
                let (x, y) = (as_set(left)?, as_set(right)?);
                let v = if op == BinOp::Plus {
                    tense::pointwise_set_plus(ea, frame, &x, &y)?
                } else {
                    tense::pointwise_set_odot(ea, frame, &x, &y)?
                };
                Ok(Value::SetProp(v))
            }
            BinOp::Otimes => {
                let (x, y) = (as_set(left)?, as_set(right)?);
                Ok(Value::SetProp(tense::pointwise_set_otimes(ea, &x, &y)))
            }
            BinOp::ImpDouble => {
                let (x, y) = (as_set(left)?, as_set(right)?);
                Ok(Value::SetProp(tense::pointwise_set_imp_double(ea, &x, &y)))
            }
            BinOp::ImpArrow => match (left, right) {
                (Value::Prop(p), Value::Prop(q)) => {
                    Ok(Value::SetProp(tense::pointwise_imp_arrow(ea, &p, &q)))
                }
                _ => Err(ExprError::Type("-> takes element-valued operands".into())),
            },
            BinOp::ImpSquig => match (left, right) {
                (Value::Prop(p), Value::Prop(q)) => {
                    Ok(Value::Prop(tense::pointwise_squig(ea, frame, &p, &q)?))
                }
                _ => Err(ExprError::Type("~> takes element-valued operands".into())),
            },
        }
    }
}

/// Parses and evaluates one expression in the given context.
pub fn eval(ctx: &Context, input: &str) -> Result<Value, ExprError> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(ExprError::Parse {
            at: 0,
            msg: "empty expression".into(),
        });
    }
    let mut parser = Parser { ctx, toks, pos: 0 };
    let value = parser.expr()?;
    if let Some((at, _)) = parser.peek() {
        return Err(ExprError::Parse {
            at: *at,
            msg: "trailing input".into(),
        });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::nine_element;
    use crate::tense::tests::chain_frame;

    fn ctx_props() -> Vec<(String, Proposition)> {
        vec![
            ("p".into(), Proposition::new(vec![7, 5, 7])),
            ("q".into(), Proposition::new(vec![6, 6, 5])),
        ]
    }

    fn check(expr: &str, expected: &[&str]) {
        let ea = nine_element();
        let frame = chain_frame();
        let props = ctx_props();
        let ctx = Context {
            ea: &ea,
            frame: &frame,
            props: &props,
        };
        let value = eval(&ctx, expr).unwrap_or_else(|e| panic!("{expr}: {e}"));
        let cells = value.cells(&ea).unwrap();
        assert_eq!(cells, expected, "{expr}");
    }

    #[test]
    fn sample_rows_evaluate() {
        check("p", &["a'", "c'", "a'"]);
        check("p*q", &["c", "a", "b"]);
        check("p=>q", &["{c',b'}", "{b',a'}", "c'"]);
        check("G(p)", &["b", "b", "a'"]);
        check("G(q)", &["{a,b}", "{a,b}", "c'"]);
        check("G(p)*G(q)", &["0", "0", "b"]);
        check("G(p)=>G(q)", &["{b',1}", "{b',1}", "c'"]);
        check("G(phi(p*q))", &["0", "0", "b"]);
        check("H(phi(p=>q))", &["{a,b}", "b", "b"]);
        check("H(phi(q=>p))", &["b", "b", "b"]);
    }

    #[test]
    fn constants_and_parens() {
        check("1", &["1", "1", "1"]);
        check("p*1", &["a'", "c'", "a'"]);
        check("(p=>q)*p", &["{b,c}", "{a,b}", "b"]);
        check("p->q", &["{c',b'}", "{b',a'}", "c'"]);
    }

    #[test]
    fn squig_is_partial() {
        let ea = nine_element();
        let frame = chain_frame();
        let props = ctx_props();
        let ctx = Context {
            ea: &ea,
            frame: &frame,
            props: &props,
        };
        // q ~> p is undefined at time 1 (a' is not below b').
        match eval(&ctx, "q~>p") {
            Err(ExprError::Tense(TenseError::UndefinedAt { op: '~', time })) => {
                assert_eq!(time, "1");
            }
            other => panic!("expected an undefined point, got {other:?}"),
        }
        // 1 ~> p is total.
        check("1~>p", &["a'", "c'", "a'"]);
    }

    #[test]
    fn type_and_parse_errors() {
        let ea = nine_element();
        let frame = chain_frame();
        let props = ctx_props();
        let ctx = Context {
            ea: &ea,
            frame: &frame,
            props: &props,
        };
        assert!(matches!(eval(&ctx, "G(p=>q)"), Err(ExprError::Type(_))));
        // A bare family evaluates but has no pointwise rendering.
        let family = eval(&ctx, "phi(p)").unwrap();
        assert!(matches!(family.cells(&ea), Err(ExprError::Type(_))));
        assert!(matches!(eval(&ctx, "phi(p)*q"), Err(ExprError::Type(_))));
        assert!(matches!(eval(&ctx, "p*q*p"), Err(ExprError::Parse { .. })));
        assert!(matches!(eval(&ctx, "r"), Err(ExprError::UnknownName(_))));
        assert!(matches!(eval(&ctx, ""), Err(ExprError::Parse { .. })));
        assert!(matches!(eval(&ctx, "p=>"), Err(ExprError::Parse { .. })));
    }

    #[test]
    fn tense_of_phi_matches_direct_composition() {
        let ea = nine_element();
        let frame = chain_frame();
        let props = ctx_props();
        let ctx = Context {
            ea: &ea,
            frame: &frame,
            props: &props,
        };
        let via_expr = eval(&ctx, "G(phi(P(p)))").unwrap();
        let p = props[0].1.clone();
        let direct = tense::compose(
            &ea,
            &frame,
            crate::tense::TenseOp::G,
            crate::tense::TenseOp::P,
            &PropositionFamily::singleton(p),
        )
        .unwrap();
        assert_eq!(via_expr, Value::SetProp(direct));
    }
}
