//! Recursive-descent parser for algebra expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := primary ('^' int)?
//! primary:= number | symbol | '(' expr ')'
//! int    := ('-' | '+')? digits | '(' ('-' | '+')? digits ')'
//! ```
//!
//! Symbols resolve to generators first, then named elements, then parameters.

use crate::pbw::{AlgebraSpec, Element, PbwError};
use crate::scalar::var_index;
use crate::Scalar;
use num_bigint::BigInt;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl From<ParseError> for PbwError {
    fn from(e: ParseError) -> Self {
        PbwError::Parse(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[st..i].iter().collect();
            col += i - st;
            out.push(Token { tok: Tok::Num(s.parse().expect("digits")), line: l0, col: c0 });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[st..i].iter().collect();
            col += i - st;
            out.push(Token { tok: Tok::Ident(s), line: l0, col: c0 });
            continue;
        }
        if "+-*/^()".contains(c) {
            out.push(Token { tok: Tok::Op(c), line: l0, col: c0 });
            col += 1;
            i += 1;
            continue;
        }
        return Err(ParseError { line: l0, col: c0, msg: format!("unexpected character '{c}'") });
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Sym { name: String, line: usize, col: usize },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64, usize, usize),
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(t: &Token, msg: &str) -> Result<T, ParseError> {
        Err(ParseError { line: t.line, col: t.col, msg: msg.to_string() })
    }

    fn is_op(&self, c: char) -> bool {
        self.peek().tok == Tok::Op(c)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.is_op('+') {
                self.next();
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.is_op('-') {
                self.next();
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.is_op('*') {
                self.next();
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.is_op('/') {
                let t = self.next();
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), t.line, t.col);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.is_op('-') {
            self.next();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if !self.is_op('^') {
            return Ok(base);
        }
        let hat = self.next();
        let e = self.int_literal()?;
        Ok(Expr::Pow(Box::new(base), e, hat.line, hat.col))
    }

    fn int_literal(&mut self) -> Result<i64, ParseError> {
        let paren = self.is_op('(');
        if paren {
            self.next();
        }
        let mut sign = 1;
        if self.is_op('-') {
            self.next();
            sign = -1;
        } else if self.is_op('+') {
            self.next();
        }
        let t = self.next();
        let v = match &t.tok {
            Tok::Num(n) => match i64::try_from(n) {
                Ok(v) => v,
                Err(_) => return Self::err(&t, "exponent out of range"),
            },
            _ => return Self::err(&t, "exponent must be an integer literal"),
        };
        if paren {
            let close = self.next();
            if close.tok != Tok::Op(')') {
                return Self::err(&close, "expected ')'");
            }
        }
        Ok(sign * v)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let t = self.next();
        match t.tok {
            Tok::Num(n) => Ok(Expr::Num(n)),
            Tok::Ident(name) => Ok(Expr::Sym { name, line: t.line, col: t.col }),
            Tok::Op('(') => {
                let e = self.expr()?;
                let close = self.next();
                if close.tok != Tok::Op(')') {
                    return Self::err(&close, "unbalanced parentheses: expected ')'");
                }
                Ok(e)
            }
            Tok::Op(')') => Self::err(&t, "unbalanced parentheses: unexpected ')'"),
            Tok::End => Self::err(&t, "unexpected end of input"),
            Tok::Op(c) => Self::err(&t, &format!("unexpected '{c}'")),
        }
    }
}

/// Parses text into an expression tree.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    if p.peek().tok == Tok::End {
        return Parser::err(p.peek(), "empty expression");
    }
    let e = p.expr()?;
    let t = p.peek().clone();
    match t.tok {
        Tok::End => Ok(e),
        Tok::Op(')') => Parser::err(&t, "unbalanced parentheses: unexpected ')'"),
        _ => Parser::err(&t, "unexpected token"),
    }
}

/// Resolves named elements during evaluation.
pub trait Names {
    fn lookup(&self, name: &str) -> Option<Element>;
}

impl Names for () {
    fn lookup(&self, _: &str) -> Option<Element> {
        None
    }
}

impl<F: Fn(&str) -> Option<Element>> Names for F {
    fn lookup(&self, name: &str) -> Option<Element> {
        self(name)
    }
}

fn first_pos(e: &Expr) -> (usize, usize) {
    match e {
        Expr::Sym { line, col, .. } => (*line, *col),
        Expr::Div(a, ..) | Expr::Add(a, _) | Expr::Sub(a, _) | Expr::Mul(a, _) | Expr::Neg(a) => first_pos(a),
        Expr::Pow(_, _, l, c) => (*l, *c),
        Expr::Num(_) => (1, 1),
    }
}

/// Evaluates a tree to a normal-form element of `spec`.
pub fn eval(e: &Expr, spec: &AlgebraSpec, names: &dyn Names) -> Result<Element, ParseError> {
    let at = |(line, col): (usize, usize), err: PbwError| ParseError { line, col, msg: err.to_string() };
    Ok(match e {
        Expr::Num(n) => spec.scalar(Scalar::big(n.clone())),
        Expr::Sym { name, line, col } => {
            if let Some(i) = spec.gen_index(name) {
                spec.gen(i)
            } else if let Some(x) = names.lookup(name) {
                x
            } else if let Some(v) = var_index(name) {
                spec.scalar(Scalar::var_pow(v, 1))
            } else {
                return Err(ParseError {
                    line: *line,
                    col: *col,
                    msg: format!("unknown symbol '{name}' for algebra {}", spec.id),
                });
            }
        }
        Expr::Add(a, b) => eval(a, spec, names)?.add(&eval(b, spec, names)?),
        Expr::Sub(a, b) => eval(a, spec, names)?.sub(&eval(b, spec, names)?),
        Expr::Neg(a) => eval(a, spec, names)?.neg(),
        Expr::Mul(a, b) => {
            let x = eval(a, spec, names)?;
            let y = eval(b, spec, names)?;
            spec.mul(&x, &y).map_err(|err| at(first_pos(a), err))?
        }
        Expr::Div(a, b, l, c) => {
            let x = eval(a, spec, names)?;
            let y = eval(b, spec, names)?;
            let inv = spec.unit_inverse(&y).map_err(|err| at((*l, *c), err))?;
            spec.mul(&x, &inv).map_err(|err| at((*l, *c), err))?
        }
        Expr::Pow(a, k, l, c) => {
            let x = eval(a, spec, names)?;
            spec.pow(&x, *k).map_err(|err| at((*l, *c), err))?
        }
    })
}

/// Parses and evaluates in one step.
pub fn parse_element(text: &str, spec: &AlgebraSpec, names: &dyn Names) -> Result<Element, ParseError> {
    eval(&parse(text)?, spec, names)
}

/// Parses a scalar literal (numbers and parameters only).
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let empty = AlgebraSpec::new("scalars", &[]);
    let x = parse_element(text, &empty, &())?;
    Ok(x.as_scalar().expect("no generators"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plane() -> AlgebraSpec {
        let mut s = AlgebraSpec::new("plane", &[("x", true), ("y", false)]);
        s.skew(1, 0, Scalar::q_pow(-2));
        s
    }

    #[test]
    fn exponent_must_be_literal() {
        let e = parse("b^q").unwrap_err();
        assert_eq!((e.line, e.col), (1, 3));
        assert_eq!(e.msg, "exponent must be an integer literal");
    }

    #[test]
    fn unbalanced() {
        assert!(parse("(x + y").unwrap_err().msg.contains("unbalanced"));
        assert!(parse("x + y)").unwrap_err().msg.contains("unbalanced"));
    }

    #[test]
    fn unknown_symbol_position() {
        let e = parse_element("x*\n  zz", &plane(), &()).unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
    }

    #[test]
    fn evaluates_products() {
        let s = plane();
        let v = parse_element("y*x - q^-2*x*y", &s, &()).unwrap();
        assert!(v.is_zero());
        let w = parse_element("x^-1*x", &s, &()).unwrap();
        assert_eq!(w, s.one());
        assert!(parse_element("y^-1", &s, &()).is_err());
    }

    #[test]
    fn scalar_literals() {
        let s = parse_scalar("(1 - q^2)/(1 - q)").unwrap();
        assert_eq!(s, parse_scalar("1 + q").unwrap());
        assert_eq!(parse_scalar("-q^(-2)").unwrap(), -Scalar::q_pow(-2));
    }

    #[test]
    fn render_round_trip() {
        let s = plane();
        let v = parse_element("(1+q^2)^-1*x^-2*y - 3*chi*y^2 + 7", &s, &()).unwrap();
        let back = parse_element(&s.render(&v), &s, &()).unwrap();
        assert_eq!(v, back);
    }
}
