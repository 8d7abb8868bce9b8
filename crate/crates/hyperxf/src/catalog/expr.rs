//! Tiny arithmetic expression language for catalog entries.
//!
//! Identity entries declare parameters, prefactors and series templates as
//! formula strings over the entry's symbols (`"p*(a-p)*(b+c-a)/(b*c-p*(a-p))"`,
//! `"(2+a-w-n)/2"`, ...). Expressions are parsed once when the registry is
//! built and evaluated against a [`ParamEnv`] per instantiation. Division by
//! zero reports the offending sub-expression, which is exactly the named
//! degeneracy the rejection sampler wants.
//!
//! Grammar: `+ - * / ^` with usual precedence, unary minus, parentheses,
//! integer literals, and symbols. `^` requires an integer exponent.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::Rat;

/// Named rational bindings plus the termination index `n`.
///
/// `n` is addressable as a symbol in formulas; the outer index of a double
/// sum is bound as `m` during inner-series instantiation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamEnv {
    pub bindings: BTreeMap<String, Rat>,
    pub n: u32,
}

impl ParamEnv {
    pub fn new(bindings: BTreeMap<String, Rat>, n: u32) -> Self {
        ParamEnv { bindings, n }
    }

    pub fn empty(n: u32) -> Self {
        ParamEnv {
            bindings: BTreeMap::new(),
            n,
        }
    }

    pub fn with_n(&self, n: u32) -> Self {
        ParamEnv {
            bindings: self.bindings.clone(),
            n,
        }
    }

    pub fn get(&self, name: &str) -> Result<Rat> {
        if name == "n" {
            return Ok(Rat::from(self.n));
        }
        self.bindings
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn bind(&mut self, name: &str, value: Rat) {
        self.bindings.insert(name.to_string(), value);
    }

    /// The extra upper/lower parameter lists (`a1, a2, ...` / `b1, b2, ...`)
    /// bound in this environment, in index order.
    pub fn extra_list(&self, prefix: &str) -> Vec<Rat> {
        let mut out = Vec::new();
        for i in 1.. {
            match self.bindings.get(&format!("{prefix}{i}")) {
                Some(v) => out.push(v.clone()),
                None => break,
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub enum Expr {
    Const(Rat),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Parse a formula; panics on malformed input (entry tables are static
    /// and covered by registry tests).
    pub fn parse(src: &str) -> Expr {
        match try_parse(src) {
            Ok(e) => e,
            Err(err) => panic!("bad catalog formula {src:?}: {err}"),
        }
    }

    pub fn eval(&self, env: &ParamEnv) -> Result<Rat> {
        match self {
            Expr::Const(c) => Ok(c.clone()),
            Expr::Sym(s) => env.get(s),
            Expr::Neg(e) => Ok(-e.eval(env)?),
            Expr::Add(a, b) => Ok(a.eval(env)? + b.eval(env)?),
            Expr::Sub(a, b) => Ok(a.eval(env)? - b.eval(env)?),
            Expr::Mul(a, b) => Ok(a.eval(env)? * b.eval(env)?),
            Expr::Div(a, b) => {
                let den = b.eval(env)?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero {
                        expr: self.to_string(),
                    });
                }
                Ok(a.eval(env)? / den)
            }
            Expr::Pow(base, exp) => {
                let e = exp.eval(env)?;
                let Some(e) = e.to_i64() else {
                    return Err(Error::NonIntegerExponent {
                        exponent: e.to_string(),
                        expr: self.to_string(),
                    });
                };
                let b = base.eval(env)?;
                if b.is_zero() && e < 0 {
                    return Err(Error::DivisionByZero {
                        expr: self.to_string(),
                    });
                }
                b.pow(e)
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Sym(s) => write!(f, "{s}"),
            Expr::Neg(e) => write!(f, "-{e}"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/{b}"),
            Expr::Pow(a, b) => write!(f, "{a}^{b}"),
        }
    }
}

// -- recursive-descent parser -----------------------------------------------

fn try_parse(src: &str) -> Result<Expr> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {} in {src:?}",
            p.pos
        )));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        s.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(s));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(s));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := unary (('*'|'/') unary)*
    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    acc = Expr::Div(Box::new(acc), Box::new(self.unary()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<Expr> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    // power := atom ('^' unary)?   (right-associative)
    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            let exp = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Num(s)) => Ok(Expr::Const(
                s.parse()
                    .map_err(|_| Error::Parse(format!("bad number {s}")))?,
            )),
            Some(Tok::Ident(s)) => Ok(Expr::Sym(s)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    other => Err(Error::Parse(format!("expected ')', got {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}
