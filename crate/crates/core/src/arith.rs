//! Expression syntax shared by cardinal and para-real literals.
//!
//! ```text
//! expr    := term { ('+' | '-') term }
//! term    := factor { ('*' | '/') factor | unit }      juxtaposition before a unit multiplies
//! factor  := '-' factor | primary
//! primary := nat | 'aleph' digits | 'b' | 'n' | '(' expr ')'
//! ```
//!
//! Cardinal mode has no `-` or `/`; para-real mode has no alephs.

use num::{BigInt, BigRational, ToPrimitive};
use thiserror::Error;

use crate::cardinal::{Cardinal, ClassicalCard};
use crate::parareal::{NotInvertible, ParaReal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("at offset {pos}: expected {expected}")]
    Syntax { pos: usize, expected: &'static str },
    #[error("'{0}' is not available for cardinals")]
    NotCardinal(&'static str),
    #[error("alephs are not para-real numbers")]
    NotReal,
    #[error("cardinal arithmetic overflowed")]
    Overflow,
    #[error(transparent)]
    NotInvertible(#[from] NotInvertible),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Nat(BigInt),
    Aleph(u8),
    UnitB,
    UnitN,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(BigInt),
    Aleph(u8),
    B,
    N,
    Plus,
    Minus,
    Star,
    Slash,
    Open,
    Close,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ArithError> {
    let mut out = Vec::new();
    let mut rest = text.char_indices().peekable();
    while let Some(&(pos, c)) = rest.peek() {
        let syntax = |expected| ArithError::Syntax { pos, expected };
        if c.is_whitespace() {
            rest.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&(_, d)) = rest.peek().filter(|(_, d)| d.is_ascii_digit()) {
                digits.push(d);
                rest.next();
            }
            out.push((pos, Tok::Nat(digits.parse().expect("digits"))));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut word = String::new();
            while let Some(&(_, d)) = rest.peek().filter(|(_, d)| d.is_ascii_alphanumeric()) {
                word.push(d);
                rest.next();
            }
            let tok = match word.as_str() {
                "b" => Tok::B,
                "n" => Tok::N,
                w => {
                    let index = w
                        .strip_prefix("aleph")
                        .filter(|i| !i.is_empty() && i.bytes().all(|d| d.is_ascii_digit()))
                        .ok_or_else(|| syntax("'b', 'n' or an aleph"))?;
                    let index = index
                        .parse::<u8>()
                        .ok()
                        .and_then(ClassicalCard::aleph)
                        .ok_or_else(|| syntax("aleph index at most 15"))?;
                    match index {
                        ClassicalCard::Aleph(i) => Tok::Aleph(i),
                        ClassicalCard::Fin(_) => unreachable!(),
                    }
                }
            };
            out.push((pos, tok));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '(' => Tok::Open,
            ')' => Tok::Close,
            _ => return Err(syntax("number, unit, operator or parenthesis")),
        };
        rest.next();
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, expected: &'static str) -> ArithError {
        ArithError::Syntax {
            pos: self.pos(),
            expected,
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ArithError> {
        let mut left = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                left = Expr::Add(Box::new(left), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                left = Expr::Sub(Box::new(left), Box::new(self.term()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ArithError> {
        let mut left = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                left = Expr::Mul(Box::new(left), Box::new(self.factor()?));
            } else if self.eat(&Tok::Slash) {
                left = Expr::Div(Box::new(left), Box::new(self.factor()?));
            } else if matches!(self.peek(), Some(Tok::B | Tok::N)) {
                left = Expr::Mul(Box::new(left), Box::new(self.factor()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ArithError> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let expr = match self.peek().cloned() {
            Some(Tok::Nat(k)) => Expr::Nat(k),
            Some(Tok::Aleph(i)) => Expr::Aleph(i),
            Some(Tok::B) => Expr::UnitB,
            Some(Tok::N) => Expr::UnitN,
            Some(Tok::Open) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(&Tok::Close) {
                    return Err(self.error("')'"));
                }
                return Ok(inner);
            }
            _ => return Err(self.error("number, unit or '('")),
        };
        self.at += 1;
        Ok(expr)
    }
}

fn parse(text: &str) -> Result<Expr, ArithError> {
    let mut parser = Parser {
        toks: lex(text)?,
        at: 0,
        end: text.len(),
    };
    let expr = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.error("operator or end of input"));
    }
    Ok(expr)
}

fn cardinal(expr: &Expr) -> Result<Cardinal, ArithError> {
    let binary = |l: &Expr, r: &Expr, op: fn(Cardinal, Cardinal) -> Option<Cardinal>| {
        op(cardinal(l)?, cardinal(r)?).ok_or(ArithError::Overflow)
    };
    match expr {
        Expr::Nat(k) => k
            .to_u64()
            .map(|k| Cardinal::classical(ClassicalCard::Fin(k)))
            .ok_or(ArithError::Overflow),
        Expr::Aleph(i) => Ok(Cardinal::classical(ClassicalCard::Aleph(*i))),
        Expr::UnitB => Ok(Cardinal::B),
        Expr::UnitN => Ok(Cardinal::N),
        Expr::Neg(_) | Expr::Sub(..) => Err(ArithError::NotCardinal("-")),
        Expr::Div(..) => Err(ArithError::NotCardinal("/")),
        Expr::Add(l, r) => binary(l, r, Cardinal::checked_add),
        Expr::Mul(l, r) => binary(l, r, Cardinal::checked_mul),
    }
}

fn parareal(expr: &Expr) -> Result<ParaReal, ArithError> {
    Ok(match expr {
        Expr::Nat(k) => ParaReal::classical(BigRational::from_integer(k.clone())),
        Expr::Aleph(_) => return Err(ArithError::NotReal),
        Expr::UnitB => ParaReal::unit_b(),
        Expr::UnitN => ParaReal::unit_n(),
        Expr::Neg(x) => -parareal(x)?,
        Expr::Add(l, r) => parareal(l)? + parareal(r)?,
        Expr::Sub(l, r) => parareal(l)? - parareal(r)?,
        Expr::Mul(l, r) => parareal(l)? * parareal(r)?,
        Expr::Div(l, r) => parareal(l)?.div(&parareal(r)?)?,
    })
}

/// Evaluates a cardinal expression such as `(1 + b) * (1 + n)` or `aleph0 + 2b`.
pub fn eval_cardinal(text: &str) -> Result<Cardinal, ArithError> {
    cardinal(&parse(text)?)
}

/// Evaluates a para-real expression such as `(1 + b) / (1 + b)` or `3/2 - 2 n`.
pub fn eval_parareal(text: &str) -> Result<ParaReal, ArithError> {
    parareal(&parse(text)?)
}
