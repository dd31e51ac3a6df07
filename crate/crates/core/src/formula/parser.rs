//! Tokenizer and precedence-climbing parser.
//!
//! ```text
//! formula := imp [ ('<->' | '<=>') imp ]
//! imp     := disj [ ('->' | '=>') imp ]
//! disj    := conj { '\/' conj }
//! conj    := prefix { ('&' | '/\') prefix }
//! prefix  := ('~' | '-' | '!' | '?' | 'o') prefix | primary
//! primary := 'false' | '(' formula ')' | quant | term rel term | letter
//! quant   := ('forall' | 'exists') ident [ 'in' term ] '.' formula
//! rel     := 'in' | 'notin' | '=' | '!='
//! term    := ident | numeral
//! ```
//!
//! An identifier is a variable when it is bound or starts in lowercase, and
//! a constant otherwise; numerals are constants.

use thiserror::Error;

use super::{BinOp, Formula, Quantifier, Term, UnOp};
use crate::ncset::literal::{is_ident_char, is_ident_start};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at offset {pos}: expected {}", .expected.join(" or "))]
pub struct ParseError {
    pub pos: usize,
    pub expected: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    Un(UnOp),
    Bin(BinOp),
    In,
    NotIn,
    Eq,
    Neq,
    False,
    Forall,
    Exists,
    Dot,
    Open,
    Close,
}

/// Longest symbols first so that `<->` wins over `<=`-style prefixes.
const SYMBOLS: [(&str, Tok); 16] = [
    ("<->", Tok::Bin(BinOp::Iff)),
    ("<=>", Tok::Bin(BinOp::StrongIff)),
    ("->", Tok::Bin(BinOp::Imp)),
    ("=>", Tok::Bin(BinOp::StrongImp)),
    ("/\\", Tok::Bin(BinOp::Conj)),
    ("\\/", Tok::Bin(BinOp::Disj)),
    ("!=", Tok::Neq),
    ("&", Tok::Bin(BinOp::Amp)),
    ("~", Tok::Un(UnOp::Neg)),
    ("-", Tok::Un(UnOp::CNeg)),
    ("!", Tok::Un(UnOp::Bang)),
    ("?", Tok::Un(UnOp::Query)),
    ("=", Tok::Eq),
    (".", Tok::Dot),
    ("(", Tok::Open),
    (")", Tok::Close),
];

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < text.len() {
        let rest = &text[pos..];
        let c = rest.chars().next().expect("non-empty");
        if c.is_whitespace() {
            pos += c.len_utf8();
            continue;
        }
        if is_ident_start(c) || c.is_ascii_digit() {
            let len = rest.find(|ch| !is_ident_char(ch)).unwrap_or(rest.len());
            let word = &rest[..len];
            let tok = if c.is_ascii_digit() {
                if !word.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(ParseError {
                        pos,
                        expected: vec!["numeral"],
                    });
                }
                Tok::Num(word.to_owned())
            } else {
                match word {
                    "o" => Tok::Un(UnOp::Circ),
                    "in" => Tok::In,
                    "notin" => Tok::NotIn,
                    "false" => Tok::False,
                    "forall" => Tok::Forall,
                    "exists" => Tok::Exists,
                    _ => Tok::Ident(word.to_owned()),
                }
            };
            out.push((pos, tok));
            pos += len;
            continue;
        }
        match SYMBOLS.iter().find(|(sym, _)| rest.starts_with(sym)) {
            Some((sym, tok)) => {
                out.push((pos, tok.clone()));
                pos += sym.len();
            }
            None => {
                return Err(ParseError {
                    pos,
                    expected: vec!["identifier", "operator", "parenthesis"],
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    bound: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            pos: self.toks.get(self.at).map_or(self.end, |(p, _)| *p),
            expected: expected.to_vec(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn bin_op(&self, ops: &[BinOp]) -> Option<BinOp> {
        match self.peek() {
            Some(Tok::Bin(op)) if ops.contains(op) => Some(*op),
            _ => None,
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let left = self.imp()?;
        let iff = [BinOp::Iff, BinOp::StrongIff];
        let Some(op) = self.bin_op(&iff) else {
            return Ok(left);
        };
        self.at += 1;
        let right = self.imp()?;
        if self.bin_op(&iff).is_some() {
            return Err(self.error(&["parentheses around a biconditional"]));
        }
        Ok(Formula::binary(op, left, right))
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let left = self.disj()?;
        match self.bin_op(&[BinOp::Imp, BinOp::StrongImp]) {
            Some(op) => {
                self.at += 1;
                Ok(Formula::binary(op, left, self.imp()?))
            }
            None => Ok(left),
        }
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.conj()?;
        while let Some(op) = self.bin_op(&[BinOp::Disj]) {
            self.at += 1;
            left = Formula::binary(op, left, self.conj()?);
        }
        Ok(left)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.prefix()?;
        while let Some(op) = self.bin_op(&[BinOp::Conj, BinOp::Amp]) {
            self.at += 1;
            left = Formula::binary(op, left, self.prefix()?);
        }
        Ok(left)
    }

    fn prefix(&mut self) -> Result<Formula, ParseError> {
        if let Some(&Tok::Un(op)) = self.peek() {
            self.at += 1;
            return Ok(Formula::unary(op, self.prefix()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::False) => {
                self.at += 1;
                Ok(Formula::Bottom)
            }
            Some(Tok::Open) => {
                self.at += 1;
                let inner = self.formula()?;
                self.expect(Tok::Close, "')'")?;
                Ok(inner)
            }
            Some(Tok::Forall) => self.quantifier(Quantifier::Forall),
            Some(Tok::Exists) => self.quantifier(Quantifier::Exists),
            Some(Tok::Ident(_) | Tok::Num(_)) => self.atom(),
            _ => Err(self.error(&["formula"])),
        }
    }

    fn quantifier(&mut self, q: Quantifier) -> Result<Formula, ParseError> {
        self.at += 1;
        let Some(Tok::Ident(x)) = self.peek().cloned() else {
            return Err(self.error(&["variable"]));
        };
        self.at += 1;
        let restriction = if self.peek() == Some(&Tok::In) {
            self.at += 1;
            Some(self.term()?)
        } else {
            None
        };
        self.expect(Tok::Dot, "'.'")?;
        self.bound.push(x.clone());
        let body = self.formula();
        self.bound.pop();
        let body = body?;
        Ok(match (q, restriction) {
            (Quantifier::Forall, None) => Formula::forall(x, body),
            (Quantifier::Exists, None) => Formula::exists(x, body),
            (Quantifier::Forall, Some(a)) => Formula::forall_in(x, a, body),
            (Quantifier::Exists, Some(a)) => Formula::exists_in(x, a, body),
        })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Term::Const(n))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                let lower = name.starts_with(|c: char| c.is_lowercase());
                Ok(if lower || self.bound.contains(&name) {
                    Term::Var(name)
                } else {
                    Term::Const(name)
                })
            }
            _ => Err(self.error(&["identifier", "numeral"])),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let start = self.at;
        let left = self.term()?;
        let relation = self.peek().cloned();
        let atom = match relation {
            Some(Tok::In | Tok::NotIn | Tok::Eq | Tok::Neq) => {
                self.at += 1;
                let right = self.term()?;
                match relation {
                    Some(Tok::In) => Formula::member(left, right),
                    Some(Tok::NotIn) => Formula::not_member(left, right),
                    Some(Tok::Eq) => Formula::equal(left, right),
                    _ => Formula::not_equal(left, right),
                }
            }
            _ => match self.toks[start].1.clone() {
                Tok::Ident(name) => Formula::Prop(name),
                _ => return Err(self.error(&["'in'", "'notin'", "'='", "'!='"])),
            },
        };
        Ok(atom)
    }
}

/// Parses formula text, expanding abbreviations.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        toks: lex(text)?,
        at: 0,
        end: text.len(),
        bound: Vec::new(),
    };
    let formula = parser.formula()?;
    if parser.at < parser.toks.len() {
        return Err(parser.error(&["operator", "end of input"]));
    }
    Ok(formula)
}
