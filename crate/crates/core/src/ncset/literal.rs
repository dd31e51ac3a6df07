//! Text literals for elements and sets.
//!
//! ```text
//! set     := '<' list '|' list '|' list '>'     three parts  <B|T|N>
//!          | '<' list '|' list '>'              two parts    <A^!|A^?>
//!          | list                               classical set
//! list    := '{' [ element { ',' element } ] '}'
//! element := base { '@' nat }
//! base    := ident | nat | '(' element ',' element ')'
//! ```

use std::str::FromStr;

use thiserror::Error;

use super::{Element, ElementSet, NCSet, SetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("at offset {pos}: expected {expected}")]
    Syntax { pos: usize, expected: &'static str },
    #[error(transparent)]
    Set(#[from] SetError),
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, expected: &'static str) -> Result<(), LiteralError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn error(&self, expected: &'static str) -> LiteralError {
        LiteralError::Syntax {
            pos: self.pos,
            expected,
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.find(|c| !pred(c)).unwrap_or(rest.len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn finish(&mut self) -> Result<(), LiteralError> {
        if self.peek().is_none() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    fn nat(&mut self) -> Result<u64, LiteralError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| self.error("natural number"))
    }

    fn element(&mut self) -> Result<Element, LiteralError> {
        let mut base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let left = self.element()?;
                self.expect(',', "','")?;
                let right = self.element()?;
                self.expect(')', "')'")?;
                Element::pair(left, right)
            }
            Some(c) if c.is_ascii_digit() => Element::Nat(self.nat()?),
            Some(c) if is_ident_start(c) => Element::atom(self.take_while(is_ident_char)),
            _ => return Err(self.error("element")),
        };
        while self.eat('@') {
            let index = self.nat()?;
            let index = u8::try_from(index).map_err(|_| self.error("tag index below 256"))?;
            base = Element::tag(base, index);
        }
        Ok(base)
    }

    fn list(&mut self) -> Result<ElementSet, LiteralError> {
        self.expect('{', "'{'")?;
        let mut out = ElementSet::new();
        if self.eat('}') {
            return Ok(out);
        }
        loop {
            out.insert(self.element()?);
            if self.eat('}') {
                return Ok(out);
            }
            self.expect(',', "',' or '}'")?;
        }
    }

    fn set(&mut self) -> Result<NCSet, LiteralError> {
        match self.peek() {
            Some('{') => Ok(NCSet::classical(self.list()?)),
            Some('<') => {
                self.pos += 1;
                let first = self.list()?;
                self.expect('|', "'|'")?;
                let second = self.list()?;
                if self.eat('|') {
                    let third = self.list()?;
                    self.expect('>', "'>'")?;
                    Ok(NCSet::from_three(first, second, third)?)
                } else {
                    self.expect('>', "'|' or '>'")?;
                    Ok(NCSet::from_two(&first, &second))
                }
            }
            _ => Err(self.error("'<' or '{'")),
        }
    }
}

pub(crate) fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Parses a single element literal such as `a`, `3`, `(a,1)` or `x@0`.
pub fn parse_element(text: &str) -> Result<Element, LiteralError> {
    let mut cursor = Cursor::new(text);
    let element = cursor.element()?;
    cursor.finish()?;
    Ok(element)
}

impl FromStr for Element {
    type Err = LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_element(s)
    }
}

impl FromStr for NCSet {
    type Err = LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cursor = Cursor::new(s);
        let set = cursor.set()?;
        cursor.finish()?;
        Ok(set)
    }
}
