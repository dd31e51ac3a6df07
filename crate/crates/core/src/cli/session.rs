//! Session files: named sets and an optional universe.
//!
//! ```text
//! # comment
//! let A = <{a}|{b}|{}>
//! universe a b c A
//! ```
//!
//! Universe entries naming a bound set denote that set; anything else is an
//! element literal.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::checker::{Model, Value};
use crate::ncset::{parse_element, Element, LiteralError, NCSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SessionError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("'{0}' is bound twice")]
    Rebound(String),
    #[error("bad set literal for '{name}': {source}")]
    Literal { name: String, source: LiteralError },
    #[error("the universe must not be empty")]
    EmptyUniverse,
    #[error("bad universe entry '{entry}': {source}")]
    Universe { entry: String, source: LiteralError },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Session {
    bindings: BTreeMap<String, NCSet>,
    universe: Option<Vec<String>>,
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl Session {
    pub fn parse(text: &str) -> Result<Self, SessionError> {
        let mut session = Session::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            let syntax = |message: &str| SessionError::Syntax {
                line: i + 1,
                message: message.to_owned(),
            };
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("let ") {
                let (name, literal) = rest.split_once('=').ok_or_else(|| syntax("expected 'let NAME = SET'"))?;
                session.bind(name.trim(), literal.trim())?;
            } else if let Some(rest) = line.strip_prefix("universe") {
                if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
                    return Err(syntax("expected 'let' or 'universe'"));
                }
                let entries: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
                if entries.is_empty() {
                    return Err(syntax("the universe must not be empty"));
                }
                session.set_universe(entries)?;
            } else {
                return Err(syntax("expected 'let' or 'universe'"));
            }
        }
        Ok(session)
    }

    /// Adds `name = literal`, as in a `let` line.
    pub fn bind(&mut self, name: &str, literal: &str) -> Result<(), SessionError> {
        if !is_name(name) {
            return Err(SessionError::Syntax {
                line: 0,
                message: format!("'{name}' is not a name"),
            });
        }
        let set = literal.parse::<NCSet>().map_err(|source| SessionError::Literal {
            name: name.to_owned(),
            source,
        })?;
        if self.bindings.insert(name.to_owned(), set).is_some() {
            return Err(SessionError::Rebound(name.to_owned()));
        }
        Ok(())
    }

    pub fn set_universe(&mut self, entries: Vec<String>) -> Result<(), SessionError> {
        if entries.is_empty() {
            return Err(SessionError::EmptyUniverse);
        }
        self.universe = Some(entries);
        Ok(())
    }

    pub fn bindings(&self) -> &BTreeMap<String, NCSet> {
        &self.bindings
    }

    /// The declared universe, or else the union of the bound sets' realms,
    /// or else just the empty set.
    pub fn universe(&self) -> Result<Vec<Value>, SessionError> {
        match &self.universe {
            Some(entries) => entries
                .iter()
                .map(|entry| match self.bindings.get(entry) {
                    Some(set) => Ok(Value::Set(set.clone())),
                    None => parse_element(entry).map(Value::Elem).map_err(|source| SessionError::Universe {
                        entry: entry.clone(),
                        source,
                    }),
                })
                .collect(),
            None => {
                let realm: std::collections::BTreeSet<Element> =
                    self.bindings.values().flat_map(NCSet::realm).collect();
                if realm.is_empty() {
                    Ok(vec![Value::Set(NCSet::empty())])
                } else {
                    Ok(realm.into_iter().map(Value::Elem).collect())
                }
            }
        }
    }

    pub fn model(&self) -> Result<Model, SessionError> {
        let env = self
            .bindings
            .iter()
            .map(|(name, set)| (name.clone(), Value::Set(set.clone())))
            .collect();
        Model::new(self.universe()?, env).map_err(|_| SessionError::EmptyUniverse)
    }
}
