//! First-order formulas over `∈`, `=`, `⊥` and constants, plus proposition
//! letters for propositional validity checks.
//!
//! Abbreviations are expanded at construction: `x notin A` is `~(x in A)`,
//! `x != y` is `~(x = y)`, `exists x in A . φ` is `exists x . (x in A & φ)`
//! and `forall x in A . φ` is `forall x . (x in A -> φ)`. Rendering folds
//! those shapes back into the short forms.

mod parser;

use std::collections::BTreeSet;
use std::fmt;

pub use parser::{parse, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    /// A name looked up in the model's environment. Numerals are constants
    /// too and denote themselves when unbound.
    Const(String),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Self {
        Term::Const(name.into())
    }

    pub fn name(&self) -> &str {
        match self {
            Term::Var(n) | Term::Const(n) => n,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnOp {
    /// `~`
    Neg,
    /// `-`, classical negation `¬`
    CNeg,
    /// `!`
    Bang,
    /// `?`
    Query,
    /// `o`, `∘`
    Circ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinOp {
    /// `/\`
    Conj,
    /// `&`
    Amp,
    /// `\/`
    Disj,
    /// `->`
    Imp,
    /// `=>`
    StrongImp,
    /// `<->`
    Iff,
    /// `<=>`
    StrongIff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantifier {
    Forall,
    Exists,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Member(Term, Term),
    Equal(Term, Term),
    Bottom,
    Prop(String),
    Unary(UnOp, Box<Formula>),
    Binary(BinOp, Box<Formula>, Box<Formula>),
    Quant(Quantifier, String, Box<Formula>),
}

impl UnOp {
    pub const ALL: [UnOp; 5] = [UnOp::Neg, UnOp::CNeg, UnOp::Bang, UnOp::Query, UnOp::Circ];

    pub fn symbol(self) -> &'static str {
        match self {
            UnOp::Neg => "~",
            UnOp::CNeg => "-",
            UnOp::Bang => "!",
            UnOp::Query => "?",
            UnOp::Circ => "o",
        }
    }
}

impl BinOp {
    pub const ALL: [BinOp; 7] = [
        BinOp::Conj,
        BinOp::Amp,
        BinOp::Disj,
        BinOp::Imp,
        BinOp::StrongImp,
        BinOp::Iff,
        BinOp::StrongIff,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Conj => "/\\",
            BinOp::Amp => "&",
            BinOp::Disj => "\\/",
            BinOp::Imp => "->",
            BinOp::StrongImp => "=>",
            BinOp::Iff => "<->",
            BinOp::StrongIff => "<=>",
        }
    }

    fn level(self) -> u8 {
        match self {
            BinOp::Conj | BinOp::Amp => 4,
            BinOp::Disj => 3,
            BinOp::Imp | BinOp::StrongImp => 2,
            BinOp::Iff | BinOp::StrongIff => 1,
        }
    }
}

const PREFIX_LEVEL: u8 = 5;

impl Formula {
    pub fn member(x: Term, a: Term) -> Self {
        Formula::Member(x, a)
    }

    pub fn not_member(x: Term, a: Term) -> Self {
        Formula::Member(x, a).neg()
    }

    pub fn equal(x: Term, y: Term) -> Self {
        Formula::Equal(x, y)
    }

    pub fn not_equal(x: Term, y: Term) -> Self {
        Formula::Equal(x, y).neg()
    }

    pub fn prop(name: impl Into<String>) -> Self {
        Formula::Prop(name.into())
    }

    pub fn unary(op: UnOp, f: Formula) -> Self {
        Formula::Unary(op, Box::new(f))
    }

    pub fn binary(op: BinOp, f: Formula, g: Formula) -> Self {
        Formula::Binary(op, Box::new(f), Box::new(g))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Self {
        Formula::unary(UnOp::Neg, self)
    }

    pub fn forall(x: impl Into<String>, body: Formula) -> Self {
        Formula::Quant(Quantifier::Forall, x.into(), Box::new(body))
    }

    pub fn exists(x: impl Into<String>, body: Formula) -> Self {
        Formula::Quant(Quantifier::Exists, x.into(), Box::new(body))
    }

    /// `forall x in A . φ`, i.e. `forall x . (x in A -> φ)`.
    pub fn forall_in(x: impl Into<String>, a: Term, body: Formula) -> Self {
        let x = x.into();
        let guard = Formula::Member(Term::Var(x.clone()), a);
        Formula::forall(x, Formula::binary(BinOp::Imp, guard, body))
    }

    /// `exists x in A . φ`, i.e. `exists x . (x in A & φ)`.
    pub fn exists_in(x: impl Into<String>, a: Term, body: Formula) -> Self {
        let x = x.into();
        let guard = Formula::Member(Term::Var(x.clone()), a);
        Formula::exists(x, Formula::binary(BinOp::Amp, guard, body))
    }

    /// Proposition letters occurring in the formula.
    pub fn letters(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Prop(p) => {
                out.insert(p.clone());
            }
            Formula::Unary(_, f) | Formula::Quant(_, _, f) => f.collect_letters(out),
            Formula::Binary(_, f, g) => {
                f.collect_letters(out);
                g.collect_letters(out);
            }
            Formula::Member(..) | Formula::Equal(..) | Formula::Bottom => {}
        }
    }

    /// True when the formula is built from letters, `false` and connectives only.
    pub fn is_propositional(&self) -> bool {
        match self {
            Formula::Prop(_) | Formula::Bottom => true,
            Formula::Unary(_, f) => f.is_propositional(),
            Formula::Binary(_, f, g) => f.is_propositional() && g.is_propositional(),
            Formula::Member(..) | Formula::Equal(..) | Formula::Quant(..) => false,
        }
    }

    /// The restriction `(x, A, φ)` if this is a restricted quantifier.
    pub fn as_restricted(&self) -> Option<(Quantifier, &str, &Term, &Formula)> {
        let Formula::Quant(q, x, body) = self else {
            return None;
        };
        let Formula::Binary(op, guard, rest) = body.as_ref() else {
            return None;
        };
        let Formula::Member(Term::Var(y), a) = guard.as_ref() else {
            return None;
        };
        let shape = matches!((q, op), (Quantifier::Forall, BinOp::Imp) | (Quantifier::Exists, BinOp::Amp));
        // `x in x` under the binder cannot be written with the short form.
        (shape && y == x && a != &Term::Var(x.clone())).then_some((*q, x.as_str(), a, rest.as_ref()))
    }

    fn render(&self, out: &mut String, min_level: u8, open_right: bool) {
        match self {
            Formula::Member(x, a) => out.push_str(&format!("{x} in {a}")),
            Formula::Equal(x, y) => out.push_str(&format!("{x} = {y}")),
            Formula::Bottom => out.push_str("false"),
            Formula::Prop(p) => out.push_str(p),
            Formula::Unary(UnOp::Neg, inner) if matches!(inner.as_ref(), Formula::Member(..)) => {
                let Formula::Member(x, a) = inner.as_ref() else { unreachable!() };
                out.push_str(&format!("{x} notin {a}"));
            }
            Formula::Unary(UnOp::Neg, inner) if matches!(inner.as_ref(), Formula::Equal(..)) => {
                let Formula::Equal(x, y) = inner.as_ref() else { unreachable!() };
                out.push_str(&format!("{x} != {y}"));
            }
            Formula::Unary(op, inner) => {
                out.push_str(op.symbol());
                if *op == UnOp::Circ {
                    out.push(' ');
                }
                inner.render(out, PREFIX_LEVEL, open_right);
            }
            Formula::Binary(op, left, right) => {
                let level = op.level();
                let wrap = level < min_level;
                let open_right = wrap || open_right;
                if wrap {
                    out.push('(');
                }
                // Right-associative arrows, left-associative conjunctions and
                // disjunction, non-associative biconditionals.
                let (left_min, right_min) = match level {
                    2 => (level + 1, level),
                    1 => (level + 1, level + 1),
                    _ => (level, level + 1),
                };
                left.render(out, left_min, false);
                out.push(' ');
                out.push_str(op.symbol());
                out.push(' ');
                right.render(out, right_min, open_right);
                if wrap {
                    out.push(')');
                }
            }
            Formula::Quant(q, x, body) => {
                if !open_right {
                    out.push('(');
                }
                out.push_str(match q {
                    Quantifier::Forall => "forall ",
                    Quantifier::Exists => "exists ",
                });
                out.push_str(x);
                let body = match self.as_restricted() {
                    Some((_, _, a, rest)) => {
                        out.push_str(&format!(" in {a}"));
                        rest
                    }
                    None => body,
                };
                out.push_str(" . ");
                body.render(out, 0, true);
                if !open_right {
                    out.push(')');
                }
            }
        }
    }
}

/// Canonical text with minimal parentheses.
pub fn render(f: &Formula) -> String {
    f.to_string()
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        self.render(&mut out, 0, true);
        f.write_str(&out)
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
