//! The four truth values of BS4 and their connectives.
//!
//! A value is carried as a pair of independent flags: whether the statement
//! is *assertable* (true) and whether it is *deniable* (false). Every
//! connective below is written directly against those two flags, so the
//! familiar four-valued tables fall out of the positive and negative
//! satisfaction clauses instead of being typed in by hand.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A BS4 truth value as an (assertable, deniable) pair.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthValue {
    assertable: bool,
    deniable: bool,
}

/// The four values by name, for matching and display.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    T,
    B,
    N,
    F,
}

impl TruthValue {
    /// True and not false.
    pub const T: TruthValue = TruthValue::new(true, false);
    /// Both true and false.
    pub const B: TruthValue = TruthValue::new(true, true);
    /// Neither true nor false.
    pub const N: TruthValue = TruthValue::new(false, false);
    /// False and not true.
    pub const F: TruthValue = TruthValue::new(false, true);

    /// All four values in table order t, b, n, f.
    pub const ALL: [TruthValue; 4] = [Self::T, Self::B, Self::N, Self::F];

    pub const fn new(assertable: bool, deniable: bool) -> Self {
        TruthValue {
            assertable,
            deniable,
        }
    }

    /// Classical embedding of a boolean.
    pub const fn classical(value: bool) -> Self {
        TruthValue::new(value, !value)
    }

    pub const fn assertable(self) -> bool {
        self.assertable
    }

    pub const fn deniable(self) -> bool {
        self.deniable
    }

    /// `t` or `f`.
    pub const fn is_classical(self) -> bool {
        self.assertable != self.deniable
    }

    /// `t` or `b`; validity is designation under every assignment.
    pub const fn is_designated(self) -> bool {
        self.assertable
    }

    pub const fn symbol(self) -> Symbol {
        match (self.assertable, self.deniable) {
            (true, false) => Symbol::T,
            (true, true) => Symbol::B,
            (false, false) => Symbol::N,
            (false, true) => Symbol::F,
        }
    }

    pub const fn from_symbol(symbol: Symbol) -> Self {
        match symbol {
            Symbol::T => Self::T,
            Symbol::B => Self::B,
            Symbol::N => Self::N,
            Symbol::F => Self::F,
        }
    }

    /// The lowercase letter used in all textual output.
    pub const fn as_char(self) -> char {
        match self.symbol() {
            Symbol::T => 't',
            Symbol::B => 'b',
            Symbol::N => 'n',
            Symbol::F => 'f',
        }
    }

    /// De Morgan negation `~`: truth and falsity trade places.
    pub const fn neg(self) -> Self {
        TruthValue::new(self.deniable, self.assertable)
    }

    pub const fn conj(self, other: Self) -> Self {
        TruthValue::new(
            self.assertable && other.assertable,
            self.deniable || other.deniable,
        )
    }

    pub const fn disj(self, other: Self) -> Self {
        TruthValue::new(
            self.assertable || other.assertable,
            self.deniable && other.deniable,
        )
    }

    /// `->`: true when truth of the antecedent brings truth of the
    /// consequent; false when the antecedent is true and the consequent false.
    pub const fn imp(self, other: Self) -> Self {
        TruthValue::new(
            !self.assertable || other.assertable,
            self.assertable && other.deniable,
        )
    }

    /// `<->`: compares truth only; falsity when one side is true and the other false.
    pub const fn iff(self, other: Self) -> Self {
        TruthValue::new(
            self.assertable == other.assertable,
            (self.assertable && other.deniable) || (self.deniable && other.assertable),
        )
    }

    /// `=>`, implication that also contraposes over `~`.
    pub const fn strong_imp(self, other: Self) -> Self {
        self.imp(other).conj(other.neg().imp(self.neg()))
    }

    /// `<=>`, equivalence of both truth and falsity.
    pub const fn strong_iff(self, other: Self) -> Self {
        self.iff(other).conj(self.neg().iff(other.neg()))
    }

    /// Classical negation `-`, defined as `x -> false`.
    pub const fn cneg(self) -> Self {
        self.imp(TruthValue::F)
    }

    /// `!x`: classical "x is true".
    pub const fn bang(self) -> Self {
        self.cneg().neg()
    }

    /// `?x`: classical "x is not false".
    pub const fn query(self) -> Self {
        self.neg().cneg()
    }

    /// `o x`: classical "x is t or f".
    pub const fn circ(self) -> Self {
        self.bang().iff(self.query())
    }

    /// `&`, defined as `~(x -> ~y)`.
    pub const fn amp(self, other: Self) -> Self {
        self.imp(other.neg()).neg()
    }
}

impl From<Symbol> for TruthValue {
    fn from(symbol: Symbol) -> Self {
        TruthValue::from_symbol(symbol)
    }
}

impl From<TruthValue> for Symbol {
    fn from(value: TruthValue) -> Self {
        value.symbol()
    }
}

impl From<bool> for TruthValue {
    fn from(value: bool) -> Self {
        TruthValue::classical(value)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl fmt::Debug for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&TruthValue::from_symbol(*self), f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a truth value: {0:?} (expected one of t, b, n, f)")]
pub struct ParseTruthValueError(String);

impl FromStr for TruthValue {
    type Err = ParseTruthValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "t" => Ok(Self::T),
            "b" => Ok(Self::B),
            "n" => Ok(Self::N),
            "f" => Ok(Self::F),
            other => Err(ParseTruthValueError(other.to_owned())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: TruthValue = TruthValue::T;
    const B: TruthValue = TruthValue::B;
    const N: TruthValue = TruthValue::N;
    const F: TruthValue = TruthValue::F;

    #[test]
    fn spec_examples() {
        assert_eq!(B.neg(), B);
        assert_eq!(T.neg(), F);
        assert_eq!(B.conj(N), F);
        assert_eq!(B.disj(N), T);
        assert_eq!(N.imp(F), T);
        assert_eq!(B.imp(T), T);
        assert_eq!(N.iff(T), N);
        assert_eq!(B.bang(), T);
        assert_eq!(B.query(), F);
        assert_eq!(B.circ(), F);
        assert_eq!(N.cneg(), T);
        assert_eq!(T.circ(), T);
        assert_eq!(F.circ(), T);
    }

    // Oracle: the printed tables, indexed t=0, b=1, n=2, f=3, composed by
    // the abbreviations. Independent of the flag arithmetic above.
    const NEG: [usize; 4] = [3, 1, 2, 0];
    const CONJ: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]];
    const IMP: [[usize; 4]; 4] = [[0, 1, 2, 3], [0, 1, 2, 3], [0, 0, 0, 0], [0, 0, 0, 0]];
    const IFF: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 1, 2, 3], [2, 2, 0, 0], [3, 3, 0, 0]];

    fn idx(v: TruthValue) -> usize {
        TruthValue::ALL.iter().position(|&w| w == v).unwrap()
    }

    #[test]
    fn strong_connectives() {
        // Expanding (x<->y) /\ (~x<->~y) through the tables gives b for
        // (b, b) and f for (t, b).
        assert_eq!(B.strong_iff(B), B);
        assert_eq!(T.strong_iff(B), F);
        for y in TruthValue::ALL {
            assert_eq!(F.strong_imp(y), T);
        }
        for x in TruthValue::ALL {
            for y in TruthValue::ALL {
                let (i, j) = (idx(x), idx(y));
                let siff = CONJ[IFF[i][j]][IFF[NEG[i]][NEG[j]]];
                let simp = CONJ[IMP[i][j]][IMP[NEG[j]][NEG[i]]];
                let amp = NEG[IMP[i][NEG[j]]];
                assert_eq!(idx(x.strong_iff(y)), siff, "{x} <=> {y}");
                assert_eq!(idx(x.strong_imp(y)), simp, "{x} => {y}");
                assert_eq!(idx(x.amp(y)), amp, "{x} & {y}");
            }
        }
    }

    #[test]
    fn amp_examples() {
        assert_eq!(T.amp(B), B);
        for y in TruthValue::ALL {
            assert_eq!(F.amp(y), F);
            assert_eq!(T.conj(y), y);
        }
    }

    #[test]
    fn involution_and_de_morgan() {
        for x in TruthValue::ALL {
            assert_eq!(x.neg().neg(), x);
            for y in TruthValue::ALL {
                assert_eq!(x.conj(y).neg(), x.neg().disj(y.neg()));
                assert_eq!(x.disj(y).neg(), x.neg().conj(y.neg()));
            }
        }
    }

    #[test]
    fn classical_restriction_is_boolean() {
        for p in [false, true] {
            let x = TruthValue::classical(p);
            assert_eq!(x.neg(), TruthValue::classical(!p));
            for q in [false, true] {
                let y = TruthValue::classical(q);
                assert_eq!(x.conj(y), TruthValue::classical(p && q));
                assert_eq!(x.disj(y), TruthValue::classical(p || q));
                assert_eq!(x.imp(y), TruthValue::classical(!p || q));
                assert_eq!(x.iff(y), TruthValue::classical(p == q));
            }
        }
    }

    #[test]
    fn amp_validities_at_table_level() {
        for x in TruthValue::ALL {
            for y in TruthValue::ALL {
                assert_eq!(x.amp(y).assertable(), x.conj(y).assertable());
                assert_eq!(x.amp(y).neg(), x.imp(y.neg()));
            }
        }
    }

    #[test]
    fn unary_operators_are_classical() {
        for x in TruthValue::ALL {
            for v in [x.bang(), x.query(), x.cneg(), x.circ()] {
                assert!(v.is_classical(), "{x}: {v}");
            }
            assert_eq!(x.bang().assertable(), x.assertable());
            assert_eq!(x.query().deniable(), x.deniable());
        }
    }

    #[test]
    fn symbol_round_trip() {
        for x in TruthValue::ALL {
            assert_eq!(TruthValue::from_symbol(x.symbol()), x);
            assert_eq!(x.to_string().parse::<TruthValue>().unwrap(), x);
        }
        assert_eq!(TruthValue::ALL.map(|v| v.as_char()), ['t', 'b', 'n', 'f']);
        assert!("x".parse::<TruthValue>().is_err());
    }
}
