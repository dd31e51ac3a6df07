//! Cardinal numbers of non-classical sets.
//!
//! Every cardinal is `κ_t + κ_b·𝔟 + κ_n·𝔫` for uniquely determined classical
//! cardinals, so a [`Cardinal`] is stored as that triple. Addition,
//! multiplication and the four-valued `=`/`≤` are computed on the triple.
//! Classical cardinals are naturals or a symbolic `ℵ_i`.

mod lattice;

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::arith::{self, ArithError};
use crate::ncset::NCSet;
use crate::truth::TruthValue;

pub use lattice::{finite_lattice, LatticeError, LatticeGraph, Step, StepKind, MAX_LATTICE_BOUND};

/// Largest aleph index representable.
pub const MAX_ALEPH: u8 = 15;

/// A classical cardinal: a natural number or `ℵ_i` with `i <= 15`.
///
/// The derived order is the cardinal order: naturals by value, every natural
/// below every aleph, alephs by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalCard {
    Fin(u64),
    Aleph(u8),
}

impl ClassicalCard {
    pub const ZERO: ClassicalCard = ClassicalCard::Fin(0);
    pub const ONE: ClassicalCard = ClassicalCard::Fin(1);
    pub const ALEPH_0: ClassicalCard = ClassicalCard::Aleph(0);

    /// `ℵ_index`, or `None` above [`MAX_ALEPH`].
    pub fn aleph(index: u8) -> Option<Self> {
        (index <= MAX_ALEPH).then_some(ClassicalCard::Aleph(index))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ClassicalCard::Fin(_))
    }

    pub fn is_zero(self) -> bool {
        self == ClassicalCard::ZERO
    }

    /// Sum with absorption: an infinite operand makes the sum the maximum.
    /// `None` only when a finite sum overflows `u64`.
    pub fn checked_add(self, other: Self) -> Option<Self> {
        match (self, other) {
            (ClassicalCard::Fin(a), ClassicalCard::Fin(b)) => a.checked_add(b).map(ClassicalCard::Fin),
            _ => Some(self.max(other)),
        }
    }

    /// Product: zero if either side is zero, otherwise the maximum once an
    /// operand is infinite.
    pub fn checked_mul(self, other: Self) -> Option<Self> {
        match (self, other) {
            (ClassicalCard::Fin(a), ClassicalCard::Fin(b)) => a.checked_mul(b).map(ClassicalCard::Fin),
            _ if self.is_zero() || other.is_zero() => Some(ClassicalCard::ZERO),
            _ => Some(self.max(other)),
        }
    }
}

impl Add for ClassicalCard {
    type Output = ClassicalCard;

    fn add(self, other: Self) -> Self {
        self.checked_add(other).expect("finite cardinal overflow")
    }
}

impl Mul for ClassicalCard {
    type Output = ClassicalCard;

    fn mul(self, other: Self) -> Self {
        self.checked_mul(other).expect("finite cardinal overflow")
    }
}

impl From<u64> for ClassicalCard {
    fn from(n: u64) -> Self {
        ClassicalCard::Fin(n)
    }
}

impl fmt::Display for ClassicalCard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalCard::Fin(n) => write!(f, "{n}"),
            ClassicalCard::Aleph(i) => write!(f, "aleph{i}"),
        }
    }
}

pub fn cc_add(a: ClassicalCard, b: ClassicalCard) -> ClassicalCard {
    a + b
}

pub fn cc_mul(a: ClassicalCard, b: ClassicalCard) -> ClassicalCard {
    a * b
}

pub fn cc_le(a: ClassicalCard, b: ClassicalCard) -> bool {
    a <= b
}

/// `t + b·𝔟 + n·𝔫`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cardinal {
    pub t: ClassicalCard,
    pub b: ClassicalCard,
    pub n: ClassicalCard,
}

impl Cardinal {
    pub const ZERO: Cardinal = Cardinal::new(ClassicalCard::ZERO, ClassicalCard::ZERO, ClassicalCard::ZERO);
    pub const ONE: Cardinal = Cardinal::new(ClassicalCard::ONE, ClassicalCard::ZERO, ClassicalCard::ZERO);
    /// `𝔟`, the size of a one-element purely inconsistent set.
    pub const B: Cardinal = Cardinal::new(ClassicalCard::ZERO, ClassicalCard::ONE, ClassicalCard::ZERO);
    /// `𝔫`, the size of a one-element purely incomplete set.
    pub const N: Cardinal = Cardinal::new(ClassicalCard::ZERO, ClassicalCard::ZERO, ClassicalCard::ONE);

    pub const fn new(t: ClassicalCard, b: ClassicalCard, n: ClassicalCard) -> Self {
        Cardinal { t, b, n }
    }

    /// Finite cardinal from natural coefficients.
    pub const fn finite(t: u64, b: u64, n: u64) -> Self {
        Cardinal::new(ClassicalCard::Fin(t), ClassicalCard::Fin(b), ClassicalCard::Fin(n))
    }

    /// A classical cardinal embedded as `κ + 0𝔟 + 0𝔫`.
    pub const fn classical(k: ClassicalCard) -> Self {
        Cardinal::new(k, ClassicalCard::ZERO, ClassicalCard::ZERO)
    }

    pub fn is_finite(self) -> bool {
        self.t.is_finite() && self.b.is_finite() && self.n.is_finite()
    }

    /// The unique coefficients `(κ_t, κ_b, κ_n)`.
    pub fn decompose(self) -> (ClassicalCard, ClassicalCard, ClassicalCard) {
        (self.t, self.b, self.n)
    }

    /// Componentwise sum; `None` on finite overflow.
    pub fn checked_add(self, other: Self) -> Option<Self> {
        Some(Cardinal::new(
            self.t.checked_add(other.t)?,
            self.b.checked_add(other.b)?,
            self.n.checked_add(other.n)?,
        ))
    }

    /// `κμ = κ_tμ_t + (κ_tμ_b + κ_bμ_t + κ_bμ_b)𝔟 + (κ_tμ_n + κ_nμ_t + κ_nμ_n)𝔫`,
    /// using `𝔟² = 𝔟`, `𝔫² = 𝔫` and `𝔟𝔫 = 0`. `None` on finite overflow.
    pub fn checked_mul(self, other: Self) -> Option<Self> {
        let (k, m) = (self, other);
        let sum3 = |x: ClassicalCard, y: ClassicalCard, z: ClassicalCard| x.checked_add(y)?.checked_add(z);
        Some(Cardinal::new(
            k.t.checked_mul(m.t)?,
            sum3(k.t.checked_mul(m.b)?, k.b.checked_mul(m.t)?, k.b.checked_mul(m.b)?)?,
            sum3(k.t.checked_mul(m.n)?, k.n.checked_mul(m.t)?, k.n.checked_mul(m.n)?)?,
        ))
    }

    /// `κ ≤ μ`. True iff all four of `t+b+n`, `t+b`, `t+n`, `t` fit; false
    /// iff `κ_t + κ_b` does not fit in `μ_t + μ_n`.
    pub fn le_tv(self, other: Self) -> TruthValue {
        let (k, m) = (self, other);
        TruthValue::new(
            k.t + k.b + k.n <= m.t + m.b + m.n && k.t + k.b <= m.t + m.b && k.t + k.n <= m.t + m.n && k.t <= m.t,
            !(k.t + k.b <= m.t + m.n),
        )
    }

    /// `κ = μ`. True iff the coefficients agree; false iff one side's true
    /// units cannot all be matched inside the other's non-false units.
    pub fn eq_tv(self, other: Self) -> TruthValue {
        let (k, m) = (self, other);
        TruthValue::new(
            k == m,
            !(k.t + k.b <= m.t + m.n) || !(m.t + m.b <= k.t + k.n) || !(k.b <= m.n) || !(m.b <= k.n),
        )
    }
}

impl Add for Cardinal {
    type Output = Cardinal;

    fn add(self, other: Self) -> Self {
        self.checked_add(other).expect("finite cardinal overflow")
    }
}

impl Mul for Cardinal {
    type Output = Cardinal;

    fn mul(self, other: Self) -> Self {
        self.checked_mul(other).expect("finite cardinal overflow")
    }
}

impl From<ClassicalCard> for Cardinal {
    fn from(k: ClassicalCard) -> Self {
        Cardinal::classical(k)
    }
}

/// `|A| = |A_t| + |A_b|·𝔟 + |A_n|·𝔫`.
pub fn card_of(set: &NCSet) -> Cardinal {
    Cardinal::finite(
        set.tpart().len() as u64,
        set.bpart().len() as u64,
        set.npart().len() as u64,
    )
}

pub fn card_add(a: Cardinal, b: Cardinal) -> Cardinal {
    a + b
}

pub fn card_mul(a: Cardinal, b: Cardinal) -> Cardinal {
    a * b
}

pub fn card_le_tv(a: Cardinal, b: Cardinal) -> TruthValue {
    a.le_tv(b)
}

pub fn card_eq_tv(a: Cardinal, b: Cardinal) -> TruthValue {
    a.eq_tv(b)
}

pub fn decompose(k: Cardinal) -> (ClassicalCard, ClassicalCard, ClassicalCard) {
    k.decompose()
}

/// Canonical literal: `3 + 2b + n`, `aleph0 + b`, `0`.
impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::with_capacity(3);
        if !self.t.is_zero() {
            terms.push(self.t.to_string());
        }
        for (coef, unit) in [(self.b, "b"), (self.n, "n")] {
            match coef {
                ClassicalCard::Fin(0) => {}
                ClassicalCard::Fin(1) => terms.push(unit.to_owned()),
                ClassicalCard::Fin(k) => terms.push(format!("{k}{unit}")),
                ClassicalCard::Aleph(i) => terms.push(format!("aleph{i} {unit}")),
            }
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl FromStr for Cardinal {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        arith::eval_cardinal(s)
    }
}
