//! Equinumerosity `≅` and size comparison `≼` as four-valued relations.
//!
//! Both are computed in closed form from the sizes of the parts and
//! extensions of each set. The search over countings that defines them
//! lives in [`crate::oracle`] and is only used to cross-check these.

use thiserror::Error;

use crate::ncset::{ClassicalFn, NCSet};
use crate::truth::TruthValue;

/// An injection defined exactly on the realm of a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counting {
    map: ClassicalFn,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("function is not injective")]
    NotInjective,
    #[error("function domain differs from the realm of the set")]
    WrongDomain,
}

impl Counting {
    pub fn new(map: ClassicalFn, subject: &NCSet) -> Result<Self, CountingError> {
        if !map.domain().cloned().eq(subject.realm()) {
            return Err(CountingError::WrongDomain);
        }
        if !map.is_injection() {
            return Err(CountingError::NotInjective);
        }
        Ok(Counting { map })
    }

    pub(crate) fn new_unchecked(map: ClassicalFn) -> Self {
        Counting { map }
    }

    pub fn function(&self) -> &ClassicalFn {
        &self.map
    }

    /// The tally `f[A]`.
    pub fn tally(&self, subject: &NCSet) -> NCSet {
        self.map
            .image(subject)
            .expect("counting is defined on the whole realm")
    }
}

/// Part and extension sizes of a finite set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Sizes {
    t: usize,
    b: usize,
    n: usize,
}

impl Sizes {
    pub(crate) fn of(set: &NCSet) -> Self {
        Sizes {
            t: set.tpart().len(),
            b: set.bpart().len(),
            n: set.npart().len(),
        }
    }

    fn bang(self) -> usize {
        self.t + self.b
    }

    fn query(self) -> usize {
        self.t + self.n
    }

    fn realm(self) -> usize {
        self.t + self.b + self.n
    }
}

/// `A ≅ B`. True iff matching parts have equal sizes; false iff some true
/// element of one side must land on a false element of the other under
/// every pair of countings.
pub fn cong_tv(a: &NCSet, b: &NCSet) -> TruthValue {
    let (a, b) = (Sizes::of(a), Sizes::of(b));
    TruthValue::new(
        a == b,
        a.bang() > b.query() || b.bang() > a.query() || a.b > b.n || b.b > a.n,
    )
}

/// `A ≼ B`. True iff realm, both extensions, and the classical part each
/// fit; false iff `A^!` does not fit inside `B^?`.
pub fn preceq_tv(a: &NCSet, b: &NCSet) -> TruthValue {
    let (a, b) = (Sizes::of(a), Sizes::of(b));
    TruthValue::new(
        a.realm() <= b.realm() && a.bang() <= b.bang() && a.query() <= b.query() && a.t <= b.t,
        a.bang() > b.query(),
    )
}

/// A set is finite when its realm is; every [`NCSet`] is.
pub fn is_finite(_set: &NCSet) -> bool {
    true
}
