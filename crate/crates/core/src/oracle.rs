//! Brute-force reference for `≅` and `≼`.
//!
//! Equinumerosity is defined by quantifying over countings of `A`: `A ≅ B`
//! is true when some tally `f[A]` equals `B`, and false when every tally is
//! unequal to `B`. The class of all countings is not finite, but any counting
//! can be relabelled into `rlm(B)` plus a supply of fresh pebbles without
//! changing whether its tally equals (or is included in) `B`. So the oracle
//! enumerates injections `rlm(A) → rlm(B) ∪ pebbles`, with as many pebbles as
//! the two realms together hold. This is slow by construction and exists to
//! validate [`crate::numerosity`].

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::ncset::{ClassicalFn, Element, NCSet};
use crate::numerosity::Counting;
use crate::truth::TruthValue;

/// Largest combined realm size the brute-force relations accept.
pub const REALM_GUARD: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("codomain has {available} elements but the realm needs {needed}")]
    PoolTooSmall { needed: usize, available: usize },
    #[error("combined realm size {size} exceeds the brute-force limit of {limit}")]
    GuardExceeded { size: usize, limit: usize },
}

/// Fresh atoms disjoint from the realms of the sets being compared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PebblePool {
    pebbles: Vec<Element>,
}

impl PebblePool {
    /// `size` atoms named `p0`, `p1`, ..., skipping names used in `avoid`.
    pub fn fresh(size: usize, avoid: &[&NCSet]) -> Self {
        let taken: BTreeSet<Element> = avoid.iter().flat_map(|s| s.realm()).collect();
        let pebbles = (0..)
            .map(|i| Element::atom(format!("p{i}")))
            .filter(|e| !taken.contains(e))
            .take(size)
            .collect();
        PebblePool { pebbles }
    }

    /// The default pool for comparing `a` with `b`: `|rlm A| + |rlm B|` pebbles.
    pub fn for_pair(a: &NCSet, b: &NCSet) -> Self {
        PebblePool::fresh(a.realm_len() + b.realm_len(), &[a, b])
    }

    pub fn pebbles(&self) -> &[Element] {
        &self.pebbles
    }

    pub fn len(&self) -> usize {
        self.pebbles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pebbles.is_empty()
    }

    /// `rlm(target)` followed by the pebbles.
    pub fn codomain(&self, target: &NCSet) -> Vec<Element> {
        target.realm().into_iter().chain(self.pebbles.iter().cloned()).collect()
    }
}

/// Visits every injection from `rlm(subject)` into `codomain`, stopping
/// early if the visitor breaks.
pub fn for_each_counting<F>(subject: &NCSet, codomain: &[Element], mut visit: F) -> Result<(), OracleError>
where
    F: FnMut(&Counting) -> ControlFlow<()>,
{
    let realm: Vec<Element> = subject.realm().into_iter().collect();
    if codomain.len() < realm.len() {
        return Err(OracleError::PoolTooSmall {
            needed: realm.len(),
            available: codomain.len(),
        });
    }
    let mut used = vec![false; codomain.len()];
    let mut chosen = Vec::with_capacity(realm.len());
    let _ = search(&realm, codomain, &mut used, &mut chosen, &mut visit);
    Ok(())
}

fn search<F>(
    realm: &[Element],
    codomain: &[Element],
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Counting) -> ControlFlow<()>,
{
    if chosen.len() == realm.len() {
        let map: ClassicalFn = realm
            .iter()
            .cloned()
            .zip(chosen.iter().map(|&j| codomain[j].clone()))
            .collect();
        return visit(&Counting::new_unchecked(map));
    }
    for j in 0..codomain.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        chosen.push(j);
        let flow = search(realm, codomain, used, chosen, visit);
        chosen.pop();
        used[j] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// All injections from `rlm(subject)` into `codomain`.
pub fn enumerate_countings(subject: &NCSet, codomain: &[Element]) -> Result<Vec<Counting>, OracleError> {
    let mut out = Vec::new();
    for_each_counting(subject, codomain, |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

fn check_guard(a: &NCSet, b: &NCSet) -> Result<(), OracleError> {
    let size = a.realm_len() + b.realm_len();
    if size > REALM_GUARD {
        Err(OracleError::GuardExceeded {
            size,
            limit: REALM_GUARD,
        })
    } else {
        Ok(())
    }
}

/// `∃f ∈ Count(A) φ(f[A], B)` evaluated as a restricted existential:
/// true if some tally makes `φ` true, false if every tally makes it false.
fn exists_tally(
    a: &NCSet,
    b: &NCSet,
    pool: &PebblePool,
    relation: impl Fn(&NCSet, &NCSet) -> TruthValue,
) -> Result<TruthValue, OracleError> {
    let mut some_true = false;
    let mut all_false = true;
    for_each_counting(a, &pool.codomain(b), |f| {
        let tv = relation(&f.tally(a), b);
        some_true |= tv.assertable();
        all_false &= tv.deniable();
        if some_true && !all_false {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(TruthValue::new(some_true, all_false))
}

/// `A ≅ B` by search over countings of `A`.
pub fn cong_brute(a: &NCSet, b: &NCSet) -> Result<TruthValue, OracleError> {
    cong_brute_with_pool(a, b, &PebblePool::for_pair(a, b))
}

/// `A ≼ B` by search over countings of `A`.
pub fn preceq_brute(a: &NCSet, b: &NCSet) -> Result<TruthValue, OracleError> {
    preceq_brute_with_pool(a, b, &PebblePool::for_pair(a, b))
}

pub fn cong_brute_with_pool(a: &NCSet, b: &NCSet, pool: &PebblePool) -> Result<TruthValue, OracleError> {
    check_guard(a, b)?;
    exists_tally(a, b, pool, NCSet::eq_tv)
}

pub fn preceq_brute_with_pool(a: &NCSet, b: &NCSet, pool: &PebblePool) -> Result<TruthValue, OracleError> {
    check_guard(a, b)?;
    exists_tally(a, b, pool, NCSet::subset_tv)
}
