//! Finite non-classical sets.
//!
//! A set is stored as its three parts: the inconsistent part (membership
//! `b`), the classical part (`t`) and the incomplete part (`n`). Everything
//! outside the union of the parts, the realm, has membership `f`.

mod element;
pub(crate) mod literal;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::truth::TruthValue;

pub use element::Element;
pub use literal::{parse_element, LiteralError};

/// A finite classical set of elements.
pub type ElementSet = BTreeSet<Element>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("parts are not pairwise disjoint: {0} occurs in more than one part")]
    DisjointnessViolation(Element),
    #[error("function is undefined on realm elements {}", display_list(.0))]
    DomainError(Vec<Element>),
}

fn display_list(elements: &[Element]) -> String {
    let items: Vec<String> = elements.iter().map(Element::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// A finite non-classical set `<B|T|N>`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCSet {
    bpart: ElementSet,
    tpart: ElementSet,
    npart: ElementSet,
}

impl NCSet {
    pub fn empty() -> Self {
        NCSet::default()
    }

    /// A classical set: every listed element has membership `t`.
    pub fn classical<I: IntoIterator<Item = Element>>(elements: I) -> Self {
        NCSet {
            tpart: elements.into_iter().collect(),
            ..NCSet::default()
        }
    }

    /// `<X|Y|Z>` from pairwise disjoint inconsistent, classical and incomplete parts.
    pub fn from_three(bpart: ElementSet, tpart: ElementSet, npart: ElementSet) -> Result<Self, SetError> {
        let clash = bpart
            .intersection(&tpart)
            .chain(bpart.intersection(&npart))
            .chain(tpart.intersection(&npart))
            .min()
            .cloned();
        match clash {
            Some(x) => Err(SetError::DisjointnessViolation(x)),
            None => Ok(NCSet { bpart, tpart, npart }),
        }
    }

    /// `<X|Y>`: the set whose !-extension is `X` and ?-extension is `Y`.
    pub fn from_two(bang_ext: &ElementSet, query_ext: &ElementSet) -> Self {
        NCSet {
            bpart: bang_ext.difference(query_ext).cloned().collect(),
            tpart: bang_ext.intersection(query_ext).cloned().collect(),
            npart: query_ext.difference(bang_ext).cloned().collect(),
        }
    }

    /// Builds a set from per-element membership values. Elements valued `f`
    /// are dropped; a repeated element keeps its last value.
    pub fn from_membership<I>(values: I) -> Self
    where
        I: IntoIterator<Item = (Element, TruthValue)>,
    {
        let map: BTreeMap<Element, TruthValue> = values.into_iter().collect();
        let mut set = NCSet::empty();
        for (x, tv) in map {
            match (tv.assertable(), tv.deniable()) {
                (true, true) => set.bpart.insert(x),
                (true, false) => set.tpart.insert(x),
                (false, false) => set.npart.insert(x),
                (false, true) => false,
            };
        }
        set
    }

    /// Elements with membership `b`.
    pub fn bpart(&self) -> &ElementSet {
        &self.bpart
    }

    /// Elements with membership `t`.
    pub fn tpart(&self) -> &ElementSet {
        &self.tpart
    }

    /// Elements with membership `n`.
    pub fn npart(&self) -> &ElementSet {
        &self.npart
    }

    /// `A^!`: elements whose membership is true.
    pub fn bang_ext(&self) -> ElementSet {
        self.bpart.union(&self.tpart).cloned().collect()
    }

    /// `A^?`: elements whose membership is not false.
    pub fn query_ext(&self) -> ElementSet {
        self.tpart.union(&self.npart).cloned().collect()
    }

    /// The smallest classical set containing `A`.
    pub fn realm(&self) -> ElementSet {
        self.bpart
            .iter()
            .chain(&self.tpart)
            .chain(&self.npart)
            .cloned()
            .collect()
    }

    pub fn realm_len(&self) -> usize {
        self.bpart.len() + self.tpart.len() + self.npart.len()
    }

    pub fn is_empty(&self) -> bool {
        self.realm_len() == 0
    }

    pub fn is_classical(&self) -> bool {
        self.bpart.is_empty() && self.npart.is_empty()
    }

    pub fn is_consistent(&self) -> bool {
        self.bpart.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.npart.is_empty()
    }

    /// Realm elements paired with their membership values.
    pub fn memberships(&self) -> impl Iterator<Item = (&Element, TruthValue)> {
        self.bpart
            .iter()
            .map(|x| (x, TruthValue::B))
            .chain(self.tpart.iter().map(|x| (x, TruthValue::T)))
            .chain(self.npart.iter().map(|x| (x, TruthValue::N)))
    }

    /// The truth value of `x ∈ A`.
    pub fn member_tv(&self, x: &Element) -> TruthValue {
        if self.tpart.contains(x) {
            TruthValue::T
        } else if self.bpart.contains(x) {
            TruthValue::B
        } else if self.npart.contains(x) {
            TruthValue::N
        } else {
            TruthValue::F
        }
    }

    /// `A ⊆ B`: true iff both extensions are included; false iff `A^! ⊄ B^?`.
    pub fn subset_tv(&self, other: &NCSet) -> TruthValue {
        let (a_bang, a_query) = (self.bang_ext(), self.query_ext());
        let (b_bang, b_query) = (other.bang_ext(), other.query_ext());
        TruthValue::new(
            a_bang.is_subset(&b_bang) && a_query.is_subset(&b_query),
            !a_bang.is_subset(&b_query),
        )
    }

    /// `A = B`: true iff the extensions agree; false iff either side has a
    /// true member that the other denies.
    pub fn eq_tv(&self, other: &NCSet) -> TruthValue {
        let (a_bang, a_query) = (self.bang_ext(), self.query_ext());
        let (b_bang, b_query) = (other.bang_ext(), other.query_ext());
        TruthValue::new(
            a_bang == b_bang && a_query == b_query,
            !a_bang.is_subset(&b_query) || !b_bang.is_subset(&a_query),
        )
    }

    fn pointwise(&self, other: &NCSet, op: impl Fn(TruthValue, TruthValue) -> TruthValue) -> NCSet {
        let mut realm = self.realm();
        realm.extend(other.realm());
        NCSet::from_membership(
            realm
                .into_iter()
                .map(|x| {
                    let tv = op(self.member_tv(&x), other.member_tv(&x));
                    (x, tv)
                })
                .collect::<Vec<_>>(),
        )
    }

    pub fn union(&self, other: &NCSet) -> NCSet {
        self.pointwise(other, TruthValue::disj)
    }

    pub fn intersect(&self, other: &NCSet) -> NCSet {
        self.pointwise(other, TruthValue::conj)
    }

    /// `{x : x ∈ A ∧ x ∉ B}`.
    pub fn diff(&self, other: &NCSet) -> NCSet {
        self.pointwise(other, |a, b| a.conj(b.neg()))
    }

    /// `A × B`, with `(x, y)` valued `x ∈ A ∧ y ∈ B`.
    pub fn product(&self, other: &NCSet) -> NCSet {
        let mut members = Vec::with_capacity(self.realm_len() * other.realm_len());
        for (x, tx) in self.memberships() {
            for (y, ty) in other.memberships() {
                members.push((Element::pair(x.clone(), y.clone()), tx.conj(ty)));
            }
        }
        NCSet::from_membership(members)
    }

    /// `A ⊎ B`: left elements tagged 0, right elements tagged 1.
    pub fn disjoint_union(&self, other: &NCSet) -> NCSet {
        let left = self.memberships().map(|(x, tv)| (Element::tag(x.clone(), 0), tv));
        let right = other.memberships().map(|(y, tv)| (Element::tag(y.clone(), 1), tv));
        NCSet::from_membership(left.chain(right).collect::<Vec<_>>())
    }

    /// `f[A]`; shorthand for [`ClassicalFn::image`].
    pub fn image(&self, f: &ClassicalFn) -> Result<NCSet, SetError> {
        f.image(self)
    }
}

impl fmt::Display for NCSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn part(f: &mut fmt::Formatter<'_>, set: &ElementSet) -> fmt::Result {
            f.write_str("{")?;
            for (i, x) in set.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")
        }
        f.write_str("<")?;
        part(f, &self.bpart)?;
        f.write_str("|")?;
        part(f, &self.tpart)?;
        f.write_str("|")?;
        part(f, &self.npart)?;
        f.write_str(">")
    }
}

/// A classical function given by its finite graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassicalFn {
    graph: BTreeMap<Element, Element>,
}

impl ClassicalFn {
    pub fn new() -> Self {
        ClassicalFn::default()
    }

    /// The identity on a classical set.
    pub fn identity(domain: &ElementSet) -> Self {
        domain.iter().map(|x| (x.clone(), x.clone())).collect()
    }

    pub fn insert(&mut self, input: Element, output: Element) -> Option<Element> {
        self.graph.insert(input, output)
    }

    pub fn apply(&self, x: &Element) -> Option<&Element> {
        self.graph.get(x)
    }

    pub fn domain(&self) -> impl Iterator<Item = &Element> {
        self.graph.keys()
    }

    pub fn graph(&self) -> &BTreeMap<Element, Element> {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// No two inputs share an output.
    pub fn is_injection(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.graph.values().all(|y| seen.insert(y))
    }

    /// `f[A]`: each output carries the join of the memberships of its preimages.
    pub fn image(&self, set: &NCSet) -> Result<NCSet, SetError> {
        let uncovered: Vec<Element> = set
            .realm()
            .into_iter()
            .filter(|x| !self.graph.contains_key(x))
            .collect();
        if !uncovered.is_empty() {
            return Err(SetError::DomainError(uncovered));
        }
        let mut joined: BTreeMap<Element, TruthValue> = BTreeMap::new();
        for (x, tv) in set.memberships() {
            let y = &self.graph[x];
            let entry = joined.entry(y.clone()).or_insert(TruthValue::F);
            *entry = entry.disj(tv);
        }
        Ok(NCSet::from_membership(joined))
    }
}

impl FromIterator<(Element, Element)> for ClassicalFn {
    fn from_iter<I: IntoIterator<Item = (Element, Element)>>(iter: I) -> Self {
        ClassicalFn {
            graph: iter.into_iter().collect(),
        }
    }
}
