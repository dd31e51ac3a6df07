//! Four-valued evaluation of formulas in finite models.
//!
//! Quantifiers range over the model's declared universe. Membership and
//! equality atoms take their values from [`crate::ncset`]; an element has no
//! members, and an element never equals a set.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::formula::{BinOp, Formula, Quantifier, Term, UnOp};
use crate::ncset::{Element, NCSet};
use crate::truth::TruthValue;

/// Largest number of proposition letters [`valid_prop`] will enumerate.
pub const MAX_LETTERS: usize = 10;

/// A domain value: an urelement-like [`Element`] or a set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Elem(Element),
    Set(NCSet),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Elem(e) => write!(f, "{e}"),
            Value::Set(s) => write!(f, "{s}"),
        }
    }
}

impl From<Element> for Value {
    fn from(e: Element) -> Self {
        Value::Elem(e)
    }
}

impl From<NCSet> for Value {
    fn from(s: NCSet) -> Self {
        Value::Set(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("the universe of a model must not be empty")]
    EmptyUniverse,
    #[error("unresolved constant '{0}'")]
    UnresolvedConstant(String),
    #[error("no value assigned to proposition letter '{0}'")]
    UnresolvedLetter(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    universe: Vec<Value>,
    env: BTreeMap<String, Value>,
    letters: BTreeMap<String, TruthValue>,
}

impl Model {
    pub fn new(universe: Vec<Value>, env: BTreeMap<String, Value>) -> Result<Self, EvalError> {
        if universe.is_empty() {
            return Err(EvalError::EmptyUniverse);
        }
        Ok(Model {
            universe,
            env,
            letters: BTreeMap::new(),
        })
    }

    pub fn with_letter(mut self, name: impl Into<String>, value: TruthValue) -> Self {
        self.letters.insert(name.into(), value);
        self
    }

    pub fn universe(&self) -> &[Value] {
        &self.universe
    }

    pub fn env(&self) -> &BTreeMap<String, Value> {
        &self.env
    }
}

struct Scope<'m> {
    model: &'m Model,
    bound: Vec<(&'m str, &'m Value)>,
}

impl<'m> Scope<'m> {
    fn resolve(&self, term: &Term) -> Result<Value, EvalError> {
        match term {
            Term::Var(x) => {
                if let Some((_, v)) = self.bound.iter().rev().find(|(name, _)| name == x) {
                    return Ok((*v).clone());
                }
                Ok(self
                    .model
                    .env
                    .get(x)
                    .cloned()
                    .unwrap_or_else(|| Value::Elem(Element::atom(x.as_str()))))
            }
            Term::Const(c) => match self.model.env.get(c) {
                Some(v) => Ok(v.clone()),
                None => c
                    .parse::<u64>()
                    .map(|n| Value::Elem(Element::Nat(n)))
                    .map_err(|_| EvalError::UnresolvedConstant(c.clone())),
            },
        }
    }

    fn eval(&mut self, f: &'m Formula) -> Result<TruthValue, EvalError> {
        Ok(match f {
            Formula::Bottom => TruthValue::F,
            Formula::Prop(p) => *self
                .model
                .letters
                .get(p)
                .ok_or_else(|| EvalError::UnresolvedLetter(p.clone()))?,
            Formula::Member(x, a) => match (self.resolve(x)?, self.resolve(a)?) {
                (Value::Elem(e), Value::Set(s)) => s.member_tv(&e),
                _ => TruthValue::F,
            },
            Formula::Equal(x, y) => match (self.resolve(x)?, self.resolve(y)?) {
                (Value::Elem(a), Value::Elem(b)) => TruthValue::classical(a == b),
                (Value::Set(a), Value::Set(b)) => a.eq_tv(&b),
                _ => TruthValue::F,
            },
            Formula::Unary(op, g) => {
                let v = self.eval(g)?;
                match op {
                    UnOp::Neg => v.neg(),
                    UnOp::CNeg => v.cneg(),
                    UnOp::Bang => v.bang(),
                    UnOp::Query => v.query(),
                    UnOp::Circ => v.circ(),
                }
            }
            Formula::Binary(op, g, h) => {
                let (v, w) = (self.eval(g)?, self.eval(h)?);
                match op {
                    BinOp::Conj => v.conj(w),
                    BinOp::Amp => v.amp(w),
                    BinOp::Disj => v.disj(w),
                    BinOp::Imp => v.imp(w),
                    BinOp::StrongImp => v.strong_imp(w),
                    BinOp::Iff => v.iff(w),
                    BinOp::StrongIff => v.strong_iff(w),
                }
            }
            Formula::Quant(q, x, body) => {
                let (mut acc, combine): (TruthValue, fn(TruthValue, TruthValue) -> TruthValue) = match q {
                    Quantifier::Forall => (TruthValue::T, TruthValue::conj),
                    Quantifier::Exists => (TruthValue::F, TruthValue::disj),
                };
                for value in &self.model.universe {
                    self.bound.push((x, value));
                    let v = self.eval(body);
                    self.bound.pop();
                    acc = combine(acc, v?);
                }
                acc
            }
        })
    }
}

/// `[[f]]` in `model`: assertable iff `M ⊨+ f`, deniable iff `M ⊨− f`.
pub fn eval(f: &Formula, model: &Model) -> Result<TruthValue, EvalError> {
    Scope {
        model,
        bound: Vec::new(),
    }
    .eval(f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// A letter assignment under which the formula is not assertable.
    Invalid(BTreeMap<String, TruthValue>),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidityError {
    #[error("formula has {0} proposition letters; at most {MAX_LETTERS} are enumerated")]
    TooManyLetters(usize),
    #[error("formula is not propositional")]
    NotPropositional,
}

/// Designated under every assignment of the four values to its letters?
pub fn valid_prop(f: &Formula) -> Result<Validity, ValidityError> {
    if !f.is_propositional() {
        return Err(ValidityError::NotPropositional);
    }
    let letters: Vec<String> = f.letters().into_iter().collect();
    if letters.len() > MAX_LETTERS {
        return Err(ValidityError::TooManyLetters(letters.len()));
    }
    let blank = Model::new(vec![Value::Set(NCSet::empty())], BTreeMap::new()).expect("non-empty");
    for code in 0..4usize.pow(letters.len() as u32) {
        let assignment: BTreeMap<String, TruthValue> = letters
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), TruthValue::ALL[(code >> (2 * i)) & 3]))
            .collect();
        let mut model = blank.clone();
        model.letters = assignment.clone();
        let value = eval(f, &model).expect("every letter is assigned");
        if !value.assertable() {
            return Ok(Validity::Invalid(assignment));
        }
    }
    Ok(Validity::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, strategy};
    use proptest::prelude::*;

    fn set(s: &str) -> NCSet {
        s.parse().unwrap()
    }

    fn model(universe: Vec<Value>, bindings: &[(&str, &str)]) -> Model {
        let env = bindings
            .iter()
            .map(|&(name, lit)| (name.to_owned(), Value::Set(set(lit))))
            .collect();
        Model::new(universe, env).unwrap()
    }

    fn atoms(names: &[&str]) -> Vec<Value> {
        names.iter().map(|&n| Value::Elem(Element::atom(n))).collect()
    }

    fn eval_text(text: &str, m: &Model) -> TruthValue {
        eval(&parse(text).unwrap(), m).unwrap()
    }

    #[test]
    fn examples() {
        let m = model(atoms(&["a"]), &[("A", "<{a}|{}|{}>")]);
        assert_eq!(eval_text("a in A", &m), TruthValue::B);
        let m = model(atoms(&["c"]), &[("A", "<{}|{c}|{}>")]);
        assert_eq!(eval_text("forall x . x in A", &m), TruthValue::T);
        assert_eq!(eval_text("~ exists x in A . x = c", &m), TruthValue::F);
        assert_eq!(eval_text("false", &m), TruthValue::F);
    }

    #[test]
    fn atoms_across_sorts() {
        let m = model(atoms(&["a"]), &[("A", "<{a}|{}|{}>"), ("B", "<{a}|{}|{}>")]);
        assert_eq!(eval_text("A in A", &m), TruthValue::F);
        assert_eq!(eval_text("a in a", &m), TruthValue::F);
        assert_eq!(eval_text("A = a", &m), TruthValue::F);
        assert_eq!(eval_text("A = B", &m), TruthValue::B);
        assert_eq!(eval_text("1 = 1", &m), TruthValue::T);
        assert_eq!(eval_text("a != b", &m), TruthValue::T);
    }

    #[test]
    fn errors() {
        assert_eq!(Model::new(vec![], BTreeMap::new()), Err(EvalError::EmptyUniverse));
        let m = model(atoms(&["a"]), &[]);
        assert_eq!(
            eval(&parse("a in A").unwrap(), &m),
            Err(EvalError::UnresolvedConstant("A".into()))
        );
        assert_eq!(eval(&parse("p").unwrap(), &m), Err(EvalError::UnresolvedLetter("p".into())));
    }

    #[test]
    fn validities() {
        for text in ["p & q <-> p /\\ q", "~(p & q) <-> (p -> ~q)", "p -> p", "o p <-> (!p <-> ?p)"] {
            assert!(valid_prop(&parse(text).unwrap()).unwrap().is_valid(), "{text}");
        }
        let contraposition = parse("(p -> q) -> (~q -> ~p)").unwrap();
        let Validity::Invalid(witness) = valid_prop(&contraposition).unwrap() else {
            panic!("contraposition should fail");
        };
        let mut m = model(atoms(&["a"]), &[]);
        m.letters = witness;
        assert!(!eval(&contraposition, &m).unwrap().assertable());

        assert_eq!(
            valid_prop(&parse("x in A").unwrap()),
            Err(ValidityError::NotPropositional)
        );
        let wide = (0..11).map(|i| format!("p{i}")).collect::<Vec<_>>().join(" /\\ ");
        assert_eq!(valid_prop(&parse(&wide).unwrap()), Err(ValidityError::TooManyLetters(11)));
    }

    /// `⊨+` and `⊨−` written out clause by clause, with the defined
    /// connectives expanded into `~ ∧ ∨ → ↔ ⊥`.
    mod reference {
        use super::*;

        fn expand(f: &Formula) -> Formula {
            use Formula as F;
            let un = |op, g: &Formula| F::unary(op, expand(g));
            let imp = |a: Formula, b: Formula| F::binary(BinOp::Imp, a, b);
            let iff = |a: Formula, b: Formula| F::binary(BinOp::Iff, a, b);
            let and = |a: Formula, b: Formula| F::binary(BinOp::Conj, a, b);
            let cneg = |a: Formula| imp(a, F::Bottom);
            match f {
                F::Member(..) | F::Equal(..) | F::Bottom | F::Prop(_) => f.clone(),
                F::Unary(UnOp::Neg, g) => un(UnOp::Neg, g),
                F::Unary(UnOp::CNeg, g) => cneg(expand(g)),
                F::Unary(UnOp::Bang, g) => cneg(expand(g)).neg(),
                F::Unary(UnOp::Query, g) => cneg(expand(g).neg()),
                F::Unary(UnOp::Circ, g) => {
                    let g = expand(g);
                    iff(cneg(g.clone()).neg(), cneg(g.neg()))
                }
                F::Binary(op, g, h) => {
                    let (g, h) = (expand(g), expand(h));
                    match op {
                        BinOp::Conj | BinOp::Disj | BinOp::Imp | BinOp::Iff => F::binary(*op, g, h),
                        BinOp::Amp => imp(g, h.neg()).neg(),
                        BinOp::StrongImp => and(imp(g.clone(), h.clone()), imp(h.neg(), g.neg())),
                        BinOp::StrongIff => and(iff(g.clone(), h.clone()), iff(g.neg(), h.neg())),
                    }
                }
                F::Quant(q, x, g) => F::Quant(*q, x.clone(), Box::new(expand(g))),
            }
        }

        fn atom_pair(f: &Formula, m: &Model, bound: &[(String, Value)]) -> (bool, bool) {
            let lookup = |t: &Term| -> Value {
                let mut scope = Scope { model: m, bound: Vec::new() };
                for (x, v) in bound {
                    scope.bound.push((x.as_str(), v));
                }
                scope.resolve(t).unwrap()
            };
            match f {
                Formula::Member(x, a) => match (lookup(x), lookup(a)) {
                    (Value::Elem(e), Value::Set(s)) => (s.bang_ext().contains(&e), !s.query_ext().contains(&e)),
                    _ => (false, true),
                },
                Formula::Equal(x, y) => match (lookup(x), lookup(y)) {
                    (Value::Elem(a), Value::Elem(b)) => (a == b, a != b),
                    (Value::Set(a), Value::Set(b)) => (
                        a.bang_ext() == b.bang_ext() && a.query_ext() == b.query_ext(),
                        !a.bang_ext().is_subset(&b.query_ext()) || !b.bang_ext().is_subset(&a.query_ext()),
                    ),
                    _ => (false, true),
                },
                _ => unreachable!(),
            }
        }

        pub fn sat(f: &Formula, m: &Model, bound: &mut Vec<(String, Value)>, positive: bool) -> bool {
            match f {
                Formula::Bottom => !positive,
                Formula::Prop(p) => {
                    let v = m.letters[p];
                    if positive { v.assertable() } else { v.deniable() }
                }
                Formula::Member(..) | Formula::Equal(..) => {
                    let (plus, minus) = atom_pair(f, m, bound);
                    if positive { plus } else { minus }
                }
                Formula::Unary(UnOp::Neg, g) => sat(g, m, bound, !positive),
                Formula::Binary(op, g, h) => {
                    let mut s = |x: &Formula, pol: bool| sat(x, m, bound, pol);
                    match (op, positive) {
                        (BinOp::Conj, true) => s(g, true) && s(h, true),
                        (BinOp::Conj, false) => s(g, false) || s(h, false),
                        (BinOp::Disj, true) => s(g, true) || s(h, true),
                        (BinOp::Disj, false) => s(g, false) && s(h, false),
                        (BinOp::Imp, true) => !s(g, true) || s(h, true),
                        (BinOp::Imp, false) => s(g, true) && s(h, false),
                        (BinOp::Iff, true) => s(g, true) == s(h, true),
                        (BinOp::Iff, false) => (s(g, true) && s(h, false)) || (s(g, false) && s(h, true)),
                        _ => unreachable!("expanded away"),
                    }
                }
                Formula::Quant(q, x, g) => {
                    let mut each = m.universe.iter().map(|v| {
                        bound.push((x.clone(), v.clone()));
                        let r = sat(g, m, bound, positive);
                        bound.pop();
                        r
                    });
                    // ⊨+∀ needs every instance, ⊨−∀ some; dually for ∃.
                    match (q, positive) {
                        (Quantifier::Forall, true) | (Quantifier::Exists, false) => each.all(|r| r),
                        (Quantifier::Forall, false) | (Quantifier::Exists, true) => each.any(|r| r),
                    }
                }
                Formula::Unary(..) => unreachable!("expanded away"),
            }
        }

        pub fn value(f: &Formula, m: &Model) -> TruthValue {
            let f = expand(f);
            TruthValue::new(sat(&f, m, &mut Vec::new(), true), sat(&f, m, &mut Vec::new(), false))
        }
    }

    fn arb_model() -> impl Strategy<Value = Model> {
        let membership = prop::sample::select(&TruthValue::ALL[..]);
        let set = prop::collection::vec(membership, 2).prop_map(|vs| {
            NCSet::from_membership(["a", "c"].iter().zip(vs).map(|(e, v)| (Element::atom(*e), v)))
        });
        (set.clone(), set, 0usize..4).prop_map(|(a, b, extra)| {
            let mut universe = atoms(&["a", "c"]);
            if extra & 1 == 1 {
                universe.push(Value::Set(a.clone()));
            }
            if extra & 2 == 2 {
                universe.push(Value::Elem(Element::atom("d")));
            }
            let env = [("A".to_owned(), Value::Set(a)), ("B".to_owned(), Value::Set(b))]
                .into_iter()
                .collect();
            Model::new(universe, env).unwrap()
        })
    }

    fn with_letters(mut m: Model, values: Vec<TruthValue>) -> Model {
        for (p, v) in strategy::LETTERS.iter().zip(values) {
            m.letters.insert((*p).to_owned(), v);
        }
        m
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn matches_reference(
            f in strategy::formula(),
            m in arb_model(),
            vs in prop::collection::vec(prop::sample::select(&TruthValue::ALL[..]), 3),
        ) {
            let m = with_letters(m, vs);
            prop_assert_eq!(eval(&f, &m).unwrap(), reference::value(&f, &m), "{}", f);
        }

        #[test]
        fn restricted_quantifier_laws(f in strategy::first_order(), m in arb_model(), x in prop::sample::select(&strategy::VARS[..])) {
            let a = Term::constant("A");
            let lhs = Formula::exists_in(x, a.clone(), f.clone()).neg();
            let rhs = Formula::forall_in(x, a.clone(), f.clone().neg());
            prop_assert_eq!(eval(&lhs, &m).unwrap(), eval(&rhs, &m).unwrap());
            let lhs = Formula::forall_in(x, a.clone(), f.clone()).neg();
            let rhs = Formula::exists_in(x, a, f.neg());
            prop_assert_eq!(eval(&lhs, &m).unwrap(), eval(&rhs, &m).unwrap());
            prop_assert_eq!(eval(&Formula::Bottom, &m).unwrap(), TruthValue::F);
        }

        #[test]
        fn validity_agrees_with_evaluation(
            f in strategy::propositional(),
            vs in prop::collection::vec(prop::sample::select(&TruthValue::ALL[..]), 3),
        ) {
            let m = with_letters(model(atoms(&["a"]), &[]), vs);
            match valid_prop(&f).unwrap() {
                Validity::Valid => prop_assert!(eval(&f, &m).unwrap().assertable()),
                Validity::Invalid(witness) => {
                    let mut w = m.clone();
                    w.letters = witness;
                    prop_assert!(!eval(&f, &w).unwrap().assertable());
                }
            }
        }
    }
}
