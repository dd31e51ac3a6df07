//! Parses formulas and evaluates them over a small model.

use std::collections::BTreeMap;

use bzfc::checker::{eval, Model, Value};
use bzfc::formula::parse;
use bzfc::ncset::{Element, NCSet};

fn main() {
    let a: NCSet = "<{a}|{b}|{}>".parse().unwrap();
    let env = BTreeMap::from([("A".to_owned(), Value::Set(a))]);
    let universe = ["a", "b", "c"].map(|x| Value::Elem(Element::atom(x))).to_vec();
    let model = Model::new(universe, env).unwrap();

    for text in [
        "a in A",
        "c notin A",
        "exists x . x in A",
        "forall x in A . x = a \\/ x = b",
        "forall x . x in A",
        "!(a in A) -> ?(a in A)",
    ] {
        let f = parse(text).unwrap();
        println!("{:<34} {}", f.to_string(), eval(&f, &model).unwrap());
    }
}
