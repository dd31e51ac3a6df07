//! Checks propositional validity by running through every assignment.

use bzfc::checker::{valid_prop, Validity};
use bzfc::formula::parse;

fn main() {
    for text in [
        "p & q <-> p /\\ q",
        "~(p & q) <-> (p -> ~q)",
        "(p -> q) -> (~q -> ~p)",
        "(p => q) => (~q => ~p)",
        "p \\/ -p",
        "p \\/ ~p",
    ] {
        match valid_prop(&parse(text).unwrap()).unwrap() {
            Validity::Valid => println!("{text:<26} valid"),
            Validity::Invalid(witness) => {
                let shown: Vec<String> = witness.iter().map(|(p, v)| format!("{p}={v}")).collect();
                println!("{text:<26} fails at {}", shown.join(" "));
            }
        }
    }
}
