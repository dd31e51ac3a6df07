//! Cardinals as (t, b, n) triples: arithmetic and comparison.

use bzfc::arith::eval_cardinal;
use bzfc::cardinal::{card_of, Cardinal, ClassicalCard};
use bzfc::ncset::NCSet;

fn main() {
    let set: NCSet = "<{a}|{b,c}|{d}>".parse().unwrap();
    println!("|{set}| = {}", card_of(&set));

    for expr in ["b * b", "n * n", "b * n", "(1 + b) * (2 + n)", "aleph0 + 2b", "aleph1 * 3"] {
        println!("{expr} = {}", eval_cardinal(expr).unwrap());
    }

    let aleph0 = Cardinal::classical(ClassicalCard::ALEPH_0);
    let bigger = aleph0 + Cardinal::B;
    println!("{aleph0} <= {bigger}: {}", aleph0.le_tv(bigger));
    println!("{bigger} <= {aleph0}: {}", bigger.le_tv(aleph0));
    println!("{aleph0} = {bigger}: {}", aleph0.eq_tv(bigger));
}
