//! Images of sets under classical functions.

use bzfc::ncset::{ClassicalFn, Element, NCSet};

fn main() {
    let a: NCSet = "<{1,2,3}|{3,4,5}>".parse().unwrap();
    let f: ClassicalFn = [(1, "a"), (2, "b"), (3, "c"), (4, "d"), (5, "b")]
        .into_iter()
        .map(|(x, y)| (Element::Nat(x), Element::atom(y)))
        .collect();
    println!("A = {a}");
    println!("f injective: {}", f.is_injection());
    println!("f[A] = {}", a.image(&f).unwrap());

    let a: NCSet = "<{1,2}|{3}|{4}>".parse().unwrap();
    let g: ClassicalFn = (1..=4).map(|x| (Element::Nat(x), Element::Nat(10 * x))).collect();
    println!("g[{a}] = {}", a.image(&g).unwrap());
}
