//! Boolean operations, products and disjoint unions on three-part sets.

use bzfc::ncset::{Element, NCSet};

fn main() {
    let a: NCSet = "<{a}|{b}|{c}>".parse().unwrap();
    let b: NCSet = "<{b}|{c}|{}>".parse().unwrap();
    println!("A = {a}");
    println!("B = {b}");
    println!("A u B = {}", a.union(&b));
    println!("A n B = {}", a.intersect(&b));
    println!("A - B = {}", a.diff(&b));
    println!("A x B = {}", a.product(&b));
    println!("A + B = {}", a.disjoint_union(&b));
    println!("B sub A: {}", b.subset_tv(&a));
    println!("A = A: {}", a.eq_tv(&a));
    for x in ["a", "b", "c", "d"] {
        println!("{x} in A: {}", a.member_tv(&Element::atom(x)));
    }
}
