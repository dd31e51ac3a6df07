//! Prints the tables of every connective over t, b, n, f.

use bzfc::truth::TruthValue;

fn binary(name: &str, op: fn(TruthValue, TruthValue) -> TruthValue) {
    println!("{name:>3} | t b n f");
    for x in TruthValue::ALL {
        let row: Vec<String> = TruthValue::ALL.iter().map(|&y| op(x, y).to_string()).collect();
        println!("{:>3} | {}", x.to_string(), row.join(" "));
    }
    println!();
}

fn main() {
    println!("  x | ~ - ! ? o");
    for x in TruthValue::ALL {
        println!("{:>3} | {} {} {} {} {}", x.to_string(), x.neg(), x.cneg(), x.bang(), x.query(), x.circ());
    }
    println!();
    binary("/\\", TruthValue::conj);
    binary("\\/", TruthValue::disj);
    binary("->", TruthValue::imp);
    binary("<->", TruthValue::iff);
    binary("=>", TruthValue::strong_imp);
    binary("&", TruthValue::amp);
}
