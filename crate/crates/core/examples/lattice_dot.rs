//! Prints the step graph of small finite cardinals as DOT.
//!
//! Usage: `cargo run --example lattice_dot -- 1 1 1 | dot -Tsvg`

use bzfc::cardinal::finite_lattice;

fn main() {
    let bounds: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("a number")).collect();
    let (t, b, n) = match bounds[..] {
        [t, b, n] => (t, b, n),
        _ => (1, 1, 1),
    };
    let graph = finite_lattice((t, b, n)).unwrap();
    eprintln!("{} nodes, {} edges", graph.nodes().len(), graph.edges().len());
    print!("{}", graph.to_dot());
}
