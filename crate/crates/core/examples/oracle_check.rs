//! Runs the seeded self-check suites, as `bzfc check` does.

use bzfc::cli::check::{render_reports, run_suites};

fn main() {
    let seed = std::env::args().nth(1).map_or(7, |s| s.parse().expect("a seed"));
    let reports = run_suites(seed, 200);
    print!("{}", render_reports(&reports));
}
