//! The `check` self-test: seeded random instances run through the oracle
//! agreement and algebraic law suites.

use std::fmt::Write as _;

use num::{BigInt, BigRational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cardinal::{card_of, finite_lattice, Cardinal, ClassicalCard};
use crate::formula::{parse, BinOp, Formula, Term, UnOp};
use crate::ncset::{Element, NCSet};
use crate::numerosity::{cong_tv, preceq_tv};
use crate::oracle::{cong_brute, preceq_brute};
use crate::parareal::{pr_inv, pr_mul, pr_sub, ParaReal};
use crate::truth::TruthValue;

/// Largest `--cases` accepted.
pub const MAX_CASES: usize = 100_000;

/// Outcome of one suite: how many instances ran and the failing ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const ALPHABET: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// A set whose realm has at most `max_realm` atoms.
pub fn random_set(rng: &mut impl Rng, max_realm: usize) -> NCSet {
    let size = rng.gen_range(0..=max_realm.min(ALPHABET.len()));
    let atoms = ALPHABET.choose_multiple(rng, size);
    let parts = [TruthValue::T, TruthValue::B, TruthValue::N];
    NCSet::from_membership(atoms.map(|a| (Element::atom(*a), *parts.choose(rng).expect("non-empty"))))
}

fn random_classical(rng: &mut impl Rng) -> ClassicalCard {
    if rng.gen_ratio(1, 5) {
        ClassicalCard::Aleph(rng.gen_range(0..3))
    } else {
        ClassicalCard::Fin(rng.gen_range(0..6))
    }
}

pub fn random_cardinal(rng: &mut impl Rng) -> Cardinal {
    Cardinal::new(random_classical(rng), random_classical(rng), random_classical(rng))
}

fn random_rational(rng: &mut impl Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-30..=30)), BigInt::from(rng.gen_range(1..=12)))
}

pub fn random_parareal(rng: &mut impl Rng) -> ParaReal {
    ParaReal::new(random_rational(rng), random_rational(rng), random_rational(rng))
}

pub fn random_formula(rng: &mut impl Rng, depth: u32) -> Formula {
    const VARS: [&str; 3] = ["x", "y", "c"];
    const CONSTS: [&str; 2] = ["A", "B"];
    let term = |rng: &mut dyn rand::RngCore| {
        if rng.gen_bool(0.5) {
            Term::var(*VARS.choose(rng).expect("non-empty"))
        } else {
            Term::constant(*CONSTS.choose(rng).expect("non-empty"))
        }
    };
    if depth == 0 || rng.gen_ratio(1, 4) {
        return match rng.gen_range(0..4) {
            0 => Formula::Member(term(rng), term(rng)),
            1 => Formula::Equal(term(rng), term(rng)),
            2 => Formula::Bottom,
            _ => Formula::prop(*["p", "q"].choose(rng).expect("non-empty")),
        };
    }
    let var = *VARS[..2].choose(rng).expect("non-empty");
    match rng.gen_range(0..6) {
        0 | 1 => Formula::unary(*UnOp::ALL.choose(rng).expect("non-empty"), random_formula(rng, depth - 1)),
        2 | 3 => Formula::binary(
            *BinOp::ALL.choose(rng).expect("non-empty"),
            random_formula(rng, depth - 1),
            random_formula(rng, depth - 1),
        ),
        4 if rng.gen_bool(0.5) => Formula::forall(var, random_formula(rng, depth - 1)),
        4 => Formula::exists(var, random_formula(rng, depth - 1)),
        _ if rng.gen_bool(0.5) => Formula::forall_in(var, term(rng), random_formula(rng, depth - 1)),
        _ => Formula::exists_in(var, term(rng), random_formula(rng, depth - 1)),
    }
}

struct Suite {
    report: SuiteReport,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            report: SuiteReport {
                name,
                cases: 0,
                failures: Vec::new(),
            },
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.report.cases += 1;
        if !ok {
            self.report.failures.push(describe());
        }
    }
}

fn oracle_agreement(rng: &mut ChaCha8Rng, cases: usize) -> SuiteReport {
    let mut suite = Suite::new("oracle-agreement");
    for _ in 0..cases {
        let (a, b) = (random_set(rng, 3), random_set(rng, 3));
        let cong = (cong_tv(&a, &b), cong_brute(&a, &b).expect("within guard"));
        let preceq = (preceq_tv(&a, &b), preceq_brute(&a, &b).expect("within guard"));
        suite.case(cong.0 == cong.1 && preceq.0 == preceq.1, || {
            format!(
                "A = {a}, B = {b}: cong {} vs brute {}, preceq {} vs brute {}",
                cong.0, cong.1, preceq.0, preceq.1
            )
        });
    }
    suite.report
}

fn numerosity_laws(rng: &mut ChaCha8Rng, cases: usize) -> SuiteReport {
    let mut suite = Suite::new("numerosity-laws");
    for _ in 0..cases {
        let (a, b, c) = (random_set(rng, 4), random_set(rng, 4), random_set(rng, 4));
        let asserts = |v: TruthValue| v.assertable();
        let mut ok = asserts(cong_tv(&a, &a)) && cong_tv(&a, &b) == cong_tv(&b, &a);
        if asserts(cong_tv(&a, &b)) {
            ok &= cong_tv(&a, &c) == cong_tv(&b, &c) && preceq_tv(&a, &c) == preceq_tv(&b, &c);
        }
        if asserts(preceq_tv(&a, &b)) && asserts(preceq_tv(&b, &c)) {
            ok &= asserts(preceq_tv(&a, &c));
        }
        if asserts(preceq_tv(&a, &b)) && asserts(preceq_tv(&b, &a)) {
            ok &= asserts(cong_tv(&a, &b));
        }
        suite.case(ok, || format!("A = {a}, B = {b}, C = {c}"));
    }
    suite.report
}

fn cardinal_bridge(rng: &mut ChaCha8Rng, cases: usize) -> SuiteReport {
    let mut suite = Suite::new("cardinal-bridge");
    for _ in 0..cases {
        let (a, b) = (random_set(rng, 4), random_set(rng, 4));
        let (ka, kb) = (card_of(&a), card_of(&b));
        let sum = card_of(&a.disjoint_union(&b)) == ka + kb;
        let product = card_of(&a.product(&b)) == ka * kb;
        let eq = ka.eq_tv(kb) == cong_tv(&a, &b);
        let le = ka.le_tv(kb) == preceq_tv(&a, &b);
        suite.case(sum && product && eq && le, || format!("A = {a}, B = {b}"));
    }
    suite.report
}

fn cardinal_laws(rng: &mut ChaCha8Rng, cases: usize) -> SuiteReport {
    let mut suite = Suite::new("cardinal-laws");
    let (b, n) = (Cardinal::B, Cardinal::N);
    suite.case(b * b == b && n * n == n && b * n == Cardinal::ZERO, || {
        "b * b = b, n * n = n, b * n = 0".to_owned()
    });
    for _ in 0..cases {
        let (x, y, z) = (random_cardinal(rng), random_cardinal(rng), random_cardinal(rng));
        let ok = x * Cardinal::ONE == x
            && x * Cardinal::ZERO == Cardinal::ZERO
            && x + y == y + x
            && x * y == y * x
            && (x + y) + z == x + (y + z)
            && (x * y) * z == x * (y * z)
            && x * (y + z) == x * y + x * z
            && Cardinal::ZERO.le_tv(x) == TruthValue::T;
        suite.case(ok, || format!("x = {x}, y = {y}, z = {z}"));
    }
    suite.report
}

fn parareal_laws(rng: &mut ChaCha8Rng, cases: usize) -> SuiteReport {
    let mut suite = Suite::new("parareal-laws");
    for _ in 0..cases {
        let (x, y, z) = (random_parareal(rng), random_parareal(rng), random_parareal(rng));
        let mut ok = pr_sub(&x, &x).is_zero()
            && &x + &y == &y + &x
            && &x * &y == &y * &x
            && &(&x * &y) * &z == &x * &(&y * &z)
            && &x * &(&y + &z) == &(&x * &y) + &(&x * &z);
        if let Ok(inv) = pr_inv(&y) {
            ok &= pr_mul(&y, &inv) == ParaReal::one();
        }
        suite.case(ok, || format!("x = {x}, y = {y}, z = {z}"));
    }
    suite.report
}

fn formula_round_trip(rng: &mut ChaCha8Rng, cases: usize) -> SuiteReport {
    let mut suite = Suite::new("formula-round-trip");
    for _ in 0..cases {
        let f = random_formula(rng, 4);
        let text = f.to_string();
        suite.case(parse(&text).as_ref() == Ok(&f), || text.clone());
    }
    suite.report
}

fn lattice_reachability() -> SuiteReport {
    let mut suite = Suite::new("lattice-reachability");
    for bounds in [(1, 1, 1), (2, 2, 2)] {
        let graph = finite_lattice(bounds).expect("small bounds");
        for &k in graph.nodes() {
            let reach = graph.reachable_from(k);
            for &m in graph.nodes() {
                suite.case(reach.contains(&m) == k.le_tv(m).assertable(), || format!("{k} ~> {m}"));
            }
        }
    }
    suite.report
}

/// Runs every suite with `cases` random instances each, all drawn from `seed`.
pub fn run_suites(seed: u64, cases: usize) -> Vec<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        oracle_agreement(&mut rng, cases),
        numerosity_laws(&mut rng, cases),
        cardinal_bridge(&mut rng, cases),
        cardinal_laws(&mut rng, cases),
        parareal_laws(&mut rng, cases),
        formula_round_trip(&mut rng, cases),
        lattice_reachability(),
    ]
}

/// One line per suite, then failing instances indented beneath it.
pub fn render_reports(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "ok" } else { "FAILED" };
        let _ = writeln!(
            out,
            "{}: {status} ({} cases, {} failures)",
            r.name,
            r.cases,
            r.failures.len()
        );
        for failure in &r.failures {
            let _ = writeln!(out, "  {failure}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_green() {
        let first = run_suites(7, 40);
        assert!(first.iter().all(SuiteReport::passed), "{}", render_reports(&first));
        assert_eq!(first, run_suites(7, 40));
    }

    #[test]
    fn random_sets_respect_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            assert!(random_set(&mut rng, 3).realm_len() <= 3);
        }
    }

    #[test]
    fn report_format() {
        let reports = [SuiteReport {
            name: "demo",
            cases: 2,
            failures: vec!["A = <{a}|{}|{}>".into()],
        }];
        assert_eq!(
            render_reports(&reports),
            "demo: FAILED (2 cases, 1 failures)\n  A = <{a}|{}|{}>\n"
        );
    }
}
