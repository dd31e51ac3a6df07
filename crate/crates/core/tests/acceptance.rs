//! The twelve acceptance criteria, one test each. Every test prints a single
//! `criterion N ...: PASS|FAIL` line (visible with `--nocapture`) and fails on
//! any violation.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use bzfc::cardinal::{card_eq_tv, card_le_tv, card_of, finite_lattice, Cardinal, ClassicalCard};
use bzfc::checker::{valid_prop, Validity};
use bzfc::formula::parse;
use bzfc::ncset::{ClassicalFn, Element, NCSet};
use bzfc::numerosity::{cong_tv, preceq_tv};
use bzfc::oracle::{cong_brute, preceq_brute};
use bzfc::parareal::{pr_inv, pr_mul, pr_sub, ParaReal};
use bzfc::truth::TruthValue;
use num::{BigInt, BigRational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(n: u32, name: &str, failures: &[String], detail: &str) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n:>2} {name}: {status} ({detail})");
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {n} failed: {} violations", failures.len());
}

fn tv(c: char) -> TruthValue {
    c.to_string().parse().unwrap()
}

fn set(s: &str) -> NCSet {
    s.parse().unwrap()
}

const ORDER: [char; 4] = ['t', 'b', 'n', 'f'];

/// Rows and columns in the order t, b, n, f, as printed in the tables.
const NEG: &str = "fbnt";
const CONJ: [&str; 4] = ["tbnf", "bbff", "nfnf", "ffff"];
const DISJ: [&str; 4] = ["tttt", "tbtb", "ttnn", "tbnf"];
const IMP: [&str; 4] = ["tbnf", "tbnf", "tttt", "tttt"];
const IFF: [&str; 4] = ["tbnf", "bbnf", "nntt", "fftt"];
/// Columns ¬, !, ?, ∘ for rows t, b, n, f.
const DEFINED: [&str; 4] = ["fttt", "ftff", "tftf", "tfft"];

#[test]
fn criterion_01_truth_tables() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cells = 0;
    for (i, &x) in ORDER.iter().enumerate() {
        let x = tv(x);
        let neg = tv(NEG.as_bytes()[i] as char);
        cells += 1;
        if x.neg() != neg {
            failures.push(format!("~{x} = {} expected {neg}", x.neg()));
        }
        for (table, name, op) in [
            (CONJ, "/\\", TruthValue::conj as fn(TruthValue, TruthValue) -> TruthValue),
            (DISJ, "\\/", TruthValue::disj),
            (IMP, "->", TruthValue::imp),
            (IFF, "<->", TruthValue::iff),
        ] {
            for (j, &y) in ORDER.iter().enumerate() {
                let y = tv(y);
                let expected = tv(table[i].as_bytes()[j] as char);
                cells += 1;
                if op(x, y) != expected {
                    failures.push(format!("{x} {name} {y} = {} expected {expected}", op(x, y)));
                }
            }
        }
        let row = DEFINED[i].as_bytes();
        for (k, (name, got)) in [("-", x.cneg()), ("!", x.bang()), ("?", x.query()), ("o", x.circ())]
            .into_iter()
            .enumerate()
        {
            let expected = tv(row[k] as char);
            cells += 1;
            if got != expected {
                failures.push(format!("{name}{x} = {got} expected {expected}"));
            }
        }
    }
    let elapsed = start.elapsed();
    report(1, "truth tables", &failures, &format!("{cells} cells in {elapsed:?}"));
}

#[test]
fn criterion_02_validities() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for text in ["p & q <-> p /\\ q", "~(p & q) <-> (p -> ~q)"] {
        if valid_prop(&parse(text).unwrap()) != Ok(Validity::Valid) {
            failures.push(format!("{text} should be valid"));
        }
    }
    let contraposition = "(p -> q) -> (~q -> ~p)";
    match valid_prop(&parse(contraposition).unwrap()) {
        Ok(Validity::Invalid(w)) => {
            // Check the witness by hand through the tables.
            let (p, q) = (w["p"], w["q"]);
            let value = p.imp(q).imp(q.neg().imp(p.neg()));
            if value.assertable() {
                failures.push(format!("witness p={p} q={q} does not falsify"));
            }
        }
        other => failures.push(format!("{contraposition} should be invalid, got {other:?}")),
    }
    let elapsed = start.elapsed();
    report(2, "propositional validities", &failures, &format!("{elapsed:?}"));
}

fn function(pairs: &[(u64, &str)]) -> ClassicalFn {
    pairs.iter().map(|&(x, y)| (Element::Nat(x), Element::atom(y))).collect()
}

#[test]
fn criterion_03_images() {
    let mut failures = Vec::new();
    let a = set("<{1,2,3}|{3,4,5}>");
    let f = function(&[(1, "a"), (2, "b"), (3, "c"), (4, "d"), (5, "b")]);
    let image = a.image(&f).unwrap();
    if image != set("<{a,b,c}|{b,c,d}>") {
        failures.push(format!("f[A] = {image}"));
    }
    let a = set("<{1,2}|{3}|{4}>");
    let g = function(&[(1, "a"), (2, "b"), (3, "c"), (4, "d")]);
    let image = a.image(&g).unwrap();
    if image != set("<{a,b}|{c}|{d}>") {
        failures.push(format!("g[A] = {image}"));
    }
    report(3, "worked image examples", &failures, "2 examples");
}

#[test]
fn criterion_04_cong_example() {
    let a = set("<{a,b}|{c}|{d}>");
    let closed = cong_tv(&a, &a);
    let brute = cong_brute(&a, &a).unwrap();
    let mut failures = Vec::new();
    if closed != TruthValue::B || brute != TruthValue::B {
        failures.push(format!("closed {closed}, brute {brute}"));
    }
    report(4, "A cong A is b", &failures, &format!("closed {closed}, brute {brute}"));
}

const ALPHABET: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// A set whose realm has between 0 and `max_realm` atoms, each part chosen uniformly.
fn random_set(rng: &mut ChaCha8Rng, max_realm: usize) -> NCSet {
    let size = rng.gen_range(0..=max_realm);
    let (mut b, mut t, mut n) = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
    for atom in ALPHABET.choose_multiple(rng, size) {
        let part = match rng.gen_range(0..3) {
            0 => &mut b,
            1 => &mut t,
            _ => &mut n,
        };
        part.insert(Element::atom(*atom));
    }
    NCSet::from_three(b, t, n).unwrap()
}

/// All 16 sets over the two-atom alphabet {a, b}.
fn two_atom_family() -> Vec<NCSet> {
    let mut family = Vec::new();
    for x in TruthValue::ALL {
        for y in TruthValue::ALL {
            family.push(NCSet::from_membership([(Element::atom("a"), x), (Element::atom("b"), y)]));
        }
    }
    family
}

#[test]
fn criterion_05_oracle_equivalence() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut check = |a: &NCSet, b: &NCSet| {
        let cong = (cong_tv(a, b), cong_brute(a, b).unwrap());
        let preceq = (preceq_tv(a, b), preceq_brute(a, b).unwrap());
        if cong.0 != cong.1 || preceq.0 != preceq.1 {
            failures.push(format!("A = {a}, B = {b}: cong {cong:?}, preceq {preceq:?}"));
        }
    };
    let family = two_atom_family();
    for a in &family {
        for b in &family {
            check(a, b);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let random = 600;
    for _ in 0..random {
        let (a, b) = (random_set(&mut rng, 4), random_set(&mut rng, 4));
        check(&a, &b);
    }
    let elapsed = start.elapsed();
    let detail = format!("{} exhaustive + {random} random pairs in {elapsed:?}", family.len().pow(2));
    report(5, "closed forms agree with brute force", &failures, &detail);
}

#[test]
fn criterion_06_equivalence_and_schroeder_bernstein() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = Vec::new();
    let triples = 1500;
    for _ in 0..triples {
        let (a, b, c) = (random_set(&mut rng, 5), random_set(&mut rng, 5), random_set(&mut rng, 5));
        let t = |v: TruthValue| v.assertable();
        let mut bad = Vec::new();
        if !t(cong_tv(&a, &a)) {
            bad.push("reflexivity");
        }
        if cong_tv(&a, &b) != cong_tv(&b, &a) {
            bad.push("symmetry");
        }
        if t(cong_tv(&a, &b)) && t(cong_tv(&b, &c)) && !t(cong_tv(&a, &c)) {
            bad.push("transitivity");
        }
        if t(cong_tv(&a, &b)) && (cong_tv(&a, &c) != cong_tv(&b, &c) || preceq_tv(&c, &a) != preceq_tv(&c, &b)) {
            bad.push("substitutivity");
        }
        if t(preceq_tv(&a, &b)) && t(preceq_tv(&b, &c)) && !t(preceq_tv(&a, &c)) {
            bad.push("preceq transitivity");
        }
        if t(preceq_tv(&a, &b)) && t(preceq_tv(&b, &a)) && !t(cong_tv(&a, &b)) {
            bad.push("Schroeder-Bernstein");
        }
        if !bad.is_empty() {
            failures.push(format!("A = {a}, B = {b}, C = {c}: {}", bad.join(", ")));
        }
    }
    report(6, "equivalence laws and Schroeder-Bernstein", &failures, &format!("{triples} triples"));
}

#[test]
fn criterion_07_cardinal_bridge() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs: Vec<(NCSet, NCSet)> = Vec::new();
    let family = two_atom_family();
    for a in &family {
        for b in &family {
            pairs.push((a.clone(), b.clone()));
        }
    }
    for _ in 0..1000 {
        pairs.push((random_set(&mut rng, 5), random_set(&mut rng, 5)));
    }
    let mut failures = Vec::new();
    for (a, b) in &pairs {
        let (ka, kb) = (card_of(a), card_of(b));
        if card_eq_tv(ka, kb) != cong_tv(a, b) || card_le_tv(ka, kb) != preceq_tv(a, b) {
            failures.push(format!("A = {a}, B = {b}"));
        }
    }
    report(7, "cardinal comparison matches set comparison", &failures, &format!("{} pairs", pairs.len()));
}

#[test]
fn criterion_08_product_and_sum() {
    let mut failures = Vec::new();
    let (b, n, one, zero) = (Cardinal::B, Cardinal::N, Cardinal::ONE, Cardinal::ZERO);
    for (name, holds) in [("b*b = b", b * b == b), ("n*n = n", n * n == n), ("b*n = 0", b * n == zero)] {
        if !holds {
            failures.push(name.to_owned());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let classical = |rng: &mut ChaCha8Rng| {
        if rng.gen_ratio(1, 4) {
            ClassicalCard::Aleph(rng.gen_range(0..4))
        } else {
            ClassicalCard::Fin(rng.gen_range(0..8))
        }
    };
    for _ in 0..500 {
        let k = Cardinal::new(classical(&mut rng), classical(&mut rng), classical(&mut rng));
        if k * one != k || k * zero != zero {
            failures.push(format!("unit laws at {k}"));
        }
    }
    let pairs = 600;
    for _ in 0..pairs {
        let (x, y) = (random_set(&mut rng, 4), random_set(&mut rng, 4));
        if card_of(&x.product(&y)) != card_of(&x) * card_of(&y) {
            failures.push(format!("|{x} x {y}|"));
        }
        if card_of(&x.disjoint_union(&y)) != card_of(&x) + card_of(&y) {
            failures.push(format!("|{x} + {y}|"));
        }
    }
    report(8, "cardinal product and sum", &failures, &format!("500 unit checks, {pairs} set pairs"));
}

#[test]
fn criterion_09_partial_order_failure() {
    let aleph0 = Cardinal::classical(ClassicalCard::ALEPH_0);
    let bigger = aleph0 + Cardinal::B;
    let (up, down, eq) = (card_le_tv(aleph0, bigger), card_le_tv(bigger, aleph0), card_eq_tv(aleph0, bigger));
    let mut failures = Vec::new();
    if up != TruthValue::T || down != TruthValue::T || eq.assertable() {
        failures.push(format!("le {up}, ge {down}, eq {eq}"));
    }
    report(9, "antisymmetry fails at aleph0", &failures, &format!("le {up}, ge {down}, eq {eq}"));
}

#[test]
fn criterion_10_lattice() {
    let graph = finite_lattice((1, 1, 1)).unwrap();
    let nodes: Vec<(u64, u64, u64)> = (0..8).map(|i| (i >> 2 & 1, i >> 1 & 1, i & 1)).collect();
    let card = |(t, b, n): (u64, u64, u64)| Cardinal::finite(t, b, n);
    let step = |x: (u64, u64, u64), y: (u64, u64, u64)| {
        let d = (y.0 as i64 - x.0 as i64, y.1 as i64 - x.1 as i64, y.2 as i64 - x.2 as i64);
        matches!(d, (1, 0, 0) | (0, 1, 0) | (0, 0, 1) | (1, -1, 0) | (1, 0, -1))
    };
    let mut failures = Vec::new();
    let expected: BTreeSet<(Cardinal, Cardinal)> = nodes
        .iter()
        .flat_map(|&x| nodes.iter().filter(move |&&y| step(x, y)).map(move |&y| (card(x), card(y))))
        .collect();
    let actual: BTreeSet<(Cardinal, Cardinal)> = graph.edges().iter().map(|e| (e.from, e.to)).collect();
    if expected != actual {
        failures.push(format!("edge sets differ: {:?}", expected.symmetric_difference(&actual).collect::<Vec<_>>()));
    }
    // Reachability by closing the expected step relation.
    let mut reach = [[false; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            reach[i][j] = i == j || step(nodes[i], nodes[j]);
        }
    }
    for k in 0..8 {
        for i in 0..8 {
            for j in 0..8 {
                reach[i][j] |= reach[i][k] && reach[k][j];
            }
        }
    }
    for i in 0..8 {
        for j in 0..8 {
            let (x, y) = (card(nodes[i]), card(nodes[j]));
            if reach[i][j] != card_le_tv(x, y).assertable() {
                failures.push(format!("{x} ~> {y}"));
            }
        }
    }
    if !graph.to_dot().contains("\"b\" -> \"1\"") {
        failures.push("DOT lacks b -> 1".into());
    }
    report(10, "lattice steps and reachability", &failures, &format!("{} edges", actual.len()));
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-50..=50)), BigInt::from(rng.gen_range(1..=20)))
}

fn random_parareal(rng: &mut ChaCha8Rng) -> ParaReal {
    ParaReal::new(random_rational(rng), random_rational(rng), random_rational(rng))
}

#[test]
fn criterion_11_para_reals() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut failures = Vec::new();
    let mut guarded = 0;
    while guarded < 1000 {
        let y = random_parareal(&mut rng);
        if !pr_sub(&y, &y).is_zero() {
            failures.push(format!("{y} - {y}"));
        }
        if let Ok(inv) = pr_inv(&y) {
            guarded += 1;
            if pr_mul(&y, &inv) != ParaReal::one() {
                failures.push(format!("{y} * ({inv})"));
            }
        }
    }
    for _ in 0..500 {
        let (x, y, z) = (random_parareal(&mut rng), random_parareal(&mut rng), random_parareal(&mut rng));
        let laws = [
            &x + &y == &y + &x,
            &x * &y == &y * &x,
            &(&x + &y) + &z == &x + &(&y + &z),
            &(&x * &y) * &z == &x * &(&y * &z),
            &x * &(&y + &z) == &(&x * &y) + &(&x * &z),
            &x + &ParaReal::zero() == x,
            &x * &ParaReal::one() == x,
        ];
        if laws.contains(&false) {
            failures.push(format!("ring laws at x = {x}, y = {y}, z = {z}"));
        }
    }
    report(11, "para-real identities", &failures, &format!("{guarded} invertible triples, 500 law triples"));
}

#[test]
fn criterion_12_end_to_end_check() {
    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_bzfc"))
        .args(["check", "--seed", "7", "--cases", "500"])
        .output()
        .unwrap();
    let mut failures = Vec::new();
    if output.status.code() != Some(0) {
        failures.push(format!(
            "exit {:?}: {}",
            output.status.code(),
            String::from_utf8_lossy(&output.stdout)
        ));
    }
    let elapsed = start.elapsed();
    report(12, "check --seed 7 --cases 500", &failures, &format!("exit 0 in {elapsed:?}"));
}
