//! Acceptance criteria. Runs without the libtest harness so that one line per
//! criterion is always printed; exits non-zero if any criterion fails.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use glcaps::caps::cap_diagram;
use glcaps::characters::CharacterCombination;
use glcaps::diagrams::{arrow_diagram, Symbol};
use glcaps::jantzen::full_jsf;
use glcaps::multiplicities::{block_below, decomp_number, tilting_mult};
use glcaps::verify::{
    arrow_pairs_suite, brauer_suite, characters_suite, jsf_reduced_suite, order_suite, structural_suite, BrauerBounds,
    SuiteReport,
};
use glcaps::DominantWeight;
use num_bigint::BigInt;

type Ch = CharacterCombination<BigInt>;

static CHECKS: AtomicUsize = AtomicUsize::new(0);

fn w(n: usize, s: &str) -> DominantWeight {
    DominantWeight::parse(n, s).unwrap()
}

fn check(cond: bool, what: &str, fails: &mut Vec<String>) {
    CHECKS.fetch_add(1, Ordering::Relaxed);
    if !cond {
        fails.push(what.to_string());
    }
}

fn small_examples_jsf() -> Vec<String> {
    let mut fails = Vec::new();
    let jsf = |s: &str| full_jsf::<BigInt>(&w(4, s), 3).unwrap().sum;
    let chi = |s: &str| Ch::basis(w(4, s));
    check(jsf("1,1,1/-") == Ch::zero(4), "JSF([1³]) = 0", &mut fails);
    check(jsf("2,1/-") == chi("1,1,1/-"), "JSF([21]) = χ([1³])", &mut fails);
    check(jsf("3/-") == chi("2,1/-") - chi("1,1,1/-"), "JSF([3]) = -χ([1³]) + χ([21])", &mut fails);
    check(jsf("3,1/1") == chi("2,1/-") + chi("3/-"), "JSF([31,1]) = χ([21]) + χ([3])", &mut fails);
    fails
}

fn arrow_diagram_examples() -> Vec<String> {
    let mut fails = Vec::new();
    let lin = |s: &str| arrow_diagram(&w(5, s), 1, 1, 5).unwrap().linearise().unwrap();
    check(lin("4/4").ascii() == "OOVOA" && lin("4/4").unicode() == "oo∨o∧", "[4,4] ↦ oo∨o∧", &mut fails);
    check(lin("2/4").ascii() == "OOXOO", "[2,4] ↦ oo×oo", &mut fails);

    let lambda = w(20, "9,6,5,4,4,2/8,8,4,3,3,2");
    let d = arrow_diagram(&lambda, 8, 7, 17).unwrap();
    let c = cap_diagram(&lambda, 8, 7, 17).unwrap();
    let mut pairs: Vec<(usize, usize)> = c.caps.iter().map(|c| (c.left + 1, c.right + 1)).collect();
    pairs.sort();
    check(c.base.shift == 13, "p = 17 diagram starts at label 13", &mut fails);
    check(pairs == vec![(4, 5), (6, 11), (7, 8), (16, 17)], "p = 17 cap endpoints", &mut fails);
    check(
        [5, 9, 15].iter().all(|l| d.symbol(*l) == Some(Symbol::Empty)),
        "labels 5, 9, 15 carry no arrow",
        &mut fails,
    );
    check(
        (0..17).filter(|l| ![5, 9, 15].contains(l)).all(|l| d.symbol(l) != Some(Symbol::Empty)),
        "every other label carries an arrow",
        &mut fails,
    );
    fails
}

fn block_examples() -> Vec<String> {
    let mut fails = Vec::new();
    let lambda = w(7, "3,2/2,1,1");
    let mut block = block_below(&lambda, 2, 3, 5).unwrap();
    block.sort();
    let mut expected: Vec<DominantWeight> =
        ["3,2/2,1,1", "2,2/1,1,1", "3,1/2,1", "2,1/1,1", "3/2", "2/1"].iter().map(|s| w(7, s)).collect();
    expected.sort();
    check(block == expected, "block below [32,21²]", &mut fails);
    for (mu, v) in [("2,2/1,1,1", 1), ("3,1/2,1", 1), ("2,1/1,1", 1), ("3/2", 0), ("2/1", 0)] {
        check(tilting_mult(&lambda, &w(7, mu), 2, 3, 5).unwrap() == v, &format!("(T(λ):∇([{mu}])) = {v}"), &mut fails);
    }
    let mu = w(7, "2/1");
    check(decomp_number(&w(7, "3,1/2,1"), &mu, 2, 3, 5).unwrap() == 1, "[Δ([31,21]):L([2,1])] = 1", &mut fails);
    check(decomp_number(&lambda, &mu, 2, 3, 5).unwrap() == 0, "[Δ([32,21²]):L([2,1])] = 0", &mut fails);
    fails
}

fn from_suite(r: SuiteReport) -> Vec<String> {
    CHECKS.fetch_add(r.cases, Ordering::Relaxed);
    let mut f = r.failures;
    if r.cases == 0 {
        f.push(format!("{}: no cases were checked", r.name));
    }
    f
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Vec<String>,
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "Jantzen sums at p=3, n=4", limit: Duration::from_secs(1), run: small_examples_jsf },
        Criterion { id: 2, title: "arrow and cap diagram examples", limit: Duration::from_secs(1), run: arrow_diagram_examples },
        Criterion { id: 3, title: "block, tilting and decomposition examples at p=5, n=7", limit: Duration::from_secs(1), run: block_examples },
        Criterion {
            id: 4,
            title: "full = reduced Jantzen sum on p-core bipartitions (n<=6, p in {2,3,5}, size<=8)",
            limit: Duration::from_secs(30),
            run: || from_suite(jsf_reduced_suite(&[2, 3, 5], 6, 8)),
        },
        Criterion {
            id: 5,
            title: "reduced Jantzen support = arrow-pair reversals (p<=7, n<=8, s<=3)",
            limit: Duration::from_secs(60),
            run: || from_suite(arrow_pairs_suite(7, 8, 3)),
        },
        Criterion {
            id: 6,
            title: "preceq = reflection oracle on all pairs (p<=5, n<=7)",
            limit: Duration::from_secs(60),
            run: || from_suite(order_suite(5, 7)),
        },
        Criterion {
            id: 7,
            title: "unitriangularity, dagger duality, irreducibility (p<=5, n<=8, s<=2)",
            limit: Duration::from_secs(60),
            run: || from_suite(structural_suite(5, 8, 2)),
        },
        Criterion {
            id: 8,
            title: "mixed tensor character identity and ψ recursion (r+s<=6)",
            limit: Duration::from_secs(30),
            run: || from_suite(characters_suite(6)),
        },
        Criterion {
            id: 9,
            title: "walled Brauer counts, identities, associativity, independence of n",
            limit: Duration::from_secs(60),
            run: || from_suite(brauer_suite(BrauerBounds::default())),
        },
    ];

    let mut all_ok = true;
    for c in &criteria {
        CHECKS.store(0, Ordering::Relaxed);
        let start = Instant::now();
        let fails = (c.run)();
        let elapsed = start.elapsed();
        let in_time = elapsed < c.limit;
        let ok = fails.is_empty() && in_time;
        all_ok &= ok;
        println!(
            "{} criterion {}: {} [{} checks] ({:.2}s, limit {}s)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            CHECKS.load(Ordering::Relaxed),
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        for f in fails.iter().take(10) {
            println!("    {f}");
        }
        if fails.len() > 10 {
            println!("    ... and {} more", fails.len() - 10);
        }
        if !in_time {
            println!("    exceeded the time limit");
        }
    }
    if !all_ok {
        std::process::exit(1);
    }
}
