//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Runs without the libtest harness so the report is always printed.

mod common;

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use common::*;
use wreathgen::constructions::{
    classic_generators, rank_one_classifier, special_pair, two_generators, ConstructionError,
    LemmaCase,
};
use wreathgen::groups::{bsgs_order, closure, Bsgs, Element, GroupSpec};
use wreathgen::perm::Permutation;
use wreathgen::rank::{
    check_filter_pair_claim, elementary_abelian_rank, rank_upper, table1_result, table_value,
    Certificate, RankValue, TowerSpec, TABLE1_COLUMNS, TABLE1_ROWS,
};
use wreathgen::wreath::{tower_generators, WreathElement};

type Outcome = Result<String, String>;

/// Title, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(text: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(text, n).unwrap()
}

fn named(n: usize) -> Vec<GroupSpec> {
    (1..=n)
        .flat_map(|k| [GroupSpec::Symmetric(k), GroupSpec::Alternating(k)])
        .collect()
}

/// A reduced word in free generators `a1, b2, ...`: the base group used to
/// read the product rule symbolically.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Word(Vec<(char, usize, i8)>);

impl Word {
    fn letter(c: char, i: usize) -> Self {
        Word(vec![(c, i, 1)])
    }
}

impl Element for Word {
    fn op(&self, rhs: &Self) -> Self {
        let mut out = self.0.clone();
        for &(c, i, e) in &rhs.0 {
            match out.last() {
                Some(&(c2, i2, e2)) if c2 == c && i2 == i && e2 == -e => {
                    out.pop();
                }
                _ => out.push((c, i, e)),
            }
        }
        Word(out)
    }

    fn inv(&self) -> Self {
        Word(self.0.iter().rev().map(|&(c, i, e)| (c, i, -e)).collect())
    }

    fn identity_like(&self) -> Self {
        Word(Vec::new())
    }

    fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for &(c, i, e) in &self.0 {
            write!(f, "{c}{i}")?;
            if e < 0 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

fn criterion_1() -> Outcome {
    let f = p("(1,2,3,4)", 5);
    let g = p("(1,2)(3,4,5)", 5);
    let fg = f.compose(&g).unwrap();
    ensure(fg.to_string() == "(2,4)(3,5)", || format!("fg = {fg}"))?;
    ensure(fg.images() == naive_compose(&f, &g), || {
        "composition disagrees with image lists".into()
    })?;

    let a: Vec<Word> = (1..=5).map(|i| Word::letter('a', i)).collect();
    let b: Vec<Word> = (1..=5).map(|i| Word::letter('b', i)).collect();
    let x = WreathElement::new(a.clone(), f.clone()).unwrap();
    let y = WreathElement::new(b.clone(), g.clone()).unwrap();
    let xy = x.mul(&y).unwrap();
    let pattern = [2, 3, 4, 1, 5];
    let expected: Vec<Word> = (0..5).map(|i| a[i].op(&b[pattern[i] - 1])).collect();
    ensure(xy.tuple() == expected.as_slice(), || {
        format!("tuple {:?}", xy.tuple())
    })?;
    ensure(*xy.top() == fg, || "top is not fg".into())?;

    // The same pattern with S_3 as the base group.
    let s3 = elements(&GroupSpec::Symmetric(3));
    let a: Vec<Permutation> = (0..5).map(|i| s3[(i * 2 + 1) % 6].clone()).collect();
    let b: Vec<Permutation> = (0..5).map(|i| s3[(i * 5 + 2) % 6].clone()).collect();
    let xy = WreathElement::new(a.clone(), f)
        .unwrap()
        .mul(&WreathElement::new(b.clone(), g).unwrap())
        .unwrap();
    for i in 0..5 {
        let want = a[i].compose(&b[pattern[i] - 1]).unwrap();
        ensure(xy.tuple()[i] == want, || {
            format!("S_3 coordinate {} differs", i + 1)
        })?;
    }
    let shown = format!("{:?}", expected);
    Ok(format!("fg = (2,4)(3,5), tuple {shown}"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for case in LemmaCase::ALL {
        for n in 3..=12 {
            match classic_generators(case, n) {
                Ok((gens, expected)) => {
                    let order = if n <= 9 {
                        BigUint::from(closure(&gens).unwrap().len())
                    } else {
                        bsgs_order(n, &gens).unwrap()
                    };
                    ensure(order == expected.order(), || {
                        format!(
                            "{case} n={n}: generated {order}, expected {}",
                            expected.order()
                        )
                    })?;
                    checked += 1;
                }
                Err(ConstructionError::Excluded { .. }) => {
                    let order = BigUint::from(closure(&case.raw_generators(n)).unwrap().len());
                    ensure(order != case.expected(n).order(), || {
                        format!("{case} n={n} is excluded but generates")
                    })?;
                }
                Err(ConstructionError::OutOfRange { .. }) => {}
                Err(e) => return Err(format!("{case} n={n}: {e}")),
            }
        }
    }
    let excluded = [
        (LemmaCase::DoubleTranspositionTail2, 5),
        (LemmaCase::DoubleTranspositionSkip3, 6),
        (LemmaCase::FourCycleTail3, 6),
    ];
    for (case, n) in excluded {
        ensure(
            matches!(
                classic_generators(case, n),
                Err(ConstructionError::Excluded { .. })
            ),
            || format!("{case} n={n} not rejected"),
        )?;
    }
    Ok(format!("{checked} (case, n) pairs, 3 exclusions enforced"))
}

fn closure_order(gens: &[Permutation]) -> usize {
    closure(gens).unwrap().len()
}

fn conjugates(f: &Permutation, g: &Permutation, count: usize) -> Vec<Permutation> {
    let mut out = vec![f.clone()];
    for _ in 1..count {
        out.push(out.last().unwrap().conjugate(g).unwrap());
    }
    out
}

fn criterion_3() -> Outcome {
    let lemma = |case: LemmaCase, n: usize| closure_order(&classic_generators(case, n).unwrap().0);
    let facts = [
        (
            "L2.5-1 n=4",
            lemma(LemmaCase::DoubleTranspositionTail2, 4),
            12,
        ),
        (
            "L2.5-1 n=6",
            lemma(LemmaCase::DoubleTranspositionTail2, 6),
            360,
        ),
        (
            "L2.5-2 n=5",
            lemma(LemmaCase::DoubleTranspositionSkip3, 5),
            60,
        ),
        ("L2.6 n=5", lemma(LemmaCase::FourCycleTail3, 5), 120),
    ];
    for (name, got, want) in facts {
        ensure(got == want, || format!("{name}: {got} != {want}"))?;
    }

    let a6 = conjugates(&p("(1,2)(3,4)", 6), &p("(2,3,4,5,6)", 6), 3);
    ensure(
        a6[1] == p("(1,3)(4,5)", 6) && a6[2] == p("(1,4)(5,6)", 6),
        || "A_6 conjugates".into(),
    )?;
    let a7 = conjugates(&p("(1,2)(3,4)", 7), &p("(2,4,5,6,7)", 7), 4);
    ensure(
        a7[1..] == [p("(1,4)(3,5)", 7), p("(1,5)(3,6)", 7), p("(1,6)(3,7)", 7)],
        || "A_7 conjugates".into(),
    )?;
    let s7 = conjugates(&p("(1,2,3,4)", 7), &p("(3,4,5,6,7)", 7), 4);
    for (name, gens, want) in [("A_6", &a6, 360), ("A_7", &a7, 2520), ("S_7", &s7, 5040)] {
        let got = closure_order(gens);
        ensure(got == want, || format!("{name}: {got} != {want}"))?;
    }
    Ok("12, 360, 60, 120, 360, 2520, 5040".into())
}

fn criterion_4() -> Outcome {
    let groups = (4..=12)
        .map(GroupSpec::Symmetric)
        .chain((5..=12).map(GroupSpec::Alternating));
    let mut count = 0;
    for s in groups {
        let n = s.degree();
        let (f, g) = special_pair(&s).map_err(|e| format!("{s}: {e}"))?;
        ensure(f.image(n) == n, || format!("{s}: n f = {}", f.image(n)))?;
        ensure(g.image(1) == 1, || format!("{s}: 1 g = {}", g.image(1)))?;
        ensure(matches!(f.order(), 2 | 4), || {
            format!("{s}: ord f = {}", f.order())
        })?;
        ensure(g.order() % 2 == 1, || format!("{s}: ord g = {}", g.order()))?;
        ensure(s.contains(&f) && s.contains(&g), || {
            format!("{s}: pair outside the group")
        })?;
        let order = bsgs_order(n, &[f, g]).unwrap();
        ensure(order == s.order(), || {
            format!("{s}: generates order {order}")
        })?;
        count += 1;
    }
    Ok(format!("{count} groups"))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for g in named(6) {
        for s in named(6) {
            let set = two_generators(&g, &s).map_err(|e| format!("{g} wr {s}: {e}"))?;
            ensure(set.elements.len() <= 2, || {
                format!("{g} wr {s}: {} elements", set.elements.len())
            })?;
            let degree = g.degree() * s.degree();
            let order = bsgs_order(degree, &set.embedded()).unwrap();
            let expected = g.order().pow(s.degree() as u32) * s.order();
            ensure(order == expected, || {
                format!("{g} wr {s}: {order} != {expected}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} pairs, all S/A of degree <= 6"))
}

/// Generators of the whole product `G wr S` as wreath elements: a spike of
/// each generator of `G` in every coordinate and `(1; s)` for generators `s`.
fn full_wreath_generators(g: &GroupSpec, s: &GroupSpec) -> Vec<WreathElement> {
    let (m, n) = (g.degree(), s.degree());
    let id = Permutation::identity(m);
    let mut out = vec![WreathElement::identity(id.clone(), n)];
    for a in g.generators() {
        for pos in 0..n {
            let mut t = vec![id.clone(); n];
            t[pos] = a.clone();
            out.push(WreathElement::new(t, Permutation::identity(n)).unwrap());
        }
    }
    for f in s.generators() {
        out.push(WreathElement::new(vec![id.clone(); n], f).unwrap());
    }
    out
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    let mut cyclic = 0;
    for g in named(4) {
        for s in named(4) {
            let oracle = WreathOracle::new(&g, &s);
            let direct = oracle.is_cyclic();
            ensure(rank_one_classifier(&g, &s) == direct, || {
                format!(
                    "{g} wr {s}: classifier {} but enumeration says {direct}",
                    !direct
                )
            })?;
            if oracle.order() <= 20_000 {
                let set = closure(&full_wreath_generators(&g, &s)).unwrap();
                ensure(set.len() as u128 == oracle.order(), || {
                    format!("{g} wr {s}: closure size")
                })?;
                ensure(wreathgen::groups::is_cyclic(&set) == direct, || {
                    format!("{g} wr {s}: is_cyclic")
                })?;
            }
            count += 1;
            cyclic += direct as usize;
        }
    }
    Ok(format!("{count} pairs, {cyclic} cyclic"))
}

fn cells() -> impl Iterator<Item = (usize, usize)> {
    (0..TABLE1_ROWS.len()).flat_map(|r| (0..TABLE1_COLUMNS.len()).map(move |c| (r, c)))
}

fn tower(r: usize, c: usize) -> TowerSpec {
    let (g1, g2) = &TABLE1_ROWS[r];
    TowerSpec::new(vec![g1.clone(), g2.clone(), TABLE1_COLUMNS[c].clone()]).unwrap()
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for (r, c) in cells() {
        let t = tower(r, c).generators();
        if t.expected_order > BigUint::from(5000u32) {
            continue;
        }
        let result = table1_result(r, c, 5000, 2000, 0);
        let want = table_value(r, c);
        ensure(result.value == RankValue::Exact(want), || {
            format!(
                "{}: computed {} ({}), table says {want}",
                tower(r, c),
                result.value,
                result.certificate
            )
        })?;
        ensure(result.certificate != Certificate::BoundsOnly, || {
            "bounds for an exact cell".into()
        })?;
        ensure(
            bsgs_order(t.degree, &result.witness).unwrap() == t.expected_order,
            || format!("{}: witness does not generate", tower(r, c)),
        )?;
        count += 1;
    }
    Ok(format!(
        "{count} cells of order <= 5000 exact and equal to the table"
    ))
}

fn criterion_8() -> Outcome {
    let mut max_degree = 0;
    for (i, (r, c)) in cells().enumerate() {
        let t = tower(r, c).generators();
        let want = table_value(r, c);
        let run =
            || rank_upper(&t.generators, t.degree, want, 2000, 1000 + i as u64, None).unwrap();
        let w = run().ok_or_else(|| format!("{}: no {want}-element witness", tower(r, c)))?;
        ensure(w.len() == want, || "witness size".into())?;
        ensure(
            Bsgs::new(t.degree, &w).unwrap().order() == t.expected_order,
            || format!("{}: witness generates a proper subgroup", tower(r, c)),
        )?;
        ensure(run() == Some(w), || {
            format!("{}: not seed-deterministic", tower(r, c))
        })?;
        max_degree = max_degree.max(t.degree);
    }
    Ok(format!(
        "96 witnesses of the table's size, degree <= {max_degree}"
    ))
}

fn criterion_9() -> Outcome {
    let t = tower_generators(&[
        GroupSpec::Symmetric(2),
        GroupSpec::Alternating(2),
        GroupSpec::Alternating(2),
        GroupSpec::Alternating(2),
    ])
    .unwrap();
    let r = elementary_abelian_rank(&t.generators);
    ensure(r == Some(8), || format!("rank {r:?}"))?;
    let w = rank_upper(&t.generators, t.degree, 7, 10_000, 0, None).unwrap();
    ensure(w.is_none(), || "7 elements generated".into())?;
    let w = rank_upper(&t.generators, t.degree, 8, 10_000, 0, None).unwrap();
    ensure(w.is_some(), || "no 8-element witness".into())?;
    Ok("rank 8; no 7-element witness in 10000 trials".into())
}

fn criterion_10() -> Outcome {
    for (g, s) in [
        (GroupSpec::Symmetric(2), GroupSpec::Symmetric(3)),
        (GroupSpec::Alternating(3), GroupSpec::Alternating(4)),
    ] {
        let holds = check_filter_pair_claim(&g, &s, 100_000).map_err(|e| e.to_string())?;
        ensure(holds, || {
            format!("{g} wr {s}: a tuple-only element lies in a generating pair")
        })?;
    }
    Ok("S_2 wr S_3 (48) and A_3 wr A_4 (972)".into())
}

fn criterion_11() -> Outcome {
    fn run<S: proptest::strategy::Strategy>(
        name: &str,
        strategy: S,
        test: impl Fn(S::Value) -> Result<(), proptest::test_runner::TestCaseError>,
    ) -> Result<(), String> {
        let config = Config {
            cases: 1000,
            failure_persistence: None,
            ..Config::default()
        };
        let mut runner =
            TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
        runner
            .run(&strategy, test)
            .map_err(|e| format!("{name}: {e}"))
    }
    run("associativity", perm_triple(12), check_associativity)?;
    run(
        "wreath associativity",
        wreath_triple(),
        check_wreath_associativity,
    )?;
    run("parity", perm_pair(12), check_parity)?;
    run("embedding", wreath_triple(), check_embed)?;
    run("closure/BSGS", small_generators(), check_closure_bsgs)?;
    run(
        "conjugation",
        generators_and_conjugator(),
        check_conjugation_invariance,
    )?;
    Ok("6 properties x 1000 cases".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("product example and symbolic tuple pattern", 1, criterion_1),
        ("classical generating sets, 3 <= n <= 12", 60, criterion_2),
        ("small base facts by closure", 30, criterion_3),
        ("special pair constraints", 60, criterion_4),
        (
            "two generators for every pair of degree <= 6",
            120,
            criterion_5,
        ),
        ("rank-one classification, degrees <= 4", 30, criterion_6),
        ("exact table cells of order <= 5000", 600, criterion_7),
        ("table upper bounds witnessed", 600, criterion_8),
        ("S_2^8 needs 8 generators", 60, criterion_9),
        (
            "tuple-only elements never in a generating pair",
            120,
            criterion_10,
        ),
        ("property suites", 600, criterion_11),
    ];
    let mut failed = 0;
    for (i, (title, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed > Duration::from_secs(limit) {
                Err(format!("took {elapsed:.1?}, limit {limit} s"))
            } else {
                Ok(detail)
            }
        });
        let (verdict, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {:>2} {verdict}  {title}  [{elapsed:.2?}]  {detail}",
            i + 1
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 11 acceptance criteria passed");
}
