//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line, in order, whatever the
//! capture settings. Slow extras (the n = 7 FPL total) run when the binary
//! gets `--ignored` / `--include-ignored` or `FPLWB_SLOW=1` is set.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use fplwb_core::algebra::{
    a_polynomial, a_polynomial_table, c_by_recurrence, matrix_c, run_check, run_check_with,
    CheckId, CheckParams, CheckReport, CheckStatus,
};
use fplwb_core::fpl::{
    a_pi_direct, count_fpl, enumerate_fpl, fpl_total_formula, link_pattern, pattern_census,
    wieland, wieland_inverse, Parity,
};
use fplwb_core::poly::ExactPolynomial;
use fplwb_core::tfpl::{cached_t_table, enumerate_oriented, t_count, TTable};
use fplwb_core::words::{enumerate_dyck, enumerate_words, BinaryWord, LinkPattern};

enum Verdict {
    Pass(String),
    Fail(String),
    /// Conjecture scans: reported, never fatal.
    Finding(String),
}

type Criterion = fn(bool) -> Verdict;

fn w(s: &str) -> BinaryWord {
    s.parse().expect("literal word")
}

fn table(n: usize) -> std::sync::Arc<TTable> {
    cached_t_table(n).expect("n within the table limit")
}

fn within(what: &str, elapsed: Duration, budget_secs: u64) -> Result<(), String> {
    if elapsed <= Duration::from_secs(budget_secs) {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:.1?}, budget {budget_secs} s"))
    }
}

/// Runs checks and fails on the first report that is not a pass.
fn all_pass(
    ids: &[CheckId],
    sizes: std::ops::RangeInclusive<usize>,
) -> Result<Vec<CheckReport>, String> {
    let params = CheckParams::default();
    let mut reports = Vec::new();
    for n in sizes {
        for &id in ids {
            let r = match id {
                CheckId::Hook | CheckId::NLemma => run_check(id, n, &params),
                _ => run_check_with(id, &table(n), &params),
            }
            .map_err(|e| format!("{id} n={n}: {e}"))?;
            if r.status != CheckStatus::Pass {
                return Err(format!(
                    "{id} n={n}: {:?} {:?}",
                    r.status, r.counterexamples
                ));
            }
            reports.push(r);
        }
    }
    Ok(reports)
}

fn cases(reports: &[CheckReport]) -> u64 {
    reports.iter().map(|r| r.cases).sum()
}

fn verdict(result: Result<String, String>) -> Verdict {
    match result {
        Ok(s) => Verdict::Pass(s),
        Err(s) => Verdict::Fail(s),
    }
}

fn c1_fpl_totals(slow: bool) -> Verdict {
    verdict((|| {
        let expected: [u64; 6] = [1, 2, 7, 42, 429, 7436];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            if fpl_total_formula(n) != BigInt::from(want) {
                return Err(format!(
                    "product formula at n={n} is {}",
                    fpl_total_formula(n)
                ));
            }
            for parity in [Parity::Odd, Parity::Even] {
                let got = count_fpl(n, parity);
                if got != want {
                    return Err(format!(
                        "FPL({n}) {parity} enumerated {got}, expected {want}"
                    ));
                }
            }
        }
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let start = Instant::now();
        let six = single.install(|| count_fpl(6, Parity::Odd));
        within("n=6 on one thread", start.elapsed(), 60)?;
        if six != 7436 {
            return Err(format!("single-threaded FPL(6) = {six}"));
        }
        let mut detail = format!(
            "n=1..6 match; n=6 single-threaded in {:.2?}",
            start.elapsed()
        );
        if slow {
            let seven = count_fpl(7, Parity::Odd);
            if seven != 218_348 || fpl_total_formula(7) != BigInt::from(218_348) {
                return Err(format!("FPL(7) = {seven}"));
            }
            detail.push_str("; n=7 = 218348");
        } else {
            detail.push_str("; n=7 skipped (slow)");
        }
        Ok(detail)
    })())
}

fn c2_wieland(_: bool) -> Verdict {
    verdict((|| {
        let start = Instant::now();
        let mut total = 0;
        for n in 1..=4 {
            let modulus = 4 * n as u32;
            for parity in [Parity::Odd, Parity::Even] {
                let all = enumerate_fpl(n, parity);
                let mut images = HashSet::new();
                for f in &all {
                    // Construction validates full packing of the image.
                    let g = wieland(f);
                    if g.parity() != parity.flip() {
                        return Err(format!("n={n}: image keeps parity {parity}"));
                    }
                    if link_pattern(&g) != link_pattern(f).rotate(modulus) {
                        return Err(format!(
                            "n={n}: {} not rotated to {}",
                            link_pattern(f),
                            link_pattern(&g)
                        ));
                    }
                    if &wieland_inverse(&g) != f {
                        return Err(format!("n={n}: inverse does not undo the rotation"));
                    }
                    images.insert(g.chosen_edges());
                }
                if images.len() != all.len() {
                    return Err(format!("n={n} {parity}: rotation is not injective"));
                }
                let source = pattern_census(n, parity);
                let target = pattern_census(n, parity.flip());
                for (x, &c) in &source.counts {
                    if target.count(&x.rotate(modulus)) != c {
                        return Err(format!("n={n}: A_{x} = {c} differs from its rotation"));
                    }
                }
                total += all.len();
            }
        }
        within("Wieland scan", start.elapsed(), 10)?;
        Ok(format!(
            "{total} FPLs rotated and inverted, censuses agree, {:.2?}",
            start.elapsed()
        ))
    })())
}

fn c3_tfpl_ground_truth(_: bool) -> Verdict {
    verdict((|| {
        let start = Instant::now();
        let anchors = [("0011", "0101", "0011", 2), ("0011", "0101", "0101", 1)];
        for (s, p, t, want) in anchors {
            let got = t_count(&w(s), &w(p), &w(t)).map_err(|e| e.to_string())?;
            if got != BigInt::from(want) {
                return Err(format!("t({s},{p},{t}) = {got}, expected {want}"));
            }
        }
        let zero = BinaryWord::zeros_then_ones(3, 3);
        for pi in enumerate_dyck(3) {
            for tau in enumerate_dyck(3) {
                let want = if tau == zero {
                    BigInt::one()
                } else {
                    BigInt::from(0)
                };
                let got = t_count(&pi, &pi, &tau).map_err(|e| e.to_string())?;
                if got != want {
                    return Err(format!("t({pi},{pi},{tau}) = {got}, expected {want}"));
                }
            }
        }
        let scans = [
            CheckId::SiInfPi,
            CheckId::SumDeg,
            CheckId::Window,
            CheckId::Vsym,
        ];
        let three = all_pass(&scans, 3..=3)?;
        within("t_table(3) and scans", start.elapsed(), 30)?;
        let four = all_pass(&scans, 4..=4)?;
        Ok(format!(
            "anchors hold; t_table(3) scans {} cases, t_table(4) scans {} cases, {:.2?}",
            cases(&three),
            cases(&four),
            start.elapsed()
        ))
    })())
}

/// A canonically oriented configuration in T(000111, 010101, 001011) as
/// directed edges `(from, to)` in triangle coordinates.
const EMBEDDED_CONFIGURATION: [((i32, i32), (i32, i32)); 36] = [
    ((0, -1), (0, 0)),
    ((0, 0), (1, 0)),
    ((2, 0), (2, -1)),
    ((1, 0), (1, 1)),
    ((3, 0), (2, 0)),
    ((1, 1), (2, 1)),
    ((4, -1), (4, 0)),
    ((3, 1), (3, 0)),
    ((2, 1), (2, 2)),
    ((4, 0), (5, 0)),
    ((4, 1), (3, 1)),
    ((2, 2), (3, 2)),
    ((6, 0), (6, -1)),
    ((5, 0), (6, 0)),
    ((5, 1), (4, 1)),
    ((3, 2), (4, 2)),
    ((6, 1), (5, 1)),
    ((4, 2), (5, 2)),
    ((3, 3), (4, 3)),
    ((8, -1), (8, 0)),
    ((8, 0), (7, 0)),
    ((7, 0), (7, 1)),
    ((6, 2), (6, 1)),
    ((5, 2), (6, 2)),
    ((4, 3), (5, 3)),
    ((7, 1), (8, 1)),
    ((5, 3), (6, 3)),
    ((4, 4), (5, 4)),
    ((10, 0), (10, -1)),
    ((9, 0), (10, 0)),
    ((9, 1), (9, 0)),
    ((8, 1), (9, 1)),
    ((7, 2), (8, 2)),
    ((7, 3), (7, 2)),
    ((6, 3), (7, 3)),
    ((5, 4), (6, 4)),
];

fn c4_oriented(_: bool) -> Verdict {
    verdict((|| {
        let mut checked = 0u64;
        // Every balanced boundary, not only Dyck words.
        for n in 1..=3 {
            let words = enumerate_words(n, n);
            for s in &words {
                for p in &words {
                    for t in &words {
                        for f in enumerate_oriented(s, p, t).map_err(|e| e.to_string())? {
                            let stats = f.n_stats();
                            for i in 0..2 * n - 1 {
                                let prev = if i == 0 { 0 } else { stats[i - 1] };
                                if stats[i] - prev != p.get(i) as i64 - s.get(i) as i64 {
                                    return Err(format!("({s},{p},{t}): N = {stats:?}"));
                                }
                            }
                            checked += 1;
                        }
                    }
                }
            }
        }
        let target: BTreeSet<_> = EMBEDDED_CONFIGURATION.into_iter().collect();
        let found = enumerate_oriented(&w("000111"), &w("010101"), &w("001011"))
            .map_err(|e| e.to_string())?
            .into_iter()
            .find(|f| f.directed_edges().into_iter().collect::<BTreeSet<_>>() == target)
            .ok_or("embedded configuration is not in the oriented stream")?;
        if !found.is_well_oriented() {
            return Err("embedded configuration is not canonically oriented".into());
        }
        let stats = found.n_stats();
        if stats != [0, 1, 1, 1, 0] {
            return Err(format!("embedded configuration has N = {stats:?}"));
        }
        Ok(format!("{checked} oriented TFPLs satisfy the N recurrence; embedded example has N = (0,1,1,1,0)"))
    })())
}

fn c5_lgv(_: bool) -> Verdict {
    verdict((|| {
        let reports = all_pass(&[CheckId::Lgv], 1..=4)?;
        let notes: Vec<_> = reports
            .iter()
            .flat_map(|r| r.notes.iter().map(move |n| format!("n={}: {n}", r.n)))
            .collect();
        let mut detail = format!(
            "{} reverse-shape and corollary instances agree",
            cases(&reports)
        );
        if !notes.is_empty() {
            detail.push_str(&format!(" [{}]", notes.join("; ")));
        }
        Ok(detail)
    })())
}

fn c6_grid(_: bool) -> Verdict {
    verdict((|| {
        let start = Instant::now();
        let mut compared = 0;
        for (n, max_m) in [(2usize, 4usize), (3, 3)] {
            let t = table(n);
            for pi in enumerate_dyck(n) {
                let poly = a_polynomial(&pi, &t).map_err(|e| e.to_string())?;
                let matching: LinkPattern = pi.to_matching().map_err(|e| e.to_string())?;
                for m in 0..=max_m {
                    let direct = a_pi_direct(&matching, m).map_err(|e| e.to_string())?;
                    let value = poly.eval_integer(m as i64);
                    if value != BigInt::from(direct) {
                        return Err(format!("pi={pi} m={m}: polynomial {value}, grid {direct}"));
                    }
                    compared += 1;
                }
            }
        }
        let two = a_polynomial_table(&table(2));
        if two.get(&w("0011")) != Some(&ExactPolynomial::one()) {
            return Err(format!("A_0011 = {:?}", two.get(&w("0011"))));
        }
        if two.get(&w("0101")) != Some(&ExactPolynomial::from_integers([1, 1])) {
            return Err(format!("A_0101 = {:?}", two.get(&w("0101"))));
        }
        within("grid identity", start.elapsed(), 120)?;
        Ok(format!(
            "{compared} (pi, m) values match; A_0011 = 1, A_0101 = m + 1; {:.2?}",
            start.elapsed()
        ))
    })())
}

fn c7_matrix_identities(_: bool) -> Verdict {
    verdict((|| {
        let ids = [
            CheckId::Commute,
            CheckId::CRec,
            CheckId::LinRec,
            CheckId::Leading,
        ];
        let reports = all_pass(&ids, 1..=4)?;
        // CREC compares against the recurrence column by column; spot-check
        // the single-coefficient entry point as well.
        let t = table(4);
        let c = matrix_c(&t).map_err(|e| e.to_string())?;
        for alpha in t.dyck_words() {
            let pi = BinaryWord::alternating(4);
            let direct = c_by_recurrence(alpha, &pi, &t).map_err(|e| e.to_string())?;
            if c.get(alpha, &pi) != Some(&direct) {
                return Err(format!("c[{alpha},{pi}] disagrees with the recurrence"));
            }
        }
        Ok(format!(
            "COMMUTE, CREC, LINREC, LEADING pass at n=1..4 ({} cases)",
            cases(&reports)
        ))
    })())
}

fn c8_conjectures(_: bool) -> Verdict {
    let params = CheckParams::default();
    let mut findings = Vec::new();
    let mut scanned = 0;
    for n in 1..=4 {
        let t = table(n);
        let c = match matrix_c(&t) {
            Ok(c) => c,
            Err(e) => return Verdict::Fail(e.to_string()),
        };
        let top = BinaryWord::alternating(n);
        for alpha in t.dyck_words() {
            scanned += 1;
            if c.get(alpha, &top) != Some(&BigInt::one()) {
                findings.push(format!("c[{alpha},{top}] = {:?}", c.get(alpha, &top)));
            }
        }
        for id in [CheckId::CapConj, CheckId::WielandSum] {
            match run_check_with(id, &t, &params) {
                Ok(r) => {
                    scanned += r.cases;
                    findings.extend(r.counterexamples.iter().map(|x| format!("{id} n={n}: {x}")));
                }
                Err(e) => return Verdict::Fail(e.to_string()),
            }
        }
    }
    if findings.is_empty() {
        Verdict::Pass(format!(
            "c_(alpha,1_n) = 1, CAPCONJ and WIELANDSUM hold at n <= 4 ({scanned} cases)"
        ))
    } else {
        Verdict::Finding(findings.join("; "))
    }
}

fn c9_hook(_: bool) -> Verdict {
    verdict(all_pass(&[CheckId::Hook], 1..=4).map(|r| {
        format!(
            "all shapes inside the staircase of D_4, N = 0..4 ({} cases)",
            cases(&r)
        )
    }))
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    if args.iter().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let slow = args
        .iter()
        .any(|a| a == "--ignored" || a == "--include-ignored")
        || std::env::var("FPLWB_SLOW").is_ok_and(|v| v == "1");
    let criteria: [(&str, Criterion); 9] = [
        ("FPL totals", c1_fpl_totals),
        ("Wieland rotation", c2_wieland),
        ("TFPL ground truth", c3_tfpl_ground_truth),
        ("oriented model", c4_oriented),
        ("LGV determinants", c5_lgv),
        ("grid identity", c6_grid),
        ("matrix identities", c7_matrix_identities),
        ("conjecture scans", c8_conjectures),
        ("hook content", c9_hook),
    ];
    let mut failed = BTreeMap::new();
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(slow)))
            .unwrap_or_else(|_| Verdict::Fail("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let line = match outcome {
            Verdict::Pass(d) => format!("PASS criterion {} ({name}) [{secs:.2}s]: {d}", i + 1),
            Verdict::Finding(d) => {
                format!(
                    "PASS criterion {} ({name}, non-fatal findings) [{secs:.2}s]: {d}",
                    i + 1
                )
            }
            Verdict::Fail(d) => {
                failed.insert(i + 1, name);
                format!("FAIL criterion {} ({name}) [{secs:.2}s]: {d}", i + 1)
            }
        };
        println!("{line}");
    }
    if failed.is_empty() {
        println!("acceptance: 9/9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!(
            "acceptance: {} of 9 criteria failed: {failed:?}",
            failed.len()
        );
        ExitCode::FAILURE
    }
}
