//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact except criterion 11, whose tolerance is the
//! computed tail bound and whose bound must itself stay below
//! `UCHIMURA_MAX_BOUND`.
//!
//! Criterion 8 asks for an identity that is false for `q != 1` (merging
//! `r` equal indices produces `q^{rk}`, not `q^k`). It is reported as
//! FAIL with a witness and listed in `KNOWN_UNATTAINABLE`, so it does not
//! make the binary exit nonzero; any other failure does.

use std::time::Instant;

use num_rational::BigRational;
use num_traits::Zero;

use qharmonic::compositions::{compositions_up_to, theorem1_form, Composition};
use qharmonic::sums::{
    eval_a_recursive, eval_a_strict_recursive, eval_q1_direct, eval_sum, eval_sum_brute,
    eval_sum_upto, SumKind,
};
use qharmonic::verify::{
    check_fulas_specialization, check_identity, check_prodinger_theorem1, check_theorem1,
    check_weak_strict_expansion_corrected, check_weak_strict_expansion_q1, fulas_campaign,
    prodinger_campaign, sweep, uchimura_sides, IdentityId, Params, Report, SweepBounds, Verdict,
};

/// Seed for the sampled criteria (9 and 10).
const SEED: u64 = 20_240_917;
/// Upper limit on the combined tail bound in criterion 11: 10^-9.
const UCHIMURA_MAX_BOUND: (i64, i64) = (1, 1_000_000_000);
/// Criteria that cannot hold as stated; see the module docs.
const KNOWN_UNATTAINABLE: &[u32] = &[8];

type Outcome = Result<String, String>;

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn c(v: &[u32]) -> Composition {
    Composition::from(v)
}

fn all_hold(reports: &[Report]) -> Outcome {
    match reports.iter().find(|r| r.verdict != Verdict::Holds) {
        None => Ok(format!("{} reports hold", reports.len())),
        Some(r) => Err(r.summary()),
    }
}

fn run_check(id: IdentityId, p: Params) -> Result<Report, String> {
    check_identity(id, &p).map_err(|e| format!("{id}: {e}"))
}

fn criterion_1() -> Outcome {
    let comps = compositions_up_to(6);
    if comps.len() != 63 {
        return Err(format!("expected 63 compositions, got {}", comps.len()));
    }
    let b = SweepBounds {
        max_weight: 6,
        max_n: 8,
        ..Default::default()
    };
    let reports = sweep(IdentityId::Theorem1, &b).map_err(|e| e.to_string())?;
    if reports.len() != 63 * 8 {
        return Err(format!("expected 504 reports, got {}", reports.len()));
    }
    all_hold(&reports)
}

fn criterion_2() -> Outcome {
    let mut reports = vec![];
    for s in [c(&[1, 1, 3, 1]), c(&[2, 2])] {
        for n in 1..=6 {
            reports.push(check_theorem1(&s, n).map_err(|e| e.to_string())?);
        }
    }
    let ex1 = theorem1_form(&[3, 1], &[2, 1]).map_err(|e| e.to_string())?;
    if ex1 != (c(&[1, 1, 3, 1]), c(&[3, 1, 2])) {
        return Err(format!("first example pair: {ex1:?}"));
    }
    let ex2 = theorem1_form(&[1, 1], &[1, 2]).map_err(|e| e.to_string())?;
    if ex2 != (c(&[2, 2]), c(&[1, 2, 1])) {
        return Err(format!("second example pair: {ex2:?}"));
    }
    all_hold(&reports).map(|d| d + ", both parameter pairs reproduced")
}

fn criterion_3() -> Outcome {
    let mut reports = vec![];
    for n in 0..=20 {
        reports.push(run_check(IdentityId::George, Params::new().n(n))?);
    }
    for m in 0..=4 {
        for n in 1..=10 {
            reports.push(run_check(IdentityId::Qkarl, Params::new().m(m).n(n))?);
            if m >= 1 {
                reports.push(run_check(IdentityId::QkarlDual, Params::new().m(m).n(n))?);
            }
        }
    }
    all_hold(&reports)
}

fn criterion_4() -> Outcome {
    let mut reports = vec![];
    let mut instances = 0;
    for m in 0..=4usize {
        for n in 1..=10 {
            reports.push(run_check(IdentityId::Karl, Params::new().m(m).n(n))?);
            for (kind, s) in [
                (SumKind::AWeak, Composition::new(vec![m as u32])),
                (SumKind::ZWeak, Composition::repeat(1, m)),
            ] {
                let at_one = eval_sum(kind, &s, n)
                    .eval_at(&q(1, 1))
                    .map_err(|e| e.to_string())?;
                let direct = eval_q1_direct(kind, &s, n);
                if at_one != direct {
                    return Err(format!("{kind} {s} n={n}: {at_one} != {direct}"));
                }
                instances += 1;
            }
        }
    }
    all_hold(&reports).map(|d| format!("{d}, {instances} route pairs agree"))
}

fn criterion_5() -> Outcome {
    let mut reports = vec![];
    for m in 0..=5 {
        for n in 1..=8 {
            reports.push(run_check(IdentityId::An01m, Params::new().m(m).n(n))?);
        }
    }
    all_hold(&reports)
}

fn criterion_6() -> Outcome {
    let mut reports = vec![];
    for m in 0..=5 {
        for n in 0..=10 {
            reports.push(run_check(
                IdentityId::Thm2StrictOnes,
                Params::new().m(m).n(n),
            )?);
        }
    }
    all_hold(&reports)
}

fn criterion_7() -> Outcome {
    let mut args: Vec<Composition> = compositions_up_to(5);
    // Leading zeros exercise the second recurrence.
    args.extend(compositions_up_to(4).iter().map(|s| c(&[0]).concat(s)));
    args.push(c(&[0]));
    let mut count = 0;
    for s in &args {
        let weak = eval_sum_upto(SumKind::AWeak, s, 6);
        let strict = eval_sum_upto(SumKind::AStrict, s, 6);
        for n in 0..=6 {
            let r = eval_a_recursive(s, n).map_err(|e| e.to_string())?;
            let rs = eval_a_strict_recursive(s, n).map_err(|e| e.to_string())?;
            if r != weak[n] || r != eval_sum(SumKind::AWeak, s, n) {
                return Err(format!("A recursion {s} n={n}"));
            }
            if rs != strict[n] || rs != eval_sum(SumKind::AStrict, s, n) {
                return Err(format!("strict A recursion {s} n={n}"));
            }
            count += 2;
        }
    }
    for s in compositions_up_to(4).into_iter().filter(|s| s.len() <= 3) {
        for kind in SumKind::ALL {
            for n in 0..=5 {
                let brute = eval_sum_brute(kind, &s, n).map_err(|e| e.to_string())?;
                if brute != eval_sum(kind, &s, n) {
                    return Err(format!("brute force {kind} {s} n={n}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} comparisons agree"))
}

fn criterion_8() -> Outcome {
    let grid: Vec<Composition> = compositions_up_to(6)
        .into_iter()
        .filter(|s| s.len() <= 4)
        .collect();
    let mut literal = vec![];
    let mut supporting = vec![];
    for s in &grid {
        for n in 0..=6 {
            literal.push(run_check(
                IdentityId::WeakStrictExpansion,
                Params::new().s(s.clone()).n(n),
            )?);
            supporting.push(check_weak_strict_expansion_q1(s, n).map_err(|e| e.to_string())?);
            supporting
                .push(check_weak_strict_expansion_corrected(s, n).map_err(|e| e.to_string())?);
        }
    }
    let support = match all_hold(&supporting) {
        Ok(_) => format!(
            "the q=1 form and the corrected q-expansion hold on all {} instances",
            literal.len()
        ),
        Err(e) => format!("supporting check failed too: {e}"),
    };
    let failing: Vec<&Report> = literal
        .iter()
        .filter(|r| r.verdict != Verdict::Holds)
        .collect();
    match failing.first() {
        None => Ok(format!("{} reports hold", literal.len())),
        Some(first) => Err(format!(
            "{} of {} instances fail as stated, e.g. {}; {}",
            failing.len(),
            literal.len(),
            first.summary(),
            support
        )),
    }
}

fn criterion_9() -> Outcome {
    let mut reports = prodinger_campaign(SEED, 100).map_err(|e| e.to_string())?;
    if reports.len() != 100 {
        return Err(format!("expected 100 trials, got {}", reports.len()));
    }
    for s in [c(&[2]), c(&[1, 1])] {
        for n in 1..=5 {
            reports.push(check_prodinger_theorem1(&s, n).map_err(|e| e.to_string())?);
        }
    }
    all_hold(&reports).map(|d| format!("{d} (seed {SEED})"))
}

fn criterion_10() -> Outcome {
    let mut reports = fulas_campaign(SEED, 25, 5, 5).map_err(|e| e.to_string())?;
    if reports.len() != 25 {
        return Err(format!("expected 25 points, got {}", reports.len()));
    }
    for (n, m, q0) in [
        (3, 2, q(1, 3)),
        (1, 1, q(1, 2)),
        (4, 3, q(2, 5)),
        (5, 5, q(3, 7)),
        (2, 4, q(5, 9)),
    ] {
        reports.push(check_fulas_specialization(n, m, q0).map_err(|e| e.to_string())?);
    }
    all_hold(&reports).map(|d| format!("{d} (seed {SEED})"))
}

fn criterion_11() -> Outcome {
    let (lhs, rhs) = uchimura_sides(&q(1, 2), 40).map_err(|e| e.to_string())?;
    let residual = {
        let d = &lhs.value - &rhs.value;
        if d < BigRational::zero() {
            -d
        } else {
            d
        }
    };
    let combined = &lhs.tail_bound + &rhs.tail_bound;
    let max = q(UCHIMURA_MAX_BOUND.0, UCHIMURA_MAX_BOUND.1);
    let approx = |x: &BigRational| {
        use num_traits::ToPrimitive;
        format!("{:.6e}", x.to_f64().unwrap_or(f64::NAN))
    };
    let detail = format!(
        "residual {} <= combined bound {} < 1e-9",
        approx(&residual),
        approx(&combined)
    );
    if residual > combined {
        return Err(format!("residual exceeds bound: {detail}"));
    }
    if combined >= max {
        return Err(format!("bound too large: {detail}"));
    }
    let report = run_check(
        IdentityId::UchimuraLimit,
        Params::new().q(q(1, 2)).big_n(40),
    )?;
    if report.verdict != Verdict::Holds {
        return Err(report.summary());
    }
    Ok(detail)
}

fn criterion_12() -> Outcome {
    let mut reports = vec![];
    for s in [c(&[2]), c(&[2, 1])] {
        for q0 in [q(1, 3), q(1, 2)] {
            reports.push(run_check(
                IdentityId::QzetaRelation,
                Params::new().s(s.clone()).q(q0).big_n(30),
            )?);
        }
    }
    all_hold(&reports).map(|d| d + ", every N <= 30")
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "duality theorem, weight <= 6, n <= 8", criterion_1),
        (2, "worked examples and their parameter pairs", criterion_2),
        (
            3,
            "finite q-identities for one and m-fold sums",
            criterion_3,
        ),
        (
            4,
            "binomial harmonic identity at q = 1, both routes",
            criterion_4,
        ),
        (5, "A_n[0,{1}^m] [n]^m = 1", criterion_5),
        (
            6,
            "strict sums of ones, including m = 0 and n = 0",
            criterion_6,
        ),
        (
            7,
            "recurrences and brute force against eval_sum",
            criterion_7,
        ),
        (8, "weak to strict expansion over coarsenings", criterion_8),
        (9, "inverse pair equivalence", criterion_9),
        (10, "two-parameter family at rational points", criterion_10),
        (11, "limit identity at q = 1/2, N = 40", criterion_11),
        (12, "q-zeta relation, both routes", criterion_12),
    ];
    let mut unexpected = vec![];
    let mut known = vec![];
    for (num, name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{num:>2}] {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                println!("FAIL [{num:>2}] {name}: {why} ({secs:.1}s)");
                if KNOWN_UNATTAINABLE.contains(&num) {
                    known.push(num);
                } else {
                    unexpected.push(num);
                }
            }
        }
    }
    println!(
        "acceptance: {} passed, {} failed ({} known unattainable)",
        12 - unexpected.len() - known.len(),
        unexpected.len() + known.len(),
        known.len()
    );
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
