//! Finite-`n` identities, compared exactly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{rat_str, record, IdentityId, Method, Report, VerifyError};
use crate::compositions::{coarsenings, dual, Composition};
use crate::qpoly::{
    one_minus_q_pow, q_binomial, q_integer, q_shifted_power, QBinomialMethod, QPoly, QRatFun,
};
use crate::sums::{eval_q1, eval_sum, eval_sum_upto, SumKind};

/// `(-1)^(k+1)`.
fn alt(k: usize) -> i64 {
    if k % 2 == 1 {
        1
    } else {
        -1
    }
}

fn minus_one_pow(m: usize) -> QRatFun {
    QRatFun::from_int(if m.is_multiple_of(2) { 1 } else { -1 })
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn qbinom(n: usize, k: usize) -> QPoly {
    q_binomial(n as i64, k as i64, QBinomialMethod::Product)
}

/// Report for a single symbolic comparison `lhs = rhs`.
pub fn compare_symbolic(
    id: IdentityId,
    params: BTreeMap<String, String>,
    lhs: &QRatFun,
    rhs: &QRatFun,
) -> Report {
    let mut r = Report::new(id, params, Method::Symbolic);
    r.expect_eq("lhs = rhs", lhs, rhs);
    r
}

/// Compares `Z_n[s]` with `A_n[t]` for arbitrary `s` and `t`. With
/// `t = dual(s)` this is one half of the duality theorem; any other `t`
/// is a negative control.
pub fn check_pair(s: &Composition, t: &Composition, n: usize) -> Result<Report, VerifyError> {
    s.require_positive()?;
    let params = record([
        ("s", s.to_string()),
        ("t", t.to_string()),
        ("n", n.to_string()),
    ]);
    let mut r = Report::new(IdentityId::Theorem1, params, Method::Symbolic);
    r.expect_eq(
        "Z_n[s] = A_n[t]",
        &eval_sum(SumKind::ZWeak, s, n),
        &eval_sum(SumKind::AWeak, t, n),
    );
    Ok(r)
}

/// `Z_n[s] = A_n[s*]` together with the reflected `A_n[s] = Z_n[s*]`.
pub fn check_theorem1(s: &Composition, n: usize) -> Result<Report, VerifyError> {
    let d = dual(s)?;
    let params = record([("s", s.to_string()), ("n", n.to_string())]);
    let mut r = Report::new(IdentityId::Theorem1, params, Method::Symbolic);
    r.expect_eq(
        "Z_n[s] = A_n[dual(s)]",
        &eval_sum(SumKind::ZWeak, s, n),
        &eval_sum(SumKind::AWeak, &d, n),
    );
    r.expect_eq(
        "A_n[s] = Z_n[dual(s)]",
        &eval_sum(SumKind::AWeak, s, n),
        &eval_sum(SumKind::ZWeak, &d, n),
    );
    Ok(r)
}

/// [`check_theorem1`] for every `n = 1..=n_max`, sharing the evaluations.
pub fn check_theorem1_upto(s: &Composition, n_max: usize) -> Result<Vec<Report>, VerifyError> {
    let d = dual(s)?;
    let zs = eval_sum_upto(SumKind::ZWeak, s, n_max);
    let ad = eval_sum_upto(SumKind::AWeak, &d, n_max);
    let as_ = eval_sum_upto(SumKind::AWeak, s, n_max);
    let zd = eval_sum_upto(SumKind::ZWeak, &d, n_max);
    Ok((1..=n_max)
        .map(|n| {
            let params = record([("s", s.to_string()), ("n", n.to_string())]);
            let mut r = Report::new(IdentityId::Theorem1, params, Method::Symbolic);
            r.expect_eq("Z_n[s] = A_n[dual(s)]", &zs[n], &ad[n]);
            r.expect_eq("A_n[s] = Z_n[dual(s)]", &as_[n], &zd[n]);
            r
        })
        .collect())
}

/// `sum_{n >= k_1 >= ... >= k_m >= 1} prod f(k_j)`, by plain recursion on
/// the outermost index.
fn nested_weak(m: usize, n: usize, f: &dyn Fn(usize) -> QRatFun) -> QRatFun {
    // row[k] = sum over k >= k_1 >= ... >= k_j >= 1, built up one level at a time.
    let mut row: Vec<QRatFun> = vec![QRatFun::one(); n + 1];
    for _ in 0..m {
        let mut next = vec![QRatFun::zero(); n + 1];
        for k in 1..=n {
            next[k] = &next[k - 1] + &(&f(k) * &row[k]);
        }
        row = next;
    }
    row[n].clone()
}

pub(super) fn check_qkarl(m: usize, n: usize) -> Result<Report, VerifyError> {
    if n == 0 {
        return Err(VerifyError::BadParams {
            id: IdentityId::Qkarl,
            msg: "n must be positive".into(),
        });
    }
    let params = record([("m", m.to_string()), ("n", n.to_string())]);
    let mut r = Report::new(IdentityId::Qkarl, params, Method::Symbolic);
    let lhs: QRatFun = (1..=n)
        .map(|k| {
            let e = (k * (k + 1) / 2) as i64 + (m as i64 - 1) * k as i64;
            let num = QRatFun::q_pow(e)
                .mul_poly(&qbinom(n, k))
                .scale(&int(alt(k)));
            &num / &QRatFun::from_poly(one_minus_q_pow(k).pow(m as u32))
        })
        .sum();
    let f = |k: usize| &QRatFun::q_pow(k as i64) / &QRatFun::from_poly(one_minus_q_pow(k));
    let rhs = nested_weak(m, n, &f);
    r.expect_eq("binomial sum = nested sum", &lhs, &rhs);
    let ones = Composition::repeat(1, m);
    let z = eval_sum(SumKind::ZWeak, &ones, n);
    let a = eval_sum(SumKind::AWeak, &Composition::new(vec![m as u32]), n);
    r.expect_eq("Z_n[{1}^m] = A_n[m]", &z, &a);
    let scaled = rhs.mul_poly(&one_minus_q_pow(1).pow(m as u32));
    r.expect_eq("Z_n[{1}^m] = (1-q)^m nested sum", &z, &scaled);
    Ok(r)
}

pub(super) fn check_qkarl_dual(m: usize, n: usize) -> Result<Report, VerifyError> {
    if m == 0 {
        return Err(VerifyError::BadParams {
            id: IdentityId::QkarlDual,
            msg: "m must be positive".into(),
        });
    }
    let params = record([("m", m.to_string()), ("n", n.to_string())]);
    let mut r = Report::new(IdentityId::QkarlDual, params, Method::Symbolic);
    let single = Composition::new(vec![m as u32]);
    let z = eval_sum(SumKind::ZWeak, &single, n);
    let literal: QRatFun = (1..=n)
        .map(|k| &QRatFun::q_pow(k as i64) / &QRatFun::from_poly(q_integer(k).pow(m as u32)))
        .sum();
    r.expect_eq("Z_n[m] = sum q^k/[k]^m", &z, &literal);
    r.expect_eq(
        "Z_n[m] = A_n[{1}^m]",
        &z,
        &eval_sum(SumKind::AWeak, &Composition::repeat(1, m), n),
    );
    Ok(r)
}

pub(super) fn check_george(n: usize) -> Result<Report, VerifyError> {
    let params = record([("n", n.to_string())]);
    let mut r = Report::new(IdentityId::George, params, Method::Symbolic);
    let lhs: QRatFun = (1..=n)
        .map(|k| {
            let num = QRatFun::q_pow((k * (k + 1) / 2) as i64)
                .mul_poly(&qbinom(n, k))
                .scale(&int(alt(k)));
            &num / &QRatFun::from_poly(one_minus_q_pow(k))
        })
        .sum();
    let rhs: QRatFun = (1..=n)
        .map(|k| &QRatFun::q_pow(k as i64) / &QRatFun::from_poly(one_minus_q_pow(k)))
        .sum();
    r.expect_eq("lhs = rhs", &lhs, &rhs);
    let z1 = eval_sum(SumKind::ZWeak, &Composition::new(vec![1]), n);
    r.expect_eq(
        "Z_n[1] = (1-q) rhs",
        &z1,
        &rhs.mul_poly(&one_minus_q_pow(1)),
    );
    Ok(r)
}

pub(super) fn check_karl(m: usize, n: usize) -> Result<Report, VerifyError> {
    if n == 0 {
        return Err(VerifyError::BadParams {
            id: IdentityId::Karl,
            msg: "n must be positive".into(),
        });
    }
    let params = record([("m", m.to_string()), ("n", n.to_string())]);
    let mut r = Report::new(IdentityId::Karl, params, Method::Symbolic);
    let lhs = (1..=n).fold(BigRational::zero(), |acc, k| {
        let c = num_integer::binomial(BigInt::from(n), BigInt::from(k));
        acc + BigRational::new(c * alt(k), BigInt::from(k).pow(m as u32))
    });
    // row[k] = sum over k >= k_1 >= ... >= k_j >= 1 of 1/(k_1 ... k_j).
    let mut row = vec![BigRational::one(); n + 1];
    for _ in 0..m {
        let mut next = vec![BigRational::zero(); n + 1];
        for k in 1..=n {
            next[k] = &next[k - 1] + &row[k] / int(k as i64);
        }
        row = next;
    }
    let rhs = row[n].clone();
    let rat = |x: &BigRational| RatDisplay(x.clone());
    r.expect_eq("lhs = rhs", &rat(&lhs), &rat(&rhs));
    let a = eval_q1(SumKind::AWeak, &Composition::new(vec![m as u32]), n)?;
    let z = eval_q1(SumKind::ZWeak, &Composition::repeat(1, m), n)?;
    r.expect_eq("A_n(m) at q=1 = lhs", &rat(&a), &rat(&lhs));
    r.expect_eq("Z_n({1}^m) at q=1 = rhs", &rat(&z), &rat(&rhs));
    Ok(r)
}

/// A rational printed as `p/r`.
#[derive(PartialEq)]
pub(super) struct RatDisplay(pub BigRational);

impl std::fmt::Display for RatDisplay {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&rat_str(&self.0))
    }
}

pub(super) fn check_an01m(m: usize, n: usize) -> Result<Report, VerifyError> {
    if n == 0 {
        return Err(VerifyError::BadParams {
            id: IdentityId::An01m,
            msg: "n must be positive".into(),
        });
    }
    let params = record([("m", m.to_string()), ("n", n.to_string())]);
    let mut r = Report::new(IdentityId::An01m, params, Method::Symbolic);
    let s = Composition::new(vec![0]).concat(&Composition::repeat(1, m));
    let lhs = eval_sum(SumKind::AWeak, &s, n).mul_poly(&q_integer(n).pow(m as u32));
    r.expect_eq("A_n[0,{1}^m] [n]^m = 1", &lhs, &QRatFun::one());
    Ok(r)
}

pub(super) fn check_lemma_qsum(k: usize, n: usize) -> Result<Report, VerifyError> {
    if k == 0 {
        return Err(VerifyError::BadParams {
            id: IdentityId::LemmaQsum,
            msg: "k must be positive".into(),
        });
    }
    let params = record([("k", k.to_string()), ("n", n.to_string())]);
    let mut r = Report::new(IdentityId::LemmaQsum, params, Method::Symbolic);
    let lhs = (k..=n).fold(QPoly::zero(), |acc, j| {
        &acc + &q_binomial(j as i64 - 1, k as i64 - 1, QBinomialMethod::PascalFirst).shift(j)
    });
    let rhs = qbinom(n, k).shift(k);
    r.expect_eq("lhs = rhs", &lhs, &rhs);
    Ok(r)
}

/// Points used when no `x, y` is given.
fn qbinom_points() -> Vec<(BigRational, BigRational)> {
    let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    vec![
        (q(1, 1), q(-1, 1)),
        (q(1, 1), q(1, 1)),
        (q(2, 1), q(-3, 1)),
        (q(-1, 2), q(5, 3)),
        (q(3, 7), q(0, 1)),
        (q(0, 1), q(2, 1)),
    ]
}

pub(super) fn check_qbinom_thm(
    n: usize,
    xy: Option<(BigRational, BigRational)>,
) -> Result<Report, VerifyError> {
    let points = match &xy {
        Some(p) => vec![p.clone()],
        None => qbinom_points(),
    };
    let listed: Vec<String> = points
        .iter()
        .map(|(x, y)| format!("({};{})", rat_str(x), rat_str(y)))
        .collect();
    let params = record([("n", n.to_string()), ("x;y", listed.join(" "))]);
    let mut r = Report::new(IdentityId::QbinomThm, params, Method::Symbolic);
    for (x, y) in &points {
        let lhs = q_shifted_power(x, y, n);
        let rhs = (0..=n).fold(QPoly::zero(), |acc, m| {
            let c = num_traits::pow(x.clone(), n - m) * num_traits::pow(y.clone(), m);
            &acc + &qbinom(n, m).shift(m * m.saturating_sub(1) / 2).scale(&c)
        });
        r.expect_eq(&format!("x={} y={}", rat_str(x), rat_str(y)), &lhs, &rhs);
    }
    Ok(r)
}

pub(super) fn check_thm2_strict_ones(m: usize, n: usize) -> Result<Report, VerifyError> {
    let params = record([("m", m.to_string()), ("n", n.to_string())]);
    let mut r = Report::new(IdentityId::Thm2StrictOnes, params, Method::Symbolic);
    let ones = Composition::repeat(1, m);
    let z = &minus_one_pow(m) * &eval_sum(SumKind::ZStrict, &ones, n);
    r.expect_eq(
        "(-1)^m Z>_n[{1}^m] = A>_n[{1}^m]",
        &z,
        &eval_sum(SumKind::AStrict, &ones, n),
    );
    Ok(r)
}

pub(super) fn check_cor_strict_q1(m: usize, n: usize) -> Result<Report, VerifyError> {
    let params = record([("m", m.to_string()), ("n", n.to_string())]);
    let mut r = Report::new(IdentityId::CorStrictQ1, params, Method::Symbolic);
    let ones = Composition::repeat(1, m);
    let sign = int(if m.is_multiple_of(2) { 1 } else { -1 });
    let z = eval_q1(SumKind::ZStrict, &ones, n)? * sign;
    let a = eval_q1(SumKind::AStrict, &ones, n)?;
    r.expect_eq("(-1)^m Z>_n = A>_n at q=1", &RatDisplay(z), &RatDisplay(a));
    Ok(r)
}

pub(super) fn check_cor_limit_q1(s: &Composition, n: usize) -> Result<Report, VerifyError> {
    let d = dual(s)?;
    let params = record([("s", s.to_string()), ("n", n.to_string())]);
    let mut r = Report::new(IdentityId::CorLimitQ1, params, Method::Symbolic);
    let z = eval_q1(SumKind::ZWeak, s, n)?;
    let a = eval_q1(SumKind::AWeak, &d, n)?;
    r.expect_eq(
        "Z_n(s) = A_n(dual(s)) at q=1",
        &RatDisplay(z),
        &RatDisplay(a),
    );
    Ok(r)
}

pub(super) fn check_duality_ab(a: u32, b: u32, n: usize) -> Result<Report, VerifyError> {
    if a == 0 || b == 0 {
        return Err(VerifyError::BadParams {
            id: IdentityId::DualityAb,
            msg: "a and b must be positive".into(),
        });
    }
    let params = record([
        ("a", a.to_string()),
        ("b", b.to_string()),
        ("n", n.to_string()),
    ]);
    let mut r = Report::new(IdentityId::DualityAb, params, Method::Symbolic);
    let left = Composition::repeat(1, a as usize - 1).concat(&Composition::new(vec![b]));
    let right = Composition::new(vec![a]).concat(&Composition::repeat(1, b as usize - 1));
    r.expect_eq("dual({1}^(a-1),b) = a,{1}^(b-1)", &dual(&left)?, &right);
    r.expect_eq(
        "Z_n[{1}^(a-1),b] = A_n[a,{1}^(b-1)]",
        &eval_sum(SumKind::ZWeak, &left, n),
        &eval_sum(SumKind::AWeak, &right, n),
    );
    Ok(r)
}

/// The expansion exactly as stated: commas of `s` replaced by plus signs
/// in every possible way. Merging `r` equal indices multiplies `r` factors
/// `q^k`, so for `q != 1` the diagonal terms carry `q^{rk}` rather than
/// `q^k` and the statement fails once `s` has two or more entries.
pub(super) fn check_weak_strict_expansion(
    s: &Composition,
    n: usize,
) -> Result<Report, VerifyError> {
    let params = record([("s", s.to_string()), ("n", n.to_string())]);
    let mut r = Report::new(IdentityId::WeakStrictExpansion, params, Method::Symbolic);
    let rhs: QRatFun = coarsenings(s)?
        .iter()
        .map(|t| eval_sum(SumKind::ZStrict, t, n))
        .sum();
    r.expect_eq(
        "Z_n[s] = sum Z>_n[t]",
        &eval_sum(SumKind::ZWeak, s, n),
        &rhs,
    );
    Ok(r)
}

/// The same expansion after `q -> 1`, where it does hold.
pub fn check_weak_strict_expansion_q1(s: &Composition, n: usize) -> Result<Report, VerifyError> {
    let params = record([
        ("s", s.to_string()),
        ("n", n.to_string()),
        ("form", "q=1".to_string()),
    ]);
    let mut r = Report::new(IdentityId::WeakStrictExpansion, params, Method::Symbolic);
    let mut rhs = BigRational::zero();
    for t in coarsenings(s)? {
        rhs += eval_q1(SumKind::ZStrict, &t, n)?;
    }
    let lhs = eval_q1(SumKind::ZWeak, s, n)?;
    r.expect_eq(
        "Z_n(s) = sum Z>_n(t) at q=1",
        &RatDisplay(lhs),
        &RatDisplay(rhs),
    );
    Ok(r)
}

/// Blocks of consecutive entries, one per coarsening, in the same order
/// as [`coarsenings`]: bit `j` of the mask (most significant first) set
/// means comma `j` is kept.
fn blocks_for_mask(s: &[u32], mask: usize) -> Vec<Vec<u32>> {
    let commas = s.len() - 1;
    let mut blocks = vec![vec![s[0]]];
    for j in 0..commas {
        let keep = mask >> (commas - 1 - j) & 1 == 1;
        if keep {
            blocks.push(vec![s[j + 1]]);
        } else {
            blocks.last_mut().unwrap().push(s[j + 1]);
        }
    }
    blocks
}

/// The weak sum rewritten exactly in strict sums. A block of `r` merged
/// entries with sum `sigma` contributes `q^{rk}/[k]^sigma`, and
/// `q^{(r-1)k} = (1 - (1-q)[k])^{r-1}` turns this into
/// `sum_i C(r-1,i) (q-1)^i q^k/[k]^{sigma-i}`.
pub fn strict_expansion_corrected(s: &Composition, n: usize) -> Result<QRatFun, VerifyError> {
    s.require_positive()?;
    if s.is_empty() {
        return Ok(eval_sum(SumKind::ZWeak, s, n));
    }
    let entries = s.entries();
    let q_minus_one = QPoly::from_int_coeffs(&[-1, 1]);
    let mut total = QRatFun::zero();
    for mask in 0..1usize << (entries.len() - 1) {
        // Each block expands to (exponent, coefficient) options.
        let mut partial: Vec<(Vec<u32>, QPoly)> = vec![(vec![], QPoly::one())];
        for block in blocks_for_mask(entries, mask) {
            let r = block.len();
            let sigma: u32 = block.iter().sum();
            let mut next = Vec::new();
            for (args, coeff) in &partial {
                for i in 0..r {
                    let c = num_integer::binomial(BigInt::from(r - 1), BigInt::from(i));
                    let term = q_minus_one
                        .pow(i as u32)
                        .scale(&BigRational::from_integer(c));
                    let mut a = args.clone();
                    a.push(sigma - i as u32);
                    next.push((a, coeff * &term));
                }
            }
            partial = next;
        }
        for (args, coeff) in partial {
            total =
                &total + &eval_sum(SumKind::ZStrict, &Composition::new(args), n).mul_poly(&coeff);
        }
    }
    Ok(total)
}

/// `Z_n[s]` against [`strict_expansion_corrected`].
pub fn check_weak_strict_expansion_corrected(
    s: &Composition,
    n: usize,
) -> Result<Report, VerifyError> {
    let params = record([
        ("s", s.to_string()),
        ("n", n.to_string()),
        ("form", "corrected".to_string()),
    ]);
    let mut r = Report::new(IdentityId::WeakStrictExpansion, params, Method::Symbolic);
    r.expect_eq(
        "Z_n[s] = corrected strict expansion",
        &eval_sum(SumKind::ZWeak, s, n),
        &strict_expansion_corrected(s, n)?,
    );
    Ok(r)
}
