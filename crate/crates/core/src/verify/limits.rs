//! Checks of `n -> infinity` limits at rational points `0 < q0 < 1`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::identities::RatDisplay;
use super::{rat_str, record, IdentityId, Method, Params, Report, Verdict, VerifyError};
use crate::compositions::{dual, Composition};
use crate::sums::{qzeta_truncated, truncated_limit, SumError, SumKind, TruncationResult};

pub const DEFAULT_Q: (i64, i64) = (1, 2);
pub const DEFAULT_N: usize = 40;

pub(super) fn q_or_default(p: &Params) -> BigRational {
    p.q.clone()
        .unwrap_or_else(|| BigRational::new(DEFAULT_Q.0.into(), DEFAULT_Q.1.into()))
}

pub(super) fn big_n_or_default(p: &Params) -> usize {
    p.big_n.unwrap_or(DEFAULT_N)
}

fn truncation_params(
    mut params: std::collections::BTreeMap<String, String>,
    q0: &BigRational,
    big_n: usize,
) -> std::collections::BTreeMap<String, String> {
    params.insert("q".into(), rat_str(q0));
    params.insert("N".into(), big_n.to_string());
    params
}

/// `holds` when `|lhs - rhs|` is within the sum of both tail bounds,
/// `inconclusive` otherwise.
fn truncated_report(
    id: IdentityId,
    params: std::collections::BTreeMap<String, String>,
    lhs: &TruncationResult,
    rhs: &TruncationResult,
) -> Report {
    let mut r = Report::new(id, params, Method::Truncated);
    let residual = (&lhs.value - &rhs.value).abs();
    let bound = &lhs.tail_bound + &rhs.tail_bound;
    r.verdict = if residual <= bound {
        Verdict::Holds
    } else {
        Verdict::Inconclusive
    };
    r.residual = Some(rat_str(&residual));
    r.tail_bound = Some(rat_str(&bound));
    r
}

/// Inconclusive report for truncations too short to bound the tail.
fn no_bound(id: IdentityId, params: std::collections::BTreeMap<String, String>) -> Report {
    let mut r = Report::new(id, params, Method::Truncated);
    r.verdict = Verdict::Inconclusive;
    r.tail_bound = Some("unavailable".into());
    r
}

fn both_sides(
    lhs: impl FnOnce() -> Result<TruncationResult, SumError>,
    rhs: impl FnOnce() -> Result<TruncationResult, SumError>,
) -> Result<Option<(TruncationResult, TruncationResult)>, VerifyError> {
    match (lhs(), rhs()) {
        (Ok(l), Ok(r)) => Ok(Some((l, r))),
        (Err(SumError::TailBoundUnavailable), _) | (_, Err(SumError::TailBoundUnavailable)) => {
            Ok(None)
        }
        (Err(e), _) | (_, Err(e)) => Err(e.into()),
    }
}

pub(super) fn check_cor_limit_ninf(
    s: &Composition,
    q0: &BigRational,
    big_n: usize,
) -> Result<Report, VerifyError> {
    let d = dual(s)?;
    let params = truncation_params(record([("s", s.to_string())]), q0, big_n);
    Ok(
        match both_sides(
            || truncated_limit(SumKind::ZWeak, s, q0, big_n),
            || truncated_limit(SumKind::AWeak, &d, q0, big_n),
        )? {
            Some((z, a)) => truncated_report(IdentityId::CorLimitNinf, params, &z, &a),
            None => no_bound(IdentityId::CorLimitNinf, params),
        },
    )
}

pub(super) fn check_cor_strict_ninf(
    m: usize,
    q0: &BigRational,
    big_n: usize,
) -> Result<Report, VerifyError> {
    if m == 0 {
        return Err(VerifyError::BadParams {
            id: IdentityId::CorStrictNinf,
            msg: "m must be positive".into(),
        });
    }
    let ones = Composition::repeat(1, m);
    let params = truncation_params(record([("m", m.to_string())]), q0, big_n);
    let sides = both_sides(
        || truncated_limit(SumKind::ZStrict, &ones, q0, big_n),
        || truncated_limit(SumKind::AStrict, &ones, q0, big_n),
    )?;
    Ok(match sides {
        Some((mut z, a)) => {
            if m % 2 == 1 {
                z.value = -z.value;
            }
            truncated_report(IdentityId::CorStrictNinf, params, &z, &a)
        }
        None => no_bound(IdentityId::CorStrictNinf, params),
    })
}

/// Both sides of the limit identity truncated to `k <= N`, with tail
/// bounds: the alternating series on the left and `sum q^k/(1-q^k)` on
/// the right.
pub fn uchimura_sides(
    q0: &BigRational,
    big_n: usize,
) -> Result<(TruncationResult, TruncationResult), VerifyError> {
    let one = BigRational::one();
    if !(q0.is_positive() && *q0 < one) {
        return Err(SumError::QOutOfRange.into());
    }
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    let mut qfact = one.clone(); // (q0; q0)_{k-1}
    for k in 1..=big_n {
        let qk = q0.pow(k as i32);
        let one_minus = &one - &qk;
        let term = q0.pow((k * (k + 1) / 2) as i32) / (&qfact * &one_minus * &one_minus);
        if k % 2 == 1 {
            lhs += term;
        } else {
            lhs -= term;
        }
        rhs += &qk / &one_minus;
        qfact *= one_minus;
    }
    // qfact is now (q0;q0)_N; for k > N, (q0;q0)_k >= (q0;q0)_N (1 - q0^{N+1}/(1-q0)).
    let q_next = q0.pow((big_n + 1) as i32);
    let lower = &qfact * (&one - &q_next / (&one - q0));
    if !lower.is_positive() {
        return Err(SumError::TailBoundUnavailable.into());
    }
    // |term_k| = q0^{k(k+1)/2} / ((q0;q0)_k (1-q0^k)), consecutive ratio of
    // the numerators at most q0^{N+2}.
    let k1 = big_n + 1;
    let lhs_tail = q0.pow((k1 * (k1 + 1) / 2) as i32)
        / (lower * (&one - &q_next) * (&one - q0.pow((big_n + 2) as i32)));
    let rhs_tail = &q_next / ((&one - q0) * (&one - &q_next));
    Ok((
        TruncationResult {
            value: lhs,
            terms_used: big_n,
            tail_bound: lhs_tail,
        },
        TruncationResult {
            value: rhs,
            terms_used: big_n,
            tail_bound: rhs_tail,
        },
    ))
}

pub(super) fn check_uchimura(q0: &BigRational, big_n: usize) -> Result<Report, VerifyError> {
    let params = truncation_params(Default::default(), q0, big_n);
    match uchimura_sides(q0, big_n) {
        Ok((l, r)) => Ok(truncated_report(IdentityId::UchimuraLimit, params, &l, &r)),
        Err(VerifyError::Sum(SumError::TailBoundUnavailable)) => {
            Ok(no_bound(IdentityId::UchimuraLimit, params))
        }
        Err(e) => Err(e),
    }
}

/// The defining series and the strict-sum route agree on every partial
/// sum `k_1 <= N'` for `N' = 1..=N`.
pub(super) fn check_qzeta_relation(
    s: &Composition,
    q0: &BigRational,
    big_n: usize,
) -> Result<Report, VerifyError> {
    let params = truncation_params(record([("s", s.to_string())]), q0, big_n);
    let mut r = Report::new(IdentityId::QzetaRelation, params, Method::Truncated);
    let mut last_bound = None;
    for cut in 1..=big_n {
        let z = qzeta_truncated(s, q0, cut)?;
        r.expect_eq(
            &format!("partial sums at N={cut}"),
            &RatDisplay(z.series.value.clone()),
            &RatDisplay(z.via_strict.clone()),
        );
        last_bound = Some(z.series.tail_bound);
    }
    if r.holds() {
        r.residual = Some("0".into());
    }
    r.tail_bound = last_bound.map(|b| rat_str(&b));
    Ok(r)
}
