//! The inverse pair relations between two sequences and their link to
//! the duality theorem.

use num_rational::BigRational;

use super::sample::{random_ratfun, seeded_rng};
use super::{record, IdentityId, Method, Report, VerifyError};
use crate::compositions::{dual, Composition};
use crate::qpoly::{QBinomialTable, QRatFun};
use crate::sums::{eval_sum, eval_sum_upto, SumKind};

/// Random sequences when no count is given.
pub const DEFAULT_TRIALS: usize = 100;

/// `(-1)^k q^e [n,k]` as a rational function, `e` possibly negative.
fn kernel(table: &mut QBinomialTable, n: usize, k: usize, e: i64) -> QRatFun {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    QRatFun::q_pow(e)
        .mul_poly(&table.get(n as i64, k as i64))
        .scale(&BigRational::from_integer(sign.into()))
}

fn check_len(seq: &[QRatFun], n: usize) -> Result<(), VerifyError> {
    if seq.len() != n + 1 {
        return Err(VerifyError::LengthMismatch {
            expected: n + 1,
            got: seq.len(),
        });
    }
    Ok(())
}

/// The sequence `beta_0..beta_n` for which
/// `sum_{k<=j} beta_k = sum_{k<=j} (-1)^k q^{k(k-1)/2} [j,k] alpha_k`
/// holds for every `j = 0..=n`.
pub fn prodinger_forward(alpha: &[QRatFun], n: usize) -> Result<Vec<QRatFun>, VerifyError> {
    check_len(alpha, n)?;
    let mut table = QBinomialTable::new();
    let mut prev = QRatFun::zero();
    let mut beta = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let total: QRatFun = (0..=j)
            .map(|k| &kernel(&mut table, j, k, (k * k.saturating_sub(1) / 2) as i64) * &alpha[k])
            .sum();
        beta.push(&total - &prev);
        prev = total;
    }
    Ok(beta)
}

/// Both sides of the second relation at `n`:
/// `sum q^{-k} alpha_k` and `sum (-1)^k q^{k(k-1)/2 - kn} [n,k] beta_k`.
pub fn prodinger_pro2_sides(
    alpha: &[QRatFun],
    beta: &[QRatFun],
    n: usize,
) -> Result<(QRatFun, QRatFun), VerifyError> {
    if alpha.len() < n + 1 || beta.len() < n + 1 {
        return Err(VerifyError::LengthMismatch {
            expected: n + 1,
            got: alpha.len().min(beta.len()),
        });
    }
    let mut table = QBinomialTable::new();
    let lhs: QRatFun = (0..=n)
        .map(|k| &QRatFun::q_pow(-(k as i64)) * &alpha[k])
        .sum();
    let rhs: QRatFun = (0..=n)
        .map(|k| {
            let e = (k * k.saturating_sub(1) / 2) as i64 - (k * n) as i64;
            &kernel(&mut table, n, k, e) * &beta[k]
        })
        .sum();
    Ok((lhs, rhs))
}

fn pro2_all(
    r: &mut Report,
    alpha: &[QRatFun],
    beta: &[QRatFun],
    n: usize,
) -> Result<(), VerifyError> {
    for j in 0..=n {
        let (l, rr) = prodinger_pro2_sides(alpha, beta, j)?;
        r.expect_eq(&format!("second relation at n={j}"), &l, &rr);
    }
    Ok(())
}

/// Builds `beta` from `alpha` with the first relation, then checks that
/// the second relation holds exactly at every `j = 0..=n`.
pub fn check_prodinger_equivalence(alpha: &[QRatFun], n: usize) -> Result<Report, VerifyError> {
    let beta = prodinger_forward(alpha, n)?;
    let params = record([("n", n.to_string()), ("sequence", "given".to_string())]);
    let mut r = Report::new(IdentityId::ProdingerPair, params, Method::Symbolic);
    pro2_all(&mut r, alpha, &beta, n)?;
    Ok(r)
}

/// The sequences for which the first relation is an instance of the
/// duality theorem: `alpha` built from `s` (the A-side) and `beta` from
/// `dual(s)` (the Z-side), with `alpha_0 = beta_0 = 0`.
///
/// `alpha_k = -q^{s_1 k}/[k]^{s_1} W_k[s_2, ..]` and
/// `beta_k = q^k/[k]^{t_1} Z_k[t_2, ..]` for `t = dual(s)`.
pub fn theorem1_sequences(
    s: &Composition,
    n: usize,
) -> Result<(Vec<QRatFun>, Vec<QRatFun>), VerifyError> {
    let t = dual(s)?;
    let s1 = s.first().expect("dual succeeded, so s is nonempty") as usize;
    let w_tail = eval_sum_upto(SumKind::WWeak, &s.tail(), n);
    let z_t = eval_sum_upto(SumKind::ZWeak, &t, n);
    let mut alpha = vec![QRatFun::zero()];
    let mut beta = vec![QRatFun::zero()];
    for k in 1..=n {
        let lead = &QRatFun::q_pow((s1 * k) as i64)
            / &QRatFun::from_poly(crate::qpoly::q_integer(k).pow(s1 as u32));
        alpha.push(-(&lead * &w_tail[k]));
        beta.push(&z_t[k] - &z_t[k - 1]);
    }
    Ok((alpha, beta))
}

/// The duality theorem seen through the inverse pair: forward of `alpha`
/// is `beta`, the second relation holds, and after `q -> 1/q` its two
/// sides become `Z_n[s]` and `A_n[dual(s)]` up to the factor `-q^{-|s|}`.
pub fn check_prodinger_theorem1(s: &Composition, n: usize) -> Result<Report, VerifyError> {
    let (alpha, beta) = theorem1_sequences(s, n)?;
    let params = record([("s", s.to_string()), ("n", n.to_string())]);
    let mut r = Report::new(IdentityId::ProdingerPair, params, Method::Symbolic);
    let forward = prodinger_forward(&alpha, n)?;
    for k in 0..=n {
        r.expect_eq(
            &format!("forward(alpha)_{k} = beta_{k}"),
            &forward[k],
            &beta[k],
        );
    }
    pro2_all(&mut r, &alpha, &beta, n)?;
    let (l, rr) = prodinger_pro2_sides(&alpha, &beta, n)?;
    let factor = -QRatFun::q_pow(s.weight() as i64);
    let t = dual(s)?;
    r.expect_eq(
        "-q^|s| lhs(1/q) = Z_n[s]",
        &(&factor * &l.substitute_reciprocal()),
        &eval_sum(SumKind::ZWeak, s, n),
    );
    r.expect_eq(
        "-q^|s| rhs(1/q) = A_n[dual(s)]",
        &(&factor * &rr.substitute_reciprocal()),
        &eval_sum(SumKind::AWeak, &t, n),
    );
    Ok(r)
}

/// `trials` random sequences of length `n + 1 <= 6`, each pushed through
/// the first relation and checked against the second.
pub fn prodinger_campaign(seed: u64, trials: usize) -> Result<Vec<Report>, VerifyError> {
    use rand::Rng;
    let mut rng = seeded_rng(seed);
    let mut out = Vec::with_capacity(trials);
    for trial in 0..trials {
        let n = rng.gen_range(1..=5usize);
        let alpha: Vec<QRatFun> = (0..=n).map(|_| random_ratfun(&mut rng)).collect();
        let mut r = check_prodinger_equivalence(&alpha, n)?;
        r.params
            .insert("sequence".into(), format!("random #{trial}"));
        r.method = Method::Sampled;
        r.seed = Some(seed);
        out.push(r);
    }
    Ok(out)
}
