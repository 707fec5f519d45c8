//! Exact evaluation of the finite multiple harmonic q-series.
//!
//! For an argument list `s = (s_1, ..., s_m)` the sums run over
//! `n >= k_1 >= ... >= k_m >= 1` (weak kinds) or `n >= k_1 > ... > k_m >= 1`
//! (strict kinds):
//!
//! | kind | outer factor (index `k_1`)                          | factor per index `k_j`        |
//! |------|-----------------------------------------------------|-------------------------------|
//! | `Zw` | 1                                                   | `q^{k} / [k]^{s_j}`           |
//! | `Aw` | `(-1)^{k+1} q^{k(k+1)/2} [n, k]`                    | `q^{(s_j-1)k} / [k]^{s_j}`    |
//! | `Ww` | 1                                                   | `q^{(s_j-1)k} / [k]^{s_j}`    |
//! | `Zs` | 1                                                   | `q^{k} / [k]^{s_j}`           |
//! | `As` | `(-1)^{k} q^{k(k+1)/2} [n, k]`                      | `q^{(s_j-1)k} / [k]^{s_j}`    |
//!
//! Conventions: with `m >= 1` every sum vanishes at `n = 0`; the empty
//! argument list gives 1 for `n >= 1` (weak) or for every `n >= 0` (strict).
//! The weak empty sum at `n = 0` is taken to be 0.
//!
//! [`eval_sum`] evaluates the nesting as a chain of prefix sums in
//! `O(m n)` rational-function operations; [`eval_sum_brute`] enumerates all
//! index tuples and is kept as an independent oracle.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::compositions::Composition;
use crate::qpoly::{
    one_minus_q_pow, q_binomial, q_integer, QBinomialMethod, QBinomialTable, QPoly, QPolyError,
    QRatFun,
};

/// Index tuples the brute-force oracle is willing to enumerate.
pub const BRUTE_FORCE_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SumError {
    #[error("oracle too large: {0} index tuples exceed the limit")]
    OracleTooLarge(u128),
    #[error("invalid argument shape for the recurrence: {0}")]
    InvalidShape(String),
    #[error("q must lie strictly between 0 and 1")]
    QOutOfRange,
    #[error("divergent: the first argument must be at least 2")]
    Divergent,
    #[error("argument list must be nonempty with entries >= 1")]
    NeedPositiveArguments,
    #[error("truncation point too small for a tail bound; increase N")]
    TailBoundUnavailable,
    #[error("the two q->1 routes disagree for {kind} {s} at n={n}: {symbolic} vs {direct}")]
    RouteDisagreement {
        kind: SumKind,
        s: Composition,
        n: usize,
        symbolic: String,
        direct: String,
    },
    #[error(transparent)]
    Poly(#[from] QPolyError),
}

/// Which nested sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SumKind {
    ZWeak,
    AWeak,
    WWeak,
    ZStrict,
    AStrict,
}

impl SumKind {
    pub const ALL: [SumKind; 5] = [
        SumKind::ZWeak,
        SumKind::AWeak,
        SumKind::WWeak,
        SumKind::ZStrict,
        SumKind::AStrict,
    ];

    pub fn is_strict(self) -> bool {
        matches!(self, SumKind::ZStrict | SumKind::AStrict)
    }

    pub fn is_a(self) -> bool {
        matches!(self, SumKind::AWeak | SumKind::AStrict)
    }

    fn z_factor(self) -> bool {
        matches!(self, SumKind::ZWeak | SumKind::ZStrict)
    }

    pub fn tag(self) -> &'static str {
        match self {
            SumKind::ZWeak => "Zw",
            SumKind::AWeak => "Aw",
            SumKind::WWeak => "Ww",
            SumKind::ZStrict => "Zs",
            SumKind::AStrict => "As",
        }
    }
}

impl fmt::Display for SumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SumKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SumKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| format!("unknown sum kind {s:?} (expected Zw, Aw, Ww, Zs or As)"))
    }
}

/// Exact partial sum of a convergent series with a rigorous bound on the
/// omitted tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationResult {
    pub value: BigRational,
    pub terms_used: usize,
    pub tail_bound: BigRational,
}

/// Minimal arithmetic the nested-sum chain needs.
trait ChainValue: Clone {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl ChainValue for QRatFun {
    fn zero() -> Self {
        QRatFun::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl ChainValue for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// `G_1(k)` for `k = 1..=n`, where `G_m(k) = f(m, k)` and
/// `G_j(k) = f(j, k) * sum_{k' <= k} G_{j+1}(k')` (or `k' < k` when strict).
/// Positions `j` are zero-based here; `m >= 1`.
fn nested_chain<T: ChainValue>(
    m: usize,
    n: usize,
    strict: bool,
    mut factor: impl FnMut(usize, usize) -> T,
) -> Vec<T> {
    let mut g: Vec<T> = (1..=n).map(|k| factor(m - 1, k)).collect();
    for j in (0..m - 1).rev() {
        let mut prefix = T::zero();
        let mut next = Vec::with_capacity(n);
        for k in 1..=n {
            if !strict {
                prefix = prefix.add(&g[k - 1]);
            }
            next.push(factor(j, k).mul(&prefix));
            if strict {
                prefix = prefix.add(&g[k - 1]);
            }
        }
        g = next;
    }
    g
}

/// `q^e / [k]^s` as a canonical rational function.
fn power_over_qint(e: i64, k: usize, s: u32) -> QRatFun {
    let qint = q_integer(k).pow(s);
    if e >= 0 {
        QRatFun::from_coprime(QPoly::q_pow(e as usize), qint)
    } else {
        QRatFun::from_coprime(QPoly::one(), qint.shift(e.unsigned_abs() as usize))
    }
}

fn symbolic_factor(kind: SumKind, s: u32, k: usize) -> QRatFun {
    let e = if kind.z_factor() {
        k as i64
    } else {
        (i64::from(s) - 1) * k as i64
    };
    power_over_qint(e, k, s)
}

/// Outer sign and q-power of the A-kinds at `k_1 = k`, without the binomial.
fn a_outer_sign(kind: SumKind, k: usize) -> i64 {
    let odd = k % 2 == 1;
    match (kind, odd) {
        (SumKind::AWeak, true) | (SumKind::AStrict, false) => 1,
        _ => -1,
    }
}

fn a_outer_poly(kind: SumKind, n: usize, k: usize, table: &mut QBinomialTable) -> QPoly {
    let sign = BigRational::from_integer(a_outer_sign(kind, k).into());
    table
        .get(n as i64, k as i64)
        .shift(k * (k + 1) / 2)
        .scale(&sign)
}

/// Value of an empty argument list or of `n = 0`, if the conventions decide it.
fn convention(kind: SumKind, m: usize, n: usize) -> Option<QRatFun> {
    if m == 0 {
        return Some(if kind.is_strict() || n > 0 {
            QRatFun::one()
        } else {
            QRatFun::zero()
        });
    }
    if n == 0 {
        return Some(QRatFun::zero());
    }
    None
}

/// The sum of the given kind at `n`, as a canonical rational function of `q`.
pub fn eval_sum(kind: SumKind, s: &Composition, n: usize) -> QRatFun {
    if let Some(v) = convention(kind, s.len(), n) {
        return v;
    }
    let entries = s.entries();
    let g = nested_chain(entries.len(), n, kind.is_strict(), |j, k| {
        symbolic_factor(kind, entries[j], k)
    });
    if kind.is_a() {
        let mut table = QBinomialTable::new();
        g.iter()
            .enumerate()
            .map(|(i, gk)| gk.mul_poly(&a_outer_poly(kind, n, i + 1, &mut table)))
            .sum()
    } else {
        g.into_iter().sum()
    }
}

/// The sum at every `n = 0..=n_max` (index `n`), sharing the inner chain.
pub fn eval_sum_upto(kind: SumKind, s: &Composition, n_max: usize) -> Vec<QRatFun> {
    if s.is_empty() {
        return (0..=n_max)
            .map(|n| convention(kind, 0, n).unwrap())
            .collect();
    }
    let entries = s.entries();
    let g = nested_chain(entries.len(), n_max, kind.is_strict(), |j, k| {
        symbolic_factor(kind, entries[j], k)
    });
    let mut out = vec![QRatFun::zero()];
    if kind.is_a() {
        let mut table = QBinomialTable::new();
        for n in 1..=n_max {
            out.push(
                g[..n]
                    .iter()
                    .enumerate()
                    .map(|(i, gk)| gk.mul_poly(&a_outer_poly(kind, n, i + 1, &mut table)))
                    .sum(),
            );
        }
    } else {
        let mut acc = QRatFun::zero();
        for gk in &g {
            acc = &acc + gk;
            out.push(acc.clone());
        }
    }
    out
}

/// Literal enumeration of every index tuple; an oracle for [`eval_sum`].
///
/// Each term is built from scratch with the product formula for the
/// Gaussian binomial; nothing is shared between tuples.
pub fn eval_sum_brute(kind: SumKind, s: &Composition, n: usize) -> Result<QRatFun, SumError> {
    let m = s.len();
    let tuples = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if tuples > BRUTE_FORCE_LIMIT {
        return Err(SumError::OracleTooLarge(tuples));
    }
    if m == 0 {
        return Ok(convention(kind, 0, n).unwrap());
    }
    let mut total = QRatFun::zero();
    let mut idx = vec![1usize; m];
    if n == 0 {
        return Ok(total);
    }
    loop {
        let ordered = idx.windows(2).all(|w| {
            if kind.is_strict() {
                w[0] > w[1]
            } else {
                w[0] >= w[1]
            }
        });
        if ordered {
            total = &total + &brute_term(kind, s.entries(), &idx, n)?;
        }
        // odometer over {1..n}^m
        let mut pos = m;
        loop {
            if pos == 0 {
                return Ok(total);
            }
            pos -= 1;
            if idx[pos] < n {
                idx[pos] += 1;
                break;
            }
            idx[pos] = 1;
        }
    }
}

fn brute_term(kind: SumKind, s: &[u32], idx: &[usize], n: usize) -> Result<QRatFun, SumError> {
    let mut term = QRatFun::one();
    for (&sj, &k) in s.iter().zip(idx) {
        let exp = if kind.z_factor() {
            k as i64
        } else {
            (i64::from(sj) - 1) * k as i64
        };
        let factor =
            QRatFun::q_pow(exp).checked_div(&QRatFun::new(q_integer(k).pow(sj), QPoly::one())?)?;
        term = &term * &factor;
    }
    if kind.is_a() {
        let k = idx[0];
        let sign = a_outer_sign(kind, k);
        let outer = q_binomial(n as i64, k as i64, QBinomialMethod::Product)
            .shift(k * (k + 1) / 2)
            .scale(&BigRational::from_integer(sign.into()));
        term = &term * &QRatFun::from_poly(outer);
    }
    Ok(term)
}

/// Argument-list shapes the A-recurrences accept: all entries >= 1, or a
/// leading 0 followed by entries >= 1.
fn check_recursive_shape(s: &Composition) -> Result<(), SumError> {
    let tail_ok = s.entries().iter().skip(1).all(|&e| e >= 1);
    if tail_ok {
        Ok(())
    } else {
        Err(SumError::InvalidShape(format!(
            "{s}: only the first entry may be 0"
        )))
    }
}

/// `A_n[s]` through the two recurrences that lower the first argument:
///
/// * `A_n[s_1, ...] = sum_{r=1}^n q^r / [r] * A_r[s_1 - 1, ...]` for `s_1 >= 1`,
/// * `A_n[0, s_2, ...] = A_n[s_2 - 1, ...] / [n]`,
///
/// with `A_n[] = A_n[0] = 1`. Subproblems are memoized per call.
pub fn eval_a_recursive(s: &Composition, n: usize) -> Result<QRatFun, SumError> {
    check_recursive_shape(s)?;
    let mut memo = HashMap::new();
    Ok(a_rec(s, n, &mut memo))
}

fn a_rec(s: &Composition, n: usize, memo: &mut HashMap<(Composition, usize), QRatFun>) -> QRatFun {
    if n == 0 {
        return QRatFun::zero();
    }
    if s.is_empty() || s.entries() == [0] {
        return QRatFun::one();
    }
    let key = (s.clone(), n);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let v = match s.first() {
        Some(0) => {
            let rest = s.tail();
            let lowered = rest.with_first(rest.first().unwrap() - 1);
            let inner = a_rec(&lowered, n, memo);
            &inner * &power_over_qint(0, n, 1)
        }
        Some(s1) => {
            let lowered = s.with_first(s1 - 1);
            (1..=n)
                .map(|r| &power_over_qint(r as i64, r, 1) * &a_rec(&lowered, r, memo))
                .sum()
        }
        None => unreachable!(),
    };
    memo.insert(key, v.clone());
    v
}

/// Strict analogue of [`eval_a_recursive`]:
///
/// * `A>_n[s_1, ...] = sum_{r=1}^n q^r / [r] * A>_r[s_1 - 1, ...]` for `s_1 >= 1`,
/// * `A>_n[0, s_2, ...] = -A>_{n-1}[s_2, ...]`,
///
/// with `A>_n[] = 1` for all `n >= 0`.
pub fn eval_a_strict_recursive(s: &Composition, n: usize) -> Result<QRatFun, SumError> {
    check_recursive_shape(s)?;
    let mut memo = HashMap::new();
    Ok(a_strict_rec(s, n, &mut memo))
}

fn a_strict_rec(
    s: &Composition,
    n: usize,
    memo: &mut HashMap<(Composition, usize), QRatFun>,
) -> QRatFun {
    if s.is_empty() {
        return QRatFun::one();
    }
    if n == 0 {
        return QRatFun::zero();
    }
    let key = (s.clone(), n);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let v = match s.first() {
        Some(0) => -a_strict_rec(&s.tail(), n - 1, memo),
        Some(s1) => {
            let lowered = s.with_first(s1 - 1);
            (1..=n)
                .map(|r| &power_over_qint(r as i64, r, 1) * &a_strict_rec(&lowered, r, memo))
                .sum()
        }
        None => unreachable!(),
    };
    memo.insert(key, v.clone());
    v
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// The `q -> 1` value by direct rational arithmetic: the factors become
/// `1 / k^{s_j}` and the Gaussian binomial becomes the ordinary one.
pub fn eval_q1_direct(kind: SumKind, s: &Composition, n: usize) -> BigRational {
    if let Some(v) = convention(kind, s.len(), n) {
        return if v.is_zero() { rat(0) } else { rat(1) };
    }
    let entries = s.entries();
    let g = nested_chain(entries.len(), n, kind.is_strict(), |j, k| {
        BigRational::new(BigInt::one(), BigInt::from(k).pow(entries[j]))
    });
    if kind.is_a() {
        g.iter()
            .enumerate()
            .map(|(i, gk)| {
                let k = i + 1;
                let c = num_integer::binomial(BigInt::from(n), BigInt::from(k));
                gk * BigRational::from_integer(c * a_outer_sign(kind, k))
            })
            .fold(rat(0), |a, b| a + b)
    } else {
        g.into_iter().fold(rat(0), |a, b| a + b)
    }
}

/// The `q -> 1` specialization, computed both by evaluating the canonical
/// rational function at 1 and by [`eval_q1_direct`]. The two must agree.
pub fn eval_q1(kind: SumKind, s: &Composition, n: usize) -> Result<BigRational, SumError> {
    let symbolic = eval_sum(kind, s, n).eval_at(&rat(1))?;
    q1_agree(kind, s, n, symbolic)
}

/// Same as [`eval_q1`] for every `n = 0..=n_max`.
pub fn eval_q1_upto(
    kind: SumKind,
    s: &Composition,
    n_max: usize,
) -> Result<Vec<BigRational>, SumError> {
    eval_sum_upto(kind, s, n_max)
        .into_iter()
        .enumerate()
        .map(|(n, f)| q1_agree(kind, s, n, f.eval_at(&rat(1))?))
        .collect()
}

fn q1_agree(
    kind: SumKind,
    s: &Composition,
    n: usize,
    symbolic: BigRational,
) -> Result<BigRational, SumError> {
    let direct = eval_q1_direct(kind, s, n);
    if symbolic != direct {
        return Err(SumError::RouteDisagreement {
            kind,
            s: s.clone(),
            n,
            symbolic: symbolic.to_string(),
            direct: direct.to_string(),
        });
    }
    Ok(direct)
}

fn check_q0(q0: &BigRational) -> Result<(), SumError> {
    if q0.is_positive() && *q0 < rat(1) {
        Ok(())
    } else {
        Err(SumError::QOutOfRange)
    }
}

/// `[k]_{q0}` for `q0 != 1`.
fn qint_at(q0: &BigRational, k: usize) -> BigRational {
    (rat(1) - q0.pow(k as i32)) / (rat(1) - q0)
}

/// `(q0; q0)_k`.
fn qfact_at(q0: &BigRational, k: usize) -> BigRational {
    (1..=k).fold(rat(1), |acc, i| acc * (rat(1) - q0.pow(i as i32)))
}

/// Upper bound on `sum_{k > N} c * x^{e(k)} k^{p}` given the first omitted
/// term and a bound `ratio` on successive term ratios; `None` when the ratio
/// bound is not below 1.
fn geometric_tail(first_omitted: BigRational, ratio: BigRational) -> Option<BigRational> {
    if ratio < rat(1) {
        Some(first_omitted / (rat(1) - ratio))
    } else {
        None
    }
}

/// `(1 + 1/(N+1))^p`, the largest value of `((k+1)/k)^p` for `k > N`.
fn power_growth(big_n: usize, p: usize) -> BigRational {
    (rat(1) + BigRational::new(BigInt::one(), BigInt::from(big_n + 1))).pow(p as i32)
}

/// Tail bound for series whose `k`-th term is at most `q0^k k^{m-1}`.
fn power_tail_bound(q0: &BigRational, m: usize, big_n: usize) -> Option<BigRational> {
    let p = m - 1;
    let first = q0.pow((big_n + 1) as i32) * rat((big_n + 1) as i64).pow(p as i32);
    geometric_tail(first, q0 * power_growth(big_n, p))
}

/// Tail bound for the Z-kinds, where every factor is at most `q0^k`.
fn z_tail_bound(q0: &BigRational, m: usize, big_n: usize) -> Option<BigRational> {
    let p = m - 1;
    let by_power = power_tail_bound(q0, m, big_n);
    // Dropping the ordering of the inner indices: inner sums <= (q0/(1-q0))^{m-1}.
    let one_minus = rat(1) - q0;
    let by_product = (q0 / &one_minus).pow(p as i32) * q0.pow((big_n + 1) as i32) / one_minus;
    Some(match by_power {
        Some(b) if b < by_product => b,
        _ => by_product,
    })
}

/// Tail bound for series whose `k`-th term is at most
/// `q0^{k(k+1)/2} k^{m-1} / (q0; q0)_k`.
fn a_tail_bound(q0: &BigRational, m: usize, big_n: usize) -> Option<BigRational> {
    let p = m - 1;
    // (q0;q0)_k >= (q0;q0)_N (1 - sum_{i>N} q0^i) for every k > N.
    let rest = q0.pow((big_n + 1) as i32) / (rat(1) - q0);
    let lower = qfact_at(q0, big_n) * (rat(1) - rest);
    if !lower.is_positive() {
        return None;
    }
    let k1 = big_n + 1;
    let first = q0.pow((k1 * (k1 + 1) / 2) as i32) * rat(k1 as i64).pow(p as i32) / lower;
    let ratio = q0.pow((big_n + 2) as i32) * power_growth(big_n, p);
    geometric_tail(first, ratio)
}

/// Partial sum over `k_1 <= N` of the `n -> infinity` limit of a weak Z,
/// weak A, strict Z or strict A sum at the rational point `q0`. For the
/// A-kinds the Gaussian binomial is replaced by its limit `1/(q;q)_{k_1}`.
pub fn truncated_limit(
    kind: SumKind,
    s: &Composition,
    q0: &BigRational,
    big_n: usize,
) -> Result<TruncationResult, SumError> {
    check_q0(q0)?;
    if s.is_empty() || s.require_positive().is_err() {
        return Err(SumError::NeedPositiveArguments);
    }
    if kind == SumKind::WWeak {
        return Err(SumError::InvalidShape("no limit evaluator for Ww".into()));
    }
    let entries = s.entries();
    let m = entries.len();
    let qints: Vec<BigRational> = (0..=big_n).map(|k| qint_at(q0, k)).collect();
    let g = nested_chain(m, big_n, kind.is_strict(), |j, k| {
        let e = if kind.z_factor() {
            k as i32
        } else {
            (entries[j] as i32 - 1) * k as i32
        };
        q0.pow(e) / qints[k].pow(entries[j] as i32)
    });
    let value = if kind.is_a() {
        let mut qfact = rat(1);
        let mut acc = rat(0);
        for (i, gk) in g.iter().enumerate() {
            let k = i + 1;
            qfact *= rat(1) - q0.pow(k as i32);
            let outer = rat(a_outer_sign(kind, k)) * q0.pow((k * (k + 1) / 2) as i32) / &qfact;
            acc += outer * gk;
        }
        acc
    } else {
        g.into_iter().fold(rat(0), |a, b| a + b)
    };
    let tail_bound = if kind.is_a() {
        a_tail_bound(q0, m, big_n)
    } else {
        z_tail_bound(q0, m, big_n)
    }
    .ok_or(SumError::TailBoundUnavailable)?;
    Ok(TruncationResult {
        value,
        terms_used: big_n,
        tail_bound,
    })
}

/// Both routes to a partial sum of the multiple q-zeta value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QZetaTruncation {
    /// Partial sum of the defining series, with its tail bound.
    pub series: TruncationResult,
    /// `q0^{|s|}` times the strict Z-sum at `1/q0`, same outer range.
    pub via_strict: BigRational,
}

/// `zeta[s; q0] = sum_{k_1 > ... > k_m > 0} prod q0^{(s_j-1)k_j} / [k_j]^{s_j}`
/// truncated to `k_1 <= N`, alongside `q0^{|s|} Z>_N[s; 1/q0]`.
pub fn qzeta_truncated(
    s: &Composition,
    q0: &BigRational,
    big_n: usize,
) -> Result<QZetaTruncation, SumError> {
    check_q0(q0)?;
    if s.is_empty() || s.require_positive().is_err() {
        return Err(SumError::NeedPositiveArguments);
    }
    if s.first().unwrap() < 2 {
        return Err(SumError::Divergent);
    }
    let entries = s.entries();
    let m = entries.len();
    let series = nested_chain(m, big_n, true, |j, k| {
        q0.pow((entries[j] as i32 - 1) * k as i32) / qint_at(q0, k).pow(entries[j] as i32)
    })
    .into_iter()
    .fold(rat(0), |a, b| a + b);
    let p = q0.recip();
    let strict_at_p = nested_chain(m, big_n, true, |j, k| {
        p.pow(k as i32) / qint_at(&p, k).pow(entries[j] as i32)
    })
    .into_iter()
    .fold(rat(0), |a, b| a + b);
    let via_strict = q0.pow(s.weight() as i32) * strict_at_p;
    // Inner factors with s_j = 1 are only bounded by 1, so the product
    // bound used for the Z-kinds does not apply here.
    let tail_bound = power_tail_bound(q0, m, big_n).ok_or(SumError::TailBoundUnavailable)?;
    Ok(QZetaTruncation {
        series: TruncationResult {
            value: series,
            terms_used: big_n,
            tail_bound,
        },
        via_strict,
    })
}

/// `1 - q^k` as a rational function, for callers building literal formulas.
pub fn one_minus_q_pow_ratfun(k: usize) -> QRatFun {
    QRatFun::from_poly(one_minus_q_pow(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{compositions_up_to, Composition};

    fn c(v: &[u32]) -> Composition {
        Composition::from(v)
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn conventions() {
        assert_eq!(eval_sum(SumKind::ZWeak, &c(&[]), 5), QRatFun::one());
        assert_eq!(eval_sum(SumKind::ZWeak, &c(&[]), 0), QRatFun::zero());
        assert_eq!(eval_sum(SumKind::ZStrict, &c(&[]), 0), QRatFun::one());
        assert_eq!(eval_sum(SumKind::AStrict, &c(&[]), 0), QRatFun::one());
        assert_eq!(eval_sum(SumKind::AWeak, &c(&[2]), 0), QRatFun::zero());
    }

    #[test]
    fn a_of_zero_is_one() {
        for n in 1..=8 {
            assert_eq!(eval_sum(SumKind::AWeak, &c(&[0]), n), QRatFun::one());
        }
    }

    #[test]
    fn z_of_one_at_two() {
        // q + q^2/(1+q) = (q + 2q^2)/(1+q)
        let expected = QRatFun::new(
            QPoly::from_int_coeffs(&[0, 1, 2]),
            QPoly::from_int_coeffs(&[1, 1]),
        )
        .unwrap();
        assert_eq!(eval_sum(SumKind::ZWeak, &c(&[1]), 2), expected);
    }

    #[test]
    fn single_term_at_one() {
        for s in 0..5 {
            assert_eq!(eval_sum(SumKind::ZWeak, &c(&[s]), 1), QRatFun::q_pow(1));
        }
    }

    #[test]
    fn upto_matches_pointwise() {
        for kind in SumKind::ALL {
            let s = c(&[2, 1]);
            let all = eval_sum_upto(kind, &s, 5);
            for (n, v) in all.iter().enumerate() {
                assert_eq!(v, &eval_sum(kind, &s, n), "{kind} n={n}");
            }
        }
    }

    #[test]
    fn brute_force_small_cases() {
        assert_eq!(
            eval_sum_brute(SumKind::ZWeak, &c(&[2, 2]), 3).unwrap(),
            eval_sum(SumKind::ZWeak, &c(&[2, 2]), 3)
        );
        assert!(eval_sum_brute(SumKind::AStrict, &c(&[1, 1]), 1)
            .unwrap()
            .is_zero());
        for n in 0..6 {
            let direct: QRatFun = (1..=n).map(|k| power_over_qint(0, k, 1)).sum();
            assert_eq!(eval_sum_brute(SumKind::WWeak, &c(&[1]), n).unwrap(), direct);
        }
        assert_eq!(
            eval_sum_brute(SumKind::ZWeak, &c(&[1; 7]), 8),
            Err(SumError::OracleTooLarge(8u128.pow(7)))
        );
    }

    #[test]
    fn recursive_small_cases() {
        for m in 1..=4 {
            for n in 1..=5 {
                assert_eq!(
                    eval_a_recursive(&c(&[m]), n).unwrap(),
                    eval_sum(SumKind::AWeak, &c(&[m]), n)
                );
            }
        }
        let unrolled: QRatFun = (1..=4).map(|r| power_over_qint(r as i64, r, 1)).sum();
        assert_eq!(eval_a_recursive(&c(&[1]), 4).unwrap(), unrolled);
        assert_eq!(
            eval_a_recursive(&c(&[3, 1, 2]), 4).unwrap(),
            eval_sum(SumKind::AWeak, &c(&[3, 1, 2]), 4)
        );
        assert!(matches!(
            eval_a_recursive(&c(&[1, 0]), 3),
            Err(SumError::InvalidShape(_))
        ));
    }

    #[test]
    fn strict_recursive_small_cases() {
        assert_eq!(eval_a_strict_recursive(&c(&[]), 0).unwrap(), QRatFun::one());
        for n in 0..=8 {
            assert_eq!(
                eval_a_strict_recursive(&c(&[1]), n).unwrap(),
                eval_sum(SumKind::AStrict, &c(&[1]), n)
            );
        }
        assert_eq!(
            eval_a_strict_recursive(&c(&[1, 1]), 2).unwrap(),
            eval_sum(SumKind::AStrict, &c(&[1, 1]), 2)
        );
        for n in 1..=5 {
            assert_eq!(
                eval_a_strict_recursive(&c(&[0]), n).unwrap(),
                QRatFun::from_int(-1)
            );
        }
    }

    #[test]
    fn q1_harmonic() {
        assert_eq!(eval_q1(SumKind::ZWeak, &c(&[1]), 3).unwrap(), r(11, 6));
        assert_eq!(eval_q1(SumKind::ZWeak, &c(&[]), 4).unwrap(), r(1, 1));
        for m in 0..=4u32 {
            for n in 1..=5 {
                assert_eq!(
                    eval_q1(SumKind::ZWeak, &Composition::repeat(1, m as usize), n).unwrap(),
                    eval_q1(SumKind::AWeak, &c(&[m]), n).unwrap()
                );
            }
        }
    }

    #[test]
    fn denominators_nonzero_at_one() {
        for s in compositions_up_to(4) {
            for kind in SumKind::ALL {
                let f = eval_sum(kind, &s, 4);
                assert!(!f.den().eval(&r(1, 1)).is_zero(), "{kind} {s}");
            }
        }
    }

    #[test]
    fn truncated_single_term() {
        let t = truncated_limit(SumKind::ZWeak, &c(&[2]), &r(1, 2), 1).unwrap();
        assert_eq!(t.value, r(1, 2));
        assert_eq!(t.terms_used, 1);
        assert!(t.tail_bound.is_positive());
    }

    #[test]
    fn truncated_rejects_bad_q() {
        for q in [r(0, 1), r(1, 1), r(3, 2), r(-1, 2)] {
            assert_eq!(
                truncated_limit(SumKind::ZWeak, &c(&[1]), &q, 5),
                Err(SumError::QOutOfRange)
            );
        }
    }

    #[test]
    fn truncated_value_is_finite_sum_limit_for_z() {
        // For Z the truncation at N is exactly Z_N evaluated at q0.
        let q0 = r(1, 3);
        for s in [c(&[1]), c(&[2, 1]), c(&[1, 1, 2])] {
            for kind in [SumKind::ZWeak, SumKind::ZStrict] {
                let t = truncated_limit(kind, &s, &q0, 6).unwrap();
                assert_eq!(t.value, eval_sum(kind, &s, 6).eval_at(&q0).unwrap());
            }
        }
    }

    #[test]
    fn truncated_tail_bound_dominates_true_tail() {
        let q0 = r(1, 2);
        for kind in [
            SumKind::ZWeak,
            SumKind::AWeak,
            SumKind::ZStrict,
            SumKind::AStrict,
        ] {
            for s in [c(&[1]), c(&[2]), c(&[1, 1]), c(&[2, 1, 1])] {
                let far = truncated_limit(kind, &s, &q0, 60).unwrap();
                for big_n in [2usize, 5, 10] {
                    let t = truncated_limit(kind, &s, &q0, big_n).unwrap();
                    let gap = (&far.value - &t.value).abs();
                    assert!(
                        gap <= &t.tail_bound + &far.tail_bound,
                        "{kind} {s} N={big_n}"
                    );
                }
            }
        }
    }

    #[test]
    fn qzeta_first_term_and_divergence() {
        let z = qzeta_truncated(&c(&[2]), &r(1, 2), 1).unwrap();
        assert_eq!(z.series.value, r(1, 2));
        assert_eq!(z.via_strict, r(1, 2));
        assert_eq!(
            qzeta_truncated(&c(&[1, 2]), &r(1, 2), 3),
            Err(SumError::Divergent)
        );
    }

    #[test]
    fn qzeta_tail_bound_dominates_true_tail() {
        let q0 = r(1, 2);
        for s in [c(&[2]), c(&[2, 1]), c(&[3, 1, 1]), c(&[2, 2])] {
            let far = qzeta_truncated(&s, &q0, 120).unwrap().series;
            for big_n in [3usize, 10, 40] {
                let t = qzeta_truncated(&s, &q0, big_n).unwrap().series;
                let gap = (&far.value - &t.value).abs();
                assert!(gap <= &t.tail_bound + &far.tail_bound, "{s} N={big_n}");
            }
        }
    }

    #[test]
    fn qzeta_routes_agree() {
        for n in 1..=20 {
            let z = qzeta_truncated(&c(&[2, 1]), &r(1, 3), n).unwrap();
            assert_eq!(z.series.value, z.via_strict);
        }
    }
}
