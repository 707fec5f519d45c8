//! The two-parameter-family generalization of the q-analog of the binomial
//! harmonic identity, checked at exact rational points.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::identities::RatDisplay;
use super::sample::{random_rational, random_unit_point, seeded_rng};
use super::{aggregate, rat_str, record, IdentityId, Method, Params, Report, VerifyError};
use crate::qpoly::{q_binomial, QBinomialMethod};

/// Number of random points when none is specified.
pub const DEFAULT_SAMPLES: usize = 25;

/// A point `(a, b, c, z, q)` together with the integers `n, m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FulasPoint {
    pub n: usize,
    pub m: usize,
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub z: BigRational,
    pub q: BigRational,
}

impl FulasPoint {
    fn params(&self) -> std::collections::BTreeMap<String, String> {
        record([
            ("n", self.n.to_string()),
            ("m", self.m.to_string()),
            ("a", rat_str(&self.a)),
            ("b", rat_str(&self.b)),
            ("c", rat_str(&self.c)),
            ("z", rat_str(&self.z)),
            ("q", rat_str(&self.q)),
        ])
    }

    fn is_specialization(&self) -> bool {
        let one = BigRational::one();
        self.c == one && self.z == one && self.a.is_zero() && self.b == -one
    }
}

/// Errors naming the first factor that vanishes at the point.
fn check_poles(p: &FulasPoint) -> Result<(), VerifyError> {
    let one = BigRational::one();
    if p.n == 0 || p.m == 0 {
        return Err(VerifyError::BadParams {
            id: IdentityId::Fulas,
            msg: "n and m must be positive".into(),
        });
    }
    if p.q.is_zero() {
        return Err(VerifyError::PointPole("q".into()));
    }
    for i in 1..=p.n {
        if (&one - p.q.pow(i as i32)).is_zero() {
            return Err(VerifyError::PointPole(format!(
                "(1-q)_q^n (factor 1-q^{i})"
            )));
        }
    }
    if (&p.a * &p.z - &p.b * &p.c).is_zero() {
        return Err(VerifyError::PointPole("az-bc".into()));
    }
    for k in 1..=p.n {
        if (&p.c - &p.z * p.q.pow(k as i32)).is_zero() {
            return Err(VerifyError::PointPole(format!("c-zq^{k}")));
        }
    }
    Ok(())
}

/// Left side (the nested sum) and right side (the binomial sum) at the point.
pub fn fulas_sides(p: &FulasPoint) -> Result<(BigRational, BigRational), VerifyError> {
    check_poles(p)?;
    let one = BigRational::one();
    let (n, m, q) = (p.n, p.m, &p.q);
    let ratio = |k: usize| {
        let qk = q.pow(k as i32);
        (&p.a - &p.b * &qk) / (&p.c - &p.z * &qk)
    };
    // row[k] = sum over k >= k_1 >= ... >= k_j >= 1, one level at a time.
    let mut row = vec![one.clone(); n + 1];
    for _ in 0..m {
        let mut next = vec![BigRational::zero(); n + 1];
        for k in 1..=n {
            next[k] = &next[k - 1] + ratio(k) * &row[k];
        }
        row = next;
    }
    let lhs = row[n].clone();

    let shifted = (1..=n).fold(one.clone(), |acc, i| acc * (&p.c - &p.z * q.pow(i as i32)));
    let qfact = (1..=n).fold(one.clone(), |acc, i| acc * (&one - q.pow(i as i32)));
    let azbc = (&p.a * &p.z - &p.b * &p.c).pow((n - 1) as i32);
    let prefactor = shifted / (qfact * azbc);
    let mut sum = BigRational::zero();
    for k in 1..=n {
        let qk = q.pow(k as i32);
        let binom = q_binomial(n as i64, k as i64, QBinomialMethod::Product).eval(q);
        let e = (k * (k + 1) / 2) as i32 - (n * k) as i32;
        let sign = if k % 2 == 1 {
            one.clone()
        } else {
            -one.clone()
        };
        let term =
            binom * sign * q.pow(e) * (&one - &qk) * (&p.a - &p.b * &qk).pow((m + n - 1) as i32)
                / (&p.c - &p.z * &qk).pow((m + 1) as i32);
        sum += term;
    }
    Ok((lhs, prefactor * sum))
}

/// Both sides of the `m`-fold identity for `q^k/(1-q^k)` at the point `q`:
/// the alternating binomial sum and the nested sum.
fn qkarl_sides_at(n: usize, m: usize, q: &BigRational) -> (BigRational, BigRational) {
    let one = BigRational::one();
    let mut lhs = BigRational::zero();
    for k in 1..=n {
        let binom = q_binomial(n as i64, k as i64, QBinomialMethod::PascalSecond).eval(q);
        let e = (k * (k + 1) / 2 + (m - 1) * k) as i32;
        let t = binom * q.pow(e) / (&one - q.pow(k as i32)).pow(m as i32);
        if k % 2 == 1 {
            lhs += t;
        } else {
            lhs -= t;
        }
    }
    let mut row = vec![one.clone(); n + 1];
    for _ in 0..m {
        let mut next = vec![BigRational::zero(); n + 1];
        for k in 1..=n {
            let qk = q.pow(k as i32);
            next[k] = &next[k - 1] + &qk / (&one - &qk) * &row[k];
        }
        row = next;
    }
    (lhs, row[n].clone())
}

/// Exact comparison at one point. At `c = z = 1, a = 0, b = -1` both sides
/// are also compared with the two sides of the `q^k/(1-q^k)` identity.
pub fn check_fulas(p: &FulasPoint) -> Result<Report, VerifyError> {
    let (lhs, rhs) = fulas_sides(p)?;
    let mut r = Report::new(IdentityId::Fulas, p.params(), Method::Sampled);
    r.expect_eq(
        "nested sum = binomial sum",
        &RatDisplay(lhs.clone()),
        &RatDisplay(rhs.clone()),
    );
    if p.is_specialization() {
        let (binomial, nested) = qkarl_sides_at(p.n, p.m, &p.q);
        r.expect_eq(
            "nested sum = specialized nested sum",
            &RatDisplay(lhs),
            &RatDisplay(nested),
        );
        r.expect_eq(
            "binomial sum = specialized binomial sum",
            &RatDisplay(rhs),
            &RatDisplay(binomial),
        );
    }
    Ok(r)
}

/// [`check_fulas`] at `c = z = 1, a = 0, b = -1`.
pub fn check_fulas_specialization(
    n: usize,
    m: usize,
    q: BigRational,
) -> Result<Report, VerifyError> {
    let one = BigRational::one();
    check_fulas(&FulasPoint {
        n,
        m,
        a: BigRational::zero(),
        b: -one.clone(),
        c: one.clone(),
        z: one,
        q,
    })
}

/// `samples` random valid points with `n <= max_n`, `m <= max_m`; points
/// hitting a pole are redrawn.
pub fn fulas_campaign(
    seed: u64,
    samples: usize,
    max_n: usize,
    max_m: usize,
) -> Result<Vec<Report>, VerifyError> {
    let mut rng = seeded_rng(seed);
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        let p = FulasPoint {
            n: rng.gen_range(1..=max_n.max(1)),
            m: rng.gen_range(1..=max_m.max(1)),
            a: random_rational(&mut rng),
            b: random_rational(&mut rng),
            c: random_rational(&mut rng),
            z: random_rational(&mut rng),
            q: random_unit_point(&mut rng),
        };
        match check_fulas(&p) {
            Ok(mut r) => {
                r.seed = Some(seed);
                out.push(r);
            }
            Err(VerifyError::PointPole(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

pub(super) fn check_fulas_params(params: &Params) -> Result<Report, VerifyError> {
    let point = [&params.fa, &params.fb, &params.fc, &params.fz, &params.q];
    let any_point = point.iter().any(|v| v.is_some());
    if any_point {
        let missing = || VerifyError::MissingParams {
            id: IdentityId::Fulas,
            required: vec!["n", "m", "a", "b", "c", "z", "q"],
        };
        if point.iter().any(|v| v.is_none()) {
            return Err(missing());
        }
        return check_fulas(&FulasPoint {
            n: params.n.ok_or_else(missing)?,
            m: params.m.ok_or_else(missing)?,
            a: params.fa.clone().unwrap(),
            b: params.fb.clone().unwrap(),
            c: params.fc.clone().unwrap(),
            z: params.fz.clone().unwrap(),
            q: params.q.clone().unwrap(),
        });
    }
    let seed = params.seed.unwrap_or(super::DEFAULT_SEED);
    let samples = params.samples.unwrap_or(DEFAULT_SAMPLES);
    let max_n = params.n.unwrap_or(5);
    let max_m = params.m.unwrap_or(5);
    let reports = fulas_campaign(seed, samples, max_n, max_m)?;
    let mut r = Report::new(
        IdentityId::Fulas,
        record([
            ("samples", samples.to_string()),
            ("max_n", max_n.to_string()),
            ("max_m", max_m.to_string()),
        ]),
        Method::Sampled,
    );
    r.seed = Some(seed);
    r.verdict = aggregate(&reports);
    r.witness = reports.iter().find_map(|x| x.witness.clone());
    Ok(r)
}
