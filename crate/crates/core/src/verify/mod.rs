//! Executable identity checks with structured, serializable reports.
//!
//! Finite-`n` identities in `q` are compared as canonical rational
//! functions, so `holds` means exact equality. Identities in several free
//! parameters are checked at exact rational points. Limits `n -> infinity`
//! are compared as truncations whose residual must fall inside the computed
//! tail bounds; otherwise the verdict is `inconclusive`, never `holds`.

mod fulas;
mod identities;
mod limits;
mod prodinger;
mod sample;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compositions::{Composition, CompositionError};
use crate::qpoly::{fmt_rational, parse_rational, QPolyError};
use crate::sums::SumError;

pub use fulas::{check_fulas, check_fulas_specialization, fulas_campaign, fulas_sides, FulasPoint};
pub use identities::{
    check_pair, check_theorem1, check_theorem1_upto, check_weak_strict_expansion_corrected,
    check_weak_strict_expansion_q1, compare_symbolic, strict_expansion_corrected,
};
pub use limits::uchimura_sides;
pub use prodinger::{
    check_prodinger_equivalence, check_prodinger_theorem1, prodinger_campaign, prodinger_forward,
    prodinger_pro2_sides, theorem1_sequences,
};
pub use sample::{random_ratfun, random_rational, seeded_rng};
pub use sweep::{sweep, SweepBounds};

/// Seed used when the caller supplies none.
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{id} needs parameters: {}", .required.join(", "))]
    MissingParams {
        id: IdentityId,
        required: Vec<&'static str>,
    },
    #[error("invalid parameters for {id}: {msg}")]
    BadParams { id: IdentityId, msg: String },
    #[error("sequence has {got} entries, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{0} vanishes at the chosen point")]
    PointPole(String),
    #[error("empty parameter grid")]
    EmptyGrid,
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Composition(#[from] CompositionError),
    #[error(transparent)]
    Sum(#[from] SumError),
    #[error(transparent)]
    Poly(#[from] QPolyError),
}

macro_rules! identity_ids {
    ($($variant:ident => $tag:literal, $desc:literal;)*) => {
        /// The identities this crate can check.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum IdentityId {
            $(#[serde(rename = $tag)] $variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn tag(self) -> &'static str {
                match self { $(IdentityId::$variant => $tag,)* }
            }

            /// The statement being checked.
            pub fn statement(self) -> &'static str {
                match self { $(IdentityId::$variant => $desc,)* }
            }
        }
    };
}

identity_ids! {
    Theorem1 => "THEOREM1", "Z_n[s] = A_n[dual(s)] and A_n[s] = Z_n[dual(s)]";
    CorLimitQ1 => "COR_LIMIT_Q1", "Z_n(s) = A_n(dual(s)) at q = 1";
    CorLimitNinf => "COR_LIMIT_NINF", "Z[s] = A[dual(s)] as n -> infinity";
    DualityAb => "DUALITY_AB", "Z_n[{1}^(a-1), b] = A_n[a, {1}^(b-1)]";
    Qkarl => "QKARL", "sum (-1)^(k+1) q^(k(k+1)/2+(m-1)k) [n,k] / (1-q^k)^m = nested sum of q^k/(1-q^k); Z_n[{1}^m] = A_n[m]";
    QkarlDual => "QKARL_DUAL", "Z_n[m] = A_n[{1}^m]";
    George => "GEORGE", "sum (-1)^(k+1) q^(k(k+1)/2) [n,k] / (1-q^k) = sum q^k/(1-q^k)";
    Karl => "KARL", "sum (-1)^(k+1) C(n,k) / k^m = sum over n>=k_1>=...>=k_m>=1 of 1/(k_1...k_m)";
    An01m => "AN01M", "A_n[0, {1}^m] [n]^m = 1";
    LemmaQsum => "LEMMA_QSUM", "sum_{r=k}^n q^r [r-1,k-1] = q^k [n,k]";
    QbinomThm => "QBINOM_THM", "(x+y)_q^n = sum q^(m(m-1)/2) [n,m] x^(n-m) y^m";
    Thm2StrictOnes => "THM2_STRICT_ONES", "(-1)^m Z>_n[{1}^m] = A>_n[{1}^m]";
    CorStrictNinf => "COR_STRICT_NINF", "(-1)^m Z>[{1}^m] = A>[{1}^m] as n -> infinity";
    CorStrictQ1 => "COR_STRICT_Q1", "(-1)^m Z>_n({1}^m) = A>_n({1}^m) at q = 1";
    WeakStrictExpansion => "WEAK_STRICT_EXPANSION", "Z_n[s] = sum over coarsenings t of s of Z>_n[t] (as stated; true only at q = 1)";
    ProdingerPair => "PRODINGER_PAIR", "the inverse pair relations hold together for the duality sequences";
    Fulas => "FULAS", "nested sum of (a-bq^k)/(c-zq^k) equals the single binomial sum";
    UchimuraLimit => "UCHIMURA_LIMIT", "sum (-1)^(k+1) q^(k(k+1)/2) / ((q;q)_(k-1) (1-q^k)^2) = sum q^k/(1-q^k)";
    QzetaRelation => "QZETA_RELATION", "zeta[s;q] = q^|s| Z>_inf[s;1/q]";
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.tag() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Symbolic,
    Sampled,
    Truncated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Symbolic => "symbolic",
            Method::Sampled => "sampled",
            Method::Truncated => "truncated",
        })
    }
}

/// Both sides of the comparison that failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Which of the report's sub-comparisons failed.
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub id: IdentityId,
    pub params: BTreeMap<String, String>,
    pub method: Method,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail_bound: Option<String>,
}

impl Report {
    pub(crate) fn new(id: IdentityId, params: BTreeMap<String, String>, method: Method) -> Self {
        Report {
            id,
            params,
            method,
            verdict: Verdict::Holds,
            witness: None,
            seed: None,
            residual: None,
            tail_bound: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Marks the report failed unless it already failed; the first
    /// failing case is kept as the witness.
    pub(crate) fn fail(&mut self, case: &str, lhs: String, rhs: String) {
        if self.verdict != Verdict::Fails {
            self.verdict = Verdict::Fails;
            self.witness = Some(Witness {
                case: case.to_string(),
                lhs,
                rhs,
            });
        }
    }

    /// Compares two exact values and records a failure on mismatch.
    pub(crate) fn expect_eq<T: PartialEq + fmt::Display>(&mut self, case: &str, lhs: &T, rhs: &T) {
        if lhs != rhs {
            self.fail(case, lhs.to_string(), rhs.to_string());
        }
    }

    /// One line of text: tag, verdict, method and parameters.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let mut line = format!(
            "{} {} ({}) {}",
            self.id,
            self.verdict,
            self.method,
            params.join(" ")
        );
        if let Some(w) = &self.witness {
            line.push_str(&format!(" | {}: {} != {}", w.case, w.lhs, w.rhs));
        }
        if let (Some(r), Some(t)) = (&self.residual, &self.tail_bound) {
            line.push_str(&format!(
                " | residual {} tail_bound {}",
                abbreviate(r),
                abbreviate(t)
            ));
        }
        line
    }
}

/// Long exact rationals shortened for one-line text output; reports
/// themselves always carry the exact value.
fn abbreviate(text: &str) -> String {
    use num_traits::ToPrimitive;
    if text.len() <= 24 {
        return text.to_string();
    }
    match parse_rational(text).and_then(|x| x.to_f64()) {
        Some(f) if f.is_finite() => format!("~{f:.3e}"),
        _ => text.to_string(),
    }
}

/// Overall verdict of a batch: fails beats inconclusive beats holds.
pub fn aggregate(reports: &[Report]) -> Verdict {
    reports
        .iter()
        .map(|r| r.verdict)
        .max_by_key(|v| match v {
            Verdict::Holds => 0,
            Verdict::Inconclusive => 1,
            Verdict::Fails => 2,
        })
        .unwrap_or(Verdict::Holds)
}

/// Parameters of a single check. Which fields are needed depends on the
/// identity; see [`required_params`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub a: Option<u32>,
    pub b: Option<u32>,
    pub s: Option<Composition>,
    /// Evaluation point in `q`.
    pub q: Option<BigRational>,
    /// Truncation point for limits.
    pub big_n: Option<usize>,
    pub x: Option<BigRational>,
    pub y: Option<BigRational>,
    /// Free parameters of the two-parameter-family identity.
    pub fa: Option<BigRational>,
    pub fb: Option<BigRational>,
    pub fc: Option<BigRational>,
    pub fz: Option<BigRational>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn ab(mut self, a: u32, b: u32) -> Self {
        self.a = Some(a);
        self.b = Some(b);
        self
    }

    pub fn s(mut self, s: Composition) -> Self {
        self.s = Some(s);
        self
    }

    pub fn q(mut self, q: BigRational) -> Self {
        self.q = Some(q);
        self
    }

    pub fn big_n(mut self, big_n: usize) -> Self {
        self.big_n = Some(big_n);
        self
    }

    pub fn xy(mut self, x: BigRational, y: BigRational) -> Self {
        self.x = Some(x);
        self.y = Some(y);
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn samples(mut self, samples: usize) -> Self {
        self.samples = Some(samples);
        self
    }
}

/// Keys each identity needs in [`Params`]. Limits and sampled checks fall
/// back to defaults for `q`, `N`, `seed` and `samples`.
pub fn required_params(id: IdentityId) -> Vec<&'static str> {
    use IdentityId::*;
    match id {
        Theorem1 | CorLimitQ1 | WeakStrictExpansion => vec!["s", "n"],
        CorLimitNinf | QzetaRelation => vec!["s"],
        DualityAb => vec!["a", "b", "n"],
        Qkarl | QkarlDual | Karl | An01m | Thm2StrictOnes | CorStrictQ1 => vec!["m", "n"],
        George => vec!["n"],
        LemmaQsum => vec!["k", "n"],
        QbinomThm => vec!["n"],
        CorStrictNinf => vec!["m"],
        ProdingerPair | Fulas | UchimuraLimit => vec![],
    }
}

pub(crate) fn record<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub(crate) fn rat_str(x: &BigRational) -> String {
    fmt_rational(x)
}

/// Runs the check for `id` with the given parameters.
pub fn check_identity(id: IdentityId, params: &Params) -> Result<Report, VerifyError> {
    let missing = || VerifyError::MissingParams {
        id,
        required: required_params(id),
    };
    let n = || params.n.ok_or_else(missing);
    let m = || params.m.ok_or_else(missing);
    let s = || params.s.clone().ok_or_else(missing);
    use IdentityId::*;
    match id {
        Theorem1 => check_theorem1(&s()?, n()?),
        CorLimitQ1 => identities::check_cor_limit_q1(&s()?, n()?),
        CorLimitNinf => limits::check_cor_limit_ninf(
            &s()?,
            &limits::q_or_default(params),
            limits::big_n_or_default(params),
        ),
        DualityAb => {
            let (a, b) = params.a.zip(params.b).ok_or_else(missing)?;
            identities::check_duality_ab(a, b, n()?)
        }
        Qkarl => identities::check_qkarl(m()?, n()?),
        QkarlDual => identities::check_qkarl_dual(m()?, n()?),
        George => identities::check_george(n()?),
        Karl => identities::check_karl(m()?, n()?),
        An01m => identities::check_an01m(m()?, n()?),
        LemmaQsum => identities::check_lemma_qsum(params.k.ok_or_else(missing)?, n()?),
        QbinomThm => identities::check_qbinom_thm(n()?, params.x.clone().zip(params.y.clone())),
        Thm2StrictOnes => identities::check_thm2_strict_ones(m()?, n()?),
        CorStrictQ1 => identities::check_cor_strict_q1(m()?, n()?),
        CorStrictNinf => limits::check_cor_strict_ninf(
            m()?,
            &limits::q_or_default(params),
            limits::big_n_or_default(params),
        ),
        WeakStrictExpansion => identities::check_weak_strict_expansion(&s()?, n()?),
        ProdingerPair => match &params.s {
            Some(s) => check_prodinger_theorem1(s, n()?),
            None => {
                let seed = params.seed.unwrap_or(DEFAULT_SEED);
                let trials = params.samples.unwrap_or(prodinger::DEFAULT_TRIALS);
                let reports = prodinger_campaign(seed, trials)?;
                let mut r = Report::new(
                    id,
                    record([("samples", trials.to_string())]),
                    Method::Sampled,
                );
                r.seed = Some(seed);
                r.verdict = aggregate(&reports);
                r.witness = reports.iter().find_map(|x| x.witness.clone());
                Ok(r)
            }
        },
        Fulas => fulas::check_fulas_params(params),
        UchimuraLimit => limits::check_uchimura(
            &limits::q_or_default(params),
            limits::big_n_or_default(params),
        ),
        QzetaRelation => limits::check_qzeta_relation(
            &s()?,
            &limits::q_or_default(params),
            limits::big_n_or_default(params),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip_through_serde_and_fromstr() {
        for &id in IdentityId::ALL {
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.tag()));
            assert_eq!(id.tag().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!(IdentityId::ALL.len(), 19);
    }

    #[test]
    fn report_json_field_names() {
        let mut r = Report::new(
            IdentityId::George,
            record([("n", "3".into())]),
            Method::Symbolic,
        );
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["id", "method", "params", "verdict"]);
        r.fail("case", "1".into(), "2".into());
        r.seed = Some(7);
        r.residual = Some("0".into());
        r.tail_bound = Some("1/2".into());
        let v = serde_json::to_value(&r).unwrap();
        for key in ["witness", "seed", "residual", "tail_bound"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["verdict"], "fails");
        let back: Report = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn missing_params_lists_required_keys() {
        let err = check_identity(IdentityId::Theorem1, &Params::new().n(3)).unwrap_err();
        assert_eq!(err.to_string(), "THEOREM1 needs parameters: s, n");
    }

    #[test]
    fn aggregate_prefers_failures() {
        let mk = |v| {
            let mut r = Report::new(IdentityId::George, BTreeMap::new(), Method::Symbolic);
            r.verdict = v;
            r
        };
        assert_eq!(
            aggregate(&[mk(Verdict::Holds), mk(Verdict::Inconclusive)]),
            Verdict::Inconclusive
        );
        assert_eq!(
            aggregate(&[mk(Verdict::Fails), mk(Verdict::Inconclusive)]),
            Verdict::Fails
        );
        assert_eq!(aggregate(&[]), Verdict::Holds);
    }
}
