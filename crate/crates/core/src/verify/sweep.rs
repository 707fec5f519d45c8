//! Parameter-grid sweeps, optionally spread over a thread pool.

use num_rational::BigRational;
use rayon::prelude::*;

use super::identities::check_theorem1_upto;
use super::{check_identity, IdentityId, Params, Report, VerifyError};
use crate::compositions::{compositions_up_to, Composition};

/// Ranges of a sweep. Unused fields are ignored by identities that do not
/// take the corresponding parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    /// Compositions with positive entries of weight `1..=max_weight`.
    pub max_weight: u32,
    /// `n` from its smallest meaningful value up to `max_n`.
    pub max_n: usize,
    /// `m` (also `a`, `b`) up to `max_m`.
    pub max_m: usize,
    pub q: Option<BigRational>,
    pub big_n: Option<usize>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_weight: 4,
            max_n: 5,
            max_m: 3,
            q: None,
            big_n: None,
            seed: None,
            samples: None,
            threads: None,
        }
    }
}

enum Job {
    Single(Box<Params>),
    Theorem1(Composition, usize),
}

impl Job {
    fn single(p: Params) -> Self {
        Job::Single(Box::new(p))
    }
}

fn base(b: &SweepBounds) -> Params {
    Params {
        q: b.q.clone(),
        big_n: b.big_n,
        seed: b.seed,
        samples: b.samples,
        ..Params::default()
    }
}

fn grid(id: IdentityId, b: &SweepBounds) -> Vec<Job> {
    use IdentityId::*;
    let comps = || compositions_up_to(b.max_weight);
    let m_n = |m0: usize, n0: usize| -> Vec<Job> {
        (m0..=b.max_m)
            .flat_map(|m| (n0..=b.max_n).map(move |n| (m, n)))
            .map(|(m, n)| Job::single(base(b).m(m).n(n)))
            .collect()
    };
    let s_n = || -> Vec<Job> {
        comps()
            .into_iter()
            .flat_map(|s| (1..=b.max_n).map(move |n| (s.clone(), n)))
            .map(|(s, n)| Job::single(base(b).s(s).n(n)))
            .collect()
    };
    match id {
        Theorem1 => {
            if b.max_n == 0 {
                return vec![];
            }
            comps()
                .into_iter()
                .map(|s| Job::Theorem1(s, b.max_n))
                .collect()
        }
        CorLimitQ1 | WeakStrictExpansion | ProdingerPair => s_n(),
        CorLimitNinf => comps()
            .into_iter()
            .map(|s| Job::single(base(b).s(s)))
            .collect(),
        QzetaRelation => comps()
            .into_iter()
            .filter(|s| s.first().is_some_and(|f| f >= 2))
            .map(|s| Job::single(base(b).s(s)))
            .collect(),
        DualityAb => (1..=b.max_m as u32)
            .flat_map(|a| (1..=b.max_m as u32).map(move |bb| (a, bb)))
            .flat_map(|(a, bb)| (1..=b.max_n).map(move |n| (a, bb, n)))
            .map(|(a, bb, n)| Job::single(base(b).ab(a, bb).n(n)))
            .collect(),
        Thm2StrictOnes | CorStrictQ1 => m_n(0, 0),
        QkarlDual => m_n(1, 0),
        Qkarl | Karl | An01m => m_n(0, 1),
        George | QbinomThm => (0..=b.max_n).map(|n| Job::single(base(b).n(n))).collect(),
        LemmaQsum => (1..=b.max_n)
            .flat_map(|n| (1..=n).map(move |k| (k, n)))
            .map(|(k, n)| Job::single(base(b).k(k).n(n)))
            .collect(),
        CorStrictNinf => (1..=b.max_m).map(|m| Job::single(base(b).m(m))).collect(),
        Fulas => vec![Job::single(Params {
            n: Some(b.max_n),
            m: Some(b.max_m),
            ..base(b)
        })],
        UchimuraLimit => vec![Job::single(base(b))],
    }
}

fn run(id: IdentityId, job: &Job) -> Result<Vec<Report>, VerifyError> {
    match job {
        Job::Single(p) => check_identity(id, p).map(|r| vec![r]),
        Job::Theorem1(s, n_max) => check_theorem1_upto(s, *n_max),
    }
}

/// Runs the checker over the whole grid. Reports come back in grid order
/// whatever the thread count.
pub fn sweep(id: IdentityId, bounds: &SweepBounds) -> Result<Vec<Report>, VerifyError> {
    let jobs = grid(id, bounds);
    if jobs.is_empty() {
        return Err(VerifyError::EmptyGrid);
    }
    let go = || -> Result<Vec<Report>, VerifyError> {
        let nested: Vec<Vec<Report>> = jobs
            .par_iter()
            .map(|j| run(id, j))
            .collect::<Result<_, _>>()?;
        Ok(nested.into_iter().flatten().collect())
    };
    match bounds.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| VerifyError::ThreadPool(e.to_string()))?
            .install(go),
        None => go(),
    }
}
