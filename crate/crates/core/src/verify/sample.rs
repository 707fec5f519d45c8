//! Seeded sampling of rational points and rational functions.

use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::qpoly::{QPoly, QRatFun};

/// Largest numerator and denominator of a sampled rational.
pub const SAMPLE_BOUND: i64 = 99;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/r` with `|p| <= 99` and `1 <= r <= 99`.
pub fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    let p = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
    let r = rng.gen_range(1..=SAMPLE_BOUND);
    BigRational::new(p.into(), r.into())
}

/// A point strictly between 0 and 1 with denominator at most 99.
pub fn random_unit_point<R: Rng>(rng: &mut R) -> BigRational {
    let r = rng.gen_range(2..=SAMPLE_BOUND);
    let p = rng.gen_range(1..r);
    BigRational::new(p.into(), r.into())
}

fn random_poly<R: Rng>(rng: &mut R, max_degree: usize) -> QPoly {
    let d = rng.gen_range(0..=max_degree);
    QPoly::from_coeffs((0..=d).map(|_| random_rational(rng)).collect())
}

/// Numerator of degree at most 3 over a nonzero denominator of degree at most 2.
pub fn random_ratfun<R: Rng>(rng: &mut R) -> QRatFun {
    let num = random_poly(rng, 3);
    loop {
        let den = random_poly(rng, 2);
        if let Ok(f) = QRatFun::new(num.clone(), den) {
            return f;
        }
    }
}
