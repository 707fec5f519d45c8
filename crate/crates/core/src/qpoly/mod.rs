//! Exact arithmetic in `q`: dense rational polynomials, canonical rational
//! functions, and the q-combinatorial building blocks of every sum.

mod gcd;
mod poly;
mod qcomb;
mod ratfun;

use num_rational::BigRational;
use thiserror::Error;

pub use gcd::poly_gcd;
pub use poly::{fmt_rational, QPoly};
pub use qcomb::{
    one_minus_q_pow, q_binomial, q_factorial, q_integer, q_shifted_power, QBinomialMethod,
    QBinomialTable,
};
pub use ratfun::QRatFun;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QPolyError {
    #[error("gcd undefined for two zero polynomials")]
    GcdUndefined,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("pole at q={}", fmt_rational(.0))]
    Pole(BigRational),
}

/// Parses `p`, `-p` or `p/r` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: num_bigint::BigInt = n.parse().ok()?;
    let d: num_bigint::BigInt = d.parse().ok()?;
    if num_traits::Zero::is_zero(&d) {
        return None;
    }
    Some(BigRational::new(n, d))
}
