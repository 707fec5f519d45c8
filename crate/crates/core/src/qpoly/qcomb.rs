//! q-integers, Gaussian binomials and q-shifted powers.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::QPoly;

/// `[n]_q = 1 + q + ... + q^(n-1)`; zero for `n = 0`.
pub fn q_integer(n: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigRational::one(); n])
}

/// `1 - q^k`.
pub fn one_minus_q_pow(k: usize) -> QPoly {
    &QPoly::one() - &QPoly::q_pow(k)
}

/// How a Gaussian binomial is computed. All methods give the same polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QBinomialMethod {
    /// `prod_{j=1}^k (1 - q^(n-k+j)) / (1 - q^j)`, divided out exactly.
    Product,
    /// `[r,k] = [r-1,k] + q^(r-k) [r-1,k-1]`.
    PascalFirst,
    /// `[r,k] = q^k [r-1,k] + [r-1,k-1]`.
    PascalSecond,
}

/// Gaussian binomial coefficient; zero unless `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64, method: QBinomialMethod) -> QPoly {
    if k < 0 || n < 0 || k > n {
        return QPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    match method {
        QBinomialMethod::Product => qbinom_product(n, k),
        QBinomialMethod::PascalFirst | QBinomialMethod::PascalSecond => {
            let mut memo = HashMap::new();
            qbinom_pascal(n, k, method, &mut memo)
        }
    }
}

fn qbinom_product(n: usize, k: usize) -> QPoly {
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for j in 1..=k {
        num = &num * &one_minus_q_pow(n - k + j);
        den = &den * &one_minus_q_pow(j);
    }
    let (quot, rem) = num.div_rem(&den).expect("nonzero denominator");
    debug_assert!(rem.is_zero());
    quot
}

fn qbinom_pascal(
    r: usize,
    k: usize,
    method: QBinomialMethod,
    memo: &mut HashMap<(usize, usize), QPoly>,
) -> QPoly {
    if k > r {
        return QPoly::zero();
    }
    if k == 0 || k == r {
        return QPoly::one();
    }
    if let Some(v) = memo.get(&(r, k)) {
        return v.clone();
    }
    let a = qbinom_pascal(r - 1, k, method, memo);
    let b = qbinom_pascal(r - 1, k - 1, method, memo);
    let v = match method {
        QBinomialMethod::PascalFirst => &a + &b.shift(r - k),
        _ => &a.shift(k) + &b,
    };
    memo.insert((r, k), v.clone());
    v
}

/// A row-cached table of Gaussian binomials for repeated lookups.
#[derive(Default, Debug, Clone)]
pub struct QBinomialTable {
    rows: Vec<Vec<QPoly>>,
}

impl QBinomialTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `[n, k]` with the vanishing convention.
    pub fn get(&mut self, n: i64, k: i64) -> QPoly {
        if k < 0 || n < 0 || k > n {
            return QPoly::zero();
        }
        let (n, k) = (n as usize, k as usize);
        while self.rows.len() <= n {
            let r = self.rows.len();
            let row = if r == 0 {
                vec![QPoly::one()]
            } else {
                let prev = &self.rows[r - 1];
                (0..=r)
                    .map(|j| {
                        if j == 0 || j == r {
                            QPoly::one()
                        } else {
                            &prev[j].shift(j) + &prev[j - 1]
                        }
                    })
                    .collect()
            };
            self.rows.push(row);
        }
        self.rows[n][k].clone()
    }
}

/// `(x + y)_q^n = prod_{k=0}^{n-1} (x + y q^k)`.
pub fn q_shifted_power(x: &BigRational, y: &BigRational, n: usize) -> QPoly {
    (0..n).fold(QPoly::one(), |acc, k| {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[0] += x;
        coeffs[k] += y;
        &acc * &QPoly::from_coeffs(coeffs)
    })
}

/// `(q; q)_k = (1 - q)_q^k = prod_{i=1}^k (1 - q^i)`.
pub fn q_factorial(k: usize) -> QPoly {
    (1..=k).fold(QPoly::one(), |acc, i| &acc * &one_minus_q_pow(i))
}
